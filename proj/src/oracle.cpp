/* revemb: embedding irreversible functions into reversible ones
 * Copyright (C) 2026  revemb contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

#include <revemb/oracle.hpp>

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <revemb/dsop.hpp>

namespace revemb
{

namespace
{

void require_small( uint32_t n )
{
  if ( n > oracle_max_inputs )
  {
    throw std::invalid_argument( "oracle limited to " + std::to_string( oracle_max_inputs ) + " variables, got " + std::to_string( n ) );
  }
}

std::vector<bool> bits_of( uint64_t value, uint32_t width )
{
  std::vector<bool> bits( width );
  for ( auto i = 0u; i < width; ++i )
  {
    bits[i] = ( value >> i ) & 1u;
  }
  return bits;
}

} // namespace

output_set evaluate( pla const& p, std::vector<bool> const& x )
{
  output_set o( p.num_outputs );
  for ( auto const& e : p.entries )
  {
    if ( e.input.covers( x ) )
    {
      o |= e.outputs;
    }
  }
  return o;
}

line_report brute_mu( pla const& p )
{
  require_small( p.num_inputs );
  std::map<output_set, big_uint> counts;
  for ( uint64_t a = 0; a < ( uint64_t( 1 ) << p.num_inputs ); ++a )
  {
    ++counts[evaluate( p, bits_of( a, p.num_inputs ) )];
  }
  return make_line_report( std::move( counts ), p.num_inputs, p.num_outputs, true, line_method::brute );
}

line_report brute_mu( std::span<bdd const> functions, std::span<var_id const> inputs )
{
  if ( functions.empty() )
  {
    throw std::invalid_argument( "brute_mu needs at least one function" );
  }
  auto const n = static_cast<uint32_t>( inputs.size() );
  auto const m = static_cast<uint32_t>( functions.size() );
  require_small( n );
  auto& mgr = *functions.front().manager();

  std::map<output_set, big_uint> counts;
  std::vector<bool> assignment( mgr.num_vars() );
  for ( uint64_t a = 0; a < ( uint64_t( 1 ) << n ); ++a )
  {
    for ( auto i = 0u; i < n; ++i )
    {
      assignment[inputs[i]] = ( a >> i ) & 1u;
    }
    output_set o( m );
    for ( auto j = 0u; j < m; ++j )
    {
      if ( mgr.eval( functions[j], assignment ) )
      {
        o.insert( j );
      }
    }
    ++counts[o];
  }
  return make_line_report( std::move( counts ), n, m, true, line_method::brute );
}

brute_verify_report brute_verify( rc_bdd const& rc, std::span<bdd const> functions )
{
  require_small( rc.num_lines );
  if ( functions.size() != rc.num_outputs )
  {
    throw std::invalid_argument( "brute_verify needs one function per output" );
  }
  auto& mgr = *rc.manager;
  auto const r = rc.num_lines;

  /* bit position of every variable within its side */
  std::vector<uint32_t> bit( mgr.num_vars() );
  std::vector<bool> is_input_side( mgr.num_vars() );
  for ( auto v = 0u; v < mgr.num_vars(); ++v )
  {
    auto const [role, index] = rc.roles[v];
    switch ( role )
    {
    case line_role::constant:
      bit[v] = index;
      is_input_side[v] = true;
      break;
    case line_role::input:
      bit[v] = rc.num_constants + index;
      is_input_side[v] = true;
      break;
    case line_role::output:
      bit[v] = index;
      break;
    case line_role::garbage:
      bit[v] = rc.num_outputs + index;
      break;
    }
  }

  auto const constant_mask = ( uint64_t( 1 ) << rc.num_constants ) - 1u;
  auto const output_mask = ( uint64_t( 1 ) << rc.num_outputs ) - 1u;
  std::vector<bool> assignment( mgr.num_vars() );
  auto expected_outputs = [&]( uint64_t in ) {
    for ( auto i = 0u; i < rc.num_inputs; ++i )
    {
      assignment[rc.inputs[i]] = ( in >> ( rc.num_constants + i ) ) & 1u;
    }
    uint64_t expected = 0;
    for ( auto j = 0u; j < rc.num_outputs; ++j )
    {
      if ( mgr.eval( functions[j], assignment ) )
        expected |= uint64_t( 1 ) << j;
    }
    return expected;
  };

  std::unordered_map<uint64_t, uint64_t> image_of;
  std::unordered_set<uint64_t> images;
  uint64_t pairs = 0, plane_inputs = 0;
  bool functional = true;
  bool injective = true;
  bool contained = true;

  mgr.foreach_path( rc.chi, [&]( auto const& path ) {
    uint64_t in_fixed = 0, out_fixed = 0;
    std::vector<bool> decided( mgr.num_vars() );
    for ( auto const& [v, value] : path )
    {
      decided[v] = true;
      if ( value )
      {
        ( is_input_side[v] ? in_fixed : out_fixed ) |= uint64_t( 1 ) << bit[v];
      }
    }
    std::vector<var_id> free;
    for ( auto v = 0u; v < mgr.num_vars(); ++v )
    {
      if ( !decided[v] )
        free.push_back( v );
    }
    if ( free.size() >= 63 || pairs + ( uint64_t( 1 ) << free.size() ) > oracle_max_pairs )
    {
      throw std::invalid_argument( "relation too large for pointwise verification" );
    }
    for ( uint64_t a = 0; a < ( uint64_t( 1 ) << free.size() ); ++a )
    {
      auto in = in_fixed, out = out_fixed;
      for ( auto k = 0u; k < free.size(); ++k )
      {
        if ( ( a >> k ) & 1u )
        {
          ( is_input_side[free[k]] ? in : out ) |= uint64_t( 1 ) << bit[free[k]];
        }
      }
      ++pairs;
      auto const [it, fresh] = image_of.emplace( in, out );
      functional = functional && fresh;
      injective = images.insert( out ).second && injective;
      if ( ( in & constant_mask ) == 0u )
      {
        plane_inputs += fresh ? 1u : 0u;
        contained = contained && ( out & output_mask ) == expected_outputs( in );
      }
    }
  } );

  brute_verify_report result;
  result.num_pairs = pairs;
  result.checks.functional = functional;
  result.checks.injective = injective;
  result.checks.total = image_of.size() == ( uint64_t( 1 ) << r );
  result.checks.total_on_constant_plane = plane_inputs == ( uint64_t( 1 ) << rc.num_inputs );
  result.checks.projects = rc.partial ? contained : contained && result.checks.total_on_constant_plane;
  return result;
}

bool brute_dsop_check( pla const& p, std::optional<pla> const& reference )
{
  for ( auto i = 0u; i < p.entries.size(); ++i )
  {
    for ( auto j = i + 1; j < p.entries.size(); ++j )
    {
      if ( cube_and( p.entries[i].input, p.entries[j].input ) )
      {
        return false;
      }
    }
  }
  if ( !reference )
  {
    return true;
  }
  if ( reference->num_inputs != p.num_inputs || reference->num_outputs != p.num_outputs )
  {
    return false;
  }
  require_small( p.num_inputs );
  for ( uint64_t a = 0; a < ( uint64_t( 1 ) << p.num_inputs ); ++a )
  {
    auto const x = bits_of( a, p.num_inputs );
    if ( evaluate( p, x ) != evaluate( *reference, x ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace revemb
