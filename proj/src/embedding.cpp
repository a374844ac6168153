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

#include <revemb/embedding.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <revemb/line_count.hpp>

namespace revemb
{

std::vector<var_id> rc_bdd::input_side() const
{
  auto side = constants;
  side.insert( side.end(), inputs.begin(), inputs.end() );
  return side;
}

std::vector<var_id> rc_bdd::output_side() const
{
  auto side = outputs;
  side.insert( side.end(), garbage.begin(), garbage.end() );
  return side;
}

rc_bdd make_rc_layout( uint32_t num_inputs, uint32_t num_outputs, uint32_t num_garbage, uint32_t num_constants,
                       std::vector<std::string> const& input_names, std::vector<std::string> const& output_names )
{
  if ( num_constants + num_inputs != num_outputs + num_garbage )
  {
    throw std::invalid_argument( "line counts do not balance" );
  }
  rc_bdd rc;
  rc.manager = std::make_shared<bdd_manager>();
  rc.num_inputs = num_inputs;
  rc.num_outputs = num_outputs;
  rc.num_garbage = num_garbage;
  rc.num_constants = num_constants;
  rc.num_lines = num_constants + num_inputs;

  auto& mgr = *rc.manager;
  auto add = [&]( line_role role, uint32_t index ) {
    std::string name;
    switch ( role )
    {
    case line_role::constant:
      name = "k" + std::to_string( index + 1 );
      rc.constants.push_back( mgr.num_vars() );
      break;
    case line_role::input:
      name = index < input_names.size() ? input_names[index] : "x" + std::to_string( index + 1 );
      rc.inputs.push_back( mgr.num_vars() );
      break;
    case line_role::output:
      name = index < output_names.size() ? output_names[index] : "y" + std::to_string( index + 1 );
      rc.outputs.push_back( mgr.num_vars() );
      break;
    case line_role::garbage:
      name = "g" + std::to_string( index + 1 );
      rc.garbage.push_back( mgr.num_vars() );
      break;
    }
    rc.roles.push_back( { role, index } );
    mgr.add_var( name );
  };

  for ( auto i = 0u; i < rc.num_lines; ++i )
  {
    if ( i < num_constants )
      add( line_role::constant, i );
    else
      add( line_role::input, i - num_constants );
    if ( i < num_outputs )
      add( line_role::output, i );
    else
      add( line_role::garbage, i - num_outputs );
  }
  return rc;
}

bdd cube_of( output_set const& o, bdd_manager& mgr, std::span<var_id const> outputs )
{
  if ( o.num_outputs() != outputs.size() )
  {
    throw std::invalid_argument( "output set width does not match the output variables" );
  }
  auto result = mgr.bdd_true();
  for ( auto i = outputs.size(); i-- > 0; )
  {
    result &= mgr.literal( outputs[i], o.contains( static_cast<uint32_t>( i ) ) );
  }
  return result;
}

std::vector<bdd> inc_once( std::span<bdd const> vars )
{
  if ( vars.empty() )
  {
    throw std::invalid_argument( "inc needs at least one variable" );
  }
  std::vector<bdd> result;
  auto carry = vars.front().manager()->bdd_true();
  for ( auto const& v : vars )
  {
    result.push_back( v ^ carry );
    carry &= v;
  }
  return result;
}

std::vector<bdd> inc( std::span<bdd const> vars, big_uint const& times )
{
  if ( vars.empty() )
  {
    throw std::invalid_argument( "inc needs at least one variable" );
  }
  auto& mgr = *vars.front().manager();
  std::vector<bdd> result;
  auto carry = mgr.bdd_false();
  for ( auto i = 0u; i < vars.size(); ++i )
  {
    bool const bit = boost::multiprecision::bit_test( times, i );
    auto const& v = vars[i];
    if ( bit )
    {
      result.push_back( ~( v ^ carry ) );
      carry = v | carry;
    }
    else
    {
      result.push_back( v ^ carry );
      carry = v & carry;
    }
  }
  return result;
}

rc_bdd embed_exact( pla const& p, embed_trace* trace )
{
  if ( !p.dsop_certified )
  {
    throw std::invalid_argument( "embed_exact requires a disjoint PLA" );
  }
  auto const report = heuristic_mu( p );
  auto const n = p.num_inputs;
  auto const m = p.num_outputs;
  auto const ell = report.ell;
  if ( m + ell < n )
  {
    throw std::logic_error( "exact line count below n - m" );
  }
  auto const num_constants = m + ell - n;

  auto rc = make_rc_layout( n, m, ell, num_constants, p.input_names, p.output_names );
  rc.partial = true;
  auto& mgr = *rc.manager;

  rc.functions = to_functions( p, mgr, rc.inputs );

  auto constants_zero = mgr.bdd_true();
  for ( auto k : rc.constants )
  {
    constants_zero &= mgr.literal( k, false );
  }

  if ( trace )
  {
    trace->mu = report.mu;
    trace->steps.clear();
  }

  std::map<output_set, big_uint> offset;
  auto chi = mgr.bdd_false();
  for ( auto const& e : p.entries )
  {
    check_deadline();
    auto const dcs = e.input.dont_cares();
    if ( dcs.size() > ell )
    {
      throw std::logic_error( "cube has more don't cares than garbage lines" );
    }
    auto& q = offset[e.outputs];
    auto const size = e.input.num_minterms();
    auto const it = report.per_pattern.find( e.outputs );
    auto const bound = it == report.per_pattern.end() ? big_uint( 0 ) : it->second;
    if ( q + size > bound )
    {
      throw std::logic_error( "garbage offset exceeds the pattern count" );
    }

    auto term = mgr.from_cube( e.input, rc.inputs ) & cube_of( e.outputs, mgr, rc.outputs ) & constants_zero;
    if ( ell > 0 )
    {
      std::vector<bdd> free_bits( ell, mgr.bdd_false() );
      for ( auto i = 0u; i < dcs.size(); ++i )
      {
        free_bits[i] = mgr.var( rc.inputs[dcs[i]] );
      }
      auto const s = inc( free_bits, q );
      for ( auto i = ell; i-- > 0; )
      {
        term &= mgr.apply( binary_op::xnor_, mgr.var( rc.garbage[i] ), s[i] );
      }
    }
    chi |= term;

    if ( trace )
    {
      trace->steps.push_back( { e.input, e.outputs, q, q + size } );
    }
    q += size;
  }
  rc.chi = chi;
  return rc;
}

rc_bdd embed_bennett( std::span<bdd const> functions, std::span<var_id const> inputs,
                      std::vector<std::string> const& input_names, std::vector<std::string> const& output_names )
{
  if ( functions.empty() )
  {
    throw std::invalid_argument( "embed_bennett needs at least one function" );
  }
  auto& src = *functions.front().manager();
  auto const n = static_cast<uint32_t>( inputs.size() );
  auto const m = static_cast<uint32_t>( functions.size() );

  std::vector<std::string> in_names = input_names;
  if ( in_names.empty() )
  {
    for ( auto v : inputs )
      in_names.push_back( src.name( v ) );
  }

  auto rc = make_rc_layout( n, m, n, m, in_names, output_names );
  auto& mgr = *rc.manager;

  std::vector<bdd> images( src.num_vars() );
  for ( auto i = 0u; i < n; ++i )
  {
    images[inputs[i]] = mgr.var( rc.inputs[i] );
  }
  for ( auto const& f : functions )
  {
    rc.functions.push_back( src.transfer( f, mgr, images ) );
  }

  auto chi = mgr.bdd_true();
  for ( auto i = n; i-- > 0; )
  {
    chi &= mgr.apply( binary_op::xnor_, mgr.var( rc.garbage[i] ), mgr.var( rc.inputs[i] ) );
  }
  for ( auto i = m; i-- > 0; )
  {
    check_deadline();
    auto const target = mgr.var( rc.constants[i] ) ^ rc.functions[i];
    chi &= mgr.apply( binary_op::xnor_, mgr.var( rc.outputs[i] ), target );
  }
  rc.chi = chi;
  rc.partial = false;
  return rc;
}

rc_bdd embed_bennett( pla const& p )
{
  bdd_manager mgr;
  auto const functions = to_functions( p, mgr );
  std::vector<var_id> inputs( p.num_inputs );
  std::iota( inputs.begin(), inputs.end(), 0u );
  return embed_bennett( functions, inputs, p.input_names, p.output_names );
}

verify_report verify( rc_bdd const& rc, std::span<bdd const> functions )
{
  auto& mgr = *rc.manager;
  if ( functions.size() != rc.num_outputs )
  {
    throw std::invalid_argument( "verify needs one function per output" );
  }
  auto const num_vars = mgr.num_vars();
  auto const r = rc.num_lines;
  auto const in_side = rc.input_side();
  auto const out_side = rc.output_side();

  auto const pairs = mgr.sat_count( rc.chi, num_vars );
  /* projections do not depend on the quantified side, so divide its 2^r out */
  auto const domain = mgr.sat_count( mgr.exists( rc.chi, out_side ), num_vars ) >> r;
  auto const image = mgr.sat_count( mgr.exists( rc.chi, in_side ), num_vars ) >> r;

  verify_report report;
  report.functional = pairs == domain;
  report.injective = pairs == image;
  report.total = domain == ( big_uint( 1 ) << r );

  auto plane = rc.chi;
  for ( auto k : rc.constants )
  {
    plane = mgr.cofactor( plane, k, false );
  }
  auto const projected = mgr.exists( plane, rc.garbage );
  auto const expected = characteristic( functions, rc.outputs );
  if ( rc.partial )
  {
    report.projects = ( projected & ~expected ).is_false();
  }
  else
  {
    report.projects = projected == expected;
  }
  report.total_on_constant_plane = mgr.exists( projected, rc.outputs ).is_true();
  return report;
}

pla complete_offset( pla const& p )
{
  bdd_manager mgr;
  auto const functions = to_functions( p, mgr );
  auto const off = off_set( functions );

  pla result = p;
  bool const had_empty_rows = std::any_of( p.entries.begin(), p.entries.end(), []( auto const& e ) { return e.outputs.empty(); } );
  for ( auto& c : mgr.enumerate_paths( off, p.num_inputs ) )
  {
    result.entries.push_back( { std::move( c ), output_set( p.num_outputs ) } );
  }
  result.dsop_certified = p.dsop_certified && !had_empty_rows;
  return result;
}

std::string write_embedding_pla( rc_bdd const& rc, std::size_t max_rows )
{
  auto& mgr = *rc.manager;
  auto plane = rc.chi;
  for ( auto k : rc.constants )
  {
    plane = mgr.cofactor( plane, k, false );
  }

  std::vector<std::string> rows;
  mgr.foreach_path( plane, [&]( auto const& path ) {
    if ( rows.size() >= max_rows )
    {
      throw resource_exhausted( "embedding PLA exceeds " + std::to_string( max_rows ) + " rows" );
    }
    std::string in( rc.num_lines, '-' );
    std::string out( rc.num_lines, '?' );
    for ( auto i = 0u; i < rc.num_constants; ++i )
    {
      in[i] = '0';
    }
    for ( auto const& [v, value] : path )
    {
      auto const [role, index] = rc.roles[v];
      char const c = value ? '1' : '0';
      switch ( role )
      {
      case line_role::constant:
        break;
      case line_role::input:
        in[rc.num_constants + index] = c;
        break;
      case line_role::output:
        out[index] = c;
        break;
      case line_role::garbage:
        out[rc.num_outputs + index] = c;
        break;
      }
    }
    if ( out.find( '?' ) != std::string::npos )
    {
      throw std::logic_error( "relation leaves an output undetermined" );
    }
    rows.push_back( in + ' ' + out );
  } );

  std::string s;
  s += ".i " + std::to_string( rc.num_lines ) + "\n";
  s += ".o " + std::to_string( rc.num_lines ) + "\n";
  s += ".ilb";
  for ( auto k : rc.constants )
    s += ' ' + mgr.name( k );
  for ( auto x : rc.inputs )
    s += ' ' + mgr.name( x );
  s += "\n.ob";
  for ( auto y : rc.outputs )
    s += ' ' + mgr.name( y );
  for ( auto g : rc.garbage )
    s += ' ' + mgr.name( g );
  s += "\n.p " + std::to_string( rows.size() ) + "\n";
  for ( auto const& row : rows )
  {
    s += row + '\n';
  }
  s += ".e\n";
  return s;
}

ordering_comparison compare_orderings( std::span<uint32_t const> permutation, uint32_t num_lines )
{
  if ( permutation.size() != ( std::size_t( 1 ) << num_lines ) )
  {
    throw std::invalid_argument( "permutation size must be 2^num_lines" );
  }
  auto build = [&]( bool interleaved ) {
    bdd_manager mgr;
    std::vector<var_id> xs( num_lines ), ys( num_lines );
    if ( interleaved )
    {
      for ( auto i = 0u; i < num_lines; ++i )
      {
        xs[i] = mgr.add_var();
        ys[i] = mgr.add_var();
      }
    }
    else
    {
      for ( auto i = 0u; i < num_lines; ++i )
        xs[i] = mgr.add_var();
      for ( auto i = 0u; i < num_lines; ++i )
        ys[i] = mgr.add_var();
    }
    auto chi = mgr.bdd_false();
    for ( auto a = 0u; a < permutation.size(); ++a )
    {
      auto term = mgr.bdd_true();
      for ( auto i = 0u; i < num_lines; ++i )
      {
        term &= mgr.literal( xs[i], ( a >> i ) & 1u );
        term &= mgr.literal( ys[i], ( permutation[a] >> i ) & 1u );
      }
      chi |= term;
    }
    return mgr.node_count( chi );
  };
  return { build( true ), build( false ) };
}

} // namespace revemb
