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

#include <revemb/line_count.hpp>

#include <revemb/dsop.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace revemb
{

std::string to_string( line_method method )
{
  switch ( method )
  {
  case line_method::heuristic_cube:
    return "heuristic";
  case line_method::exact_cube:
    return "exact-cube";
  case line_method::exact_bdd:
    return "exact-bdd";
  case line_method::brute:
    return "brute";
  }
  return "unknown";
}

uint32_t ceil_log2( big_uint const& value )
{
  if ( value <= 0 )
  {
    throw std::invalid_argument( "ceil_log2 of a non-positive value" );
  }
  if ( value == 1 )
  {
    return 0u;
  }
  return static_cast<uint32_t>( boost::multiprecision::msb( big_uint( value - 1 ) ) ) + 1u;
}

line_report make_line_report( std::map<output_set, big_uint> per_pattern, uint32_t num_inputs, uint32_t num_outputs, bool exact, line_method method )
{
  line_report r;
  r.num_inputs = num_inputs;
  r.num_outputs = num_outputs;
  std::erase_if( per_pattern, []( auto const& kv ) { return kv.second == 0; } );
  r.per_pattern = std::move( per_pattern );
  r.mu = 0;
  for ( auto const& [_, count] : r.per_pattern )
  {
    r.mu = std::max( r.mu, count );
  }
  r.ell = r.mu > 0 ? ceil_log2( r.mu ) : 0u;
  r.total_lines = num_outputs + r.ell;
  r.exact = exact;
  r.method = method;
  return r;
}

line_report heuristic_mu( pla const& p )
{
  std::map<output_set, big_uint> mu;
  for ( auto const& e : p.entries )
  {
    mu[e.outputs] += e.input.num_minterms();
  }

  bdd_manager mgr;
  auto const functions = to_functions( p, mgr );
  auto const off = functions.empty() ? mgr.bdd_true() : off_set( functions );
  mu[output_set( p.num_outputs )] = mgr.sat_count( off, p.num_inputs );

  return make_line_report( std::move( mu ), p.num_inputs, p.num_outputs, p.dsop_certified, line_method::heuristic_cube );
}

line_report exact_mu_cube( pla const& p )
{
  auto const disjoint = dsop( p );
  auto r = heuristic_mu( disjoint );
  r.exact = true;
  r.method = line_method::exact_cube;
  return r;
}

line_report exact_mu_bdd( std::span<bdd const> functions, std::span<var_id const> inputs, exact_bdd_params const& params )
{
  if ( functions.empty() )
  {
    throw std::invalid_argument( "exact_mu_bdd needs at least one function" );
  }
  auto const n = static_cast<uint32_t>( inputs.size() );
  auto const m = static_cast<uint32_t>( functions.size() );
  auto& src = *functions.front().manager();

  bdd_manager mgr;
  std::vector<var_id> ys( m );
  for ( auto j = 0u; j < m; ++j )
  {
    ys[j] = mgr.add_var( "y" + std::to_string( j + 1 ) );
  }
  std::vector<bdd> images( src.num_vars() );
  for ( auto i = 0u; i < n; ++i )
  {
    images[inputs[i]] = mgr.var( mgr.add_var( src.name( inputs[i] ) ) );
  }
  std::vector<bdd> moved;
  moved.reserve( m );
  for ( auto const& f : functions )
  {
    moved.push_back( src.transfer( f, mgr, images ) );
  }
  auto const chi = characteristic( moved, ys );

  std::map<output_set, big_uint> counts;
  output_set pattern( m );
  std::size_t enumerated = 0;
  std::function<void( bdd const&, uint32_t )> rec = [&]( bdd const& u, uint32_t level ) {
    if ( u.is_false() )
    {
      return;
    }
    if ( level == m )
    {
      if ( ++enumerated > params.max_patterns )
      {
        throw resource_exhausted( "more than " + std::to_string( params.max_patterns ) + " output patterns" );
      }
      check_deadline();
      counts[pattern] = mgr.sat_count( u, m, m + n );
      return;
    }
    bool const tested = !u.is_terminal() && u.level() == level;
    auto const low = tested ? u.low() : u;
    auto const high = tested ? u.high() : u;
    rec( low, level + 1 );
    auto const saved = pattern;
    pattern.insert( level );
    rec( high, level + 1 );
    pattern = saved;
  };
  rec( chi, 0u );

  return make_line_report( std::move( counts ), n, m, true, line_method::exact_bdd );
}

line_report exact_mu_bdd( pla const& p, exact_bdd_params const& params )
{
  bdd_manager mgr;
  auto const functions = to_functions( p, mgr );
  std::vector<var_id> inputs( p.num_inputs );
  std::iota( inputs.begin(), inputs.end(), 0u );
  return exact_mu_bdd( functions, inputs, params );
}

uint32_t upper_bound_total( uint32_t num_inputs, uint32_t num_outputs )
{
  return num_inputs + num_outputs;
}

} // namespace revemb
