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

#include <revemb/dsop.hpp>

#include <deque>
#include <map>
#include <stdexcept>

#include <revemb/bdd.hpp>

namespace revemb
{

std::optional<cube> cube_and( cube const& a, cube const& b )
{
  if ( a.num_vars() != b.num_vars() )
  {
    throw std::invalid_argument( "cubes of different width" );
  }
  cube result = a;
  for ( auto i = 0u; i < a.num_vars(); ++i )
  {
    if ( b[i] == polarity::dont_care )
    {
      continue;
    }
    if ( a[i] == polarity::dont_care )
    {
      result.set( i, b[i] );
    }
    else if ( a[i] != b[i] )
    {
      return std::nullopt;
    }
  }
  return result;
}

std::vector<cube> cube_sharp( cube const& a, cube const& b )
{
  if ( !cube_and( a, b ) )
  {
    return { a };
  }
  std::vector<cube> result;
  cube rest = a;
  for ( auto i = 0u; i < a.num_vars(); ++i )
  {
    if ( b[i] == polarity::dont_care || a[i] != polarity::dont_care )
    {
      continue;
    }
    cube piece = rest;
    piece.set( i, b[i] == polarity::one ? polarity::zero : polarity::one );
    result.push_back( std::move( piece ) );
    rest.set( i, b[i] );
  }
  return result;
}

pla dsop( pla const& p )
{
  std::deque<pla_entry> pending( p.entries.begin(), p.entries.end() );
  std::vector<pla_entry> placed;

  std::size_t steps = 0;
  while ( !pending.empty() )
  {
    if ( ( ++steps & 0xfffu ) == 0u )
    {
      check_deadline();
    }
    auto entry = std::move( pending.front() );
    pending.pop_front();

    auto overlap = placed.end();
    std::optional<cube> intersection;
    for ( auto it = placed.begin(); it != placed.end(); ++it )
    {
      if ( ( intersection = cube_and( entry.input, it->input ) ) )
      {
        overlap = it;
        break;
      }
    }
    if ( overlap == placed.end() )
    {
      placed.push_back( std::move( entry ) );
      continue;
    }

    auto const other = *overlap;
    auto merged = entry.outputs;
    merged |= other.outputs;
    *overlap = { *intersection, merged };

    auto const own_rest = cube_sharp( entry.input, other.input );
    for ( auto it = own_rest.rbegin(); it != own_rest.rend(); ++it )
    {
      pending.push_front( { *it, entry.outputs } );
    }
    for ( auto const& c : cube_sharp( other.input, entry.input ) )
    {
      placed.push_back( { c, other.outputs } );
    }
  }

  pla result = p;
  result.entries = std::move( placed );
  result.dsop_certified = true;
  return result;
}

pla post_compact( pla const& p )
{
  if ( !p.dsop_certified )
  {
    throw std::invalid_argument( "post_compact requires a disjoint PLA" );
  }
  bdd_manager mgr;
  std::vector<var_id> inputs;
  for ( auto i = 0u; i < p.num_inputs; ++i )
  {
    inputs.push_back( mgr.add_var() );
  }

  std::map<output_set, bdd> groups;
  for ( auto const& e : p.entries )
  {
    auto [it, fresh] = groups.try_emplace( e.outputs, mgr.bdd_false() );
    it->second |= mgr.from_cube( e.input, inputs );
  }

  pla result = p;
  result.entries.clear();
  for ( auto const& [outputs, on] : groups )
  {
    for ( auto& c : mgr.enumerate_paths( on, p.num_inputs ) )
    {
      result.entries.push_back( { std::move( c ), outputs } );
    }
  }
  result.dsop_certified = true;
  return result;
}

} // namespace revemb
