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

/*!
  \file test_util.hpp
  \brief Helpers shared by the test programs
*/

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <revemb/bdd.hpp>
#include <revemb/cube.hpp>
#include <revemb/pla.hpp>

namespace revemb::test
{

inline std::string fixture( std::string const& name )
{
  return std::string( REVEMB_FIXTURES ) + "/" + name;
}

inline std::vector<bool> bits( uint64_t value, uint32_t width )
{
  std::vector<bool> result( width );
  for ( auto i = 0u; i < width; ++i )
  {
    result[i] = ( value >> i ) & 1u;
  }
  return result;
}

/*! \brief Truth table of `f` over the first `n` variables of its manager, assignment `a` at index `a`. */
inline std::vector<bool> truth_table( bdd const& f, uint32_t n )
{
  auto& mgr = *f.manager();
  std::vector<bool> table( std::size_t( 1 ) << n );
  std::vector<bool> assignment( mgr.num_vars() );
  for ( uint64_t a = 0; a < table.size(); ++a )
  {
    for ( auto i = 0u; i < n; ++i )
      assignment[i] = ( a >> i ) & 1u;
    table[a] = mgr.eval( f, assignment );
  }
  return table;
}

/*! \brief Rows of a PLA as `"cube outputs"` strings, order-insensitive. */
inline std::multiset<std::string> row_set( pla const& p )
{
  std::multiset<std::string> rows;
  for ( auto const& e : p.entries )
  {
    rows.insert( e.input.to_string() + " " + e.outputs.to_string() );
  }
  return rows;
}

inline std::vector<std::string> row_list( pla const& p )
{
  std::vector<std::string> rows;
  for ( auto const& e : p.entries )
  {
    rows.push_back( e.input.to_string() + " " + e.outputs.to_string() );
  }
  return rows;
}

/*! \brief Pattern counts as `{"100", 5}` pairs for compact comparisons. */
template<typename Report>
std::map<std::string, uint64_t> pattern_map( Report const& r )
{
  std::map<std::string, uint64_t> result;
  for ( auto const& [o, count] : r.per_pattern )
  {
    result[o.to_string()] = count.template convert_to<uint64_t>();
  }
  return result;
}

} // namespace revemb::test
