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

#include <revemb/benchgen.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revemb
{

generated_function redundancy( bdd_manager& mgr, uint32_t p, uint32_t q )
{
  if ( p == 0 || q == 0 )
  {
    throw std::invalid_argument( "redundancy needs p, q >= 1" );
  }
  if ( mgr.num_vars() != 0 )
  {
    throw std::invalid_argument( "redundancy needs a fresh manager" );
  }

  generated_function result;
  for ( auto i = 1u; i <= p; ++i )
  {
    result.inputs.push_back( mgr.add_var( "x" + std::to_string( i ) ) );
  }
  std::vector<std::vector<var_id>> ys( q );
  for ( auto j = 1u; j <= q; ++j )
  {
    for ( auto i = 1u; i <= p; ++i )
    {
      auto const v = mgr.add_var( "y" + std::to_string( i ) + "_" + std::to_string( j ) );
      ys[j - 1].push_back( v );
      result.inputs.push_back( v );
    }
  }

  auto f = mgr.bdd_true();
  for ( auto j = q; j-- > 0; )
  {
    check_deadline();
    auto column = mgr.bdd_false();
    for ( auto i = p; i-- > 0; )
    {
      column |= mgr.var( result.inputs[i] ) & mgr.var( ys[j][i] );
    }
    f &= column;
  }
  result.function = f;
  return result;
}

generated_function restricted_growth( bdd_manager& mgr, uint32_t p )
{
  if ( p == 0 )
  {
    throw std::invalid_argument( "restricted_growth needs p >= 1" );
  }
  if ( mgr.num_vars() != 0 )
  {
    throw std::invalid_argument( "restricted_growth needs a fresh manager" );
  }

  generated_function result;
  std::vector<std::vector<var_id>> bits( p + 1 );
  for ( auto j = 1u; j <= p; ++j )
  {
    for ( auto v = 0u; v < j; ++v )
    {
      auto const id = mgr.add_var( "a" + std::to_string( j ) + "_" + std::to_string( v ) );
      bits[j].push_back( id );
      result.inputs.push_back( id );
    }
  }

  /* position j encodes value v */
  auto onehot = [&]( uint32_t j, uint32_t v ) {
    auto term = mgr.bdd_true();
    for ( auto k = j; k-- > 0; )
    {
      term &= mgr.literal( bits[j][k], k == v );
    }
    return term;
  };

  /* suffix[k]: positions j..p are valid given max(a_1..a_{j-1}) = k, built from the back */
  std::vector<bdd> suffix( p, mgr.bdd_true() );
  for ( auto j = p; j >= 2u; --j )
  {
    check_deadline();
    std::vector<bdd> next( p, mgr.bdd_false() );
    for ( auto k = 0u; k + 1 < j; ++k )
    {
      auto acc = mgr.bdd_false();
      for ( auto v = 0u; v <= k + 1 && v < j; ++v )
      {
        acc |= onehot( j, v ) & suffix[std::max( k, v )];
      }
      next[k] = acc;
    }
    suffix = std::move( next );
  }
  result.function = onehot( 1, 0 ) & suffix[0];
  return result;
}

} // namespace revemb
