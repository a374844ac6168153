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

#include <revemb/random.hpp>

#include <algorithm>
#include <numeric>

namespace revemb
{

pla random_pla( uint32_t num_inputs, uint32_t num_outputs, uint32_t num_cubes, std::mt19937_64& rng )
{
  pla p;
  p.num_inputs = num_inputs;
  p.num_outputs = num_outputs;
  std::uniform_int_distribution<int> literal( 0, 2 );
  std::uniform_int_distribution<uint32_t> output( 0, num_outputs - 1 );
  std::bernoulli_distribution coin( 0.5 );

  for ( auto k = 0u; k < num_cubes; ++k )
  {
    cube c( num_inputs );
    for ( auto i = 0u; i < num_inputs; ++i )
    {
      c.set( i, static_cast<polarity>( literal( rng ) ) );
    }
    output_set o( num_outputs );
    for ( auto j = 0u; j < num_outputs; ++j )
    {
      if ( coin( rng ) )
        o.insert( j );
    }
    if ( o.empty() )
    {
      o.insert( output( rng ) );
    }
    p.entries.push_back( { std::move( c ), std::move( o ) } );
  }
  return p;
}

std::vector<uint32_t> random_permutation( uint32_t num_lines, std::mt19937_64& rng )
{
  std::vector<uint32_t> perm( std::size_t( 1 ) << num_lines );
  std::iota( perm.begin(), perm.end(), 0u );
  std::shuffle( perm.begin(), perm.end(), rng );
  return perm;
}

} // namespace revemb
