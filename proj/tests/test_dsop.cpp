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

#include <gtest/gtest.h>

#include <random>

#include <revemb/dsop.hpp>
#include <revemb/oracle.hpp>
#include <revemb/random.hpp>

#include "test_util.hpp"

using namespace revemb;
using revemb::test::fixture;
using revemb::test::row_list;
using revemb::test::row_set;

namespace
{

std::vector<std::string> strings( std::vector<cube> const& cubes )
{
  std::vector<std::string> s;
  for ( auto const& c : cubes )
    s.push_back( c.to_string() );
  return s;
}

} // namespace

TEST( dsop, cube_and )
{
  auto const r = cube_and( cube::from_string( "11--1" ), cube::from_string( "1--0-" ) );
  ASSERT_TRUE( r );
  EXPECT_EQ( r->to_string(), "11-01" );
  EXPECT_FALSE( cube_and( cube::from_string( "1-" ), cube::from_string( "0-" ) ) );
  EXPECT_EQ( cube_and( cube::from_string( "--" ), cube::from_string( "--" ) )->to_string(), "--" );
}

TEST( dsop, cube_sharp )
{
  /* remainder of the new cube and of the placed cube in the worked merge step */
  EXPECT_EQ( strings( cube_sharp( cube::from_string( "11--1" ), cube::from_string( "1--0-" ) ) ), ( std::vector<std::string>{ "11-11" } ) );
  EXPECT_EQ( strings( cube_sharp( cube::from_string( "1--0-" ), cube::from_string( "11--1" ) ) ),
             ( std::vector<std::string>{ "10-0-", "11-00" } ) );
  EXPECT_EQ( strings( cube_sharp( cube::from_string( "1-" ), cube::from_string( "0-" ) ) ), ( std::vector<std::string>{ "1-" } ) );
  EXPECT_TRUE( cube_sharp( cube::from_string( "10" ), cube::from_string( "--" ) ).empty() );
}

TEST( dsop, cube_sharp_is_a_disjoint_difference )
{
  std::mt19937_64 rng( 9 );
  std::uniform_int_distribution<int> lit( 0, 2 );
  for ( auto round = 0; round < 200; ++round )
  {
    cube a( 6 ), b( 6 );
    for ( auto i = 0u; i < 6; ++i )
    {
      a.set( i, static_cast<polarity>( lit( rng ) ) );
      b.set( i, static_cast<polarity>( lit( rng ) ) );
    }
    auto const parts = cube_sharp( a, b );
    for ( uint64_t v = 0; v < 64; ++v )
    {
      auto const x = revemb::test::bits( v, 6 );
      auto covering = 0;
      for ( auto const& c : parts )
        covering += c.covers( x ) ? 1 : 0;
      EXPECT_EQ( covering, a.covers( x ) && !b.covers( x ) ? 1 : 0 );
    }
  }
}

TEST( dsop, running_example_golden )
{
  auto const p = read_pla_file( fixture( "running_example.pla" ) );
  auto const d = dsop( p );
  EXPECT_TRUE( d.dsop_certified );
  EXPECT_EQ( row_set( d ), row_set( read_pla_file( fixture( "running_example_dsop.pla" ) ) ) );
  EXPECT_EQ( d.entries.size(), 12u );
  EXPECT_TRUE( brute_dsop_check( d, p ) );

  auto const c = post_compact( d );
  EXPECT_EQ( row_set( c ), row_set( read_pla_file( fixture( "running_example_compact.pla" ) ) ) );
  EXPECT_EQ( c.entries.size(), 10u );
  EXPECT_TRUE( brute_dsop_check( c, p ) );
}

TEST( dsop, under_approximation_example )
{
  auto const p = read_pla_file( fixture( "under_approx.pla" ) );
  auto const d = dsop( p );
  EXPECT_EQ( d.entries.size(), 16u );
  EXPECT_TRUE( brute_dsop_check( d, p ) );
  auto const c = post_compact( d );
  EXPECT_EQ( row_list( c ), row_list( read_pla_file( fixture( "under_approx_dsop.pla" ) ) ) );
}

TEST( dsop, post_compaction_needs_disjoint_input )
{
  EXPECT_THROW( post_compact( read_pla_file( fixture( "running_example.pla" ) ) ), std::invalid_argument );
}

TEST( dsop, deterministic_and_idempotent )
{
  auto const p = read_pla_file( fixture( "running_example.pla" ) );
  EXPECT_EQ( row_list( dsop( p ) ), row_list( dsop( p ) ) );
  auto const d = dsop( p );
  EXPECT_EQ( row_set( dsop( d ) ), row_set( d ) );
}

TEST( dsop, random_covers_are_disjoint_and_equivalent )
{
  std::mt19937_64 rng( 77 );
  std::uniform_int_distribution<uint32_t> inputs( 1, 9 ), outputs( 1, 5 ), cubes( 1, 12 );
  for ( auto round = 0; round < 100; ++round )
  {
    auto const p = random_pla( inputs( rng ), outputs( rng ), cubes( rng ), rng );
    auto const d = dsop( p );
    ASSERT_TRUE( brute_dsop_check( d, p ) ) << write_pla( p );
    ASSERT_TRUE( brute_dsop_check( post_compact( d ), p ) ) << write_pla( p );
  }
}
