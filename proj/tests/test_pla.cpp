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

#include <revemb/oracle.hpp>
#include <revemb/pla.hpp>
#include <revemb/random.hpp>

#include "test_util.hpp"

using namespace revemb;
using revemb::test::fixture;

TEST( cube, basics )
{
  auto const c = cube::from_string( "1--0-" );
  EXPECT_EQ( c.num_vars(), 5u );
  EXPECT_EQ( c.weight(), 2u );
  EXPECT_EQ( c.dont_cares(), ( std::vector<uint32_t>{ 1, 2, 4 } ) );
  EXPECT_EQ( c.num_minterms(), big_uint( 8 ) );
  EXPECT_EQ( c.to_string(), "1--0-" );
  EXPECT_TRUE( c.covers( { true, false, true, false, true } ) );
  EXPECT_FALSE( c.covers( { true, false, true, true, true } ) );
  EXPECT_THROW( cube::from_string( "1x0" ), std::invalid_argument );
  EXPECT_EQ( cube( 3 ).to_string(), "---" );
}

TEST( output_set, ordering_and_printing )
{
  auto const a = output_set::from_plane( "000" );
  auto const b = output_set::from_plane( "100" );
  auto const c = output_set::from_plane( "101" );
  auto const d = output_set::from_plane( "010" );
  EXPECT_TRUE( a < b );
  EXPECT_TRUE( b < c );
  EXPECT_TRUE( c < d );
  EXPECT_TRUE( a.empty() );
  EXPECT_EQ( c.count(), 2u );
  EXPECT_EQ( c.indices(), ( std::vector<uint32_t>{ 0, 2 } ) );
  EXPECT_EQ( c.to_string(), "101" );

  auto e = b;
  e |= d;
  EXPECT_EQ( e.to_string(), "110" );
  EXPECT_EQ( std::hash<output_set>{}( e ), std::hash<output_set>{}( output_set::from_plane( "110" ) ) );
}

TEST( output_set, wide_sets )
{
  output_set o( 130 );
  o.insert( 0 );
  o.insert( 129 );
  EXPECT_TRUE( o.contains( 129 ) );
  EXPECT_FALSE( o.contains( 64 ) );
  EXPECT_EQ( o.count(), 2u );
}

TEST( pla, parse_running_example )
{
  auto const p = read_pla_file( fixture( "running_example.pla" ) );
  EXPECT_EQ( p.num_inputs, 5u );
  EXPECT_EQ( p.num_outputs, 3u );
  ASSERT_EQ( p.entries.size(), 6u );
  EXPECT_EQ( p.entries[0].input.to_string(), "1--0-" );
  EXPECT_EQ( p.entries[4].outputs.to_string(), "101" );
  EXPECT_EQ( p.input_names.front(), "x1" );
  EXPECT_EQ( p.output_names.back(), "f3" );
  EXPECT_FALSE( p.saw_output_dont_cares );
}

TEST( pla, fd_semantics_for_output_dont_cares )
{
  auto const p = parse_pla( ".i 2\n.o 3\n1- 1-~\n.e\n" );
  EXPECT_TRUE( p.saw_output_dont_cares );
  EXPECT_EQ( p.entries[0].outputs.to_string(), "100" );
}

TEST( pla, parse_errors_report_lines )
{
  auto line_of = []( std::string const& text ) -> std::size_t {
    try
    {
      parse_pla( text );
    }
    catch ( pla_parse_error const& e )
    {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ( line_of( ".i 2\n.o 1\n1 1\n" ), 3u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n11 10\n" ), 3u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n1x 1\n" ), 3u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n11\n" ), 3u );
  EXPECT_EQ( line_of( ".i 0\n" ), 1u );
  EXPECT_EQ( line_of( ".i 2\n.i 2\n" ), 2u );
  EXPECT_EQ( line_of( ".p 3\n.i 2\n.o 1\n" ), 1u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n.ilb a\n" ), 3u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n.type fr\n" ), 3u );
  EXPECT_EQ( line_of( ".i 2\n.o 1\n.mv 3\n" ), 3u );
  EXPECT_NE( line_of( ".i 2\n" ), 0u );
  EXPECT_THROW( read_pla_file( "/nonexistent/file.pla" ), std::runtime_error );
}

TEST( pla, comments_and_end_marker )
{
  auto const p = parse_pla( "# header\n.i 1 # inputs\n.o 1\n.type fd\n1 1 # row\n.end\n0 1\n" );
  EXPECT_EQ( p.entries.size(), 1u );
}

TEST( pla, write_round_trip )
{
  auto const p = read_pla_file( fixture( "running_example.pla" ) );
  auto const text = write_pla( p );
  EXPECT_EQ( parse_pla( text ), p );
  EXPECT_EQ( text.find( "# dsop" ), std::string::npos );

  auto q = p;
  q.dsop_certified = true;
  EXPECT_EQ( write_pla( q ).rfind( "# dsop", 0 ), 0u );

  std::mt19937_64 rng( 3 );
  for ( auto i = 0; i < 20; ++i )
  {
    auto const r = random_pla( 6, 4, 8, rng );
    EXPECT_EQ( parse_pla( write_pla( r ) ), r );
  }
}

TEST( pla, functions_agree_with_cube_semantics )
{
  std::mt19937_64 rng( 17 );
  for ( auto round = 0; round < 20; ++round )
  {
    auto const p = random_pla( 6, 3, 7, rng );
    bdd_manager mgr;
    auto const fs = to_functions( p, mgr );
    ASSERT_EQ( fs.size(), 3u );
    std::vector<bool> assignment( mgr.num_vars() );
    for ( uint64_t a = 0; a < 64; ++a )
    {
      auto const x = revemb::test::bits( a, 6 );
      auto const o = evaluate( p, x );
      for ( auto j = 0u; j < 3; ++j )
      {
        EXPECT_EQ( mgr.eval( fs[j], x ), o.contains( j ) );
      }
      EXPECT_EQ( mgr.eval( off_set( fs ), x ), o.empty() );
    }
  }
}

TEST( pla, off_set_of_running_example )
{
  auto const p = read_pla_file( fixture( "running_example.pla" ) );
  bdd_manager mgr;
  auto const fs = to_functions( p, mgr );
  EXPECT_EQ( mgr.sat_count( fs[0] | fs[1] | fs[2], 5 ), big_uint( 28 ) );
  EXPECT_EQ( mgr.sat_count( off_set( fs ), 5 ), big_uint( 4 ) );
  EXPECT_EQ( off_set( fs ), mgr.from_cube( cube::from_string( "011--" ), std::vector<var_id>{ 0, 1, 2, 3, 4 } ) );
}

TEST( pla, characteristic_function )
{
  auto const p = read_pla_file( fixture( "and2.pla" ) );
  bdd_manager mgr;
  auto const fs = to_functions( p, mgr );
  auto const y = mgr.add_var( "y" );
  auto const chi = characteristic( fs, std::vector<var_id>{ y } );
  EXPECT_EQ( mgr.sat_count( chi, 3 ), big_uint( 4 ) );
  EXPECT_TRUE( mgr.eval( chi, { true, true, true } ) );
  EXPECT_FALSE( mgr.eval( chi, { true, true, false } ) );
  EXPECT_TRUE( mgr.eval( chi, { false, true, false } ) );
}
