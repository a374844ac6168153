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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <revemb/dsop.hpp>
#include <revemb/pla.hpp>

#include "cli.hpp"
#include "test_util.hpp"

using namespace revemb;
using revemb::test::fixture;

namespace
{

struct result
{
  int code;
  std::string out;
  std::string err;
};

result run( std::vector<std::string> const& args )
{
  std::ostringstream out, err;
  auto const code = cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string temp_path( std::string const& name )
{
  return ( std::filesystem::temp_directory_path() / ( "revemb_test_" + name ) ).string();
}

} // namespace

TEST( cli, lines_exact_bdd )
{
  auto const r = run( { "lines", "--method", "exact-bdd", fixture( "running_example.pla" ) } );
  ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
  auto const j = nlohmann::json::parse( r.out );
  EXPECT_EQ( j["mu"], "9" );
  EXPECT_EQ( j["total_lines"], 7 );
}

TEST( cli, lines_all_methods )
{
  for ( std::string method : { "heuristic", "exact-cube", "exact-bdd", "brute" } )
  {
    auto const r = run( { "lines", "--method", method, fixture( "under_approx.pla" ) } );
    ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
    auto const j = nlohmann::json::parse( r.out );
    EXPECT_EQ( j["method"], method );
    EXPECT_EQ( j["total_lines"], method == "heuristic" ? 7 : 8 );
  }
  auto const text = run( { "lines", "--format", "text", fixture( "running_example.pla" ) } );
  EXPECT_NE( text.out.find( "mu 9" ), std::string::npos );
}

TEST( cli, dsop_compact_writes_file )
{
  auto const path = temp_path( "running_example_compact.pla" );
  auto const r = run( { "dsop", fixture( "running_example.pla" ), "-o", path, "--compact", "--check" } );
  ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
  auto const p = read_pla_file( path );
  EXPECT_EQ( p.entries.size(), 10u );
  std::filesystem::remove( path );

  auto const plain = run( { "dsop", fixture( "running_example.pla" ) } );
  EXPECT_EQ( parse_pla( plain.out ).entries.size(), 12u );
}

TEST( cli, embed_bennett_verify )
{
  auto const r = run( { "embed", "--bennett", fixture( "identity2.pla" ), "--verify" } );
  ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
  auto const j = nlohmann::json::parse( r.out );
  for ( auto const* key : { "functional", "injective", "total", "projects" } )
    EXPECT_TRUE( j["verify"][key].get<bool>() ) << key;
}

TEST( cli, embed_exact_formats )
{
  auto const json = run( { "embed", "--exact", fixture( "under_approx.pla" ), "--verify", "--brute" } );
  ASSERT_EQ( json.code, cli::exit_ok ) << json.err;
  auto const j = nlohmann::json::parse( json.out );
  EXPECT_EQ( j["r"], 8 );
  EXPECT_EQ( j["p"], 3 );
  EXPECT_TRUE( j["partial"].get<bool>() );
  EXPECT_FALSE( j["verify"]["total"].get<bool>() );
  EXPECT_EQ( j["brute"]["pairs"], 24 );

  auto const offset = run( { "embed", "--exact", "--with-offset", fixture( "under_approx.pla" ), "--verify" } );
  ASSERT_EQ( offset.code, cli::exit_ok ) << offset.err;
  EXPECT_TRUE( nlohmann::json::parse( offset.out )["verify"]["total_on_constant_plane"].get<bool>() );

  auto const pla = run( { "embed", "--exact", fixture( "under_approx.pla" ), "--format", "pla" } );
  ASSERT_EQ( pla.code, cli::exit_ok );
  EXPECT_EQ( parse_pla( pla.out ).num_inputs, 8u );

  auto const dot = run( { "embed", "--bennett", fixture( "and2.pla" ), "--format", "dot" } );
  EXPECT_EQ( dot.out.rfind( "digraph", 0 ), 0u );
}

TEST( cli, verify_subcommand )
{
  auto const r = run( { "verify", "--bennett", "--brute", fixture( "running_example.pla" ) } );
  ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
  EXPECT_TRUE( nlohmann::json::parse( r.out )["brute"]["total"].get<bool>() );
}

TEST( cli, generators )
{
  auto const rgs = run( { "gen", "rgs", "5" } );
  ASSERT_EQ( rgs.code, cli::exit_ok ) << rgs.err;
  auto const j = nlohmann::json::parse( rgs.out );
  EXPECT_EQ( j["support"], 15 );
  EXPECT_EQ( j["sat_count"], "52" );

  auto const red = run( { "gen", "redundancy", "2", "3", "--embed", "--brute" } );
  ASSERT_EQ( red.code, cli::exit_ok ) << red.err;
  auto const k = nlohmann::json::parse( red.out );
  EXPECT_EQ( k["n"], 8 );
  EXPECT_EQ( k["embedding"]["r"], 9 );
  EXPECT_TRUE( k["embedding"]["verify"]["total"].get<bool>() );

  auto const pla = run( { "gen", "rgs", "3", "--format", "pla" } );
  auto const p = parse_pla( pla.out );
  big_uint count = 0;
  for ( auto const& e : p.entries )
    count += e.input.num_minterms();
  EXPECT_EQ( count, 5 );

  auto const dot = run( { "gen", "redundancy", "2", "2", "--format", "dot" } );
  EXPECT_EQ( dot.out.rfind( "digraph", 0 ), 0u );
}

TEST( cli, random_generator_uses_seed )
{
  auto const a = run( { "gen", "random", "--seed", "5", "--inputs", "6", "--outputs", "3", "--cubes", "9" } );
  auto const b = run( { "--seed", "5", "gen", "random", "--inputs", "6", "--outputs", "3", "--cubes", "9" } );
  auto const c = run( { "gen", "random", "--seed", "6", "--inputs", "6", "--outputs", "3", "--cubes", "9" } );
  ASSERT_EQ( a.code, cli::exit_ok ) << a.err;
  EXPECT_EQ( a.out, b.out );
  EXPECT_NE( a.out, c.out );
  EXPECT_EQ( parse_pla( a.out ).entries.size(), 9u );
}

TEST( cli, bench_table )
{
  auto const r = run( { "bench", REVEMB_FIXTURES } );
  ASSERT_EQ( r.code, cli::exit_ok ) << r.err;
  EXPECT_NE( r.out.find( "under_approx" ), std::string::npos );
  auto const j = run( { "bench", REVEMB_FIXTURES, "--format", "json" } );
  auto const rows = nlohmann::json::parse( j.out );
  bool found = false;
  for ( auto const& row : rows )
  {
    if ( row["name"] == "running_example" )
    {
      found = true;
      EXPECT_EQ( row["bennett"], 8 );
      EXPECT_EQ( row["heuristic"], 7 );
      EXPECT_EQ( row["exact"], 7 );
    }
  }
  EXPECT_TRUE( found );
}

TEST( cli, exit_codes )
{
  EXPECT_EQ( run( {} ).code, cli::exit_usage );
  EXPECT_EQ( run( { "lines", "--bogus", fixture( "running_example.pla" ) } ).code, cli::exit_usage );
  EXPECT_EQ( run( { "lines", "/nonexistent.pla" } ).code, cli::exit_usage );
  EXPECT_EQ( run( { "lines", "--method", "magic", fixture( "running_example.pla" ) } ).code, cli::exit_usage );
  EXPECT_EQ( run( { "embed", fixture( "running_example.pla" ) } ).code, cli::exit_usage );
  EXPECT_EQ( run( { "embed", "--exact", "--bennett", fixture( "running_example.pla" ) } ).code, cli::exit_usage );
  EXPECT_EQ( run( { "--help" } ).code, cli::exit_ok );
  EXPECT_EQ( run( { "--max-nodes", "20", "gen", "rgs", "6" } ).code, cli::exit_resource );
  EXPECT_EQ( run( { "--timeout", "0.000001", "gen", "rgs", "15", "--embed" } ).code, cli::exit_resource );

  auto const path = temp_path( "broken.pla" );
  std::ofstream( path ) << ".i 2\n.o 1\n1 1\n";
  auto const broken = run( { "lines", path } );
  EXPECT_EQ( broken.code, cli::exit_usage );
  EXPECT_NE( broken.err.find( "line 3" ), std::string::npos );
  std::filesystem::remove( path );
}

TEST( cli, output_dont_care_warning )
{
  auto const path = temp_path( "dc.pla" );
  std::ofstream( path ) << ".i 2\n.o 2\n1- 1-\n01 ~1\n";
  auto const r = run( { "lines", path } );
  EXPECT_EQ( r.code, cli::exit_ok );
  EXPECT_NE( r.err.find( "warning" ), std::string::npos );
  std::filesystem::remove( path );
}
