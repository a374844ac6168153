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

#include <revemb/json_io.hpp>

#include "test_util.hpp"

using namespace revemb;
using revemb::test::fixture;

TEST( json_io, line_report )
{
  auto const r = exact_mu_bdd( read_pla_file( fixture( "running_example.pla" ) ) );
  auto const j = to_json( r );
  EXPECT_EQ( j["method"], "exact-bdd" );
  EXPECT_EQ( j["mu"], "9" );
  EXPECT_EQ( j["total_lines"], 7 );
  EXPECT_EQ( j["ell"], 4 );
  EXPECT_TRUE( j["exact"].get<bool>() );
  ASSERT_EQ( j["patterns"].size(), 5u );
  EXPECT_EQ( j["patterns"][0]["outputs"], nlohmann::json::array() );
  EXPECT_EQ( j["patterns"][0]["count"], "4" );
  EXPECT_EQ( j["patterns"][2]["outputs"], ( nlohmann::json{ 1, 3 } ) );

  auto const back = line_report_from_json( j );
  EXPECT_EQ( back.per_pattern, r.per_pattern );
  EXPECT_EQ( back.mu, r.mu );
  EXPECT_EQ( back.method, r.method );
}

TEST( json_io, big_counts )
{
  EXPECT_EQ( big_from_json( "340282366920938463463374607431768211456" ), big_uint( 1 ) << 128 );
  EXPECT_EQ( big_from_json( 12 ), 12 );
}

TEST( json_io, embedding_summary )
{
  auto const rc = embed_bennett( read_pla_file( fixture( "and2.pla" ) ) );
  auto const j = to_json( rc, verify( rc ) );
  EXPECT_EQ( j["n"], 2 );
  EXPECT_EQ( j["m"], 1 );
  EXPECT_EQ( j["p"], 1 );
  EXPECT_EQ( j["ell"], 2 );
  EXPECT_EQ( j["r"], 3 );
  EXPECT_FALSE( j["partial"].get<bool>() );
  EXPECT_TRUE( j["verify"]["injective"].get<bool>() );
  EXPECT_FALSE( to_json( rc ).contains( "verify" ) );
}

TEST( json_io, malformed_input )
{
  EXPECT_THROW( line_report_from_json( nlohmann::json::object() ), nlohmann::json::exception );
  auto j = to_json( exact_mu_bdd( read_pla_file( fixture( "and2.pla" ) ) ) );
  j["method"] = "guess";
  EXPECT_THROW( line_report_from_json( j ), std::invalid_argument );
}
