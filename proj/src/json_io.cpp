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

#include <revemb/json_io.hpp>

#include <stdexcept>

namespace revemb
{

big_uint big_from_json( nlohmann::json const& j )
{
  return j.is_string() ? big_uint( j.get<std::string>() ) : big_uint( j.get<uint64_t>() );
}

nlohmann::json to_json( line_report const& report )
{
  auto patterns = nlohmann::json::array();
  for ( auto const& [o, count] : report.per_pattern )
  {
    auto outputs = nlohmann::json::array();
    for ( auto i : o.indices() )
    {
      outputs.push_back( i + 1 );
    }
    patterns.push_back( { { "outputs", outputs }, { "pattern", o.to_string() }, { "count", count.str() } } );
  }
  return { { "method", to_string( report.method ) },
           { "exact", report.exact },
           { "n", report.num_inputs },
           { "m", report.num_outputs },
           { "mu", report.mu.str() },
           { "ell", report.ell },
           { "total_lines", report.total_lines },
           { "patterns", patterns } };
}

nlohmann::json to_json( verify_report const& report )
{
  return { { "functional", report.functional },
           { "injective", report.injective },
           { "total", report.total },
           { "projects", report.projects },
           { "total_on_constant_plane", report.total_on_constant_plane } };
}

nlohmann::json to_json( rc_bdd const& rc, std::optional<verify_report> const& report )
{
  nlohmann::json j = { { "n", rc.num_inputs },
                       { "m", rc.num_outputs },
                       { "p", rc.num_constants },
                       { "ell", rc.num_garbage },
                       { "r", rc.num_lines },
                       { "partial", rc.partial },
                       { "nodes", rc.manager->node_count( rc.chi ) } };
  if ( report )
  {
    j["verify"] = to_json( *report );
  }
  return j;
}

line_report line_report_from_json( nlohmann::json const& j )
{
  static std::map<std::string, line_method> const methods = { { "heuristic", line_method::heuristic_cube },
                                                              { "exact-cube", line_method::exact_cube },
                                                              { "exact-bdd", line_method::exact_bdd },
                                                              { "brute", line_method::brute } };
  auto const method = methods.find( j.at( "method" ).get<std::string>() );
  if ( method == methods.end() )
  {
    throw std::invalid_argument( "unknown method in line report" );
  }
  auto const n = j.at( "n" ).get<uint32_t>();
  auto const m = j.at( "m" ).get<uint32_t>();
  std::map<output_set, big_uint> counts;
  for ( auto const& entry : j.at( "patterns" ) )
  {
    output_set o( m );
    for ( auto i : entry.at( "outputs" ) )
    {
      o.insert( i.get<uint32_t>() - 1u );
    }
    counts[o] = big_from_json( entry.at( "count" ) );
  }
  return make_line_report( std::move( counts ), n, m, j.at( "exact" ).get<bool>(), method->second );
}

} // namespace revemb
