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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <revemb/benchgen.hpp>
#include <revemb/dsop.hpp>
#include <revemb/embedding.hpp>
#include <revemb/json_io.hpp>
#include <revemb/line_count.hpp>
#include <revemb/oracle.hpp>
#include <revemb/pla.hpp>
#include <revemb/random.hpp>

namespace revemb::cli
{

namespace
{

using clock_type = std::chrono::steady_clock;

struct global_options
{
  double timeout{ 5000.0 };
  std::size_t max_nodes{ 0 };
  uint64_t seed{ 1 };
};

resource_limits limits_from( global_options const& g )
{
  resource_limits limits;
  limits.max_nodes = g.max_nodes;
  if ( g.timeout > 0 )
  {
    limits.deadline = clock_type::now() + std::chrono::duration_cast<clock_type::duration>( std::chrono::duration<double>( g.timeout ) );
  }
  return limits;
}

pla load( std::string const& path, std::ostream& err )
{
  auto p = read_pla_file( path );
  if ( p.saw_output_dont_cares )
  {
    err << "warning: " << path << ": output don't cares ('-' or '~') are read as 'not in set'\n";
  }
  return p;
}

void emit( std::string const& text, std::string const& path, std::ostream& out )
{
  if ( path.empty() || path == "-" )
  {
    out << text;
    return;
  }
  std::ofstream file( path );
  if ( !file )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  file << text;
}

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

std::string format_report( verify_report const& r )
{
  std::ostringstream os;
  os << "functional=" << r.functional << " injective=" << r.injective << " total=" << r.total << " projects=" << r.projects
     << " total_on_constant_plane=" << r.total_on_constant_plane;
  return os.str();
}

/*! \brief Whether the checks expected for this kind of embedding all hold. */
bool acceptable( rc_bdd const& rc, verify_report const& r, bool with_offset )
{
  if ( !r.functional || !r.injective || !r.projects )
  {
    return false;
  }
  if ( !rc.partial )
  {
    return r.total;
  }
  return !with_offset || r.total_on_constant_plane;
}

/*! \brief PLA with one row per path of `f`. */
pla paths_to_pla( bdd_manager& mgr, bdd const& f, std::vector<var_id> const& inputs, std::size_t max_rows )
{
  pla p;
  p.num_inputs = static_cast<uint32_t>( inputs.size() );
  p.num_outputs = 1;
  std::vector<uint32_t> position( mgr.num_vars() );
  for ( auto i = 0u; i < inputs.size(); ++i )
  {
    position[inputs[i]] = i;
    p.input_names.push_back( mgr.name( inputs[i] ) );
  }
  p.output_names.push_back( "f" );
  output_set on( 1 );
  on.insert( 0 );
  mgr.foreach_path( f, [&]( auto const& path ) {
    if ( p.entries.size() >= max_rows )
    {
      throw resource_exhausted( "more than " + std::to_string( max_rows ) + " rows" );
    }
    cube c( p.num_inputs );
    for ( auto const& [v, value] : path )
    {
      c.set( position[v], value ? polarity::one : polarity::zero );
    }
    p.entries.push_back( { std::move( c ), on } );
  } );
  p.dsop_certified = true;
  return p;
}

/* ---------------------------------------------------------------- lines */

struct lines_options
{
  std::string file;
  std::string method{ "exact-bdd" };
  std::string format{ "json" };
};

int cmd_lines( lines_options const& o, std::ostream& out, std::ostream& err )
{
  auto const p = load( o.file, err );
  line_report report;
  if ( o.method == "heuristic" )
    report = heuristic_mu( p );
  else if ( o.method == "exact-cube" )
    report = exact_mu_cube( p );
  else if ( o.method == "exact-bdd" )
    report = exact_mu_bdd( p );
  else
    report = brute_mu( p );

  if ( o.format == "json" )
  {
    out << to_json( report ).dump( 2 ) << '\n';
    return exit_ok;
  }
  out << "method " << to_string( report.method ) << ( report.exact ? " (exact)" : " (estimate)" ) << '\n';
  for ( auto const& [pattern, count] : report.per_pattern )
  {
    out << "  " << pattern.to_string() << "  " << count << '\n';
  }
  out << "mu " << report.mu << "  ell " << report.ell << "  total " << report.total_lines << '\n';
  return exit_ok;
}

/* ----------------------------------------------------------------- dsop */

struct dsop_options
{
  std::string file;
  std::string output;
  bool compact{ false };
  bool check{ false };
};

int cmd_dsop( dsop_options const& o, std::ostream& out, std::ostream& err )
{
  auto const p = load( o.file, err );
  auto result = dsop( p );
  if ( o.compact )
  {
    result = post_compact( result );
  }
  if ( o.check && !brute_dsop_check( result, p ) )
  {
    err << "error: disjoint form does not match the input\n";
    return exit_verify;
  }
  emit( write_pla( result ), o.output, out );
  return exit_ok;
}

/* ---------------------------------------------------------------- embed */

struct embed_options
{
  std::string file;
  std::string output;
  std::string format{ "json" };
  bool exact{ false };
  bool bennett{ false };
  bool with_offset{ false };
  bool verify{ false };
  bool brute{ false };
};

/*! \brief Runs the requested checks; returns the JSON fragment and whether everything passed. */
std::pair<nlohmann::json, bool> check_embedding( rc_bdd const& rc, std::span<bdd const> functions, bool with_offset, bool brute, std::ostream& err )
{
  auto const report = verify( rc, functions );
  auto j = to_json( rc, report );
  bool ok = acceptable( rc, report, with_offset );
  err << "verify: " << format_report( report ) << '\n';
  if ( brute )
  {
    auto const b = brute_verify( rc, functions );
    j["brute"] = to_json( b.checks );
    j["brute"]["pairs"] = b.num_pairs;
    err << "brute:  " << format_report( b.checks ) << " pairs=" << b.num_pairs << '\n';
    if ( !( b.checks == report ) )
    {
      err << "error: pointwise and symbolic checks disagree\n";
      ok = false;
    }
  }
  return { j, ok };
}

int cmd_embed( embed_options const& o, std::ostream& out, std::ostream& err )
{
  auto const p = load( o.file, err );
  rc_bdd rc;
  if ( o.bennett )
  {
    rc = embed_bennett( p );
  }
  else
  {
    rc = embed_exact( dsop( o.with_offset ? complete_offset( p ) : p ) );
  }
  auto const functions = to_functions( p, *rc.manager, rc.inputs );

  nlohmann::json summary = to_json( rc );
  bool ok = true;
  if ( o.verify || o.brute )
  {
    std::tie( summary, ok ) = check_embedding( rc, functions, o.with_offset, o.brute, err );
  }

  if ( o.format == "pla" )
    emit( write_embedding_pla( rc ), o.output, out );
  else if ( o.format == "dot" )
    emit( rc.manager->to_dot( std::span<bdd const>( &rc.chi, 1 ), { "chi" } ), o.output, out );
  else
    emit( summary.dump( 2 ) + '\n', o.output, out );

  return ok ? exit_ok : exit_verify;
}

/* --------------------------------------------------------------- verify */

int cmd_verify( embed_options o, std::ostream& out, std::ostream& err )
{
  o.verify = true;
  o.format = "json";
  return cmd_embed( o, out, err );
}

/* ------------------------------------------------------------------ gen */

struct gen_options
{
  std::string family;
  uint32_t p{ 0 };
  uint32_t q{ 0 };
  uint32_t num_inputs{ 4 };
  uint32_t num_outputs{ 2 };
  uint32_t num_cubes{ 6 };
  std::string format{ "json" };
  std::string output;
  bool embed{ false };
  bool brute{ false };
};

int cmd_gen( gen_options const& o, global_options const& g, std::ostream& out, std::ostream& err )
{
  if ( o.family == "random" )
  {
    std::mt19937_64 rng( g.seed );
    emit( write_pla( random_pla( o.num_inputs, o.num_outputs, o.num_cubes, rng ) ), o.output, out );
    return exit_ok;
  }

  bdd_manager mgr;
  auto const start = clock_type::now();
  auto const generated = o.family == "redundancy" ? redundancy( mgr, o.p, o.q ) : restricted_growth( mgr, o.p );
  auto const& f = generated.function;
  auto const n = static_cast<uint32_t>( generated.inputs.size() );
  double const generation_time = seconds_since( start );

  if ( o.format == "dot" && !o.embed )
  {
    emit( mgr.to_dot( std::span<bdd const>( &f, 1 ), { "f" } ), o.output, out );
    return exit_ok;
  }
  if ( o.format == "pla" && !o.embed )
  {
    emit( write_pla( paths_to_pla( mgr, f, generated.inputs, std::size_t( 1 ) << 20 ) ), o.output, out );
    return exit_ok;
  }

  nlohmann::json j = { { "family", o.family },
                       { "p", o.p },
                       { "n", n },
                       { "support", mgr.support( f ).size() },
                       { "nodes", mgr.node_count( f ) },
                       { "sat_count", mgr.sat_count( f, mgr.num_vars() ).str() },
                       { "seconds", generation_time } };
  if ( o.family == "redundancy" )
  {
    j["q"] = o.q;
  }
  if ( !o.embed )
  {
    emit( j.dump( 2 ) + '\n', o.output, out );
    return exit_ok;
  }

  auto const embed_start = clock_type::now();
  std::vector<bdd> functions{ f };
  auto const rc = embed_bennett( functions, generated.inputs );
  double const embed_time = seconds_since( embed_start );

  if ( o.format == "dot" )
  {
    emit( rc.manager->to_dot( std::span<bdd const>( &rc.chi, 1 ), { "chi" } ), o.output, out );
    return exit_ok;
  }
  if ( o.format == "pla" )
  {
    emit( write_embedding_pla( rc ), o.output, out );
    return exit_ok;
  }

  auto [summary, ok] = check_embedding( rc, rc.functions, false, o.brute, err );
  summary["manager_variables"] = rc.manager->num_vars();
  summary["seconds"] = embed_time;
  j["embedding"] = summary;
  emit( j.dump( 2 ) + '\n', o.output, out );
  return ok ? exit_ok : exit_verify;
}

/* ---------------------------------------------------------------- bench */

struct bench_options
{
  std::string directory;
  std::string format{ "text" };
};

int cmd_bench( bench_options const& o, global_options const& g, std::ostream& out, std::ostream& err )
{
  namespace fs = std::filesystem;
  if ( !fs::is_directory( o.directory ) )
  {
    throw std::runtime_error( "not a directory: " + o.directory );
  }
  std::vector<fs::path> files;
  for ( auto const& entry : fs::directory_iterator( o.directory ) )
  {
    if ( entry.is_regular_file() && entry.path().extension() == ".pla" )
    {
      files.push_back( entry.path() );
    }
  }
  std::sort( files.begin(), files.end() );

  auto rows = nlohmann::json::array();
  for ( auto const& path : files )
  {
    nlohmann::json row = { { "name", path.stem().string() } };
    try
    {
      auto const p = load( path.string(), err );
      row["n"] = p.num_inputs;
      row["m"] = p.num_outputs;
      row["bennett"] = upper_bound_total( p.num_inputs, p.num_outputs );

      auto timed = [&]( auto&& fn, char const* key ) {
        limits_scope scope( limits_from( g ) );
        auto const start = clock_type::now();
        try
        {
          auto const report = fn( p );
          row[key] = report.total_lines;
          row[std::string( key ) + "_mu"] = report.mu.str();
        }
        catch ( resource_exhausted const& )
        {
          row[key] = nullptr;
        }
        row[std::string( key ) + "_seconds"] = seconds_since( start );
      };
      timed( []( pla const& x ) { return heuristic_mu( x ); }, "heuristic" );
      timed( []( pla const& x ) { return exact_mu_bdd( x ); }, "exact" );
    }
    catch ( pla_parse_error const& e )
    {
      row["error"] = "line " + std::to_string( e.line() ) + ": " + e.what();
    }
    rows.push_back( row );
  }

  if ( o.format == "json" )
  {
    out << rows.dump( 2 ) << '\n';
    return exit_ok;
  }

  auto cell = []( nlohmann::json const& row, char const* key ) -> std::string {
    if ( !row.contains( key ) )
      return "-";
    if ( row[key].is_null() )
      return "TO";
    if ( row[key].is_number_float() )
    {
      std::ostringstream os;
      os << std::fixed << std::setprecision( 3 ) << row[key].get<double>();
      return os.str();
    }
    return row[key].is_string() ? row[key].get<std::string>() : row[key].dump();
  };
  std::size_t width = 4;
  for ( auto const& row : rows )
  {
    width = std::max( width, row["name"].get<std::string>().size() );
  }
  auto const name_width = static_cast<int>( width + 2 );
  out << std::left << std::setw( name_width ) << "name" << std::right << std::setw( 5 ) << "n" << std::setw( 5 ) << "m" << std::setw( 9 )
      << "bennett" << std::setw( 11 ) << "heuristic" << std::setw( 7 ) << "exact" << std::setw( 12 ) << "t_heur[s]" << std::setw( 12 )
      << "t_exact[s]" << '\n';
  for ( auto const& row : rows )
  {
    out << std::left << std::setw( name_width ) << row["name"].get<std::string>() << std::right << std::setw( 5 ) << cell( row, "n" )
        << std::setw( 5 ) << cell( row, "m" ) << std::setw( 9 ) << cell( row, "bennett" ) << std::setw( 11 ) << cell( row, "heuristic" )
        << std::setw( 7 ) << cell( row, "exact" ) << std::setw( 12 ) << cell( row, "heuristic_seconds" ) << std::setw( 12 )
        << cell( row, "exact_seconds" );
    if ( row.contains( "error" ) )
    {
      out << "  " << row["error"].get<std::string>();
    }
    out << '\n';
  }
  return exit_ok;
}

} // namespace

int run( int argc, char const* const* argv, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Line counts and reversible embeddings of multiple-output Boolean functions", "revemb" };
  app.require_subcommand( 1 );
  app.fallthrough();

  global_options global;
  app.add_option( "--timeout", global.timeout, "Time limit in seconds (0 disables)" )->capture_default_str()->check( CLI::NonNegativeNumber );
  app.add_option( "--max-nodes", global.max_nodes, "Node budget per BDD manager (0 is unbounded)" )->capture_default_str();
  app.add_option( "--seed", global.seed, "Seed for randomized generators" )->capture_default_str();

  lines_options lines;
  auto* lines_cmd = app.add_subcommand( "lines", "Count the additional lines needed to embed a PLA" );
  lines_cmd->add_option( "file", lines.file, "PLA file" )->required()->check( CLI::ExistingFile );
  lines_cmd->add_option( "--method", lines.method, "Counting method" )
      ->capture_default_str()
      ->check( CLI::IsMember( { "heuristic", "exact-cube", "exact-bdd", "brute" } ) );
  lines_cmd->add_option( "--format", lines.format, "Output format" )->capture_default_str()->check( CLI::IsMember( { "json", "text" } ) );

  dsop_options ds;
  auto* dsop_cmd = app.add_subcommand( "dsop", "Rewrite a PLA with pairwise disjoint cubes" );
  dsop_cmd->add_option( "file", ds.file, "PLA file" )->required()->check( CLI::ExistingFile );
  dsop_cmd->add_option( "-o,--output", ds.output, "Output file (default: stdout)" );
  dsop_cmd->add_flag( "--compact", ds.compact, "Re-derive the cubes of each output pattern from a BDD" );
  dsop_cmd->add_flag( "--check", ds.check, "Check disjointness and equivalence by enumeration" );

  embed_options em;
  auto* embed_cmd = app.add_subcommand( "embed", "Embed a PLA into a reversible function" );
  embed_cmd->add_option( "file", em.file, "PLA file" )->required()->check( CLI::ExistingFile );
  auto* exact_flag = embed_cmd->add_flag( "--exact", em.exact, "Cube-based embedding with the minimal number of lines" );
  auto* bennett_flag = embed_cmd->add_flag( "--bennett", em.bennett, "Bennett embedding on n + m lines" );
  exact_flag->excludes( bennett_flag );
  embed_cmd->add_flag( "--with-offset", em.with_offset, "Also specify the OFF-set (exact embedding only)" )->excludes( bennett_flag );
  embed_cmd->add_flag( "--verify", em.verify, "Check the embedding symbolically" );
  embed_cmd->add_flag( "--brute", em.brute, "Also check the embedding pointwise" );
  embed_cmd->add_option( "--format", em.format, "Output format" )->capture_default_str()->check( CLI::IsMember( { "json", "pla", "dot" } ) );
  embed_cmd->add_option( "-o,--output", em.output, "Output file (default: stdout)" );

  embed_options ver;
  auto* verify_cmd = app.add_subcommand( "verify", "Embed a PLA and report the verification checks as JSON" );
  verify_cmd->add_option( "file", ver.file, "PLA file" )->required()->check( CLI::ExistingFile );
  auto* ver_exact = verify_cmd->add_flag( "--exact", ver.exact, "Cube-based embedding" );
  auto* ver_bennett = verify_cmd->add_flag( "--bennett", ver.bennett, "Bennett embedding" );
  ver_exact->excludes( ver_bennett );
  verify_cmd->add_flag( "--with-offset", ver.with_offset, "Also specify the OFF-set" )->excludes( ver_bennett );
  verify_cmd->add_flag( "--brute", ver.brute, "Also check pointwise" );

  gen_options gen;
  auto* gen_cmd = app.add_subcommand( "gen", "Generate benchmark functions" );
  gen_cmd->require_subcommand( 1 );
  auto add_gen_common = [&]( CLI::App* cmd ) {
    cmd->add_option( "--format", gen.format, "Output format" )->capture_default_str()->check( CLI::IsMember( { "json", "dot", "pla" } ) );
    cmd->add_option( "-o,--output", gen.output, "Output file (default: stdout)" );
    cmd->add_flag( "--embed", gen.embed, "Feed the function into the Bennett embedding" );
    cmd->add_flag( "--brute", gen.brute, "Check the embedding pointwise (small instances only)" );
  };
  auto* gen_red = gen_cmd->add_subcommand( "redundancy", "Two-level redundancy function on p + p*q variables" );
  gen_red->add_option( "p", gen.p, "Rows" )->required()->check( CLI::PositiveNumber );
  gen_red->add_option( "q", gen.q, "Columns" )->required()->check( CLI::PositiveNumber );
  add_gen_common( gen_red );
  auto* gen_rgs = gen_cmd->add_subcommand( "rgs", "Restricted growth sequence indicator on p(p+1)/2 variables" );
  gen_rgs->add_option( "p", gen.p, "Sequence length" )->required()->check( CLI::PositiveNumber );
  add_gen_common( gen_rgs );
  auto* gen_rand = gen_cmd->add_subcommand( "random", "Random PLA (uses --seed)" );
  gen_rand->add_option( "--inputs", gen.num_inputs, "Inputs" )->capture_default_str()->check( CLI::Range( 1u, 64u ) );
  gen_rand->add_option( "--outputs", gen.num_outputs, "Outputs" )->capture_default_str()->check( CLI::Range( 1u, 64u ) );
  gen_rand->add_option( "--cubes", gen.num_cubes, "Cubes" )->capture_default_str();
  gen_rand->add_option( "-o,--output", gen.output, "Output file (default: stdout)" );

  bench_options bench;
  auto* bench_cmd = app.add_subcommand( "bench", "Line counts for every .pla file in a directory" );
  bench_cmd->add_option( "directory", bench.directory, "Directory with PLA files" )->required();
  bench_cmd->add_option( "--format", bench.format, "Output format" )->capture_default_str()->check( CLI::IsMember( { "text", "json" } ) );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  if ( ( embed_cmd->parsed() && !em.exact && !em.bennett ) || ( verify_cmd->parsed() && !ver.exact && !ver.bennett ) )
  {
    err << "error: one of --exact or --bennett is required\n";
    return exit_usage;
  }

  try
  {
    if ( bench_cmd->parsed() )
    {
      return cmd_bench( bench, global, out, err );
    }

    limits_scope scope( limits_from( global ) );
    if ( lines_cmd->parsed() )
      return cmd_lines( lines, out, err );
    if ( dsop_cmd->parsed() )
      return cmd_dsop( ds, out, err );
    if ( embed_cmd->parsed() )
      return cmd_embed( em, out, err );
    if ( verify_cmd->parsed() )
      return cmd_verify( ver, out, err );
    if ( gen_red->parsed() )
      gen.family = "redundancy";
    else if ( gen_rgs->parsed() )
      gen.family = "rgs";
    else
      gen.family = "random";
    return cmd_gen( gen, global, out, err );
  }
  catch ( resource_exhausted const& e )
  {
    err << "error: resource limit: " << e.what() << '\n';
    return exit_resource;
  }
  catch ( pla_parse_error const& e )
  {
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  std::vector<char const*> argv{ "revemb" };
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  return run( static_cast<int>( argv.size() ), argv.data(), out, err );
}

} // namespace revemb::cli
