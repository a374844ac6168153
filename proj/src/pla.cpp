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

#include <revemb/pla.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace revemb
{

pla_parse_error::pla_parse_error( std::size_t line, std::string const& message )
    : std::runtime_error( "line " + std::to_string( line ) + ": " + message ), line_( line )
{
}

namespace
{

std::vector<std::string_view> split_ws( std::string_view line )
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
      ++i;
    auto const start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
      ++i;
    if ( i > start )
      tokens.push_back( line.substr( start, i - start ) );
  }
  return tokens;
}

uint32_t parse_count( std::string_view token, std::size_t line_no, std::string_view directive )
{
  uint32_t value{};
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw pla_parse_error( line_no, "invalid number '" + std::string( token ) + "' for " + std::string( directive ) );
  }
  return value;
}

} // namespace

pla parse_pla( std::string_view text )
{
  pla result;
  bool have_i = false, have_o = false, ended = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while ( pos <= text.size() && !ended )
  {
    auto const eol = text.find( '\n', pos );
    auto line = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if ( auto const hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    auto const tokens = split_ws( line );
    if ( tokens.empty() )
    {
      continue;
    }

    auto const& head = tokens.front();
    if ( head[0] == '.' )
    {
      if ( head == ".i" || head == ".o" )
      {
        if ( tokens.size() != 2 )
          throw pla_parse_error( line_no, std::string( head ) + " expects one argument" );
        auto const value = parse_count( tokens[1], line_no, head );
        if ( value == 0u )
          throw pla_parse_error( line_no, std::string( head ) + " must be positive" );
        if ( !result.entries.empty() )
          throw pla_parse_error( line_no, std::string( head ) + " after cube lines" );
        if ( head == ".i" )
        {
          if ( have_i )
            throw pla_parse_error( line_no, "duplicate .i" );
          result.num_inputs = value;
          have_i = true;
        }
        else
        {
          if ( have_o )
            throw pla_parse_error( line_no, "duplicate .o" );
          result.num_outputs = value;
          have_o = true;
        }
        continue;
      }

      if ( !have_i || !have_o )
      {
        throw pla_parse_error( line_no, ".i and .o must come first" );
      }

      if ( head == ".ilb" )
      {
        if ( tokens.size() != result.num_inputs + 1 )
          throw pla_parse_error( line_no, ".ilb expects " + std::to_string( result.num_inputs ) + " names" );
        result.input_names.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( head == ".ob" )
      {
        if ( tokens.size() != result.num_outputs + 1 )
          throw pla_parse_error( line_no, ".ob expects " + std::to_string( result.num_outputs ) + " names" );
        result.output_names.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( head == ".p" )
      {
        if ( tokens.size() != 2 )
          throw pla_parse_error( line_no, ".p expects one argument" );
        parse_count( tokens[1], line_no, head );
      }
      else if ( head == ".type" )
      {
        if ( tokens.size() != 2 || tokens[1] != "fd" )
          throw pla_parse_error( line_no, "only .type fd is supported" );
      }
      else if ( head == ".e" || head == ".end" )
      {
        ended = true;
      }
      else
      {
        throw pla_parse_error( line_no, "unsupported directive " + std::string( head ) );
      }
      continue;
    }

    if ( !have_i || !have_o )
    {
      throw pla_parse_error( line_no, "missing .i/.o before cube lines" );
    }
    if ( tokens.size() != 2 )
    {
      throw pla_parse_error( line_no, "expected an input plane and an output plane" );
    }
    if ( tokens[0].size() != result.num_inputs )
    {
      throw pla_parse_error( line_no, "input plane has width " + std::to_string( tokens[0].size() ) + ", expected " + std::to_string( result.num_inputs ) );
    }
    if ( tokens[1].size() != result.num_outputs )
    {
      throw pla_parse_error( line_no, "output plane has width " + std::to_string( tokens[1].size() ) + ", expected " + std::to_string( result.num_outputs ) );
    }

    pla_entry entry;
    try
    {
      entry.input = cube::from_string( tokens[0] );
      entry.outputs = output_set::from_plane( tokens[1] );
    }
    catch ( std::invalid_argument const& e )
    {
      throw pla_parse_error( line_no, e.what() );
    }
    if ( tokens[1].find_first_of( "-~" ) != std::string_view::npos )
    {
      result.saw_output_dont_cares = true;
    }
    result.entries.push_back( std::move( entry ) );
  }

  if ( !have_i || !have_o )
  {
    throw pla_parse_error( line_no, "missing .i or .o" );
  }
  return result;
}

pla read_pla_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot read " + path );
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pla( buffer.str() );
}

std::string write_pla( pla const& p )
{
  std::ostringstream os;
  if ( p.dsop_certified )
  {
    os << "# dsop\n";
  }
  os << ".i " << p.num_inputs << "\n";
  os << ".o " << p.num_outputs << "\n";
  if ( !p.input_names.empty() )
  {
    os << ".ilb";
    for ( auto const& n : p.input_names )
      os << ' ' << n;
    os << '\n';
  }
  if ( !p.output_names.empty() )
  {
    os << ".ob";
    for ( auto const& n : p.output_names )
      os << ' ' << n;
    os << '\n';
  }
  os << ".p " << p.entries.size() << "\n";
  for ( auto const& e : p.entries )
  {
    os << e.input.to_string() << ' ' << e.outputs.to_string() << '\n';
  }
  os << ".e\n";
  return os.str();
}

std::vector<bdd> to_functions( pla const& p, bdd_manager& mgr, std::span<var_id const> inputs )
{
  std::vector<bdd> functions( p.num_outputs, mgr.bdd_false() );
  for ( auto const& e : p.entries )
  {
    if ( e.outputs.empty() )
    {
      continue;
    }
    auto const term = mgr.from_cube( e.input, inputs );
    for ( auto i : e.outputs.indices() )
    {
      functions[i] |= term;
    }
  }
  return functions;
}

std::vector<bdd> to_functions( pla const& p, bdd_manager& mgr )
{
  while ( mgr.num_vars() < p.num_inputs )
  {
    auto const i = mgr.num_vars();
    mgr.add_var( i < p.input_names.size() ? p.input_names[i] : "x" + std::to_string( i + 1 ) );
  }
  std::vector<var_id> inputs( p.num_inputs );
  for ( auto i = 0u; i < p.num_inputs; ++i )
    inputs[i] = i;
  return to_functions( p, mgr, inputs );
}

bdd off_set( std::span<bdd const> functions )
{
  if ( functions.empty() )
  {
    throw std::invalid_argument( "off_set needs at least one function" );
  }
  auto any = functions.front().manager()->bdd_false();
  for ( auto const& f : functions )
  {
    any |= f;
  }
  return ~any;
}

bdd characteristic( std::span<bdd const> functions, std::span<var_id const> outputs )
{
  if ( functions.empty() || functions.size() != outputs.size() )
  {
    throw std::invalid_argument( "characteristic needs one output variable per function" );
  }
  auto& mgr = *functions.front().manager();
  auto chi = mgr.bdd_true();
  /* deepest output first */
  for ( auto i = functions.size(); i-- > 0; )
  {
    chi &= mgr.apply( binary_op::xnor_, mgr.var( outputs[i] ), functions[i] );
  }
  return chi;
}

} // namespace revemb
