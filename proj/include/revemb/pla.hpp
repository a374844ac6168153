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
  \file pla.hpp
  \brief PLA representation of multiple-output functions

  A `pla` maps input cubes to the set of outputs each cube belongs to.  The
  output plane is read with fd semantics: a `0` only says that the cube is
  not part of that output's cover, it does not force the output to zero.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bdd.hpp"
#include "cube.hpp"

namespace revemb
{

struct pla_entry
{
  cube input;
  output_set outputs;

  friend bool operator==( pla_entry const&, pla_entry const& ) = default;
};

struct pla
{
  uint32_t num_inputs{ 0 };
  uint32_t num_outputs{ 0 };
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<pla_entry> entries;

  /*! \brief Set by transformations that guarantee pairwise disjoint input cubes. */
  bool dsop_certified{ false };

  /*! \brief Set by the parser if `-` or `~` occurred in an output plane. */
  bool saw_output_dont_cares{ false };

  /*! \brief Model equality: dimensions, names and entries (flags are not compared). */
  friend bool operator==( pla const& a, pla const& b )
  {
    return a.num_inputs == b.num_inputs && a.num_outputs == b.num_outputs && a.input_names == b.input_names &&
           a.output_names == b.output_names && a.entries == b.entries;
  }
};

class pla_parse_error : public std::runtime_error
{
public:
  pla_parse_error( std::size_t line, std::string const& message );
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

pla parse_pla( std::string_view text );
pla read_pla_file( std::string const& path );

/*! \brief Writes `.i`, `.o`, optional names, `.p`, the cube lines and `.e`.

  A `# dsop` comment line is added for certified PLAs.
*/
std::string write_pla( pla const& p );

/*! \brief One function per output over `inputs[i]` for input `i`. */
std::vector<bdd> to_functions( pla const& p, bdd_manager& mgr, std::span<var_id const> inputs );

/*! \brief Same, with input `i` mapped to variable `i` (added to `mgr` if missing). */
std::vector<bdd> to_functions( pla const& p, bdd_manager& mgr );

/*! \brief Inputs on which every function is zero. */
bdd off_set( std::span<bdd const> functions );

/*! \brief Characteristic function `AND_i (y_i <-> f_i)`.

  The placement of the `y` variables relative to the inputs is whatever the
  caller created in the manager.
*/
bdd characteristic( std::span<bdd const> functions, std::span<var_id const> outputs );

} // namespace revemb
