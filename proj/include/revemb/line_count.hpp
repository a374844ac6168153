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
  \file line_count.hpp
  \brief Number of additional lines needed to embed a function

  For `f : B^n -> B^m`, `mu(f)` is the number of inputs mapped to the most
  frequent output pattern.  An embedding needs `ell = ceil(log2 mu)`
  garbage outputs, i.e. `m + ell` lines in total.
*/

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "bdd.hpp"
#include "cube.hpp"
#include "pla.hpp"

namespace revemb
{

enum class line_method
{
  heuristic_cube,
  exact_cube,
  exact_bdd,
  brute
};

std::string to_string( line_method method );

struct line_report
{
  uint32_t num_inputs{ 0 };
  uint32_t num_outputs{ 0 };

  /*! \brief Occurrences per output pattern (patterns with count 0 are omitted). */
  std::map<output_set, big_uint> per_pattern;

  big_uint mu;
  uint32_t ell{ 0 };
  uint32_t total_lines{ 0 };
  bool exact{ false };
  line_method method{ line_method::heuristic_cube };
};

/*! \brief `ceil(log2 value)` with `ceil_log2(1) = 0`; `value` must be positive. */
uint32_t ceil_log2( big_uint const& value );

/*! \brief Fills `mu`, `ell` and `total_lines` from the pattern counts. */
line_report make_line_report( std::map<output_set, big_uint> per_pattern, uint32_t num_inputs, uint32_t num_outputs, bool exact, line_method method );

/*! \brief Cube-based estimate.

  Every entry adds `#on(c)` to the counter of its output set; the counter of
  the empty set is then replaced by the exact OFF-set size computed with
  BDDs.  Overlapping cubes are counted more than once, so the result is
  exact only for disjoint PLAs (and `exact` is set from `dsop_certified`).
*/
line_report heuristic_mu( pla const& p );

/*! \brief Estimate on the disjoint form of `p`, which is exact. */
line_report exact_mu_cube( pla const& p );

struct exact_bdd_params
{
  /*! \brief Maximum number of output patterns to enumerate before giving up. */
  std::size_t max_patterns{ std::size_t( 1 ) << 20 };
};

/*! \brief Exact counts from the characteristic function.

  The characteristic function is built in a private manager with all output
  variables above all input variables.  Each assignment path through the
  output levels ends in a residue over the inputs whose ON-set is the
  preimage of that output pattern.
*/
line_report exact_mu_bdd( std::span<bdd const> functions, std::span<var_id const> inputs, exact_bdd_params const& params = {} );
line_report exact_mu_bdd( pla const& p, exact_bdd_params const& params = {} );

/*! \brief Line count of the Bennett construction, `n + m`. */
uint32_t upper_bound_total( uint32_t num_inputs, uint32_t num_outputs );

} // namespace revemb
