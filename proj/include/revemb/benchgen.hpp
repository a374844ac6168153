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
  \file benchgen.hpp
  \brief Benchmark function families generated directly as BDDs
*/

#pragma once

#include <cstdint>
#include <vector>

#include "bdd.hpp"

namespace revemb
{

struct generated_function
{
  bdd function;
  /*! \brief Input variables in generator order. */
  std::vector<var_id> inputs;
};

/*! \brief Two-level redundancy function `AND_j OR_i (x_i & y_ij)`.

  Reads `x` as a selection of rows of the `p x q` matrix `Y` and is true
  iff the selected rows cover every column.  Variables `x_1..x_p` are
  created first, followed by `y_1j..y_pj` for `j = 1..q`.  `mgr` must not
  contain variables yet.
*/
generated_function redundancy( bdd_manager& mgr, uint32_t p, uint32_t q );

/*! \brief Indicator of restricted growth sequences of length `p`.

  Position `j` (1-based) holds `a_j in {0, ..., j-1}` one-hot on `j`
  variables, so there are `p(p+1)/2` variables in total, all bits of
  `a_1` first.  The function is true iff every position is one-hot,
  `a_1 = 0` and `a_{j+1} <= 1 + max(a_1, ..., a_j)`.  The number of
  satisfying assignments is the Bell number `B_p`.
*/
generated_function restricted_growth( bdd_manager& mgr, uint32_t p );

} // namespace revemb
