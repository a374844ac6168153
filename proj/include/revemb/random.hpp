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
  \file random.hpp
  \brief Seeded random instances for tests and experiments
*/

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pla.hpp"

namespace revemb
{

/*! \brief PLA with `num_cubes` random rows.

  Each input position is `0`, `1` or `-` with equal probability; every
  output set is non-empty.
*/
pla random_pla( uint32_t num_inputs, uint32_t num_outputs, uint32_t num_cubes, std::mt19937_64& rng );

/*! \brief Uniformly random permutation of `{0, ..., 2^num_lines - 1}`. */
std::vector<uint32_t> random_permutation( uint32_t num_lines, std::mt19937_64& rng );

} // namespace revemb
