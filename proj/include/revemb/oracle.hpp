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
  \file oracle.hpp
  \brief Truth-table reference implementations

  Everything here enumerates assignments explicitly and is meant to check
  the symbolic algorithms on small instances.  Requests beyond the size
  limits throw `std::invalid_argument`.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "bdd.hpp"
#include "embedding.hpp"
#include "line_count.hpp"
#include "pla.hpp"

namespace revemb
{

inline constexpr uint32_t oracle_max_inputs = 20u;
inline constexpr uint64_t oracle_max_pairs = uint64_t( 1 ) << 22;

/*! \brief Output set of `p` at a full input assignment. */
output_set evaluate( pla const& p, std::vector<bool> const& x );

/*! \brief Pattern counts by enumerating all `2^n` inputs against the cubes of `p`. */
line_report brute_mu( pla const& p );

/*! \brief Pattern counts by evaluating `functions` at all `2^n` assignments of `inputs`. */
line_report brute_mu( std::span<bdd const> functions, std::span<var_id const> inputs );

struct brute_verify_report
{
  verify_report checks;
  /*! \brief Number of related (input-side, output-side) pairs. */
  uint64_t num_pairs{ 0 };
};

/*! \brief Pointwise version of `verify`, expanding every path of `rc.chi` into pairs.

  Requires `rc.num_lines <= 20` and at most `oracle_max_pairs` pairs.
*/
brute_verify_report brute_verify( rc_bdd const& rc, std::span<bdd const> functions );
inline brute_verify_report brute_verify( rc_bdd const& rc ) { return brute_verify( rc, rc.functions ); }

/*! \brief Whether the input cubes of `p` are pairwise disjoint and, if given, `p` agrees with `reference` on every input. */
bool brute_dsop_check( pla const& p, std::optional<pla> const& reference = std::nullopt );

} // namespace revemb
