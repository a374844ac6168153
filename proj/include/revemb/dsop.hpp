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
  \file dsop.hpp
  \brief Disjoint sum-of-products form of a PLA
*/

#pragma once

#include <optional>
#include <vector>

#include "cube.hpp"
#include "pla.hpp"

namespace revemb
{

/*! \brief Intersection of two cubes, or nothing if some position conflicts. */
std::optional<cube> cube_and( cube const& a, cube const& b );

/*! \brief Disjoint cover of `on(a) \ on(b)`.

  Positions where `b` has a literal and `a` has none are visited in
  ascending order; each one emits a cube with that literal flipped and
  fixes it to `b`'s value for the following cubes.  Returns `{a}` if the
  cubes do not intersect.
*/
std::vector<cube> cube_sharp( cube const& a, cube const& b );

/*! \brief Rewrites `p` so that no two input cubes intersect.

  Entries are taken from the front of a work list.  The first already
  placed cube that overlaps is replaced by the intersection (with the
  union of both output sets), the part of the placed cube outside the new
  one is appended to the placed list, and the remainder of the new cube is
  pushed back to the front of the work list.
*/
pla dsop( pla const& p );

/*! \brief Re-derives the cubes of each output pattern from a BDD of that pattern.

  Requires `p.dsop_certified`; throws `std::invalid_argument` otherwise.
  Groups are emitted in output-set order, cubes in path order.
*/
pla post_compact( pla const& p );

} // namespace revemb
