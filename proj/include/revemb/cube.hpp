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
  \file cube.hpp
  \brief Input cubes and output sets of the two-level (PLA) representation
*/

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace revemb
{

using big_uint = boost::multiprecision::cpp_int;

/*! \brief Polarity of one variable in a cube (`-` is written for don't care). */
enum class polarity : uint8_t
{
  zero = 0,
  one = 1,
  dont_care = 2
};

/*! \brief Product term over a fixed number of input variables.

  Position `i` holds the polarity of input `x_{i+1}`.  The weight is the
  number of literals, and the cube covers `2^(n - weight)` assignments.
*/
class cube
{
public:
  cube() = default;

  /*! \brief Creates the all-don't-care cube over `num_vars` variables. */
  explicit cube( uint32_t num_vars );

  /*! \brief Parses a string over `{0,1,-}`; throws `std::invalid_argument` on other characters. */
  static cube from_string( std::string_view text );

  uint32_t num_vars() const { return static_cast<uint32_t>( lits_.size() ); }

  polarity operator[]( uint32_t index ) const { return lits_[index]; }
  void set( uint32_t index, polarity value ) { lits_[index] = value; }

  /*! \brief Number of literals. */
  uint32_t weight() const;

  /*! \brief Ascending indexes of don't-care positions. */
  std::vector<uint32_t> dont_cares() const;

  /*! \brief Number of covered assignments, `2^(n - weight)`. */
  big_uint num_minterms() const;

  /*! \brief Whether the full assignment (indexed like the cube) lies in the cube. */
  bool covers( std::vector<bool> const& assignment ) const;

  std::string to_string() const;

  friend bool operator==( cube const&, cube const& ) = default;
  friend auto operator<=>( cube const&, cube const& ) = default;

private:
  std::vector<polarity> lits_;
};

/*! \brief Subset of the output indexes `{0, ..., m-1}`.

  The empty set is a legal value and stands for the all-zero output pattern.
  Ordering is lexicographic on the ascending index lists, so `{} < {0} <
  {0,2} < {1}`.
*/
class output_set
{
public:
  output_set() = default;
  explicit output_set( uint32_t num_outputs );

  /*! \brief Parses an output plane; `1` marks membership, `0`, `-` and `~` do not. */
  static output_set from_plane( std::string_view plane );

  uint32_t num_outputs() const { return num_outputs_; }

  void insert( uint32_t index );
  bool contains( uint32_t index ) const;
  bool empty() const;
  uint32_t count() const;

  std::vector<uint32_t> indices() const;

  output_set& operator|=( output_set const& other );

  /*! \brief Output pattern string, first character is output 0. */
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==( output_set const&, output_set const& ) = default;
  friend bool operator<( output_set const& a, output_set const& b );

private:
  uint32_t num_outputs_{ 0 };
  std::vector<uint64_t> words_;
};

} // namespace revemb

template<>
struct std::hash<revemb::output_set>
{
  std::size_t operator()( revemb::output_set const& set ) const noexcept { return set.hash(); }
};
