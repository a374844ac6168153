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
  \file embedding.hpp
  \brief Reversible embeddings represented by characteristic functions

  An embedding of `f : B^n -> B^m` is a (possibly partial) reversible
  function `g` on `r` lines with `p` constant inputs and `ell` garbage
  outputs, `r = p + n = m + ell`.  It is stored as the characteristic
  function `chi_g(kappa, x, y, gamma)` in a manager whose order alternates
  input-side and output-side variables:

      kappa_1 < y_1 < kappa_2 < y_2 < ... < x_n < gamma_ell

  where the input side is `(kappa_1..kappa_p, x_1..x_n)` and the output
  side is `(y_1..y_m, gamma_1..gamma_ell)`.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bdd.hpp"
#include "cube.hpp"
#include "pla.hpp"

namespace revemb
{

enum class line_role : uint8_t
{
  constant,
  input,
  output,
  garbage
};

struct role_info
{
  line_role role;
  uint32_t index; /* 0-based within the role */
};

struct rc_bdd
{
  std::shared_ptr<bdd_manager> manager;
  bdd chi;

  uint32_t num_inputs{ 0 };    /* n */
  uint32_t num_outputs{ 0 };   /* m */
  uint32_t num_garbage{ 0 };   /* ell */
  uint32_t num_constants{ 0 }; /* p */
  uint32_t num_lines{ 0 };     /* r */
  bool partial{ false };

  std::vector<var_id> constants;
  std::vector<var_id> inputs;
  std::vector<var_id> outputs;
  std::vector<var_id> garbage;

  /*! \brief Role of every manager variable, indexed by variable. */
  std::vector<role_info> roles;

  /*! \brief The embedded functions over `inputs`, in `manager`. */
  std::vector<bdd> functions;

  /*! \brief `constants` followed by `inputs`. */
  std::vector<var_id> input_side() const;
  /*! \brief `outputs` followed by `garbage`. */
  std::vector<var_id> output_side() const;
};

/*! \brief Creates an empty `rc_bdd` with the interleaved variable order. */
rc_bdd make_rc_layout( uint32_t num_inputs, uint32_t num_outputs, uint32_t num_garbage, uint32_t num_constants,
                       std::vector<std::string> const& input_names = {}, std::vector<std::string> const& output_names = {} );

/*! \brief Minterm over `outputs`: positive literal for members of `o`, negative otherwise. */
bdd cube_of( output_set const& o, bdd_manager& mgr, std::span<var_id const> outputs );

/*! \brief One increment of the integer `vars[w-1] ... vars[0]`: `s_i = x_i xor AND_{j<i} x_j`. */
std::vector<bdd> inc_once( std::span<bdd const> vars );

/*! \brief `times`-fold increment, i.e. addition of `times` modulo `2^w`. */
std::vector<bdd> inc( std::span<bdd const> vars, big_uint const& times );

/*! \brief Per-entry record of the cube-based construction. */
struct embed_step
{
  cube input;
  output_set outputs;
  big_uint offset_before;
  big_uint offset_after;
};

struct embed_trace
{
  big_uint mu;
  std::vector<embed_step> steps;
};

/*! \brief Exact cube-based embedding of a disjoint PLA.

  `ell` is taken from the exact line count of `p`.  Every entry `(c, o)`
  contributes

      c(x) & cube_of(o) & !kappa & AND_i (gamma_i <-> s_i)

  with `s = inc^q(x_d1, ..., x_dt, 0, ..., 0)`, `d1 < ... < dt` the
  don't-care positions of `c` and `q` the number of inputs already mapped
  to `o`.  Inputs sharing an output pattern therefore get consecutive
  garbage values starting at 0.  The result is partial: only the
  `kappa = 0` plane restricted to the listed cubes is specified.

  Throws `std::invalid_argument` unless `p.dsop_certified`.
*/
rc_bdd embed_exact( pla const& p, embed_trace* trace = nullptr );

/*! \brief Bennett embedding `y_i = kappa_i xor f_i(x)`, `gamma_i = x_i` on `n + m` lines.

  `inputs[i]` is the source-manager variable that plays `x_{i+1}`.
*/
rc_bdd embed_bennett( std::span<bdd const> functions, std::span<var_id const> inputs,
                      std::vector<std::string> const& input_names = {}, std::vector<std::string> const& output_names = {} );
rc_bdd embed_bennett( pla const& p );

struct verify_report
{
  bool functional{ false };
  bool injective{ false };
  bool total{ false };
  bool projects{ false };
  bool total_on_constant_plane{ false };

  friend bool operator==( verify_report const&, verify_report const& ) = default;
};

/*! \brief Symbolic checks of an embedding against `functions` (which must live in `rc.manager` over `rc.inputs`).

  - functional: no input-side assignment relates to two outputs
  - injective: no output-side assignment relates to two inputs
  - total: every input-side assignment is related
  - projects: with `kappa = 0` and garbage removed, the relation equals
    `AND_i (y_i <-> f_i)`; for partial embeddings it must be contained in it
  - total_on_constant_plane: every `x` is related when `kappa = 0`
*/
verify_report verify( rc_bdd const& rc, std::span<bdd const> functions );
inline verify_report verify( rc_bdd const& rc ) { return verify( rc, rc.functions ); }

/*! \brief Appends disjoint cubes of the OFF-set with an empty output set. */
pla complete_offset( pla const& p );

/*! \brief Embedding as a PLA over the `kappa = 0` plane: `p` constant columns written as `0`, `ell` garbage columns.

  Throws `resource_exhausted` if more than `max_rows` rows would be written.
*/
std::string write_embedding_pla( rc_bdd const& rc, std::size_t max_rows = std::size_t( 1 ) << 20 );

struct ordering_comparison
{
  std::size_t interleaved_nodes{ 0 };
  std::size_t blocked_nodes{ 0 };
};

/*! \brief Node counts of the characteristic function of a permutation of `B^k`.

  `interleaved` places `x_i` directly above `y_i`; `blocked` places all
  inputs above all outputs.
*/
ordering_comparison compare_orderings( std::span<uint32_t const> permutation, uint32_t num_lines );

} // namespace revemb
