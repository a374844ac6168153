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
  \file bdd.hpp
  \brief Reduced ordered binary decision diagrams

  A `bdd_manager` owns a canonical node store for a fixed variable order.
  Variables are identified by their creation index; each one also has a
  level (its position in the order, 0 is nearest the root).  The order is
  fixed when a variable is created and never changes.

  Nodes carry no complement marks, so two handles from the same manager are
  equal exactly when they represent the same function.
*/

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cube.hpp"

namespace revemb
{

using var_id = uint32_t;

/*! \brief Raised when a node budget or a deadline is exceeded. */
class resource_exhausted : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Budget a manager enforces while creating nodes. */
struct resource_limits
{
  /*! \brief Maximum number of stored nodes (0 means unbounded). */
  std::size_t max_nodes{ 0 };

  /*! \brief Wall-clock deadline, if any. */
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/*! \brief Limits picked up by managers created on this thread.

  Restores the previous defaults on destruction.
*/
class limits_scope
{
public:
  explicit limits_scope( resource_limits limits );
  ~limits_scope();

  limits_scope( limits_scope const& ) = delete;
  limits_scope& operator=( limits_scope const& ) = delete;

  static resource_limits const& current();

private:
  resource_limits previous_;
};

/*! \brief Throws `resource_exhausted` if the current deadline has passed. */
void check_deadline();

class bdd_manager;

/*! \brief Handle to a function stored in a `bdd_manager`. */
class bdd
{
public:
  bdd() = default;

  bdd_manager* manager() const { return mgr_; }
  uint32_t id() const { return id_; }
  bool valid() const { return mgr_ != nullptr; }

  bool is_false() const { return id_ == 0u; }
  bool is_true() const { return id_ == 1u; }
  bool is_terminal() const { return id_ < 2u; }

  /*! \brief Variable tested at the root (terminals have none). */
  var_id var() const;
  uint32_t level() const;
  bdd low() const;
  bdd high() const;

  bdd operator~() const;
  bdd operator&( bdd const& other ) const;
  bdd operator|( bdd const& other ) const;
  bdd operator^( bdd const& other ) const;
  bdd& operator&=( bdd const& other ) { return *this = *this & other; }
  bdd& operator|=( bdd const& other ) { return *this = *this | other; }
  bdd& operator^=( bdd const& other ) { return *this = *this ^ other; }

  friend bool operator==( bdd const&, bdd const& ) = default;

private:
  friend class bdd_manager;
  bdd( bdd_manager* mgr, uint32_t id ) : mgr_( mgr ), id_( id ) {}

  bdd_manager* mgr_{ nullptr };
  uint32_t id_{ 0 };
};

enum class binary_op : uint8_t
{
  and_,
  or_,
  xor_,
  xnor_
};

class bdd_manager
{
public:
  static constexpr uint32_t terminal_level = UINT32_MAX;

  explicit bdd_manager( resource_limits limits = limits_scope::current() );

  bdd_manager( bdd_manager const& ) = delete;
  bdd_manager& operator=( bdd_manager const& ) = delete;

  /*! \brief Adds a variable below all existing ones. */
  var_id add_var( std::string name = {} );

  uint32_t num_vars() const { return static_cast<uint32_t>( level_of_.size() ); }
  uint32_t level_of( var_id v ) const;
  var_id var_at_level( uint32_t level ) const;
  std::string const& name( var_id v ) const;

  bdd constant( bool value ) { return { this, value ? 1u : 0u }; }
  bdd bdd_false() { return constant( false ); }
  bdd bdd_true() { return constant( true ); }

  /*! \brief Projection function of `v`; throws `std::out_of_range` for unknown variables. */
  bdd var( var_id v );
  /*! \brief Literal of `v` with the given polarity. */
  bdd literal( var_id v, bool positive );

  bdd apply( binary_op op, bdd const& f, bdd const& g );
  bdd negate( bdd const& f );
  bdd ite( bdd const& f, bdd const& g, bdd const& h );
  bdd cofactor( bdd const& f, var_id v, bool value );
  bdd exists( bdd const& f, std::span<var_id const> vars );

  /*! \brief Conjunction of literals of `c`, input `i` mapped to `vars[i]`. */
  bdd from_cube( cube const& c, std::span<var_id const> vars );

  /*! \brief Copies `f` into `dst`, replacing each variable `v` by `images[v]`.

    `dst` may be this manager.  The images are arbitrary functions of `dst`,
    so this also performs functional composition.
  */
  bdd transfer( bdd const& f, bdd_manager& dst, std::span<bdd const> images );

  /*! \brief Number of satisfying assignments over the first `num_levels` levels.

    Throws `std::invalid_argument` if `f` depends on a variable at a deeper level.
  */
  big_uint sat_count( bdd const& f, uint32_t num_levels );

  /*! \brief Number of satisfying assignments over the levels `[first, last)`. */
  big_uint sat_count( bdd const& f, uint32_t first_level, uint32_t last_level );

  /*! \brief Calls `fn` once per path to the true terminal with the decided literals. */
  void foreach_path( bdd const& f, std::function<void( std::vector<std::pair<var_id, bool>> const& )> const& fn );

  /*! \brief One cube per path to the true terminal, variable `i < n` at cube position `i`.

    The cubes are pairwise disjoint and their union is the ON-set of `f`.
  */
  std::vector<cube> enumerate_paths( bdd const& f, uint32_t n );

  /*! \brief Evaluates `f`; `assignment` is indexed by variable. */
  bool eval( bdd const& f, std::vector<bool> const& assignment );

  /*! \brief Variables `f` depends on, in level order. */
  std::vector<var_id> support( bdd const& f );

  /*! \brief Number of distinct non-terminal nodes reachable from the given roots. */
  std::size_t node_count( std::span<bdd const> roots ) const;
  std::size_t node_count( bdd const& f ) const { return node_count( std::span<bdd const>( &f, 1 ) ); }

  /*! \brief Total number of stored nodes, terminals included. */
  std::size_t store_size() const { return nodes_.size(); }

  /*! \brief Graphviz rendering, dashed low edges and solid high edges. */
  std::string to_dot( std::span<bdd const> roots, std::vector<std::string> const& root_names = {} ) const;

  /* raw node access */
  uint32_t node_level( uint32_t id ) const { return nodes_[id].level; }
  uint32_t node_low( uint32_t id ) const { return nodes_[id].low; }
  uint32_t node_high( uint32_t id ) const { return nodes_[id].high; }

private:
  struct node
  {
    uint32_t level;
    uint32_t low;
    uint32_t high;
  };

  struct triple_hash
  {
    std::size_t operator()( std::tuple<uint32_t, uint32_t, uint32_t> const& t ) const noexcept
    {
      auto [a, b, c] = t;
      uint64_t h = a * 0x9e3779b97f4a7c15ull;
      h ^= ( b + 0x632be59bd9b4e019ull + ( h << 6 ) + ( h >> 2 ) );
      h ^= ( c + 0x85ebca77c2b2ae63ull + ( h << 6 ) + ( h >> 2 ) );
      return static_cast<std::size_t>( h );
    }
  };
  using triple_map = std::unordered_map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t, triple_hash>;

  void check_owner( bdd const& f ) const;
  bdd wrap( uint32_t id ) { return { this, id }; }
  uint32_t make_node( uint32_t level, uint32_t low, uint32_t high );

  uint32_t apply_rec( binary_op op, uint32_t f, uint32_t g );
  uint32_t negate_rec( uint32_t f );
  uint32_t ite_rec( uint32_t f, uint32_t g, uint32_t h );
  uint32_t top_level( uint32_t f, uint32_t g ) const;
  std::pair<uint32_t, uint32_t> split( uint32_t f, uint32_t level ) const;

  resource_limits limits_;
  std::size_t created_since_check_{ 0 };

  std::vector<node> nodes_;
  triple_map unique_;
  triple_map apply_cache_;
  triple_map ite_cache_;
  std::unordered_map<uint32_t, uint32_t> negate_cache_;

  std::vector<uint32_t> level_of_;
  std::vector<var_id> var_at_;
  std::vector<std::string> names_;
};

} // namespace revemb
