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

#include <revemb/bdd.hpp>

#include <algorithm>
#include <new>
#include <sstream>
#include <unordered_set>

namespace revemb
{

namespace
{

thread_local resource_limits default_limits{};

constexpr std::size_t deadline_check_interval = 4096u;

} // namespace

limits_scope::limits_scope( resource_limits limits )
    : previous_( default_limits )
{
  default_limits = std::move( limits );
}

limits_scope::~limits_scope()
{
  default_limits = previous_;
}

resource_limits const& limits_scope::current()
{
  return default_limits;
}

void check_deadline()
{
  if ( default_limits.deadline && std::chrono::steady_clock::now() > *default_limits.deadline )
  {
    throw resource_exhausted( "timeout" );
  }
}

/* bdd handle */

var_id bdd::var() const
{
  return mgr_->var_at_level( mgr_->node_level( id_ ) );
}

uint32_t bdd::level() const
{
  return mgr_->node_level( id_ );
}

bdd bdd::low() const
{
  return { mgr_, mgr_->node_low( id_ ) };
}

bdd bdd::high() const
{
  return { mgr_, mgr_->node_high( id_ ) };
}

bdd bdd::operator~() const
{
  return mgr_->negate( *this );
}

bdd bdd::operator&( bdd const& other ) const
{
  return mgr_->apply( binary_op::and_, *this, other );
}

bdd bdd::operator|( bdd const& other ) const
{
  return mgr_->apply( binary_op::or_, *this, other );
}

bdd bdd::operator^( bdd const& other ) const
{
  return mgr_->apply( binary_op::xor_, *this, other );
}

/* manager */

bdd_manager::bdd_manager( resource_limits limits )
    : limits_( std::move( limits ) )
{
  nodes_.push_back( { terminal_level, 0u, 0u } );
  nodes_.push_back( { terminal_level, 1u, 1u } );
}

var_id bdd_manager::add_var( std::string name )
{
  auto const v = static_cast<var_id>( level_of_.size() );
  level_of_.push_back( v );
  var_at_.push_back( v );
  names_.push_back( name.empty() ? "v" + std::to_string( v ) : std::move( name ) );
  return v;
}

uint32_t bdd_manager::level_of( var_id v ) const
{
  if ( v >= level_of_.size() )
  {
    throw std::out_of_range( "unknown variable " + std::to_string( v ) );
  }
  return level_of_[v];
}

var_id bdd_manager::var_at_level( uint32_t level ) const
{
  if ( level >= var_at_.size() )
  {
    throw std::out_of_range( "no variable at level " + std::to_string( level ) );
  }
  return var_at_[level];
}

std::string const& bdd_manager::name( var_id v ) const
{
  if ( v >= names_.size() )
  {
    throw std::out_of_range( "unknown variable " + std::to_string( v ) );
  }
  return names_[v];
}

void bdd_manager::check_owner( bdd const& f ) const
{
  if ( f.manager() != this )
  {
    throw std::invalid_argument( "function belongs to a different manager" );
  }
}

uint32_t bdd_manager::make_node( uint32_t level, uint32_t low, uint32_t high )
{
  if ( low == high )
  {
    return low;
  }
  auto const key = std::make_tuple( level, low, high );
  if ( auto it = unique_.find( key ); it != unique_.end() )
  {
    return it->second;
  }
  if ( limits_.max_nodes != 0u && nodes_.size() >= limits_.max_nodes )
  {
    throw resource_exhausted( "node limit of " + std::to_string( limits_.max_nodes ) + " reached" );
  }
  if ( ++created_since_check_ >= deadline_check_interval )
  {
    created_since_check_ = 0;
    if ( limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline )
    {
      throw resource_exhausted( "timeout" );
    }
  }
  try
  {
    auto const id = static_cast<uint32_t>( nodes_.size() );
    nodes_.push_back( { level, low, high } );
    unique_.emplace( key, id );
    return id;
  }
  catch ( std::bad_alloc const& )
  {
    throw resource_exhausted( "out of memory" );
  }
}

bdd bdd_manager::var( var_id v )
{
  return wrap( make_node( level_of( v ), 0u, 1u ) );
}

bdd bdd_manager::literal( var_id v, bool positive )
{
  auto const l = level_of( v );
  return positive ? wrap( make_node( l, 0u, 1u ) ) : wrap( make_node( l, 1u, 0u ) );
}

uint32_t bdd_manager::top_level( uint32_t f, uint32_t g ) const
{
  return std::min( nodes_[f].level, nodes_[g].level );
}

std::pair<uint32_t, uint32_t> bdd_manager::split( uint32_t f, uint32_t level ) const
{
  if ( nodes_[f].level == level )
  {
    return { nodes_[f].low, nodes_[f].high };
  }
  return { f, f };
}

bdd bdd_manager::apply( binary_op op, bdd const& f, bdd const& g )
{
  check_owner( f );
  check_owner( g );
  return wrap( apply_rec( op, f.id(), g.id() ) );
}

uint32_t bdd_manager::apply_rec( binary_op op, uint32_t f, uint32_t g )
{
  switch ( op )
  {
  case binary_op::and_:
    if ( f == 0u || g == 0u )
      return 0u;
    if ( f == 1u )
      return g;
    if ( g == 1u || f == g )
      return f;
    break;
  case binary_op::or_:
    if ( f == 1u || g == 1u )
      return 1u;
    if ( f == 0u )
      return g;
    if ( g == 0u || f == g )
      return f;
    break;
  case binary_op::xor_:
    if ( f == g )
      return 0u;
    if ( f == 0u )
      return g;
    if ( g == 0u )
      return f;
    if ( f == 1u )
      return negate_rec( g );
    if ( g == 1u )
      return negate_rec( f );
    break;
  case binary_op::xnor_:
    if ( f == g )
      return 1u;
    if ( f == 1u )
      return g;
    if ( g == 1u )
      return f;
    if ( f == 0u )
      return negate_rec( g );
    if ( g == 0u )
      return negate_rec( f );
    break;
  }

  /* all four operators are commutative */
  if ( f > g )
  {
    std::swap( f, g );
  }
  auto const key = std::make_tuple( static_cast<uint32_t>( op ), f, g );
  if ( auto it = apply_cache_.find( key ); it != apply_cache_.end() )
  {
    return it->second;
  }

  auto const level = top_level( f, g );
  auto const [f0, f1] = split( f, level );
  auto const [g0, g1] = split( g, level );
  auto const low = apply_rec( op, f0, g0 );
  auto const high = apply_rec( op, f1, g1 );
  auto const result = make_node( level, low, high );
  apply_cache_.emplace( key, result );
  return result;
}

bdd bdd_manager::negate( bdd const& f )
{
  check_owner( f );
  return wrap( negate_rec( f.id() ) );
}

uint32_t bdd_manager::negate_rec( uint32_t f )
{
  if ( f < 2u )
  {
    return 1u - f;
  }
  if ( auto it = negate_cache_.find( f ); it != negate_cache_.end() )
  {
    return it->second;
  }
  auto const n = nodes_[f];
  auto const low = negate_rec( n.low );
  auto const high = negate_rec( n.high );
  auto const result = make_node( n.level, low, high );
  negate_cache_.emplace( f, result );
  negate_cache_.emplace( result, f );
  return result;
}

bdd bdd_manager::ite( bdd const& f, bdd const& g, bdd const& h )
{
  check_owner( f );
  check_owner( g );
  check_owner( h );
  return wrap( ite_rec( f.id(), g.id(), h.id() ) );
}

uint32_t bdd_manager::ite_rec( uint32_t f, uint32_t g, uint32_t h )
{
  if ( f == 1u )
    return g;
  if ( f == 0u )
    return h;
  if ( g == h )
    return g;
  if ( g == 1u && h == 0u )
    return f;
  if ( g == 0u && h == 1u )
    return negate_rec( f );
  if ( g == 1u )
    return apply_rec( binary_op::or_, f, h );
  if ( h == 0u )
    return apply_rec( binary_op::and_, f, g );

  auto const key = std::make_tuple( f, g, h );
  if ( auto it = ite_cache_.find( key ); it != ite_cache_.end() )
  {
    return it->second;
  }
  auto const level = std::min( { nodes_[f].level, nodes_[g].level, nodes_[h].level } );
  auto const [f0, f1] = split( f, level );
  auto const [g0, g1] = split( g, level );
  auto const [h0, h1] = split( h, level );
  auto const low = ite_rec( f0, g0, h0 );
  auto const high = ite_rec( f1, g1, h1 );
  auto const result = make_node( level, low, high );
  ite_cache_.emplace( key, result );
  return result;
}

bdd bdd_manager::cofactor( bdd const& f, var_id v, bool value )
{
  check_owner( f );
  auto const level = level_of( v );
  std::unordered_map<uint32_t, uint32_t> memo;
  std::function<uint32_t( uint32_t )> rec = [&]( uint32_t u ) -> uint32_t {
    auto const n = nodes_[u];
    if ( n.level > level ) /* terminals have the largest level */
    {
      return u;
    }
    if ( n.level == level )
    {
      return value ? n.high : n.low;
    }
    if ( auto it = memo.find( u ); it != memo.end() )
    {
      return it->second;
    }
    auto const low = rec( n.low );
    auto const high = rec( n.high );
    auto const result = make_node( n.level, low, high );
    memo.emplace( u, result );
    return result;
  };
  return wrap( rec( f.id() ) );
}

bdd bdd_manager::exists( bdd const& f, std::span<var_id const> vars )
{
  check_owner( f );
  std::vector<bool> quantified( num_vars(), false );
  uint32_t deepest = 0;
  for ( auto v : vars )
  {
    auto const l = level_of( v );
    quantified[l] = true;
    deepest = std::max( deepest, l + 1 );
  }
  std::unordered_map<uint32_t, uint32_t> memo;
  std::function<uint32_t( uint32_t )> rec = [&]( uint32_t u ) -> uint32_t {
    auto const n = nodes_[u];
    if ( n.level >= deepest )
    {
      return u;
    }
    if ( auto it = memo.find( u ); it != memo.end() )
    {
      return it->second;
    }
    auto const low = rec( n.low );
    uint32_t result;
    if ( quantified[n.level] )
    {
      result = low == 1u ? 1u : apply_rec( binary_op::or_, low, rec( n.high ) );
    }
    else
    {
      result = make_node( n.level, low, rec( n.high ) );
    }
    memo.emplace( u, result );
    return result;
  };
  return wrap( rec( f.id() ) );
}

bdd bdd_manager::from_cube( cube const& c, std::span<var_id const> vars )
{
  if ( vars.size() < c.num_vars() )
  {
    throw std::invalid_argument( "cube is wider than the variable mapping" );
  }
  /* build bottom-up in level order so every step is a single node creation */
  std::vector<std::pair<uint32_t, bool>> lits;
  for ( auto i = 0u; i < c.num_vars(); ++i )
  {
    if ( c[i] != polarity::dont_care )
    {
      lits.emplace_back( level_of( vars[i] ), c[i] == polarity::one );
    }
  }
  std::sort( lits.begin(), lits.end() );
  uint32_t result = 1u;
  for ( auto it = lits.rbegin(); it != lits.rend(); ++it )
  {
    result = it->second ? make_node( it->first, 0u, result ) : make_node( it->first, result, 0u );
  }
  return wrap( result );
}

bdd bdd_manager::transfer( bdd const& f, bdd_manager& dst, std::span<bdd const> images )
{
  check_owner( f );
  for ( auto const& img : images )
  {
    if ( img.valid() && img.manager() != &dst )
    {
      throw std::invalid_argument( "variable image belongs to a different manager" );
    }
  }
  std::unordered_map<uint32_t, uint32_t> memo;
  std::function<uint32_t( uint32_t )> rec = [&]( uint32_t u ) -> uint32_t {
    if ( u < 2u )
    {
      return u;
    }
    if ( auto it = memo.find( u ); it != memo.end() )
    {
      return it->second;
    }
    auto const n = nodes_[u];
    auto const v = var_at_[n.level];
    if ( v >= images.size() || !images[v].valid() )
    {
      throw std::invalid_argument( "no image for variable " + std::to_string( v ) );
    }
    auto const low = rec( n.low );
    auto const high = rec( n.high );
    auto const result = dst.ite_rec( images[v].id(), high, low );
    memo.emplace( u, result );
    return result;
  };
  return dst.wrap( rec( f.id() ) );
}

big_uint bdd_manager::sat_count( bdd const& f, uint32_t num_levels )
{
  return sat_count( f, 0u, num_levels );
}

big_uint bdd_manager::sat_count( bdd const& f, uint32_t first_level, uint32_t last_level )
{
  check_owner( f );
  if ( first_level > last_level )
  {
    throw std::invalid_argument( "empty level range" );
  }
  std::unordered_map<uint32_t, big_uint> memo;
  auto level = [&]( uint32_t u ) { return u < 2u ? last_level : nodes_[u].level; };
  std::function<big_uint( uint32_t )> rec = [&]( uint32_t u ) -> big_uint {
    if ( u < 2u )
    {
      return big_uint( u );
    }
    if ( auto it = memo.find( u ); it != memo.end() )
    {
      return it->second;
    }
    auto const n = nodes_[u];
    if ( n.level < first_level || n.level >= last_level )
    {
      throw std::invalid_argument( "function depends on a variable outside the counted support" );
    }
    big_uint const low = rec( n.low ) << ( level( n.low ) - n.level - 1 );
    big_uint const high = rec( n.high ) << ( level( n.high ) - n.level - 1 );
    auto result = low + high;
    memo.emplace( u, result );
    return result;
  };
  auto const root = rec( f.id() );
  return root << ( level( f.id() ) - first_level );
}

void bdd_manager::foreach_path( bdd const& f, std::function<void( std::vector<std::pair<var_id, bool>> const& )> const& fn )
{
  check_owner( f );
  std::vector<std::pair<var_id, bool>> path;
  std::function<void( uint32_t )> rec = [&]( uint32_t u ) {
    if ( u == 0u )
    {
      return;
    }
    if ( u == 1u )
    {
      fn( path );
      return;
    }
    auto const n = nodes_[u];
    auto const v = var_at_[n.level];
    path.emplace_back( v, false );
    rec( n.low );
    path.back().second = true;
    rec( n.high );
    path.pop_back();
  };
  rec( f.id() );
}

std::vector<cube> bdd_manager::enumerate_paths( bdd const& f, uint32_t n )
{
  std::vector<cube> result;
  foreach_path( f, [&]( auto const& path ) {
    cube c( n );
    for ( auto const& [v, value] : path )
    {
      if ( v >= n )
      {
        throw std::invalid_argument( "path decides a variable outside the first " + std::to_string( n ) );
      }
      c.set( v, value ? polarity::one : polarity::zero );
    }
    result.push_back( std::move( c ) );
  } );
  return result;
}

bool bdd_manager::eval( bdd const& f, std::vector<bool> const& assignment )
{
  check_owner( f );
  auto u = f.id();
  while ( u >= 2u )
  {
    auto const v = var_at_[nodes_[u].level];
    if ( v >= assignment.size() )
    {
      throw std::invalid_argument( "no value for variable " + std::to_string( v ) );
    }
    u = assignment[v] ? nodes_[u].high : nodes_[u].low;
  }
  return u == 1u;
}

std::vector<var_id> bdd_manager::support( bdd const& f )
{
  check_owner( f );
  std::vector<bool> seen_level( num_vars(), false );
  std::unordered_set<uint32_t> visited;
  std::vector<uint32_t> stack{ f.id() };
  while ( !stack.empty() )
  {
    auto const u = stack.back();
    stack.pop_back();
    if ( u < 2u || !visited.insert( u ).second )
    {
      continue;
    }
    seen_level[nodes_[u].level] = true;
    stack.push_back( nodes_[u].low );
    stack.push_back( nodes_[u].high );
  }
  std::vector<var_id> result;
  for ( auto l = 0u; l < seen_level.size(); ++l )
  {
    if ( seen_level[l] )
    {
      result.push_back( var_at_[l] );
    }
  }
  return result;
}

std::size_t bdd_manager::node_count( std::span<bdd const> roots ) const
{
  std::unordered_set<uint32_t> visited;
  std::vector<uint32_t> stack;
  for ( auto const& r : roots )
  {
    check_owner( r );
    stack.push_back( r.id() );
  }
  while ( !stack.empty() )
  {
    auto const u = stack.back();
    stack.pop_back();
    if ( u < 2u || !visited.insert( u ).second )
    {
      continue;
    }
    stack.push_back( nodes_[u].low );
    stack.push_back( nodes_[u].high );
  }
  return visited.size();
}

std::string bdd_manager::to_dot( std::span<bdd const> roots, std::vector<std::string> const& root_names ) const
{
  std::ostringstream os;
  os << "digraph bdd {\n";
  os << "  node [shape=circle];\n";

  std::unordered_set<uint32_t> visited;
  std::vector<uint32_t> stack;
  bool uses_false = false, uses_true = false;
  for ( auto i = 0u; i < roots.size(); ++i )
  {
    check_owner( roots[i] );
    auto const label = i < root_names.size() ? root_names[i] : "f" + std::to_string( i + 1 );
    os << "  r" << i << " [shape=plaintext,label=\"" << label << "\"];\n";
    os << "  r" << i << " -> n" << roots[i].id() << ";\n";
    stack.push_back( roots[i].id() );
  }

  std::vector<uint32_t> order;
  while ( !stack.empty() )
  {
    auto const u = stack.back();
    stack.pop_back();
    if ( u == 0u )
    {
      uses_false = true;
      continue;
    }
    if ( u == 1u )
    {
      uses_true = true;
      continue;
    }
    if ( !visited.insert( u ).second )
    {
      continue;
    }
    order.push_back( u );
    stack.push_back( nodes_[u].low );
    stack.push_back( nodes_[u].high );
  }

  /* group nodes of one level into a rank so the drawing follows the order */
  std::sort( order.begin(), order.end(), [&]( auto a, auto b ) { return std::tie( nodes_[a].level, a ) < std::tie( nodes_[b].level, b ); } );
  for ( auto i = 0u; i < order.size(); )
  {
    auto const level = nodes_[order[i]].level;
    os << "  { rank=same;";
    for ( ; i < order.size() && nodes_[order[i]].level == level; ++i )
    {
      os << " n" << order[i] << " [label=\"" << names_[var_at_[level]] << "\"];";
    }
    os << " }\n";
  }
  if ( uses_false )
  {
    os << "  n0 [shape=box,label=\"0\"];\n";
  }
  if ( uses_true )
  {
    os << "  n1 [shape=box,label=\"1\"];\n";
  }
  for ( auto u : order )
  {
    os << "  n" << u << " -> n" << nodes_[u].low << " [style=dashed];\n";
    os << "  n" << u << " -> n" << nodes_[u].high << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace revemb
