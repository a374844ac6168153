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

#include <revemb/cube.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace revemb
{

cube::cube( uint32_t num_vars )
    : lits_( num_vars, polarity::dont_care )
{
}

cube cube::from_string( std::string_view text )
{
  cube result( static_cast<uint32_t>( text.size() ) );
  for ( auto i = 0u; i < text.size(); ++i )
  {
    switch ( text[i] )
    {
    case '0':
      result.lits_[i] = polarity::zero;
      break;
    case '1':
      result.lits_[i] = polarity::one;
      break;
    case '-':
      break;
    default:
      throw std::invalid_argument( "illegal cube character '" + std::string( 1, text[i] ) + "'" );
    }
  }
  return result;
}

uint32_t cube::weight() const
{
  return static_cast<uint32_t>( std::count_if( lits_.begin(), lits_.end(), []( auto p ) { return p != polarity::dont_care; } ) );
}

std::vector<uint32_t> cube::dont_cares() const
{
  std::vector<uint32_t> result;
  for ( auto i = 0u; i < lits_.size(); ++i )
  {
    if ( lits_[i] == polarity::dont_care )
    {
      result.push_back( i );
    }
  }
  return result;
}

big_uint cube::num_minterms() const
{
  return big_uint( 1 ) << ( num_vars() - weight() );
}

bool cube::covers( std::vector<bool> const& assignment ) const
{
  for ( auto i = 0u; i < lits_.size(); ++i )
  {
    if ( lits_[i] == polarity::dont_care )
    {
      continue;
    }
    if ( assignment[i] != ( lits_[i] == polarity::one ) )
    {
      return false;
    }
  }
  return true;
}

std::string cube::to_string() const
{
  std::string s( lits_.size(), '-' );
  for ( auto i = 0u; i < lits_.size(); ++i )
  {
    if ( lits_[i] != polarity::dont_care )
    {
      s[i] = lits_[i] == polarity::one ? '1' : '0';
    }
  }
  return s;
}

output_set::output_set( uint32_t num_outputs )
    : num_outputs_( num_outputs ), words_( ( num_outputs + 63 ) / 64, 0u )
{
}

output_set output_set::from_plane( std::string_view plane )
{
  output_set result( static_cast<uint32_t>( plane.size() ) );
  for ( auto i = 0u; i < plane.size(); ++i )
  {
    switch ( plane[i] )
    {
    case '1':
      result.insert( i );
      break;
    case '0':
    case '-':
    case '~':
      break;
    default:
      throw std::invalid_argument( "illegal output character '" + std::string( 1, plane[i] ) + "'" );
    }
  }
  return result;
}

void output_set::insert( uint32_t index )
{
  if ( index >= num_outputs_ )
  {
    throw std::out_of_range( "output index out of range" );
  }
  words_[index / 64] |= uint64_t( 1 ) << ( index % 64 );
}

bool output_set::contains( uint32_t index ) const
{
  return index < num_outputs_ && ( ( words_[index / 64] >> ( index % 64 ) ) & 1u );
}

bool output_set::empty() const
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
}

uint32_t output_set::count() const
{
  uint32_t c = 0;
  for ( auto w : words_ )
  {
    c += std::popcount( w );
  }
  return c;
}

std::vector<uint32_t> output_set::indices() const
{
  std::vector<uint32_t> result;
  for ( auto i = 0u; i < num_outputs_; ++i )
  {
    if ( contains( i ) )
    {
      result.push_back( i );
    }
  }
  return result;
}

output_set& output_set::operator|=( output_set const& other )
{
  if ( other.num_outputs_ != num_outputs_ )
  {
    throw std::invalid_argument( "output sets of different width" );
  }
  for ( auto i = 0u; i < words_.size(); ++i )
  {
    words_[i] |= other.words_[i];
  }
  return *this;
}

std::string output_set::to_string() const
{
  std::string s( num_outputs_, '0' );
  for ( auto i = 0u; i < num_outputs_; ++i )
  {
    if ( contains( i ) )
    {
      s[i] = '1';
    }
  }
  return s;
}

std::size_t output_set::hash() const
{
  std::size_t h = num_outputs_;
  for ( auto w : words_ )
  {
    h ^= std::hash<uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return h;
}

bool operator<( output_set const& a, output_set const& b )
{
  auto const ia = a.indices();
  auto const ib = b.indices();
  return std::lexicographical_compare( ia.begin(), ia.end(), ib.begin(), ib.end() );
}

} // namespace revemb
