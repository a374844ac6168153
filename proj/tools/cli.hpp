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
  \file cli.hpp
  \brief Command-line front end

  Exit codes: 0 success, 1 usage or input error, 2 resource limit or
  timeout, 3 verification failure.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revemb::cli
{

enum exit_code : int
{
  exit_ok = 0,
  exit_usage = 1,
  exit_resource = 2,
  exit_verify = 3
};

int run( int argc, char const* const* argv, std::ostream& out, std::ostream& err );

/*! \brief Same as `run`; `args` excludes the program name. */
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace revemb::cli
