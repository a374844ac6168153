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
  \file json_io.hpp
  \brief JSON summaries of line reports and embeddings

  Output indexes in JSON are 1-based (`f1` is `1`).  Counts are decimal
  strings because they can exceed 64 bits.
*/

#pragma once

#include <optional>

#include <json.hpp>

#include "embedding.hpp"
#include "line_count.hpp"

namespace revemb
{

/*! \brief Reads a count written as a decimal string (plain JSON numbers are accepted too). */
big_uint big_from_json( nlohmann::json const& j );

nlohmann::json to_json( line_report const& report );
nlohmann::json to_json( verify_report const& report );

/*! \brief Dimensions of `rc`, plus the verification result if given. */
nlohmann::json to_json( rc_bdd const& rc, std::optional<verify_report> const& report = std::nullopt );

/*! \brief Inverse of `to_json( line_report )`; throws `nlohmann::json::exception` on malformed input. */
line_report line_report_from_json( nlohmann::json const& j );

} // namespace revemb
