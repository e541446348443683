#pragma once

#include <string>
#include <string_view>

namespace ontoscope {

/// Canonical term form: lowercased (ASCII), trimmed, internal whitespace
/// collapsed to single spaces, surrounding quotes/punctuation stripped.
/// Internal hyphens and dashes survive ("right–left" stays intact).
/// No stemming.
std::string normalize_term(std::string_view raw);

/// True when `text` starts at `pos` with one of the recognized quote marks
/// (straight or curly, single or double). `len` receives the mark's byte
/// length (curly marks are multi-byte UTF-8).
bool quote_mark_at(std::string_view text, std::size_t pos, std::size_t& len);

}  // namespace ontoscope
