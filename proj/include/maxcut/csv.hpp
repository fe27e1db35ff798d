#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace maxcut::csv {

/// RFC-4180 quoting: fields containing comma, quote, CR or LF are wrapped in
/// double quotes with embedded quotes doubled; everything else passes through.
std::string quote(std::string_view field);

/// Parses RFC-4180 text into rows of fields (quoted fields may span lines).
/// A trailing newline does not produce an empty final row.
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace maxcut::csv
