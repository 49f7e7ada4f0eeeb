#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace specsum {

/// 17 significant digits (%.17g style), '.' separator,
/// "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double value);

/// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace specsum
