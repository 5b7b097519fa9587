#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbc::cli
{

/// %.<precision>g
std::string format_number(double v, int precision);

/// Comma-joined row terminated by a bare LF.
void write_row(std::ostream& os, const std::vector<std::string>& cells);

/// Parses "1,2.5, 3" into doubles; throws std::invalid_argument.
std::vector<double> parse_number_list(const std::string& text);

} // namespace rbc::cli
