#pragma once

#include <string>
#include <vector>

namespace campnet::textio {

// Shortest round-trippable-ish float text; used by every CSV writer so
// repeated runs emit byte-identical files.
std::string fmt_g(double v);

std::vector<std::string> split_csv_line(const std::string& line);
std::string trim(const std::string& s);

} // namespace campnet::textio
