#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fatsep/instance.hpp"

namespace fatsep {

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// Text format:
///   fatsep v1 d=<d> n=<n>
///   ball <c_1> .. <c_d> <r>
///   box <low_1> .. <low_d> <high_1> .. <high_d>
/// Lines starting with '#' are comments; "# label=<text>" and "# seed=<n>"
/// carry the instance metadata. Malformed input throws ParseError.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace fatsep
