#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hfq/hankel.hpp"

namespace hfq {

/// Splits on commas that are not inside brackets.
std::vector<std::string> split_top_level(const std::string& s);

/// "2" for prime fields, "[1,2]" (residues, constant first) otherwise.
Elem parse_elem(const Field& f, const std::string& s);
/// Coefficients low-to-high, e.g. "1,0,1" for 1 + T^2.
Poly parse_poly(const Field& f, const std::string& s);
Seq parse_seq(const Field& f, const std::string& s);
/// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s);
/// Residues of a modulus, same format as a prime-field polynomial literal.
std::vector<std::uint32_t> parse_residues(const std::string& s);

}  // namespace hfq
