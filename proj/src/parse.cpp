#include "hfq/parse.hpp"

#include <cctype>
#include <charconv>

#include "hfq/error.hpp"

namespace hfq {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long long parse_int(const std::string& raw) {
  const std::string s = trim(raw);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail(Errc::ParseError, "not an integer: '" + raw + "'");
  return v;
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) fail(Errc::ParseError, "unbalanced brackets in '" + s + "'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(Errc::ParseError, "unbalanced brackets in '" + s + "'");
  out.push_back(trim(cur));
  return out;
}

Elem parse_elem(const Field& f, const std::string& raw) {
  const std::string s = trim(raw);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(Errc::ParseError, "unterminated element '" + s + "'");
    std::vector<std::uint32_t> r;
    for (const auto& part : split_top_level(s.substr(1, s.size() - 2))) {
      const long long v = parse_int(part);
      if (v < 0 || v >= f.p()) fail(Errc::ParseError, "residue out of range in '" + s + "'");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    if (r.size() > f.k()) fail(Errc::ParseError, "too many residues in '" + s + "'");
    return f.from_residues(r);
  }
  const long long v = parse_int(s);
  if (v < 0 || v >= f.p()) fail(Errc::ParseError, "residue out of range in '" + s + "'");
  return f.from_int(v);
}

Poly parse_poly(const Field& f, const std::string& s) {
  std::vector<Elem> c;
  for (const auto& part : split_top_level(s)) c.push_back(parse_elem(f, part));
  return Poly(f, std::move(c));
}

Seq parse_seq(const Field& f, const std::string& s) {
  std::vector<Elem> c;
  for (const auto& part : split_top_level(s)) c.push_back(parse_elem(f, part));
  return Seq(f, std::move(c));
}

std::pair<int, int> parse_range(const std::string& raw) {
  const std::string s = trim(raw);
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = static_cast<int>(parse_int(s));
    return {v, v};
  }
  const int a = static_cast<int>(parse_int(s.substr(0, dots)));
  const int b = static_cast<int>(parse_int(s.substr(dots + 2)));
  if (b < a) fail(Errc::ParseError, "empty range '" + s + "'");
  return {a, b};
}

std::vector<std::uint32_t> parse_residues(const std::string& s) {
  std::vector<std::uint32_t> r;
  for (const auto& part : split_top_level(s)) {
    const long long v = parse_int(part);
    if (v < 0) fail(Errc::ParseError, "negative residue in '" + s + "'");
    r.push_back(static_cast<std::uint32_t>(v));
  }
  return r;
}

}  // namespace hfq
