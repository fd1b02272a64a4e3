#include "verlinde/shorthand.hpp"

#include <cctype>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/json_io.hpp"

namespace verlinde {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 18) throw InvalidArgument("cannot parse \"" + context + "\"");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("cannot parse \"" + context + "\"");
  return std::stoull(s);
}

// "a*Xk + ..." into (a, k) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_terms(const std::string& text, char letter) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InvalidArgument("empty object");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
  if (s == "0") return terms;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = s.find('+', start);
    const std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::uint64_t coeff = 1;
    std::string body = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_uint(term.substr(0, star), term);
      body = term.substr(star + 1);
    }
    if (body.size() < 2 || std::toupper(static_cast<unsigned char>(body[0])) != letter)
      throw InvalidArgument("cannot parse term \"" + term + "\"; expected a*" + letter + "k");
    terms.emplace_back(coeff, parse_uint(body.substr(1), term));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return terms;
}

bool looks_like_json(const std::string& text) {
  const std::string s = strip_spaces(text);
  return !s.empty() && s.front() == '{';
}

}  // namespace

VerObject parse_ver_object(int p, const std::string& text) {
  require_small_prime(p);
  if (looks_like_json(text)) {
    VerObject x = ver_object_from_json(parse_json_text(text));
    if (x.p() != p) throw InvalidArgument("object is over a different p");
    return x;
  }
  VerObject x(p);
  for (const auto& [a, k] : parse_terms(text, 'L')) {
    if (k < 1 || k >= static_cast<std::uint64_t>(p)) throw InvalidArgument("simple index out of range 1..p-1 in \"" + text + "\"");
    x[static_cast<int>(k)] += a;
  }
  return x;
}

JordanType parse_jordan_type(int p, const std::string& text) {
  require_small_prime(p);
  if (looks_like_json(text)) {
    JordanType t = jordan_type_from_json(parse_json_text(text));
    if (t.p() != p) throw InvalidArgument("Jordan type is over a different p");
    return t;
  }
  JordanType t(p);
  for (const auto& [a, k] : parse_terms(text, 'J')) {
    if (k < 1 || k > static_cast<std::uint64_t>(p)) throw InvalidArgument("block size out of range 1..p in \"" + text + "\"");
    t[static_cast<int>(k)] += a;
  }
  return t;
}

Partition parse_partition(const std::string& text) {
  std::string s = strip_spaces(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    if (s.size() < 2 || (s.back() != ')' && s.back() != ']')) throw InvalidArgument("unbalanced partition \"" + text + "\"");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (!s.empty() && start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::uint64_t v = parse_uint(part, text);
    if (v > 1000000) throw InvalidArgument("partition part too large");
    parts.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace verlinde
