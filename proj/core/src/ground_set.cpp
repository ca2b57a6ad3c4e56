#include "megagreedoid/ground_set.hpp"

#include <cctype>

#include "megagreedoid/errors.hpp"
#include "megagreedoid/rational.hpp"

namespace mg {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (size() > kMaxSize) {
    throw MalformedInput("ground set has " + std::to_string(size()) +
                         " elements; the supported maximum is " + std::to_string(kMaxSize));
  }
  for (int i = 0; i < size(); ++i) {
    const std::string& l = labels_[static_cast<std::size_t>(i)];
    if (l.empty()) throw MalformedInput("ground set labels must be nonempty");
    if (!index_.emplace(l, i).second) throw MalformedInput("duplicate ground label '" + l + "'");
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroundSet::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw MalformedInput("unknown label '" + std::string(label) + "'");
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) {
    const int i = require_index(l);
    if (s.contains(i)) throw MalformedInput("label '" + l + "' repeated in a set");
    s = s.with(i);
  }
  return s;
}

GroundSet GroundSet::sub(Subset s) const {
  std::vector<std::string> out;
  for (int i : s.elements()) out.push_back(label(i));
  return GroundSet(std::move(out));
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw MalformedInput("not a rational number: '" + original + "'");
  }
  const Integer d(std::string{den});
  if (d == 0) throw MalformedInput("zero denominator in '" + original + "'");
  Rational value(Integer(std::string{num}), d);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (is_integer(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace mg
