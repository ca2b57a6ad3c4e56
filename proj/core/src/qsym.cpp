#include "megagreedoid/qsym.hpp"

#include <algorithm>
#include <bit>

#include "megagreedoid/errors.hpp"

namespace mg {

DescentSet::DescentSet(std::initializer_list<int> positions) {
  for (int j : positions) {
    if (j < 1 || j > 31) throw PreconditionError("descent positions must lie in 1..31");
    insert(j);
  }
}

int DescentSet::size() const { return std::popcount(mask_); }

int DescentSet::max() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

std::vector<int> DescentSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string format(const DescentSet& d) {
  std::string out = "{";
  bool first = true;
  for (int j : d.elements()) {
    if (!first) out += ',';
    out += std::to_string(j);
    first = false;
  }
  return out + "}";
}

bool QsymKeyLess::operator()(const QsymKey& a, const QsymKey& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  const auto ea = a.set.elements();
  const auto eb = b.set.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

QsymElement QsymElement::one(Basis basis) { return term(basis, DescentSet(), 0, 1); }

QsymElement QsymElement::term(Basis basis, DescentSet set, int degree, const Rational& coeff) {
  QsymElement q(basis);
  q.add(set, degree, coeff);
  return q;
}

Rational QsymElement::coefficient(DescentSet set, int degree) const {
  auto it = terms_.find(QsymKey{set, degree});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QsymElement::add(DescentSet set, int degree, const Rational& coeff) {
  if (degree < 0 || set.max() > std::max(degree - 1, 0) || (degree == 0 && set.size() != 0)) {
    throw PreconditionError("descent set " + format(set) + " is not contained in [" +
                            std::to_string(degree - 1) + "]");
  }
  if (coeff == 0) return;
  const QsymKey key{set, degree};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

QsymElement& QsymElement::operator+=(const QsymElement& other) {
  const QsymElement converted = to_basis(other, basis_);
  for (const auto& [k, c] : converted.terms_) add(k.set, k.degree, c);
  return *this;
}

QsymElement& QsymElement::operator-=(const QsymElement& other) {
  QsymElement negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

QsymElement& QsymElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

bool QsymElement::operator==(const QsymElement& other) const {
  if (basis_ == other.basis_) return terms_ == other.terms_;
  return terms_ == to_basis(other, basis_).terms_;
}

QsymElement operator+(QsymElement a, const QsymElement& b) { return a += b; }
QsymElement operator-(QsymElement a, const QsymElement& b) { return a -= b; }

QsymElement to_basis(const QsymElement& q, Basis target) {
  if (q.basis() == target) return q;
  const bool to_monomial = target == Basis::kMonomial;
  QsymElement out(target);
  for (const auto& [key, coeff] : q.terms()) {
    const int n = key.degree;
    const std::uint32_t full = n <= 1 ? 0u : (std::uint32_t{1} << (n - 1)) - 1;
    const std::uint32_t free = full & ~key.set.mask();
    // All T with S ⊆ T ⊆ [n-1].
    std::uint32_t t = 0;
    while (true) {
      const DescentSet superset = DescentSet::from_mask(key.set.mask() | t);
      Rational c = coeff;
      if (!to_monomial && (std::popcount(t) % 2 == 1)) c = -c;
      out.add(superset, n, c);
      if (t == free) break;
      t = (t - free) & free;
    }
  }
  return out;
}

namespace {

using Composition = std::vector<int>;

Composition to_composition(DescentSet set, int degree) {
  Composition c;
  int prev = 0;
  for (int j : set.elements()) {
    c.push_back(j - prev);
    prev = j;
  }
  if (degree > 0) c.push_back(degree - prev);
  return c;
}

DescentSet from_composition(const Composition& c) {
  DescentSet d;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    sum += c[i];
    d.insert(sum);
  }
  return d;
}

// Quasi-shuffles of a[i..] and b[j..], appended to `prefix`.
void quasi_shuffle(const Composition& a, std::size_t i, const Composition& b, std::size_t j,
                   Composition& prefix, std::map<Composition, Integer>& out) {
  if (i == a.size() && j == b.size()) {
    ++out[prefix];
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

// Generalized binomial C(top, k) for any integer top.
Rational binomial_value(const Integer& top, int k) {
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return Rational(num, den);
}

}  // namespace

QsymElement multiply(const QsymElement& a, const QsymElement& b) {
  const QsymElement ma = to_basis(a, Basis::kMonomial);
  const QsymElement mb = to_basis(b, Basis::kMonomial);
  QsymElement product(Basis::kMonomial);
  for (const auto& [ka, ca] : ma.terms()) {
    const Composition alpha = to_composition(ka.set, ka.degree);
    for (const auto& [kb, cb] : mb.terms()) {
      const Composition beta = to_composition(kb.set, kb.degree);
      std::map<Composition, Integer> shuffles;
      Composition prefix;
      quasi_shuffle(alpha, 0, beta, 0, prefix, shuffles);
      for (const auto& [gamma, count] : shuffles) {
        product.add(from_composition(gamma), ka.degree + kb.degree, ca * cb * Rational(count));
      }
    }
  }
  if (a.basis() == b.basis() && a.basis() != Basis::kMonomial) return to_basis(product, a.basis());
  return product;
}

CountingPolynomial::CountingPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

CountingPolynomial CountingPolynomial::constant(const Rational& c) { return CountingPolynomial({c}); }

CountingPolynomial CountingPolynomial::binomial(long shift, int k) {
  CountingPolynomial p = constant(1);
  Integer factorial = 1;
  for (int i = 0; i < k; ++i) {
    p = p * CountingPolynomial({Rational(shift - i), Rational(1)});
    factorial *= i + 1;
  }
  return Rational(1, factorial) * p;
}

Rational CountingPolynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
  return value;
}

CountingPolynomial& CountingPolynomial::operator+=(const CountingPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

CountingPolynomial operator*(const CountingPolynomial& a, const CountingPolynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return CountingPolynomial(std::move(c));
}

CountingPolynomial operator*(const Rational& c, const CountingPolynomial& p) {
  return CountingPolynomial::constant(c) * p;
}

void CountingPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational count_specialize(const QsymElement& q, long n) {
  Rational total = 0;
  for (const auto& [key, coeff] : q.terms()) {
    const int m = key.degree;
    if (m == 0) {
      total += coeff;
    } else if (q.basis() == Basis::kFundamental) {
      total += coeff * binomial_value(Integer(n + m - 1 - key.set.size()), m);
    } else {
      total += coeff * binomial_value(Integer(n), key.set.size() + 1);
    }
  }
  return total;
}

CountingPolynomial specialize_poly(const QsymElement& q) {
  CountingPolynomial total;
  for (const auto& [key, coeff] : q.terms()) {
    const int m = key.degree;
    if (m == 0) {
      total += CountingPolynomial::constant(coeff);
    } else if (q.basis() == Basis::kFundamental) {
      total += coeff * CountingPolynomial::binomial(m - 1 - key.set.size(), m);
    } else {
      total += coeff * CountingPolynomial::binomial(0, key.set.size() + 1);
    }
  }
  return total;
}

std::string render(const QsymElement& q) {
  if (q.is_zero()) return "0";
  const char tag = q.basis() == Basis::kFundamental ? 'F' : 'M';
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : q.terms()) {
    if (!first) out += " + ";
    out += to_string(coeff) + "*" + tag + "[" + format(key.set) + ";" + std::to_string(key.degree) + "]";
    first = false;
  }
  return out;
}

std::string render(const CountingPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    if (!first) out += " + ";
    out += to_string(a);
    if (k >= 1) out += "*n";
    if (k >= 2) out += "^" + std::to_string(k);
    first = false;
  }
  return out;
}

}  // namespace mg
