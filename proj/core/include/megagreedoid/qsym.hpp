#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "megagreedoid/rational.hpp"

namespace mg {

// A set of positions {1, ..., n-1}; bit j-1 holds position j.
class DescentSet {
 public:
  constexpr DescentSet() = default;
  DescentSet(std::initializer_list<int> positions);
  static constexpr DescentSet from_mask(std::uint32_t mask) {
    DescentSet d;
    d.mask_ = mask;
    return d;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int j) const { return j >= 1 && ((mask_ >> (j - 1)) & 1u); }
  void insert(int j) { mask_ |= std::uint32_t{1} << (j - 1); }
  int size() const;
  int max() const;  // 0 when empty
  std::vector<int> elements() const;

  constexpr bool operator==(const DescentSet&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// "{1,3}"
std::string format(const DescentSet& d);

enum class Basis { kMonomial, kFundamental };

// Index of a basis element: F_{S,n} or M_{S,n}.
struct QsymKey {
  DescentSet set;
  int degree = 0;

  bool operator==(const QsymKey&) const = default;
};

// Degree first, then the descent set as an ascending list, lexicographically.
struct QsymKeyLess {
  bool operator()(const QsymKey& a, const QsymKey& b) const;
};

// A finite rational combination of F_{S,n} or of M_{S,n}; degrees may mix.
class QsymElement {
 public:
  using Terms = std::map<QsymKey, Rational, QsymKeyLess>;

  explicit QsymElement(Basis basis = Basis::kFundamental) : basis_(basis) {}

  static QsymElement one(Basis basis);
  static QsymElement term(Basis basis, DescentSet set, int degree, const Rational& coeff = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of the given basis element (zero when absent).
  Rational coefficient(DescentSet set, int degree) const;

  // Throws PreconditionError unless set ⊆ {1..degree-1}.
  void add(DescentSet set, int degree, const Rational& coeff);

  QsymElement& operator+=(const QsymElement& other);
  QsymElement& operator-=(const QsymElement& other);
  QsymElement& operator*=(const Rational& scalar);

  // Equality as quasisymmetric functions, converting bases when they differ.
  bool operator==(const QsymElement& other) const;

 private:
  Basis basis_;
  Terms terms_;
};

QsymElement operator+(QsymElement a, const QsymElement& b);
QsymElement operator-(QsymElement a, const QsymElement& b);

// F_{S,n} = Σ_{T ⊇ S} M_{T,n}, and its Möbius inverse.
QsymElement to_basis(const QsymElement& q, Basis target);

// Quasi-shuffle product, computed in the monomial basis. The result keeps the
// inputs' basis when they agree and is monomial otherwise.
QsymElement multiply(const QsymElement& a, const QsymElement& b);

// Dense univariate polynomial with rational coefficients, lowest degree first.
class CountingPolynomial {
 public:
  CountingPolynomial() = default;
  explicit CountingPolynomial(std::vector<Rational> coefficients);

  static CountingPolynomial constant(const Rational& c);
  // C(x + shift, k) = (x + shift)(x + shift - 1)...(x + shift - k + 1) / k!
  static CountingPolynomial binomial(long shift, int k);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational operator()(const Rational& x) const;

  CountingPolynomial& operator+=(const CountingPolynomial& other);
  friend CountingPolynomial operator*(const CountingPolynomial& a, const CountingPolynomial& b);
  friend CountingPolynomial operator*(const Rational& c, const CountingPolynomial& p);
  bool operator==(const CountingPolynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

// Number of monomials in x_1..x_n, summed with coefficients.
Rational count_specialize(const QsymElement& q, long n);
// The same count as a polynomial in n; valid at negative arguments.
CountingPolynomial specialize_poly(const QsymElement& q);

// Terms in key order, "c*F[{1,3};4]" joined by " + "; "0" when empty.
std::string render(const QsymElement& q);
// Descending powers, "c*n^k" joined by " + "; "0" when zero.
std::string render(const CountingPolynomial& p);

}  // namespace mg
