#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superschur {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact Laurent polynomial in q with integer coefficients.
///
/// Terms are kept as a sparse list of (exponent, coefficient) pairs sorted by
/// exponent with no stored zeros; the empty list is 0.
class LaurentPoly {
public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c); // NOLINT: integers embed as constants
  explicit LaurentPoly(const Integer &c);

  static LaurentPoly monomial(int exponent, Integer coeff = 1);
  static LaurentPoly q(int exponent = 1) { return monomial(exponent); }
  /// Builds from arbitrary (possibly unsorted / repeated / zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True if the polynomial is c*q^k for a single term.
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  /// Lowest / highest exponent; 0 for the zero polynomial.
  int low_degree() const { return terms_.empty() ? 0 : terms_.front().first; }
  int high_degree() const { return terms_.empty() ? 0 : terms_.back().first; }
  Integer coefficient(int exponent) const;
  const Integer &leading_coefficient() const { return terms_.back().second; }
  /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
  Integer content() const;

  /// Substitutes q -> q^{-1}.
  LaurentPoly bar() const;
  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  Rational evaluate(const Rational &q0) const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const Integer &c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }
  /// Total order used only for canonical containers (maps of expressions).
  friend std::strong_ordering compare(const LaurentPoly &a, const LaurentPoly &b);

  /// Exact quotient a / b in Z[q,q^{-1}] if it exists.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly &a, const LaurentPoly &b);
  /// Exact division by an integer; throws std::logic_error if inexact.
  LaurentPoly divided_by(const Integer &c) const;
  /// gcd in Z[q,q^{-1}] normalized to lowest exponent 0 and positive leading coefficient.
  static LaurentPoly gcd(const LaurentPoly &a, const LaurentPoly &b);

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// Element of Q(q) kept in canonical form: den has lowest exponent 0 and a
/// positive leading coefficient, and gcd(num, den) is a unit of Z[q,q^{-1}].
/// Equality is therefore structural.
class RatFn {
public:
  RatFn() : den_(1) {}
  RatFn(long c) : num_(c), den_(1) {} // NOLINT
  RatFn(LaurentPoly p) : num_(std::move(p)), den_(1) {} // NOLINT
  RatFn(LaurentPoly num, LaurentPoly den);
  explicit RatFn(const Rational &r);

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFn bar() const;
  RatFn inverse() const;

  RatFn operator-() const;
  RatFn &operator+=(const RatFn &rhs);
  RatFn &operator-=(const RatFn &rhs);
  RatFn &operator*=(const RatFn &rhs);
  RatFn &operator/=(const RatFn &rhs);
  friend RatFn operator+(RatFn a, const RatFn &b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn &b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn &b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn &b) { return a /= b; }
  friend bool operator==(const RatFn &a, const RatFn &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering compare(const RatFn &a, const RatFn &b);

  std::string to_string() const;

private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly quantum_integer(int n);
/// [n]! = [n][n-1]...[1]; [0]! = 1.
LaurentPoly quantum_factorial(int n);
/// Gaussian binomial [z over t] for any integer z, computed by the defining
/// product with an exact division after every factor.
LaurentPoly gaussian_binomial(int z, int t);
/// q_a-twist: substitutes q -> q^{-1} when `odd`.
LaurentPoly parity_twist(const LaurentPoly &p, bool odd);
RatFn parity_twist(const RatFn &p, bool odd);

/// Exact evaluation at q = q0. Throws std::invalid_argument for q0 in {0, 1, -1}
/// and std::domain_error when the denominator vanishes at q0.
Rational specialize(const RatFn &p, const Rational &q0);

std::string to_string(const Rational &r);

/// Ordinary binomial coefficient C(n, k); 0 when k < 0 or k > n (n >= 0).
Integer binomial(long n, long k);
/// Generalized binomial h(h-1)...(h-k+1)/k! for any integer h.
Integer binomial_signed(long h, long k);

} // namespace superschur
