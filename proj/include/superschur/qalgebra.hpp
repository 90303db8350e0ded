#pragma once

#include "superschur/kostant.hpp"
#include "superschur/qfield.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superschur {

/// One generator letter of U_q(gl(m|n)).
struct QLetter {
  enum class Kind { E, F, K, Kinv };
  Kind kind = Kind::E;
  int index = 1;

  QLetter inverse_image() const;
  std::string to_string() const;
  friend bool operator==(const QLetter &, const QLetter &) = default;
  friend auto operator<=>(const QLetter &, const QLetter &) = default;
};

/// Word in E_a, F_a, K_a^{+-1}. Adjacent K_a K_a^{-1} pairs cancel on append.
class QWord {
public:
  QWord() = default;
  explicit QWord(std::vector<QLetter> letters);

  QWord &append(const QLetter &l);
  QWord &append(const QWord &w);
  friend QWord operator*(QWord a, const QWord &b) { return a.append(b); }

  const std::vector<QLetter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// (#E_m + #F_m) mod 2
  int grading(const Dims &dims) const;
  std::string to_string() const;

  friend bool operator==(const QWord &, const QWord &) = default;
  friend auto operator<=>(const QWord &, const QWord &) = default;

private:
  std::vector<QLetter> letters_;
};

/// Finite linear combination of words with coefficients in Q(q); no zero
/// coefficients are stored.
class QExpr {
public:
  QExpr() = default;
  static QExpr word(const QWord &w, const RatFn &c = RatFn(1));
  static QExpr letter(QLetter l) { return word(QWord({l})); }
  static QExpr scalar(const RatFn &c) { return word(QWord(), c); }

  const std::map<QWord, RatFn> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const QWord &w, const RatFn &c);
  /// Common grading of the terms, or nothing for the zero expression.
  /// Throws std::logic_error if the terms are not homogeneous.
  std::optional<int> grading(const Dims &dims) const;

  QExpr &operator+=(const QExpr &o);
  QExpr &operator-=(const QExpr &o);
  QExpr scaled(const RatFn &c) const;
  friend QExpr operator+(QExpr a, const QExpr &b) { return a += b; }
  friend QExpr operator-(QExpr a, const QExpr &b) { return a -= b; }
  friend QExpr operator*(const QExpr &a, const QExpr &b);
  friend bool operator==(const QExpr &a, const QExpr &b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  std::map<QWord, RatFn> terms_;
};

/// q_a = q for even a and q^{-1} for odd a, raised to e.
LaurentPoly q_index(const Dims &dims, int a, int e = 1);

/// Root vector E_{a,b} expanded over generator words:
///   a > b: E_{a,c}E_{c,b} - q_c E_{c,b}E_{a,c}
///   a < b: E_{a,c}E_{c,b} - q_c^{-1} E_{c,b}E_{a,c}
/// with E_{a,a+1} = E_a and E_{a+1,a} = F_a. The default intermediate index
/// is min(a,b)+1; sub-root vectors use their own default.
/// Throws std::invalid_argument for a == b, indices out of range, or a via
/// index not strictly between a and b.
QExpr expand_root_vector(const Dims &dims, int a, int b, std::optional<int> via = std::nullopt);

/// Reverses each word and swaps E_a <-> F_a, K_a <-> K_a^{-1}. With
/// `bar_coefficients` the coefficients also go through q -> q^{-1}; that is
/// the version which respects the defining relations (see README).
QExpr antiautomorphism(const QExpr &x, bool bar_coefficients = false);

/// Factor of a structured product.
///
///  - Root: E_{a,b}^{(M)}
///  - KPow: K_{a,b}^e = (K_a K_b^{-1})^e, or K_a^e when b == 0
///  - KBinom: [K_{a,b}; c over t] (or [K_a; c over t] when b == 0), in q_a
///  - Idem: 1_lambda
struct QFactor {
  enum class Kind { Root, KPow, KBinom, Idem };
  Kind kind = Kind::Root;
  int a = 0;
  int b = 0;
  int power = 0; // Root: M; KPow: e; KBinom: t
  int shift = 0; // KBinom: c
  Weight weight; // Idem

  static QFactor root(int a, int b, int M);
  static QFactor kpow(int a, int b, int e);
  static QFactor kbinom(int a, int b, int c, int t);
  static QFactor idem(Weight lambda);

  int grading(const Dims &dims) const;
  bool trivial() const;
  std::string to_string() const;
  friend bool operator==(const QFactor &, const QFactor &) = default;
  friend auto operator<=>(const QFactor &, const QFactor &) = default;
};

struct QTerm {
  RatFn coeff = RatFn(1);
  std::vector<QFactor> factors;
  std::string to_string() const;
};

/// Sum of coefficient times ordered factor product. Kept unexpanded so that
/// evaluation can reuse one matrix per factor.
struct QSum {
  std::vector<QTerm> terms;

  QSum &add(RatFn coeff, std::vector<QFactor> factors);
  std::string to_string() const;
};

QExpr to_qexpr(const Dims &dims, const QFactor &f);
QExpr to_qexpr(const Dims &dims, const QSum &s);
/// Structured version of antiautomorphism(.., true): factor order reversed,
/// E_{a,b}^{(M)} -> E_{b,a}^{(M)}, K_{a,b}^e -> K_{a,b}^{-e}, K-binomials and
/// idempotents fixed, coefficients barred.
QSum antiautomorphism(const QSum &s);

struct IdentityInstance {
  std::string name;
  /// Family-specific parameters, e.g. {"a",1},{"b",3},{"M",2}.
  std::vector<std::pair<std::string, int>> params;
  QSum lhs;
  QSum rhs;
  std::string citation;

  std::string label() const;
};

/// Every case of every commutation family for all index patterns in
/// 1..m+n and all M, N <= max_power (odd root vectors clamped to 1), their
/// rearranged forms and their antiautomorphism images, the K-binomial
/// identities and the root-vector/idempotent exchange rules.
/// Throws std::invalid_argument if max_power < 1.
std::vector<IdentityInstance> identity_catalogue(const Dims &dims, int max_power);

using QBasisElement = BasisElement;
/// Same combinatorial set and order as enumerate_basis_Y.
std::vector<QBasisElement> enumerate_basis_Yq(const Dims &dims);
/// E_A 1_lambda F_C as a structured product over Phi^+ in row-major order.
QSum qbasis_product(const Dims &dims, const QBasisElement &y);

} // namespace superschur
