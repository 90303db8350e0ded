#pragma once

#include "superschur/superroot.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace superschur {

/// One factor of a Kostant monomial.
///
///  - RootPower: divided power x_alpha^{(r)} (E_{a,b}^{(r)} on the quantum side)
///  - CartanBinom: binom(H_i, s) (the K-binomial [K_i; 0 over s] on the quantum side)
///  - KUnit: K_i^{+-1}, quantum only
///  - Idem: weight idempotent 1_lambda
struct KostantFactor {
  enum class Kind { RootPower, CartanBinom, KUnit, Idem };

  Kind kind = Kind::RootPower;
  Root root;      // RootPower
  int power = 0;  // RootPower: r; CartanBinom: s; KUnit: +-1
  int index = 0;  // CartanBinom / KUnit
  Weight weight;  // Idem

  static KostantFactor root_power(const Root &root, int r);
  static KostantFactor cartan_binom(int i, int s);
  static KostantFactor k_unit(int i, int exponent);
  static KostantFactor idem(Weight lambda);

  int grading() const { return kind == Kind::RootPower ? (root.parity * power) % 2 : 0; }
  std::string to_string() const;
  friend bool operator==(const KostantFactor &, const KostantFactor &) = default;
};

/// Ordered product of Kostant factors.
///
/// A divided power x^{(r)} of an odd root with r >= 2 is zero; appending one
/// turns the whole monomial into the zero monomial instead of failing.
class KostantMonomial {
public:
  KostantMonomial() = default;
  explicit KostantMonomial(std::vector<KostantFactor> factors);

  KostantMonomial &append(const KostantFactor &f);
  KostantMonomial &append(const KostantMonomial &m);
  friend KostantMonomial operator*(KostantMonomial a, const KostantMonomial &b) { return a.append(b); }

  const std::vector<KostantFactor> &factors() const { return factors_; }
  bool is_zero() const { return zero_; }
  int grading() const { return grading_; }
  std::string to_string() const;

private:
  std::vector<KostantFactor> factors_;
  int grading_ = 0;
  bool zero_ = false;
};

/// Exponents A(alpha) over positive roots; only nonzero entries are stored and
/// iteration follows the fixed row-major order of Phi^+.
class ExponentTable {
public:
  ExponentTable() = default;

  /// Throws std::invalid_argument for a negative root, a negative exponent,
  /// or an odd root with exponent above 1.
  void set(const Root &alpha, int value);
  int get(const Root &alpha) const;
  const std::map<Root, int> &entries() const { return entries_; }
  /// |A| = sum of all exponents.
  int total() const;
  /// sum_alpha A(alpha) * alpha
  Weight root_sum(std::size_t len) const;

  friend bool operator==(const ExponentTable &, const ExponentTable &) = default;
  friend auto operator<=>(const ExponentTable &, const ExponentTable &) = default;

private:
  std::map<Root, int> entries_;
};

using ContentVec = Weight;

enum class ContentFlavor { Chi, ChiL, ChiR };

/// Additive content of a monomial: x_alpha^{(r)} contributes r*eps_max(i,j)
/// (chi), r*eps_i (chi_L) or r*eps_j (chi_R); all other factors contribute 0.
ContentVec content(const KostantMonomial &mono, ContentFlavor flavor, std::size_t len);

/// e_A = prod over Phi^+ of x_alpha^{(A(alpha))}
KostantMonomial e_monomial(const ExponentTable &a);
/// f_C = prod over Phi^+ of x_{-alpha}^{(C(alpha))}
KostantMonomial f_monomial(const ExponentTable &c);

/// Element e_A 1_lambda f_C of the basis Y (and of Y_q on the quantum side).
struct BasisElement {
  ExponentTable A;
  Weight lambda;
  ExponentTable C;

  KostantMonomial monomial() const;
  std::string to_string() const;
  friend bool operator==(const BasisElement &, const BasisElement &) = default;
  friend auto operator<=>(const BasisElement &, const BasisElement &) = default;
};

/// e_A H_B f_C with B_1 = 0 and |A|+|B|+|C| <= d.
struct PElement {
  ExponentTable A;
  Weight B;
  ExponentTable C;
  friend bool operator==(const PElement &, const PElement &) = default;
  friend auto operator<=>(const PElement &, const PElement &) = default;
};

/// sum_{k=0}^{min(d,2mn)} C(2mn,k) C(m^2+n^2+d-k-1, d-k)
std::uint64_t dimension_count(const Dims &dims);

/// True iff chi(e_A f_C) <= lambda.
bool satisfies_content_condition(const ExponentTable &a, const Weight &lambda, const ExponentTable &c);

/// Y ordered by lambda (enumerate_weights order), then A, then C; exponent
/// tables are ordered lexicographically over Phi^+.
std::vector<BasisElement> enumerate_basis_Y(const Dims &dims);
/// All of P, ordered by A, then B, then C.
std::vector<PElement> enumerate_P(const Dims &dims);

BasisElement p_to_y(const PElement &p, const Dims &dims);
PElement y_to_p(const BasisElement &y, const Dims &dims);

/// All exponent tables whose content chi fits under `budget` componentwise.
std::vector<ExponentTable> enumerate_tables_within(const Dims &dims, const Weight &budget);

} // namespace superschur
