#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace superschur {

/// Shape of the problem: gl(m|n) acting on the d-th tensor power of V.
/// Indices run over 1..m+n; index i is even for i <= m and odd otherwise.
class Dims {
public:
  Dims(int m, int n, int d);

  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  /// m + n
  int rank() const { return m_ + n_; }
  /// (m+n)^d, the dimension of the tensor space.
  std::size_t tensor_dim() const;

  bool valid_index(int i) const { return i >= 1 && i <= rank(); }
  /// 0 for i <= m, 1 for i > m. Throws std::out_of_range for bad indices.
  int parity(int i) const;
  /// q_i exponent sign: +1 for even indices, -1 for odd ones.
  int qsign(int i) const { return parity(i) ? -1 : 1; }

  friend bool operator==(const Dims &, const Dims &) = default;
  std::string to_string() const;

private:
  int m_;
  int n_;
  int d_;
};

int parity_of_index(const Dims &dims, int i);
/// (eps_i, eps_j) = (-1)^{parity(i)} delta_ij.
int bilinear_form(const Dims &dims, int i, int j);

/// Integer tuple of length m+n giving the coefficients of eps_1..eps_{m+n}.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t len) { return Weight(std::vector<int>(len, 0)); }
  /// eps_i (1-based).
  static Weight unit(std::size_t len, int i);

  std::size_t size() const { return coords.size(); }
  int operator[](int i) const { return coords.at(static_cast<std::size_t>(i - 1)); }
  int &operator[](int i) { return coords.at(static_cast<std::size_t>(i - 1)); }
  int total() const;
  bool nonnegative() const;
  /// Member of Lambda(m|n,d): right length, nonnegative, sums to d.
  bool in_lambda(const Dims &dims) const;

  Weight &operator+=(const Weight &o);
  Weight &operator-=(const Weight &o);
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  friend Weight operator*(int k, Weight w);
  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &, const Weight &) = default;

  std::string to_string() const;
};

/// All compositions of d into m+n nonnegative parts, lexicographically descending.
std::vector<Weight> enumerate_weights(const Dims &dims);
/// Componentwise order. Throws std::invalid_argument on length mismatch.
bool weight_leq(const Weight &a, const Weight &b);

/// The root eps_i - eps_j (i != j) of gl(m|n).
struct Root {
  int i = 0;
  int j = 0;
  int parity = 0;

  Root() = default;
  Root(const Dims &dims, int i, int j);

  bool positive() const { return i < j; }
  bool odd() const { return parity != 0; }
  Root negated() const;
  Weight as_weight(std::size_t len) const;

  friend bool operator==(const Root &a, const Root &b) { return a.i == b.i && a.j == b.j; }
  friend auto operator<=>(const Root &a, const Root &b) {
    if (auto c = a.i <=> b.i; c != 0)
      return c;
    return a.j <=> b.j;
  }
  std::string to_string() const;
};

/// Positive roots in row-major (i, j) order; this is the fixed order used for
/// every ordered product over Phi^+.
std::vector<Root> positive_roots(const Dims &dims);
/// All roots, positive and negative, in row-major (i, j) order.
std::vector<Root> all_roots(const Dims &dims);
/// alpha_i = eps_i - eps_{i+1}.
Root simple_root(const Dims &dims, int i);
/// Pairing (alpha, beta) of two roots under the bilinear form.
int root_pairing(const Dims &dims, const Root &a, const Root &b);
/// True and sets `sum` if a + b is a root.
bool root_sum(const Dims &dims, const Root &a, const Root &b, Root &sum);
/// Structure constant c_{a,b} for a + b a root: 1 if a.j == b.i, and
/// -(-1)^{parity(a) parity(b)} if a.i == b.j.
int structure_constant(const Root &a, const Root &b);

} // namespace superschur
