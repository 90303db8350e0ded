#pragma once

#include "superschur/superroot.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace superschur {

/// Ordered basis v_{i_1} x ... x v_{i_d} of the d-th tensor power of V.
/// Positions follow lexicographic order with i_1 most significant, so the
/// position of (i_1,...,i_d) is sum_t (i_t - 1) (m+n)^{d-t}.
class TensorBasis {
public:
  explicit TensorBasis(const Dims &dims);

  const Dims &dims() const { return dims_; }
  std::size_t size() const { return size_; }
  /// Letters (i_1, ..., i_d) of the basis vector at `pos`.
  const std::vector<int> &letters(std::size_t pos) const { return letters_.at(pos); }
  /// Throws std::invalid_argument for a malformed index.
  std::size_t position(const std::vector<int> &letters) const;
  /// Parity of the basis vector: sum of letter parities mod 2.
  int parity(std::size_t pos) const { return parity_.at(pos); }
  /// Occurrence vector r: r_a = #{t : i_t = a}.
  const Weight &occurrence(std::size_t pos) const { return occurrence_.at(pos); }
  std::string label(std::size_t pos) const;

private:
  Dims dims_;
  std::size_t size_;
  std::vector<std::vector<int>> letters_;
  std::vector<int> parity_;
  std::vector<Weight> occurrence_;
};

/// Generator of U(gl(m|n)) or U_q(gl(m|n)).
///
/// Classical tags: e_i, f_i (1 <= i < m+n), H_i (1 <= i <= m+n).
/// Quantum tags: E_a, F_a, K_a, Kinv_a.
struct GeneratorTag {
  enum class Kind { e, f, H, E, F, K, Kinv };
  Kind kind = Kind::e;
  int index = 1;

  /// Parses "e1", "f2", "H3", "E1", "F1", "K2", "Kinv2" or "K2^-1".
  /// Throws std::invalid_argument on anything else.
  static GeneratorTag parse(const std::string &s);
  bool quantum() const { return kind == Kind::E || kind == Kind::F || kind == Kind::K || kind == Kind::Kinv; }
  /// Z_2-degree: 1 for e_m, f_m, E_m, F_m.
  int grading(const Dims &dims) const;
  /// Throws std::invalid_argument when the index is out of range for dims.
  void validate(const Dims &dims) const;
  std::string to_string() const;
};

std::vector<GeneratorTag> classical_generators(const Dims &dims);
std::vector<GeneratorTag> quantum_generators(const Dims &dims);

} // namespace superschur
