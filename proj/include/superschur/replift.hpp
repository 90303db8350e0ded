#pragma once

#include "superschur/kostant.hpp"
#include "superschur/report.hpp"
#include "superschur/sparse_matrix.hpp"
#include "superschur/tensor_space.hpp"

#include <map>
#include <memory>
#include <string>

namespace superschur {

using RepMatrix = SparseMatrix<Rational>;

/// The classical tensor representation rho_d of U(gl(m|n)) on V^{x d}, with
/// caches for the matrices that the verification suites reuse heavily.
/// Not thread-safe.
class ClassicalRep {
public:
  explicit ClassicalRep(const Dims &dims);

  const Dims &dims() const { return basis_.dims(); }
  const TensorBasis &basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  RepMatrix identity() const { return RepMatrix::identity(size()); }
  RepMatrix zero() const { return RepMatrix(size(), size()); }

  /// Image of the matrix unit E_{i,j}: sum over sites of the sign-prefixed
  /// single-site action.
  const RepMatrix &unit(int i, int j);
  const RepMatrix &generator(const GeneratorTag &g);
  /// x_alpha^k / k!; the zero matrix for an odd root with k >= 2.
  const RepMatrix &divided_root(const Root &alpha, int k);
  /// binom(H_i + shift, k) = (H_i + shift)(H_i + shift - 1)...(H_i + shift - k + 1) / k!
  const RepMatrix &cartan_binom(int i, int k, int shift = 0);
  /// H_mu = prod_i binom(H_i, mu_i) for any nonnegative mu.
  RepMatrix h_mu(const Weight &mu);
  /// 1_lambda as the product of Cartan binomials, checked against the
  /// weight-space projection (throws std::logic_error if they differ).
  const RepMatrix &idempotent(const Weight &lambda);
  /// H_alpha = H_i - (-1)^{parity(alpha)} H_j.
  RepMatrix h_alpha(const Root &alpha);
  /// Strict left-to-right product of the factors.
  RepMatrix monomial(const KostantMonomial &mono);

private:
  TensorBasis basis_;
  std::map<std::pair<int, int>, RepMatrix> units_;
  std::map<std::pair<std::pair<int, int>, int>, RepMatrix> divided_;
  std::map<std::tuple<int, int, int>, RepMatrix> binoms_;
  std::map<Weight, RepMatrix> idempotents_;
  std::map<std::string, RepMatrix> generators_;
};

/// Diagonal 0/1 projection onto the tensor indices whose occurrence vector is lambda.
RepMatrix weight_projection(const TensorBasis &basis, const Weight &lambda);
/// binom(X + shift, k) for a matrix X.
RepMatrix matrix_binomial(const RepMatrix &x, int shift, int k);
/// [x, y] = xy - (-1)^{px py} yx.
RepMatrix supercommutator(const RepMatrix &x, const RepMatrix &y, int px, int py);

RepMatrix rho_generator(const Dims &dims, const GeneratorTag &g);
RepMatrix rho_divided_root(const Dims &dims, const Root &alpha, int k);
/// Throws std::invalid_argument if lambda is not in Lambda(m|n,d).
RepMatrix rho_idempotent(const Dims &dims, const Weight &lambda);
RepMatrix rho_monomial(const Dims &dims, const KostantMonomial &mono);

VerificationReport verify_relations_classical(const Dims &dims);
VerificationReport verify_commutation_classical(const Dims &dims, int max_power);
VerificationReport verify_idempotents_classical(const Dims &dims);

/// Rank of the flattened images rho(e_A 1_lambda f_C) over Y.
std::size_t basis_rank(const Dims &dims);
VerificationReport basis_rank_certify(const Dims &dims);
/// Coordinates of rho(mono) in the basis rho(Y); zero coordinates omitted.
/// Throws std::logic_error if Y is not independent or rho(mono) lies outside
/// the span.
std::map<BasisElement, Rational> coordinates_in_Y(const Dims &dims, const KostantMonomial &mono);

/// p_to_y and y_to_p are mutually inverse and |P| = |Y|, checked exhaustively.
VerificationReport verify_pbw_bijection(const Dims &dims);

/// Signed transposition of tensor factors t and t+1 (1-based):
/// v x w -> (-1)^{parity(v) parity(w)} w x v.
RepMatrix signed_transposition(const TensorBasis &basis, int t);
/// dim of the commutant of the signed transpositions, by exact elimination.
std::size_t commutant_dimension(const Dims &dims);
/// Requires d >= 2 (throws std::invalid_argument otherwise).
VerificationReport verify_schur_weyl(const Dims &dims);

/// "row a, col b: lhs=x, rhs=y" for the first differing entry, or empty if equal.
template <class T> std::string difference_witness(const TensorBasis &basis, const SparseMatrix<T> &a, const SparseMatrix<T> &b) {
  auto diff = first_difference(a, b);
  if (!diff)
    return {};
  return "entry (" + basis.label(diff->row) + "," + basis.label(diff->col) + "): lhs=" + Scalar<T>::str(diff->lhs) +
         " rhs=" + Scalar<T>::str(diff->rhs);
}

} // namespace superschur
