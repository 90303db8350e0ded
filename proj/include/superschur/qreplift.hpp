#pragma once

#include "superschur/kostant.hpp"
#include "superschur/qalgebra.hpp"
#include "superschur/report.hpp"
#include "superschur/sparse_matrix.hpp"
#include "superschur/tensor_space.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace superschur {

using QMatrix = SparseMatrix<RatFn>;

/// The quantum tensor representation rho_d of U_q(gl(m|n)) on V_q^{x d}:
///   K_a v_b = q_a^{delta_ab} v_b,
///   Delta(E_a) = E_a x K_a^{-1}K_{a+1} + 1 x E_a,
///   Delta(F_a) = F_a x 1 + K_a K_{a+1}^{-1} x F_a,
/// with the Koszul sign of the prefix parity on the acting site.
///
/// Matrix lookups are guarded by a mutex, so one instance may be shared by
/// worker threads; returned references stay valid for the lifetime of the
/// object.
class QuantumRep {
public:
  explicit QuantumRep(const Dims &dims);

  const Dims &dims() const { return basis_.dims(); }
  const TensorBasis &basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  QMatrix identity() const { return QMatrix::identity(size()); }
  QMatrix zero() const { return QMatrix(size(), size()); }

  /// K_a^e, diagonal with entries q_a^{e r_a}.
  const QMatrix &k_power(int a, int e);
  const QMatrix &generator(const GeneratorTag &g);
  const QMatrix &letter(const QLetter &l);
  /// E_{a,b} built from the generator matrices by the root-vector recursion.
  const QMatrix &root(int a, int b, std::optional<int> via = std::nullopt);
  /// E_{a,b}^M / [M]!; zero for an odd root with M >= 2.
  const QMatrix &divided(int a, int b, int M);
  /// K_{a,b}^e (K_a^e when b == 0).
  const QMatrix &k_pow(int a, int b, int e);
  /// [K_{a,b}; c over t] in q_a ([K_a; c over t] when b == 0).
  const QMatrix &k_binom(int a, int b, int c, int t);
  /// K_mu = prod_a [K_a; 0 over mu_a] for any nonnegative mu.
  QMatrix k_mu(const Weight &mu);
  /// 1_lambda = K_lambda, checked against the weight projection (throws
  /// std::logic_error if they differ, std::invalid_argument off Lambda).
  const QMatrix &idempotent(const Weight &lambda);

  const QMatrix &factor(const QFactor &f);
  QMatrix evaluate(const QSum &s);
  QMatrix evaluate(const QExpr &x);
  QMatrix evaluate(const QWord &w);

private:
  TensorBasis basis_;
  std::recursive_mutex mutex_;
  std::map<std::pair<int, int>, QMatrix> kpowers_;
  std::map<std::tuple<int, int, int>, QMatrix> roots_;
  std::map<std::tuple<int, int, int>, QMatrix> divided_;
  std::map<std::tuple<int, int, int>, QMatrix> kpows_;
  std::map<std::tuple<int, int, int, int>, QMatrix> kbinoms_;
  std::map<Weight, QMatrix> idempotents_;
  std::map<QFactor, QMatrix> factors_;
};

QMatrix q_weight_projection(const TensorBasis &basis, const Weight &lambda);
/// [x, y] = xy - (-1)^{px py} yx.
QMatrix q_supercommutator(const QMatrix &x, const QMatrix &y, int px, int py);

QMatrix rho_q_generator(const Dims &dims, const GeneratorTag &g);
QMatrix rho_q_divided(const Dims &dims, int a, int b, int M);
/// [K_a; c over t].
QMatrix rho_q_k_binom(const Dims &dims, int a, int c, int t);
QMatrix rho_q_idempotent(const Dims &dims, const Weight &lambda);

VerificationReport verify_relations_quantum(const Dims &dims);
VerificationReport verify_commutation_quantum(const Dims &dims, int max_power);
VerificationReport verify_idempotents_quantum(const Dims &dims);

struct RankOptions {
  Rational q0 = 2;
  /// Skip the specialization shortcut and always eliminate over Z[q,q^{-1}].
  bool force_exact = false;
};

struct RankResult {
  std::size_t specialized_rank = 0;
  std::optional<std::size_t> exact_rank;
  std::size_t size = 0;
  /// The certified generic rank: the exact rank if computed, else the
  /// specialized one (which then equals |Y_q|).
  std::size_t rank() const { return exact_rank.value_or(specialized_rank); }
};

/// Throws std::invalid_argument for q0 in {0, 1, -1}.
RankResult basis_rank_q(const Dims &dims, const RankOptions &opts = {});
VerificationReport basis_rank_certify_q(const Dims &dims, const RankOptions &opts = {});

struct OmegaParts {
  /// omega_{s,a} keyed by (s, a).
  std::map<std::pair<int, int>, QMatrix> omega_s_a;
  /// Omega_a for a = 1..m+n at index a-1.
  std::vector<QMatrix> Omega_a;
  QMatrix Omega;
  QMatrix sigma;
};

/// sigma_d: (-1)^{sum of letter parities} on each tensor basis vector.
QMatrix sigma_matrix(const TensorBasis &basis);
/// Builds omega_{s,a} = prod_{k != s}(K_a - q_a^k)(K_a - q_a^s + (-1)^{s parity(a)})
/// / prod_{k != s}(q_a^s - q_a^k), Omega_a = sum_s omega_{s,a}, Omega = prod_a Omega_a.
/// Throws std::invalid_argument for d < 1.
OmegaParts omega_construct(const Dims &dims);
VerificationReport verify_omega(const Dims &dims);

/// Worker count: SUPERSCHUR_THREADS if set to a positive integer, else the
/// hardware concurrency.
std::size_t worker_threads();

} // namespace superschur
