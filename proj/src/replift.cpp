#include "superschur/replift.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

namespace superschur {

namespace {

std::string params(std::initializer_list<std::pair<const char *, long>> kv) {
  std::string s;
  for (const auto &[k, v] : kv)
    s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

std::string root_label(const Root &r) { return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")"; }

// Records lhs == rhs in a tally, with the first differing entry as witness.
void expect_equal(Tally &tally, const TensorBasis &basis, const RepMatrix &lhs, const RepMatrix &rhs,
                  const std::string &where) {
  if (lhs == rhs) {
    tally.record(true, {});
    return;
  }
  tally.record(false, where + ": " + difference_witness(basis, lhs, rhs));
}

// All nonnegative weights of the given length with total exactly `total`.
std::vector<Weight> weights_of_total(std::size_t len, int total) {
  return enumerate_weights(Dims(1, static_cast<int>(len) - 1, total));
}

} // namespace

// ------------------------------------------------------------- ClassicalRep

ClassicalRep::ClassicalRep(const Dims &dims) : basis_(dims) {}

const RepMatrix &ClassicalRep::unit(int i, int j) {
  auto key = std::make_pair(i, j);
  if (auto it = units_.find(key); it != units_.end())
    return it->second;
  const Dims &dm = dims();
  const int pij = (dm.parity(i) + dm.parity(j)) % 2;
  RepMatrix m(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    std::vector<int> letters = basis_.letters(col);
    int prefix = 0;
    for (std::size_t t = 0; t < letters.size(); ++t) {
      const int x = letters[t];
      if (x == j) {
        letters[t] = i;
        const long sign = (pij * prefix) % 2 ? -1 : 1;
        m.add_to(basis_.position(letters), col, Rational(sign));
        letters[t] = x;
      }
      prefix += dm.parity(x);
    }
  }
  return units_.emplace(key, std::move(m)).first->second;
}

const RepMatrix &ClassicalRep::generator(const GeneratorTag &g) {
  g.validate(dims());
  switch (g.kind) {
  case GeneratorTag::Kind::e:
    return unit(g.index, g.index + 1);
  case GeneratorTag::Kind::f:
    return unit(g.index + 1, g.index);
  case GeneratorTag::Kind::H:
    return unit(g.index, g.index);
  default:
    throw std::invalid_argument("generator " + g.to_string() + " is not classical");
  }
}

const RepMatrix &ClassicalRep::divided_root(const Root &alpha, int k) {
  if (k < 0)
    throw std::invalid_argument("divided power must be nonnegative");
  auto key = std::make_pair(std::make_pair(alpha.i, alpha.j), k);
  if (auto it = divided_.find(key); it != divided_.end())
    return it->second;
  RepMatrix m;
  if (k == 0) {
    m = identity();
  } else if (alpha.odd() && k >= 2) {
    m = zero();
  } else {
    const RepMatrix &x = unit(alpha.i, alpha.j);
    m = divided_root(alpha, k - 1) * x;
    m = m.scaled(Rational(1, k));
  }
  return divided_.emplace(key, std::move(m)).first->second;
}

const RepMatrix &ClassicalRep::cartan_binom(int i, int k, int shift) {
  auto key = std::make_tuple(i, k, shift);
  if (auto it = binoms_.find(key); it != binoms_.end())
    return it->second;
  RepMatrix m = matrix_binomial(unit(i, i), shift, k);
  return binoms_.emplace(key, std::move(m)).first->second;
}

RepMatrix ClassicalRep::h_mu(const Weight &mu) {
  if (mu.size() != static_cast<std::size_t>(dims().rank()) || !mu.nonnegative())
    throw std::invalid_argument("H_mu needs a nonnegative weight of length m+n");
  RepMatrix m = identity();
  for (int i = 1; i <= dims().rank(); ++i)
    m = m * cartan_binom(i, mu[i]);
  return m;
}

const RepMatrix &ClassicalRep::idempotent(const Weight &lambda) {
  if (!lambda.in_lambda(dims()))
    throw std::invalid_argument("weight " + lambda.to_string() + " is not in Lambda(m|n,d)");
  if (auto it = idempotents_.find(lambda); it != idempotents_.end())
    return it->second;
  RepMatrix product = h_mu(lambda);
  RepMatrix projection = weight_projection(basis_, lambda);
  if (!(product == projection))
    throw std::logic_error("1_" + lambda.to_string() + ": binomial product differs from weight projection");
  return idempotents_.emplace(lambda, std::move(product)).first->second;
}

RepMatrix ClassicalRep::h_alpha(const Root &alpha) {
  RepMatrix hi = unit(alpha.i, alpha.i);
  const RepMatrix &hj = unit(alpha.j, alpha.j);
  return alpha.odd() ? hi + hj : hi - hj;
}

RepMatrix ClassicalRep::monomial(const KostantMonomial &mono) {
  if (mono.is_zero())
    return zero();
  RepMatrix m = identity();
  for (const auto &f : mono.factors()) {
    switch (f.kind) {
    case KostantFactor::Kind::RootPower:
      m = m * divided_root(f.root, f.power);
      break;
    case KostantFactor::Kind::CartanBinom:
      m = m * cartan_binom(f.index, f.power);
      break;
    case KostantFactor::Kind::Idem:
      m = m * idempotent(f.weight);
      break;
    case KostantFactor::Kind::KUnit:
      throw std::invalid_argument("K_i^{+-1} has no classical image");
    }
  }
  return m;
}

// -------------------------------------------------------------- free helpers

RepMatrix weight_projection(const TensorBasis &basis, const Weight &lambda) {
  std::vector<Rational> diag(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p)
    diag[p] = basis.occurrence(p) == lambda ? 1 : 0;
  return RepMatrix::diagonal(diag);
}

RepMatrix matrix_binomial(const RepMatrix &x, int shift, int k) {
  if (k < 0)
    throw std::invalid_argument("binomial order must be nonnegative");
  const std::size_t n = x.rows();
  RepMatrix m = RepMatrix::identity(n);
  Integer fact = 1;
  for (int s = 0; s < k; ++s) {
    m = m * (x + RepMatrix::scalar(n, Rational(shift - s)));
    fact *= s + 1;
  }
  return m.scaled(Rational(1) / Rational(fact));
}

RepMatrix supercommutator(const RepMatrix &x, const RepMatrix &y, int px, int py) {
  RepMatrix xy = x * y;
  RepMatrix yx = y * x;
  return (px * py) % 2 ? xy + yx : xy - yx;
}

RepMatrix rho_generator(const Dims &dims, const GeneratorTag &g) { return ClassicalRep(dims).generator(g); }

RepMatrix rho_divided_root(const Dims &dims, const Root &alpha, int k) {
  return ClassicalRep(dims).divided_root(alpha, k);
}

RepMatrix rho_idempotent(const Dims &dims, const Weight &lambda) { return ClassicalRep(dims).idempotent(lambda); }

RepMatrix rho_monomial(const Dims &dims, const KostantMonomial &mono) { return ClassicalRep(dims).monomial(mono); }

// --------------------------------------------------------------- relations

namespace {

void serre_checks(ClassicalRep &rep, VerificationReport &out, bool raising) {
  const Dims &dims = rep.dims();
  const TensorBasis &basis = rep.basis();
  const int m = dims.m();
  const int top = dims.rank() - 1;
  using K = GeneratorTag::Kind;
  const K kind = raising ? K::e : K::f;
  const std::string g = raising ? "e" : "f";
  const std::string tag = raising ? "R4" : "R5";
  auto gen = [&](int i) -> const RepMatrix & { return rep.generator({kind, i}); };
  auto par = [&](int i) { return i == m ? 1 : 0; };

  if (m <= top) {
    Tally t(tag + " odd square", "[" + g + "_m," + g + "_m] = 0");
    expect_equal(t, basis, supercommutator(gen(m), gen(m), 1, 1), rep.zero(), "m=" + std::to_string(m));
    out.add(t.result());
  }

  Tally ad(tag + " ad-nilpotence", "(ad " + g + "_i)^{1+|(alpha_i,alpha_j)|} " + g + "_j = 0, i != j, i != m");
  for (int i = 1; i <= top; ++i) {
    if (i == m)
      continue;
    for (int j = 1; j <= top; ++j) {
      if (j == i)
        continue;
      const int pairing = root_pairing(dims, simple_root(dims, i), simple_root(dims, j));
      const int times = 1 + (pairing < 0 ? -pairing : pairing);
      RepMatrix y = gen(j);
      for (int k = 0; k < times; ++k)
        y = supercommutator(gen(i), y, 0, par(j));
      expect_equal(ad, basis, y, rep.zero(), params({{"i", i}, {"j", j}}));
    }
  }
  out.add(ad.result());

  if (dims.m() >= 2 && dims.n() >= 2) {
    Tally t(tag + " quartic", "[" + g + "_m,[" + g + "_{m-1},[" + g + "_m," + g + "_{m+1}]]] = 0");
    RepMatrix inner = supercommutator(gen(m), gen(m + 1), 1, 0);
    RepMatrix mid = supercommutator(gen(m - 1), inner, 0, 1);
    RepMatrix outer = supercommutator(gen(m), mid, 1, 1);
    expect_equal(t, basis, outer, rep.zero(), "m=" + std::to_string(m));
    out.add(t.result());
  }
}

// Shared by (R2')..(R2'''') and the quantum analogues: x 1_lambda against
// 1_{lambda+shift} x, where the target is zero if lambda+shift leaves Lambda.
void weight_shift_check(ClassicalRep &rep, Tally &tally, const RepMatrix &x, const Weight &shift, bool idem_right,
                        const std::string &where) {
  const Dims &dims = rep.dims();
  for (const Weight &lambda : enumerate_weights(dims)) {
    const Weight target = lambda + shift;
    RepMatrix lhs = idem_right ? x * rep.idempotent(lambda) : rep.idempotent(lambda) * x;
    RepMatrix rhs = rep.zero();
    if (target.in_lambda(dims))
      rhs = idem_right ? rep.idempotent(target) * x : x * rep.idempotent(target);
    expect_equal(tally, rep.basis(), lhs, rhs, where + " lambda=" + lambda.to_string());
  }
}

} // namespace

VerificationReport verify_relations_classical(const Dims &dims) {
  ClassicalRep rep(dims);
  const TensorBasis &basis = rep.basis();
  const int rank = dims.rank();
  const int m = dims.m();
  const auto len = static_cast<std::size_t>(rank);
  using K = GeneratorTag::Kind;
  auto e = [&](int i) -> const RepMatrix & { return rep.generator({K::e, i}); };
  auto f = [&](int i) -> const RepMatrix & { return rep.generator({K::f, i}); };
  auto h = [&](int i) -> const RepMatrix & { return rep.generator({K::H, i}); };
  auto par = [&](int i) { return i == m ? 1 : 0; };
  VerificationReport out;

  {
    Tally t("R1", "[H_i,H_j] = 0");
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        expect_equal(t, basis, supercommutator(h(i), h(j), 0, 0), rep.zero(), params({{"i", i}, {"j", j}}));
    out.add(t.result());
  }
  {
    Tally t("R2", "[e_i,f_j] = delta_ij (H_i - (-1)^{e_i f_j} H_{j+1})");
    for (int i = 1; i < rank; ++i)
      for (int j = 1; j < rank; ++j) {
        RepMatrix rhs = rep.zero();
        if (i == j)
          rhs = par(i) ? h(i) + h(i + 1) : h(i) - h(i + 1);
        expect_equal(t, basis, supercommutator(e(i), f(j), par(i), par(j)), rhs, params({{"i", i}, {"j", j}}));
      }
    out.add(t.result());
  }
  {
    Tally t("R3", "[H_i,e_j] = (-1)^i (eps_i,alpha_j) e_j, [H_i,f_j] = -(-1)^i (eps_i,alpha_j) f_j");
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j < rank; ++j) {
        const int c = (dims.parity(i) ? -1 : 1) * (bilinear_form(dims, i, j) - bilinear_form(dims, i, j + 1));
        expect_equal(t, basis, supercommutator(h(i), e(j), 0, par(j)), e(j).scaled(Rational(c)),
                     params({{"i", i}, {"e", j}}));
        expect_equal(t, basis, supercommutator(h(i), f(j), 0, par(j)), f(j).scaled(Rational(-c)),
                     params({{"i", i}, {"f", j}}));
      }
    out.add(t.result());
  }
  serre_checks(rep, out, true);
  serre_checks(rep, out, false);
  {
    Tally t("R6", "H_1 + ... + H_{m+n} = d");
    RepMatrix sum = rep.zero();
    for (int i = 1; i <= rank; ++i)
      sum += h(i);
    expect_equal(t, basis, sum, RepMatrix::scalar(rep.size(), Rational(dims.d())), "");
    out.add(t.result());
  }
  {
    Tally t("R7", "H_i(H_i-1)...(H_i-d) = 0");
    Tally minimal("R7 minimality", "no proper factor of prod_{k=0}^d (x-k) kills H_i");
    for (int i = 1; i <= rank; ++i) {
      std::vector<RepMatrix> factors;
      for (int k = 0; k <= dims.d(); ++k)
        factors.push_back(h(i) - RepMatrix::scalar(rep.size(), Rational(k)));
      RepMatrix full = rep.identity();
      for (const auto &x : factors)
        full = full * x;
      expect_equal(t, basis, full, rep.zero(), params({{"i", i}}));
      for (std::size_t skip = 0; skip < factors.size(); ++skip) {
        RepMatrix part = rep.identity();
        for (std::size_t k = 0; k < factors.size(); ++k)
          if (k != skip)
            part = part * factors[k];
        minimal.record(!part.is_zero(), params({{"i", i}, {"omitted root", static_cast<long>(skip)}}));
      }
    }
    out.add(t.result());
    out.add(minimal.result());
  }

  const auto weights = enumerate_weights(dims);
  {
    Tally t("R1'", "1_lambda 1_mu = delta 1_lambda, sum 1_lambda = 1");
    RepMatrix sum = rep.zero();
    for (const auto &lam : weights) {
      sum += rep.idempotent(lam);
      for (const auto &mu : weights)
        expect_equal(t, basis, rep.idempotent(lam) * rep.idempotent(mu), lam == mu ? rep.idempotent(lam) : rep.zero(),
                     "lambda=" + lam.to_string() + " mu=" + mu.to_string());
    }
    expect_equal(t, basis, sum, rep.identity(), "sum");
    out.add(t.result());
  }
  {
    Tally t("R2'", "e_i 1_lambda = 1_{lambda+alpha_i} e_i and its three companions");
    for (int i = 1; i < rank; ++i) {
      const Weight a = simple_root(dims, i).as_weight(len);
      const Weight na = -1 * a;
      weight_shift_check(rep, t, e(i), a, true, "e" + std::to_string(i) + " 1_lambda");
      weight_shift_check(rep, t, f(i), na, true, "f" + std::to_string(i) + " 1_lambda");
      weight_shift_check(rep, t, e(i), na, false, "1_lambda e" + std::to_string(i));
      weight_shift_check(rep, t, f(i), a, false, "1_lambda f" + std::to_string(i));
    }
    out.add(t.result());
  }
  {
    Tally t("R3'", "[e_i,f_j] = delta_ij sum_lambda (lambda_j - (-1)^{e_i f_j} lambda_{j+1}) 1_lambda");
    for (int i = 1; i < rank; ++i)
      for (int j = 1; j < rank; ++j) {
        RepMatrix rhs = rep.zero();
        if (i == j)
          for (const auto &lam : weights) {
            const int c = par(i) ? lam[j] + lam[j + 1] : lam[j] - lam[j + 1];
            rhs += rep.idempotent(lam).scaled(Rational(c));
          }
        expect_equal(t, basis, supercommutator(e(i), f(j), par(i), par(j)), rhs, params({{"i", i}, {"j", j}}));
      }
    out.add(t.result());
  }
  return out;
}

// ------------------------------------------------------------- commutation

VerificationReport verify_commutation_classical(const Dims &dims, int max_power) {
  if (max_power < 1)
    throw std::invalid_argument("max_power must be at least 1");
  ClassicalRep rep(dims);
  const TensorBasis &basis = rep.basis();
  const auto roots = all_roots(dims);
  const auto len = static_cast<std::size_t>(dims.rank());
  VerificationReport out;
  auto x = [&](const Root &a, int k) -> const RepMatrix & { return rep.divided_root(a, k); };
  auto cap = [&](const Root &a) { return a.odd() ? 1 : max_power; };

  {
    Tally t("root-vector bracket", "[x_alpha,x_beta] = H_alpha, c_{alpha,beta} x_{alpha+beta} or 0");
    for (const auto &a : roots)
      for (const auto &b : roots) {
        RepMatrix lhs = supercommutator(x(a, 1), x(b, 1), a.parity, b.parity);
        RepMatrix rhs = rep.zero();
        Root sum;
        if (a.i == b.j && a.j == b.i)
          rhs = rep.h_alpha(a);
        else if (root_sum(dims, a, b, sum))
          rhs = x(sum, 1).scaled(Rational(structure_constant(a, b)));
        expect_equal(t, basis, lhs, rhs, "alpha=" + root_label(a) + " beta=" + root_label(b));
      }
    out.add(t.result());
  }
  {
    Tally t("divided-power product", "x_alpha^(a) x_alpha^(b) = binom(a+b,a) x_alpha^(a+b)");
    for (const auto &a : roots)
      for (int p = 0; p <= cap(a); ++p)
        for (int q = 0; q <= cap(a); ++q)
          expect_equal(t, basis, x(a, p) * x(a, q), x(a, p + q).scaled(Rational(binomial(p + q, p))),
                       "alpha=" + root_label(a) + " " + params({{"a", p}, {"b", q}}));
    out.add(t.result());
  }

  Tally even("even-even divided powers", "x_alpha^(r) x_beta^(s) straightening, both roots even");
  Tally even_odd("even-odd divided powers", "x_alpha^(r) x_beta = x_beta x_alpha^(r) + c x_{alpha+beta} x_alpha^(r-1)");
  Tally odd_even("odd-even divided powers", "x_alpha x_beta^(r) = x_beta^(r) x_alpha + c x_{alpha+beta} x_beta^(r-1)");
  Tally odd_odd("odd-odd root vectors", "x_alpha x_beta = -x_beta x_alpha + (H_alpha | x_{alpha+beta} | 0)");
  for (const auto &a : roots)
    for (const auto &b : roots) {
      Root sum;
      const bool opposite = a.i == b.j && a.j == b.i;
      const bool is_root = root_sum(dims, a, b, sum);
      const std::string pair = "alpha=" + root_label(a) + " beta=" + root_label(b);
      if (!a.odd() && !b.odd()) {
        for (int r = 1; r <= max_power; ++r)
          for (int s = 1; s <= max_power; ++s) {
            RepMatrix lhs = x(a, r) * x(b, s);
            RepMatrix rhs = x(b, s) * x(a, r);
            for (int j = 1; j <= std::min(r, s); ++j) {
              if (opposite) {
                RepMatrix mid = matrix_binomial(rep.h_alpha(a), -r - s + 2 * j, j);
                rhs += x(b, s - j) * mid * x(a, r - j);
              } else if (is_root) {
                const long c = j % 2 && structure_constant(a, b) < 0 ? -1 : 1;
                rhs += (x(b, s - j) * x(sum, j) * x(a, r - j)).scaled(Rational(c));
              }
            }
            expect_equal(even, basis, lhs, rhs, pair + " " + params({{"r", r}, {"s", s}}));
          }
      } else if (!a.odd() && b.odd()) {
        for (int r = 1; r <= max_power; ++r) {
          RepMatrix rhs = x(b, 1) * x(a, r);
          if (is_root)
            rhs += (x(sum, 1) * x(a, r - 1)).scaled(Rational(structure_constant(a, b)));
          expect_equal(even_odd, basis, x(a, r) * x(b, 1), rhs, pair + " " + params({{"r", r}}));
        }
      } else if (a.odd() && !b.odd()) {
        for (int r = 1; r <= max_power; ++r) {
          RepMatrix rhs = x(b, r) * x(a, 1);
          if (is_root)
            rhs += (x(sum, 1) * x(b, r - 1)).scaled(Rational(structure_constant(a, b)));
          expect_equal(odd_even, basis, x(a, 1) * x(b, r), rhs, pair + " " + params({{"r", r}}));
        }
      } else {
        RepMatrix rhs = -(x(b, 1) * x(a, 1));
        if (opposite)
          rhs += rep.h_alpha(a);
        else if (is_root)
          rhs += x(sum, 1);
        expect_equal(odd_odd, basis, x(a, 1) * x(b, 1), rhs, pair);
      }
    }
  out.add(even.result());
  out.add(even_odd.result());
  out.add(odd_even.result());
  out.add(odd_odd.result());

  {
    Tally t("root vector past idempotent", "x_alpha 1_lambda = 1_{lambda+alpha} x_alpha, 1_lambda x_alpha = x_alpha 1_{lambda-alpha}");
    for (const auto &a : roots) {
      const Weight w = a.as_weight(len);
      weight_shift_check(rep, t, x(a, 1), w, true, "x" + root_label(a) + " 1_lambda");
      weight_shift_check(rep, t, x(a, 1), -1 * w, false, "1_lambda x" + root_label(a));
    }
    out.add(t.result());
  }
  return out;
}

// ---------------------------------------------------------- idempotent calculus

VerificationReport verify_idempotents_classical(const Dims &dims) {
  ClassicalRep rep(dims);
  const TensorBasis &basis = rep.basis();
  const auto len = static_cast<std::size_t>(dims.rank());
  const auto weights = enumerate_weights(dims);
  VerificationReport out;
  {
    Tally t("idempotent product form", "prod_i binom(H_i,lambda_i) equals the weight-space projection");
    for (const auto &lam : weights)
      expect_equal(t, basis, rep.h_mu(lam), weight_projection(basis, lam), "lambda=" + lam.to_string());
    out.add(t.result());
  }
  {
    Tally t("orthogonal idempotents", "1_lambda 1_mu = delta 1_lambda and sum_lambda 1_lambda = 1");
    RepMatrix sum = rep.zero();
    for (const auto &lam : weights) {
      sum += rep.idempotent(lam);
      for (const auto &mu : weights)
        expect_equal(t, basis, rep.idempotent(lam) * rep.idempotent(mu), lam == mu ? rep.idempotent(lam) : rep.zero(),
                     "lambda=" + lam.to_string() + " mu=" + mu.to_string());
    }
    expect_equal(t, basis, sum, rep.identity(), "sum");
    out.add(t.result());
  }
  {
    Tally t("H_mu vanishes above d", "H_mu = 0 when |mu| > d");
    for (int extra = 1; extra <= 2; ++extra)
      for (const auto &mu : weights_of_total(len, dims.d() + extra))
        expect_equal(t, basis, rep.h_mu(mu), rep.zero(), "mu=" + mu.to_string());
    out.add(t.result());
  }
  {
    Tally t("Cartan eigenvalues", "H_i 1_lambda = lambda_i 1_lambda, binom(H_i,k) 1_lambda = binom(lambda_i,k) 1_lambda");
    for (const auto &lam : weights)
      for (int i = 1; i <= dims.rank(); ++i) {
        expect_equal(t, basis, rep.unit(i, i) * rep.idempotent(lam), rep.idempotent(lam).scaled(Rational(lam[i])),
                     "lambda=" + lam.to_string() + " " + params({{"i", i}}));
        for (int k = 0; k <= dims.d() + 1; ++k)
          expect_equal(t, basis, rep.cartan_binom(i, k) * rep.idempotent(lam),
                       rep.idempotent(lam).scaled(Rational(binomial(lam[i], k))),
                       "lambda=" + lam.to_string() + " " + params({{"i", i}, {"k", k}}));
      }
    out.add(t.result());
  }
  {
    Tally act("H_mu on 1_lambda", "H_mu 1_lambda = lambda_mu 1_lambda");
    Tally dec("H_mu decomposition", "H_mu = sum_lambda lambda_mu 1_lambda");
    for (int total = 0; total <= dims.d() + 1; ++total)
      for (const auto &mu : weights_of_total(len, total)) {
        RepMatrix hm = rep.h_mu(mu);
        RepMatrix sum = rep.zero();
        for (const auto &lam : weights) {
          Integer coeff = 1;
          for (int i = 1; i <= dims.rank(); ++i)
            coeff *= binomial(lam[i], mu[i]);
          RepMatrix scaled = rep.idempotent(lam).scaled(Rational(coeff));
          expect_equal(act, basis, hm * rep.idempotent(lam), scaled, "mu=" + mu.to_string() + " lambda=" + lam.to_string());
          sum += scaled;
        }
        expect_equal(dec, basis, hm, sum, "mu=" + mu.to_string());
      }
    out.add(act.result());
    out.add(dec.result());
  }
  return out;
}

// ------------------------------------------------------------------ basis Y

namespace {

SparseVector<Rational> flatten(const RepMatrix &m) { return m.flattened(); }

} // namespace

std::size_t basis_rank(const Dims &dims) {
  ClassicalRep rep(dims);
  Echelon<Rational> ech;
  for (const auto &y : enumerate_basis_Y(dims))
    ech.insert(flatten(rep.monomial(y.monomial())));
  return ech.rank();
}

VerificationReport basis_rank_certify(const Dims &dims) {
  VerificationReport out;
  const auto ys = enumerate_basis_Y(dims);
  const std::size_t rank = basis_rank(dims);
  const std::uint64_t expected = dimension_count(dims);
  const bool ok = rank == ys.size() && ys.size() == expected;
  out.add("basis Y", "Y is a Q-basis of S(m|n,d)", ok,
          ok ? "" : "rank=" + std::to_string(rank) + " |Y|=" + std::to_string(ys.size()),
          "rank=" + std::to_string(rank) + " |Y|=" + std::to_string(ys.size()) + " count=" + std::to_string(expected));
  return out;
}

std::map<BasisElement, Rational> coordinates_in_Y(const Dims &dims, const KostantMonomial &mono) {
  ClassicalRep rep(dims);
  const auto ys = enumerate_basis_Y(dims);
  Echelon<Rational> ech(true);
  for (const auto &y : ys)
    if (!ech.insert(flatten(rep.monomial(y.monomial()))))
      throw std::logic_error("coordinates_in_Y: images of Y are dependent");
  auto coords = ech.coordinates(flatten(rep.monomial(mono)));
  if (!coords)
    throw std::logic_error("coordinates_in_Y: image lies outside span(Y)");
  std::map<BasisElement, Rational> out;
  for (const auto &[k, v] : *coords)
    if (sgn(v) != 0)
      out.emplace(ys[k], v);
  return out;
}

// -------------------------------------------------------------- Schur-Weyl

RepMatrix signed_transposition(const TensorBasis &basis, int t) {
  const Dims &dims = basis.dims();
  if (t < 1 || t >= dims.d())
    throw std::invalid_argument("transposition index out of range");
  RepMatrix s(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::vector<int> letters = basis.letters(col);
    const auto k = static_cast<std::size_t>(t - 1);
    const int sign = dims.parity(letters[k]) && dims.parity(letters[k + 1]) ? -1 : 1;
    std::swap(letters[k], letters[k + 1]);
    s.set(basis.position(letters), col, Rational(sign));
  }
  return s;
}

std::size_t commutant_dimension(const Dims &dims) {
  TensorBasis basis(dims);
  const std::size_t n = basis.size();
  Echelon<Rational> ech;
  // X s = s X for each signed transposition s with s e_j = eps_j e_{pi(j)}
  // and pi an involution: eps_j X[i,pi j] - eps_{pi i} X[pi i, j] = 0.
  for (int t = 1; t < dims.d(); ++t) {
    RepMatrix s = signed_transposition(basis, t);
    std::vector<std::size_t> pi(n);
    std::vector<int> eps(n);
    for (std::size_t r = 0; r < n; ++r)
      for (const auto &[c, v] : s.row(r)) {
        pi[c] = r;
        eps[c] = sgn(v);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::map<std::size_t, Rational> eq;
        eq[i * n + pi[j]] += eps[j];
        eq[pi[i] * n + j] -= eps[pi[i]];
        SparseVector<Rational> v;
        for (auto &[k, c] : eq)
          if (sgn(c) != 0)
            v.emplace_back(k, c);
        if (!v.empty())
          ech.insert(std::move(v));
      }
  }
  return n * n - ech.rank();
}

VerificationReport verify_schur_weyl(const Dims &dims) {
  if (dims.d() < 2)
    throw std::invalid_argument("Schur-Weyl checks need d >= 2");
  ClassicalRep rep(dims);
  VerificationReport out;
  Tally t("signed transpositions commute with rho", "[rho(g), s_t] = 0");
  for (int k = 1; k < dims.d(); ++k) {
    RepMatrix s = signed_transposition(rep.basis(), k);
    for (const auto &g : classical_generators(dims)) {
      const RepMatrix &x = rep.generator(g);
      expect_equal(t, rep.basis(), x * s, s * x, g.to_string() + " t=" + std::to_string(k));
    }
  }
  out.add(t.result());
  const std::size_t dim = commutant_dimension(dims);
  const std::uint64_t expected = dimension_count(dims);
  out.add("commutant dimension", "S(m|n,d) = End_{Sigma_d}(V^{x d})", dim == expected,
          "commutant=" + std::to_string(dim) + " count=" + std::to_string(expected),
          "dim=" + std::to_string(dim));
  return out;
}

} // namespace superschur

namespace superschur {

VerificationReport verify_pbw_bijection(const Dims &dims) {
  VerificationReport out;
  const auto P = enumerate_P(dims);
  const auto Y = enumerate_basis_Y(dims);
  out.add("|P| = |Y|", "e_A H_B f_C <-> e_A 1_lambda f_C", P.size() == Y.size(),
          "P=" + std::to_string(P.size()) + " Y=" + std::to_string(Y.size()), "size=" + std::to_string(Y.size()));
  std::set<BasisElement> ys(Y.begin(), Y.end());
  Tally forward("y_to_p inverts p_to_y", "y_to_p(p_to_y(p)) = p on P");
  for (const auto &p : P) {
    const BasisElement y = p_to_y(p, dims);
    forward.record(ys.count(y) && y_to_p(y, dims) == p, y.to_string());
  }
  out.add(forward.result());
  Tally backward("p_to_y inverts y_to_p", "p_to_y(y_to_p(y)) = y on Y");
  for (const auto &y : Y)
    backward.record(p_to_y(y_to_p(y, dims), dims) == y, y.to_string());
  out.add(backward.result());
  return out;
}

} // namespace superschur
