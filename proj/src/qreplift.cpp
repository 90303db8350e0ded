#include "superschur/qreplift.hpp"

#include "superschur/replift.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace superschur {

namespace {

using Lock = std::lock_guard<std::recursive_mutex>;

std::string params(std::initializer_list<std::pair<const char *, long>> kv) {
  std::string s;
  for (const auto &[k, v] : kv)
    s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

void expect_equal(Tally &tally, const TensorBasis &basis, const QMatrix &lhs, const QMatrix &rhs,
                  const std::string &where) {
  if (lhs == rhs) {
    tally.record(true, {});
    return;
  }
  tally.record(false, where + ": " + difference_witness(basis, lhs, rhs));
}

QMatrix scalar_matrix(std::size_t n, const RatFn &c) { return QMatrix::scalar(n, c); }

// Divides every entry by p, exactly when the entry is Laurent and p divides it.
QMatrix divide_entries(const QMatrix &m, const LaurentPoly &p) {
  QMatrix out(m.rows(), m.cols());
  const RatFn inv(LaurentPoly(1), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto &[c, v] : m.row(r)) {
      if (v.is_laurent())
        if (auto q = LaurentPoly::divide_exact(v.num(), p)) {
          out.set(r, c, RatFn(std::move(*q)));
          continue;
        }
      out.set(r, c, v * inv);
    }
  return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body) {
  const std::size_t workers = std::min(worker_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

std::vector<Weight> weights_of_total(std::size_t len, int total) {
  return enumerate_weights(Dims(1, static_cast<int>(len) - 1, total));
}

} // namespace

std::size_t worker_threads() {
  if (const char *env = std::getenv("SUPERSCHUR_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// -------------------------------------------------------------- QuantumRep

QuantumRep::QuantumRep(const Dims &dims) : basis_(dims) {}

const QMatrix &QuantumRep::k_power(int a, int e) {
  Lock lock(mutex_);
  if (!dims().valid_index(a))
    throw std::invalid_argument("K_a: index out of range");
  auto key = std::make_pair(a, e);
  if (auto it = kpowers_.find(key); it != kpowers_.end())
    return it->second;
  std::vector<RatFn> diag(size());
  for (std::size_t p = 0; p < size(); ++p)
    diag[p] = RatFn(q_index(dims(), a, e * basis_.occurrence(p)[a]));
  return kpowers_.emplace(key, QMatrix::diagonal(diag)).first->second;
}

const QMatrix &QuantumRep::letter(const QLetter &l) {
  switch (l.kind) {
  case QLetter::Kind::E:
    return generator({GeneratorTag::Kind::E, l.index});
  case QLetter::Kind::F:
    return generator({GeneratorTag::Kind::F, l.index});
  case QLetter::Kind::K:
    return k_power(l.index, 1);
  case QLetter::Kind::Kinv:
    return k_power(l.index, -1);
  }
  throw std::logic_error("unknown letter");
}

const QMatrix &QuantumRep::generator(const GeneratorTag &g) {
  Lock lock(mutex_);
  g.validate(dims());
  using K = GeneratorTag::Kind;
  switch (g.kind) {
  case K::K:
    return k_power(g.index, 1);
  case K::Kinv:
    return k_power(g.index, -1);
  case K::E:
  case K::F:
    break;
  default:
    throw std::invalid_argument("generator " + g.to_string() + " is not quantum");
  }
  const int a = g.index;
  const bool raise = g.kind == K::E;
  // Cached under the root key (a,a+1) or (a+1,a) with no via index.
  auto key = raise ? std::make_tuple(a, a + 1, 0) : std::make_tuple(a + 1, a, 0);
  if (auto it = roots_.find(key); it != roots_.end())
    return it->second;

  const Dims &dm = dims();
  const int odd = g.grading(dm);
  const int from = raise ? a + 1 : a;
  const int to = raise ? a : a + 1;
  QMatrix m(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    std::vector<int> letters = basis_.letters(col);
    const int d = static_cast<int>(letters.size());
    for (int k = 0; k < d; ++k) {
      if (letters[k] != from)
        continue;
      int prefix = 0;
      int e = 0;
      for (int t = 0; t < k; ++t) {
        prefix += dm.parity(letters[t]);
        if (!raise) {
          // K_a K_{a+1}^{-1} on the earlier sites
          if (letters[t] == a)
            e += dm.qsign(a);
          if (letters[t] == a + 1)
            e -= dm.qsign(a + 1);
        }
      }
      if (raise)
        for (int t = k + 1; t < d; ++t) {
          // K_a^{-1} K_{a+1} on the later sites
          if (letters[t] == a)
            e -= dm.qsign(a);
          if (letters[t] == a + 1)
            e += dm.qsign(a + 1);
        }
      const long sign = (odd * prefix) % 2 ? -1 : 1;
      letters[k] = to;
      m.add_to(basis_.position(letters), col, RatFn(LaurentPoly::monomial(e, sign)));
      letters[k] = from;
    }
  }
  return roots_.emplace(key, std::move(m)).first->second;
}

const QMatrix &QuantumRep::root(int a, int b, std::optional<int> via) {
  Lock lock(mutex_);
  if (!dims().valid_index(a) || !dims().valid_index(b) || a == b)
    throw std::invalid_argument("root vector E_{a,b}: bad indices");
  if (b == a + 1)
    return generator({GeneratorTag::Kind::E, a});
  if (a == b + 1)
    return generator({GeneratorTag::Kind::F, b});
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (via && (*via <= lo || *via >= hi))
    throw std::invalid_argument("root vector E_{a,b}: via index not strictly between a and b");
  const int c = via.value_or(lo + 1);
  auto key = std::make_tuple(a, b, c);
  if (auto it = roots_.find(key); it != roots_.end())
    return it->second;
  const QMatrix &x = root(a, c);
  const QMatrix &y = root(c, b);
  QMatrix m = x * y - (y * x).scaled(RatFn(q_index(dims(), c, a > b ? 1 : -1)));
  return roots_.emplace(key, std::move(m)).first->second;
}

const QMatrix &QuantumRep::divided(int a, int b, int M) {
  Lock lock(mutex_);
  if (M < 0)
    throw std::invalid_argument("divided power must be nonnegative");
  auto key = std::make_tuple(a, b, M);
  if (auto it = divided_.find(key); it != divided_.end())
    return it->second;
  QMatrix m;
  const bool odd = (dims().parity(a) + dims().parity(b)) % 2 != 0;
  if (M == 0) {
    m = identity();
  } else if (odd && M >= 2) {
    if (!dims().valid_index(a) || !dims().valid_index(b) || a == b)
      throw std::invalid_argument("root vector E_{a,b}: bad indices");
    m = zero();
  } else {
    const QMatrix &x = root(a, b);
    QMatrix p = x;
    for (int k = 1; k < M; ++k)
      p = p * x;
    m = divide_entries(p, quantum_factorial(M));
  }
  return divided_.emplace(key, std::move(m)).first->second;
}

const QMatrix &QuantumRep::k_pow(int a, int b, int e) {
  Lock lock(mutex_);
  auto key = std::make_tuple(a, b, e);
  if (auto it = kpows_.find(key); it != kpows_.end())
    return it->second;
  QMatrix m = k_power(a, e);
  if (b)
    m = m * k_power(b, -e);
  return kpows_.emplace(key, std::move(m)).first->second;
}

const QMatrix &QuantumRep::k_binom(int a, int b, int c, int t) {
  Lock lock(mutex_);
  if (t < 0)
    throw std::invalid_argument("K-binomial order must be nonnegative");
  auto key = std::make_tuple(a, b, c, t);
  if (auto it = kbinoms_.find(key); it != kbinoms_.end())
    return it->second;
  // Product of (K q_a^{c-s+1} - K^{-1} q_a^{-c+s-1}) / (q_a^s - q_a^{-s}) over s,
  // evaluated entrywise on the diagonal K = K_{a,b}.
  const QMatrix &kk = k_pow(a, b, 1);
  std::map<int, RatFn> by_exponent;
  std::vector<RatFn> diag(size());
  for (std::size_t p = 0; p < size(); ++p) {
    const int k = kk.at(p, p).num().low_degree();
    auto it = by_exponent.find(k);
    if (it == by_exponent.end()) {
      RatFn v = 1;
      for (int s = 1; s <= t; ++s) {
        const LaurentPoly x = LaurentPoly::q(k);
        const LaurentPoly xinv = LaurentPoly::q(-k);
        LaurentPoly num = x * q_index(dims(), a, c - s + 1) - xinv * q_index(dims(), a, -c + s - 1);
        LaurentPoly den = q_index(dims(), a, s) - q_index(dims(), a, -s);
        v *= RatFn(num, den);
      }
      it = by_exponent.emplace(k, v).first;
    }
    diag[p] = it->second;
  }
  return kbinoms_.emplace(key, QMatrix::diagonal(diag)).first->second;
}

QMatrix QuantumRep::k_mu(const Weight &mu) {
  if (mu.size() != static_cast<std::size_t>(dims().rank()) || !mu.nonnegative())
    throw std::invalid_argument("K_mu needs a nonnegative weight of length m+n");
  QMatrix m = identity();
  for (int a = 1; a <= dims().rank(); ++a)
    m = m * k_binom(a, 0, 0, mu[a]);
  return m;
}

const QMatrix &QuantumRep::idempotent(const Weight &lambda) {
  Lock lock(mutex_);
  if (!lambda.in_lambda(dims()))
    throw std::invalid_argument("weight " + lambda.to_string() + " is not in Lambda(m|n,d)");
  if (auto it = idempotents_.find(lambda); it != idempotents_.end())
    return it->second;
  QMatrix product = k_mu(lambda);
  if (!(product == q_weight_projection(basis_, lambda)))
    throw std::logic_error("1_" + lambda.to_string() + ": K-binomial product differs from weight projection");
  return idempotents_.emplace(lambda, std::move(product)).first->second;
}

const QMatrix &QuantumRep::factor(const QFactor &f) {
  switch (f.kind) {
  case QFactor::Kind::Root:
    return divided(f.a, f.b, f.power);
  case QFactor::Kind::KPow:
    return k_pow(f.a, f.b, f.power);
  case QFactor::Kind::KBinom:
    return k_binom(f.a, f.b, f.shift, f.power);
  case QFactor::Kind::Idem:
    return idempotent(f.weight);
  }
  throw std::logic_error("unknown factor");
}

QMatrix QuantumRep::evaluate(const QSum &s) {
  QMatrix out = zero();
  for (const auto &t : s.terms) {
    if (t.factors.empty()) {
      out += scalar_matrix(size(), t.coeff);
      continue;
    }
    QMatrix p = factor(t.factors.front());
    for (std::size_t k = 1; k < t.factors.size() && !p.is_zero(); ++k)
      p = p * factor(t.factors[k]);
    out += p.scaled(t.coeff);
  }
  return out;
}

QMatrix QuantumRep::evaluate(const QWord &w) {
  QMatrix p = identity();
  for (const auto &l : w.letters())
    p = p * letter(l);
  return p;
}

QMatrix QuantumRep::evaluate(const QExpr &x) {
  QMatrix out = zero();
  for (const auto &[w, c] : x.terms())
    out += evaluate(w).scaled(c);
  return out;
}

// ----------------------------------------------------------- free helpers

QMatrix q_weight_projection(const TensorBasis &basis, const Weight &lambda) {
  std::vector<RatFn> diag(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p)
    diag[p] = basis.occurrence(p) == lambda ? 1 : 0;
  return QMatrix::diagonal(diag);
}

QMatrix q_supercommutator(const QMatrix &x, const QMatrix &y, int px, int py) {
  QMatrix xy = x * y;
  QMatrix yx = y * x;
  return (px * py) % 2 ? xy + yx : xy - yx;
}

QMatrix rho_q_generator(const Dims &dims, const GeneratorTag &g) { return QuantumRep(dims).generator(g); }

QMatrix rho_q_divided(const Dims &dims, int a, int b, int M) { return QuantumRep(dims).divided(a, b, M); }

QMatrix rho_q_k_binom(const Dims &dims, int a, int c, int t) { return QuantumRep(dims).k_binom(a, 0, c, t); }

QMatrix rho_q_idempotent(const Dims &dims, const Weight &lambda) { return QuantumRep(dims).idempotent(lambda); }

// -------------------------------------------------------------- relations

namespace {

void q_weight_shift_check(QuantumRep &rep, Tally &tally, const QMatrix &x, const Weight &shift, bool idem_right,
                          const std::string &where) {
  const Dims &dims = rep.dims();
  for (const Weight &lambda : enumerate_weights(dims)) {
    const Weight target = lambda + shift;
    QMatrix lhs = idem_right ? x * rep.idempotent(lambda) : rep.idempotent(lambda) * x;
    QMatrix rhs = rep.zero();
    if (target.in_lambda(dims))
      rhs = idem_right ? rep.idempotent(target) * x : x * rep.idempotent(target);
    expect_equal(tally, rep.basis(), lhs, rhs, where + " lambda=" + lambda.to_string());
  }
}

} // namespace

VerificationReport verify_relations_quantum(const Dims &dims) {
  QuantumRep rep(dims);
  const TensorBasis &basis = rep.basis();
  const int rank = dims.rank();
  const int m = dims.m();
  const std::size_t n = rep.size();
  const auto len = static_cast<std::size_t>(rank);
  using GK = GeneratorTag::Kind;
  auto E = [&](int a) -> const QMatrix & { return rep.generator({GK::E, a}); };
  auto Fm = [&](int a) -> const QMatrix & { return rep.generator({GK::F, a}); };
  auto K = [&](int a, int e) -> const QMatrix & { return rep.k_power(a, e); };
  auto R = [&](int a, int b) -> const QMatrix & { return rep.root(a, b); };
  auto qa = [&](int a, int e) { return RatFn(q_index(dims, a, e)); };
  auto par = [&](int a) { return a == m ? 1 : 0; };
  VerificationReport out;

  {
    Tally t("Q1", "K_a^M K_b^N = K_b^N K_a^M, K_a K_a^{-1} = K_a^{-1} K_a = 1");
    for (int a = 1; a <= rank; ++a) {
      expect_equal(t, basis, K(a, 1) * K(a, -1), rep.identity(), params({{"a", a}}));
      expect_equal(t, basis, K(a, -1) * K(a, 1), rep.identity(), params({{"a", a}}));
      for (int b = 1; b <= rank; ++b)
        for (int M : {1, -1})
          for (int N : {1, -1})
            expect_equal(t, basis, K(a, M) * K(b, N), K(b, N) * K(a, M),
                         params({{"a", a}, {"b", b}, {"M", M}, {"N", N}}));
    }
    out.add(t.result());
  }
  {
    Tally t("Q2", "K_a E_{b,b+1} = q_a^{delta_ab - delta_a,b+1} E_{b,b+1} K_a, and the mirror rule for E_{b+1,b}");
    for (int a = 1; a <= rank; ++a)
      for (int b = 1; b < rank; ++b) {
        const int x = (a == b) - (a == b + 1);
        expect_equal(t, basis, K(a, 1) * E(b), (E(b) * K(a, 1)).scaled(qa(a, x)), params({{"a", a}, {"E", b}}));
        expect_equal(t, basis, K(a, 1) * Fm(b), (Fm(b) * K(a, 1)).scaled(qa(a, -x)), params({{"a", a}, {"F", b}}));
      }
    out.add(t.result());
  }
  {
    Tally t("Q3", "[E_{a,a+1},E_{b+1,b}] = delta_ab (K_aK_{a+1}^{-1} - K_a^{-1}K_{a+1})/(q_a - q_a^{-1})");
    for (int a = 1; a < rank; ++a)
      for (int b = 1; b < rank; ++b) {
        QMatrix rhs = rep.zero();
        if (a == b) {
          const RatFn inv(LaurentPoly(1), q_index(dims, a, 1) - q_index(dims, a, -1));
          rhs = (K(a, 1) * K(a + 1, -1) - K(a, -1) * K(a + 1, 1)).scaled(inv);
        }
        expect_equal(t, basis, q_supercommutator(E(a), Fm(b), par(a), par(b)), rhs, params({{"a", a}, {"b", b}}));
      }
    out.add(t.result());
    Tally far("Q3 distant commutation", "E_{a+1,a}E_{b+1,b} = E_{b+1,b}E_{a+1,a}, E_{a,a+1}E_{b,b+1} = E_{b,b+1}E_{a,a+1}, |a-b|>1");
    for (int a = 1; a < rank; ++a)
      for (int b = 1; b < rank; ++b) {
        if (std::abs(a - b) <= 1)
          continue;
        expect_equal(far, basis, E(a) * E(b), E(b) * E(a), params({{"E", a}, {"E", b}}));
        expect_equal(far, basis, Fm(a) * Fm(b), Fm(b) * Fm(a), params({{"F", a}, {"F", b}}));
      }
    out.add(far.result());
  }
  if (m < rank) {
    Tally t("Q4", "E_{m,m+1}^2 = E_{m+1,m}^2 = 0");
    expect_equal(t, basis, E(m) * E(m), rep.zero(), "E_m^2");
    expect_equal(t, basis, Fm(m) * Fm(m), rep.zero(), "F_m^2");
    out.add(t.result());
  }
  if (dims.m() >= 2 && dims.n() >= 2) {
    Tally t("Q5", "Serre relations (a)-(d), a != m, and [E_{m+1,m},E_{m+2,m-1}] = [E_{m,m+1},E_{m-1,m+2}] = 0");
    for (int a = 1; a <= rank - 2; ++a) {
      if (a == m)
        continue;
      expect_equal(t, basis, R(a + 1, a) * R(a + 2, a), (R(a + 2, a) * R(a + 1, a)).scaled(qa(a, 1)),
                   "(a) " + params({{"a", a}}));
      expect_equal(t, basis, R(a, a + 1) * R(a, a + 2), (R(a, a + 2) * R(a, a + 1)).scaled(qa(a, 1)),
                   "(b) " + params({{"a", a}}));
    }
    for (int a = 2; a <= rank - 1; ++a) {
      if (a == m)
        continue;
      expect_equal(t, basis, R(a + 1, a - 1) * R(a + 1, a), (R(a + 1, a) * R(a + 1, a - 1)).scaled(qa(a, 1)),
                   "(c) " + params({{"a", a}}));
      expect_equal(t, basis, R(a - 1, a + 1) * R(a, a + 1), (R(a, a + 1) * R(a - 1, a + 1)).scaled(qa(a, 1)),
                   "(d) " + params({{"a", a}}));
    }
    expect_equal(t, basis, q_supercommutator(R(m + 1, m), R(m + 2, m - 1), 1, 1), rep.zero(), "[E_{m+1,m},E_{m+2,m-1}]");
    expect_equal(t, basis, q_supercommutator(R(m, m + 1), R(m - 1, m + 2), 1, 1), rep.zero(), "[E_{m,m+1},E_{m-1,m+2}]");
    out.add(t.result());
  }
  {
    Tally t("Q6", "K_1...K_m K_{m+1}^{-1}...K_{m+n}^{-1} = q^d");
    QMatrix p = rep.identity();
    for (int a = 1; a <= rank; ++a)
      p = p * K(a, dims.parity(a) ? -1 : 1);
    expect_equal(t, basis, p, scalar_matrix(n, RatFn(LaurentPoly::q(dims.d()))), "");
    out.add(t.result());
  }
  {
    Tally t("Q7", "(K_a - 1)(K_a - q_a)...(K_a - q_a^d) = 0");
    Tally minimal("Q7 minimality", "no proper factor of prod_{s=0}^d (x - q_a^s) kills K_a");
    for (int a = 1; a <= rank; ++a) {
      std::vector<QMatrix> factors;
      for (int s = 0; s <= dims.d(); ++s)
        factors.push_back(K(a, 1) - scalar_matrix(n, qa(a, s)));
      QMatrix full = rep.identity();
      for (const auto &x : factors)
        full = full * x;
      expect_equal(t, basis, full, rep.zero(), params({{"a", a}}));
      for (std::size_t skip = 0; skip < factors.size(); ++skip) {
        QMatrix part = rep.identity();
        for (std::size_t k = 0; k < factors.size(); ++k)
          if (k != skip)
            part = part * factors[k];
        minimal.record(!part.is_zero(), params({{"a", a}, {"omitted root exponent", static_cast<long>(skip)}}));
      }
    }
    out.add(t.result());
    out.add(minimal.result());
  }

  const auto weights = enumerate_weights(dims);
  {
    Tally t("Q1'", "1_lambda 1_mu = delta 1_lambda, sum 1_lambda = 1");
    QMatrix sum = rep.zero();
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
    Tally t("Q2'", "E_a 1_lambda = 1_{lambda+alpha_a} E_a and its three companions");
    for (int a = 1; a < rank; ++a) {
      const Weight al = simple_root(dims, a).as_weight(len);
      const Weight nal = -1 * al;
      q_weight_shift_check(rep, t, E(a), al, true, "E" + std::to_string(a) + " 1_lambda");
      q_weight_shift_check(rep, t, Fm(a), nal, true, "F" + std::to_string(a) + " 1_lambda");
      q_weight_shift_check(rep, t, E(a), nal, false, "1_lambda E" + std::to_string(a));
      q_weight_shift_check(rep, t, Fm(a), al, false, "1_lambda F" + std::to_string(a));
    }
    out.add(t.result());
  }
  {
    Tally t("Q3'", "[E_a,F_b] = delta_ab sum_lambda [lambda_b - (-1)^{E_a F_b} lambda_{b+1}] 1_lambda");
    for (int a = 1; a < rank; ++a)
      for (int b = 1; b < rank; ++b) {
        QMatrix rhs = rep.zero();
        if (a == b)
          for (const auto &lam : weights) {
            const int z = par(a) ? lam[b] + lam[b + 1] : lam[b] - lam[b + 1];
            rhs += rep.idempotent(lam).scaled(RatFn(parity_twist(gaussian_binomial(z, 1), dims.parity(b))));
          }
        expect_equal(t, basis, q_supercommutator(E(a), Fm(b), par(a), par(b)), rhs, params({{"a", a}, {"b", b}}));
      }
    out.add(t.result());
  }
  return out;
}

// ------------------------------------------------------------ commutation

VerificationReport verify_commutation_quantum(const Dims &dims, int max_power) {
  QuantumRep rep(dims);
  const auto catalogue = identity_catalogue(dims, max_power);
  VerificationReport out;

  {
    Tally t("root vector via-independence", "E_{a,b} is independent of the intermediate index c");
    for (int a = 1; a <= dims.rank(); ++a)
      for (int b = 1; b <= dims.rank(); ++b) {
        if (std::abs(a - b) <= 1)
          continue;
        for (int c = std::min(a, b) + 1; c < std::max(a, b); ++c)
          expect_equal(t, rep.basis(), rep.root(a, b, c), rep.root(a, b),
                       params({{"a", a}, {"b", b}, {"via", c}}));
      }
    out.add(t.result());
  }

  // Build every factor matrix once, then evaluate the instances in parallel.
  for (const auto &inst : catalogue)
    for (const QSum *s : {&inst.lhs, &inst.rhs})
      for (const auto &term : s->terms)
        for (const auto &f : term.factors)
          rep.factor(f);

  std::vector<std::string> witnesses(catalogue.size());
  std::vector<char> ok(catalogue.size(), 0);
  parallel_for(catalogue.size(), [&](std::size_t i) {
    const QMatrix lhs = rep.evaluate(catalogue[i].lhs);
    const QMatrix rhs = rep.evaluate(catalogue[i].rhs);
    ok[i] = lhs == rhs;
    if (!ok[i])
      witnesses[i] = catalogue[i].label() + ": " + difference_witness(rep.basis(), lhs, rhs);
  });

  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    const auto &inst = catalogue[i];
    auto it = tallies.find(inst.name);
    if (it == tallies.end()) {
      order.push_back(inst.name);
      it = tallies.emplace(inst.name, Tally(inst.name, inst.citation)).first;
    }
    it->second.record(ok[i], witnesses[i]);
  }
  for (const auto &name : order)
    out.add(tallies.at(name).result());
  return out;
}

// ------------------------------------------------------ idempotent calculus

VerificationReport verify_idempotents_quantum(const Dims &dims) {
  QuantumRep rep(dims);
  const TensorBasis &basis = rep.basis();
  const auto len = static_cast<std::size_t>(dims.rank());
  const auto weights = enumerate_weights(dims);
  VerificationReport out;
  auto lam_mu = [&](const Weight &lam, const Weight &mu) {
    LaurentPoly c = 1;
    for (int a = 1; a <= dims.rank(); ++a)
      c *= parity_twist(gaussian_binomial(lam[a], mu[a]), dims.parity(a));
    return RatFn(c);
  };
  {
    Tally t("quantum idempotent product form", "prod_a [K_a;0 over lambda_a] equals the weight-space projection");
    for (const auto &lam : weights)
      expect_equal(t, basis, rep.k_mu(lam), q_weight_projection(basis, lam), "lambda=" + lam.to_string());
    out.add(t.result());
  }
  {
    Tally t("quantum orthogonal idempotents", "1_lambda 1_mu = delta 1_lambda and sum_lambda 1_lambda = 1");
    QMatrix sum = rep.zero();
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
    Tally t("K_mu vanishes above d", "K_mu = 0 when |mu| > d");
    for (int extra = 1; extra <= 2; ++extra)
      for (const auto &mu : weights_of_total(len, dims.d() + extra))
        expect_equal(t, basis, rep.k_mu(mu), rep.zero(), "mu=" + mu.to_string());
    out.add(t.result());
  }
  {
    Tally t("K eigenvalues", "K_a^{+-1} 1_lambda = q_a^{+-lambda_a} 1_lambda");
    for (const auto &lam : weights)
      for (int a = 1; a <= dims.rank(); ++a)
        for (int e : {1, -1})
          expect_equal(t, basis, rep.k_power(a, e) * rep.idempotent(lam),
                       rep.idempotent(lam).scaled(RatFn(q_index(dims, a, e * lam[a]))),
                       "lambda=" + lam.to_string() + " " + params({{"a", a}, {"e", e}}));
    out.add(t.result());
  }
  {
    Tally t("K-binomial eigenvalues", "[K_a;c over t] 1_lambda = [lambda_a + c over t] 1_lambda");
    for (const auto &lam : weights)
      for (int a = 1; a <= dims.rank(); ++a)
        for (int c = -1; c <= 1; ++c)
          for (int k = 0; k <= dims.d() + 1; ++k) {
            const RatFn v(parity_twist(gaussian_binomial(lam[a] + c, k), dims.parity(a)));
            expect_equal(t, basis, rep.k_binom(a, 0, c, k) * rep.idempotent(lam), rep.idempotent(lam).scaled(v),
                         "lambda=" + lam.to_string() + " " + params({{"a", a}, {"c", c}, {"t", k}}));
          }
    out.add(t.result());
  }
  {
    Tally act("K_mu on 1_lambda", "K_mu 1_lambda = lambda_mu 1_lambda");
    Tally dec("K_mu decomposition", "K_mu = sum_lambda lambda_mu 1_lambda");
    for (int total = 0; total <= dims.d() + 1; ++total)
      for (const auto &mu : weights_of_total(len, total)) {
        QMatrix km = rep.k_mu(mu);
        QMatrix sum = rep.zero();
        for (const auto &lam : weights) {
          QMatrix scaled = rep.idempotent(lam).scaled(lam_mu(lam, mu));
          expect_equal(act, basis, km * rep.idempotent(lam), scaled, "mu=" + mu.to_string() + " lambda=" + lam.to_string());
          sum += scaled;
        }
        expect_equal(dec, basis, km, sum, "mu=" + mu.to_string());
      }
    out.add(act.result());
    out.add(dec.result());
  }
  return out;
}

// ------------------------------------------------------------------- rank

RankResult basis_rank_q(const Dims &dims, const RankOptions &opts) {
  if (opts.q0 == 0 || opts.q0 == 1 || opts.q0 == -1)
    throw std::invalid_argument("specialization point must avoid 0, 1 and -1");
  QuantumRep rep(dims);
  const auto ys = enumerate_basis_Yq(dims);
  std::vector<std::vector<std::pair<std::size_t, RatFn>>> images;
  images.reserve(ys.size());
  for (const auto &y : ys)
    images.push_back(rep.evaluate(qbasis_product(dims, y)).flattened());

  RankResult res;
  res.size = ys.size();
  if (!opts.force_exact) {
    Echelon<Rational> ech;
    for (const auto &img : images) {
      SparseVector<Rational> v;
      for (const auto &[k, c] : img) {
        Rational x = specialize(c, opts.q0);
        if (sgn(x) != 0)
          v.emplace_back(k, std::move(x));
      }
      ech.insert(std::move(v));
    }
    res.specialized_rank = ech.rank();
    if (res.specialized_rank == res.size)
      return res;
  }

  // Exact fallback: clear denominators and eliminate over Z[q,q^{-1}].
  std::set<std::size_t> cols;
  for (const auto &img : images)
    for (const auto &e : img)
      cols.insert(e.first);
  std::map<std::size_t, std::size_t> col_index;
  for (std::size_t c : cols)
    col_index.emplace(c, col_index.size());
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto &img : images) {
    LaurentPoly common = 1;
    for (const auto &[k, c] : img)
      if (!c.is_laurent() && !LaurentPoly::divide_exact(common, c.den()))
        common *= c.den();
    std::vector<LaurentPoly> row(cols.size(), LaurentPoly(0));
    for (const auto &[k, c] : img) {
      RatFn scaled = c * RatFn(common);
      if (!scaled.is_laurent())
        throw std::logic_error("basis_rank_q: failed to clear denominators");
      row[col_index.at(k)] = scaled.num();
    }
    rows.push_back(std::move(row));
  }
  res.exact_rank = bareiss_rank(std::move(rows));
  return res;
}

VerificationReport basis_rank_certify_q(const Dims &dims, const RankOptions &opts) {
  const RankResult r = basis_rank_q(dims, opts);
  const std::uint64_t expected = dimension_count(dims);
  const bool ok = r.rank() == r.size && r.size == expected;
  std::string detail = "rank=" + std::to_string(r.rank()) + " |Y_q|=" + std::to_string(r.size) +
                       " count=" + std::to_string(expected);
  detail += r.exact_rank ? " (exact elimination over Z[q,q^-1])" : " (specialized at q0=" + to_string(opts.q0) + ")";
  VerificationReport out;
  out.add("basis Y_q", "Y_q is a Q(q)-basis of S_q(m|n,d)", ok, ok ? "" : detail, detail);
  return out;
}

// ------------------------------------------------------------------ Omega

QMatrix sigma_matrix(const TensorBasis &basis) {
  std::vector<RatFn> diag(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p)
    diag[p] = basis.parity(p) ? -1 : 1;
  return QMatrix::diagonal(diag);
}

OmegaParts omega_construct(const Dims &dims) {
  if (dims.d() < 1)
    throw std::invalid_argument("Omega needs d >= 1");
  QuantumRep rep(dims);
  const std::size_t n = rep.size();
  const int d = dims.d();
  OmegaParts parts;
  parts.Omega = rep.identity();
  for (int a = 1; a <= dims.rank(); ++a) {
    const QMatrix &K = rep.k_power(a, 1);
    const int pa = dims.parity(a);
    QMatrix omega_a = rep.zero();
    for (int s = 0; s <= d; ++s) {
      QMatrix w = rep.identity();
      RatFn den = 1;
      for (int k = 0; k <= d; ++k) {
        if (k == s)
          continue;
        w = w * (K - scalar_matrix(n, RatFn(q_index(dims, a, k))));
        den *= RatFn(q_index(dims, a, s) - q_index(dims, a, k));
      }
      const long sign = (s * pa) % 2 ? -1 : 1;
      w = w * (K - scalar_matrix(n, RatFn(q_index(dims, a, s) - LaurentPoly(sign))));
      w = w.scaled(den.inverse());
      omega_a += w;
      parts.omega_s_a.emplace(std::make_pair(s, a), std::move(w));
    }
    parts.Omega = parts.Omega * omega_a;
    parts.Omega_a.push_back(std::move(omega_a));
  }
  parts.sigma = sigma_matrix(rep.basis());
  return parts;
}

VerificationReport verify_omega(const Dims &dims) {
  const OmegaParts parts = omega_construct(dims);
  QuantumRep rep(dims);
  const TensorBasis &basis = rep.basis();
  VerificationReport out;
  {
    Tally t("omega_{s,a} action", "omega_{s,a} acts as (-1)^{s parity(a)} where r_a = s and as 0 elsewhere");
    for (const auto &[key, w] : parts.omega_s_a) {
      const auto [s, a] = key;
      std::vector<RatFn> diag(basis.size());
      for (std::size_t p = 0; p < basis.size(); ++p)
        if (basis.occurrence(p)[a] == s)
          diag[p] = (s * dims.parity(a)) % 2 ? -1 : 1;
      expect_equal(t, basis, w, QMatrix::diagonal(diag), params({{"s", s}, {"a", a}}));
    }
    out.add(t.result());
  }
  {
    std::string diag;
    for (std::size_t p = 0; p < basis.size(); ++p)
      diag += (p ? "," : "") + parts.sigma.at(p, p).to_string();
    Tally t("Omega equals sigma_d", "Omega = prod_a sum_s omega_{s,a} = sigma_d");
    expect_equal(t, basis, parts.Omega, parts.sigma, "");
    CheckResult r = t.result();
    r.detail += " sigma_d diagonal [" + diag + "]";
    out.add(std::move(r));
  }
  {
    Tally t("Omega grading action", "Omega rho(g) Omega^{-1} = (-1)^{deg g} rho(g)");
    expect_equal(t, basis, parts.Omega * parts.Omega, rep.identity(), "Omega^2");
    for (const auto &g : quantum_generators(dims)) {
      const QMatrix &x = rep.generator(g);
      QMatrix rhs = x * parts.Omega;
      if (g.grading(dims))
        rhs = -rhs;
      expect_equal(t, basis, parts.Omega * x, rhs, g.to_string());
    }
    out.add(t.result());
  }
  return out;
}

} // namespace superschur
