#include "superschur/kostant.hpp"

#include "superschur/qfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superschur {

KostantFactor KostantFactor::root_power(const Root &root, int r) {
  if (r < 0)
    throw std::invalid_argument("root power must be nonnegative");
  KostantFactor f;
  f.kind = Kind::RootPower;
  f.root = root;
  f.power = r;
  return f;
}

KostantFactor KostantFactor::cartan_binom(int i, int s) {
  if (s < 0)
    throw std::invalid_argument("Cartan binomial order must be nonnegative");
  KostantFactor f;
  f.kind = Kind::CartanBinom;
  f.index = i;
  f.power = s;
  return f;
}

KostantFactor KostantFactor::k_unit(int i, int exponent) {
  if (exponent != 1 && exponent != -1)
    throw std::invalid_argument("K unit exponent must be +1 or -1");
  KostantFactor f;
  f.kind = Kind::KUnit;
  f.index = i;
  f.power = exponent;
  return f;
}

KostantFactor KostantFactor::idem(Weight lambda) {
  KostantFactor f;
  f.kind = Kind::Idem;
  f.weight = std::move(lambda);
  return f;
}

std::string KostantFactor::to_string() const {
  switch (kind) {
  case Kind::RootPower:
    return "x[" + std::to_string(root.i) + "," + std::to_string(root.j) + "]^(" + std::to_string(power) + ")";
  case Kind::CartanBinom:
    return "binom(H" + std::to_string(index) + "," + std::to_string(power) + ")";
  case Kind::KUnit:
    return "K" + std::to_string(index) + (power < 0 ? "^-1" : "");
  case Kind::Idem:
    return "1_" + weight.to_string();
  }
  return {};
}

KostantMonomial::KostantMonomial(std::vector<KostantFactor> factors) {
  for (const auto &f : factors)
    append(f);
}

KostantMonomial &KostantMonomial::append(const KostantFactor &f) {
  if (f.kind == KostantFactor::Kind::RootPower && f.root.odd() && f.power >= 2)
    zero_ = true;
  grading_ = (grading_ + f.grading()) % 2;
  factors_.push_back(f);
  return *this;
}

KostantMonomial &KostantMonomial::append(const KostantMonomial &m) {
  for (const auto &f : m.factors_)
    append(f);
  zero_ = zero_ || m.zero_;
  return *this;
}

std::string KostantMonomial::to_string() const {
  if (factors_.empty())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    s += (k ? " " : "") + factors_[k].to_string();
  return s;
}

// -------------------------------------------------------------- ExponentTable

void ExponentTable::set(const Root &alpha, int value) {
  if (!alpha.positive())
    throw std::invalid_argument("exponent tables are indexed by positive roots");
  if (value < 0)
    throw std::invalid_argument("exponents must be nonnegative");
  if (alpha.odd() && value > 1)
    throw std::invalid_argument("odd root " + alpha.to_string() + " admits exponent 0 or 1 only");
  if (value == 0)
    entries_.erase(alpha);
  else
    entries_[alpha] = value;
}

int ExponentTable::get(const Root &alpha) const {
  auto it = entries_.find(alpha);
  return it == entries_.end() ? 0 : it->second;
}

int ExponentTable::total() const {
  int t = 0;
  for (const auto &[r, v] : entries_)
    t += v;
  return t;
}

Weight ExponentTable::root_sum(std::size_t len) const {
  Weight w = Weight::zero(len);
  for (const auto &[r, v] : entries_)
    w += v * r.as_weight(len);
  return w;
}

// -------------------------------------------------------------------- content

ContentVec content(const KostantMonomial &mono, ContentFlavor flavor, std::size_t len) {
  ContentVec out = Weight::zero(len);
  for (const auto &f : mono.factors()) {
    if (f.kind != KostantFactor::Kind::RootPower || f.power == 0)
      continue;
    int slot = 0;
    switch (flavor) {
    case ContentFlavor::Chi:
      slot = std::max(f.root.i, f.root.j);
      break;
    case ContentFlavor::ChiL:
      slot = f.root.i;
      break;
    case ContentFlavor::ChiR:
      slot = f.root.j;
      break;
    }
    out[slot] += f.power;
  }
  return out;
}

KostantMonomial e_monomial(const ExponentTable &a) {
  KostantMonomial m;
  for (const auto &[r, v] : a.entries())
    m.append(KostantFactor::root_power(r, v));
  return m;
}

KostantMonomial f_monomial(const ExponentTable &c) {
  KostantMonomial m;
  for (const auto &[r, v] : c.entries())
    m.append(KostantFactor::root_power(r.negated(), v));
  return m;
}

KostantMonomial BasisElement::monomial() const {
  KostantMonomial m = e_monomial(A);
  m.append(KostantFactor::idem(lambda));
  m.append(f_monomial(C));
  return m;
}

namespace {

std::string table_string(const ExponentTable &t) {
  std::string s = "{";
  bool first = true;
  for (const auto &[r, v] : t.entries()) {
    s += (first ? "" : ",") + std::string("(") + std::to_string(r.i) + "," + std::to_string(r.j) + "):" +
         std::to_string(v);
    first = false;
  }
  return s + "}";
}

} // namespace

std::string BasisElement::to_string() const {
  return "e_" + table_string(A) + " 1_" + lambda.to_string() + " f_" + table_string(C);
}

// ------------------------------------------------------------- enumeration

std::uint64_t dimension_count(const Dims &dims) {
  const long m = dims.m();
  const long n = dims.n();
  const long d = dims.d();
  const long odd = 2 * m * n;
  const long even = m * m + n * n;
  Integer total = 0;
  for (long k = 0; k <= std::min(d, odd); ++k)
    total += binomial(odd, k) * binomial(even + d - k - 1, d - k);
  return total.get_ui();
}

bool satisfies_content_condition(const ExponentTable &a, const Weight &lambda, const ExponentTable &c) {
  KostantMonomial ef = e_monomial(a);
  ef.append(f_monomial(c));
  return weight_leq(content(ef, ContentFlavor::Chi, lambda.size()), lambda);
}

namespace {

// Tables with each entry bounded so that the chi content stays under budget.
void tables_rec(const std::vector<Root> &roots, std::size_t k, Weight &budget, ExponentTable &cur,
                std::vector<ExponentTable> &out) {
  if (k == roots.size()) {
    out.push_back(cur);
    return;
  }
  const Root &r = roots[k];
  const int cap = r.odd() ? std::min(1, budget[r.j]) : budget[r.j];
  for (int v = 0; v <= cap; ++v) {
    cur.set(r, v);
    budget[r.j] -= v;
    tables_rec(roots, k + 1, budget, cur, out);
    budget[r.j] += v;
  }
  cur.set(r, 0);
}

// Tables with total exponent at most `limit`.
void tables_total_rec(const std::vector<Root> &roots, std::size_t k, int limit, ExponentTable &cur,
                      std::vector<ExponentTable> &out) {
  if (k == roots.size()) {
    out.push_back(cur);
    return;
  }
  const Root &r = roots[k];
  const int cap = r.odd() ? std::min(1, limit) : limit;
  for (int v = 0; v <= cap; ++v) {
    cur.set(r, v);
    tables_total_rec(roots, k + 1, limit - v, cur, out);
  }
  cur.set(r, 0);
}

void weights_bounded_rec(std::size_t slot, int limit, std::vector<int> &cur, std::vector<Weight> &out) {
  if (slot == cur.size()) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= limit; ++v) {
    cur[slot] = v;
    weights_bounded_rec(slot + 1, limit - v, cur, out);
  }
  cur[slot] = 0;
}

} // namespace

std::vector<ExponentTable> enumerate_tables_within(const Dims &dims, const Weight &budget) {
  std::vector<ExponentTable> out;
  Weight b = budget;
  ExponentTable cur;
  tables_rec(positive_roots(dims), 0, b, cur, out);
  return out;
}

std::vector<BasisElement> enumerate_basis_Y(const Dims &dims) {
  const auto len = static_cast<std::size_t>(dims.rank());
  std::vector<BasisElement> out;
  for (const Weight &lambda : enumerate_weights(dims)) {
    for (const ExponentTable &a : enumerate_tables_within(dims, lambda)) {
      Weight rest = lambda - content(e_monomial(a), ContentFlavor::Chi, len);
      for (const ExponentTable &c : enumerate_tables_within(dims, rest))
        out.push_back(BasisElement{a, lambda, c});
    }
  }
  return out;
}

std::vector<PElement> enumerate_P(const Dims &dims) {
  const auto len = static_cast<std::size_t>(dims.rank());
  const auto roots = positive_roots(dims);
  std::vector<ExponentTable> tables;
  ExponentTable cur;
  tables_total_rec(roots, 0, dims.d(), cur, tables);

  std::vector<PElement> out;
  for (const auto &a : tables) {
    const int after_a = dims.d() - a.total();
    std::vector<Weight> bs;
    std::vector<int> tail(len - 1, 0);
    weights_bounded_rec(0, after_a, tail, bs);
    for (const auto &btail : bs) {
      Weight b = Weight::zero(len);
      std::copy(btail.coords.begin(), btail.coords.end(), b.coords.begin() + 1);
      const int after_b = after_a - b.total();
      for (const auto &c : tables)
        if (c.total() <= after_b)
          out.push_back(PElement{a, b, c});
    }
  }
  return out;
}

BasisElement p_to_y(const PElement &p, const Dims &dims) {
  const auto len = static_cast<std::size_t>(dims.rank());
  if (p.B.size() != len || !p.B.nonnegative() || p.B[1] != 0)
    throw std::invalid_argument("p_to_y: B must be nonnegative with B_1 = 0");
  const int slack = dims.d() - p.A.total() - p.B.total() - p.C.total();
  if (slack < 0)
    throw std::invalid_argument("p_to_y: |A|+|B|+|C| exceeds d");
  KostantMonomial ef = e_monomial(p.A);
  ef.append(f_monomial(p.C));
  Weight lambda = slack * Weight::unit(len, 1) + p.B + content(ef, ContentFlavor::Chi, len);
  return BasisElement{p.A, lambda, p.C};
}

PElement y_to_p(const BasisElement &y, const Dims &dims) {
  const auto len = static_cast<std::size_t>(dims.rank());
  if (!y.lambda.in_lambda(dims))
    throw std::invalid_argument("y_to_p: lambda is not in Lambda(m|n,d)");
  if (!satisfies_content_condition(y.A, y.lambda, y.C))
    throw std::invalid_argument("y_to_p: element violates chi(e_A f_C) <= lambda");
  KostantMonomial ef = e_monomial(y.A);
  ef.append(f_monomial(y.C));
  Weight b = y.lambda - content(ef, ContentFlavor::Chi, len) - y.lambda[1] * Weight::unit(len, 1);
  return PElement{y.A, b, y.C};
}

} // namespace superschur
