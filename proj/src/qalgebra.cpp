#include "superschur/qalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace superschur {

// ------------------------------------------------------------------ words

QLetter QLetter::inverse_image() const {
  switch (kind) {
  case Kind::E:
    return {Kind::F, index};
  case Kind::F:
    return {Kind::E, index};
  case Kind::K:
    return {Kind::Kinv, index};
  case Kind::Kinv:
    return {Kind::K, index};
  }
  return *this;
}

std::string QLetter::to_string() const {
  const std::string i = std::to_string(index);
  switch (kind) {
  case Kind::E:
    return "E" + i;
  case Kind::F:
    return "F" + i;
  case Kind::K:
    return "K" + i;
  case Kind::Kinv:
    return "K" + i + "^-1";
  }
  return {};
}

QWord::QWord(std::vector<QLetter> letters) {
  for (const auto &l : letters)
    append(l);
}

QWord &QWord::append(const QLetter &l) {
  using K = QLetter::Kind;
  if (!letters_.empty()) {
    const QLetter &last = letters_.back();
    const bool k_pair = (last.kind == K::K && l.kind == K::Kinv) || (last.kind == K::Kinv && l.kind == K::K);
    if (k_pair && last.index == l.index) {
      letters_.pop_back();
      return *this;
    }
  }
  letters_.push_back(l);
  return *this;
}

QWord &QWord::append(const QWord &w) {
  for (const auto &l : w.letters_)
    append(l);
  return *this;
}

int QWord::grading(const Dims &dims) const {
  int g = 0;
  for (const auto &l : letters_)
    if ((l.kind == QLetter::Kind::E || l.kind == QLetter::Kind::F) && l.index == dims.m())
      g ^= 1;
  return g;
}

std::string QWord::to_string() const {
  if (letters_.empty())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k)
    s += (k ? " " : "") + letters_[k].to_string();
  return s;
}

// ------------------------------------------------------------- expressions

QExpr QExpr::word(const QWord &w, const RatFn &c) {
  QExpr e;
  e.add(w, c);
  return e;
}

void QExpr::add(const QWord &w, const RatFn &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

std::optional<int> QExpr::grading(const Dims &dims) const {
  std::optional<int> g;
  for (const auto &[w, c] : terms_) {
    const int x = w.grading(dims);
    if (g && *g != x)
      throw std::logic_error("QExpr: inhomogeneous expression " + to_string());
    g = x;
  }
  return g;
}

QExpr &QExpr::operator+=(const QExpr &o) {
  for (const auto &[w, c] : o.terms_)
    add(w, c);
  return *this;
}

QExpr &QExpr::operator-=(const QExpr &o) {
  for (const auto &[w, c] : o.terms_)
    add(w, -c);
  return *this;
}

QExpr QExpr::scaled(const RatFn &c) const {
  QExpr out;
  if (c.is_zero())
    return out;
  for (const auto &[w, x] : terms_)
    out.add(w, x * c);
  return out;
}

QExpr operator*(const QExpr &a, const QExpr &b) {
  QExpr out;
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_)
      out.add(wa * wb, ca * cb);
  return out;
}

std::string QExpr::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto &[w, c] : terms_) {
    if (!s.empty())
      s += " + ";
    s += "(" + c.to_string() + ")";
    if (!w.empty())
      s += " " + w.to_string();
  }
  return s;
}

LaurentPoly q_index(const Dims &dims, int a, int e) { return LaurentPoly::q(dims.parity(a) ? -e : e); }

// ------------------------------------------------------------ root vectors

QExpr expand_root_vector(const Dims &dims, int a, int b, std::optional<int> via) {
  if (!dims.valid_index(a) || !dims.valid_index(b))
    throw std::invalid_argument("expand_root_vector: index out of range");
  if (a == b)
    throw std::invalid_argument("expand_root_vector: a and b must differ");
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (via && (*via <= lo || *via >= hi))
    throw std::invalid_argument("expand_root_vector: via index " + std::to_string(*via) + " not strictly between " +
                                std::to_string(a) + " and " + std::to_string(b));
  if (b == a + 1)
    return QExpr::letter({QLetter::Kind::E, a});
  if (a == b + 1)
    return QExpr::letter({QLetter::Kind::F, b});
  const int c = via.value_or(lo + 1);
  QExpr x = expand_root_vector(dims, a, c);
  QExpr y = expand_root_vector(dims, c, b);
  const LaurentPoly coeff = q_index(dims, c, a > b ? 1 : -1);
  return x * y - (y * x).scaled(RatFn(coeff));
}

QExpr antiautomorphism(const QExpr &x, bool bar_coefficients) {
  QExpr out;
  for (const auto &[w, c] : x.terms()) {
    QWord img;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
      img.append(it->inverse_image());
    out.add(img, bar_coefficients ? c.bar() : c);
  }
  return out;
}

// --------------------------------------------------------- structured sums

QFactor QFactor::root(int a, int b, int M) {
  if (a == b || M < 0)
    throw std::invalid_argument("QFactor::root: need a != b and M >= 0");
  QFactor f;
  f.kind = Kind::Root;
  f.a = a;
  f.b = b;
  f.power = M;
  return f;
}

QFactor QFactor::kpow(int a, int b, int e) {
  QFactor f;
  f.kind = Kind::KPow;
  f.a = a;
  f.b = b;
  f.power = e;
  return f;
}

QFactor QFactor::kbinom(int a, int b, int c, int t) {
  if (t < 0)
    throw std::invalid_argument("QFactor::kbinom: t must be nonnegative");
  QFactor f;
  f.kind = Kind::KBinom;
  f.a = a;
  f.b = b;
  f.shift = c;
  f.power = t;
  return f;
}

QFactor QFactor::idem(Weight lambda) {
  QFactor f;
  f.kind = Kind::Idem;
  f.weight = std::move(lambda);
  return f;
}

int QFactor::grading(const Dims &dims) const {
  if (kind != Kind::Root)
    return 0;
  return ((dims.parity(a) + dims.parity(b)) * power) % 2;
}

bool QFactor::trivial() const {
  switch (kind) {
  case Kind::Root:
  case Kind::KPow:
  case Kind::KBinom:
    return power == 0;
  case Kind::Idem:
    return false;
  }
  return false;
}

std::string QFactor::to_string() const {
  const std::string ab = b ? std::to_string(a) + "," + std::to_string(b) : std::to_string(a);
  switch (kind) {
  case Kind::Root:
    return "E[" + ab + "]^(" + std::to_string(power) + ")";
  case Kind::KPow:
    return "K[" + ab + "]^" + std::to_string(power);
  case Kind::KBinom:
    return "[K[" + ab + "];" + std::to_string(shift) + " over " + std::to_string(power) + "]";
  case Kind::Idem:
    return "1_" + weight.to_string();
  }
  return {};
}

std::string QTerm::to_string() const {
  std::string s = "(" + coeff.to_string() + ")";
  for (const auto &f : factors)
    s += " " + f.to_string();
  return s;
}

QSum &QSum::add(RatFn coeff, std::vector<QFactor> factors) {
  if (coeff.is_zero())
    return *this;
  std::erase_if(factors, [](const QFactor &f) { return f.trivial(); });
  terms.push_back(QTerm{std::move(coeff), std::move(factors)});
  return *this;
}

std::string QSum::to_string() const {
  if (terms.empty())
    return "0";
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k)
    s += (k ? " + " : "") + terms[k].to_string();
  return s;
}

namespace {

QExpr k_letters(int a, int b, int e) {
  QWord w;
  const auto up = e > 0 ? QLetter::Kind::K : QLetter::Kind::Kinv;
  const auto down = e > 0 ? QLetter::Kind::Kinv : QLetter::Kind::K;
  for (int k = 0; k < std::abs(e); ++k) {
    w.append({up, a});
    if (b)
      w.append({down, b});
  }
  return QExpr::word(w);
}

} // namespace

QExpr to_qexpr(const Dims &dims, const QFactor &f) {
  switch (f.kind) {
  case QFactor::Kind::Root: {
    if (f.power == 0)
      return QExpr::scalar(1);
    if ((dims.parity(f.a) + dims.parity(f.b)) % 2 && f.power >= 2)
      return {};
    const QExpr x = expand_root_vector(dims, f.a, f.b);
    QExpr p = x;
    for (int k = 1; k < f.power; ++k)
      p = p * x;
    return p.scaled(RatFn(LaurentPoly(1), quantum_factorial(f.power)));
  }
  case QFactor::Kind::KPow:
    return k_letters(f.a, f.b, f.power);
  case QFactor::Kind::KBinom: {
    QExpr out = QExpr::scalar(1);
    const QExpr up = k_letters(f.a, f.b, 1);
    const QExpr down = k_letters(f.a, f.b, -1);
    for (int s = 1; s <= f.power; ++s) {
      const int e = f.shift - s + 1;
      const LaurentPoly den = q_index(dims, f.a, s) - q_index(dims, f.a, -s);
      QExpr num = up.scaled(RatFn(q_index(dims, f.a, e))) - down.scaled(RatFn(q_index(dims, f.a, -e)));
      out = out * num.scaled(RatFn(LaurentPoly(1), den));
    }
    return out;
  }
  case QFactor::Kind::Idem: {
    QExpr out = QExpr::scalar(1);
    for (int a = 1; a <= static_cast<int>(f.weight.size()); ++a)
      out = out * to_qexpr(dims, QFactor::kbinom(a, 0, 0, f.weight[a]));
    return out;
  }
  }
  return {};
}

QExpr to_qexpr(const Dims &dims, const QSum &s) {
  QExpr out;
  for (const auto &t : s.terms) {
    QExpr p = QExpr::scalar(t.coeff);
    for (const auto &f : t.factors)
      p = p * to_qexpr(dims, f);
    out += p;
  }
  return out;
}

QSum antiautomorphism(const QSum &s) {
  QSum out;
  for (const auto &t : s.terms) {
    std::vector<QFactor> fs;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      QFactor f = *it;
      if (f.kind == QFactor::Kind::Root)
        std::swap(f.a, f.b);
      else if (f.kind == QFactor::Kind::KPow)
        f.power = -f.power;
      fs.push_back(f);
    }
    out.add(t.coeff.bar(), std::move(fs));
  }
  return out;
}

std::string IdentityInstance::label() const {
  std::string s = name;
  for (const auto &[k, v] : params)
    s += " " + k + "=" + std::to_string(v);
  return s;
}

// -------------------------------------------------------------- catalogue

namespace {

using F = QFactor;

struct CatalogueBuilder {
  const Dims &dims;
  std::vector<IdentityInstance> out;

  bool odd(int a, int b) const { return (dims.parity(a) + dims.parity(b)) % 2 != 0; }
  RatFn qb(int b, int e) const { return RatFn(q_index(dims, b, e)); }
  RatFn qdiff(int b) const { return RatFn(q_index(dims, b, 1) - q_index(dims, b, -1)); }

  IdentityInstance &emit(std::string name, std::vector<std::pair<std::string, int>> params, std::vector<QFactor> lhs,
                         QSum rhs, std::string citation) {
    IdentityInstance inst;
    inst.name = std::move(name);
    inst.params = std::move(params);
    inst.lhs.add(1, std::move(lhs));
    inst.rhs = std::move(rhs);
    inst.citation = std::move(citation);
    out.push_back(std::move(inst));
    return out.back();
  }

  // Solves lhs = c0 * target + rest for the target term.
  void emit_solved(const IdentityInstance &src, const std::vector<QFactor> &target) {
    std::vector<QFactor> key = target;
    std::erase_if(key, [](const QFactor &f) { return f.trivial(); });
    const QTerm *lead = nullptr;
    for (const auto &t : src.rhs.terms)
      if (t.factors == key) {
        lead = &t;
        break;
      }
    if (!lead)
      throw std::logic_error("catalogue: no leading term to solve for in " + src.label());
    const RatFn inv = lead->coeff.inverse();
    IdentityInstance inst;
    inst.name = src.name + " solved";
    inst.params = src.params;
    inst.lhs.add(1, key);
    for (const auto &t : src.lhs.terms)
      inst.rhs.add(t.coeff * inv, t.factors);
    for (const auto &t : src.rhs.terms)
      if (&t != lead)
        inst.rhs.add(-(t.coeff * inv), t.factors);
    inst.citation = "solved for the reordered product: " + src.citation;
    out.push_back(std::move(inst));
  }

  void root_exchange(int a, int b, int c, int d) {
    const RatFn s = odd(a, b) && odd(c, d) ? -1 : 1;
    const std::vector<std::pair<std::string, int>> p = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
    const std::vector<QFactor> lhs = {F::root(a, b, 1), F::root(c, d, 1)};
    const std::vector<QFactor> swapped = {F::root(c, d, 1), F::root(a, b, 1)};
    QSum rhs;
    if (b < c || (c < a && a < b && b < d)) {
      rhs.add(s, swapped);
      emit("root vector exchange (1)", p, lhs, rhs, "E_{a,b}E_{c,d} = (-1)^{ab.cd} E_{c,d}E_{a,b}, b<c or c<a<b<d");
    } else if (a < c && c < b && b == d) {
      rhs.add(s * qb(b, 1), swapped);
      emit("root vector exchange (2)", p, lhs, rhs, "E_{a,b}E_{c,d} = (-1)^{ab.cd} q_b E_{c,d}E_{a,b}, a<c<b=d");
    } else if (a == c && c < b && b < d) {
      rhs.add(s * qb(a, 1), swapped);
      emit("root vector exchange (3)", p, lhs, rhs, "E_{a,b}E_{c,d} = (-1)^{ab.cd} q_a E_{c,d}E_{a,b}, a=c<b<d");
    } else if (b == c) {
      rhs.add(1, {F::root(a, d, 1)});
      rhs.add(qb(c, -1), swapped);
      emit("root vector exchange (4)", p, lhs, rhs, "E_{a,b}E_{b,d} = E_{a,d} + q_b^{-1} E_{b,d}E_{a,b}");
    } else if (a < c && c < b && b < d) {
      rhs.add(s, swapped);
      rhs.add(qdiff(b), {F::root(a, d, 1), F::root(c, b, 1)});
      emit("root vector exchange (5)", p, lhs, rhs,
           "E_{a,b}E_{c,d} = (-1)^{ab.cd} E_{c,d}E_{a,b} + (q_b - q_b^{-1}) E_{a,d}E_{c,b}, a<c<b<d");
    }
  }

  void divided_exchange(int a, int b, int c, int d, int M, int N) {
    const std::vector<std::pair<std::string, int>> p = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"M", M}, {"N", N}};
    const std::vector<QFactor> lhs = {F::root(a, b, M), F::root(c, d, N)};
    const std::vector<QFactor> swapped = {F::root(c, d, N), F::root(a, b, M)};
    const int T = std::min(M, N);
    QSum rhs;
    if (b < c || (c < a && a < b && b < d)) {
      rhs.add(1, swapped);
      emit("divided power exchange (1)", p, lhs, rhs, "E_{a,b}^(M)E_{c,d}^(N) = E_{c,d}^(N)E_{a,b}^(M), b<c or c<a<b<d");
    } else if ((a == c && c < b && b < d) || (a < c && c < b && b == d)) {
      rhs.add(qb(b, M * N), swapped);
      emit_solved(emit("divided power exchange (2)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{c,d}^(N) = q_b^{MN} E_{c,d}^(N)E_{a,b}^(M), a=c<b<d or a<c<b=d"),
                  swapped);
    } else if (a < b && b == c && c < d) {
      for (int t = 0; t <= T; ++t)
        rhs.add(qb(b, -(N - t) * (M - t)), {F::root(c, d, N - t), F::root(a, d, t), F::root(a, b, M - t)});
      emit_solved(emit("divided power exchange (3)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{b,d}^(N) = sum_t q_b^{-(N-t)(M-t)} E_{b,d}^(N-t)E_{a,d}^(t)E_{a,b}^(M-t)"),
                  swapped);
    } else if (a < c && c < b && b < d) {
      for (int t = 0; t <= T; ++t) {
        RatFn co = qb(b, t * (t - 1) / 2) * RatFn(quantum_factorial(t));
        for (int k = 0; k < t; ++k)
          co *= qdiff(b);
        rhs.add(co, {F::root(c, b, t), F::root(c, d, N - t), F::root(a, b, M - t), F::root(a, d, t)});
      }
      emit_solved(emit("divided power exchange (4)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{c,d}^(N) = sum_t q_b^{t(t-1)/2}(q_b-q_b^{-1})^t[t]! "
                       "E_{c,b}^(t)E_{c,d}^(N-t)E_{a,b}^(M-t)E_{a,d}^(t), a<c<b<d"),
                  swapped);
    }
  }

  void opposite_exchange(int a, int b, int c, int d) {
    const RatFn s = odd(a, b) && odd(c, d) ? -1 : 1;
    const std::vector<std::pair<std::string, int>> p = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
    const std::vector<QFactor> lhs = {F::root(a, b, 1), F::root(d, c, 1)};
    const std::vector<QFactor> swapped = {F::root(d, c, 1), F::root(a, b, 1)};
    QSum rhs;
    if (b <= c || (c < a && a < b && b < d)) {
      rhs.add(s, swapped);
      emit("opposite root exchange (1)", p, lhs, rhs, "E_{a,b}E_{d,c} = (-1)^{ab.cd} E_{d,c}E_{a,b}, b<=c or c<a<b<d");
    } else if (a < c && c < b && b == d) {
      rhs.add(s, swapped);
      rhs.add(1, {F::kpow(c, b, 1), F::root(a, c, 1)});
      emit("opposite root exchange (2)", p, lhs, rhs,
           "E_{a,b}E_{b,c} = (-1)^{ab.cb} E_{b,c}E_{a,b} + K_{c,b}E_{a,c}, a<c<b");
    } else if (a == c && c < b && b < d) {
      rhs.add(s, swapped);
      rhs.add(-s, {F::kpow(a, b, 1), F::root(d, b, 1)});
      emit("opposite root exchange (3)", p, lhs, rhs,
           "E_{a,b}E_{d,a} = (-1)^{ab.ad} (E_{d,a}E_{a,b} - K_{a,b}E_{d,b}), a<b<d");
    } else if (a == c && b == d) {
      rhs.add(s, swapped);
      rhs.add(1, {F::kbinom(a, b, 0, 1)});
      emit("opposite root exchange (4)", p, lhs, rhs,
           "E_{a,b}E_{b,a} = (-1)^{ab.ab} E_{b,a}E_{a,b} + (K_{a,b}-K_{a,b}^{-1})/(q_a-q_a^{-1})");
    } else if (a < c && c < b && b < d) {
      rhs.add(s, swapped);
      rhs.add(-qdiff(b), {F::kpow(c, b, 1), F::root(a, c, 1), F::root(d, b, 1)});
      emit("opposite root exchange (5)", p, lhs, rhs,
           "E_{a,b}E_{d,c} = (-1)^{ab.cd} E_{d,c}E_{a,b} - (q_b-q_b^{-1}) K_{c,b}E_{a,c}E_{d,b}, a<c<b<d");
    }
  }

  void opposite_divided_exchange(int a, int b, int c, int d, int M, int N) {
    const std::vector<std::pair<std::string, int>> p = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"M", M}, {"N", N}};
    const std::vector<QFactor> lhs = {F::root(a, b, M), F::root(d, c, N)};
    const std::vector<QFactor> swapped = {F::root(d, c, N), F::root(a, b, M)};
    const int T = std::min(M, N);
    QSum rhs;
    if (b <= c || (c < a && a < b && b < d)) {
      rhs.add(1, swapped);
      emit("opposite divided power exchange (1)", p, lhs, rhs,
           "E_{a,b}^(M)E_{d,c}^(N) = E_{d,c}^(N)E_{a,b}^(M), b<=c or c<a<b<d");
    } else if (a < c && c < b && b == d) {
      for (int t = 0; t <= T; ++t)
        rhs.add(qb(b, -t * (N - t)), {F::root(d, c, N - t), F::kpow(c, d, t), F::root(a, b, M - t), F::root(a, c, t)});
      emit_solved(emit("opposite divided power exchange (2)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{b,c}^(N) = sum_t q_b^{-t(N-t)} E_{b,c}^(N-t)K_{c,b}^t E_{a,b}^(M-t)E_{a,c}^(t), a<c<b"),
                  swapped);
    } else if (a == c && c < b && b < d) {
      for (int t = 0; t <= T; ++t)
        rhs.add(RatFn(t % 2 ? -1 : 1) * qb(b, -t * (M - 1 - t)),
                {F::root(d, b, t), F::root(d, c, N - t), F::kpow(a, b, t), F::root(a, b, M - t)});
      emit_solved(emit("opposite divided power exchange (3)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{d,a}^(N) = sum_t (-1)^t q_b^{-t(M-1-t)} E_{d,b}^(t)E_{d,a}^(N-t)K_{a,b}^t "
                       "E_{a,b}^(M-t), a<b<d"),
                  swapped);
    } else if (a == c && b == d) {
      for (int t = 0; t <= T; ++t)
        rhs.add(1, {F::root(b, a, N - t), F::kbinom(a, b, 2 * t - M - N, t), F::root(a, b, M - t)});
      emit_solved(emit("opposite divided power exchange (4)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{b,a}^(N) = sum_t E_{b,a}^(N-t)[K_{a,b}; 2t-M-N over t]E_{a,b}^(M-t)"),
                  swapped);
    } else if (a < c && c < b && b < d) {
      for (int t = 0; t <= T; ++t) {
        RatFn co = RatFn(t % 2 ? -1 : 1) * qb(b, -t * (2 * N - 3 * t - 1) / 2) * RatFn(quantum_factorial(t));
        for (int k = 0; k < t; ++k)
          co *= qdiff(b);
        rhs.add(co, {F::root(d, c, N - t), F::root(d, b, t), F::kpow(c, b, t), F::root(a, b, M - t), F::root(a, c, t)});
      }
      emit_solved(emit("opposite divided power exchange (5)", p, lhs, rhs,
                       "E_{a,b}^(M)E_{d,c}^(N) = sum_t (-1)^t q_b^{-t(2N-3t-1)/2}(q_b-q_b^{-1})^t[t]! "
                       "E_{d,c}^(N-t)E_{d,b}^(t)K_{c,b}^t E_{a,b}^(M-t)E_{a,c}^(t), a<c<b<d"),
                  swapped);
    }
  }

  void k_binomials() {
    for (int a = 1; a <= dims.rank(); ++a) {
      const bool oa = dims.parity(a) != 0;
      for (int l = 0; l <= dims.d(); ++l) {
        QSum rhs;
        rhs.add(RatFn(parity_twist(gaussian_binomial(l + 1, 1), oa)), {F::kbinom(a, 0, 0, l + 1)});
        emit("K-binomial product", {{"a", a}, {"l", l}}, {F::kbinom(a, 0, 0, 1), F::kbinom(a, 0, -1, l)}, rhs,
             "[K_a;0 over 1][K_a;-1 over l] = [l+1][K_a;0 over l+1]");
      }
      for (int l = 1; l <= dims.d(); ++l) {
        QSum rhs;
        rhs.add(qb(a, l), {F::kbinom(a, 0, 0, l)});
        rhs.add(qb(a, l - 1), {F::kpow(a, 0, -1), F::kbinom(a, 0, 0, l - 1)});
        emit("K-binomial shift", {{"a", a}, {"l", l}}, {F::kbinom(a, 0, 1, l)}, rhs,
             "[K_a;1 over l] = q_a^l [K_a;0 over l] + q_a^{l-1} K_a^{-1} [K_a;0 over l-1]");
      }
    }
  }

  void idempotent_exchange() {
    const auto len = static_cast<std::size_t>(dims.rank());
    for (int b = 1; b <= dims.rank(); ++b)
      for (int c = 1; c <= dims.rank(); ++c) {
        if (b == c)
          continue;
        const Weight alpha = Root(dims, b, c).as_weight(len);
        for (const Weight &lambda : enumerate_weights(dims)) {
          std::vector<std::pair<std::string, int>> p = {{"b", b}, {"c", c}};
          for (int i = 1; i <= dims.rank(); ++i)
            p.emplace_back("lambda" + std::to_string(i), lambda[i]);
          const Weight up = lambda + alpha;
          const Weight down = lambda - alpha;
          QSum r1;
          if (up.in_lambda(dims))
            r1.add(1, {F::idem(up), F::root(b, c, 1)});
          emit("root vector past idempotent", p, {F::root(b, c, 1), F::idem(lambda)}, r1,
               "E_{b,c}1_lambda = 1_{lambda+eps_b-eps_c}E_{b,c}, or 0 outside Lambda");
          QSum r2;
          if (down.in_lambda(dims))
            r2.add(1, {F::root(b, c, 1), F::idem(down)});
          emit("idempotent past root vector", p, {F::idem(lambda), F::root(b, c, 1)}, r2,
               "1_lambda E_{b,c} = E_{b,c}1_{lambda-eps_b+eps_c}, or 0 outside Lambda");
        }
      }
  }
};

} // namespace

std::vector<IdentityInstance> identity_catalogue(const Dims &dims, int max_power) {
  if (max_power < 1)
    throw std::invalid_argument("identity_catalogue: max_power must be at least 1");
  CatalogueBuilder cb{dims, {}};
  const int top = dims.rank();
  auto cap = [&](int a, int b) { return cb.odd(a, b) ? 1 : max_power; };

  for (int a = 1; a <= top; ++a)
    for (int b = a + 1; b <= top; ++b)
      for (int c = 1; c <= top; ++c)
        for (int d = c + 1; d <= top; ++d) {
          cb.root_exchange(a, b, c, d);
          cb.opposite_exchange(a, b, c, d);
          if (cb.odd(a, b) && cb.odd(c, d))
            continue;
          for (int M = 1; M <= cap(a, b); ++M)
            for (int N = 1; N <= cap(c, d); ++N) {
              cb.divided_exchange(a, b, c, d, M, N);
              cb.opposite_divided_exchange(a, b, c, d, M, N);
            }
        }

  // Images under the antiautomorphism give the negative-root families.
  const std::size_t positive = cb.out.size();
  for (std::size_t k = 0; k < positive; ++k) {
    const IdentityInstance &src = cb.out[k];
    IdentityInstance img;
    img.name = src.name + " [image]";
    img.params = src.params;
    img.lhs = antiautomorphism(src.lhs);
    img.rhs = antiautomorphism(src.rhs);
    img.citation = "antiautomorphism image of: " + src.citation;
    cb.out.push_back(std::move(img));
  }

  cb.k_binomials();
  cb.idempotent_exchange();
  return cb.out;
}

std::vector<QBasisElement> enumerate_basis_Yq(const Dims &dims) { return enumerate_basis_Y(dims); }

QSum qbasis_product(const Dims &dims, const QBasisElement &y) {
  (void)dims;
  std::vector<QFactor> fs;
  for (const auto &[r, v] : y.A.entries())
    fs.push_back(QFactor::root(r.i, r.j, v));
  fs.push_back(QFactor::idem(y.lambda));
  for (const auto &[r, v] : y.C.entries())
    fs.push_back(QFactor::root(r.j, r.i, v));
  QSum s;
  s.add(1, std::move(fs));
  return s;
}

} // namespace superschur
