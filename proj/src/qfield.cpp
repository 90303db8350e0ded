#include "superschur/qfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superschur {

namespace {

// Dense ordinary polynomial, coefficients low -> high, trimmed.
using Dense = std::vector<Integer>;

void trim(Dense &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

// Coefficients of q^{-low} * p as an ordinary polynomial.
Dense to_dense(const LaurentPoly &p) {
  Dense out;
  if (p.is_zero())
    return out;
  const int low = p.low_degree();
  out.assign(static_cast<size_t>(p.high_degree() - low + 1), Integer(0));
  for (const auto &[e, c] : p.terms())
    out[static_cast<size_t>(e - low)] = c;
  return out;
}

LaurentPoly from_dense(const Dense &p, int low) {
  std::vector<LaurentPoly::Term> terms;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0)
      terms.emplace_back(low + static_cast<int>(i), p[i]);
  return LaurentPoly::from_terms(std::move(terms));
}

Integer dense_content(const Dense &p) {
  Integer g = 0;
  for (const auto &c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

void divide_content(Dense &p) {
  Integer g = dense_content(p);
  if (g > 1)
    for (auto &c : p)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero).
Dense pseudo_remainder(Dense a, const Dense &b) {
  const Integer &lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const size_t shift = a.size() - b.size();
    Integer la = a.back();
    for (auto &c : a)
      c *= lb;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// Exact division over Z: returns quotient if b | a with integer quotient.
std::optional<Dense> dense_divide(Dense a, const Dense &b) {
  if (b.empty())
    throw std::domain_error("division by zero polynomial");
  if (a.empty())
    return Dense{};
  if (a.size() < b.size())
    return std::nullopt;
  Dense quot(a.size() - b.size() + 1, Integer(0));
  const Integer &lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t()))
      return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty())
    return std::nullopt;
  return quot;
}

Dense dense_gcd(Dense a, Dense b) {
  if (a.empty())
    return b;
  if (b.empty())
    return a;
  Integer g = gcd(dense_content(a), dense_content(b));
  divide_content(a);
  divide_content(b);
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    divide_content(r);
    a = std::move(b);
    b = std::move(r);
  }
  for (auto &c : a)
    c *= g;
  if (a.back() < 0)
    for (auto &c : a)
      c = -c;
  return a;
}

std::string integer_string(const Integer &c) { return c.get_str(); }

} // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0)
    terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer &c) {
  if (c != 0)
    terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0)
    p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0)
      p.terms_.pop_back();
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term &t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent)
    return it->second;
  return 0;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto &t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.first += k;
  return p;
}

Rational LaurentPoly::evaluate(const Rational &q0) const {
  if (terms_.empty())
    return 0;
  if (q0 == 0 && terms_.front().first < 0)
    throw std::domain_error("negative power of q evaluated at 0");
  // Horner on q^{-low} p, then scale by q0^{low}.
  Rational acc = 0;
  int prev = terms_.back().first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k)
      acc *= q0;
    acc += it->second;
    prev = it->first;
  }
  Rational scale = 1;
  const int low = terms_.front().first;
  for (int k = 0; k < std::abs(low); ++k)
    scale *= q0;
  return low >= 0 ? Rational(acc * scale) : Rational(acc / scale);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.second = -t.second;
  return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  if (rhs.terms_.empty())
    return *this;
  if (terms_.empty())
    return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer s = a->second + b->second;
      if (s != 0)
        out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.terms_.size() == 1 && a.terms_[0].second == 1)
    return b.shifted(a.terms_[0].first);
  if (b.terms_.size() == 1 && b.terms_[0].second == 1)
    return a.shifted(b.terms_[0].first);
  const int low = a.low_degree() + b.low_degree();
  const int span = a.high_degree() + b.high_degree() - low + 1;
  std::vector<Integer> acc(static_cast<size_t>(span), Integer(0));
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      mpz_addmul(acc[static_cast<size_t>(ea + eb - low)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly p;
  for (int i = 0; i < span; ++i)
    if (acc[static_cast<size_t>(i)] != 0)
      p.terms_.emplace_back(low + i, std::move(acc[static_cast<size_t>(i)]));
  return p;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) { return *this = *this * rhs; }

LaurentPoly &LaurentPoly::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

std::strong_ordering compare(const LaurentPoly &a, const LaurentPoly &b) {
  const size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0)
      return c;
    int s = cmp(a.terms_[i].second, b.terms_[i].second);
    if (s != 0)
      return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero())
    throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero())
    return LaurentPoly{};
  if (b.is_monomial()) {
    const auto &[eb, cb] = b.terms_[0];
    LaurentPoly q;
    for (const auto &[e, c] : a.terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t()))
        return std::nullopt;
      Integer r;
      mpz_divexact(r.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
      q.terms_.emplace_back(e - eb, std::move(r));
    }
    return q;
  }
  auto quot = dense_divide(to_dense(a), to_dense(b));
  if (!quot)
    return std::nullopt;
  return from_dense(*quot, a.low_degree() - b.low_degree());
}

LaurentPoly LaurentPoly::divided_by(const Integer &c) const {
  auto r = divide_exact(*this, LaurentPoly(c));
  if (!r)
    throw std::logic_error("inexact integer division of Laurent polynomial");
  return *r;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly &a, const LaurentPoly &b) {
  return from_dense(dense_gcd(to_dense(a), to_dense(b)), 0);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0)
        os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << integer_string(mag);
      continue;
    }
    if (mag != 1)
      os << integer_string(mag) << "*";
    os << "q";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

// --------------------------------------------------------------------- RatFn

RatFn::RatFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatFn::RatFn(const Rational &r) : num_(r.get_num()), den_(r.get_den()) {}

void RatFn::normalize() {
  if (den_.is_zero())
    throw std::domain_error("RatFn with zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (const int low = den_.low_degree(); low != 0) {
    den_ = den_.shifted(-low);
    num_ = num_.shifted(-low);
  }
  if (!den_.is_constant()) {
    if (auto q = LaurentPoly::divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = 1;
      return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *LaurentPoly::divide_exact(num_, g);
      den_ = *LaurentPoly::divide_exact(den_, g);
    }
  }
  Integer g = gcd(num_.content(), den_.content());
  if (den_.leading_coefficient() < 0)
    g = -g;
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
}

RatFn RatFn::bar() const {
  RatFn r;
  r.num_ = num_.bar();
  r.den_ = den_.bar();
  r.normalize();
  return r;
}

RatFn RatFn::inverse() const {
  if (num_.is_zero())
    throw std::domain_error("inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn &RatFn::operator+=(const RatFn &rhs) {
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFn &RatFn::operator-=(const RatFn &rhs) { return *this += -rhs; }

RatFn &RatFn::operator*=(const RatFn &rhs) {
  if (is_zero() || rhs.is_zero()) {
    num_ = LaurentPoly();
    den_ = 1;
    return *this;
  }
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFn &RatFn::operator/=(const RatFn &rhs) { return *this *= rhs.inverse(); }

std::strong_ordering compare(const RatFn &a, const RatFn &b) {
  if (auto c = compare(a.num_, b.num_); c != 0)
    return c;
  return compare(a.den_, b.den_);
}

std::string RatFn::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!num_.is_monomial())
    n = "(" + n + ")";
  if (!den_.is_monomial())
    d = "(" + d + ")";
  return n + "/" + d;
}

// ------------------------------------------------------------ free functions

LaurentPoly quantum_integer(int n) {
  if (n < 0)
    throw std::invalid_argument("quantum_integer: n must be nonnegative");
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < n; ++k)
    terms.emplace_back(n - 1 - 2 * k, Integer(1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0)
    throw std::invalid_argument("quantum_factorial: n must be nonnegative");
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k)
    r *= quantum_integer(k);
  return r;
}

LaurentPoly gaussian_binomial(int z, int t) {
  if (t < 0)
    throw std::invalid_argument("gaussian_binomial: t must be nonnegative");
  LaurentPoly r = 1;
  for (int s = 1; s <= t; ++s) {
    const int e = z - s + 1;
    LaurentPoly num = LaurentPoly::q(e) - LaurentPoly::q(-e);
    LaurentPoly den = LaurentPoly::q(s) - LaurentPoly::q(-s);
    auto next = LaurentPoly::divide_exact(r * num, den);
    if (!next)
      throw std::logic_error("gaussian_binomial: inexact partial product");
    r = std::move(*next);
  }
  return r;
}

LaurentPoly parity_twist(const LaurentPoly &p, bool odd) { return odd ? p.bar() : p; }

RatFn parity_twist(const RatFn &p, bool odd) { return odd ? p.bar() : p; }

Rational specialize(const RatFn &p, const Rational &q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw std::invalid_argument("specialize: q0 must avoid 0, 1 and -1");
  Rational d = p.den().evaluate(q0);
  if (d == 0)
    throw std::domain_error("specialize: denominator vanishes at " + q0.get_str());
  return p.num().evaluate(q0) / d;
}

std::string to_string(const Rational &r) { return r.get_str(); }

Integer binomial(long n, long k) {
  if (n < 0)
    throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer binomial_signed(long h, long k) {
  if (k < 0)
    return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Integer(h - i);
    den *= Integer(i + 1);
  }
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

} // namespace superschur
