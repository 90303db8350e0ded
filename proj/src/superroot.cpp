#include "superschur/superroot.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur {

Dims::Dims(int m, int n, int d) : m_(m), n_(n), d_(d) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("Dims: m and n must be at least 1");
  if (d < 0)
    throw std::invalid_argument("Dims: d must be nonnegative");
}

std::size_t Dims::tensor_dim() const {
  std::size_t r = 1;
  for (int t = 0; t < d_; ++t)
    r *= static_cast<std::size_t>(rank());
  return r;
}

int Dims::parity(int i) const {
  if (!valid_index(i))
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(rank()));
  return i <= m_ ? 0 : 1;
}

std::string Dims::to_string() const {
  return "(" + std::to_string(m_) + "|" + std::to_string(n_) + "," + std::to_string(d_) + ")";
}

int parity_of_index(const Dims &dims, int i) { return dims.parity(i); }

int bilinear_form(const Dims &dims, int i, int j) {
  const int pi = dims.parity(i);
  dims.parity(j);
  if (i != j)
    return 0;
  return pi ? -1 : 1;
}

// --------------------------------------------------------------------- Weight

Weight Weight::unit(std::size_t len, int i) {
  Weight w = zero(len);
  w[i] = 1;
  return w;
}

int Weight::total() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Weight::nonnegative() const {
  for (int c : coords)
    if (c < 0)
      return false;
  return true;
}

bool Weight::in_lambda(const Dims &dims) const {
  return coords.size() == static_cast<std::size_t>(dims.rank()) && nonnegative() && total() == dims.d();
}

Weight &Weight::operator+=(const Weight &o) {
  if (o.size() != size())
    throw std::invalid_argument("weight length mismatch");
  for (std::size_t k = 0; k < size(); ++k)
    coords[k] += o.coords[k];
  return *this;
}

Weight &Weight::operator-=(const Weight &o) {
  if (o.size() != size())
    throw std::invalid_argument("weight length mismatch");
  for (std::size_t k = 0; k < size(); ++k)
    coords[k] -= o.coords[k];
  return *this;
}

Weight operator*(int k, Weight w) {
  for (int &c : w.coords)
    c *= k;
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < coords.size(); ++k)
    os << (k ? "," : "") << coords[k];
  os << ")";
  return os.str();
}

namespace {

void compositions(int remaining, std::size_t slot, std::vector<int> &cur, std::vector<Weight> &out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[slot] = v;
    compositions(remaining - v, slot + 1, cur, out);
  }
}

} // namespace

std::vector<Weight> enumerate_weights(const Dims &dims) {
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<std::size_t>(dims.rank()), 0);
  compositions(dims.d(), 0, cur, out);
  return out;
}

bool weight_leq(const Weight &a, const Weight &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight_leq: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.coords[k] > b.coords[k])
      return false;
  return true;
}

// ----------------------------------------------------------------------- Root

Root::Root(const Dims &dims, int i_, int j_) : i(i_), j(j_) {
  if (i == j)
    throw std::invalid_argument("Root: i and j must differ");
  parity = (dims.parity(i) + dims.parity(j)) % 2;
}

Root Root::negated() const {
  Root r = *this;
  std::swap(r.i, r.j);
  return r;
}

Weight Root::as_weight(std::size_t len) const {
  Weight w = Weight::zero(len);
  w[i] += 1;
  w[j] -= 1;
  return w;
}

std::string Root::to_string() const {
  return "e" + std::to_string(i) + "-e" + std::to_string(j);
}

std::vector<Root> positive_roots(const Dims &dims) {
  std::vector<Root> out;
  for (int i = 1; i <= dims.rank(); ++i)
    for (int j = i + 1; j <= dims.rank(); ++j)
      out.emplace_back(dims, i, j);
  return out;
}

std::vector<Root> all_roots(const Dims &dims) {
  std::vector<Root> out;
  for (int i = 1; i <= dims.rank(); ++i)
    for (int j = 1; j <= dims.rank(); ++j)
      if (i != j)
        out.emplace_back(dims, i, j);
  return out;
}

Root simple_root(const Dims &dims, int i) { return Root(dims, i, i + 1); }

int root_pairing(const Dims &dims, const Root &a, const Root &b) {
  return bilinear_form(dims, a.i, b.i) - bilinear_form(dims, a.i, b.j) - bilinear_form(dims, a.j, b.i) +
         bilinear_form(dims, a.j, b.j);
}

bool root_sum(const Dims &dims, const Root &a, const Root &b, Root &sum) {
  if (a.j == b.i && a.i != b.j) {
    sum = Root(dims, a.i, b.j);
    return true;
  }
  if (a.i == b.j && a.j != b.i) {
    sum = Root(dims, b.i, a.j);
    return true;
  }
  return false;
}

int structure_constant(const Root &a, const Root &b) {
  if (a.j == b.i)
    return 1;
  if (a.i == b.j)
    return (a.parity * b.parity) % 2 ? 1 : -1;
  throw std::invalid_argument("structure_constant: a + b is not a root");
}

} // namespace superschur
