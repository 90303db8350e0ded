#pragma once

#include "superschur/qfield.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superschur {

template <class T> struct Scalar;

template <> struct Scalar<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational &x) { return sgn(x) == 0; }
  static Rational inverse(const Rational &x) { return Rational(1) / x; }
  static std::string str(const Rational &x) { return to_string(x); }
};

template <> struct Scalar<RatFn> {
  static RatFn zero() { return RatFn(0); }
  static RatFn one() { return RatFn(1); }
  static bool is_zero(const RatFn &x) { return x.is_zero(); }
  static RatFn inverse(const RatFn &x) { return x.inverse(); }
  static std::string str(const RatFn &x) { return x.to_string(); }
};

template <> struct Scalar<LaurentPoly> {
  static LaurentPoly zero() { return LaurentPoly(0); }
  static LaurentPoly one() { return LaurentPoly(1); }
  static bool is_zero(const LaurentPoly &x) { return x.is_zero(); }
  static std::string str(const LaurentPoly &x) { return x.to_string(); }
};

/// Row-compressed sparse matrix; each row keeps (column, value) pairs sorted
/// by column and never stores a zero.
template <class T> class SparseMatrix {
public:
  using Entry = std::pair<std::size_t, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n) { return scalar(n, Scalar<T>::one()); }
  static SparseMatrix scalar(std::size_t n, const T &c) {
    SparseMatrix m(n, n);
    if (!Scalar<T>::is_zero(c))
      for (std::size_t i = 0; i < n; ++i)
        m.data_[i].emplace_back(i, c);
    return m;
  }
  static SparseMatrix diagonal(const std::vector<T> &diag) {
    SparseMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (!Scalar<T>::is_zero(diag[i]))
        m.data_[i].emplace_back(i, diag[i]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row &row(std::size_t r) const { return data_.at(r); }

  std::size_t nnz() const {
    std::size_t k = 0;
    for (const auto &r : data_)
      k += r.size();
    return k;
  }
  bool is_zero() const { return nnz() == 0; }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto &[c, v] : data_[r])
        if (c != r)
          return false;
    return true;
  }

  T at(std::size_t r, std::size_t c) const {
    check(r, c);
    const Row &row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry &e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c)
      return it->second;
    return Scalar<T>::zero();
  }

  void set(std::size_t r, std::size_t c, const T &v) {
    check(r, c);
    Row &row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry &e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (Scalar<T>::is_zero(v)) {
      if (present)
        row.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      row.insert(it, Entry(c, v));
    }
  }

  void add_to(std::size_t r, std::size_t c, const T &v) {
    if (Scalar<T>::is_zero(v))
      return;
    T cur = at(r, c);
    cur += v;
    set(r, c, cur);
  }

  SparseMatrix &operator+=(const SparseMatrix &o) { return combine(o, false); }
  SparseMatrix &operator-=(const SparseMatrix &o) { return combine(o, true); }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix &b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix &b) { return a -= b; }
  SparseMatrix operator-() const { return scaled(-Scalar<T>::one()); }

  SparseMatrix scaled(const T &c) const {
    if (Scalar<T>::is_zero(c))
      return SparseMatrix(rows_, cols_);
    SparseMatrix out = *this;
    for (auto &row : out.data_)
      for (auto &e : row)
        e.second *= c;
    return out;
  }
  friend SparseMatrix operator*(const T &c, const SparseMatrix &m) { return m.scaled(c); }

  friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("SparseMatrix: product shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<T> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < a.rows_; ++r) {
      touched.clear();
      for (const auto &[k, av] : a.data_[r]) {
        for (const auto &[c, bv] : b.data_[k]) {
          if (!used[c]) {
            used[c] = 1;
            touched.push_back(c);
            acc[c] = av * bv;
          } else {
            acc[c] += av * bv;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      Row &dst = out.data_[r];
      for (std::size_t c : touched) {
        if (!Scalar<T>::is_zero(acc[c]))
          dst.emplace_back(c, std::move(acc[c]));
        acc[c] = Scalar<T>::zero();
        used[c] = 0;
      }
    }
    return out;
  }

  friend bool operator==(const SparseMatrix &a, const SparseMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  SparseMatrix transpose() const {
    SparseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto &[c, v] : data_[r])
        out.data_[c].emplace_back(r, v);
    return out;
  }

  /// Entries in row-major order as a map from flattened index r*cols+c.
  std::vector<std::pair<std::size_t, T>> flattened() const {
    std::vector<std::pair<std::size_t, T>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto &[c, v] : data_[r])
        out.emplace_back(r * cols_ + c, v);
    return out;
  }

private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw std::out_of_range("SparseMatrix: index out of range");
  }

  SparseMatrix &combine(const SparseMatrix &o, bool subtract) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("SparseMatrix: shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) {
      const Row &x = data_[r];
      const Row &y = o.data_[r];
      if (y.empty())
        continue;
      Row merged;
      merged.reserve(x.size() + y.size());
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
          merged.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
          merged.emplace_back(y[j].first, subtract ? T(-y[j].second) : y[j].second);
          ++j;
        } else {
          T v = x[i].second;
          if (subtract)
            v -= y[j].second;
          else
            v += y[j].second;
          if (!Scalar<T>::is_zero(v))
            merged.emplace_back(x[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      data_[r] = std::move(merged);
    }
    return *this;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Position and both values of the first entry where two matrices differ
/// (row-major scan), or nothing if they are equal.
template <class T> struct MatrixDifference {
  std::size_t row = 0;
  std::size_t col = 0;
  T lhs;
  T rhs;
};

template <class T>
std::optional<MatrixDifference<T>> first_difference(const SparseMatrix<T> &a, const SparseMatrix<T> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("first_difference: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r) == b.row(r))
      continue;
    const auto &x = a.row(r);
    const auto &y = b.row(r);
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      std::size_t c;
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first))
        c = x[i].first;
      else if (i == x.size() || y[j].first < x[i].first)
        c = y[j].first;
      else if (x[i].second == y[j].second) {
        ++i;
        ++j;
        continue;
      } else
        c = x[i].first;
      return MatrixDifference<T>{r, c, a.at(r, c), b.at(r, c)};
    }
  }
  return std::nullopt;
}

/// Sparse vector as sorted (index, value) pairs without zeros.
template <class T> using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Incremental row echelon form over a field. Each inserted vector is reduced
/// against the pivots found so far; survivors become new pivots, scaled to a
/// leading 1. Optionally tracks every pivot as a combination of the inserted
/// vectors so that membership queries can return coordinates.
template <class T> class Echelon {
public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Returns true if v was independent of the vectors inserted before.
  bool insert(SparseVector<T> v) {
    const std::size_t id = inserted_++;
    SparseVector<T> comb;
    if (track_)
      comb.emplace_back(id, Scalar<T>::one());
    reduce(v, comb);
    if (v.empty())
      return false;
    T inv = Scalar<T>::inverse(v.front().second);
    for (auto &e : v)
      e.second *= inv;
    if (track_)
      for (auto &e : comb)
        e.second *= inv;
    const std::size_t lead = v.front().first;
    pivots_.emplace(lead, Pivot{std::move(v), std::move(comb)});
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Coordinates of v in terms of the inserted vectors (tracking must be on),
  /// or nothing if v is outside the span. Only valid when all inserted
  /// vectors were independent; otherwise the coordinates are one choice.
  std::optional<std::map<std::size_t, T>> coordinates(SparseVector<T> v) const {
    if (!track_)
      throw std::logic_error("Echelon: coordinates need tracking");
    SparseVector<T> comb;
    reduce(v, comb);
    if (!v.empty())
      return std::nullopt;
    // v - sum c_k p_k = 0 was recorded as comb = -sum c_k comb_k.
    std::map<std::size_t, T> out;
    for (auto &[i, c] : comb)
      out[i] = -c;
    return out;
  }

private:
  struct Pivot {
    SparseVector<T> row;
    SparseVector<T> comb;
  };

  static void axpy(SparseVector<T> &x, const T &c, const SparseVector<T> &y) {
    // x <- x - c*y
    SparseVector<T> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(std::move(x[i++]));
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, -(c * y[j].second));
        ++j;
      } else {
        T v = x[i].second - c * y[j].second;
        if (!Scalar<T>::is_zero(v))
          out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    x = std::move(out);
  }

  void reduce(SparseVector<T> &v, SparseVector<T> &comb) const {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = pivots_.find(v[k].first);
      if (it == pivots_.end()) {
        ++k;
        continue;
      }
      const T c = v[k].second;
      axpy(v, c, it->second.row);
      if (track_)
        axpy(comb, c, it->second.comb);
    }
  }

  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Pivot> pivots_;
};

/// Rank of a list of sparse vectors over a field.
template <class T> std::size_t sparse_rank(const std::vector<SparseVector<T>> &vectors) {
  Echelon<T> e;
  for (const auto &v : vectors)
    e.insert(v);
  return e.rank();
}

/// Fraction-free (Bareiss) rank of a dense matrix over Z[q,q^{-1}]. Every
/// division is exact by Sylvester's identity.
std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly>> rows);

} // namespace superschur
