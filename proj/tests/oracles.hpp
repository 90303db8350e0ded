#pragma once

// Brute-force reference computations. They share no code with the library,
// only the problem statement.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

/// Number of degree-d monomials in a free supercommutative algebra on the
/// matrix units E_ij of gl(m|n): E_ij is odd iff exactly one of i, j is > m,
/// and odd variables appear at most once. Enumerated variable by variable.
inline std::uint64_t supercommutative_monomials(int m, int n, int d) {
  const int N = m + n;
  std::vector<bool> odd;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      odd.push_back((i > m) != (j > m));
  std::uint64_t count = 0;
  std::function<void(std::size_t, int)> walk = [&](std::size_t var, int left) {
    if (var == odd.size()) {
      if (left == 0)
        ++count;
      return;
    }
    const int cap = odd[var] ? std::min(left, 1) : left;
    for (int e = 0; e <= cap; ++e)
      walk(var + 1, left - e);
  };
  walk(0, d);
  return count;
}

/// Koszul sign of the permuted tensor v_{i_1} x ... x v_{i_d} -> v at
/// positions pi(1..d): one factor -1 per pair of odd letters whose order pi
/// inverts.
inline int koszul_sign(const std::vector<int> &letters, const std::vector<int> &pi, int m) {
  int sign = 1;
  for (std::size_t t = 0; t < letters.size(); ++t)
    for (std::size_t u = t + 1; u < letters.size(); ++u)
      if (letters[t] > m && letters[u] > m && pi[t] > pi[u])
        sign = -sign;
  return sign;
}

/// dim End_{Sigma_d}(V^{x d}) for the signed permutation action, by
/// averaging the character of the conjugation action:
///   dim = (1/d!) sum_pi tr(P_pi) tr(P_pi^{-1}).
/// The trace of P_pi only sees index tuples fixed by pi.
inline std::int64_t commutant_by_characters(int m, int n, int d) {
  const int N = m + n;
  std::vector<int> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  std::int64_t total = 0;
  std::int64_t group_order = 0;
  std::size_t tuples = 1;
  for (int t = 0; t < d; ++t)
    tuples *= static_cast<std::size_t>(N);
  do {
    ++group_order;
    std::vector<int> inv(d);
    for (int t = 0; t < d; ++t)
      inv[pi[t]] = t;
    std::int64_t tr = 0;
    std::int64_t tr_inv = 0;
    std::vector<int> letters(d);
    for (std::size_t code = 0; code < tuples; ++code) {
      std::size_t c = code;
      for (int t = d - 1; t >= 0; --t) {
        letters[t] = static_cast<int>(c % N) + 1;
        c /= N;
      }
      bool fixed = true;
      for (int t = 0; t < d && fixed; ++t)
        fixed = letters[pi[t]] == letters[t];
      if (!fixed)
        continue;
      tr += koszul_sign(letters, pi, m);
      tr_inv += koszul_sign(letters, inv, m);
    }
    total += tr * tr_inv;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total / group_order;
}

} // namespace oracle
