#include "superschur/sparse_matrix.hpp"

namespace superschur {

std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly>> rows) {
  if (rows.empty())
    return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < ncols && rank < rows.size(); ++k) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][k].is_zero())
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    const LaurentPoly &p = rows[rank][k];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const LaurentPoly f = rows[i][k];
      for (std::size_t j = k + 1; j < ncols; ++j) {
        LaurentPoly v = p * rows[i][j] - f * rows[rank][j];
        auto q = LaurentPoly::divide_exact(v, prev);
        if (!q)
          throw std::logic_error("bareiss_rank: inexact division");
        rows[i][j] = std::move(*q);
      }
      rows[i][k] = LaurentPoly(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

} // namespace superschur
