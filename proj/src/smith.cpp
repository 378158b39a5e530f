#include "surfalg/smith.hpp"

#include <utility>

namespace surfalg {

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;

  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    // Pivot: smallest nonzero entry in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(a[k], a[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        const BigInt q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) {
          std::swap(a[k], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        const BigInt q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) {
          for (auto& row : a) std::swap(row[k], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide the rest of the block.
      for (std::size_t i = k + 1; i < rows && clean; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) a[k][jj] += a[i][jj];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a[k][k]));
  }
  return diag;
}

int integer_rank(const IntMatrix& m) { return static_cast<int>(invariant_factors(m).size()); }

}  // namespace surfalg
