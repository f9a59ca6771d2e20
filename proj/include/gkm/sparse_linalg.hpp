#pragma once

// Sparse rank computation over a templated coefficient field. Rows are
// sorted (column, value) vectors; pivots are chosen greedily by row fill
// with a column-count tie-break, which keeps fill moderate on the
// congruence systems produced by the piecewise-polynomial layer.

#include <algorithm>
#include <queue>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

// Integer constraint rows, assembled once and specialized per field.
struct IntRows {
  int ncols = 0;
  std::vector<std::vector<std::pair<int, long long>>> rows;

  void add_row(std::vector<std::pair<int, long long>> row) {
    std::sort(row.begin(), row.end());
    // merge duplicate columns
    std::vector<std::pair<int, long long>> merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& cv) { return cv.second == 0; }),
                 merged.end());
    if (!merged.empty()) rows.push_back(std::move(merged));
  }

  long long nnz() const {
    long long t = 0;
    for (const auto& r : rows) t += static_cast<long long>(r.size());
    return t;
  }
};

template <class F>
long long sparse_rank(const F& field, const IntRows& input) {
  using Val = typename F::value_type;
  using Row = std::vector<std::pair<int, Val>>;
  const int ncols = input.ncols;

  std::vector<Row> rows;
  rows.reserve(input.rows.size());
  for (const auto& r : input.rows) {
    Row row;
    row.reserve(r.size());
    for (const auto& [c, v] : r) {
      Val fv = field.from_int(v);
      if (!F::is_zero(fv)) row.emplace_back(c, fv);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }

  std::vector<int> colcount(ncols, 0);
  std::vector<std::vector<int>> col_rows(ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) {
      ++colcount[c];
      col_rows[c].push_back(static_cast<int>(i));
    }

  // min-heap on (nnz, row); stale sizes are re-pushed on use
  using QE = std::pair<long long, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> heap;
  std::vector<char> active(rows.size(), 1);
  for (size_t i = 0; i < rows.size(); ++i) heap.push({static_cast<long long>(rows[i].size()), static_cast<int>(i)});

  auto row_coeff = [&](const Row& row, int col) -> const Val* {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& cv, int c) { return cv.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
  };

  long long rank = 0;
  while (!heap.empty()) {
    auto [nnz, ri] = heap.top();
    heap.pop();
    if (!active[ri] || rows[ri].empty()) continue;
    if (nnz != static_cast<long long>(rows[ri].size())) {
      heap.push({static_cast<long long>(rows[ri].size()), ri});
      continue;
    }
    // pivot column: fewest active rows
    int pc = -1;
    for (const auto& [c, v] : rows[ri])
      if (pc < 0 || colcount[c] < colcount[pc]) pc = c;
    const Val* pivv = row_coeff(rows[ri], pc);
    Val pinv = field.inv(*pivv);

    std::vector<int> victims;
    victims.swap(col_rows[pc]);
    for (int vi : victims) {
      if (vi == ri || !active[vi]) continue;
      const Val* coef = row_coeff(rows[vi], pc);
      if (!coef) continue;  // stale entry
      Val factor = field.mul(*coef, pinv);
      Row merged;
      merged.reserve(rows[vi].size() + rows[ri].size());
      auto a = rows[vi].begin(), ae = rows[vi].end();
      auto b = rows[ri].begin(), be = rows[ri].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          Val nv = field.neg(field.mul(factor, b->second));
          if (!F::is_zero(nv)) {
            merged.emplace_back(b->first, nv);
            ++colcount[b->first];
            col_rows[b->first].push_back(vi);
          }
          ++b;
        } else {
          Val nv = field.sub(a->second, field.mul(factor, b->second));
          if (!F::is_zero(nv)) {
            merged.emplace_back(a->first, nv);
          } else {
            --colcount[a->first];
          }
          ++a;
          ++b;
        }
      }
      rows[vi] = std::move(merged);
      heap.push({static_cast<long long>(rows[vi].size()), vi});
    }
    // retire the pivot row
    for (const auto& [c, v] : rows[ri]) --colcount[c];
    active[ri] = 0;
    rows[ri].clear();
    rows[ri].shrink_to_fit();
    ++rank;
  }
  return rank;
}

inline long long nullity_exact(const IntRows& rows) {
  return rows.ncols - sparse_rank(RationalField{}, rows);
}

inline long long nullity_mod(const IntRows& rows, std::uint64_t p) {
  return rows.ncols - sparse_rank(PrimeField{p}, rows);
}

}  // namespace gkm
