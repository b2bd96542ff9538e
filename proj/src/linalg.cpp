#include "verify/linalg.hpp"

namespace verify {

RatMat rat_mat(size_t rows, size_t cols) {
  return RatMat(rows, RatVec(cols, Rat(0)));
}

std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> nullspace(RatMat m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rat(0));
    v[free_c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
      // row i of the RREF has its pivot at pivots[i]
      v[pivots[i]] = -m[i][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat m, RatVec b) {
  require(m.size() == b.size(), "solve: dimension mismatch");
  if (m.empty()) return RatVec{};
  size_t cols = m[0].size();
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  std::vector<size_t> pivots = rref(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  require(pivots.size() == cols, "solve: solution not unique");
  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

Rat det(RatMat m) {
  size_t n = m.size();
  for (auto& row : m) require(row.size() == n, "det: not square");
  Rat d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::vector<size_t> greedy_column_basis(const RatMat& m) {
  std::vector<size_t> chosen;
  if (m.empty()) return chosen;
  size_t rows = m.size(), cols = m[0].size();
  // Maintain an eliminated copy of the chosen columns.
  RatMat work(rows, RatVec());
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, position in chosen)
  std::vector<bool> row_used(rows, false);
  for (size_t c = 0; c < cols; ++c) {
    RatVec col(rows);
    for (size_t i = 0; i < rows; ++i) col[i] = m[i][c];
    // eliminate against prior pivots
    for (auto& [pr, pc] : pivots) {
      if (col[pr] == 0) continue;
      Rat f = col[pr];
      for (size_t i = 0; i < rows; ++i) col[i] -= f * work[i][pc];
    }
    size_t p = 0;
    while (p < rows && (row_used[p] || col[p] == 0)) ++p;
    if (p == rows) continue;  // dependent
    Rat inv = Rat(1) / col[p];
    for (size_t i = 0; i < rows; ++i) col[i] *= inv;
    for (size_t i = 0; i < rows; ++i) work[i].push_back(col[i]);
    pivots.emplace_back(p, chosen.size());
    row_used[p] = true;
    chosen.push_back(c);
    if (chosen.size() == rows) break;
  }
  return chosen;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  require(a[0].size() == k, "mat_mul: dimension mismatch");
  RatMat r = rat_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RatVec mat_apply(const RatMat& a, const RatVec& x) {
  RatVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    require(a[i].size() == x.size(), "mat_apply: dimension mismatch");
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
  }
  return r;
}

}  // namespace verify
