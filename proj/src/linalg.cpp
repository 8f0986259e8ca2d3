#include "catcheck/linalg.hpp"

#include <stdexcept>

namespace catcheck::fp {

int norm_mod(int v, int p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

int inv_mod(int a, int p) {
  a = norm_mod(a, p);
  if (a == 0) throw std::invalid_argument("inverse of zero mod p");
  // extended euclid
  int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return norm_mod(t, p);
}

Mat zeros(int rows, int cols, int p) {
  return Mat{rows, cols, p,
             std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
}

Mat identity(int n, int p) {
  Mat m = zeros(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

static void check_same_field(const Mat& a, const Mat& b) {
  if (a.p != b.p) throw std::invalid_argument("field mismatch");
}

Mat mul(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat c = zeros(a.rows, b.cols, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = norm_mod(c.at(i, j) + aik * b.at(k, j), a.p);
    }
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch");
  Mat c = a;
  for (size_t i = 0; i < c.e.size(); ++i)
    c.e[i] = norm_mod(a.e[i] + b.e[i], a.p);
  return c;
}

Mat sub(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch");
  Mat c = a;
  for (size_t i = 0; i < c.e.size(); ++i)
    c.e[i] = norm_mod(a.e[i] - b.e[i], a.p);
  return c;
}

Mat transpose(const Mat& a) {
  Mat t = zeros(a.cols, a.rows, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Mat hstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows != b.rows) throw std::invalid_argument("row count mismatch");
  Mat c = zeros(a.rows, a.cols + b.cols, a.p);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols != b.cols) throw std::invalid_argument("column count mismatch");
  Mat c = zeros(a.rows + b.rows, a.cols, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.at(a.rows + i, j) = b.at(i, j);
  return c;
}

Echelon rref(Mat m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const int inv = inv_mod(m.at(r, col), m.p);
    for (int j = 0; j < m.cols; ++j)
      m.at(r, j) = norm_mod(m.at(r, j) * inv, m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const int factor = m.at(i, col);
      if (factor == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = norm_mod(m.at(i, j) - factor * m.at(r, j), m.p);
    }
    pivots.push_back(col);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots), r};
}

int rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& a) {
  const Echelon e = rref(a);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int j = 0; j < a.cols; ++j) {
      if (pi < e.pivots.size() && e.pivots[pi] == j) {
        ++pi;
        continue;
      }
      free_cols.push_back(j);
    }
  }
  Mat basis = zeros(a.cols, static_cast<int>(free_cols.size()), a.p);
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    const int j = free_cols[k];
    basis.at(j, k) = 1;
    for (int i = 0; i < e.rank; ++i)
      basis.at(e.pivots[i], k) = norm_mod(-e.m.at(i, j), a.p);
  }
  return basis;
}

Mat canonical_columns(const Mat& a) {
  const Echelon e = rref(transpose(a));
  Mat out = zeros(a.rows, e.rank, a.p);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < a.rows; ++j) out.at(j, i) = e.m.at(i, j);
  return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows != b.rows) throw std::invalid_argument("row count mismatch");
  const Echelon e = rref(hstack(a, b));
  for (int c : e.pivots)
    if (c >= a.cols) return std::nullopt;  // inconsistent system
  Mat x = zeros(a.cols, b.cols, a.p);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < b.cols; ++j)
      x.at(e.pivots[i], j) = e.m.at(i, a.cols + j);
  return x;
}

Mat quotient_map(const Mat& span_cols, int ambient, int p) {
  if (span_cols.rows != ambient)
    throw std::invalid_argument("span not in the ambient space");
  const Echelon u = rref(transpose(span_cols));
  std::vector<int> non_pivots;
  {
    size_t pi = 0;
    for (int j = 0; j < ambient; ++j) {
      if (pi < u.pivots.size() && u.pivots[pi] == j) {
        ++pi;
        continue;
      }
      non_pivots.push_back(j);
    }
  }
  Mat q = zeros(static_cast<int>(non_pivots.size()), ambient, p);
  for (int k = 0; k < static_cast<int>(non_pivots.size()); ++k) {
    q.at(k, non_pivots[k]) = 1;
    for (int i = 0; i < u.rank; ++i)
      q.at(k, u.pivots[i]) = norm_mod(-u.m.at(i, non_pivots[k]), p);
  }
  return q;
}

void for_each_subspace(int n, int p,
                       const std::function<void(const Mat&)>& fn) {
  // k = 0: the zero subspace
  fn(zeros(0, n, p));
  std::vector<int> pivots;
  std::function<void(int, int)> choose = [&](int k, int start) {
    if (static_cast<int>(pivots.size()) == k) {
      // free positions: (i, j) with j > pivots[i] and j not a pivot
      std::vector<std::pair<int, int>> free_slots;
      std::vector<bool> is_piv(n, false);
      for (int c : pivots) is_piv[c] = true;
      for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_slots.emplace_back(i, j);
      long total = 1;
      for (size_t s = 0; s < free_slots.size(); ++s) total *= p;
      for (long code = 0; code < total; ++code) {
        Mat rows = zeros(k, n, p);
        for (int i = 0; i < k; ++i) rows.at(i, pivots[i]) = 1;
        long c = code;
        for (const auto& [i, j] : free_slots) {
          rows.at(i, j) = static_cast<int>(c % p);
          c /= p;
        }
        fn(rows);
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots.push_back(c);
      choose(k, c + 1);
      pivots.pop_back();
    }
  };
  for (int k = 1; k <= n; ++k) choose(k, 0);
}

}  // namespace catcheck::fp
