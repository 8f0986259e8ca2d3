#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace catcheck::fp {

// Dense row-major matrix over F_p, p a small prime.
struct Mat {
  int rows = 0;
  int cols = 0;
  int p = 2;
  std::vector<int> e;

  int at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }
  int& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat zeros(int rows, int cols, int p);
Mat identity(int n, int p);
Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

int norm_mod(int v, int p);
int inv_mod(int a, int p);

struct Echelon {
  Mat m;                    // reduced row-echelon form
  std::vector<int> pivots;  // pivot columns, ascending
  int rank = 0;
};

// Deterministic RREF: leftmost pivots, full reduction.
Echelon rref(Mat m);
int rank(const Mat& m);

// Kernel basis as columns, standard free-variable construction from the
// RREF, free columns ascending.
Mat nullspace(const Mat& a);

// The unique canonical basis of the column space: RREF rows of the
// transpose, returned as columns.  Equal subspaces give equal matrices.
Mat canonical_columns(const Mat& a);

// X with A X = B, free variables zero; nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Canonical projection F^ambient -> F^(ambient - r) whose kernel is the
// column space of span_cols: reduce away pivot coordinates, keep the rest.
Mat quotient_map(const Mat& span_cols, int ambient, int p);

// Enumerates every subspace of F_p^n once, via RREF row bases (rows of the
// emitted matrix form the canonical basis; 0 rows for the zero subspace).
void for_each_subspace(int n, int p, const std::function<void(const Mat&)>& fn);

}  // namespace catcheck::fp
