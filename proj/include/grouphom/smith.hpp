#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "grouphom/int_matrix.hpp"

namespace grouphom {

// left * M * right = diag(diagonal) padded with zeros; left and right are
// unimodular, diagonal entries are nonnegative and each divides the next.
struct SnfResult {
  std::vector<Int> diagonal;  // length min(rows, cols)
  IntMatrix left;
  IntMatrix right;
};

inline SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t nmin = std::min(rows, cols);

  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  // Pivot choice: smallest nonzero absolute value in the trailing
  // submatrix, ties broken by lowest (row, col).
  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d.at(i, j) == 0) continue;
        Int a = abs(d.at(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    }
    return best;
  };

  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      auto piv = find_pivot(t);
      if (!piv) {
        // trailing submatrix is zero; done
        t = nmin;
        break;
      }
      if (piv->first != t) {
        d.swap_rows(t, piv->first);
        left.swap_rows(t, piv->first);
      }
      if (piv->second != t) {
        d.swap_cols(t, piv->second);
        right.swap_cols(t, piv->second);
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.add_row(i, t, -q);
          left.add_row(i, t, -q);
        }
        if (d.at(i, t) != 0) dirty = true;  // remainder survives
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.add_col(j, t, -q);
          right.add_col(j, t, -q);
        }
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column t are clear; enforce that the pivot divides the
      // rest of the submatrix before moving on.
      bool fixed_up = false;
      for (std::size_t i = t + 1; i < rows && !fixed_up; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed_up; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, 1);
            left.add_row(t, i, 1);
            fixed_up = true;
          }
        }
      }
      if (!fixed_up) break;
    }
    if (t >= nmin) break;
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SnfResult r;
  r.diagonal.reserve(nmin);
  for (std::size_t t = 0; t < nmin; ++t) {
    Int v = d.at(t, t);
    r.diagonal.push_back(v < 0 ? Int(-v) : v);
  }
  r.left = std::move(left);
  r.right = std::move(right);
  return r;
}

// Invariant factors of the cokernel of the relation matrix: the torsion
// factors (diagonal entries > 1) in divisibility order, then one 0 per
// free summand. Entries equal to 1 are dropped.
inline std::vector<Int> abelian_invariants(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  const SnfResult snf = smith_normal_form(m);
  std::vector<Int> out;
  std::size_t rank = 0;
  for (const Int& v : snf.diagonal) {
    if (v != 0) {
      ++rank;
      if (v > 1) out.push_back(v);
    }
  }
  const std::size_t free_rank = p.n_generators() - rank;
  out.insert(out.end(), free_rank, Int(0));
  return out;
}

// Membership test for the integer lattice spanned by the rows of a
// matrix. With U*A*V = D, a vector t lies in the row span of A exactly
// when t*V is divisible entrywise by the diagonal of D (zero where the
// diagonal is zero or exhausted).
class RowLattice {
 public:
  explicit RowLattice(const IntMatrix& a)
      : cols_(a.cols()), snf_(smith_normal_form(a)) {}

  bool contains(const std::vector<Int>& t) const {
    if (t.size() != cols_) {
      throw std::invalid_argument("RowLattice::contains: wrong length");
    }
    // s = t * right
    std::vector<Int> s(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        if (t[k] != 0) acc += t[k] * snf_.right.at(k, j);
      }
      s[j] = std::move(acc);
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j < snf_.diagonal.size() && snf_.diagonal[j] != 0) {
        if (s[j] % snf_.diagonal[j] != 0) return false;
      } else if (s[j] != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t cols_;
  SnfResult snf_;
};

}  // namespace grouphom
