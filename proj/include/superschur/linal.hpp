#pragma once

// Exact linear algebra: fraction-free Gaussian elimination (Bareiss) over the
// Laurent-polynomial ring, dense elimination over field types, and a fast
// rank-mod-p routine used for rank certificates on big systems.

#include <cstdint>
#include <optional>
#include <vector>

#include "superschur/numberfield.hpp"
#include "superschur/ring.hpp"

namespace superschur {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

struct PolySolveOutcome {
  bool consistent = false;
  // One exact solution over the fraction field (free variables set to zero).
  std::vector<RationalFunction> solution;
  int rank = 0;
  int nullity = 0;
};

// Solve A x = b over the fraction field of the Laurent-polynomial ring via
// Bareiss-style cross-multiplication. A rectangular; underdetermined systems
// yield one solution plus the nullspace rank; inconsistent systems are
// reported as such.
PolySolveOutcome fraction_solve(const PolyMatrix& A, const std::vector<LaurentPolynomial>& b);

// Solve A X = B columnwise for several right-hand sides with shared
// elimination. result[k] is the solution for column k of B; a column with no
// solution yields nullopt for the whole call.
std::optional<std::vector<std::vector<RationalFunction>>> fraction_solve_multi(
    const PolyMatrix& A, const std::vector<std::vector<LaurentPolynomial>>& B);

// Exact rank over the fraction field (Bareiss elimination). Intended for small
// matrices; degree growth makes it unsuitable for big systems.
int poly_rank(PolyMatrix A);

// Dense Gauss-Jordan over a field type F supporting +,-,*,inverse(),is_zero().
// zero/one are supplied because FieldElem carries its field by pointer.
template <typename F>
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols, const F& zero, const F& one)
      : rows_(rows), cols_(cols), a_(rows, std::vector<F>(cols, zero)), zero_(zero), one_(one) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& at(int i, int j) { return a_[i][j]; }
  const F& at(int i, int j) const { return a_[i][j]; }

  // Gauss-Jordan in place; returns rank. pivot_cols, when given, receives the
  // pivot column of each eliminated row.
  int row_reduce(std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!a_[i][c].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(a_[p], a_[r]);
      F inv = a_[r][c].inverse();
      for (int j = c; j < cols_; ++j) a_[r][j] = a_[r][j] * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || a_[i][c].is_zero()) continue;
        F f = a_[i][c];
        for (int j = c; j < cols_; ++j) a_[i][j] = a_[i][j] - f * a_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    if (pivot_cols) *pivot_cols = pivots;
    return r;
  }

  int rank() const {
    FieldMatrix copy = *this;
    return copy.row_reduce();
  }

  // Basis of the right nullspace.
  std::vector<std::vector<F>> nullspace() const {
    FieldMatrix copy = *this;
    std::vector<int> pivots;
    int r = copy.row_reduce(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<F> v(cols_, zero_);
      v[c] = one_;
      for (int i = 0; i < r; ++i) v[pivots[i]] = zero_ - copy.a_[i][c];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<F>> a_;
  F zero_, one_;
};

// Rational with field-style interface for FieldMatrix.
struct Rat {
  Rational v;
  Rat() : v(0) {}
  Rat(Rational x) : v(std::move(x)) {}
  bool is_zero() const { return v == 0; }
  Rat inverse() const { return Rat(Rational(1) / v); }
  Rat operator+(const Rat& o) const { return Rat(v + o.v); }
  Rat operator-(const Rat& o) const { return Rat(v - o.v); }
  Rat operator*(const Rat& o) const { return Rat(v * o.v); }
};

// Rank of an integer matrix modulo a fixed prime < 2^62. A mod-p rank is a
// lower bound for the rank in characteristic zero; used as a certificate.
int rank_mod_p(const std::vector<std::vector<Integer>>& a, std::uint64_t prime);

// Incremental mod-p row reducer: feed rows one at a time, query rank so far.
class IncrementalRankModP {
 public:
  IncrementalRankModP(int cols, std::uint64_t prime);
  // Returns true if the row increased the rank.
  bool add_row(std::vector<std::uint64_t> row);
  bool add_row(const std::vector<Rational>& row);
  int rank() const { return static_cast<int>(rows_.size()); }
  std::uint64_t to_fp(const Rational& x) const;
  std::uint64_t to_fp(const Integer& x) const;

 private:
  int cols_;
  std::uint64_t p_;
  // reduced rows keyed by pivot column
  std::vector<std::pair<int, std::vector<std::uint64_t>>> rows_;
};

constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;  // 2^61 - 1

}  // namespace superschur
