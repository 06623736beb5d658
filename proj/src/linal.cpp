#include "superschur/linal.hpp"

#include <algorithm>
#include <stdexcept>

namespace superschur {

namespace {

// Pivot preference: fewest terms, then lowest total degree, keeps Bareiss
// intermediate growth down.
bool better_pivot(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  return a.total_degree() < b.total_degree();
}

struct Eliminated {
  PolyMatrix m;                // augmented, after forward elimination
  std::vector<int> pivot_col;  // per eliminated row
  int rank = 0;
};

// Fraction-free forward elimination on the first `lead_cols` columns of m.
Eliminated bareiss_forward(PolyMatrix m, int lead_cols) {
  Eliminated out;
  const int rows = static_cast<int>(m.size());
  const int nq = rows && !m[0].empty() ? m[0][0].num_q_vars() : 0;
  LaurentPolynomial prev = LaurentPolynomial::one(nq);
  std::vector<bool> used_col(lead_cols, false);
  int r = 0;
  while (r < rows) {
    int pi = -1, pj = -1;
    for (int j = 0; j < lead_cols; ++j) {
      if (used_col[j]) continue;
      for (int i = r; i < rows; ++i) {
        if (m[i][j].is_zero()) continue;
        if (pi < 0 || better_pivot(m[i][j], m[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(m[pi], m[r]);
    used_col[pj] = true;
    const int width = static_cast<int>(m[r].size());
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][pj].is_zero()) {
        // Still need the Bareiss rescale/division for exactness bookkeeping:
        // entry' = (pivot*entry - 0) / prev.
        for (int j = 0; j < width; ++j) {
          if (m[i][j].is_zero()) continue;
          auto d = (m[r][pj] * m[i][j]).exact_divide(prev);
          if (!d) throw std::logic_error("Bareiss division failed");
          m[i][j] = std::move(*d);
        }
        continue;
      }
      for (int j = 0; j < width; ++j) {
        if (j == pj) continue;
        LaurentPolynomial t = m[r][pj] * m[i][j] - m[i][pj] * m[r][j];
        if (t.is_zero()) {
          m[i][j] = t;
          continue;
        }
        auto d = t.exact_divide(prev);
        if (!d) throw std::logic_error("Bareiss division failed");
        m[i][j] = std::move(*d);
      }
      m[i][pj] = LaurentPolynomial::zero(nq);
    }
    prev = m[r][pj];
    out.pivot_col.push_back(pj);
    ++r;
  }
  out.m = std::move(m);
  out.rank = r;
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<RationalFunction>>> fraction_solve_multi(
    const PolyMatrix& A, const std::vector<std::vector<LaurentPolynomial>>& B) {
  if (A.empty()) {
    // Zero equations: x = 0 solves everything (if B rows exist they must too).
    std::vector<std::vector<RationalFunction>> res(B.empty() ? 0 : B[0].size());
    return res;
  }
  const int rows = static_cast<int>(A.size());
  const int cols = static_cast<int>(A[0].size());
  const int nrhs = B.empty() ? 0 : static_cast<int>(B[0].size());
  const int nq = A[0].empty() ? (nrhs ? B[0][0].num_q_vars() : 0) : A[0][0].num_q_vars();
  PolyMatrix m(rows);
  for (int i = 0; i < rows; ++i) {
    m[i] = A[i];
    if (nrhs) m[i].insert(m[i].end(), B[i].begin(), B[i].end());
  }
  Eliminated e = bareiss_forward(std::move(m), cols);
  // Consistency: rows past the rank have zero lead part; rhs must vanish too.
  for (int i = e.rank; i < rows; ++i)
    for (int k = 0; k < nrhs; ++k)
      if (!e.m[i][cols + k].is_zero()) return std::nullopt;

  std::vector<std::vector<RationalFunction>> res(
      nrhs, std::vector<RationalFunction>(cols, RationalFunction::zero(nq)));
  for (int k = 0; k < nrhs; ++k) {
    for (int i = e.rank - 1; i >= 0; --i) {
      RationalFunction acc(e.m[i][cols + k]);
      for (int r2 = i + 1; r2 < e.rank; ++r2) {
        int c2 = e.pivot_col[r2];
        if (e.m[i][c2].is_zero() || res[k][c2].is_zero()) continue;
        acc = acc - RationalFunction(e.m[i][c2]) * res[k][c2];
      }
      res[k][e.pivot_col[i]] = acc / RationalFunction(e.m[i][e.pivot_col[i]]);
    }
  }
  return res;
}

PolySolveOutcome fraction_solve(const PolyMatrix& A, const std::vector<LaurentPolynomial>& b) {
  PolySolveOutcome out;
  std::vector<std::vector<LaurentPolynomial>> B(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) B[i] = {b[i]};
  const int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  // Rank via a separate forward pass (fraction_solve_multi discards it).
  PolyMatrix m(A);
  Eliminated e = bareiss_forward(std::move(m), cols);
  out.rank = e.rank;
  out.nullity = cols - e.rank;
  auto sol = fraction_solve_multi(A, B);
  if (!sol) {
    out.consistent = false;
    return out;
  }
  out.consistent = true;
  out.solution = std::move((*sol)[0]);
  return out;
}

int poly_rank(PolyMatrix A) {
  if (A.empty()) return 0;
  int cols = static_cast<int>(A[0].size());
  return bareiss_forward(std::move(A), cols).rank;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t integer_mod(const Integer& x, std::uint64_t p) {
  Integer m = x % Integer(p);
  if (m < 0) m += Integer(p);
  return m.convert_to<std::uint64_t>();
}

}  // namespace

IncrementalRankModP::IncrementalRankModP(int cols, std::uint64_t prime)
    : cols_(cols), p_(prime) {}

std::uint64_t IncrementalRankModP::to_fp(const Integer& x) const { return integer_mod(x, p_); }

std::uint64_t IncrementalRankModP::to_fp(const Rational& x) const {
  std::uint64_t n = integer_mod(numerator(x), p_);
  std::uint64_t d = integer_mod(denominator(x), p_);
  if (d == 0) throw std::invalid_argument("denominator vanishes mod p");
  return mulmod(n, invmod(d, p_), p_);
}

bool IncrementalRankModP::add_row(std::vector<std::uint64_t> row) {
  for (auto& [pc, rr] : rows_) {
    if (row[pc] == 0) continue;
    std::uint64_t f = row[pc];
    for (int j = 0; j < cols_; ++j) {
      if (rr[j] == 0) continue;
      std::uint64_t s = mulmod(f, rr[j], p_);
      row[j] = (row[j] + p_ - s) % p_;
    }
  }
  int pc = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j] != 0) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  std::uint64_t inv = invmod(row[pc], p_);
  for (int j = 0; j < cols_; ++j)
    if (row[j]) row[j] = mulmod(row[j], inv, p_);
  rows_.emplace_back(pc, std::move(row));
  return true;
}

bool IncrementalRankModP::add_row(const std::vector<Rational>& row) {
  std::vector<std::uint64_t> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = to_fp(row[j]);
  return add_row(std::move(r));
}

int rank_mod_p(const std::vector<std::vector<Integer>>& a, std::uint64_t prime) {
  if (a.empty()) return 0;
  IncrementalRankModP red(static_cast<int>(a[0].size()), prime);
  for (const auto& row : a) {
    std::vector<std::uint64_t> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = integer_mod(row[j], prime);
    red.add_row(std::move(r));
  }
  return red.rank();
}

}  // namespace superschur
