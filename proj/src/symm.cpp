#include "superschur/symm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= window(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation mult(const Permutation& a, const Permutation& b) {
  if (a.window() != b.window()) throw std::invalid_argument("window mismatch");
  std::vector<int> r(a.window());
  for (int i = 1; i <= a.window(); ++i) r[i - 1] = b(a(i));
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(window());
  for (int i = 1; i <= window(); ++i) r[img_[i - 1] - 1] = i;
  return Permutation(std::move(r));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < window(); ++i)
    for (int j = i + 1; j < window(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // With mult(a,b)(i) = b(a(i)), right multiplication by s_j swaps the values
  // j, j+1. Peel letters off the right: a value-inversion (j appears after
  // j+1) means w = w' s_j with one fewer inversion.
  std::vector<int> letters;
  std::vector<int> cur = img_;
  auto pos_of = [&](int v) {
    for (int i = 0; i < static_cast<int>(cur.size()); ++i)
      if (cur[i] == v) return i;
    return -1;
  };
  while (true) {
    int j = -1;
    for (int v = 1; v + 1 <= static_cast<int>(cur.size()); ++v) {
      if (pos_of(v) > pos_of(v + 1)) {
        j = v;
        break;
      }
    }
    if (j < 0) break;
    letters.push_back(j);
    for (auto& v : cur) {
      if (v == j)
        v = j + 1;
      else if (v == j + 1)
        v = j;
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(window(), false);
  bool any = false;
  for (int i = 1; i <= window(); ++i) {
    if (seen[i - 1] || (*this)(i) == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = (*this)(j);
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

Tableau::Tableau(Multicomposition shape, int fill_value) : shape_(std::move(shape)) {
  rows_.resize(shape_.size());
  for (std::size_t c = 0; c < shape_.size(); ++c) {
    rows_[c].resize(shape_[c].size());
    for (std::size_t r = 0; r < shape_[c].size(); ++r)
      rows_[c][r].assign(shape_[c][r], fill_value);
  }
}

std::vector<Tableau::Node> Tableau::nodes() const {
  std::vector<Node> out;
  for (int c = 0; c < components(); ++c)
    for (int r = 0; r < static_cast<int>(shape_[c].size()); ++r)
      for (int j = 0; j < shape_[c][r]; ++j) out.push_back({c, r, j});
  return out;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (int c = 0; c < components(); ++c)
    for (const auto& row : rows_[c])
      for (int v : row) out.push_back(v);
  return out;
}

Tableau::Node Tableau::find_entry(int e) const {
  for (int c = 0; c < components(); ++c)
    for (int r = 0; r < static_cast<int>(rows_[c].size()); ++r)
      for (int j = 0; j < static_cast<int>(rows_[c][r].size()); ++j)
        if (rows_[c][r][j] == e) return {c, r, j};
  throw std::invalid_argument("entry not present");
}

bool Tableau::is_row_standard() const {
  std::vector<bool> seen(size(), false);
  for (int c = 0; c < components(); ++c) {
    for (const auto& row : rows_[c]) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        int v = row[j];
        if (v < 1 || v > size() || seen[v - 1]) return false;
        seen[v - 1] = true;
        if (j && row[j - 1] >= v) return false;
      }
    }
  }
  return true;
}

bool Tableau::is_column_standard() const {
  for (int c = 0; c < components(); ++c) {
    for (std::size_t r = 0; r + 1 < rows_[c].size(); ++r) {
      const auto& above = rows_[c][r];
      const auto& below = rows_[c][r + 1];
      for (std::size_t j = 0; j < below.size() && j < above.size(); ++j)
        if (above[j] >= below[j]) return false;
    }
  }
  return true;
}

Tableau Tableau::acted(const Permutation& w) const {
  Tableau t(*this);
  for (auto& comp : t.rows_)
    for (auto& row : comp)
      for (auto& v : row) v = w(v);
  return t;
}

Multicomposition Tableau::restriction_shape(int i) const {
  Multicomposition out(components());
  for (int c = 0; c < components(); ++c) {
    for (const auto& row : rows_[c]) {
      int cnt = 0;
      for (int v : row)
        if (v >= 1 && v <= i) ++cnt;
      out[c].push_back(cnt);
    }
    while (!out[c].empty() && out[c].back() == 0) out[c].pop_back();
  }
  return out;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int c = 0; c < components(); ++c) {
    if (c) os << " | ";
    for (std::size_t r = 0; r < rows_[c].size(); ++r) {
      if (r) os << " / ";
      for (std::size_t j = 0; j < rows_[c][r].size(); ++j)
        os << (j ? "," : "") << rows_[c][r][j];
    }
    if (rows_[c].empty()) os << "-";
  }
  return os.str();
}

Tableau t_row(const Multicomposition& shape) {
  Tableau t(shape);
  int e = 1;
  for (int c = 0; c < t.components(); ++c)
    for (int r = 0; r < static_cast<int>(shape[c].size()); ++r)
      for (int j = 0; j < shape[c][r]; ++j) t.at(c, r, j) = e++;
  return t;
}

Tableau t_col(const Multicomposition& shape) {
  Tableau t(shape);
  int e = 1;
  for (int c = 0; c < t.components(); ++c) {
    int cols = 0;
    for (int r : shape[c]) cols = std::max(cols, r);
    for (int j = 0; j < cols; ++j)
      for (int r = 0; r < static_cast<int>(shape[c].size()); ++r)
        if (j < shape[c][r]) t.at(c, r, j) = e++;
  }
  return t;
}

Permutation d_of(const Tableau& s) {
  if (!s.is_row_standard()) throw std::invalid_argument("d(s) needs a row-standard tableau");
  // s = t^shape . d  means  d(e) = entry of s where t^shape has e, i.e. the
  // entries of s read in canonical node order.
  return Permutation(s.entries());
}

namespace {

void standard_rec(Tableau& t, int next, const std::vector<Tableau::Node>& all,
                  std::vector<Tableau>& out) {
  int n = t.size();
  if (next > n) {
    out.push_back(t);
    return;
  }
  for (const auto& nd : all) {
    if (t.at(nd.comp, nd.row, nd.col) != 0) continue;
    // placement must keep rows/columns increasing: left and up neighbours
    // must already be filled (they hold smaller values by construction)
    if (nd.col > 0 && t.at(nd.comp, nd.row, nd.col - 1) == 0) continue;
    if (nd.row > 0 && nd.col < static_cast<int>(t.shape()[nd.comp][nd.row - 1]) &&
        t.at(nd.comp, nd.row - 1, nd.col) == 0)
      continue;
    t.at(nd.comp, nd.row, nd.col) = next;
    standard_rec(t, next + 1, all, out);
    t.at(nd.comp, nd.row, nd.col) = 0;
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard(const Multicomposition& shape) {
  if (!is_multipartition(shape))
    throw std::invalid_argument("standard tableaux need partition shapes");
  Tableau t(shape);
  std::vector<Tableau> out;
  standard_rec(t, 1, t.nodes(), out);
  std::sort(out.begin(), out.end(), tableau_total_less);
  return out;
}

long count_standard(const Multicomposition& shape) {
  // Hook-length formula per component times the multinomial distributing the
  // entries over components.
  long total = 1;
  long binom_acc = 1;
  long used = 0;
  auto binom = [](long a, long b) {
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (const auto& comp : shape) {
    Composition p = normalized(comp);
    if (!is_partition(p)) throw std::invalid_argument("count_standard needs partitions");
    long sz = size_of(p);
    binom_acc *= binom(used + sz, sz);
    used += sz;
    Composition conj = conjugate(p);
    long f = 1;
    for (long i = 1; i <= sz; ++i) f *= i;
    long hooks = 1;
    for (std::size_t r = 0; r < p.size(); ++r)
      for (int c = 0; c < p[r]; ++c)
        hooks *= (p[r] - c) + (conj[c] - static_cast<long>(r)) - 1;
    total *= f / hooks;
  }
  return total * binom_acc;
}

Dominance tableau_dominance(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("shape mismatch");
  int n = s.size();
  bool ge = true, le = true;
  for (int i = 1; i <= n; ++i) {
    switch (dominance(s.restriction_shape(i), t.restriction_shape(i))) {
      case Dominance::Greater:
        le = false;
        break;
      case Dominance::Less:
        ge = false;
        break;
      case Dominance::Equal:
        break;
      case Dominance::Incomparable:
        ge = le = false;
        break;
    }
    if (!ge && !le) return Dominance::Incomparable;
  }
  if (ge && le) return Dominance::Equal;
  return ge ? Dominance::Greater : Dominance::Less;
}

bool tableau_total_less(const Tableau& s, const Tableau& t) {
  int n = s.size();
  for (int i = 1; i <= n; ++i) {
    auto a = s.restriction_shape(i), b = t.restriction_shape(i);
    if (a != b) return dominance_total_less(a, b);
  }
  return false;
}

std::vector<std::pair<int, int>> young_blocks(const Multicomposition& shape) {
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (const auto& comp : shape)
    for (int row : comp) {
      blocks.emplace_back(start, start + row);
      start += row;
    }
  return blocks;
}

std::vector<int> young_generators(const Multicomposition& shape, int n) {
  std::vector<int> gens;
  for (auto [b, e] : young_blocks(shape))
    for (int i = b; i + 1 < e; ++i) gens.push_back(i);
  (void)n;
  return gens;
}

std::vector<Permutation> young_elements(const Multicomposition& shape, int n) {
  if (size_of(shape) != n) throw std::invalid_argument("shape size must equal window");
  std::vector<Permutation> elems = {Permutation(n)};
  for (auto [b, e] : young_blocks(shape)) {
    if (e - b <= 1) continue;
    // all permutations of the block, combined with what we have
    std::vector<int> block(e - b);
    std::iota(block.begin(), block.end(), b);
    std::vector<Permutation> block_perms;
    std::vector<int> perm = block;
    do {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      for (int i = 0; i < e - b; ++i) img[block[i] - 1] = perm[i];
      block_perms.emplace_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Permutation> next;
    next.reserve(elems.size() * block_perms.size());
    for (const auto& a : elems)
      for (const auto& bp : block_perms) next.push_back(mult(a, bp));
    elems = std::move(next);
  }
  return elems;
}

long young_order(const Multicomposition& shape) {
  long o = 1;
  for (const auto& comp : shape)
    for (int row : comp)
      for (int i = 2; i <= row; ++i) o *= i;
  return o;
}

}  // namespace superschur
