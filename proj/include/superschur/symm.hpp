#pragma once

// Symmetric-group machinery: permutations, lengths, reduced words, Young
// subgroups, row-standard tableaux, distinguished coset representatives d(s),
// and the dominance order on standard tableaux.
//
// Conventions (shared by every module):
//   * mult(a,b) means "a then b": mult(a,b)(i) = b(a(i)). With this order
//     T_a T_b = T_{mult(a,b)} whenever lengths add.
//   * Permutations act on tableaux on the right by permuting entries: s.w
//     replaces each entry e by w(e). Then s.(mult(w,v)) = (s.w).v.
//   * Nodes of a diagram are ordered component-major, then row, then column.

#include <string>
#include <vector>

#include "superschur/combin.hpp"

namespace superschur {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> one_line);  // 1-based images

  int window() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return img_; }
  bool is_identity() const;

  static Permutation transposition(int n, int i, int j);
  static Permutation adjacent(int n, int i) { return transposition(n, i, i + 1); }

  friend Permutation mult(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  int length() const;  // inversion count
  // Reduced word: w = s_{w1} s_{w2} ... with letters 1..n-1, length() letters.
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Cycle notation, fixed points omitted: "(1 2 5 8 6)(3 7 4)(9 10)"; the
  // identity prints as "()".
  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

// A tableau of (multicomposition) shape: entries in the nodes, 0 = absent.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Multicomposition shape, int fill_value = 0);

  const Multicomposition& shape() const { return shape_; }
  int size() const { return size_of(shape_); }
  int components() const { return static_cast<int>(shape_.size()); }

  int& at(int comp, int row, int col) { return rows_[comp][row][col]; }  // 0-based
  int at(int comp, int row, int col) const { return rows_[comp][row][col]; }
  const std::vector<std::vector<int>>& component(int c) const { return rows_[c]; }

  // Nodes in canonical order (component, row, col), 0-based.
  struct Node {
    int comp, row, col;
    auto operator<=>(const Node&) const = default;
  };
  std::vector<Node> nodes() const;

  // Entries read in canonical node order.
  std::vector<int> entries() const;
  // Node of a given entry; throws if absent.
  Node find_entry(int e) const;

  bool is_row_standard() const;     // rows strictly increase, entries 1..n once
  bool is_column_standard() const;  // columns strictly increase
  bool is_standard() const { return is_row_standard() && is_column_standard(); }

  // Right action by permuting entries: every entry e becomes w(e).
  Tableau acted(const Permutation& w) const;

  // Shape of the sub-diagram holding entries <= i (standard tableaux only).
  Multicomposition restriction_shape(int i) const;

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

  std::string to_string() const;

 private:
  Multicomposition shape_;
  std::vector<std::vector<std::vector<int>>> rows_;
};

// Row-reading (t^lambda) and column-reading (t_lambda) canonical tableaux.
Tableau t_row(const Multicomposition& shape);
Tableau t_col(const Multicomposition& shape);

// d(s) for row-standard s: the permutation with s = t^shape . d(s); it is the
// distinguished (minimal-length) coset representative of S_shape d(s).
Permutation d_of(const Tableau& s);

// All standard tableaux of the shape, in the dominance-refining total order
// (t^lambda first).
std::vector<Tableau> enumerate_standard(const Multicomposition& shape);

// Count without materializing.
long count_standard(const Multicomposition& shape);

// s <= t iff Shape(s restricted to 1..i) <= Shape(t restricted) for all i.
Dominance tableau_dominance(const Tableau& s, const Tableau& t);
// Total order refining tableau dominance, greater first.
bool tableau_total_less(const Tableau& s, const Tableau& t);

// The Young subgroup S_shape: blocks of consecutive entries given by the rows
// of t^shape.
std::vector<std::pair<int, int>> young_blocks(const Multicomposition& shape);  // [begin,end) 1-based
std::vector<int> young_generators(const Multicomposition& shape, int n);
std::vector<Permutation> young_elements(const Multicomposition& shape, int n);
long young_order(const Multicomposition& shape);

}  // namespace superschur
