#pragma once

// Compositions, partitions, multicompositions/multipartitions, dominance,
// conjugation, hook conditions, and the weight sets C(bk|bl;n), H(bk|bl;n).

#include <string>
#include <vector>

#include "superschur/ring.hpp"

namespace superschur {

// A composition is a finite sequence of nonnegative integers. Partitions are
// compositions with weakly decreasing parts and no trailing zeros in
// canonical form. Compositions keep their declared part count (weight types
// address slots by position, including zero slots).
using Composition = std::vector<int>;
using Multicomposition = std::vector<Composition>;
using Multipartition = Multicomposition;

int size_of(const Composition& c);
int size_of(const Multicomposition& m);
bool is_partition(const Composition& c);
bool is_multipartition(const Multicomposition& m);
// Strip trailing zeros (canonical partition form).
Composition normalized(Composition c);
Multipartition normalized(Multipartition m);
int length_of(const Composition& c);  // number of nonzero parts

Composition conjugate(const Composition& p);

enum class Dominance { Greater, Less, Equal, Incomparable };

// Dominance on multicompositions of equal size and component count, by the
// cumulative partial-sum condition.
Dominance dominance(const Multicomposition& a, const Multicomposition& b);

// Total order refining dominance (greater first): lexicographic on the
// cumulative partial-sum sequences. Returns true if a precedes b.
bool dominance_total_less(const Multicomposition& a, const Multicomposition& b);

// -------- hooks --------

bool hook_test(const Composition& p, int k, int l);

struct HookSplit {
  Composition sharp;  // (p_1..p_k)
  Composition star;   // conjugate of (p_{k+1}, ...)
};

HookSplit hook_split(const Composition& p, int k, int l);
Composition hook_join(const Composition& sharp, const Composition& star, int k, int l);

// P^+ membership: sharp_k >= length(star), with sharp_k = +inf when k = 0.
bool p_plus_test(const Composition& sharp, const Composition& star, int k);

// -------- profiles and weights --------

struct HookProfile {
  std::vector<int> bk, bl;

  int m() const { return static_cast<int>(bk.size()); }
  int k() const;
  int l() const;
  int d(int i) const;      // d_i = d_{i-1} + k_i + l_i, d_0 = 0, 1-based i
  int color(int i) const;  // c(i) = a for d_{a-1} < i <= d_a, 1-based i
  void validate() const;   // sizes match, k + l > 0
};

// mu with k_i parts per component, nu with l_i parts; |mu| + |nu| = n.
struct WeightPair {
  Multicomposition mu, nu;

  int size() const { return size_of(mu) + size_of(nu); }
  bool operator==(const WeightPair&) const = default;
  bool operator<(const WeightPair& o) const;
};

void validate_weight(const WeightPair& w, const HookProfile& profile, int n);

// Componentwise concatenation a v b (profiles must have equal length).
Multicomposition vee(const Multicomposition& a, const Multicomposition& b);

// tilde(mu) = (1^{|mu^(1)|}; ...; 1^{|mu^(m)|})
Multicomposition tilde(const Multicomposition& mu);
// mu* = mu v tilde(nu), nu_* = tilde(mu) v nu
Multicomposition mu_star(const WeightPair& w);
Multicomposition nu_star(const WeightPair& w);

// All weight pairs of the profile with |mu|+|nu| = n, in a deterministic
// order (descending lexicographic on the flattened slot vector).
std::vector<WeightPair> enumerate_weights(const HookProfile& profile, int n);

// All multipartitions of n with m components, dominance-refining order
// (greater first).
std::vector<Multipartition> enumerate_multipartitions(int m, int n);

// All (bk,bl)-hook multipartitions of n, dominance-refining order.
std::vector<Multipartition> enumerate_hook_multipartitions(const HookProfile& profile, int n);

// lambda_sharp | lambda_star of a hook multipartition, padded to the profile's
// slot counts (k_i and l_i parts per component).
WeightPair hook_weight(const Multipartition& shape, const HookProfile& profile);

std::string to_string(const Composition& c);
std::string to_string(const Multicomposition& m);
std::string to_string(const WeightPair& w);

}  // namespace superschur
