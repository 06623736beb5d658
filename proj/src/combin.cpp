#include "superschur/combin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur {

int size_of(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

int size_of(const Multicomposition& m) {
  int s = 0;
  for (const auto& c : m) s += size_of(c);
  return s;
}

bool is_partition(const Composition& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1]) return false;
  return c.empty() || c.back() >= 0;
}

bool is_multipartition(const Multicomposition& m) {
  for (const auto& c : m)
    if (!is_partition(c)) return false;
  return true;
}

Composition normalized(Composition c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Multipartition normalized(Multipartition m) {
  for (auto& c : m) c = normalized(std::move(c));
  return m;
}

int length_of(const Composition& c) {
  int n = 0;
  for (int x : c)
    if (x != 0) ++n;
  return n;
}

Composition conjugate(const Composition& p) {
  Composition q = normalized(p);
  if (!is_partition(q)) throw std::invalid_argument("conjugate needs a partition");
  if (q.empty()) return {};
  Composition r(q[0], 0);
  for (int part : q)
    for (int j = 0; j < part; ++j) ++r[j];
  return r;
}

namespace {

// Cumulative sums across components at every (component, row) position, the
// quantity compared by dominance. Rows are padded to a common horizon.
std::vector<long> partial_sums(const Multicomposition& a, int rows) {
  std::vector<long> out;
  long before = 0;
  for (const auto& comp : a) {
    long acc = before;
    for (int j = 0; j < rows; ++j) {
      acc += j < static_cast<int>(comp.size()) ? comp[j] : 0;
      out.push_back(acc);
    }
    before = acc;
  }
  return out;
}

int max_rows(const Multicomposition& a, const Multicomposition& b) {
  std::size_t r = 1;
  for (const auto& c : a) r = std::max(r, c.size());
  for (const auto& c : b) r = std::max(r, c.size());
  return static_cast<int>(r);
}

}  // namespace

Dominance dominance(const Multicomposition& a, const Multicomposition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("component count mismatch");
  if (size_of(a) != size_of(b)) throw std::invalid_argument("size mismatch");
  int rows = max_rows(a, b);
  auto pa = partial_sums(a, rows), pb = partial_sums(b, rows);
  bool ge = true, le = true;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] < pb[i]) ge = false;
    if (pa[i] > pb[i]) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

bool dominance_total_less(const Multicomposition& a, const Multicomposition& b) {
  int rows = max_rows(a, b);
  auto pa = partial_sums(a, rows), pb = partial_sums(b, rows);
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

bool hook_test(const Composition& p, int k, int l) {
  if (!is_partition(normalized(p))) return false;
  int row = k < static_cast<int>(p.size()) ? p[k] : 0;  // p_{k+1}, 0-based index k
  return row <= l;
}

HookSplit hook_split(const Composition& p, int k, int l) {
  if (!hook_test(p, k, l)) throw std::invalid_argument("not a (k,l)-hook partition");
  Composition q = normalized(p);
  HookSplit s;
  for (int i = 0; i < k && i < static_cast<int>(q.size()); ++i) s.sharp.push_back(q[i]);
  Composition tail(q.begin() + std::min<std::size_t>(k, q.size()), q.end());
  s.star = conjugate(tail);
  return s;
}

Composition hook_join(const Composition& sharp, const Composition& star, int k, int l) {
  if (!p_plus_test(sharp, star, k)) throw std::invalid_argument("pair not in P^+");
  Composition p = normalized(sharp);
  Composition tail = conjugate(star);
  p.insert(p.end(), tail.begin(), tail.end());
  if (!hook_test(p, k, l)) throw std::invalid_argument("join leaves the hook set");
  return p;
}

bool p_plus_test(const Composition& sharp, const Composition& star, int k) {
  Composition s = normalized(sharp), t = normalized(star);
  if (!is_partition(s) || !is_partition(t)) return false;
  if (static_cast<int>(s.size()) > k) return false;
  if (k == 0) return true;  // mu_k read as +infinity
  int mu_k = k <= static_cast<int>(s.size()) ? s[k - 1] : 0;
  return mu_k >= static_cast<int>(t.size());
}

int HookProfile::k() const { return std::accumulate(bk.begin(), bk.end(), 0); }
int HookProfile::l() const { return std::accumulate(bl.begin(), bl.end(), 0); }

int HookProfile::d(int i) const {
  int s = 0;
  for (int a = 0; a < i; ++a) s += bk[a] + bl[a];
  return s;
}

int HookProfile::color(int i) const {
  for (int a = 1; a <= m(); ++a)
    if (d(a - 1) < i && i <= d(a)) return a;
  throw std::invalid_argument("index outside 1..k+l");
}

void HookProfile::validate() const {
  if (bk.size() != bl.size()) throw std::invalid_argument("bk/bl length mismatch");
  if (bk.empty()) throw std::invalid_argument("empty profile");
  for (std::size_t i = 0; i < bk.size(); ++i)
    if (bk[i] < 0 || bl[i] < 0) throw std::invalid_argument("negative profile entry");
  if (k() + l() == 0) throw std::invalid_argument("k + l must be positive");
}

bool WeightPair::operator<(const WeightPair& o) const {
  if (mu != o.mu) return mu < o.mu;
  return nu < o.nu;
}

void validate_weight(const WeightPair& w, const HookProfile& profile, int n) {
  if (static_cast<int>(w.mu.size()) != profile.m() ||
      static_cast<int>(w.nu.size()) != profile.m())
    throw std::invalid_argument("weight component count mismatch");
  for (int i = 0; i < profile.m(); ++i) {
    if (static_cast<int>(w.mu[i].size()) != profile.bk[i])
      throw std::invalid_argument("mu slot count mismatch");
    if (static_cast<int>(w.nu[i].size()) != profile.bl[i])
      throw std::invalid_argument("nu slot count mismatch");
    for (int x : w.mu[i])
      if (x < 0) throw std::invalid_argument("negative weight entry");
    for (int x : w.nu[i])
      if (x < 0) throw std::invalid_argument("negative weight entry");
  }
  if (w.size() != n) throw std::invalid_argument("weight size mismatch");
}

Multicomposition vee(const Multicomposition& a, const Multicomposition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("profile mismatch in vee");
  Multicomposition r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i];
    r[i].insert(r[i].end(), b[i].begin(), b[i].end());
  }
  return r;
}

Multicomposition tilde(const Multicomposition& mu) {
  Multicomposition r(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r[i] = Composition(size_of(mu[i]), 1);
  return r;
}

Multicomposition mu_star(const WeightPair& w) { return vee(w.mu, tilde(w.nu)); }
Multicomposition nu_star(const WeightPair& w) { return vee(tilde(w.mu), w.nu); }

namespace {

// All ways to fill `slots` nonnegative entries summing to n, descending lex.
void compositions_into(int n, int slots, Composition& cur,
                       const std::function<void(const Composition&)>& emit) {
  if (slots == 0) {
    if (n == 0) emit(cur);
    return;
  }
  for (int first = n; first >= 0; --first) {
    cur.push_back(first);
    compositions_into(n - first, slots - 1, cur, emit);
    cur.pop_back();
  }
}

// All partitions of n with at most `max_len` rows and parts <= max_part,
// descending lex order.
void partitions_rec(int n, int max_part, int max_len, Composition& cur,
                    std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  Composition cur;
  partitions_rec(n, n, n, cur, out);
  if (n == 0) return {{}};
  return out;
}

}  // namespace

std::vector<WeightPair> enumerate_weights(const HookProfile& profile, int n) {
  profile.validate();
  int slots = profile.k() + profile.l();
  std::vector<WeightPair> out;
  Composition cur;
  std::function<void(const Composition&)> emit = [&](const Composition& flat) {
    WeightPair w;
    std::size_t pos = 0;
    for (int i = 0; i < profile.m(); ++i)
      w.mu.push_back(Composition(flat.begin() + pos, flat.begin() + (pos += profile.bk[i])));
    for (int i = 0; i < profile.m(); ++i)
      w.nu.push_back(Composition(flat.begin() + pos, flat.begin() + (pos += profile.bl[i])));
    out.push_back(std::move(w));
  };
  compositions_into(n, slots, cur, emit);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int m, int n) {
  std::vector<Multipartition> out;
  std::vector<std::vector<Composition>> parts_by_size(n + 1);
  for (int s = 0; s <= n; ++s) parts_by_size[s] = partitions_of(s);
  Multipartition cur(m);
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == m) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int s = left; s >= 0; --s) {
      for (const auto& p : parts_by_size[s]) {
        cur[comp] = p;
        rec(comp + 1, left - s);
      }
    }
    cur[comp].clear();
  };
  rec(0, n);
  std::stable_sort(out.begin(), out.end(), dominance_total_less);
  return out;
}

std::vector<Multipartition> enumerate_hook_multipartitions(const HookProfile& profile, int n) {
  profile.validate();
  std::vector<Multipartition> out;
  for (auto& mp : enumerate_multipartitions(profile.m(), n)) {
    bool ok = true;
    for (int i = 0; i < profile.m() && ok; ++i)
      ok = hook_test(mp[i], profile.bk[i], profile.bl[i]);
    if (ok) out.push_back(std::move(mp));
  }
  return out;
}

WeightPair hook_weight(const Multipartition& shape, const HookProfile& profile) {
  WeightPair w;
  for (int i = 0; i < profile.m(); ++i) {
    HookSplit s = hook_split(shape[i], profile.bk[i], profile.bl[i]);
    s.sharp.resize(profile.bk[i], 0);
    s.star.resize(profile.bl[i], 0);
    w.mu.push_back(std::move(s.sharp));
    w.nu.push_back(std::move(s.star));
  }
  return w;
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

std::string to_string(const Multicomposition& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ";";
    std::string s = to_string(m[i]);
    os << s.substr(1, s.size() - 2);
  }
  os << ")";
  return os.str();
}

std::string to_string(const WeightPair& w) {
  return to_string(w.mu) + "|" + to_string(w.nu);
}

}  // namespace superschur
