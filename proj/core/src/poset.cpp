#include "polytree/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polytree {

FinitePoset::FinitePoset(std::vector<std::string> keys, std::vector<Cover> covers)
    : keys_(std::move(keys)), covers_(std::move(covers)) {
  index_and_check(true);
}

FinitePoset FinitePoset::from_trusted_covers(std::vector<std::string> keys, std::vector<Cover> covers) {
  FinitePoset p;
  p.keys_ = std::move(keys);
  p.covers_ = std::move(covers);
  p.index_and_check(false);
  return p;
}

void FinitePoset::index_and_check(bool check_redundancy) {
  const int n = static_cast<int>(keys_.size());
  for (int i = 0; i < n; ++i)
    if (!index_.emplace(keys_[i], i).second) throw std::invalid_argument("poset: duplicate key " + keys_[i]);

  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw std::invalid_argument("poset: duplicate cover");
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("poset: cover index out of range");
    if (a == b) throw std::invalid_argument("poset: cover from an element to itself");
  }

  up_offsets_.assign(n + 1, 0);
  down_offsets_.assign(n + 1, 0);
  for (auto [a, b] : covers_) {
    ++up_offsets_[a + 1];
    ++down_offsets_[b + 1];
  }
  for (int i = 0; i < n; ++i) {
    up_offsets_[i + 1] += up_offsets_[i];
    down_offsets_[i + 1] += down_offsets_[i];
  }
  up_.assign(covers_.size(), 0);
  down_.assign(covers_.size(), 0);
  {
    auto ufill = up_offsets_, dfill = down_offsets_;
    for (auto [a, b] : covers_) {
      up_[ufill[a]++] = b;
      down_[dfill[b]++] = a;
    }
  }
  for (int i = 0; i < n; ++i)
    std::sort(down_.begin() + down_offsets_[i], down_.begin() + down_offsets_[i + 1]);

  // Kahn's algorithm; leftovers mean a cycle.
  std::vector<int> indeg(n);
  for (int i = 0; i < n; ++i) indeg[i] = down_offsets_[i + 1] - down_offsets_[i];
  order_.clear();
  order_.reserve(n);
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) order_.push_back(i);
  for (std::size_t head = 0; head < order_.size(); ++head)
    for (int j : upper_covers(order_[head]))
      if (--indeg[j] == 0) order_.push_back(j);
  if (static_cast<int>(order_.size()) != n) throw std::invalid_argument("poset: covers contain a cycle");

  if (!check_redundancy) return;
  auto up = strict_up_sets();
  for (int a = 0; a < n; ++a)
    for (int b : upper_covers(a))
      for (int c : upper_covers(a))
        if (c != b && up[c].test(b))
          throw std::invalid_argument("poset: cover " + keys_[a] + " < " + keys_[b] + " is implied by a longer chain");
}

std::optional<int> FinitePoset::find(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FinitePoset::index_of(std::string_view key) const {
  if (auto i = find(key)) return *i;
  throw std::out_of_range("poset: unknown key " + std::string(key));
}

std::span<const int> FinitePoset::upper_covers(int i) const {
  if (i < 0 || i >= static_cast<int>(size())) throw std::out_of_range("poset: element index out of range");
  return {up_.data() + up_offsets_[i], up_.data() + up_offsets_[i + 1]};
}

std::span<const int> FinitePoset::lower_covers(int i) const {
  if (i < 0 || i >= static_cast<int>(size())) throw std::out_of_range("poset: element index out of range");
  return {down_.data() + down_offsets_[i], down_.data() + down_offsets_[i + 1]};
}

bool FinitePoset::covers_pair(int lower, int upper) const {
  auto ups = upper_covers(lower);
  return std::binary_search(ups.begin(), ups.end(), upper);
}

bool FinitePoset::leq(int a, int b) const {
  if (a == b) {
    upper_covers(a);
    return true;
  }
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : upper_covers(v)) {
      if (w == b) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (lower_covers(i).empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (upper_covers(i).empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::heights() const {
  std::vector<int> h(size(), 0);
  for (int v : order_)
    for (int w : upper_covers(v)) h[w] = std::max(h[w], h[v] + 1);
  return h;
}

std::vector<int> FinitePoset::depths() const {
  std::vector<int> d(size(), 0);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it)
    for (int w : upper_covers(*it)) d[*it] = std::max(d[*it], d[w] + 1);
  return d;
}

std::vector<Bitset> FinitePoset::strict_up_sets() const {
  std::vector<Bitset> up(size(), Bitset(size()));
  for (auto it = order_.rbegin(); it != order_.rend(); ++it)
    for (int w : upper_covers(*it)) {
      up[*it] |= up[w];
      up[*it].set(w);
    }
  return up;
}

FinitePoset from_leq(std::vector<std::string> keys, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(keys.size());
  std::vector<Bitset> less(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j)) less[i].set(j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (less[i].test(j) && less[j].test(i))
        throw std::invalid_argument("from_leq: cycle between " + keys[i] + " and " + keys[j]);
  for (int i = 0; i < n; ++i)
    for (auto j = less[i].find_first(); j != Bitset::npos; j = less[i].find_next(j))
      if (!less[j].is_subset_of(less[i]))
        throw std::invalid_argument("from_leq: relation is not transitive at " + keys[i]);

  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) {
    // j covers i when nothing strictly between them: j not above any other k > i.
    Bitset implied(n);
    for (auto k = less[i].find_first(); k != Bitset::npos; k = less[i].find_next(k)) implied |= less[k];
    Bitset direct = less[i] - implied;
    for (auto j = direct.find_first(); j != Bitset::npos; j = direct.find_next(j))
      covers.emplace_back(i, static_cast<int>(j));
  }
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

FinitePoset induced_subposet(const FinitePoset& p, std::span<const int> members) {
  const int n = static_cast<int>(p.size());
  std::vector<int> slot(n, -1);
  std::vector<std::string> keys;
  for (int m : members) {
    if (m < 0 || m >= n) throw std::out_of_range("induced_subposet: index out of range");
    if (slot[m] >= 0) throw std::invalid_argument("induced_subposet: repeated member");
    slot[m] = static_cast<int>(keys.size());
    keys.push_back(p.key(m));
  }
  // Reachability through p, then reduce within the subset.
  const auto up = p.strict_up_sets();
  return from_leq(std::move(keys), [&](int a, int b) {
    return up[members[a]].test(static_cast<std::size_t>(members[b]));
  });
}

namespace {

// Subsets closed under going up (or down) only need covers restricted.
FinitePoset convex_restriction(const FinitePoset& p, const std::vector<int>& members) {
  std::vector<int> slot(p.size(), -1);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < members.size(); ++i) {
    slot[members[i]] = static_cast<int>(i);
    keys.push_back(p.key(members[i]));
  }
  std::vector<Cover> covers;
  for (auto [a, b] : p.covers())
    if (slot[a] >= 0 && slot[b] >= 0) covers.emplace_back(slot[a], slot[b]);
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

std::vector<int> reach(const FinitePoset& p, int x, bool upward) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : upward ? p.upper_covers(v) : p.lower_covers(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

}  // namespace

FinitePoset lower_set(const FinitePoset& p, int x) {
  p.upper_covers(x);
  return convex_restriction(p, reach(p, x, false));
}

FinitePoset upper_set(const FinitePoset& p, int x) {
  p.upper_covers(x);
  return convex_restriction(p, reach(p, x, true));
}

FinitePoset interval(const FinitePoset& p, int a, int b) {
  auto above = reach(p, a, true);
  auto below = reach(p, b, false);
  std::vector<int> both;
  std::set_intersection(above.begin(), above.end(), below.begin(), below.end(), std::back_inserter(both));
  if (both.empty()) throw std::invalid_argument("interval: lower end is not below upper end");
  return convex_restriction(p, both);
}

FinitePoset lower_set(const FinitePoset& p, std::string_view x) { return lower_set(p, p.index_of(x)); }
FinitePoset upper_set(const FinitePoset& p, std::string_view x) { return upper_set(p, p.index_of(x)); }
FinitePoset interval(const FinitePoset& p, std::string_view a, std::string_view b) {
  return interval(p, p.index_of(a), p.index_of(b));
}

namespace {

std::string subset_key(unsigned mask, int k) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < k; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

FinitePoset subsets(int k, bool with_empty) {
  if (k < 0 || k > 20) throw std::invalid_argument("boolean lattice rank must be in 0..20");
  // Order masks by size then value so keys read naturally.
  std::vector<unsigned> masks;
  for (unsigned m = with_empty ? 0u : 1u; m < (1u << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<int> slot(std::size_t{1} << k, -1);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    slot[masks[i]] = static_cast<int>(i);
    keys.push_back(subset_key(masks[i], k));
  }
  std::vector<Cover> covers;
  for (unsigned m : masks)
    for (int i = 0; i < k; ++i)
      if (!(m & (1u << i))) covers.emplace_back(slot[m], slot[m | (1u << i)]);
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

}  // namespace

FinitePoset boolean_lattice(int k) { return subsets(k, true); }

FinitePoset boolean_star(int k) {
  if (k < 1) throw std::invalid_argument("boolean_star requires k >= 1");
  return subsets(k, false);
}

FinitePoset chain(int length) {
  if (length < 0) throw std::invalid_argument("chain length must be non-negative");
  std::vector<std::string> keys;
  std::vector<Cover> covers;
  for (int i = 0; i < length; ++i) {
    keys.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

FinitePoset antichain(int size) {
  if (size < 0) throw std::invalid_argument("antichain size must be non-negative");
  std::vector<std::string> keys;
  for (int i = 0; i < size; ++i) keys.push_back(std::to_string(i));
  return FinitePoset::from_trusted_covers(std::move(keys), {});
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const int np = static_cast<int>(p.size());
  const int nq = static_cast<int>(q.size());
  auto at = [nq](int a, int b) { return a * nq + b; };
  std::vector<std::string> keys;
  keys.reserve(static_cast<std::size_t>(np) * nq);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) keys.push_back("(" + p.key(a) + "," + q.key(b) + ")");
  std::vector<Cover> covers;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) {
      for (int a2 : p.upper_covers(a)) covers.emplace_back(at(a, b), at(a2, b));
      for (int b2 : q.upper_covers(b)) covers.emplace_back(at(a, b), at(a, b2));
    }
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

FinitePoset product(std::span<const FinitePoset> factors) {
  if (factors.empty()) return FinitePoset::from_trusted_covers({"()"}, {});
  FinitePoset acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, factors[i]);
  return acc;
}

FinitePoset dual(const FinitePoset& p) {
  std::vector<Cover> flipped;
  flipped.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) flipped.emplace_back(b, a);
  return FinitePoset::from_trusted_covers(p.keys(), std::move(flipped));
}

std::vector<std::size_t> height_profile(const FinitePoset& p) {
  std::vector<std::size_t> out;
  for (int h : p.heights()) {
    if (static_cast<std::size_t>(h) >= out.size()) out.resize(h + 1, 0);
    ++out[h];
  }
  return out;
}

}  // namespace polytree
