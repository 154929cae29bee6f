#include "polytree/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace polytree {

namespace {

// Colours for the disjoint union of P and Q so classes are comparable.
std::vector<int> refined_colours(const FinitePoset& p, const FinitePoset& q) {
  const int np = static_cast<int>(p.size());
  const int total = np + static_cast<int>(q.size());
  auto poset_of = [&](int v) -> const FinitePoset& { return v < np ? p : q; };
  auto local = [&](int v) { return v < np ? v : v - np; };
  auto global = [&](int v, int i) { return v < np ? i : i + np; };

  const auto hp = p.heights(), hq = q.heights(), dp = p.depths(), dq = q.depths();
  std::map<std::vector<int>, int> ids;
  std::vector<int> colour(total);
  for (int v = 0; v < total; ++v) {
    const auto& P = poset_of(v);
    int i = local(v);
    std::vector<int> sig{v < np ? hp[i] : hq[i], v < np ? dp[i] : dq[i],
                         static_cast<int>(P.upper_covers(i).size()), static_cast<int>(P.lower_covers(i).size())};
    colour[v] = ids.try_emplace(sig, static_cast<int>(ids.size())).first->second;
  }

  std::size_t classes = ids.size();
  while (true) {
    std::map<std::vector<int>, int> next_ids;
    std::vector<int> next(total);
    for (int v = 0; v < total; ++v) {
      const auto& P = poset_of(v);
      int i = local(v);
      std::vector<int> ups, downs;
      for (int w : P.upper_covers(i)) ups.push_back(colour[global(v, w)]);
      for (int w : P.lower_covers(i)) downs.push_back(colour[global(v, w)]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      std::vector<int> sig{colour[v], -1};
      sig.insert(sig.end(), ups.begin(), ups.end());
      sig.push_back(-2);
      sig.insert(sig.end(), downs.begin(), downs.end());
      next[v] = next_ids.try_emplace(sig, static_cast<int>(next_ids.size())).first->second;
    }
    colour = std::move(next);
    if (next_ids.size() == classes) break;
    classes = next_ids.size();
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const FinitePoset& p, const FinitePoset& q, std::vector<int> pc, std::vector<int> qc)
      : p_(p), q_(q), pc_(std::move(pc)), qc_(std::move(qc)), map_(p.size(), -1), inverse_(q.size(), -1) {
    build_order();
  }

  bool run() { return extend(0); }
  PosetMap result() const { return map_; }

 private:
  // Next element: most already-placed cover neighbours, ties to the rarest colour.
  void build_order() {
    const int n = static_cast<int>(p_.size());
    std::map<int, int> freq;
    for (int c : pc_) ++freq[c];
    std::vector<int> placed_neighbours(n, 0);
    std::vector<char> used(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (best < 0 || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] && freq[pc_[v]] < freq[pc_[best]]))
          best = v;
      }
      used[best] = 1;
      order_.push_back(best);
      for (int w : p_.upper_covers(best)) ++placed_neighbours[w];
      for (int w : p_.lower_covers(best)) ++placed_neighbours[w];
    }
    candidates_.resize(*std::max_element(qc_.begin(), qc_.end()) + 1);
    for (int j = 0; j < static_cast<int>(q_.size()); ++j) candidates_[qc_[j]].push_back(j);
  }

  bool consistent(int i, int j) const {
    for (int w : p_.upper_covers(i))
      if (map_[w] >= 0 && !q_.covers_pair(j, map_[w])) return false;
    for (int w : p_.lower_covers(i))
      if (map_[w] >= 0 && !q_.covers_pair(map_[w], j)) return false;
    for (int w : q_.upper_covers(j))
      if (inverse_[w] >= 0 && !p_.covers_pair(i, inverse_[w])) return false;
    for (int w : q_.lower_covers(j))
      if (inverse_[w] >= 0 && !p_.covers_pair(inverse_[w], i)) return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int i = order_[depth];
    if (pc_[i] >= static_cast<int>(candidates_.size())) return false;
    for (int j : candidates_[pc_[i]]) {
      if (inverse_[j] >= 0 || !consistent(i, j)) continue;
      map_[i] = j;
      inverse_[j] = i;
      if (extend(depth + 1)) return true;
      map_[i] = -1;
      inverse_[j] = -1;
    }
    return false;
  }

  const FinitePoset& p_;
  const FinitePoset& q_;
  std::vector<int> pc_, qc_;
  PosetMap map_, inverse_;
  std::vector<int> order_;
  std::vector<std::vector<int>> candidates_;
};

}  // namespace

std::optional<PosetMap> is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (p.empty()) return PosetMap{};
  auto colours = refined_colours(p, q);
  const auto np = static_cast<std::ptrdiff_t>(p.size());
  std::vector<int> pc(colours.begin(), colours.begin() + np), qc(colours.begin() + np, colours.end());
  auto sp = pc, sq = qc;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return std::nullopt;

  Matcher m(p, q, std::move(pc), std::move(qc));
  if (!m.run()) return std::nullopt;
  return m.result();
}

bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const PosetMap& map) {
  if (p.size() != q.size() || map.size() != p.size() || p.covers().size() != q.covers().size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (int j : map) {
    if (j < 0 || j >= static_cast<int>(q.size()) || hit[j]) return false;
    hit[j] = 1;
  }
  // Equal cover counts plus injectivity on covers gives a bijection.
  for (auto [a, b] : p.covers())
    if (!q.covers_pair(map[a], map[b])) return false;
  return true;
}

}  // namespace polytree
