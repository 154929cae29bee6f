#include "polytree/planar_complex.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "detail.hpp"
#include "polytree/triangulation.hpp"

namespace polytree {

namespace {

void guard(int n, int hi, const char* what) {
  if (n < 3 || n > hi)
    throw std::out_of_range(std::string(what) + ": n must be in 3.." + std::to_string(hi) + ", got " +
                            std::to_string(n));
}

// Labelled trees on vertices 0..n-1 from Pruefer sequences.
std::vector<std::vector<std::vector<int>>> labelled_trees(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::vector<int>> adj(n);
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      --degree[leaf];
      --degree[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) (u < 0 ? u : w) = v;
    adj[u].push_back(w);
    adj[w].push_back(u);
    out.push_back(std::move(adj));

    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

// All rotation systems of one labelled tree; marks are vertex index + 1.
void embeddings(int n, const std::vector<std::vector<int>>& adj, std::vector<PlanarTree>& out) {
  std::vector<std::vector<int>> rot = adj;
  for (auto& r : rot) std::sort(r.begin() + 1, r.end());
  while (true) {
    std::vector<VertexSpec> specs(n);
    for (int v = 0; v < n; ++v) specs[v] = {v + 1, rot[v]};
    out.emplace_back(n, specs);
    int v = 0;
    // Odometer over the cyclic orders (first neighbour fixed).
    while (v < n && !std::next_permutation(rot[v].begin() + 1, rot[v].end())) ++v;
    if (v == n) break;
  }
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) fn(i, w);
    });
  for (auto& th : pool) th.join();
}

struct Coded {
  CanonicalCode code;
  PlanarTree tree;
};

void sort_by_code(std::vector<Coded>& v) {
  std::sort(v.begin(), v.end(), [](const Coded& a, const Coded& b) { return a.code < b.code; });
}

std::vector<PlanarTree> strip(std::vector<Coded>&& v) {
  std::vector<PlanarTree> out;
  out.reserve(v.size());
  for (auto& c : v) out.push_back(std::move(c.tree));
  return out;
}

}  // namespace

std::vector<PlanarTree> enumerate_planar_trees(int n, int jobs) {
  guard(n, kMaxEnumerateN, "enumerate_planar_trees");
  std::vector<PlanarTree> level;
  for (const auto& adj : labelled_trees(n)) embeddings(n, adj, level);

  std::vector<Coded> all;
  for (auto& t : level) all.push_back({detail::code_of(t), t});

  // Each tree with more vertices splits off from one with fewer.
  for (int v = n; v < 2 * n - 2; ++v) {
    std::vector<std::vector<Coded>> found(std::max(1, jobs));
    std::vector<std::unordered_set<CanonicalCode>> seen(std::max(1, jobs));
    parallel_for(level.size(), jobs, [&](std::size_t i, int w) {
      for (auto& e : single_expansions(level[i])) {
        auto code = detail::code_of(e);
        if (seen[w].insert(code).second) found[w].push_back({std::move(code), std::move(e)});
      }
    });
    std::unordered_set<CanonicalCode> merged;
    std::vector<Coded> next;
    for (auto& part : found)
      for (auto& c : part)
        if (merged.insert(c.code).second) next.push_back(std::move(c));
    sort_by_code(next);
    level.clear();
    for (auto& c : next) {
      level.push_back(c.tree);
      all.push_back(std::move(c));
    }
  }
  sort_by_code(all);
  return strip(std::move(all));
}

TreePoset tree_poset(std::vector<PlanarTree> trees) {
  std::unordered_map<CanonicalCode, int> slot;
  std::vector<std::string> keys;
  for (const auto& t : trees) {
    require_valid(t);
    auto code = detail::code_of(t);
    if (!slot.emplace(code, static_cast<int>(keys.size())).second)
      throw std::invalid_argument("tree_poset: repeated tree " + code.str());
    keys.push_back(code.str());
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto& t = trees[i];
    for (const auto& e : t.edges()) {
      if (!is_contractible(t, e)) continue;
      auto up = detail::contract_unchecked(t, Subforest({e})).tree;
      auto it = slot.find(detail::code_of(up));
      if (it != slot.end()) covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  auto poset = FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
  return {std::move(trees), std::move(poset)};
}

TreePoset build_pnr(int n, int jobs) {
  guard(n, kMaxPosetN, "build_pnr_poset");
  return tree_poset(enumerate_planar_trees(n, jobs));
}

FinitePoset build_pnr_poset(int n, int jobs) { return build_pnr(n, jobs).poset; }

std::vector<PlanarTree> lower_set_trees(const PlanarTree& t) {
  require_valid(t);
  std::unordered_set<CanonicalCode> seen{detail::code_of(t)};
  std::vector<Coded> out{{detail::code_of(t), t}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto& e : single_expansions(out[head].tree)) {
      auto code = detail::code_of(e);
      if (seen.insert(code).second) out.push_back({std::move(code), std::move(e)});
    }
  }
  sort_by_code(out);
  return strip(std::move(out));
}

std::vector<PlanarTree> upper_set_trees(const PlanarTree& t) {
  std::vector<Coded> out;
  std::unordered_set<CanonicalCode> seen;
  for (const auto& f : enumerate_subforests(t)) {
    auto up = detail::contract_unchecked(t, f).tree;
    auto code = detail::code_of(up);
    if (seen.insert(code).second) out.push_back({std::move(code), std::move(up)});
  }
  sort_by_code(out);
  return strip(std::move(out));
}

TreePoset lower_set_poset(const PlanarTree& t) { return tree_poset(lower_set_trees(t)); }
TreePoset upper_set_poset(const PlanarTree& t) { return tree_poset(upper_set_trees(t)); }

std::string Factor::name() const {
  return (kind == Kind::Associahedron ? "K" : "W") + std::to_string(index);
}

int Factor::dimension() const { return kind == Kind::Associahedron ? index - 2 : index - 1; }

std::vector<Factor> factors(const PlanarTree& t) {
  std::vector<Factor> out;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const int val = t.valence(v);
    if (!t.is_marked(v))
      out.push_back({Factor::Kind::Associahedron, val - 1, v});
    else if (val >= 2)
      out.push_back({Factor::Kind::Cyclohedron, val, v});
  }
  return out;
}

std::string factor_key(const PlanarTree& t) {
  std::vector<Factor> fs;
  for (const auto& f : factors(t))
    if (!f.trivial()) fs.push_back(f);
  if (fs.empty()) return "point";
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    return std::pair(a.kind, a.index) < std::pair(b.kind, b.index);
  });
  std::string key;
  for (std::size_t i = 0; i < fs.size(); ++i) key += (i ? "x" : "") + fs[i].name();
  return key;
}

FinitePoset factor_face_poset(const Factor& f) {
  return f.kind == Factor::Kind::Associahedron ? associahedron_face_poset(f.index)
                                               : cyclohedron_face_poset(f.index);
}

std::size_t CellCensus::total() const {
  std::size_t s = 0;
  for (const auto& [d, c] : by_dimension) s += c;
  return s;
}

CellCensus census_of(const std::vector<PlanarTree>& trees) {
  CellCensus c;
  for (const auto& t : trees) {
    ++c.by_dimension[cell_dimension(t)];
    ++c.by_factor_type[factor_key(t)];
  }
  return c;
}

CellCensus cell_census(int n, int jobs) {
  guard(n, kMaxPosetN, "cell_census");
  return census_of(enumerate_planar_trees(n, jobs));
}

LowerSetDecomposition decompose_lower_set(const PlanarTree& t) {
  require_valid(t);
  guard(t.n(), kMaxPosetN, "decompose_lower_set");
  LowerSetDecomposition d;
  d.factors = factors(t);
  d.lower = lower_set_poset(t).poset;
  std::vector<FinitePoset> models;
  for (const auto& f : d.factors) models.push_back(factor_face_poset(f));
  d.model = product(models);
  d.witness = is_isomorphic(d.lower, d.model);
  return d;
}

std::map<int, std::size_t> star_census(const PlanarTree& t) {
  require_valid(t);
  guard(t.n(), kMaxPosetN, "star_census");
  std::map<int, std::size_t> out;
  const auto self = detail::code_of(t);
  for (const auto& up : upper_set_trees(t))
    if (detail::code_of(up) != self) ++out[cell_dimension(up)];
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("flag count overflow");
  return out;
}

std::uint64_t top_count(const SimplicialComplexSummary& s) {
  return s.simplex_counts.empty() ? 0 : s.simplex_counts.back();
}

}  // namespace

BarycentricReport verify_barycentric(const PlanarTree& t) {
  require_valid(t);
  guard(t.n(), kMaxPosetN, "verify_barycentric");
  BarycentricReport r;
  r.subdivision = order_complex(lower_set_poset(t).poset);
  r.top_simplices = top_count(r.subdivision);

  // Multinomial over factor dimensions, built one binomial at a time.
  std::uint64_t flags = 1;
  int total_dim = 0;
  for (const auto& f : factors(t)) {
    flags = checked_mul(flags, top_count(order_complex(factor_face_poset(f))));
    const int d = f.dimension();
    for (int i = 1; i <= d; ++i) {
      flags = checked_mul(flags, static_cast<std::uint64_t>(total_dim + i));
      flags /= static_cast<std::uint64_t>(i);
    }
    total_dim += d;
  }
  r.product_flags = flags;
  r.agrees = r.top_simplices == r.product_flags;
  return r;
}

}  // namespace polytree
