#include "verification/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polytree/canonical.hpp"
#include "polytree/contraction.hpp"
#include "polytree/hypertree.hpp"
#include "polytree/isomorphism.hpp"
#include "polytree/order_complex.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/reduced.hpp"
#include "polytree/triangulation.hpp"

namespace polytree::verify {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"verdict", c.passed ? "pass" : "fail"}});
  return {{"suite", suite}, {"n_max", n_max}, {"checks", std::move(list)}, {"overall", passed() ? "pass" : "fail"}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected << "  computed=" << c.computed
       << "\n";
  os << "OVERALL " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, suite " << suite
     << ", n_max " << n_max << ")\n";
  return os.str();
}

namespace {

void add(VerificationReport& r, std::string name, const std::string& expected, const std::string& computed) {
  r.checks.push_back({std::move(name), expected, computed, expected == computed});
}

template <class T>
std::string tuple_text(const std::vector<T>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

template <class K, class V>
std::string map_text(const std::map<K, V>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ",") << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

std::vector<std::size_t> dimension_counts(const CellCensus& c) {
  std::vector<std::size_t> out;
  for (const auto& [d, k] : c.by_dimension) out.push_back(k);
  return out;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::uint64_t binomial(int a, int b) {
  std::uint64_t c = 1;
  for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
  return c;
}

PlanarTree hexagonal_prism_tree() {
  // u:(1,2,3,6), 6:(u,4,5)
  std::vector<VertexSpec> vs{{kUnmarked, {1, 2, 3, 4}}, {1, {0}}, {2, {0}}, {3, {0}},
                             {6, {0, 5, 6}},          {4, {4}}, {5, {4}}};
  return PlanarTree(6, vs);
}

void guard(int n_max) {
  if (n_max < 3 || n_max > 6) throw std::out_of_range("n_max must be in 3..6");
}

}  // namespace

VerificationReport run_planar(int n_max, int jobs) {
  guard(n_max);
  VerificationReport r{"planar", n_max, {}};
  const std::map<int, std::size_t> counts{{3, 5}, {4, 62}, {5, 1254}, {6, 35304}};
  for (int n = 3; n <= n_max; ++n) {
    auto trees = enumerate_planar_trees(n, jobs);
    add(r, "pnr" + std::to_string(n) + "-count", std::to_string(counts.at(n)), std::to_string(trees.size()));
    const auto census = census_of(trees);
    if (n == 3) add(r, "pnr3-census", "(2,3)", tuple_text(dimension_counts(census)));
    if (n == 4) {
      add(r, "pnr4-census", "(12,30,20)", tuple_text(dimension_counts(census)));
      std::map<std::string, std::size_t> faces;
      for (const auto& [k, v] : census.by_factor_type)
        if (k == "W3" || k == "W2xW2") faces[k] = v;
      add(r, "pnr4-2cells", "{W2xW2:12,W3:8}", map_text(faces));
    }
    if (n <= 4) {
      // Link of every 0-cell.
      const std::map<int, std::size_t> link = n == 3 ? std::map<int, std::size_t>{{1, 3}}
                                                     : std::map<int, std::size_t>{{1, 5}, {2, 8}};
      std::size_t good = 0, total = 0;
      for (const auto& t : trees)
        if (cell_dimension(t) == 0) {
          ++total;
          good += star_census(t) == link;
        }
      add(r, "pnr" + std::to_string(n) + "-vertex-links", ratio(total, total), ratio(good, total));
    }
    if (n == 3) {
      auto p = build_pnr_poset(3, jobs);
      std::size_t below = 0;
      for (int a : p.minimal_elements())
        for (int b : p.maximal_elements()) below += p.leq(a, b);
      add(r, "pnr3-theta", "2 minima x 3 maxima all comparable",
          std::to_string(p.minimal_elements().size()) + " minima x " + std::to_string(p.maximal_elements().size()) +
              " maxima " + (below == 6 ? "all comparable" : "not all comparable"));
    }
    if (n == 4) {
      auto pnr = build_pnr(4, jobs);
      const auto up = pnr.poset.strict_up_sets();
      std::size_t good = 0, total = 0;
      for (int a = 0; a < static_cast<int>(pnr.trees.size()); ++a)
        for (int b = 0; b < static_cast<int>(pnr.trees.size()); ++b) {
          if (a != b && !up[a].test(b)) continue;
          ++total;
          auto f = contraction_subforest(pnr.trees[a], pnr.trees[b]);
          good += f && is_isomorphic(interval(pnr.poset, a, b), boolean_lattice(static_cast<int>(f->size())));
        }
      add(r, "pnr4-boolean-intervals", ratio(total, total), ratio(good, total));
    }
    if (n <= 5) {
      std::size_t decomposed = 0, euler = 0, top_ok = 0, top_total = 0;
      int top_dim = 0;
      for (const auto& t : trees) {
        const auto d = decompose_lower_set(t);
        decomposed += d.witness && is_isomorphism(d.lower, d.model, *d.witness);
        euler += euler_characteristic(order_complex(d.lower)) == 1;
        top_dim = std::max(top_dim, cell_dimension(t));
      }
      for (const auto& t : trees)
        if (cell_dimension(t) == top_dim) {
          ++top_total;
          top_ok += factor_key(t).find('K') == std::string::npos;
        }
      const auto tag = std::to_string(n);
      add(r, "pnr" + tag + "-lower-set-products", ratio(trees.size(), trees.size()), ratio(decomposed, trees.size()));
      add(r, "pnr" + tag + "-lower-set-euler", ratio(trees.size(), trees.size()), ratio(euler, trees.size()));
      add(r, "pnr" + tag + "-top-dimension", std::to_string(n - 2), std::to_string(top_dim));
      add(r, "pnr" + tag + "-top-cells-cyclohedra", ratio(top_total, top_total), ratio(top_ok, top_total));
    }
  }
  const auto prism = verify_barycentric(hexagonal_prism_tree());
  add(r, "hexprism-72", "72", std::to_string(prism.top_simplices));
  add(r, "hexprism-flags", std::to_string(prism.product_flags), std::to_string(prism.top_simplices));
  add(r, "hexprism-factors", "K3xW3", factor_key(hexagonal_prism_tree()));
  return r;
}

VerificationReport run_polytopes(int n_max) {
  guard(n_max);
  VerificationReport r{"polytopes", n_max, {}};
  for (int m = 3; m <= n_max; ++m) {
    auto p = associahedron_face_poset(m);
    add(r, "K" + std::to_string(m) + "-vertices=" + std::to_string(catalan(m - 1)), std::to_string(catalan(m - 1)),
        std::to_string(p.minimal_elements().size()));
    if (m == 4) add(r, "K4-pentagon-faces", "11", std::to_string(p.size()));
    if (m == 5) add(r, "K5-facets", "{4:3,5:6}", map_text(facet_vertex_census(p)));

    // Dual trees: faces of K_m against the trees below the unmarked (m+1)-star.
    if (m <= 5) {
      const auto tris = enumerate_partial_triangulations(m + 1);
      const auto lower = lower_set_poset(make_ustar(m + 1)).poset;
      PosetMap map(p.size(), -1);
      std::size_t round_trips = 0;
      for (const auto& pt : tris) {
        const auto t = dual_tree(pt);
        round_trips += from_dual_tree(t) == pt;
        if (auto j = lower.find(canonical_code(t).str())) map[p.index_of(pt.key())] = *j;
      }
      add(r, "K" + std::to_string(m) + "-dual-trees", "isomorphism",
          is_isomorphism(p, lower, map) ? "isomorphism" : "not an isomorphism");
      add(r, "K" + std::to_string(m) + "-dual-round-trip", ratio(tris.size(), tris.size()),
          ratio(round_trips, tris.size()));
    }
  }
  for (int m = 2; m <= n_max; ++m) {
    auto w = cyclohedron_face_poset(m);
    add(r, "W" + std::to_string(m) + "-vertices=" + std::to_string(binomial(2 * m - 2, m - 1)),
        std::to_string(binomial(2 * m - 2, m - 1)), std::to_string(w.minimal_elements().size()));
    if (m == 3) add(r, "W3-hexagon-faces", "13", std::to_string(w.size()));
    if (m == 4) add(r, "W4-facets", "{4:4,5:4,6:4}", map_text(facet_vertex_census(w)));
    if (m <= 5) {
      const auto lower = lower_set_poset(make_mstar(m)).poset;
      PosetMap map(w.size(), -1);
      for (const auto& pt : enumerate_symmetric_triangulations(m))
        if (auto j = lower.find(canonical_code(sym_quotient(dual_tree(pt))).str())) map[w.index_of(pt.key())] = *j;
      add(r, "W" + std::to_string(m) + "-sym-quotient", "isomorphism",
          is_isomorphism(w, lower, map) ? "isomorphism" : "not an isomorphism");
    }
  }
  return r;
}

VerificationReport run_reduced(int n_max) {
  guard(n_max);
  VerificationReport r{"reduced", n_max, {}};
  const std::map<int, std::size_t> ncht_counts{{3, 4}, {4, 21}, {5, 126}, {6, 818}};
  for (int n = 3; n <= n_max; ++n)
    add(r, "ncht" + std::to_string(n) + "-count", std::to_string(ncht_counts.at(n)),
        std::to_string(enumerate_ncht(n).size()));

  for (int k = 2; k + 1 <= n_max && k <= 5; ++k) {
    const auto l = lower_class_set(k);
    const std::string name = k == 3 ? "lower-mstar-bool" : "lower-mstar" + std::to_string(k) + "-bool";
    const bool ok = l.witness && is_isomorphism(l.classes.poset, l.model, *l.witness);
    add(r, name, std::to_string((1u << k) - 1) + " classes, isomorphic",
        std::to_string(l.classes.classes.size()) + " classes, " + (ok ? "isomorphic" : "not isomorphic"));
    add(r, name + "-regions", "isomorphism", l.region_map_is_isomorphism ? "isomorphism" : "not an isomorphism");
  }

  for (int n = 3; n <= std::min(n_max, 5); ++n) {
    const auto up = upper_class_poset(class_of(make_ustar(n)));
    const auto model = dual(ncht_poset(n));
    const auto w = is_isomorphic(up.poset, model);
    std::size_t round_trips = 0;
    for (const auto& c : up.classes) round_trips += hypertree_to_class(class_to_hypertree(c)) == c;
    add(r, "upper-ustar" + std::to_string(n) + "-ncht",
        std::to_string(ncht_counts.at(n)) + " classes, isomorphic",
        std::to_string(up.classes.size()) + " classes, " +
            (w && is_isomorphism(up.poset, model, *w) ? "isomorphic" : "not isomorphic"));
    add(r, "upper-ustar" + std::to_string(n) + "-hypertree-round-trip", ratio(up.classes.size(), up.classes.size()),
        ratio(round_trips, up.classes.size()));
  }

  for (int n = 3; n <= std::min(n_max, 5); ++n) {
    std::size_t good = 0, total = 0;
    for (const auto& t : enumerate_planar_trees(n)) {
      if (!is_reduced(t)) continue;
      ++total;
      good += verify_reduced_products(ReducedTree(t)).passed();
    }
    add(r, "reduced-products-n" + std::to_string(n), ratio(total, total), ratio(good, total));
  }

  for (int n = 3; n <= std::min(n_max, 4); ++n) {
    std::string computed;
    try {
      const auto red = reduced_poset(n);
      computed = "partial order on " + std::to_string(red.classes.size()) + " classes";
    } catch (const std::invalid_argument& e) {
      computed = e.what();
    }
    add(r, "red" + std::to_string(n) + "-partial-order", n == 3 ? "partial order on 5 classes"
                                                               : "partial order on 50 classes",
        computed);
  }
  return r;
}

VerificationReport run_suite(const std::string& suite, int n_max, int jobs) {
  if (suite == "planar") return run_planar(n_max, jobs);
  if (suite == "polytopes") return run_polytopes(n_max);
  if (suite == "reduced") return run_reduced(n_max);
  if (suite == "all") {
    VerificationReport r{"all", n_max, {}};
    for (auto part : {run_planar(n_max, jobs), run_polytopes(n_max), run_reduced(n_max)})
      r.checks.insert(r.checks.end(), part.checks.begin(), part.checks.end());
    return r;
  }
  throw std::invalid_argument("unknown suite '" + suite + "' (expected planar, polytopes, reduced or all)");
}

}  // namespace polytree::verify
