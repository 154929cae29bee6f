#include "polytree/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail.hpp"

namespace polytree {

bool is_diagonal(int ngon, const Diagonal& d) {
  if (d.a < 1 || d.b > ngon || d.a == d.b) return false;
  if (d.b - d.a < 2) return false;
  return !(d.a == 1 && d.b == ngon);
}

bool diagonals_cross(int ngon, const Diagonal& d1, const Diagonal& d2) {
  if (!is_diagonal(ngon, d1) || !is_diagonal(ngon, d2))
    throw std::invalid_argument("diagonals_cross: chord is not a diagonal of the polygon");
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

PartialTriangulation::PartialTriangulation(int ngon, std::vector<Diagonal> diagonals)
    : ngon_(ngon), diagonals_(std::move(diagonals)) {
  if (ngon < 3) throw std::invalid_argument("polygon needs at least 3 corners");
  std::sort(diagonals_.begin(), diagonals_.end());
  diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
  for (const auto& d : diagonals_)
    if (!is_diagonal(ngon, d))
      throw std::invalid_argument("(" + std::to_string(d.a) + "," + std::to_string(d.b) + ") is not a diagonal");
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (diagonals_cross(ngon, diagonals_[i], diagonals_[j]))
        throw std::invalid_argument("partial triangulation has crossing diagonals");
}

bool PartialTriangulation::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::string PartialTriangulation::key() const {
  std::string s = "{";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(diagonals_[i].a) + "-" + std::to_string(diagonals_[i].b);
  }
  return s + "}";
}

bool PartialTriangulation::leq(const PartialTriangulation& other) const {
  return ngon_ == other.ngon_ &&
         std::includes(diagonals_.begin(), diagonals_.end(), other.diagonals_.begin(), other.diagonals_.end());
}

namespace {

std::vector<Diagonal> all_diagonals(int ngon) {
  std::vector<Diagonal> out;
  for (int a = 1; a <= ngon; ++a)
    for (int b = a + 2; b <= ngon; ++b)
      if (is_diagonal(ngon, {a, b})) out.emplace_back(a, b);
  return out;
}

// Backtracking over groups of diagonals that must be taken together.
void grow(int ngon, const std::vector<std::vector<Diagonal>>& groups, std::size_t next, std::vector<Diagonal>& chosen,
          std::vector<PartialTriangulation>& out) {
  out.emplace_back(ngon, chosen);
  for (std::size_t g = next; g < groups.size(); ++g) {
    bool ok = true;
    for (const auto& d : groups[g])
      for (const auto& c : chosen)
        if (diagonals_cross(ngon, d, c)) ok = false;
    if (groups[g].size() == 2 && diagonals_cross(ngon, groups[g][0], groups[g][1])) ok = false;
    if (!ok) continue;
    chosen.insert(chosen.end(), groups[g].begin(), groups[g].end());
    grow(ngon, groups, g + 1, chosen, out);
    chosen.resize(chosen.size() - groups[g].size());
  }
}

void sort_triangulations(std::vector<PartialTriangulation>& v) {
  std::sort(v.begin(), v.end(), [](const PartialTriangulation& x, const PartialTriangulation& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.diagonals() < y.diagonals();
  });
}

// Covers of reverse containment: drop one group.
FinitePoset triangulation_poset(const std::vector<PartialTriangulation>& all, std::size_t max_group) {
  std::map<std::string, int> slot;
  std::vector<std::string> keys;
  for (const auto& pt : all) {
    slot.emplace(pt.key(), static_cast<int>(keys.size()));
    keys.push_back(pt.key());
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& ds = all[i].diagonals();
    for (const auto& d : ds) {
      std::vector<Diagonal> rest;
      for (const auto& e : ds)
        if (e != d) rest.push_back(e);
      if (max_group == 2) {
        // Remove the whole orbit of d.
        const int half = all[i].ngon() / 2;
        auto shift = [&](int k) { return (k - 1 + half) % all[i].ngon() + 1; };
        Diagonal partner(shift(d.a), shift(d.b));
        if (partner < d) continue;
        std::erase(rest, partner);
      }
      auto it = slot.find(PartialTriangulation(all[i].ngon(), rest).key());
      if (it == slot.end()) throw std::logic_error("triangulation poset: missing face");
      covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return FinitePoset::from_trusted_covers(std::move(keys), std::move(covers));
}

}  // namespace

std::vector<PartialTriangulation> enumerate_partial_triangulations(int ngon) {
  if (ngon < 3) throw std::invalid_argument("polygon needs at least 3 corners");
  std::vector<std::vector<Diagonal>> groups;
  for (const auto& d : all_diagonals(ngon)) groups.push_back({d});
  std::vector<Diagonal> chosen;
  std::vector<PartialTriangulation> out;
  grow(ngon, groups, 0, chosen, out);
  sort_triangulations(out);
  return out;
}

FinitePoset tri_poset(int ngon) { return triangulation_poset(enumerate_partial_triangulations(ngon), 1); }

PartialTriangulation half_turn(const PartialTriangulation& pt) {
  const int ngon = pt.ngon();
  if (ngon % 2 != 0) throw std::invalid_argument("half_turn needs an even polygon");
  std::vector<Diagonal> out;
  for (const auto& d : pt.diagonals())
    out.emplace_back((d.a - 1 + ngon / 2) % ngon + 1, (d.b - 1 + ngon / 2) % ngon + 1);
  return {ngon, std::move(out)};
}

bool is_centrally_symmetric(const PartialTriangulation& pt) { return pt.ngon() % 2 == 0 && half_turn(pt) == pt; }

std::vector<PartialTriangulation> enumerate_symmetric_triangulations(int half) {
  if (half < 2) throw std::invalid_argument("symmetric triangulations need half >= 2");
  const int ngon = 2 * half;
  std::vector<std::vector<Diagonal>> groups;
  for (const auto& d : all_diagonals(ngon)) {
    Diagonal partner((d.a - 1 + half) % ngon + 1, (d.b - 1 + half) % ngon + 1);
    if (partner < d) continue;
    if (partner == d)
      groups.push_back({d});
    else
      groups.push_back({d, partner});
  }
  std::vector<Diagonal> chosen;
  std::vector<PartialTriangulation> out;
  grow(ngon, groups, 0, chosen, out);
  sort_triangulations(out);
  return out;
}

FinitePoset sym_tri_poset(int half) { return triangulation_poset(enumerate_symmetric_triangulations(half), 2); }

FinitePoset associahedron_face_poset(int n) {
  if (n < 2) throw std::invalid_argument("associahedron index must be >= 2");
  return tri_poset(n + 1);
}

FinitePoset cyclohedron_face_poset(int n) {
  if (n < 2) throw std::invalid_argument("cyclohedron index must be >= 2");
  return sym_tri_poset(n);
}

PlanarTree dual_tree(const PartialTriangulation& pt) {
  const int m = pt.ngon();
  // Regions as ascending corner lists; split one by one.
  std::vector<std::vector<int>> regions(1);
  for (int c = 1; c <= m; ++c) regions[0].push_back(c);
  for (const auto& d : pt.diagonals()) {
    for (std::size_t ri = 0; ri < regions.size(); ++ri) {
      auto& r = regions[ri];
      auto ia = std::find(r.begin(), r.end(), d.a);
      auto ib = std::find(r.begin(), r.end(), d.b);
      if (ia == r.end() || ib == r.end()) continue;
      std::vector<int> inner(ia, ib + 1);
      std::vector<int> outer(r.begin(), ia + 1);
      outer.insert(outer.end(), ib, r.end());
      r = std::move(outer);
      regions.push_back(std::move(inner));  // invalidates r
      break;
    }
  }

  const int nreg = static_cast<int>(regions.size());
  // Vertices: regions 0..nreg-1, then leaf for side k at nreg+k-1.
  std::map<Diagonal, std::vector<int>> owners;
  for (int r = 0; r < nreg; ++r) {
    const auto& cs = regions[r];
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int x = cs[i], y = cs[(i + 1) % cs.size()];
      if (pt.contains(Diagonal(x, y))) owners[Diagonal(x, y)].push_back(r);
    }
  }
  std::vector<VertexSpec> specs(nreg + m);
  for (int k = 1; k <= m; ++k) specs[nreg + k - 1].label = k;
  for (int r = 0; r < nreg; ++r) {
    const auto& cs = regions[r];
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int x = cs[i], y = cs[(i + 1) % cs.size()];
      Diagonal d(x, y);
      if (pt.contains(d)) {
        const auto& two = owners.at(d);
        specs[r].rotation.push_back(two[0] == r ? two[1] : two[0]);
      } else {
        // A polygon side: x,x+1 or m,1.
        int side = (y == x + 1) ? x : m;
        specs[r].rotation.push_back(nreg + side - 1);
        specs[nreg + side - 1].rotation = {r};
      }
    }
  }
  return PlanarTree(m, specs);
}

PartialTriangulation from_dual_tree(const PlanarTree& t) {
  require_valid(t);
  const int m = t.n();
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (t.is_marked(v) && !t.is_leaf(v))
      throw std::invalid_argument("from_dual_tree: marked vertex " + std::to_string(t.label(v)) + " is not a leaf");

  std::vector<Diagonal> diagonals;
  for (const auto& e : t.edges()) {
    if (t.is_marked(e.a) || t.is_marked(e.b)) continue;
    // Marks beyond e.b, seen from e.a.
    std::vector<char> side(m + 1, 0);
    std::vector<std::pair<VertexId, VertexId>> stack{{e.b, e.a}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (t.is_marked(v)) side[t.label(v)] = 1;
      for (VertexId w : t.rotation(v))
        if (w != from) stack.emplace_back(w, v);
    }
    int first = 0, last = 0, starts = 0;
    for (int k = 1; k <= m; ++k) {
      int prev = k == 1 ? m : k - 1;
      int next = k == m ? 1 : k + 1;
      if (side[k] && !side[prev]) first = k, ++starts;
      if (side[k] && !side[next]) last = k;
    }
    if (starts != 1) throw std::invalid_argument("from_dual_tree: leaves are not in polygon order");
    diagonals.emplace_back(first, last == m ? 1 : last + 1);
  }
  PartialTriangulation pt;
  try {
    pt = PartialTriangulation(m, diagonals);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("from_dual_tree: tree is not dual to a partial triangulation");
  }
  if (detail::code_of(dual_tree(pt)) != detail::code_of(t))
    throw std::invalid_argument("from_dual_tree: tree is not dual to a partial triangulation");
  return pt;
}

namespace {

PlanarTree relabelled(const PlanarTree& t, int shift) {
  auto specs = t.specs();
  const int n = t.n();
  for (auto& s : specs)
    if (s.label != kUnmarked) s.label = (s.label - 1 + shift) % n + 1;
  return PlanarTree(n, specs);
}

}  // namespace

bool is_centrally_symmetric(const PlanarTree& t) {
  require_valid(t);
  if (t.n() % 2 != 0) return false;
  return detail::code_of(relabelled(t, t.n() / 2)) == detail::code_of(t);
}

PlanarTree sym_quotient(const PlanarTree& t) {
  from_dual_tree(t);
  if (!is_centrally_symmetric(t)) throw std::invalid_argument("sym_quotient: tree is not centrally symmetric");
  const int half = t.n() / 2;
  const auto path = geodesic(t, t.vertex_of(1), t.vertex_of(1 + half));
  const int len = static_cast<int>(path.size()) - 1;

  // Kept part: BFS from `root` avoiding `cut` neighbours; root rotation given.
  std::vector<VertexSpec> specs;
  std::vector<int> id(t.vertex_count(), -1);
  auto relabel = [&](int l) { return l == kUnmarked ? l : (l > half ? l - half : l); };
  auto copy_branch = [&](VertexId start, VertexId parent) {
    std::vector<std::pair<VertexId, VertexId>> stack{{start, parent}};
    std::vector<VertexId> seen;
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      id[v] = static_cast<int>(specs.size());
      specs.push_back({relabel(t.label(v)), {}});
      seen.push_back(v);
      for (VertexId w : t.rotation(v))
        if (w != from) stack.emplace_back(w, v);
    }
    return seen;
  };

  VertexId root;
  std::vector<VertexId> kept;
  std::vector<VertexId> members;
  if (len % 2 == 0) {
    root = path[len / 2];
    auto rot = t.rotation(root);
    const int deg = static_cast<int>(rot.size());
    const int p = detail::rotation_index(t, root, path[len / 2 - 1]);
    id[root] = 0;
    specs.push_back({half + 1, {}});
    members.push_back(root);
    for (int i = 0; i < deg / 2; ++i) kept.push_back(rot[(p + i) % deg]);
    for (VertexId w : kept) {
      auto part = copy_branch(w, root);
      members.insert(members.end(), part.begin(), part.end());
    }
    for (VertexId w : kept) specs[0].rotation.push_back(id[w]);
  } else {
    root = path[len / 2];
    const VertexId cut = path[len / 2 + 1];
    members = copy_branch(root, cut);
    const int fresh = static_cast<int>(specs.size());
    specs.push_back({half + 1, {id[root]}});
    // Fill rotations below, swapping the cut neighbour for the fresh leaf.
    for (VertexId v : members) {
      for (VertexId w : t.rotation(v)) specs[id[v]].rotation.push_back(w == cut && v == root ? fresh : id[w]);
    }
    return PlanarTree(half + 1, specs);
  }
  for (VertexId v : members) {
    if (v == root) continue;
    for (VertexId w : t.rotation(v)) specs[id[v]].rotation.push_back(id[w]);
  }
  return PlanarTree(half + 1, specs);
}

std::map<std::size_t, std::size_t> facet_vertex_census(const FinitePoset& p) {
  auto top = p.maximal_elements();
  if (top.size() != 1) throw std::invalid_argument("facet_vertex_census: poset needs a unique maximum");
  std::map<std::size_t, std::size_t> census;
  for (int f : p.lower_covers(top[0])) ++census[lower_set(p, f).minimal_elements().size()];
  return census;
}

nlohmann::json triangulation_to_json(const PartialTriangulation& pt) {
  nlohmann::json ds = nlohmann::json::array();
  for (const auto& d : pt.diagonals()) ds.push_back({d.a, d.b});
  return {{"ngon", pt.ngon()}, {"diagonals", std::move(ds)}};
}

PartialTriangulation triangulation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ngon") || !j.contains("diagonals") || !j.at("ngon").is_number_integer() ||
      !j.at("diagonals").is_array())
    throw std::invalid_argument("triangulation json needs integer \"ngon\" and array \"diagonals\"");
  std::vector<Diagonal> ds;
  for (const auto& d : j.at("diagonals")) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
      throw std::invalid_argument("triangulation json: diagonal must be a pair of integers");
    ds.emplace_back(d[0].get<int>(), d[1].get<int>());
  }
  return {j.at("ngon").get<int>(), std::move(ds)};
}

}  // namespace polytree
