#include "polytree/reduced.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "detail.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/tree_io.hpp"

namespace polytree {

namespace {

bool unmarked_edge(const PlanarTree& t, const Edge& e) { return !t.is_marked(e.a) && !t.is_marked(e.b); }

Subforest unmarked_edges(const PlanarTree& t, std::span<const Edge> edges) {
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (unmarked_edge(t, e)) out.push_back(e);
  return Subforest(std::move(out));
}

int unmarked_edge_count(const PlanarTree& t) {
  int c = 0;
  for (const auto& e : t.edges()) c += unmarked_edge(t, e);
  return c;
}

}  // namespace

bool is_reduced(const PlanarTree& t) {
  for (const auto& e : t.edges())
    if (unmarked_edge(t, e)) return false;
  return true;
}

ReducedTree::ReducedTree(PlanarTree t) : tree_(std::move(t)) {
  require_valid(tree_);
  if (!is_reduced(tree_)) throw std::invalid_argument("tree has an edge between unmarked vertices");
}

ReducedTree reduce(const PlanarTree& t) {
  require_valid(t);
  return ReducedTree(detail::contract_unchecked(t, unmarked_edges(t, t.edges())).tree);
}

namespace {

// Marks per component of F(t1, t2), or nullopt when t1 is not below t2.
std::optional<std::vector<int>> component_marks(const PlanarTree& t1, const PlanarTree& t2) {
  auto f = contraction_subforest(t1, t2);
  if (!f) return std::nullopt;
  std::vector<int> marks;
  for (const auto& comp : subforest_components(t1, *f)) marks.push_back(marked_count(t1, comp));
  return marks;
}

}  // namespace

bool leq_m(const PlanarTree& t1, const PlanarTree& t2) {
  auto marks = component_marks(t1, t2);
  return marks && std::all_of(marks->begin(), marks->end(), [](int m) { return m == 1; });
}

bool leq_u(const PlanarTree& t1, const PlanarTree& t2) {
  auto marks = component_marks(t1, t2);
  return marks && std::all_of(marks->begin(), marks->end(), [](int m) { return m == 0; });
}

bool leq_m_edgewise(const PlanarTree& t1, const PlanarTree& t2) {
  auto f = contraction_subforest(t1, t2);
  if (!f) return false;
  return std::all_of(f->edges().begin(), f->edges().end(),
                     [&](const Edge& e) { return t1.is_marked(e.a) != t1.is_marked(e.b); });
}

PlanarTree um_factor(const PlanarTree& t1, const PlanarTree& t2) {
  auto f = contraction_subforest(t1, t2);
  if (!f) throw std::invalid_argument("um_factor: first tree is not below the second");
  return detail::contract_unchecked(t1, unmarked_edges(t1, f->edges())).tree;
}

PlanarTree um_meet(const PlanarTree& t_u, const PlanarTree& t_m, const PlanarTree& t) {
  if (!leq_u(t_u, t)) throw std::invalid_argument("um_meet: first tree must split only unmarked vertices of t");
  if (!leq_m(t_m, t)) throw std::invalid_argument("um_meet: second tree must split only marked vertices of t");
  // The two splittings touch disjoint vertices of t, so the meet has all of
  // both sets of new vertices.
  const int want = t_u.vertex_count() + t_m.vertex_count() - t.vertex_count();
  std::optional<PlanarTree> found;
  for (auto& r : lower_set_trees(t_u)) {
    if (r.vertex_count() != want || !leq_m(r, t_u) || !leq_u(r, t_m)) continue;
    if (found) throw std::logic_error("um_meet: meet is not unique");
    found = std::move(r);
  }
  if (!found) throw std::logic_error("um_meet: no common lower bound found");
  return *found;
}

ReducedClass::ReducedClass(ReducedTree representative, std::vector<PlanarTree> members)
    : rep_(std::move(representative)), members_(std::move(members)) {
  std::vector<std::pair<CanonicalCode, std::size_t>> keyed;
  for (std::size_t i = 0; i < members_.size(); ++i) keyed.emplace_back(canonical_code(members_[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<PlanarTree> sorted;
  for (const auto& [code, i] : keyed) {
    if (!codes_.empty() && codes_.back() == code) throw std::invalid_argument("reduced class: repeated member");
    codes_.push_back(code);
    sorted.push_back(members_[i]);
  }
  members_ = std::move(sorted);
  key_ = detail::code_of(rep_.tree()).str();
  if (!contains(CanonicalCode(key_))) throw std::invalid_argument("reduced class must contain its representative");
}

bool ReducedClass::contains(const CanonicalCode& code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

ReducedClass class_of(const PlanarTree& t) {
  require_valid(t);
  if (t.n() > kMaxReducedN)
    throw std::out_of_range("class_of: n must be at most " + std::to_string(kMaxReducedN));
  ReducedTree rep = reduce(t);
  std::unordered_set<CanonicalCode> seen{detail::code_of(rep.tree())};
  std::vector<PlanarTree> members{rep.tree()};
  for (std::size_t head = 0; head < members.size(); ++head) {
    const PlanarTree cur = members[head];
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      if (cur.is_marked(v)) continue;
      for (auto& e : expand_vertex(cur, v))
        if (seen.insert(detail::code_of(e)).second) members.push_back(std::move(e));
    }
  }
  return ReducedClass(std::move(rep), std::move(members));
}

namespace {

std::unordered_set<CanonicalCode> upper_codes(const ReducedClass& c) {
  std::unordered_set<CanonicalCode> out;
  for (const auto& m : c.members())
    for (const auto& up : upper_set_trees(m)) out.insert(detail::code_of(up));
  return out;
}

bool reaches(const std::unordered_set<CanonicalCode>& above, const ReducedClass& c2) {
  return std::any_of(c2.member_codes().begin(), c2.member_codes().end(),
                     [&](const CanonicalCode& code) { return above.count(code) > 0; });
}

// Distinct classes of a tree collection, sorted by key.
std::vector<ReducedClass> classes_of(const std::vector<PlanarTree>& trees) {
  std::map<std::string, PlanarTree> reps;
  for (const auto& t : trees) {
    auto r = reduce(t);
    reps.try_emplace(detail::code_of(r.tree()).str(), r.tree());
  }
  std::vector<ReducedClass> out;
  for (const auto& [key, rep] : reps) out.push_back(class_of(rep));
  return out;
}

}  // namespace

bool red_leq(const ReducedClass& c1, const ReducedClass& c2) {
  if (c1.n() != c2.n()) throw std::invalid_argument("red_leq: classes have different n");
  return reaches(upper_codes(c1), c2);
}

std::string to_string(CoverMove m) {
  switch (m) {
    case CoverMove::Contraction:
      return "contraction";
    case CoverMove::Slide:
      return "slide";
    case CoverMove::Split:
      return "split";
  }
  return "unknown";
}

CoverMove classify_cover_move(const ReducedClass& c1, const ReducedClass& c2) {
  if (c1 == c2) throw std::invalid_argument("classify_cover_move: classes are equal");
  const auto above = upper_codes(c1);
  if (!reaches(above, c2)) throw std::invalid_argument("classify_cover_move: first class is not below the second");
  std::vector<PlanarTree> above_trees;
  for (const auto& m : c1.members())
    for (auto& up : upper_set_trees(m)) above_trees.push_back(std::move(up));
  for (const auto& mid : classes_of(above_trees))
    if (mid != c1 && mid != c2 && red_leq(mid, c2))
      throw std::invalid_argument("classify_cover_move: classes are not a cover (" + mid.key() + " lies between)");

  if (leq(c1.representative().tree(), c2.representative().tree())) return CoverMove::Contraction;

  // First splitting (by vertex, then code) of a marked vertex of t2 landing in c1.
  auto split_into_c1 = [&](const PlanarTree& t2) -> std::optional<PlanarTree> {
    for (VertexId v = 0; v < t2.vertex_count(); ++v) {
      if (!t2.is_marked(v)) continue;
      for (auto& e : expand_vertex(t2, v))
        if (detail::code_of(reduce(e).tree()).str() == c1.key()) return std::move(e);
    }
    return std::nullopt;
  };
  struct Witness {
    int uu_edges;
    CanonicalCode code;
    PlanarTree split;
  };
  std::optional<Witness> best;
  for (std::size_t i = 0; i < c2.members().size(); ++i) {
    const int uu = unmarked_edge_count(c2.members()[i]);
    const auto& code = c2.member_codes()[i];
    if (best && std::pair(best->uu_edges, best->code) <= std::pair(uu, code)) continue;
    if (auto e = split_into_c1(c2.members()[i])) best = Witness{uu, code, std::move(*e)};
  }
  if (!best) throw std::logic_error("classify_cover_move: no splitting of a marked vertex reaches the lower class");

  const PlanarTree& s = best->split;
  const VertexId fresh = s.vertex_count() - 1;
  const VertexId other = s.rotation(fresh)[0];
  const VertexId unmarked_end = s.is_marked(fresh) ? other : fresh;
  int unmarked_neighbours = 0;
  for (VertexId w : s.rotation(unmarked_end)) unmarked_neighbours += !s.is_marked(w);
  if (unmarked_neighbours == 0) throw std::logic_error("classify_cover_move: witness edge has no unmarked neighbour");
  return unmarked_neighbours == 1 ? CoverMove::Slide : CoverMove::Split;
}

ClassPoset class_poset(std::vector<ReducedClass> classes) {
  std::vector<std::unordered_set<CanonicalCode>> above;
  std::vector<std::string> keys;
  for (const auto& c : classes) {
    above.push_back(upper_codes(c));
    keys.push_back(c.key());
  }
  auto poset = from_leq(std::move(keys), [&](int a, int b) { return reaches(above[a], classes[b]); });
  return {std::move(classes), std::move(poset)};
}

ClassPoset reduced_poset(int n) {
  if (n < 3 || n > 5) throw std::out_of_range("reduced_poset: n must be in 3..5");
  return class_poset(classes_of(enumerate_planar_trees(n)));
}

ClassPoset lower_class_poset(const ReducedClass& c) {
  std::vector<PlanarTree> below;
  for (const auto& m : c.members())
    for (auto& t : lower_set_trees(m)) below.push_back(std::move(t));
  return class_poset(classes_of(below));
}

ClassPoset upper_class_poset(const ReducedClass& c) {
  std::vector<PlanarTree> above;
  for (const auto& m : c.members())
    for (auto& t : upper_set_trees(m)) above.push_back(std::move(t));
  return class_poset(classes_of(above));
}

namespace {

// Leaves i whose boundary stretch to the next leaf in 1..k passes the centre mark k+1.
std::string region_subset(const PlanarTree& t, int k) {
  std::string key = "{";
  bool first = true;
  for (int i = 1; i <= k; ++i) {
    const auto walk = boundary_walk(t, t.vertex_of(i));
    bool inside = false;
    for (std::size_t j = 1; j < walk.size(); ++j) {
      const int l = t.label(walk[j]);
      if (l >= 1 && l <= k) break;
      if (l == k + 1) inside = true;
    }
    if (inside) {
      key += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  }
  return key + "}";
}

}  // namespace

LowerClassSet lower_class_set(int k) {
  if (k < 2 || k > 5) throw std::out_of_range("lower_class_set: k must be in 2..5");
  LowerClassSet out{lower_class_poset(class_of(make_mstar(k))), boolean_star(k), std::nullopt, {}, false};
  out.witness = is_isomorphic(out.classes.poset, out.model);

  PosetMap map;
  bool total = true;
  for (const auto& c : out.classes.classes) {
    out.region_subsets.push_back(region_subset(c.representative().tree(), k));
    auto j = out.model.find(out.region_subsets.back());
    total = total && j.has_value();
    map.push_back(j.value_or(-1));
  }
  out.region_map_is_isomorphism = total && is_isomorphism(out.classes.poset, out.model, map);
  return out;
}

nlohmann::json class_to_json(const ReducedClass& c) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& code : c.member_codes()) members.push_back(code.str());
  return {{"representative", tree_to_json(c.representative().tree())}, {"members", std::move(members)}};
}

}  // namespace polytree
