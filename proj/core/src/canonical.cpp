#include <stdexcept>

#include "detail.hpp"

namespace polytree {
namespace detail {

namespace {

class Encoder {
 public:
  explicit Encoder(const PlanarTree& t) : t_(t) {}

  void encode(VertexId root, int start, std::string& out, std::vector<VertexId>& order) {
    out_ = &out;
    order_ = &order;
    next_unmarked_ = 0;
    emit(root);
    auto rot = t_.rotation(root);
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      out.push_back('(');
      visit(rot[(start + i) % deg], root);
      out.push_back(')');
    }
  }

 private:
  void emit(VertexId v) {
    order_->push_back(v);
    if (t_.is_marked(v)) {
      *out_ += std::to_string(t_.label(v));
    } else {
      out_->push_back('u');
      *out_ += std::to_string(next_unmarked_++);
    }
  }

  void visit(VertexId v, VertexId parent) {
    emit(v);
    auto rot = t_.rotation(v);
    const int deg = static_cast<int>(rot.size());
    const int pos = rotation_index(t_, v, parent);
    for (int i = 1; i < deg; ++i) {
      out_->push_back('(');
      visit(rot[(pos + i) % deg], v);
      out_->push_back(')');
    }
  }

  const PlanarTree& t_;
  std::string* out_ = nullptr;
  std::vector<VertexId>* order_ = nullptr;
  int next_unmarked_ = 0;
};

}  // namespace

int rotation_index(const PlanarTree& t, VertexId v, VertexId w) {
  auto rot = t.rotation(v);
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (rot[i] == w) return i;
  throw std::logic_error("rotation_index: vertices not adjacent");
}

CanonicalForm canonical_form_unchecked(const PlanarTree& t) {
  const VertexId root = t.vertex_of(1);
  Encoder enc(t);
  CanonicalForm best;
  std::string text;
  std::vector<VertexId> order;
  const int deg = t.valence(root);
  for (int start = 0; start < deg; ++start) {
    text.clear();
    order.clear();
    enc.encode(root, start, text, order);
    if (start == 0 || text < best.code.str()) best = {CanonicalCode(text), order};
  }
  return best;
}

}  // namespace detail

CanonicalForm canonical_form(const PlanarTree& t) {
  require_valid(t);
  return detail::canonical_form_unchecked(t);
}

CanonicalCode canonical_code(const PlanarTree& t) { return canonical_form(t).code; }

bool isomorphic(const PlanarTree& a, const PlanarTree& b) {
  return a.n() == b.n() && canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<VertexId>> tree_isomorphism(const PlanarTree& a, const PlanarTree& b) {
  auto fa = canonical_form(a);
  auto fb = canonical_form(b);
  if (a.n() != b.n() || fa.code != fb.code) return std::nullopt;
  std::vector<VertexId> map(a.vertex_count());
  for (std::size_t i = 0; i < fa.order.size(); ++i) map[fa.order[i]] = fb.order[i];
  return map;
}

}  // namespace polytree
