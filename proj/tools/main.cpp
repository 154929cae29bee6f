#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polytree/canonical.hpp"
#include "polytree/hypertree.hpp"
#include "polytree/planar_complex.hpp"
#include "polytree/poset_io.hpp"
#include "polytree/reduced.hpp"
#include "polytree/tree_io.hpp"
#include "polytree/triangulation.hpp"
#include "verification/verification.hpp"

namespace {

using namespace polytree;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + out);
}

std::string enumerate_text(const std::string& kind, int n, const std::string& format, int jobs) {
  nlohmann::json records = nlohmann::json::array();
  std::string lines;
  if (kind == "planar-trees") {
    for (const auto& t : enumerate_planar_trees(n, jobs)) {
      auto code = canonical_code(t).str();
      auto j = tree_to_json(t);
      j["code"] = code;
      j["dimension"] = cell_dimension(t);
      records.push_back(std::move(j));
      lines += code + "\n";
    }
  } else if (kind == "triangulations") {
    for (const auto& pt : enumerate_partial_triangulations(n)) {
      records.push_back(triangulation_to_json(pt));
      lines += pt.key() + "\n";
    }
  } else if (kind == "sym-triangulations") {
    for (const auto& pt : enumerate_symmetric_triangulations(n)) {
      records.push_back(triangulation_to_json(pt));
      lines += pt.key() + "\n";
    }
  } else if (kind == "ncht") {
    for (const auto& h : enumerate_ncht(n)) {
      records.push_back(hypertree_to_json(h));
      lines += h.key() + "\n";
    }
  } else {
    throw std::invalid_argument("unknown kind '" + kind +
                                "' (expected planar-trees, triangulations, sym-triangulations or ncht)");
  }
  if (format == "text") return lines;
  if (format != "json") throw std::invalid_argument("enumerate supports --format json or text");
  return records.dump(2) + "\n";
}

FinitePoset dot_object(const std::string& kind, int n, int jobs) {
  if (kind == "pnr") {
    if (n < 3 || n > 4) throw std::out_of_range("DOT export of the planar tree poset supports n in 3..4");
    return build_pnr_poset(n, jobs);
  }
  if (kind == "associahedron") return associahedron_face_poset(n);
  if (kind == "cyclohedron") return cyclohedron_face_poset(n);
  if (kind == "bool-star") return boolean_star(n);
  if (kind == "bool") return boolean_lattice(n);
  if (kind == "ncht") return ncht_poset(n);
  if (kind == "reduced") {
    if (n < 3 || n > 4) throw std::out_of_range("DOT export of the reduced poset supports n in 3..4");
    return reduced_poset(n).poset;
  }
  throw std::invalid_argument("unknown kind '" + kind +
                              "' (expected pnr, associahedron, cyclohedron, bool-star, bool, ncht or reduced)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar tree posets, associahedra, cyclohedra and reduced trees"};
  app.require_subcommand(1);

  std::string kind, out, format = "json", dot_format = "dot", suite = "all";
  int n = 4, jobs = 1;

  auto* en = app.add_subcommand("enumerate", "List every object of a kind as JSON records");
  en->add_option("--kind", kind, "planar-trees | triangulations | sym-triangulations | ncht")->required();
  en->add_option("--n", n, "size (marks, polygon corners, half-polygon or hypertree vertices)")->required();
  en->add_option("--out", out, "output file (default stdout)");
  en->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  en->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "Run a verification suite; exit status 0 iff every check passes");
  ve->add_option("--suite", suite, "all | planar | polytopes | reduced")
      ->check(CLI::IsMember({"all", "planar", "polytopes", "reduced"}));
  ve->add_option("--n", n, "largest n to check (3..6)");
  ve->add_option("--out", out, "output file (default stdout)");
  ve->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  ve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("export-dot", "Write a Hasse diagram in Graphviz DOT");
  ex->add_option("--kind", kind, "pnr | associahedron | cyclohedron | bool-star | bool | ncht | reduced")->required();
  ex->add_option("--n", n, "size parameter")->required();
  ex->add_option("--out", out, "output file (default stdout)");
  ex->add_option("--format", dot_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  ex->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      emit(enumerate_text(kind, n, format, jobs), out);
      return 0;
    }
    if (*ve) {
      auto report = verify::run_suite(suite, n, jobs);
      emit(format == "text" ? report.to_text() : report.to_json().dump(2) + "\n", out);
      return report.passed() ? 0 : 1;
    }
    if (*ex) {
      auto p = dot_object(kind, n, jobs);
      emit(dot_format == "json" ? poset_to_json(p).dump(2) + "\n" : poset_to_dot(p, kind + std::to_string(n)), out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
