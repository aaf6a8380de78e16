#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "ddm/coarse_graining.hpp"
#include "ddm/correspondence.hpp"
#include "ddm/envelope.hpp"
#include "ddm/error.hpp"
#include "ddm/finite_space.hpp"
#include "ddm/ideal.hpp"
#include "ddm/io.hpp"
#include "ddm/manifold.hpp"

namespace ddm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t per_cell = 3;
  std::size_t max_grade = 3;
  std::size_t samples = 4096;
  bool short_beta = false;
  std::size_t vertex_count = 0;
  std::string labels;
  std::string path;
  std::string form_a;
  std::string form_b;
};

VertexTable envelope_table(const Options& o) {
  if (!o.labels.empty()) {
    std::vector<std::string> labels;
    std::stringstream in(o.labels);
    for (std::string item; std::getline(in, item, ',');) labels.push_back(item);
    return VertexTable(std::move(labels));
  }
  if (o.vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "give --vertices N or --labels a,b,...");
  return VertexTable::numbered(o.vertex_count);
}

DiscreteManifold load_manifold(const std::string& path) {
  return io::build_manifold(io::parse_manifold(io::read_file(path), path));
}

SimplicialComplex load_complex(const std::string& path, std::ostream& err) {
  auto file = io::parse_complex(io::read_file(path), path);
  std::vector<Simplex> added;
  auto complex = SimplicialComplex::closure(file.vertices, file.simplices, &added);
  if (!added.empty()) {
    err << "warning: added " << added.size() << " face(s) to make the complex hereditary:";
    for (const auto& s : added) err << ' ' << complex.label(s);
    err << "\n";
  }
  return complex;
}

std::string word_list(const VertexTable& table, const std::vector<BasisWord>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + table.word_label(w);
  return out;
}

Json hasse_json(const HasseDiagram& h) {
  Json edges = Json::array();
  for (auto [lo, hi] : h.edges) edges.push_back({h.nodes[lo], h.nodes[hi]});
  return {{"nodes", h.nodes}, {"edges", edges}, {"levels", h.levels}};
}

void print_space(std::ostream& out, const FiniteSpace& space) {
  out << "points: " << space.size() << "\n";
  for (std::size_t x = 0; x < space.size(); ++x) {
    out << "  " << space.label(x) << ": min_open = {";
    const auto& open = space.min_open(x);
    bool first = true;
    for (auto y = open.find_first(); y != PointSet::npos; y = open.find_next(y)) {
      out << (first ? "" : ", ") << space.label(y);
      first = false;
    }
    out << "}\n";
  }
  auto h = hasse(space);
  out << "hasse edges: " << h.edges.size() << "\n";
  for (auto [lo, hi] : h.edges) out << "  " << h.nodes[lo] << " < " << h.nodes[hi] << "\n";
}

void emit_space(std::ostream& out, const FiniteSpace& space, const Options& o) {
  if (o.json) {
    Json j = to_json(space);
    j["hasse"] = hasse_json(hasse(space));
    out << j.dump(2) << "\n";
  } else if (o.dot) {
    out << to_dot(hasse(space));
  } else {
    print_space(out, space);
  }
}

// --- envelope ---------------------------------------------------------------

int envelope_d(const Options& o, std::ostream& out) {
  auto table = envelope_table(o);
  auto f = io::parse_form(o.form_a, table);
  auto r = differential(f, table.size());
  out << (o.json ? Json{{"form", io::format_form(r, table)}}.dump() : io::format_form(r, table)) << "\n";
  return kExitOk;
}

int envelope_mul(const Options& o, std::ostream& out) {
  auto table = envelope_table(o);
  auto r = form_product(io::parse_form(o.form_a, table), io::parse_form(o.form_b, table));
  out << (o.json ? Json{{"form", io::format_form(r, table)}}.dump() : io::format_form(r, table)) << "\n";
  return kExitOk;
}

int envelope_inner(const Options& o, std::ostream& out) {
  auto table = envelope_table(o);
  auto c = inner(io::parse_form(o.form_a, table), io::parse_form(o.form_b, table));
  out << (o.json ? Json{{"value", c.to_string()}}.dump() : c.to_string()) << "\n";
  return kExitOk;
}

// --- ideal ------------------------------------------------------------------

int ideal_check(const Options& o, std::ostream& out) {
  auto file = io::parse_ideal(io::read_file(o.path), o.path);
  auto ideal = BasicIdeal::normalize_generators(file.vertices.size(), file.words);
  std::vector<BasisWord> dropped;
  for (const auto& w : file.words) {
    if (std::find(ideal.generators().begin(), ideal.generators().end(), w) == ideal.generators().end()) {
      dropped.push_back(w);
    }
  }
  std::sort(dropped.begin(), dropped.end());
  dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
  const bool antichain = dropped.empty() && file.words.size() == ideal.generators().size();
  if (o.json) {
    Json gens = Json::array(), drops = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(file.vertices.word_label(g));
    for (const auto& g : dropped) drops.push_back(file.vertices.word_label(g));
    out << Json{{"vertices", file.vertices.labels()}, {"antichain", antichain}, {"generators", gens},
                {"dropped", drops}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "vertices: " << file.vertices.size() << "\n";
  out << "antichain: " << (antichain ? "yes" : "no") << "\n";
  out << "generators: " << word_list(file.vertices, ideal.generators()) << "\n";
  out << "dropped: " << word_list(file.vertices, dropped) << "\n";
  return kExitOk;
}

int ideal_reduce(const Options& o, std::ostream& out) {
  auto file = io::parse_ideal(io::read_file(o.path), o.path);
  auto ideal = BasicIdeal::normalize_generators(file.vertices.size(), file.words);
  auto r = ideal.reduce(io::parse_form(o.form_a, file.vertices));
  out << (o.json ? Json{{"form", io::format_form(r, file.vertices)}}.dump() : io::format_form(r, file.vertices))
      << "\n";
  return kExitOk;
}

// --- manifold ---------------------------------------------------------------

int manifold_info(const Options& o, std::ostream& out) {
  auto m = load_manifold(o.path);
  const auto& table = m.vertices();
  Dimension dim = dimension(m);
  Relation rel = relation_of(m);
  std::size_t top = dim.is_finite() ? dim.value() : o.max_grade;
  auto words = nonvanishing_words(m, top);
  std::vector<std::vector<BasisWord>> by_grade(top + 1);
  for (const auto& w : words) by_grade[w.grade()].push_back(w);
  std::optional<bool> network;
  if (dim.is_finite()) network = is_network(m);

  if (o.json) {
    Json grades = Json::array();
    for (const auto& bucket : by_grade) {
      Json g = Json::array();
      for (const auto& w : bucket) g.push_back(table.word_label(w));
      grades.push_back(g);
    }
    Json pairs = Json::array();
    for (auto [i, j] : rel.pairs()) pairs.push_back({table.label(i), table.label(j)});
    Json j{{"vertices", table.labels()},
           {"representation", m.is_explicit() ? "explicit" : "ideal_complement"},
           {"dimension", dim.is_finite() ? Json(dim.value()) : Json("infinite")},
           {"network", network ? Json(*network) : Json(nullptr)},
           {"relation", pairs},
           {"words_by_grade", grades},
           {"truncated", !dim.is_finite()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "vertices: ";
  for (std::size_t v = 0; v < table.size(); ++v) out << (v ? "," : "") << table.labels()[v];
  out << "\n";
  out << "representation: "
      << (m.is_explicit() ? "explicit" : "ideal complement (" + std::to_string(m.ideal().generators().size()) + " generators)")
      << "\n";
  out << "dimension: " << dim.to_string() << "\n";
  if (network) out << "network: " << (*network ? "yes" : "no") << "\n";
  out << "relation:";
  for (auto [i, j] : rel.pairs()) out << " " << table.label(i) << "<=" << table.label(j);
  out << "\n";
  for (std::size_t g = 0; g < by_grade.size(); ++g) {
    out << "grade " << g << ": " << word_list(table, by_grade[g]) << "\n";
  }
  if (!dim.is_finite()) out << "(infinite-dimensional: listing truncated at grade " << top << ")\n";
  return kExitOk;
}

int manifold_check(const Options& o, std::ostream& out) {
  auto m = load_manifold(o.path);
  auto report = check_structure(m);
  if (o.json) {
    Json findings = Json::array();
    for (const auto& f : report.findings) findings.push_back({{"check", f.check}, {"witness", f.witness}});
    out << Json{{"ok", report.ok()},
                {"hereditary", report.hereditary},
                {"fully_ordered", report.fully_ordered},
                {"unique_orderings", report.unique_orderings},
                {"singletons", report.has_singletons},
                {"antisymmetric", report.antisymmetric},
                {"findings", findings}}
               .dump(2)
        << "\n";
  } else {
    auto line = [&](const char* name, bool pass) { out << name << ": " << (pass ? "pass" : "FAIL") << "\n"; };
    line("hereditary", report.hereditary);
    line("fully_ordered", report.fully_ordered);
    line("unique_orderings", report.unique_orderings);
    line("singletons", report.has_singletons);
    out << "antisymmetric: " << (report.antisymmetric ? "yes" : "no") << "\n";
    for (const auto& f : report.findings) out << "  " << f.check << ": " << f.witness << "\n";
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

int manifold_dim(const Options& o, std::ostream& out) {
  auto d = dimension(load_manifold(o.path));
  if (o.json) {
    out << Json{{"dimension", d.is_finite() ? Json(d.value()) : Json("infinite")}}.dump() << "\n";
  } else {
    out << "dimension: " << d.to_string() << "\n";
  }
  return kExitOk;
}

// --- topology ---------------------------------------------------------------

int topology_hasse(const Options& o, std::ostream& out) {
  auto space = generated_space(load_manifold(o.path));
  auto h = hasse(space);
  if (o.dot) {
    out << to_dot(h);
  } else if (o.json) {
    out << hasse_json(h).dump(2) << "\n";
  } else {
    out << "hasse edges: " << h.edges.size() << "\n";
    for (auto [lo, hi] : h.edges) out << "  " << h.nodes[lo] << " < " << h.nodes[hi] << "\n";
  }
  return kExitOk;
}

int topology_open_sets(const Options& o, std::ostream& out) {
  auto space = generated_space(load_manifold(o.path));
  auto sets = open_sets(space);
  auto names = [&](const PointSet& s) {
    std::vector<std::string> v;
    for (auto y = s.find_first(); y != PointSet::npos; y = s.find_next(y)) v.push_back(space.label(y));
    return v;
  };
  if (o.json) {
    Json all = Json::array();
    for (const auto& s : sets) all.push_back(names(s));
    out << Json{{"count", sets.size()}, {"open_sets", all}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "open sets: " << sets.size() << "\n";
  for (const auto& s : sets) {
    auto v = names(s);
    out << "  {";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v[k];
    out << "}\n";
  }
  return kExitOk;
}

int topology_json(const Options& o, std::ostream& out) {
  out << to_json(generated_space(load_manifold(o.path))).dump(2) << "\n";
  return kExitOk;
}

// --- substitute -------------------------------------------------------------

int substitute_simplicial(const Options& o, std::ostream& out, std::ostream& err) {
  emit_space(out, simplicial_substitute(load_complex(o.path, err)), o);
  return kExitOk;
}

int substitute_sampled(const Options& o, std::ostream& out, std::ostream& err) {
  auto complex = load_complex(o.path, err);
  auto sampled = sampled_substitute(complex, o.per_cell, o.seed);
  auto symbolic = simplicial_substitute(complex);
  bool iso = poset_isomorphism(sampled, symbolic).has_value();
  if (o.json) {
    Json j = to_json(sampled);
    j["hasse"] = hasse_json(hasse(sampled));
    j["isomorphic_to_simplicial"] = iso;
    out << j.dump(2) << "\n";
  } else {
    out << "per_cell: " << o.per_cell << "\nseed: " << o.seed << "\n";
    print_space(out, sampled);
    out << "isomorphic to simplicial substitute: " << (iso ? "yes" : "no") << "\n";
  }
  return iso ? kExitOk : kExitVerificationFailed;
}

void emit_substitute(std::ostream& out, const Covering& covering, const Substitute& sub, const Options& o) {
  std::vector<std::size_t> members(sub.space.size(), 0);
  for (auto c : sub.class_of) ++members[c];
  if (o.json) {
    Json j = to_json(sub.space);
    j["hasse"] = hasse_json(hasse(sub.space));
    j["class_sizes"] = members;
    j["point_count"] = covering.point_labels.size();
    out << j.dump(2) << "\n";
    return;
  }
  out << "cover sets: " << covering.cover_labels.size() << "\n";
  out << "points: " << covering.point_labels.size() << "\n";
  out << "classes: " << sub.space.size() << "\n";
  for (std::size_t c = 0; c < sub.space.size(); ++c) {
    out << "  " << sub.space.label(c) << ": " << members[c] << " point(s)\n";
  }
  print_space(out, sub.space);
}

int substitute_circle(const Options& o, std::ostream& out) {
  auto arcs = o.short_beta ? short_beta_circle_arcs() : triangle_circle_arcs();
  auto extra = triangle_circle_boundary_points();
  auto covering = circle_covering(arcs, o.samples, extra);
  emit_substitute(out, covering, trace_substitute(covering), o);
  return kExitOk;
}

int substitute_covering(const Options& o, std::ostream& out) {
  auto covering = io::parse_covering(io::read_file(o.path), o.path);
  emit_substitute(out, covering, trace_substitute(covering), o);
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

int verify_correspondence_cmd(const Options& o, std::ostream& out) {
  auto report = verify_correspondence(load_manifold(o.path), o.per_cell, o.seed);
  if (o.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return report.isomorphic() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discrete differential manifolds, generated spaces and finitary substitutes", "ddm"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto file_arg = [&](CLI::App* cmd, const char* what) { cmd->add_option("file", o.path, what)->required(); };
  auto leaf = [&](CLI::App* parent, const char* name, const char* description, std::function<int()> fn) {
    CLI::App* cmd = parent->add_subcommand(name, description);
    cmd->add_flag("--json", o.json, "Machine-readable output");
    cmd->callback([&action, fn]() { action = fn; });
    return cmd;
  };

  auto* envelope = app.add_subcommand("envelope", "Universal differential envelope")->require_subcommand(1);
  for (auto* cmd : {leaf(envelope, "d", "Differential of a form", [&] { return envelope_d(o, out); }),
                    leaf(envelope, "mul", "Graded product of two forms", [&] { return envelope_mul(o, out); }),
                    leaf(envelope, "inner", "Scalar product of two forms", [&] { return envelope_inner(o, out); })}) {
    cmd->add_option("--vertices", o.vertex_count, "Vertex count, labels 1..N");
    cmd->add_option("--labels", o.labels, "Comma-separated vertex labels");
    cmd->add_option("form", o.form_a, "Form, e.g. 'e[1,2] - 2*e[2,1]'")->required();
    if (std::string(cmd->get_name()) != "d") cmd->add_option("other", o.form_b, "Second form")->required();
  }

  auto* ideal = app.add_subcommand("ideal", "Basic differential ideals")->require_subcommand(1);
  file_arg(leaf(ideal, "check", "Normalize generators and report redundant ones", [&] { return ideal_check(o, out); }),
           "Ideal file");
  auto* reduce = leaf(ideal, "reduce", "Project a form onto the quotient", [&] { return ideal_reduce(o, out); });
  file_arg(reduce, "Ideal file");
  reduce->add_option("form", o.form_a, "Form")->required();

  auto* manifold = app.add_subcommand("manifold", "Discrete differential manifolds")->require_subcommand(1);
  auto* info = leaf(manifold, "info", "Summary of a manifold", [&] { return manifold_info(o, out); });
  file_arg(info, "Manifold or relation file");
  info->add_option("--max-grade", o.max_grade, "Grade cut-off when listing an infinite-dimensional manifold");
  file_arg(leaf(manifold, "check", "Structural checks", [&] { return manifold_check(o, out); }),
           "Manifold or relation file");
  file_arg(leaf(manifold, "dim", "Dimension", [&] { return manifold_dim(o, out); }), "Manifold or relation file");

  auto* topology = app.add_subcommand("topology", "Generated topological spaces")->require_subcommand(1);
  auto* hasse_cmd = leaf(topology, "hasse", "Hasse diagram of the generated space", [&] { return topology_hasse(o, out); });
  file_arg(hasse_cmd, "Manifold or relation file");
  hasse_cmd->add_flag("--dot", o.dot, "Graphviz output");
  file_arg(leaf(topology, "open-sets", "All open sets", [&] { return topology_open_sets(o, out); }),
           "Manifold or relation file");
  file_arg(leaf(topology, "json", "Generated space as JSON", [&] { return topology_json(o, out); }),
           "Manifold or relation file");

  auto* substitute = app.add_subcommand("substitute", "Finitary substitutes")->require_subcommand(1);
  auto* simp = leaf(substitute, "simplicial", "Substitute of a polyhedron under its simplicial covering",
                    [&] { return substitute_simplicial(o, out, err); });
  file_arg(simp, "Complex file");
  simp->add_flag("--dot", o.dot, "Graphviz output of the Hasse diagram");
  auto* sampled = leaf(substitute, "sampled", "Substitute recomputed from sampled points",
                       [&] { return substitute_sampled(o, out, err); });
  file_arg(sampled, "Complex file");
  sampled->add_option("--per-cell", o.per_cell, "Samples per local interior")->check(CLI::PositiveNumber);
  sampled->add_option("--seed", o.seed, "Sampling seed");
  auto* circle = leaf(substitute, "circle", "Three-arc covering of the circle", [&] { return substitute_circle(o, out); });
  circle->add_option("--samples", o.samples, "Uniform angle samples")->check(CLI::PositiveNumber);
  circle->add_flag("--short-beta", o.short_beta, "Use beta = (pi/2, 3pi/4), which leaves pi uncovered");
  file_arg(leaf(substitute, "covering", "Substitute of a covering file", [&] { return substitute_covering(o, out); }),
           "Covering file");

  auto* verify = app.add_subcommand("verify", "Correspondence checks")->require_subcommand(1);
  auto* corr = leaf(verify, "correspondence", "Generated space vs simplicial and sampled substitutes",
                    [&] { return verify_correspondence_cmd(o, out); });
  file_arg(corr, "Manifold or relation file");
  corr->add_option("--per-cell", o.per_cell, "Samples per local interior")->check(CLI::PositiveNumber);
  corr->add_option("--seed", o.seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error[Internal]: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ddm::cli
