#include "ddm/correspondence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ddm/coarse_graining.hpp"

namespace ddm {

namespace {

// Words and simplices are in bijection once the manifold passes check_structure.
std::vector<std::string> word_labels_for(const DiscreteManifold& m, const SimplicialComplex& p,
                                         const FiniteSpace& space) {
  std::map<std::string, std::string> by_simplex;
  for (const auto& w : m.words()) {
    Simplex s(w.letters().begin(), w.letters().end());
    std::sort(s.begin(), s.end());
    by_simplex.emplace(p.label(s), m.vertices().word_label(w));
  }
  std::vector<std::string> out;
  for (const auto& label : space.labels()) out.push_back(by_simplex.at(label));
  return out;
}

std::string witness_for(const FiniteSpace& a, const FiniteSpace& b, const std::string& name) {
  if (a.size() != b.size()) {
    return "generated space has " + std::to_string(a.size()) + " points, " + name + " substitute has " +
           std::to_string(b.size());
  }
  return "no order isomorphism between the generated space and the " + name + " substitute";
}

void write_bijection(std::ostringstream& out, const FiniteSpace& from, const FiniteSpace& to,
                     const std::optional<std::vector<std::size_t>>& map) {
  if (!map) return;
  for (std::size_t x = 0; x < from.size(); ++x) {
    out << "  " << from.label(x) << " -> " << to.label((*map)[x]) << "\n";
  }
}

bool is_identity_on_labels(const FiniteSpace& from, const FiniteSpace& to,
                           const std::optional<std::vector<std::size_t>>& map) {
  if (!map) return false;
  for (std::size_t x = 0; x < from.size(); ++x) {
    if (from.label(x) != to.label((*map)[x])) return false;
  }
  return true;
}

nlohmann::ordered_json bijection_json(const FiniteSpace& from, const FiniteSpace& to,
                                      const std::optional<std::vector<std::size_t>>& map) {
  if (!map) return nullptr;
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < from.size(); ++x) j[from.label(x)] = to.label((*map)[x]);
  return j;
}

}  // namespace

CorrespondenceReport verify_correspondence(const DiscreteManifold& input, std::size_t per_cell,
                                           std::uint64_t seed, bool parallel) {
  DiscreteManifold m = to_explicit(input);
  SimplicialComplex p = to_simplicial(m);
  FiniteSpace generated = generated_space(m);
  FiniteSpace symbolic = simplicial_substitute(p);
  FiniteSpace sampled = sampled_substitute(p, per_cell, seed, parallel);
  symbolic = symbolic.relabeled(word_labels_for(m, p, symbolic));
  sampled = sampled.relabeled(word_labels_for(m, p, sampled));

  CorrespondenceReport report{generated, symbolic, sampled, std::nullopt, std::nullopt, per_cell, seed, {}};
  report.generated_to_simplicial = poset_isomorphism(generated, symbolic);
  report.generated_to_sampled = poset_isomorphism(generated, sampled);
  if (!report.generated_to_simplicial) {
    report.witness = witness_for(generated, symbolic, "simplicial");
  } else if (!report.generated_to_sampled) {
    report.witness = witness_for(generated, sampled, "sampled");
  }
  return report;
}

std::string render_symbolic(const CorrespondenceReport& r) {
  std::ostringstream out;
  out << "generated space: " << r.generated.size() << " points\n";
  out << "simplicial substitute: " << r.simplicial.size() << " points\n";
  if (r.generated_to_simplicial) {
    out << "generated ~ simplicial: isomorphic"
        << (is_identity_on_labels(r.generated, r.simplicial, r.generated_to_simplicial) ? " (identity on labels)"
                                                                                         : "")
        << "\n";
    write_bijection(out, r.generated, r.simplicial, r.generated_to_simplicial);
  } else {
    out << "generated ~ simplicial: NOT isomorphic\n";
  }
  return out.str();
}

std::string render_sampled(const CorrespondenceReport& r) {
  std::ostringstream out;
  out << "sampled substitute (per_cell=" << r.per_cell << ", seed=" << r.seed << "): " << r.sampled.size()
      << " points\n";
  if (r.generated_to_sampled) {
    out << "generated ~ sampled: isomorphic"
        << (is_identity_on_labels(r.generated, r.sampled, r.generated_to_sampled) ? " (identity on labels)" : "")
        << "\n";
    write_bijection(out, r.generated, r.sampled, r.generated_to_sampled);
  } else {
    out << "generated ~ sampled: NOT isomorphic\n";
  }
  return out.str();
}

std::string render_text(const CorrespondenceReport& r) {
  std::string out = render_symbolic(r) + render_sampled(r);
  out += r.isomorphic() ? "verdict: isomorphic\n" : "verdict: FAILED: " + r.witness + "\n";
  return out;
}

nlohmann::ordered_json to_json(const CorrespondenceReport& r) {
  nlohmann::ordered_json j;
  j["isomorphic"] = r.isomorphic();
  j["generated"] = to_json(r.generated);
  j["simplicial"] = to_json(r.simplicial);
  j["sampled"] = to_json(r.sampled);
  j["generated_to_simplicial"] = bijection_json(r.generated, r.simplicial, r.generated_to_simplicial);
  j["generated_to_sampled"] = bijection_json(r.generated, r.sampled, r.generated_to_sampled);
  j["per_cell"] = r.per_cell;
  j["seed"] = r.seed;
  if (!r.isomorphic()) j["witness"] = r.witness;
  return j;
}

}  // namespace ddm
