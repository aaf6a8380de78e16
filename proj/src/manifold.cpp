#include "ddm/manifold.hpp"

#include <algorithm>
#include <map>

#include "ddm/avoidance_automaton.hpp"
#include "ddm/error.hpp"

namespace ddm {

DiscreteManifold DiscreteManifold::explicit_family(VertexTable vertices, std::vector<BasisWord> words) {
  if (words.empty()) throw Error(ErrorCode::InvalidArgument, "explicit family has no words");
  Family family;
  for (auto& w : words) {
    BasisWord::validate(w.letters(), vertices.size());
    family.lookup.insert(std::move(w));
  }
  for (const auto& w : family.lookup) {
    if (family.by_grade.size() <= w.grade()) family.by_grade.resize(w.grade() + 1);
    family.by_grade[w.grade()].push_back(w);
  }
  return DiscreteManifold(std::move(vertices), std::move(family));
}

DiscreteManifold DiscreteManifold::ideal_complement(VertexTable vertices, BasicIdeal ideal) {
  if (vertices.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty vertex set");
  if (ideal.vertex_count() != vertices.size()) {
    throw Error(ErrorCode::InvalidArgument, "ideal and vertex table disagree on |M|");
  }
  return DiscreteManifold(std::move(vertices), std::move(ideal));
}

const std::vector<std::vector<BasisWord>>& DiscreteManifold::words_by_grade() const {
  if (!is_explicit()) throw Error(ErrorCode::InvalidArgument, "manifold is not an explicit family");
  return std::get<Family>(rep_).by_grade;
}

std::vector<BasisWord> DiscreteManifold::words() const {
  std::vector<BasisWord> out;
  for (const auto& bucket : words_by_grade()) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

const BasicIdeal& DiscreteManifold::ideal() const {
  if (is_explicit()) throw Error(ErrorCode::InvalidArgument, "manifold is an explicit family");
  return std::get<BasicIdeal>(rep_);
}

bool DiscreteManifold::nonvanishing(const BasisWord& word) const {
  if (const auto* family = std::get_if<Family>(&rep_)) return family->lookup.count(word) != 0;
  return !std::get<BasicIdeal>(rep_).contains(word);
}

DiscreteManifold from_relation_network(const Relation& relation, VertexTable vertices) {
  if (relation.size() != vertices.size()) {
    throw Error(ErrorCode::InvalidArgument, "relation and vertex table disagree on |M|");
  }
  if (auto witness = relation.antisymmetry_witness()) {
    auto [i, j] = *witness;
    throw NotAntisymmetricError(
        i, j,
        "relation is not antisymmetric: " + vertices.label(i) + " <= " + vertices.label(j) + " and " +
            vertices.label(j) + " <= " + vertices.label(i) + " (the network manifold is infinite-dimensional)");
  }
  // Depth-first chain extension: append u when every letter so far is <= u.
  const std::size_t n = relation.size();
  std::vector<BasisWord> words;
  std::vector<Vertex> chain;
  auto extend = [&](auto&& self) -> void {
    words.push_back(*BasisWord::make(chain));
    for (Vertex u = 0; u < n; ++u) {
      bool ok = std::all_of(chain.begin(), chain.end(),
                            [&](Vertex x) { return x != u && relation.related(x, u); });
      if (!ok) continue;
      chain.push_back(u);
      self(self);
      chain.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    chain.assign(1, v);
    extend(extend);
  }
  return DiscreteManifold::explicit_family(std::move(vertices), std::move(words));
}

BasicIdeal network_ideal(const Relation& relation) {
  const std::size_t n = relation.size();
  std::vector<BasisWord> gens;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && !relation.related(i, j)) gens.push_back(BasisWord::validate({i, j}, n));
    }
  }
  return BasicIdeal::normalize_generators(n, std::move(gens));
}

Relation relation_of(const DiscreteManifold& m) {
  const std::size_t n = m.vertex_count();
  Relation rel(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && m.nonvanishing(BasisWord::validate({i, j}, n))) rel.relate(i, j);
    }
  }
  return rel;
}

Dimension dimension(const DiscreteManifold& m) {
  if (m.is_explicit()) return Dimension::finite(m.words_by_grade().size() - 1);
  AvoidanceAutomaton automaton(m.ideal());
  if (automaton.has_cycle()) return Dimension::infinite();
  return Dimension::finite(automaton.longest_word() - 1);
}

std::vector<BasisWord> nonvanishing_words(const DiscreteManifold& m, std::size_t max_grade) {
  std::vector<BasisWord> out;
  if (m.is_explicit()) {
    for (const auto& w : m.words()) {
      if (w.grade() <= max_grade) out.push_back(w);
    }
    return out;
  }
  // Ideal membership is closed under extension, so prune at the first contained prefix.
  const auto& ideal = m.ideal();
  const std::size_t n = m.vertex_count();
  std::vector<Vertex> letters;
  auto grow = [&](auto&& self) -> void {
    auto word = *BasisWord::make(letters);
    if (ideal.contains(word)) return;
    out.push_back(std::move(word));
    if (letters.size() > max_grade) return;
    for (Vertex a = 0; a < n; ++a) {
      if (a == letters.back()) continue;
      letters.push_back(a);
      self(self);
      letters.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    letters.assign(1, v);
    grow(grow);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiscreteManifold to_explicit(const DiscreteManifold& m) {
  if (m.is_explicit()) return m;
  Dimension dim = dimension(m);
  if (!dim.is_finite()) {
    throw Error(ErrorCode::InfiniteDimensional, "manifold is infinite-dimensional");
  }
  return DiscreteManifold::explicit_family(m.vertices(), nonvanishing_words(m, dim.value()));
}

bool is_network(const DiscreteManifold& m) {
  DiscreteManifold finite = to_explicit(m);
  Relation rel = relation_of(finite);
  if (rel.antisymmetry_witness()) return false;
  return from_relation_network(rel, finite.vertices()).words() == finite.words();
}

StructureReport check_structure(const DiscreteManifold& input) {
  DiscreteManifold m = to_explicit(input);
  const auto& table = m.vertices();
  StructureReport report;
  const auto words = m.words();
  const Relation rel = relation_of(m);

  for (const auto& w : words) {
    for (std::size_t s = 0; s < w.size() && w.size() > 1; ++s) {
      std::vector<Vertex> rest;
      for (std::size_t t = 0; t < w.size(); ++t) {
        if (t != s) rest.push_back(w[t]);
      }
      auto face = BasisWord::make(std::move(rest));
      if (face && !m.nonvanishing(*face)) {
        report.hereditary = false;
        report.findings.push_back(
            {"hereditary", table.word_label(w) + " -> " + table.word_label(*face) + " missing"});
      }
    }
  }

  for (const auto& w : words) {
    std::string problem;
    for (std::size_t s = 0; s < w.size() && problem.empty(); ++s) {
      for (std::size_t t = s + 1; t < w.size(); ++t) {
        if (w[s] == w[t]) {
          problem = "letter " + table.label(w[s]) + " repeats";
          break;
        }
        if (!rel.related(w[s], w[t])) {
          problem = table.label(w[s]) + " <= " + table.label(w[t]) + " fails";
          break;
        }
      }
    }
    if (!problem.empty()) {
      report.fully_ordered = false;
      report.findings.push_back({"fully_ordered", table.word_label(w) + ": " + problem});
    }
  }

  std::map<std::vector<Vertex>, std::vector<BasisWord>> orderings;
  for (const auto& w : words) {
    std::vector<Vertex> key(w.letters().begin(), w.letters().end());
    std::sort(key.begin(), key.end());
    orderings[key].push_back(w);
  }
  for (const auto& [key, group] : orderings) {
    if (group.size() < 2) continue;
    report.unique_orderings = false;
    std::string witness = "{" + table.join(key) + "}:";
    for (const auto& w : group) witness += " " + table.word_label(w);
    report.findings.push_back({"unique_orderings", witness});
  }

  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (!m.nonvanishing(BasisWord::vertex(v))) {
      report.has_singletons = false;
      report.findings.push_back({"singletons", table.label(v) + " missing"});
    }
  }

  if (auto witness = rel.antisymmetry_witness()) {
    report.antisymmetric = false;
    report.findings.push_back(
        {"antisymmetric", table.label(witness->first) + " <= " + table.label(witness->second) +
                              " <= " + table.label(witness->first)});
  }
  return report;
}

SimplicialComplex to_simplicial(const DiscreteManifold& input) {
  DiscreteManifold m = to_explicit(input);
  StructureReport report = check_structure(m);
  if (!report.ok()) {
    const auto& f = report.findings.front();
    throw Error(ErrorCode::StructureViolation, "structure check '" + f.check + "' failed: " + f.witness);
  }
  std::vector<Simplex> simplices;
  for (const auto& w : m.words()) {
    Simplex s(w.letters().begin(), w.letters().end());
    std::sort(s.begin(), s.end());
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::validated(m.vertices(), std::move(simplices));
}

}  // namespace ddm
