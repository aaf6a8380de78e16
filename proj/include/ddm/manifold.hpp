#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ddm/ideal.hpp"
#include "ddm/relation.hpp"
#include "ddm/simplicial.hpp"
#include "ddm/vertex_table.hpp"

namespace ddm {

class Dimension {
 public:
  static Dimension finite(std::size_t value) { return Dimension(value, true); }
  static Dimension infinite() { return Dimension(0, false); }

  bool is_finite() const noexcept { return finite_; }
  /// Only meaningful when finite.
  std::size_t value() const noexcept { return value_; }
  std::string to_string() const { return finite_ ? std::to_string(value_) : "infinite"; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension(std::size_t value, bool finite) : value_(value), finite_(finite) {}

  std::size_t value_;
  bool finite_;
};

/// A discrete differential manifold (M, K). K is either listed explicitly
/// (always finite) or described as the complement of a basic ideal, which is the
/// only form an infinite-dimensional manifold can take here.
class DiscreteManifold {
 public:
  /// Words are validated against the table and deduplicated; structural
  /// properties (hereditarity, singletons, ...) are left to check_structure.
  static DiscreteManifold explicit_family(VertexTable vertices, std::vector<BasisWord> words);
  static DiscreteManifold ideal_complement(VertexTable vertices, BasicIdeal ideal);

  const VertexTable& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  bool is_explicit() const noexcept { return std::holds_alternative<Family>(rep_); }
  /// Explicit form only: words bucketed by grade, each bucket sorted.
  const std::vector<std::vector<BasisWord>>& words_by_grade() const;
  /// Explicit form only: all words grade-major.
  std::vector<BasisWord> words() const;
  /// Ideal form only.
  const BasicIdeal& ideal() const;

  bool nonvanishing(const BasisWord& word) const;

 private:
  struct Family {
    std::vector<std::vector<BasisWord>> by_grade;
    std::set<BasisWord> lookup;
  };

  DiscreteManifold(VertexTable vertices, std::variant<Family, BasicIdeal> rep)
      : vertices_(std::move(vertices)), rep_(std::move(rep)) {}

  VertexTable vertices_;
  std::variant<Family, BasicIdeal> rep_;
};

/// The network manifold of an antisymmetric relation: every sequence with
/// i_s <= i_t for all s <= t. Throws NotAntisymmetricError otherwise.
DiscreteManifold from_relation_network(const Relation& relation, VertexTable vertices);

/// Ideal whose complement is the network family of `relation`, antisymmetric or
/// not: generated by the 1-words (i, j) with i != j and not i <= j.
BasicIdeal network_ideal(const Relation& relation);

/// i <= j iff i == j or the word (i, j) is nonvanishing.
Relation relation_of(const DiscreteManifold& m);

Dimension dimension(const DiscreteManifold& m);

/// Nonvanishing words of grade <= max_grade, grade-major.
std::vector<BasisWord> nonvanishing_words(const DiscreteManifold& m, std::size_t max_grade);

/// Explicit equivalent of a finite-dimensional manifold. Throws InfiniteDimensional.
DiscreteManifold to_explicit(const DiscreteManifold& m);

/// Throws InfiniteDimensional.
bool is_network(const DiscreteManifold& m);

struct StructureFinding {
  std::string check;
  std::string witness;
};

struct StructureReport {
  bool hereditary = true;
  bool fully_ordered = true;
  bool unique_orderings = true;
  bool has_singletons = true;
  /// Informational: a finite-dimensional manifold need not be rejected for this.
  bool antisymmetric = true;
  std::vector<StructureFinding> findings;

  bool ok() const { return hereditary && fully_ordered && unique_orderings && has_singletons; }
};

/// Hereditarity under letter deletion, full order of every word by relation_of,
/// at most one ordering per vertex subset, singletons present. Throws
/// InfiniteDimensional for an infinite ideal complement.
StructureReport check_structure(const DiscreteManifold& m);

/// Forget word order. Throws StructureViolation if check_structure fails.
SimplicialComplex to_simplicial(const DiscreteManifold& m);

}  // namespace ddm
