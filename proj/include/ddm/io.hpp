#pragma once

// Text formats. Every parser reports failures as ParseError(source, line, column).
//
//   form       e[1,2] - 3/2*e[2,1] + (1+2i)*e[1]      ("0" is the zero form)
//   relation   n 3 / 1 <= 2 / 2 <= 3                  (reflexive pairs implied)
//   manifold   vertices: 1,2,3  then one block: relation: (i <= j lines),
//              words: (one comma-separated word per line) or ideal: (generators)
//   ideal      [vertices: ...] then one generator word per line
//   complex    [vertices: ...] then one simplex per line
//   covering   sets: A,B,C  then  label: A,B  per point
//
// '#' starts a comment. Without a vertices: line, vertices are the labels in
// use, sorted numerically when all are integers and by first use otherwise.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ddm/coarse_graining.hpp"
#include "ddm/form.hpp"
#include "ddm/ideal.hpp"
#include "ddm/manifold.hpp"
#include "ddm/relation.hpp"
#include "ddm/vertex_table.hpp"

namespace ddm::io {

GradedForm parse_form(std::string_view text, const VertexTable& vertices, const std::string& source = "<form>");
std::string format_form(const GradedForm& form, const VertexTable& vertices);

Relation parse_relation(std::string_view text, const std::string& source = "<relation>");
std::string format_relation(const Relation& relation);

struct ManifoldFile {
  VertexTable vertices;
  std::variant<Relation, std::vector<BasisWord>, BasicIdeal> body;
};

/// Accepts the manifold format and, when the first line is "n <count>", a bare relation file.
ManifoldFile parse_manifold(std::string_view text, const std::string& source = "<manifold>");
std::string format_manifold(const ManifoldFile& file);
/// Explicit manifolds print a words: block, ideal complements an ideal: block.
std::string format_manifold(const DiscreteManifold& m);
/// Relation bodies become network manifolds and may throw NotAntisymmetricError.
DiscreteManifold build_manifold(const ManifoldFile& file);

struct IdealFile {
  VertexTable vertices;
  std::vector<BasisWord> words;  // as listed, before normalization
};
IdealFile parse_ideal(std::string_view text, const std::string& source = "<ideal>");

struct ComplexFile {
  VertexTable vertices;
  std::vector<Simplex> simplices;  // as listed
};
ComplexFile parse_complex(std::string_view text, const std::string& source = "<complex>");
std::string format_complex(const SimplicialComplex& complex);

Covering parse_covering(std::string_view text, const std::string& source = "<covering>");

/// Whole file as a string; throws Error(InvalidArgument) if unreadable.
std::string read_file(const std::string& path);

}  // namespace ddm::io
