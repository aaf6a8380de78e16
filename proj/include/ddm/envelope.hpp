#pragma once

// Universal differential envelope over Fun(M): bimodule action, graded product,
// differential and the orthonormal scalar product on the natural basis.

#include <cstddef>

#include "ddm/form.hpp"

namespace ddm {

/// e_p . w . e_q: the word itself when p is its first and q its last letter, else zero.
GradedForm bimodule_action(Vertex left, const BasisWord& word, Vertex right);

/// Overlap concatenation when last(a) == first(b), else zero.
GradedForm word_product(const BasisWord& a, const BasisWord& b);

GradedForm form_product(const GradedForm& f, const GradedForm& g);

/// Insert every letter k into each of the r+2 gaps of a grade-r word with sign
/// (-1)^gap, dropping insertions that would repeat a neighbour.
GradedForm differential_word(const BasisWord& word, std::size_t vertex_count);

GradedForm differential(const GradedForm& form, std::size_t vertex_count);

/// Sum over shared words of conj(f_w) * g_w.
Coefficient inner(const GradedForm& f, const GradedForm& g);

/// The unit sum_i e_i of the basic algebra.
GradedForm unit_form(std::size_t vertex_count);

}  // namespace ddm
