#include "ddm/envelope.hpp"

namespace ddm {

GradedForm bimodule_action(Vertex left, const BasisWord& word, Vertex right) {
  if (word.front() != left || word.back() != right) return {};
  return GradedForm(word);
}

GradedForm word_product(const BasisWord& a, const BasisWord& b) {
  if (a.back() != b.front()) return {};
  std::vector<Vertex> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin() + 1, b.letters().end());
  // a and b are each adjacency-valid and meet at one shared letter.
  return GradedForm(*BasisWord::make(std::move(letters)));
}

GradedForm form_product(const GradedForm& f, const GradedForm& g) {
  GradedForm out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      if (a.back() != b.front()) continue;
      GradedForm ab = word_product(a, b);
      for (const auto& [w, c] : ab.terms()) out.add_term(w, ca * cb * c);
    }
  }
  return out;
}

GradedForm differential_word(const BasisWord& word, std::size_t vertex_count) {
  GradedForm out;
  const auto letters = word.letters();
  const std::size_t n = letters.size();
  std::vector<Vertex> buffer(n + 1);
  for (std::size_t gap = 0; gap <= n; ++gap) {
    const Coefficient sign = (gap % 2 == 0) ? 1 : -1;
    for (Vertex k = 0; k < vertex_count; ++k) {
      if (gap > 0 && letters[gap - 1] == k) continue;
      if (gap < n && letters[gap] == k) continue;
      std::copy(letters.begin(), letters.begin() + gap, buffer.begin());
      buffer[gap] = k;
      std::copy(letters.begin() + gap, letters.end(), buffer.begin() + gap + 1);
      out.add_term(*BasisWord::make(buffer), sign);
    }
  }
  return out;
}

GradedForm differential(const GradedForm& form, std::size_t vertex_count) {
  GradedForm out;
  for (const auto& [word, c] : form.terms()) {
    GradedForm dw = differential_word(word, vertex_count);
    for (const auto& [w, dc] : dw.terms()) {
      out.add_term(w, c * dc);
    }
  }
  return out;
}

Coefficient inner(const GradedForm& f, const GradedForm& g) {
  Coefficient sum;
  const auto& small = f.term_count() <= g.term_count() ? f.terms() : g.terms();
  for (const auto& term : small) {
    const auto& word = term.first;
    auto a = f.terms().find(word);
    auto b = g.terms().find(word);
    if (a != f.terms().end() && b != g.terms().end()) sum += a->second.conj() * b->second;
  }
  return sum;
}

GradedForm unit_form(std::size_t vertex_count) {
  GradedForm out;
  for (Vertex v = 0; v < vertex_count; ++v) out.add_term(BasisWord::vertex(v), 1);
  return out;
}

}  // namespace ddm
