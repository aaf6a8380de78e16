#include "ddm/ideal.hpp"

#include <algorithm>

#include "ddm/envelope.hpp"
#include "ddm/error.hpp"

namespace ddm {

BasicIdeal BasicIdeal::normalize_generators(std::size_t vertex_count, std::vector<BasisWord> words) {
  for (const auto& w : words) {
    BasisWord::validate(w.letters(), vertex_count);
    if (w.grade() == 0) {
      throw Error(ErrorCode::GradeZeroGenerator,
                  "generator of grade 0 would make I^0 nonzero (letter " +
                      std::to_string(w.front()) + ")");
    }
  }
  // Grade-major order puts every proper subword before its superwords.
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  BasicIdeal ideal(vertex_count);
  for (auto& w : words) {
    if (!ideal.contains(w)) ideal.generators_.push_back(std::move(w));
  }
  return ideal;
}

bool BasicIdeal::contains(const BasisWord& word) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const BasisWord& g) { return is_subword(g, word); });
}

GradedForm BasicIdeal::reduce(const GradedForm& form) const {
  GradedForm out;
  for (const auto& [word, c] : form.terms()) {
    if (!contains(word)) out.add_term(word, c);
  }
  return out;
}

GradedForm BasicIdeal::quotient_differential(const GradedForm& form) const {
  return reduce(differential(form, vertex_count_));
}

GradedForm BasicIdeal::quotient_product(const GradedForm& f, const GradedForm& g) const {
  return reduce(form_product(f, g));
}

}  // namespace ddm
