#include "ddm/form.hpp"

namespace ddm {

GradedForm::GradedForm(BasisWord word, Coefficient coefficient) {
  add_term(word, coefficient);
}

Coefficient GradedForm::coefficient(const BasisWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Coefficient() : it->second;
}

void GradedForm::add_term(const BasisWord& word, const Coefficient& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedForm GradedForm::homogeneous_component(std::size_t grade) const {
  GradedForm out;
  for (const auto& [word, c] : terms_) {
    if (word.grade() == grade) out.terms_.emplace_hint(out.terms_.end(), word, c);
  }
  return out;
}

GradedForm& GradedForm::operator+=(const GradedForm& other) {
  for (const auto& [word, c] : other.terms_) add_term(word, c);
  return *this;
}

GradedForm& GradedForm::operator-=(const GradedForm& other) {
  for (const auto& [word, c] : other.terms_) add_term(word, -c);
  return *this;
}

GradedForm& GradedForm::operator*=(const Coefficient& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, c] : terms_) c *= scalar;
  return *this;
}

}  // namespace ddm
