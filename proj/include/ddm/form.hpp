#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "ddm/coefficient.hpp"
#include "ddm/word.hpp"

namespace ddm {

/// Finitely supported linear combination of basis words. Zero coefficients are
/// never stored, so two forms are equal iff their term maps are equal.
class GradedForm {
 public:
  using TermMap = std::map<BasisWord, Coefficient>;

  GradedForm() = default;
  explicit GradedForm(BasisWord word, Coefficient coefficient = 1);

  const TermMap& terms() const& noexcept { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Coefficient coefficient(const BasisWord& word) const;

  void add_term(const BasisWord& word, const Coefficient& coefficient);

  GradedForm homogeneous_component(std::size_t grade) const;

  GradedForm& operator+=(const GradedForm& other);
  GradedForm& operator-=(const GradedForm& other);
  GradedForm& operator*=(const Coefficient& scalar);

  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  friend GradedForm operator-(GradedForm a) { return a *= Coefficient(-1); }
  friend GradedForm operator*(const Coefficient& s, GradedForm f) { return f *= s; }
  friend bool operator==(const GradedForm& a, const GradedForm& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

}  // namespace ddm
