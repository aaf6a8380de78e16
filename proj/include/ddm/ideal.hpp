#pragma once

#include <cstddef>
#include <vector>

#include "ddm/form.hpp"

namespace ddm {

/// A basic differential ideal, stored as the antichain of its subsequence-minimal
/// generators. The ideal is the span of every word having some generator as a
/// subsequence; I^0 = 0, so generators have grade >= 1.
class BasicIdeal {
 public:
  /// The zero ideal.
  explicit BasicIdeal(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  /// Minimal antichain with the same superword closure as `words`, in any order
  /// and with any redundancy. Throws GradeZeroGenerator or IndexOutOfRange.
  static BasicIdeal normalize_generators(std::size_t vertex_count, std::vector<BasisWord> words);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<BasisWord>& generators() const noexcept { return generators_; }

  bool contains(const BasisWord& word) const;

  /// Orthogonal projection onto the complement: drops contained terms.
  GradedForm reduce(const GradedForm& form) const;

  /// d and the product in the quotient calculus, computed upstairs then reduced.
  GradedForm quotient_differential(const GradedForm& form) const;
  GradedForm quotient_product(const GradedForm& f, const GradedForm& g) const;

  friend bool operator==(const BasicIdeal&, const BasicIdeal&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<BasisWord> generators_;  // sorted, antichain
};

}  // namespace ddm
