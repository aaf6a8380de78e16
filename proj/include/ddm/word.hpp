#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ddm {

/// Index of an element of the finite vertex set; labels live in a VertexTable.
using Vertex = std::uint32_t;

/// A natural-basis monomial e_{i0,...,ir}: a nonempty letter sequence with no
/// two equal neighbours. Ordered grade-major, then lexicographically.
class BasisWord {
 public:
  /// Full boundary check. Throws Error with EmptyWord, IndexOutOfRange or
  /// EqualAdjacentLetters.
  static BasisWord validate(std::span<const Vertex> letters, std::size_t vertex_count);
  static BasisWord validate(std::initializer_list<Vertex> letters, std::size_t vertex_count) {
    return validate(std::span<const Vertex>(letters.begin(), letters.size()), vertex_count);
  }

  /// Nonempty and adjacency-valid, or nullopt. No range check.
  static std::optional<BasisWord> make(std::vector<Vertex> letters);

  static BasisWord vertex(Vertex v) { return BasisWord(std::vector<Vertex>{v}); }

  std::size_t grade() const noexcept { return letters_.size() - 1; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const Vertex> letters() const noexcept { return letters_; }
  Vertex operator[](std::size_t k) const noexcept { return letters_[k]; }
  Vertex front() const noexcept { return letters_.front(); }
  Vertex back() const noexcept { return letters_.back(); }

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend std::strong_ordering operator<=>(const BasisWord& a, const BasisWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  explicit BasisWord(std::vector<Vertex> letters) : letters_(std::move(letters)) {}

  std::vector<Vertex> letters_;
};

/// Every grade-r word over n letters, lexicographic; n*(n-1)^r of them.
std::vector<BasisWord> enumerate_basis(std::size_t vertex_count, std::size_t grade);

/// Greedy subsequence embedding test: does `sub` occur in `word` as a subsequence?
bool is_subword(const BasisWord& sub, const BasisWord& word);

}  // namespace ddm

template <>
struct std::hash<ddm::BasisWord> {
  std::size_t operator()(const ddm::BasisWord& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : w.letters()) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};
