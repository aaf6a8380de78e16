#include "ddm/word.hpp"

#include <string>

#include "ddm/error.hpp"

namespace ddm {

BasisWord BasisWord::validate(std::span<const Vertex> letters, std::size_t vertex_count) {
  if (letters.empty()) throw Error(ErrorCode::EmptyWord, "basis word has no letters");
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] >= vertex_count) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(letters[k]) + " at position " + std::to_string(k) +
                      " is outside a vertex set of size " + std::to_string(vertex_count));
    }
    if (k > 0 && letters[k] == letters[k - 1]) {
      throw Error(ErrorCode::EqualAdjacentLetters,
                  "equal adjacent letters at positions " + std::to_string(k - 1) + "," +
                      std::to_string(k));
    }
  }
  return BasisWord(std::vector<Vertex>(letters.begin(), letters.end()));
}

std::optional<BasisWord> BasisWord::make(std::vector<Vertex> letters) {
  if (letters.empty()) return std::nullopt;
  for (std::size_t k = 1; k < letters.size(); ++k) {
    if (letters[k] == letters[k - 1]) return std::nullopt;
  }
  return BasisWord(std::move(letters));
}

std::vector<BasisWord> enumerate_basis(std::size_t vertex_count, std::size_t grade) {
  std::vector<BasisWord> out;
  if (vertex_count == 0) return out;
  std::vector<Vertex> letters(grade + 1, 0);
  // Odometer over all sequences, skipping the ones with equal neighbours.
  auto advance = [&]() {
    for (std::size_t k = letters.size(); k-- > 0;) {
      if (++letters[k] < vertex_count) return true;
      letters[k] = 0;
    }
    return false;
  };
  do {
    if (auto w = BasisWord::make(letters)) out.push_back(std::move(*w));
  } while (advance());
  return out;
}

bool is_subword(const BasisWord& sub, const BasisWord& word) {
  if (sub.size() > word.size()) return false;
  std::size_t matched = 0;
  for (Vertex v : word.letters()) {
    if (v == sub[matched] && ++matched == sub.size()) return true;
  }
  return false;
}

}  // namespace ddm
