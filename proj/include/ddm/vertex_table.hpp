#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddm/word.hpp"

namespace ddm {

/// Display labels for the vertex indices 0..n-1. Labels are nonempty, unique,
/// and free of whitespace and the separators ",[]:#".
class VertexTable {
 public:
  VertexTable() = default;
  explicit VertexTable(std::vector<std::string> labels);

  /// Labels "1".."n".
  static VertexTable numbered(std::size_t count);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(const std::string& label) const;

  /// Concatenated labels ("123") when every label is one character, otherwise
  /// comma-joined ("a1,b2").
  std::string join(std::span<const Vertex> letters) const;
  std::string word_label(const BasisWord& word) const { return join(word.letters()); }

  friend bool operator==(const VertexTable& a, const VertexTable& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  bool single_char_ = true;
};

/// True when the string is usable as a vertex label.
bool is_valid_label(const std::string& label);

}  // namespace ddm
