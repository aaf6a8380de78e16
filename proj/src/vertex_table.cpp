#include "ddm/vertex_table.hpp"

#include <algorithm>
#include <cctype>

#include "ddm/error.hpp"

namespace ddm {

bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']' ||
           c == ':' || c == '#';
  });
}

VertexTable::VertexTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (!is_valid_label(labels_[k])) {
      throw Error(ErrorCode::InvalidArgument, "invalid vertex label '" + labels_[k] + "'");
    }
    if (!index_.emplace(labels_[k], static_cast<Vertex>(k)).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + labels_[k] + "'");
    }
    single_char_ = single_char_ && labels_[k].size() == 1;
  }
}

VertexTable VertexTable::numbered(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) labels.push_back(std::to_string(k));
  return VertexTable(std::move(labels));
}

std::optional<Vertex> VertexTable::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string VertexTable::join(std::span<const Vertex> letters) const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0 && !single_char_) out += ',';
    out += label(letters[k]);
  }
  return out;
}

}  // namespace ddm
