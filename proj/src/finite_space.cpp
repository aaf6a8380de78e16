#include "ddm/finite_space.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "ddm/error.hpp"

namespace ddm {

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<PointSet> min_open)
    : labels_(std::move(labels)), min_open_(std::move(min_open)) {
  const std::size_t n = labels_.size();
  if (min_open_.size() != n) throw Error(ErrorCode::InvalidSpace, "label and min_open counts differ");
  for (std::size_t x = 0; x < n; ++x) {
    if (min_open_[x].size() != n) throw Error(ErrorCode::InvalidSpace, "min_open has wrong width");
    if (!min_open_[x].test(x)) {
      throw Error(ErrorCode::InvalidSpace, "point " + labels_[x] + " is not in its own minimal open set");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = min_open_[x].find_first(); y != PointSet::npos; y = min_open_[x].find_next(y)) {
      if (!min_open_[y].is_subset_of(min_open_[x])) {
        throw Error(ErrorCode::InvalidSpace,
                    "min_open(" + labels_[y] + ") is not inside min_open(" + labels_[x] + ")");
      }
    }
  }
}

std::optional<std::size_t> FiniteSpace::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

FiniteSpace FiniteSpace::relabeled(std::vector<std::string> labels) const {
  return FiniteSpace(std::move(labels), min_open_);
}

FiniteSpace generated_space(const DiscreteManifold& m) {
  DiscreteManifold finite = to_explicit(m);
  const auto words = finite.words();
  const std::size_t n = words.size();
  std::vector<std::string> labels;
  std::vector<PointSet> min_open(n, PointSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(finite.vertices().word_label(words[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (is_subword(words[a], words[b])) min_open[a].set(b);
    }
  }
  return FiniteSpace(std::move(labels), std::move(min_open));
}

bool is_t0(const FiniteSpace& space) {
  std::vector<PointSet> sets;
  for (std::size_t x = 0; x < space.size(); ++x) sets.push_back(space.min_open(x));
  std::sort(sets.begin(), sets.end());
  return std::adjacent_find(sets.begin(), sets.end()) == sets.end();
}

SpaceQuotient t0_quotient(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> representative;
  std::map<PointSet, std::size_t> seen;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = seen.emplace(space.min_open(x), representative.size());
    if (inserted) representative.push_back(x);
    class_of[x] = it->second;
  }
  const std::size_t k = representative.size();
  std::vector<std::string> labels;
  std::vector<PointSet> min_open(k, PointSet(k));
  for (std::size_t c = 0; c < k; ++c) {
    const auto& open = space.min_open(representative[c]);
    labels.push_back(space.label(representative[c]));
    for (auto y = open.find_first(); y != PointSet::npos; y = open.find_next(y)) {
      min_open[c].set(class_of[y]);
    }
  }
  return {FiniteSpace(std::move(labels), std::move(min_open)), std::move(class_of)};
}

std::vector<std::pair<std::size_t, std::size_t>> specialization_order(const FiniteSpace& space) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (space.leq(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

bool strictly_below(const FiniteSpace& s, std::size_t x, std::size_t y) {
  return x != y && s.leq(x, y) && !s.leq(y, x);
}

}  // namespace

HasseDiagram hasse(const FiniteSpace& space) {
  const std::size_t n = space.size();
  HasseDiagram out;
  out.nodes = space.labels();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!strictly_below(space, x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) {
        if (strictly_below(space, x, z) && strictly_below(space, z, y)) covered = false;
      }
      if (covered) out.edges.emplace_back(x, y);
    }
  }
  // Levels by relaxation over the strict order; n passes suffice.
  out.levels.assign(n, 0);
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (auto [lo, hi] : out.edges) {
      if (out.levels[hi] < out.levels[lo] + 1) {
        out.levels[hi] = out.levels[lo] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return out;
}

std::vector<PointSet> open_sets(const FiniteSpace& space) {
  const std::size_t n = space.size();
  if (n > kMaxOpenSetPoints) {
    throw Error(ErrorCode::TooLarge, "open-set enumeration limited to " +
                                         std::to_string(kMaxOpenSetPoints) + " points, got " +
                                         std::to_string(n));
  }
  std::vector<std::uint32_t> down(n);
  for (std::size_t x = 0; x < n; ++x) down[x] = static_cast<std::uint32_t>(space.min_open(x).to_ulong());
  std::vector<PointSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x) {
      if ((mask >> x & 1U) && (down[x] & ~mask) != 0) open = false;
    }
    if (open) out.emplace_back(n, mask);
  }
  return out;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteSpace& s) {
  const std::size_t n = s.size();
  HasseDiagram h = hasse(s);
  std::vector<std::size_t> up(n, 0), lower_covers(n, 0), upper_covers(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (s.leq(x, y)) ++up[x];
    }
  }
  for (auto [lo, hi] : h.edges) {
    ++upper_covers[lo];
    ++lower_covers[hi];
  }
  std::vector<Signature> out;
  for (std::size_t x = 0; x < n; ++x) {
    out.emplace_back(s.min_open(x).count(), up[x], lower_covers[x], upper_covers[x], h.levels[x]);
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteSpace& a, const FiniteSpace& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = a_.size();
    if (n != b_.size()) return std::nullopt;
    auto sa = signatures(a_);
    auto sb = signatures(b_);
    {
      auto x = sa, y = sb;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return std::nullopt;
    }
    candidates_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (sa[x] == sb[y]) candidates_[x].push_back(y);
      }
      std::stable_partition(candidates_[x].begin(), candidates_[x].end(),
                            [&](std::size_t y) { return b_.label(y) == a_.label(x); });
    }
    plan_order();
    map_.assign(n, kUnset);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool comparable(const FiniteSpace& s, std::size_t x, std::size_t y) const {
    return s.leq(x, y) || s.leq(y, x);
  }

  // Points tied to many already-placed points first, then the tightest candidate lists.
  void plan_order() {
    const std::size_t n = a_.size();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    order_.clear();
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kUnset;
      for (std::size_t x = 0; x < n; ++x) {
        if (placed[x]) continue;
        if (best == kUnset || links[x] > links[best] ||
            (links[x] == links[best] && candidates_[x].size() < candidates_[best].size())) {
          best = x;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t x = 0; x < n; ++x) {
        if (!placed[x] && comparable(a_, x, best)) ++links[x];
      }
    }
  }

  bool consistent(std::size_t x, std::size_t y, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t u = order_[k];
      std::size_t v = map_[u];
      if (a_.leq(x, u) != b_.leq(y, v) || a_.leq(u, x) != b_.leq(v, y)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t x = order_[depth];
    for (std::size_t y : candidates_[x]) {
      if (used_[y] || !consistent(x, y, depth)) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = kUnset;
    }
    return false;
  }

  const FiniteSpace& a_;
  const FiniteSpace& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const FiniteSpace& a, const FiniteSpace& b) {
  return IsomorphismSearch(a, b).run();
}

std::string to_dot(const HasseDiagram& diagram, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  std::size_t top = 0;
  for (auto level : diagram.levels) top = std::max(top, level);
  for (std::size_t level = 0; level <= top && !diagram.nodes.empty(); ++level) {
    out << "  { rank=same;";
    for (std::size_t x = 0; x < diagram.nodes.size(); ++x) {
      if (diagram.levels[x] == level) out << ' ' << dot_id(diagram.nodes[x]) << ';';
    }
    out << " }\n";
  }
  for (auto [lo, hi] : diagram.edges) {
    out << "  " << dot_id(diagram.nodes[lo]) << " -> " << dot_id(diagram.nodes[hi]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json to_json(const FiniteSpace& space) {
  nlohmann::ordered_json j;
  j["points"] = space.labels();
  nlohmann::ordered_json opens = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::vector<std::string> members;
    const auto& open = space.min_open(x);
    for (auto y = open.find_first(); y != PointSet::npos; y = open.find_next(y)) {
      members.push_back(space.label(y));
    }
    opens[space.label(x)] = members;
  }
  j["min_open"] = std::move(opens);
  return j;
}

}  // namespace ddm
