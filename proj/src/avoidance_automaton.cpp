#include "ddm/avoidance_automaton.hpp"

#include <map>
#include <utility>

namespace ddm {

namespace {

// progress[g] for each generator, followed by the last letter (vertex_count at start).
using State = std::vector<std::uint32_t>;

}  // namespace

AvoidanceAutomaton::AvoidanceAutomaton(const BasicIdeal& ideal) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.vertex_count();
  const std::size_t g = gens.size();

  std::map<State, std::uint32_t> ids;
  std::vector<State> states;
  State start(g + 1, 0);
  start[g] = static_cast<std::uint32_t>(n);
  ids.emplace(start, 0);
  states.push_back(start);
  transitions_.emplace_back();

  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Vertex a = 0; a < n; ++a) {
      if (states[s][g] == a) continue;
      State next = states[s];
      next[g] = a;
      bool dead = false;
      for (std::size_t k = 0; k < g; ++k) {
        if (gens[k][next[k]] == a && ++next[k] == gens[k].size()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      auto [it, inserted] = ids.emplace(next, static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        states.push_back(std::move(next));
        transitions_.emplace_back();
      }
      transitions_[s].push_back(it->second);
    }
  }

  // Iterative DFS: cycle detection plus longest path on the DAG case.
  enum : unsigned char { kWhite, kGrey, kBlack };
  std::vector<unsigned char> colour(states.size(), kWhite);
  std::vector<std::size_t> depth(states.size(), 0);  // longest path (edges) from the state
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
  colour[0] = kGrey;
  while (!stack.empty()) {
    auto& [state, edge] = stack.back();
    if (edge < transitions_[state].size()) {
      std::uint32_t next = transitions_[state][edge++];
      if (colour[next] == kGrey) {
        cyclic_ = true;
        return;
      }
      if (colour[next] == kWhite) {
        colour[next] = kGrey;
        stack.emplace_back(next, 0);
      }
      continue;
    }
    std::size_t best = 0;
    for (auto next : transitions_[state]) best = std::max(best, depth[next] + 1);
    depth[state] = best;
    colour[state] = kBlack;
    stack.pop_back();
  }
  longest_ = depth[0];
}

}  // namespace ddm
