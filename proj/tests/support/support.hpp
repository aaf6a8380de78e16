#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ddm/envelope.hpp"
#include "ddm/ideal.hpp"
#include "ddm/io.hpp"
#include "ddm/manifold.hpp"
#include "ddm/relation.hpp"
#include "ddm/simplicial.hpp"

namespace ddm::test {

using Rng = std::mt19937_64;

// "312" -> letters {2, 0, 1}; vertex labels are the digits 1..9.
inline BasisWord w(std::string_view digits) {
  std::vector<Vertex> letters;
  for (char c : digits) letters.push_back(static_cast<Vertex>(c - '1'));
  return *BasisWord::make(std::move(letters));
}

inline GradedForm form(std::string_view text, std::size_t n) {
  return io::parse_form(text, VertexTable::numbered(n));
}

inline std::string show(const GradedForm& f, std::size_t n) { return io::format_form(f, VertexTable::numbered(n)); }

inline DiscreteManifold family(std::size_t n, std::initializer_list<std::string_view> words) {
  std::vector<BasisWord> ws;
  for (auto s : words) ws.push_back(w(s));
  return DiscreteManifold::explicit_family(VertexTable::numbered(n), std::move(ws));
}

inline Relation relation(std::size_t n, std::initializer_list<std::pair<int, int>> one_based) {
  Relation r(n);
  for (auto [i, j] : one_based) r.relate(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
  return r;
}

inline std::vector<std::string> labels_of(const std::vector<BasisWord>& words) {
  std::vector<std::string> out;
  for (const auto& x : words) {
    std::string s;
    for (Vertex v : x.letters()) s += static_cast<char>('1' + v);
    out.push_back(s);
  }
  return out;
}

// --- oracles ----------------------------------------------------------------

inline bool naive_subsequence(const std::vector<Vertex>& sub, const std::vector<Vertex>& word) {
  // exhaustive over index subsets; only for short words
  const std::size_t n = word.size(), k = sub.size();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::size_t pos = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) ok = word[i] == sub[pos++];
    }
    if (ok) return true;
  }
  return false;
}

inline GradedForm vertex_differential(Vertex i, std::size_t n) {
  GradedForm out;
  for (Vertex k = 0; k < n; ++k) {
    if (k == i) continue;
    out.add_term(*BasisWord::make({k, i}), 1);
    out.add_term(*BasisWord::make({i, k}), -1);
  }
  return out;
}

// d e_{i0..ir} = d e_{i0} d e_{i1} ... d e_{ir}, using only the product.
inline GradedForm oracle_differential(const BasisWord& word, std::size_t n) {
  GradedForm acc = vertex_differential(word[0], n);
  for (std::size_t s = 1; s < word.size(); ++s) acc = form_product(acc, vertex_differential(word[s], n));
  return acc;
}

inline GradedForm oracle_product(const BasisWord& a, const BasisWord& b) {
  if (a.back() != b.front()) return {};
  std::vector<Vertex> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin() + 1, b.letters().end());
  return GradedForm(*BasisWord::make(letters));
}

// All adjacency-valid words of length <= max_len avoiding every generator; grows breadth-first.
inline std::vector<std::vector<Vertex>> brute_words(std::size_t n, const std::vector<BasisWord>& gens,
                                                    std::size_t max_len) {
  std::vector<std::vector<Vertex>> all, layer;
  for (Vertex v = 0; v < n; ++v) layer.push_back({v});
  auto alive = [&](const std::vector<Vertex>& word) {
    for (const auto& g : gens) {
      std::vector<Vertex> gl(g.letters().begin(), g.letters().end());
      // greedy embedding, written out independently of the library
      std::size_t pos = 0;
      for (Vertex x : word) {
        if (pos < gl.size() && gl[pos] == x) ++pos;
      }
      if (pos == gl.size()) return false;
    }
    return true;
  };
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<Vertex>> next;
    for (auto& word : layer) {
      if (!alive(word)) continue;
      all.push_back(word);
      for (Vertex v = 0; v < n; ++v) {
        if (v == word.back()) continue;
        auto ext = word;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  return all;
}

// --- generators -------------------------------------------------------------

inline Relation random_reflexive(Rng& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Relation r(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && coin(rng)) r.relate(i, j);
  return r;
}

inline Relation random_antisymmetric(Rng& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density), flip(0.5);
  Relation r(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) flip(rng) ? r.relate(i, j) : r.relate(j, i);
  return r;
}

inline bool contains_subword_of(const BasisWord& word, const std::vector<BasisWord>& removed) {
  for (const auto& r : removed)
    if (naive_subsequence(std::vector<Vertex>(r.letters().begin(), r.letters().end()),
                          std::vector<Vertex>(word.letters().begin(), word.letters().end())))
      return true;
  return false;
}

// Finite-dimensional manifold, |M| <= 6, dim <= 3: a network family truncated at grade 3, then
// (half of the time) pruned by deleting random words of grade >= 1 together with their superwords.
inline DiscreteManifold random_finite_manifold(Rng& rng, bool* pruned = nullptr) {
  std::uniform_int_distribution<std::size_t> size_dist(1, 6);
  std::uniform_real_distribution<double> density_dist(0.2, 0.9);
  const std::size_t n = size_dist(rng);
  auto rel = random_antisymmetric(rng, n, density_dist(rng));
  auto net = from_relation_network(rel, VertexTable::numbered(n));
  std::vector<BasisWord> words;
  for (const auto& x : net.words())
    if (x.grade() <= 3) words.push_back(x);

  std::bernoulli_distribution prune(0.5);
  const bool do_prune = prune(rng) && words.size() > n;
  if (pruned) *pruned = do_prune;
  if (do_prune) {
    std::vector<BasisWord> candidates;
    for (const auto& x : words)
      if (x.grade() >= 1) candidates.push_back(x);
    std::uniform_int_distribution<std::size_t> count_dist(1, std::min<std::size_t>(3, candidates.size()));
    std::vector<BasisWord> removed;
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(removed), count_dist(rng), rng);
    std::erase_if(words, [&](const BasisWord& x) { return contains_subword_of(x, removed); });
  }
  return DiscreteManifold::explicit_family(VertexTable::numbered(n), std::move(words));
}

inline BasicIdeal random_antichain_ideal(Rng& rng, std::size_t n, std::size_t max_grade, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> grade_dist(1, max_grade), count_dist(0, max_gens);
  std::uniform_int_distribution<Vertex> letter(0, static_cast<Vertex>(n - 1));
  std::vector<BasisWord> words;
  const std::size_t count = n < 2 ? 0 : count_dist(rng);
  while (words.size() < count) {
    const std::size_t len = grade_dist(rng) + 1;
    std::vector<Vertex> letters{letter(rng)};
    while (letters.size() < len) {
      Vertex v = letter(rng);
      if (v != letters.back()) letters.push_back(v);
    }
    words.push_back(*BasisWord::make(letters));
  }
  return BasicIdeal::normalize_generators(n, std::move(words));
}

}  // namespace ddm::test
