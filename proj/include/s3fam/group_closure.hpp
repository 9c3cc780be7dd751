// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace s3fam {

/// Thrown when a closure exceeds its cap: the generators are either not a
/// finite group or the equality tolerance fails to separate elements.
class ClosureOverflow : public std::runtime_error {
 public:
  explicit ClosureOverflow(std::size_t cap)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap)) {}
};

/// Finite transform group produced by group_closure. Element type E must
/// provide compose, inverse, distance and a static identity().
template <class E>
struct FiniteGroup {
  std::vector<E> elements;  // elements[0] is the identity
  std::vector<E> generators;
};

/// Closes a generator set under composition and inverse, deduplicating by
/// distance < eq_tolerance. Breadth-first products; caps at `cap` elements.
template <class E>
FiniteGroup<E> group_closure(const std::vector<E>& generators, double eq_tolerance,
                             std::size_t cap = 10000) {
  FiniteGroup<E> g;
  g.generators = generators;
  g.elements.push_back(E::identity());

  std::vector<E> gens_and_inverses;
  for (const E& e : generators) {
    gens_and_inverses.push_back(e);
    gens_and_inverses.push_back(e.inverse());
  }

  auto known = [&](const E& e) {
    for (const E& k : g.elements)
      if (k.distance(e) < eq_tolerance) return true;
    return false;
  };

  std::size_t frontier_begin = 0;
  while (frontier_begin < g.elements.size()) {
    std::size_t frontier_end = g.elements.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const E& s : gens_and_inverses) {
        E candidate = g.elements[i].compose(s);
        if (!known(candidate)) {
          if (g.elements.size() >= cap) throw ClosureOverflow(cap);
          g.elements.push_back(candidate);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return g;
}

struct RelationResidual {
  std::vector<int> word;  // 1-based generator indices, negative = inverse
  double residual = 0.0;
};

/// Evaluates a word (rightmost letter applied first) over the generators.
template <class E>
E evaluate_word(const std::vector<E>& generators, const std::vector<int>& word) {
  E acc = E::identity();
  for (int letter : word) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators.size())
      throw std::invalid_argument("evaluate_word: letter out of range");
    const E& gen = generators[static_cast<std::size_t>(std::abs(letter)) - 1];
    acc = acc.compose(letter > 0 ? gen : gen.inverse());
  }
  return acc;
}

/// Distance of each word's product to the identity.
template <class E>
std::vector<RelationResidual> verify_relations(const std::vector<E>& generators,
                                               const std::vector<std::vector<int>>& words) {
  std::vector<RelationResidual> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    RelationResidual r;
    r.word = w;
    r.residual = evaluate_word(generators, w).distance(E::identity());
    out.push_back(std::move(r));
  }
  return out;
}

/// Convenience: a word of n copies of the same letter.
inline std::vector<int> word_pow(int letter, int n) {
  return std::vector<int>(static_cast<std::size_t>(n), letter);
}

inline std::vector<int> word_concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

}  // namespace s3fam
