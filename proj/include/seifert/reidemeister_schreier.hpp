#pragma once

#include "seifert/errors.hpp"
#include "seifert/low_index.hpp"
#include "seifert/presentation.hpp"

#include <string>
#include <vector>

namespace seifert {

/// Reidemeister-Schreier presentation of the subgroup described by `t`.
///
/// The Schreier transversal is the breadth-first spanning tree of the action
/// graph (rows in order, columns in order). There is one Schreier generator
/// "x@c" for every edge c --x--> c.x outside the tree, and one rewritten
/// relator for every (coset, relator) pair. Without simplification the
/// generator count is index * (gens - 1) + 1.
inline Presentation subgroup_presentation(const Presentation& p, const CosetTable& t) {
  if (!is_valid_coset_table(p, t)) throw DomainError("coset table does not match the presentation");
  const std::size_t n = t.index, gens = p.generator_count();

  // in_tree[c * gens + g]: the edge c --g--> c.g belongs to the spanning tree
  std::vector<char> in_tree(n * gens, 0), seen(n, 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t c = queue[k];
    for (std::size_t col = 0; col < t.columns(); ++col) {
      auto d = static_cast<std::size_t>(t.table[c * t.columns() + col]);
      if (seen[d]) continue;
      seen[d] = 1;
      queue.push_back(d);
      const std::size_t g = col / 2;
      in_tree[(col % 2 == 0 ? c : d) * gens + g] = 1;
    }
  }

  Presentation out;
  std::vector<int> schreier(n * gens, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      if (in_tree[c * gens + g]) continue;
      out.generators.push_back(p.generators[g] + "@" + std::to_string(c));
      schreier[c * gens + g] = static_cast<int>(out.generators.size());
    }

  for (const auto& r : p.relators)
    for (std::size_t c = 0; c < n; ++c) {
      Word w;
      std::size_t x = c;
      for (Letter l : r) {
        const std::size_t g = letter_index(l);
        if (l > 0) {
          if (int s = schreier[x * gens + g]) w.push_back(s);
          x = t.act(x, l);
        } else {
          const std::size_t prev = t.act(x, l);
          if (int s = schreier[prev * gens + g]) w.push_back(-s);
          x = prev;
        }
      }
      out.relators.push_back(cyclic_reduce(w));
    }
  return out;
}

}  // namespace seifert
