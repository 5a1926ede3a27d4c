#pragma once

// Homomorphism and epimorphism counting from a finitely presented group into
// a finite permutation group by backtracking over generator images.

#include "seifert/errors.hpp"
#include "seifert/perm_group.hpp"
#include "seifert/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <limits>
#include <vector>

namespace seifert {

struct HomSearchLimits {
  std::uint64_t max_nodes = 4'000'000'000ULL;
};

namespace detail {

// Generators are assigned in a fixed greedy order and images in the group's
// lexicographic element order. Every relator is evaluated as soon as the last
// generator it mentions has an image, so a failing prefix assignment prunes
// its whole subtree.
class HomSearch {
 public:
  HomSearch(const Presentation& p, const FiniteGroupTable& g, const HomSearchLimits& limits)
      : group_(g), limits_(limits), images_(p.generator_count(), 0), mentioned_(p.generator_count(), 0) {
    p.validate();
    for (const auto& r : p.relators) {
      Word w = cyclic_reduce(r);
      if (w.empty()) continue;
      for (Letter l : w) mentioned_[letter_index(l)] = 1;
      relators_.push_back(std::move(w));
    }
    order_ = search_order(p.generator_count());
    std::vector<std::size_t> level_of(p.generator_count());
    for (std::size_t i = 0; i < order_.size(); ++i) level_of[order_[i]] = i;
    check_at_.resize(order_.size());
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
      std::size_t last = 0;
      for (Letter l : relators_[ri]) last = std::max(last, level_of[letter_index(l)]);
      check_at_[last].push_back(ri);
    }
  }

  bool mentioned(std::size_t generator) const { return mentioned_[generator] != 0; }

  /// Calls leaf(images) for every assignment satisfying all relators, with
  /// generators outside `active` left at the identity.
  template <class Leaf>
  void run(const std::vector<char>& active, Leaf&& leaf) {
    nodes_ = 0;
    descend(0, active, leaf);
  }

  const std::vector<std::uint32_t>& images() const { return images_; }

 private:
  // Greedy order: repeatedly take the generator that completes the most
  // relators, breaking ties by the number of relators it occurs in and then
  // by presentation order.
  std::vector<std::size_t> search_order(std::size_t gens) const {
    std::vector<std::vector<std::size_t>> occurs(relators_.size());
    std::vector<std::size_t> weight(gens, 0);
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
      for (Letter l : relators_[ri]) occurs[ri].push_back(letter_index(l));
      std::sort(occurs[ri].begin(), occurs[ri].end());
      occurs[ri].erase(std::unique(occurs[ri].begin(), occurs[ri].end()), occurs[ri].end());
      for (auto x : occurs[ri]) ++weight[x];
    }
    std::vector<char> placed(gens, 0);
    std::vector<std::size_t> order;
    while (order.size() < gens) {
      std::size_t best = gens, best_done = 0;
      for (std::size_t x = 0; x < gens; ++x) {
        if (placed[x]) continue;
        std::size_t done = 0;
        for (const auto& occ : occurs)
          if (std::binary_search(occ.begin(), occ.end(), x) &&
              std::all_of(occ.begin(), occ.end(), [&](std::size_t y) { return y == x || placed[y]; }))
            ++done;
        if (best == gens || std::tie(done, weight[x]) > std::tie(best_done, weight[best])) {
          best = x;
          best_done = done;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
    return order;
  }

  bool holds(const Word& w) const {
    std::uint32_t x = group_.identity();
    for (Letter l : w) {
      std::uint32_t y = images_[letter_index(l)];
      x = group_.multiply(x, l > 0 ? y : group_.inverse(y));
    }
    return x == group_.identity();
  }

  template <class Leaf>
  void descend(std::size_t level, const std::vector<char>& active, Leaf& leaf) {
    if (level == images_.size()) {
      leaf(images_);
      return;
    }
    const std::size_t g = order_[level];
    const std::uint32_t choices = active[g] ? static_cast<std::uint32_t>(group_.order()) : 1;
    for (std::uint32_t x = 0; x < choices; ++x) {
      if (++nodes_ > limits_.max_nodes) throw ResourceError("homomorphism search exceeded its node cap");
      images_[g] = x;
      bool ok = true;
      for (auto ri : check_at_[level])
        if (!holds(relators_[ri])) {
          ok = false;
          break;
        }
      if (ok) descend(level + 1, active, leaf);
    }
    images_[g] = group_.identity();
  }

  const FiniteGroupTable& group_;
  HomSearchLimits limits_;
  std::vector<Word> relators_;
  std::vector<std::uint32_t> images_;
  std::vector<std::size_t> order_;  // level -> generator
  std::vector<std::vector<std::size_t>> check_at_;  // level -> relators completed there
  std::vector<char> mentioned_;
  std::uint64_t nodes_ = 0;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("homomorphism count overflows 64 bits");
  return out;
}

}  // namespace detail

/// |Hom(G, F)| where G is given by `p`. Generators that occur in no relator
/// contribute a factor |F| each without being enumerated.
inline std::uint64_t count_homomorphisms(const Presentation& p, const FiniteGroupTable& f,
                                         const HomSearchLimits& limits = {}) {
  detail::HomSearch search(p, f, limits);
  std::vector<char> active(p.generator_count());
  std::uint64_t free_factor = 1;
  for (std::size_t i = 0; i < active.size(); ++i) {
    active[i] = search.mentioned(i);
    if (!active[i]) free_factor = detail::checked_mul(free_factor, f.order());
  }
  std::uint64_t count = 0;
  search.run(active, [&count](const std::vector<std::uint32_t>&) { ++count; });
  return detail::checked_mul(count, free_factor);
}

/// Number of surjective homomorphisms G -> F.
inline std::uint64_t count_epimorphisms(const Presentation& p, const FiniteGroupTable& f,
                                        const HomSearchLimits& limits = {}) {
  detail::HomSearch search(p, f, limits);
  std::vector<char> active(p.generator_count(), 1);
  std::uint64_t count = 0;
  search.run(active, [&](const std::vector<std::uint32_t>& images) {
    if (f.generated_order(images) == f.order()) ++count;
  });
  return count;
}

}  // namespace seifert
