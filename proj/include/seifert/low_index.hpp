#pragma once

// Low-index subgroup enumeration: backtracking over partial coset tables with
// relator scanning for deductions, one table per conjugacy class.

#include "seifert/errors.hpp"
#include "seifert/presentation.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <tuple>
#include <vector>

namespace seifert {

/// Transitive action of the free group on cosets 0..index-1 in which every
/// relator acts trivially. Coset 0 is the subgroup itself. Column 2g holds
/// the action of generator g, column 2g+1 the action of its inverse.
struct CosetTable {
  std::size_t index = 0;
  std::size_t generator_count = 0;
  std::vector<std::int32_t> table;
  bool is_normal = false;

  std::size_t columns() const { return 2 * generator_count; }

  std::size_t act(std::size_t coset, Letter l) const {
    std::size_t col = 2 * letter_index(l) + (l < 0 ? 1 : 0);
    return static_cast<std::size_t>(table[coset * columns() + col]);
  }

  bool operator==(const CosetTable&) const = default;
};

struct LowIndexLimits {
  std::size_t max_index = 12;
  std::uint64_t max_nodes = 200'000'000;
};

namespace detail {

/// Renumbers the cosets of a complete table in order of first appearance
/// (rows in order, columns in order), starting from `base`.
inline std::vector<std::int32_t> standardize(const std::vector<std::int32_t>& t, std::size_t n,
                                             std::size_t cols, std::size_t base) {
  std::vector<std::int32_t> pos(n, -1);
  std::vector<std::size_t> order;
  order.reserve(n);
  pos[base] = 0;
  order.push_back(base);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t col = 0; col < cols; ++col) {
      auto d = static_cast<std::size_t>(t[order[k] * cols + col]);
      if (pos[d] < 0) {
        pos[d] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
      }
    }
  std::vector<std::int32_t> out(n * cols);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < cols; ++col)
      out[r * cols + col] = pos[static_cast<std::size_t>(t[order[r] * cols + col])];
  return out;
}

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index, const LowIndexLimits& limits)
      : gens_(p.generator_count()), cols_(2 * gens_), max_index_(max_index), limits_(limits),
        table_(max_index * cols_, -1) {
    for (const auto& r : p.relators) {
      Word w = cyclic_reduce(r);
      if (w.empty()) continue;
      std::vector<std::size_t> cw;
      for (Letter l : w) cw.push_back(2 * letter_index(l) + (l < 0 ? 1 : 0));
      relators_.push_back(std::move(cw));
    }
  }

  std::vector<CosetTable> run() {
    if (propagate()) descend();
    std::sort(found_.begin(), found_.end(), [](const CosetTable& a, const CosetTable& b) {
      return std::tie(a.index, a.table) < std::tie(b.index, b.table);
    });
    return std::move(found_);
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  bool assign(std::size_t c, std::size_t col, std::size_t d) {
    std::int32_t& fwd = at(c, col);
    std::int32_t& back = at(d, col ^ 1);
    if (fwd >= 0) return fwd == static_cast<std::int32_t>(d);
    if (back >= 0) return false;
    fwd = static_cast<std::int32_t>(d);
    back = static_cast<std::int32_t>(c);
    trail_.push_back(c * cols_ + col);
    trail_.push_back(d * cols_ + (col ^ 1));
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // One scan of relator w from coset c. Returns false on a contradiction.
  bool scan(std::size_t c, const std::vector<std::size_t>& w, bool& changed) {
    const std::size_t len = w.size();
    std::size_t f = c, i = 0;
    while (i < len && at(f, w[i]) >= 0) f = static_cast<std::size_t>(at(f, w[i++]));
    if (i == len) return f == c;
    std::size_t b = c, j = len;
    while (j > i && at(b, w[j - 1] ^ 1) >= 0) b = static_cast<std::size_t>(at(b, w[--j] ^ 1));
    if (j == i) return false;  // a closed loop would have been found going forward
    if (j == i + 1) {
      if (!assign(f, w[i], b)) return false;
      changed = true;
    }
    return true;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < count_; ++c)
        for (const auto& w : relators_)
          if (!scan(c, w, changed)) return false;
    }
    return true;
  }

  void descend() {
    if (++nodes_ > limits_.max_nodes) throw ResourceError("low-index search exceeded its node cap");
    std::size_t c = 0, col = 0;
    bool open = false;
    for (std::size_t k = 0; k < count_ * cols_ && !open; ++k)
      if (table_[k] < 0) {
        c = k / cols_;
        col = k % cols_;
        open = true;
      }
    if (!open) {
      record();
      return;
    }
    for (std::size_t d = 0; d < count_; ++d) {
      if (at(d, col ^ 1) >= 0) continue;
      std::size_t mark = trail_.size();
      if (assign(c, col, d) && propagate()) descend();
      undo(mark);
    }
    if (count_ < max_index_) {
      std::size_t mark = trail_.size();
      ++count_;
      if (assign(c, col, count_ - 1) && propagate()) descend();
      undo(mark);
      --count_;
    }
  }

  // Keeps the table only if it is the least standardized table over all base
  // points, i.e. the chosen representative of its conjugacy class.
  void record() {
    const std::size_t n = count_;
    std::vector<std::int32_t> current(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n * cols_));
    bool normal = true;
    for (std::size_t base = 1; base < n; ++base) {
      auto other = standardize(current, n, cols_, base);
      if (other < current) return;
      if (other != current) normal = false;
    }
    found_.push_back(CosetTable{n, gens_, std::move(current), normal});
  }

  std::size_t gens_, cols_, max_index_;
  LowIndexLimits limits_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> trail_;
  std::size_t count_ = 1;
  std::uint64_t nodes_ = 0;
  std::vector<CosetTable> found_;
};

}  // namespace detail

/// One coset table per conjugacy class of subgroups of index <= max_index,
/// sorted by (index, table).
inline std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                                   const LowIndexLimits& limits = {}) {
  p.validate();
  if (max_index == 0) throw DomainError("max_index must be positive");
  if (max_index > limits.max_index)
    throw ResourceError("max_index " + std::to_string(max_index) + " exceeds the configured cap of " +
                        std::to_string(limits.max_index));
  return detail::LowIndexSearch(p, max_index, limits).run();
}

/// True when `t` is a complete, transitive action of the presentation's
/// generators on which every relator acts trivially.
inline bool is_valid_coset_table(const Presentation& p, const CosetTable& t) {
  if (t.generator_count != p.generator_count() || t.index == 0 || t.table.size() != t.index * t.columns())
    return false;
  for (std::size_t c = 0; c < t.index; ++c)
    for (std::size_t col = 0; col < t.columns(); ++col) {
      auto d = t.table[c * t.columns() + col];
      if (d < 0 || static_cast<std::size_t>(d) >= t.index) return false;
      if (t.table[static_cast<std::size_t>(d) * t.columns() + (col ^ 1)] != static_cast<std::int32_t>(c)) return false;
    }
  std::vector<char> seen(t.index, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t col = 0; col < t.columns(); ++col) {
      auto d = static_cast<std::size_t>(t.table[c * t.columns() + col]);
      if (!seen[d]) {
        seen[d] = 1;
        stack.push_back(d);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  for (const auto& r : p.relators)
    for (std::size_t c = 0; c < t.index; ++c) {
      std::size_t x = c;
      for (Letter l : r) x = t.act(x, l);
      if (x != c) return false;
    }
  return true;
}

}  // namespace seifert
