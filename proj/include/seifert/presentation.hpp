#pragma once

#include "seifert/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

/// Generator i (0-based) is the letter i + 1; its inverse is -(i + 1).
using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen(std::size_t i) { return static_cast<Letter>(i) + 1; }
inline Letter inv(Letter l) { return -l; }
inline std::size_t letter_index(Letter l) { return static_cast<std::size_t>(std::abs(l)) - 1; }

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// x^n for a single letter; negative n gives the inverse power.
inline Word letter_power(Letter x, long long n) {
  return Word(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? -x : x);
}

/// [x, y] = x y x^-1 y^-1
inline Word commutator(Letter x, Letter y) { return {x, y, -x, -y}; }

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Finite group presentation. `distinguished` marks the regular-fibre
/// generator h when the presentation comes from a Seifert symbol.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::optional<std::size_t> distinguished;

  std::size_t generator_count() const { return generators.size(); }

  void validate() const {
    for (const auto& r : relators)
      for (Letter l : r)
        if (l == 0 || letter_index(l) >= generators.size())
          throw DomainError("relator references an unknown generator");
    if (distinguished && *distinguished >= generators.size())
      throw DomainError("distinguished generator out of range");
  }
};

inline std::string render_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long exponent = static_cast<long long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (!out.empty()) out += "*";
    out += p.generators[letter_index(w[i])];
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

inline std::string render_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : " ") + p.generators[i];
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : " ") + render_word(p, p.relators[i]);
  return out + " >";
}

namespace detail {

// Replaces every occurrence of generator `x` by `replacement` and drops the
// generator from the alphabet (indices above x shift down by one).
inline void substitute_generator(Presentation& p, std::size_t x, const Word& replacement) {
  Word replacement_inv = inverse(replacement);
  auto shift = [x](Letter l) {
    std::size_t i = letter_index(l);
    if (i > x) return l > 0 ? l - 1 : l + 1;
    return l;
  };
  for (auto& r : p.relators) {
    Word out;
    for (Letter l : r) {
      if (letter_index(l) == x) {
        const Word& sub = l > 0 ? replacement : replacement_inv;
        for (Letter s : sub) out.push_back(shift(s));
      } else {
        out.push_back(shift(l));
      }
    }
    r = cyclic_reduce(out);
  }
  p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(x));
  if (p.distinguished) {
    if (*p.distinguished == x)
      p.distinguished.reset();
    else if (*p.distinguished > x)
      --*p.distinguished;
  }
}

inline void tidy_relators(Presentation& p) {
  std::vector<Word> kept;
  for (auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    // a relator and its inverse are the same constraint
    Word ci = inverse(c);
    if (ci < c) c = ci;
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  p.relators = std::move(kept);
}

}  // namespace detail

/// Tietze simplification: repeatedly removes a generator that occurs exactly
/// once in some relator, substituting its expression elsewhere. Stops before
/// the total relator length would exceed `length_cap`.
inline Presentation simplify(Presentation p, std::size_t length_cap = 20000) {
  detail::tidy_relators(p);
  for (;;) {
    std::size_t best_rel = 0, best_gen = 0, best_len = 0;
    bool found = false;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      const Word& r = p.relators[ri];
      if (found && r.size() >= best_len) continue;
      std::vector<int> count(p.generators.size(), 0);
      for (Letter l : r) ++count[letter_index(l)];
      for (std::size_t g = 0; g < count.size(); ++g) {
        if (count[g] == 1 && !(p.distinguished && *p.distinguished == g)) {
          best_rel = ri;
          best_gen = g;
          best_len = r.size();
          found = true;
          break;
        }
      }
    }
    if (!found) break;

    const Word r = p.relators[best_rel];
    auto pos = std::find_if(r.begin(), r.end(), [&](Letter l) { return letter_index(l) == best_gen; });
    Word before(r.begin(), pos), after(pos + 1, r.end());
    // before * x^e * after = 1
    Word value = *pos > 0 ? concat(inverse(before), inverse(after)) : concat(after, before);

    std::size_t uses = 0, total = 0;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      if (ri == best_rel) continue;
      total += p.relators[ri].size();
      for (Letter l : p.relators[ri]) uses += letter_index(l) == best_gen;
    }
    if (total + uses * value.size() > length_cap) break;

    p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(best_rel));
    detail::substitute_generator(p, best_gen, value);
    detail::tidy_relators(p);
  }
  return p;
}

}  // namespace seifert
