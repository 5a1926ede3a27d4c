#pragma once

// Depth-bounded finite-quotient fingerprint of a finitely presented group:
// homomorphism counts into a catalogue of finite groups, plus the spectrum of
// low-index subgroup classes with their normality and first homology.

#include "seifert/homcount.hpp"
#include "seifert/invariants.hpp"
#include "seifert/low_index.hpp"
#include "seifert/perm_group.hpp"
#include "seifert/reidemeister_schreier.hpp"
#include "seifert/smith.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

struct CoverRecord {
  std::size_t index = 0;
  bool is_normal = false;
  AbelianGroup h1;

  auto operator<=>(const CoverRecord&) const = default;
  bool operator==(const CoverRecord&) const = default;
};

struct FingerprintDepth {
  std::size_t max_index = 0;
  std::string catalogue_id;

  auto operator<=>(const FingerprintDepth&) const = default;
  bool operator==(const FingerprintDepth&) const = default;
};

/// Equal fingerprints are necessary (not sufficient) for isomorphic
/// profinite completions at the recorded depth.
struct QuotientFingerprint {
  std::map<std::string, std::uint64_t> hom_counts;
  std::vector<CoverRecord> cover_spectrum;  // sorted; a multiset
  FingerprintDepth depth;

  bool operator==(const QuotientFingerprint&) const = default;
};

struct FingerprintLimits {
  HomSearchLimits hom;
  LowIndexLimits low_index;
};

/// First homology of every low-index subgroup class, via Reidemeister-Schreier
/// and Tietze simplification.
inline std::vector<CoverRecord> cover_spectrum(const Presentation& p, std::size_t max_index,
                                               const LowIndexLimits& limits = {}) {
  std::vector<CoverRecord> spectrum;
  for (const auto& t : low_index_subgroups(p, max_index, limits)) {
    Presentation sub = simplify(subgroup_presentation(p, t));
    spectrum.push_back({t.index, t.is_normal, first_homology(sub)});
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

inline QuotientFingerprint fingerprint(const Presentation& p, std::size_t max_index,
                                       const std::vector<FiniteGroupTable>& catalogue,
                                       const FingerprintLimits& limits = {}) {
  QuotientFingerprint fp;
  for (const auto& g : catalogue) fp.hom_counts[g.name()] = count_homomorphisms(p, g, limits.hom);
  fp.cover_spectrum = cover_spectrum(p, max_index, limits.low_index);
  fp.depth = {max_index, catalogue_id(catalogue)};
  return fp;
}

/// Human-readable description of the first place two fingerprints differ,
/// or nothing when they agree.
inline std::optional<std::string> first_difference(const QuotientFingerprint& a, const QuotientFingerprint& b) {
  if (a.depth != b.depth) return std::string("fingerprints were taken at different depths");
  for (const auto& [name, count] : a.hom_counts) {
    auto it = b.hom_counts.find(name);
    if (it == b.hom_counts.end()) return "catalogue group " + name + " missing";
    if (it->second != count)
      return "|Hom(-, " + name + ")|: " + std::to_string(count) + " vs " + std::to_string(it->second);
  }
  for (std::size_t index = 1; index <= a.depth.max_index; ++index) {
    auto at_index = [index](const QuotientFingerprint& f) {
      std::vector<CoverRecord> out;
      for (const auto& r : f.cover_spectrum)
        if (r.index == index) out.push_back(r);
      return out;
    };
    auto ra = at_index(a), rb = at_index(b);
    if (ra == rb) continue;
    if (ra.size() != rb.size())
      return "index " + std::to_string(index) + ": " + std::to_string(ra.size()) + " vs " +
             std::to_string(rb.size()) + " subgroup classes";
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (ra[i] != rb[i])
        return "index " + std::to_string(index) + " cover: H1 " + to_string(ra[i].h1) +
               (ra[i].is_normal ? " (normal)" : "") + " vs " + to_string(rb[i].h1) +
               (rb[i].is_normal ? " (normal)" : "");
  }
  if (a.hom_counts.size() != b.hom_counts.size()) return std::string("catalogues differ");
  return std::nullopt;
}

}  // namespace seifert
