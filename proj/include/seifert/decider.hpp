#pragma once

// Profinite-equivalence verdicts for Seifert fibre spaces and 2-orbifolds.
//
// Closed spaces: geometries with a unique Seifert structure and nonzero Euler
// number are profinitely rigid; with zero Euler number over a hyperbolic base
// the completions agree exactly when the residue vectors differ by a unit k.
// Bounded spaces (peripheral systems matched) follow the same unit-scaling
// rule. Spherical spaces and positive-characteristic orbifolds have finite
// groups and fall back to finite-depth fingerprints.

#include "seifert/arith.hpp"
#include "seifert/errors.hpp"
#include "seifert/fingerprint.hpp"
#include "seifert/invariants.hpp"
#include "seifert/symbol.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

struct Residue {
  std::int64_t modulus = 0;
  std::int64_t value = 0;

  auto operator<=>(const Residue&) const = default;
};

/// Cocycle encoding of the central extension: y_0 -> b, y_i -> -q_i.
/// Bounded symbols have no y_0 term and report b = 0.
struct CohomClass {
  std::int64_t b = 0;
  std::vector<Residue> residues;

  bool operator==(const CohomClass&) const = default;
};

enum class VerdictKind { Homeomorphic, HempelEquivalent, NotEquivalent, FiniteFundamentalGroup, Equivalent };

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Homeomorphic: return "homeomorphic";
    case VerdictKind::HempelEquivalent: return "hempel";
    case VerdictKind::NotEquivalent: return "not_equivalent";
    case VerdictKind::FiniteFundamentalGroup: return "finite_group";
    case VerdictKind::Equivalent: return "equivalent";
  }
  return "?";
}

/// Outcome of a decision. `k` is the scaling unit for hempel/equivalent
/// verdicts. `separators` lists every invariant found to differ, most
/// elementary first; `separator()` is the headline one.
struct Verdict {
  VerdictKind kind = VerdictKind::NotEquivalent;
  std::optional<std::int64_t> k;
  std::vector<std::string> separators;
  bool inconclusive = false;
  std::string notes;

  std::string separator() const { return separators.empty() ? std::string() : separators.front(); }
};

struct DecideOptions {
  // Used only for finite-group cases; null means an empty catalogue.
  const std::vector<FiniteGroupTable>* catalogue = nullptr;
  std::size_t max_index = 5;
  FingerprintLimits limits;
};

inline CohomClass class_vector(const SeifertSymbol& m) {
  CohomClass c;
  c.b = m.closed() ? m.b : 0;
  for (const auto& f : m.fibres) c.residues.push_back({f.alpha, f.beta});
  return c;
}

/// Multiplication of the class by k, read back as a normalized symbol over
/// the same base.
inline SeifertSymbol scale_class(const SeifertSymbol& m, std::int64_t k) {
  CohomClass c = class_vector(m);
  SeifertSymbol out;
  out.base = m.base;
  out.b = m.closed() ? k * c.b : 0;
  for (const auto& r : c.residues) out.fibres.push_back({r.modulus, k * r.value});
  return normalize(out);
}

namespace detail {

inline std::int64_t order_lcm(const SeifertSymbol& m) {
  std::int64_t l = 1;
  for (const auto& f : m.fibres) l = std::lcm(l, f.alpha);
  return l;
}

/// Units of Z/L in increasing order (just {1} for L = 1).
inline std::vector<std::int64_t> units_mod(std::int64_t l) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < std::max<std::int64_t>(l, 2); ++k)
    if (std::gcd(k, l) == 1) out.push_back(k);
  return out;
}

/// Zero-Euler partner (b_k; Sigma; (p_i, k q_i mod p_i)) with
/// b_k = -sum (k q_i mod p_i) / p_i, which is an integer whenever e = 0.
inline SeifertSymbol hempel_scaled(const SeifertSymbol& m, std::int64_t k) {
  SeifertSymbol out;
  out.base = m.base;
  Rational sum = 0;
  for (const auto& f : m.fibres) {
    std::int64_t q = mod_floor(k * f.beta, f.alpha);
    out.fibres.push_back({f.alpha, q});
    sum += make_rational(q, f.alpha);
  }
  if (denominator_of(sum) != 1) throw std::logic_error("b_k is not integral; input has nonzero Euler number");
  out.b = -static_cast<std::int64_t>(numerator_of(sum));
  return out;
}

inline std::optional<std::int64_t> find_scaling(const SeifertSymbol& from, const SeifertSymbol& to) {
  const SeifertSymbol target = canonical_form(to);
  for (auto k : units_mod(order_lcm(from)))
    if (canonical_form(hempel_scaled(from, k)) == target) return k;
  return std::nullopt;
}

inline Rational abs_rational(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

struct Comparison {
  SeifertSymbol a, b;
  AbelianGroup h1a, h1b;
  OrbifoldData oa, ob;
  std::vector<std::string> separators;
};

inline Comparison compare_closed(const SeifertSymbol& a, const SeifertSymbol& b) {
  Comparison c{a, b, first_homology(presentation(a)), first_homology(presentation(b)),
               base_orbifold(a), base_orbifold(b), {}};
  if (c.h1a != c.h1b) c.separators.push_back("H1");
  if (c.oa != c.ob) c.separators.push_back("base_orbifold");
  if (abs_rational(euler_number(a)) != abs_rational(euler_number(b))) c.separators.push_back("euler_number");
  return c;
}

inline Verdict not_equivalent(std::vector<std::string> separators, std::string notes) {
  Verdict v;
  v.kind = VerdictKind::NotEquivalent;
  v.separators = std::move(separators);
  v.notes = std::move(notes);
  return v;
}

inline Verdict homeomorphic(std::string notes) {
  Verdict v;
  v.kind = VerdictKind::Homeomorphic;
  v.k = 1;
  v.notes = std::move(notes);
  return v;
}

inline Verdict finite_group_verdict(const Presentation& p1, const Presentation& p2, const DecideOptions& opts,
                                    std::vector<std::string> separators) {
  static const std::vector<FiniteGroupTable> empty;
  const auto& catalogue = opts.catalogue ? *opts.catalogue : empty;
  auto f1 = fingerprint(p1, opts.max_index, catalogue, opts.limits);
  auto f2 = fingerprint(p2, opts.max_index, catalogue, opts.limits);
  Verdict v;
  v.kind = VerdictKind::FiniteFundamentalGroup;
  if (auto diff = first_difference(f1, f2)) {
    separators.push_back("fingerprint");
    v.separators = std::move(separators);
    v.inconclusive = false;
    v.notes = "finite fundamental groups; fingerprints differ: " + *diff;
  } else {
    v.separators = std::move(separators);
    v.inconclusive = true;
    v.notes = "finite fundamental groups; fingerprints agree at max_index " + std::to_string(opts.max_index) +
              ", which does not prove isomorphism";
  }
  return v;
}

inline std::string describe_h1(const Comparison& c) {
  return "H1: " + to_string(c.h1a) + " vs " + to_string(c.h1b);
}

inline Verdict decide_zero_euler(const SeifertSymbol& a, const SeifertSymbol& b, const DecideOptions& opts);

}  // namespace detail

/// Canonical forms of all zero-Euler partners (b_k; Sigma; (p_i, k q_i)) for
/// k a unit modulo lcm(p_i). A singleton unless e = 0 over a hyperbolic base.
inline std::vector<SeifertSymbol> hempel_partners(const SeifertSymbol& m) {
  if (!m.closed()) throw DomainError("hempel_partners needs a closed symbol");
  const SeifertSymbol n = normalize(m);
  std::set<SeifertSymbol> out{canonical_form(n)};
  if (sign_of(euler_number(n)) == 0 && sign_of(orbifold_euler_characteristic(base_orbifold(n))) < 0)
    for (auto k : detail::units_mod(detail::order_lcm(n))) out.insert(canonical_form(detail::hempel_scaled(n, k)));
  return {out.begin(), out.end()};
}

inline Verdict decide_closed(const SeifertSymbol& m1, const SeifertSymbol& m2, const DecideOptions& opts = {}) {
  if (!m1.closed() || !m2.closed()) throw DomainError("decide_closed needs two closed symbols");
  const SeifertSymbol a = normalize(m1), b = normalize(m2);
  if (canonical_form(a) == canonical_form(b)) return detail::homeomorphic("canonical forms agree");

  const Geometry ga = geometry(a), gb = geometry(b);
  auto cmp = detail::compare_closed(a, b);
  if (ga != gb) {
    cmp.separators.push_back("geometry");
    return detail::not_equivalent(cmp.separators, "geometries differ: " + std::string(to_string(ga)) + " vs " +
                                                      std::string(to_string(gb)));
  }

  switch (ga) {
    case Geometry::S3: {
      std::vector<std::string> seps;
      if (cmp.h1a != cmp.h1b) seps.push_back("H1");
      return detail::finite_group_verdict(presentation(a), presentation(b), opts, seps);
    }
    case Geometry::E3:
    case Geometry::S2xR:
      if (cmp.h1a == cmp.h1b)
        return detail::homeomorphic("closed " + std::string(to_string(ga)) +
                                    " manifolds are determined by first homology; " + detail::describe_h1(cmp));
      return detail::not_equivalent({"H1"}, detail::describe_h1(cmp));
    default:
      break;
  }

  if (!cmp.separators.empty()) {
    std::string notes = detail::describe_h1(cmp);
    if (cmp.oa != cmp.ob) notes += "; base " + render_orbifold(cmp.oa) + " vs " + render_orbifold(cmp.ob);
    notes += "; e = " + to_string(euler_number(a)) + " vs " + to_string(euler_number(b));
    return detail::not_equivalent(cmp.separators, notes);
  }
  if (ga != Geometry::H2xR)
    return detail::not_equivalent({"class_vector"},
                                  "same base orbifold and |e| = " + to_string(detail::abs_rational(euler_number(a))) +
                                      " but the symbols differ; nonzero Euler number forces k = 1");
  return detail::decide_zero_euler(a, b, opts);
}

namespace detail {

inline Verdict decide_zero_euler(const SeifertSymbol& a, const SeifertSymbol& b, const DecideOptions& opts) {
  const auto direct = find_scaling(a, b);
  if (a.base.orientable) {
    if (!direct) return not_equivalent({"class_vector"}, "no unit k scales the residue vector onto the other");
    Verdict v;
    v.kind = VerdictKind::HempelEquivalent;
    v.k = *direct;
    v.notes = "e = 0 over a hyperbolic base; residues scale by k = " + std::to_string(*direct) +
              "; canonical forms differ, so the spaces are not homeomorphic";
    return v;
  }

  // Non-orientable base: decide on the orientation double covers, then
  // cross-check against the symbols themselves.
  const Verdict cover = decide_closed(orientation_double_cover(a), orientation_double_cover(b), opts);
  const bool cover_related =
      cover.kind == VerdictKind::HempelEquivalent || cover.kind == VerdictKind::Homeomorphic;
  if (cover_related != direct.has_value())
    throw std::logic_error("orientation double cover verdict (" + std::string(to_string(cover.kind)) +
                           ") disagrees with the direct symbol comparison");
  if (!direct) return not_equivalent({"class_vector"}, "orientation double covers are not related by a unit");
  Verdict v;
  v.kind = VerdictKind::HempelEquivalent;
  v.k = *direct;
  v.notes = "non-orientable base decided through the orientation double cover (k = " +
            std::to_string(cover.k.value_or(1)) + " there); whether k-scaling over a non-orientable base " +
            "always lifts this way is not settled, so treat this verdict with care";
  return v;
}

}  // namespace detail

/// Bounded case, assuming the completion isomorphism matches peripheral
/// systems: equivalent iff the base orbifolds agree and one unit k maps each
/// cone order's residue multiset onto the other's.
inline Verdict decide_bounded(const SeifertSymbol& m1, const SeifertSymbol& m2) {
  if (m1.closed() || m2.closed()) throw DomainError("decide_bounded needs two bounded symbols");
  const SeifertSymbol a = normalize(m1), b = normalize(m2);
  const std::string hypothesis = "assumes the completion isomorphism preserves peripheral systems";
  if (base_orbifold(a) != base_orbifold(b))
    return detail::not_equivalent({"base_orbifold"}, "base " + render_orbifold(base_orbifold(a)) + " vs " +
                                                         render_orbifold(base_orbifold(b)) + "; " + hypothesis);
  auto target = b.fibres;
  std::sort(target.begin(), target.end());
  for (auto k : detail::units_mod(detail::order_lcm(a))) {
    auto scaled = scale_class(a, k).fibres;
    std::sort(scaled.begin(), scaled.end());
    if (scaled == target) {
      Verdict v;
      v.kind = VerdictKind::Equivalent;
      v.k = k;
      v.notes = hypothesis;
      if (!a.base.orientable) v.notes += "; non-orientable base compared by direct residue scaling";
      return v;
    }
  }
  return detail::not_equivalent({"class_vector"}, "no unit k maps the residues onto each other; " + hypothesis);
}

/// Closed 2-orbifolds. Non-positive characteristic: equal iff the data agree.
/// Positive characteristic (finite groups): fingerprints only.
inline Verdict decide_orbifolds(OrbifoldData o1, OrbifoldData o2, const DecideOptions& opts = {}) {
  if (!o1.surface.closed() || !o2.surface.closed()) throw DomainError("decide_orbifolds needs closed orbifolds");
  std::sort(o1.cone_orders.begin(), o1.cone_orders.end());
  std::sort(o2.cone_orders.begin(), o2.cone_orders.end());
  if (o1 == o2) return detail::homeomorphic("orbifold data agree");

  const AbelianGroup h1a = first_homology(orbifold_presentation(o1));
  const AbelianGroup h1b = first_homology(orbifold_presentation(o2));
  std::vector<std::string> seps;
  if (h1a != h1b) seps.push_back("H1");
  const std::string h1_note = "H1: " + to_string(h1a) + " vs " + to_string(h1b);

  const int s1 = sign_of(orbifold_euler_characteristic(o1)), s2 = sign_of(orbifold_euler_characteristic(o2));
  if (s1 > 0 && s2 > 0) return detail::finite_group_verdict(orbifold_presentation(o1), orbifold_presentation(o2), opts, seps);
  if (s1 > 0 || s2 > 0) {
    seps.push_back("finiteness");
    return detail::not_equivalent(seps, "one orbifold group is finite, the other infinite; " + h1_note);
  }
  seps.push_back("orbifold_data");
  return detail::not_equivalent(seps, render_orbifold(o1) + " vs " + render_orbifold(o2) + "; " + h1_note);
}

}  // namespace seifert
