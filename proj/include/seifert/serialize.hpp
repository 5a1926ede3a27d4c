#pragma once

// JSON encodings used by the command-line tool. Key names are stable.

#include "seifert/decider.hpp"
#include "seifert/fingerprint.hpp"
#include "seifert/invariants.hpp"
#include "seifert/symbol.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace seifert {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json to_json(const Rational& r) {
  return Json{{"num", to_json(numerator_of(r))}, {"den", to_json(denominator_of(r))}};
}

inline Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(to_json(d));
  return Json{{"rank", g.free_rank}, {"torsion", torsion}};
}

inline Json to_json(const OrbifoldData& o) {
  return Json{{"genus", o.surface.genus},
              {"orientable", o.surface.orientable},
              {"boundary_components", o.surface.boundary_components},
              {"cone_orders", o.cone_orders}};
}

/// Invariant report: euler_number (null when bounded), geometry, h1, chi_orb.
inline Json invariants_report(const SeifertSymbol& s) {
  const SeifertSymbol n = normalize(s);
  const OrbifoldData o = base_orbifold(n);
  Json out;
  out["euler_number"] = n.closed() ? to_json(euler_number(n)) : Json(nullptr);
  out["geometry"] = std::string(to_string(geometry(n)));
  out["h1"] = to_json(first_homology(presentation(n)));
  out["chi_orb"] = to_json(orbifold_euler_characteristic(o));
  out["symbol"] = render_symbol(n);
  out["canonical"] = render_symbol(canonical_form(n));
  out["base_orbifold"] = render_orbifold(o);
  out["presentation"] = render_presentation(presentation(n));
  return out;
}

inline Json to_json(const Verdict& v) {
  Json out;
  out["kind"] = std::string(to_string(v.kind));
  if (v.k) out["k"] = *v.k;
  if (!v.separators.empty()) {
    out["separator"] = v.separator();
    out["separators"] = v.separators;
  }
  if (v.kind == VerdictKind::FiniteFundamentalGroup) out["inconclusive"] = v.inconclusive;
  out["notes"] = v.notes;
  return out;
}

inline Json to_json(const QuotientFingerprint& f) {
  Json homs = Json::object();
  for (const auto& [name, count] : f.hom_counts) homs[name] = count;
  Json spectrum = Json::array();
  for (const auto& r : f.cover_spectrum)
    spectrum.push_back(Json{{"index", r.index}, {"normal", r.is_normal}, {"h1", to_json(r.h1)}});
  return Json{{"depth", {{"max_index", f.depth.max_index}, {"catalogue_id", f.depth.catalogue_id}}},
              {"hom_counts", homs},
              {"cover_spectrum", spectrum}};
}

}  // namespace seifert
