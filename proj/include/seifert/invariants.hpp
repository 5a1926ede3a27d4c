#pragma once

// Classifying invariants of a Seifert symbol: Euler number, orbifold Euler
// characteristic, geometry, the standard fundamental-group presentation and
// first homology.

#include "seifert/arith.hpp"
#include "seifert/errors.hpp"
#include "seifert/presentation.hpp"
#include "seifert/smith.hpp"
#include "seifert/symbol.hpp"

#include <algorithm>
#include <string>
#include <string_view>

namespace seifert {

enum class Geometry {
  S3,
  S2xR,
  E3,
  Nil,
  H2xR,
  SL2R,
  // bounded symbols: only the sign of the base orbifold characteristic
  PositiveBase,
  ZeroBase,
  HyperbolicBase,
};

inline std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::S3: return "S3";
    case Geometry::S2xR: return "S2xR";
    case Geometry::E3: return "E3";
    case Geometry::Nil: return "Nil";
    case Geometry::H2xR: return "H2xR";
    case Geometry::SL2R: return "SL2R~";
    case Geometry::PositiveBase: return "PositiveBase";
    case Geometry::ZeroBase: return "ZeroBase";
    case Geometry::HyperbolicBase: return "HyperbolicBase";
  }
  return "?";
}

/// e = -(b + sum beta_i / alpha_i). Undefined once the base has boundary.
inline Rational euler_number(const SeifertSymbol& s) {
  if (!s.closed()) throw DomainError("Euler number is undefined for bounded Seifert fibre spaces");
  Rational sum = make_rational(s.b);
  for (const auto& f : s.fibres) sum += make_rational(f.beta, f.alpha);
  return -sum;
}

/// chi(surface) - sum (1 - 1/p_i).
inline Rational orbifold_euler_characteristic(const OrbifoldData& o) {
  Rational chi = make_rational(o.surface.euler_characteristic());
  for (auto p : o.cone_orders) chi -= 1 - make_rational(1, p);
  return chi;
}

inline Geometry geometry(const SeifertSymbol& s) {
  const int chi_sign = sign_of(orbifold_euler_characteristic(base_orbifold(s)));
  if (!s.closed()) {
    if (chi_sign > 0) return Geometry::PositiveBase;
    return chi_sign == 0 ? Geometry::ZeroBase : Geometry::HyperbolicBase;
  }
  const bool flat = sign_of(euler_number(s)) == 0;
  if (chi_sign > 0) return flat ? Geometry::S2xR : Geometry::S3;
  if (chi_sign == 0) return flat ? Geometry::E3 : Geometry::Nil;
  return flat ? Geometry::H2xR : Geometry::SL2R;
}

namespace detail {

struct SurfaceGenerators {
  std::vector<std::size_t> cone, boundary, u, v;
};

// Generators a_i (cone points), d_j (all but one boundary component) and the
// surface generators, in that order.
inline SurfaceGenerators add_orbifold_generators(Presentation& p, const BaseSurface& surface,
                                                 std::size_t cone_points) {
  SurfaceGenerators ids;
  auto add = [&p](std::string name) {
    p.generators.push_back(std::move(name));
    return p.generators.size() - 1;
  };
  for (std::size_t i = 0; i < cone_points; ++i) ids.cone.push_back(add("a" + std::to_string(i + 1)));
  for (std::int64_t j = 1; j < surface.boundary_components; ++j)
    ids.boundary.push_back(add("d" + std::to_string(j)));
  for (std::int64_t k = 1; k <= surface.genus; ++k) {
    if (surface.orientable) {
      ids.u.push_back(add("u" + std::to_string(k)));
      ids.v.push_back(add("v" + std::to_string(k)));
    } else {
      ids.v.push_back(add("v" + std::to_string(k)));
    }
  }
  return ids;
}

// a_1 ... a_r [u_1, v_1] ... [u_g, v_g]  or  a_1 ... a_r v_1^2 ... v_g^2
inline Word surface_word(const SurfaceGenerators& ids, bool orientable) {
  Word w;
  for (auto a : ids.cone) w.push_back(gen(a));
  if (orientable) {
    for (std::size_t k = 0; k < ids.u.size(); ++k) w = concat(w, commutator(gen(ids.u[k]), gen(ids.v[k])));
  } else {
    for (auto v : ids.v) w = concat(w, letter_power(gen(v), 2));
  }
  return w;
}

}  // namespace detail

/// The standard presentation of pi_1 with the fibre generator h distinguished.
/// Orientable base: h is central ([x, h] for every other generator).
/// Non-orientable base: a_i and boundary generators commute with h, each v_j
/// inverts it. Bounded symbols omit the surface relation and carry one free
/// generator d_j for every boundary component but one.
inline Presentation presentation(const SeifertSymbol& s) {
  Presentation p;
  auto ids = detail::add_orbifold_generators(p, s.base, s.fibres.size());
  p.generators.push_back("h");
  const std::size_t h = p.generators.size() - 1;
  p.distinguished = h;
  const Letter H = gen(h);

  for (std::size_t x = 0; x < h; ++x) {
    const Letter X = gen(x);
    const bool inverts = !s.base.orientable &&
                         std::find(ids.v.begin(), ids.v.end(), x) != ids.v.end();
    if (s.base.orientable)
      p.relators.push_back(commutator(X, H));
    else if (inverts)
      p.relators.push_back({-X, H, X, H});  // h^x = h^-1
    else
      p.relators.push_back({-X, H, X, -H});  // h^x = h
  }
  for (std::size_t i = 0; i < s.fibres.size(); ++i)
    p.relators.push_back(concat(letter_power(gen(ids.cone[i]), s.fibres[i].alpha), letter_power(H, s.fibres[i].beta)));
  if (s.closed())
    p.relators.push_back(concat(detail::surface_word(ids, s.base.orientable), letter_power(H, -s.b)));
  return p;
}

/// Orbifold fundamental group: the symbol presentation with h killed.
inline Presentation orbifold_presentation(const OrbifoldData& o) {
  Presentation p;
  auto ids = detail::add_orbifold_generators(p, o.surface, o.cone_orders.size());
  for (std::size_t i = 0; i < o.cone_orders.size(); ++i)
    p.relators.push_back(letter_power(gen(ids.cone[i]), o.cone_orders[i]));
  if (o.surface.closed()) p.relators.push_back(detail::surface_word(ids, o.surface.orientable));
  return p;
}

/// Relator exponent-sum matrix: one row per relator, one column per generator.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (Letter l : p.relators[i]) m(i, letter_index(l)) += l > 0 ? 1 : -1;
  return m;
}

/// Abelianization, as the cokernel of the exponent-sum matrix.
inline AbelianGroup first_homology(const Presentation& p) {
  p.validate();
  return cokernel(smith_normal_form(relation_matrix(p)));
}

}  // namespace seifert
