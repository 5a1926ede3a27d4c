#pragma once

// Seifert symbols (b, Sigma; (alpha_1, beta_1), ..., (alpha_r, beta_r)), their
// text grammar, and the symbol-level moves: normalization, orientation flip,
// canonical form and the orientation double cover of a non-orientable base.

#include "seifert/arith.hpp"
#include "seifert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

struct BaseSurface {
  std::int64_t genus = 0;
  bool orientable = true;
  std::int64_t boundary_components = 0;

  bool closed() const { return boundary_components == 0; }

  /// Euler characteristic of the underlying surface.
  std::int64_t euler_characteristic() const {
    return (orientable ? 2 - 2 * genus : 2 - genus) - boundary_components;
  }

  auto operator<=>(const BaseSurface&) const = default;
};

/// Seifert invariants (alpha, beta) of one exceptional fibre.
struct FibrePair {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  auto operator<=>(const FibrePair&) const = default;
};

/// Member order is the canonical ordering: (b, base, fibres).
struct SeifertSymbol {
  std::int64_t b = 0;
  BaseSurface base;
  std::vector<FibrePair> fibres;

  bool closed() const { return base.closed(); }

  auto operator<=>(const SeifertSymbol&) const = default;
  bool operator==(const SeifertSymbol&) const = default;
};

/// A 2-orbifold: underlying surface plus cone points. `cone_orders` is kept
/// sorted, so equality of values is equality of orbifold data.
struct OrbifoldData {
  BaseSurface surface;
  std::vector<std::int64_t> cone_orders;

  auto operator<=>(const OrbifoldData&) const = default;
  bool operator==(const OrbifoldData&) const = default;
};

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_literal(std::string_view lit) {
    skip_space();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (INT64_MAX - 9) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return negative ? -value : value;
  }

  char orientation_flag() {
    skip_space();
    if (pos_ < text_.size() && (text_[pos_] == 'o' || text_[pos_] == 'n')) return text_[pos_++];
    fail("expected 'o' or 'n'");
  }

  std::size_t position() const { return pos_; }

  /// Offset of the next non-space character.
  std::size_t token_start() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline BaseSurface parse_surface(Scanner& in) {
  BaseSurface surface;
  surface.orientable = in.orientation_flag() == 'o';
  std::size_t genus_pos = in.token_start();
  surface.genus = in.integer();
  if (surface.genus < 0) throw ParseError("genus must be non-negative", genus_pos);
  if (!surface.orientable && surface.genus < 1)
    throw ParseError("non-orientable surface needs genus >= 1", genus_pos);
  in.expect(";");
  if (in.try_literal("bd")) {
    std::size_t bd_pos = in.token_start();
    surface.boundary_components = in.integer();
    if (surface.boundary_components < 0)
      throw ParseError("boundary count must be non-negative", bd_pos);
    in.expect(";");
  }
  return surface;
}

inline std::string render_surface(const BaseSurface& s) {
  std::string out = (s.orientable ? "o " : "n ") + std::to_string(s.genus);
  if (s.boundary_components > 0) out += "; bd " + std::to_string(s.boundary_components);
  return out + ";";
}

}  // namespace detail

/// Parses "SFS[b; o|n genus (; bd m)?; (alpha,beta)...]". The result is not
/// normalized: betas are kept exactly as written.
inline SeifertSymbol parse_symbol(std::string_view text) {
  detail::Scanner in(text);
  SeifertSymbol s;
  in.expect("SFS");
  in.expect("[");
  std::size_t b_pos = in.token_start();
  s.b = in.integer();
  in.expect(";");
  s.base = detail::parse_surface(in);
  if (!s.closed() && s.b != 0)
    throw ParseError("bounded symbols carry b = 0", b_pos);
  while (in.peek() == '(') {
    in.expect("(");
    std::size_t pos = in.token_start();
    FibrePair f;
    f.alpha = in.integer();
    in.expect(",");
    f.beta = in.integer();
    in.expect(")");
    if (f.alpha < 2) throw ParseError("fibre order alpha must be >= 2", pos);
    if (std::gcd(f.alpha, f.beta) != 1)
      throw ParseError("gcd(alpha, beta) must be 1 for (" + std::to_string(f.alpha) + "," +
                           std::to_string(f.beta) + ")",
                       pos);
    s.fibres.push_back(f);
  }
  in.expect("]");
  if (!in.at_end()) in.fail("trailing characters");
  return s;
}

inline std::string render_symbol(const SeifertSymbol& s) {
  std::string out = "SFS[" + std::to_string(s.b) + "; " + detail::render_surface(s.base);
  if (!s.fibres.empty()) out += " ";
  for (const auto& f : s.fibres)
    out += "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
  return out + "]";
}

/// Parses "ORB[o|n genus (; bd m)?; c1,c2,...]".
inline OrbifoldData parse_orbifold(std::string_view text) {
  detail::Scanner in(text);
  OrbifoldData o;
  in.expect("ORB");
  in.expect("[");
  o.surface = detail::parse_surface(in);
  if (in.peek() != ']') {
    do {
      std::size_t pos = in.token_start();
      std::int64_t c = in.integer();
      if (c < 2) throw ParseError("cone order must be >= 2", pos);
      o.cone_orders.push_back(c);
    } while (in.try_literal(","));
  }
  in.expect("]");
  if (!in.at_end()) in.fail("trailing characters");
  std::sort(o.cone_orders.begin(), o.cone_orders.end());
  return o;
}

inline std::string render_orbifold(const OrbifoldData& o) {
  std::string out = "ORB[" + detail::render_surface(o.surface);
  for (std::size_t i = 0; i < o.cone_orders.size(); ++i)
    out += (i == 0 ? " " : ",") + std::to_string(o.cone_orders[i]);
  return out + "]";
}

/// Converts fibred-solid-torus invariants (p, q) to Seifert invariants
/// (alpha, beta) = (p, q^-1 mod p).
inline FibrePair seifert_pair_from_fibre_invariants(std::int64_t p, std::int64_t q) {
  if (p < 2) throw DomainError("fibre invariant p must be >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("fibre invariants p, q must be coprime");
  return {p, mod_inverse(q, p)};
}

/// Reduces every beta into (0, alpha). In the closed case the integer parts
/// are moved into b, which keeps the Euler number fixed; bounded symbols keep
/// b = 0. Pairs with alpha = 1 are folded into b and dropped.
inline SeifertSymbol normalize(const SeifertSymbol& s) {
  SeifertSymbol out;
  out.b = s.closed() ? s.b : 0;
  out.base = s.base;
  for (const auto& f : s.fibres) {
    if (f.alpha < 1) throw DomainError("fibre order must be positive");
    std::int64_t q = floor_div(f.beta, f.alpha);
    if (s.closed()) out.b += q;
    if (f.alpha == 1) continue;
    out.fibres.push_back({f.alpha, f.beta - q * f.alpha});
  }
  return out;
}

/// Orientation reversal: (b; (a_i, b_i)) -> (-b - r; (a_i, a_i - b_i)).
/// Bounded symbols only have their betas replaced.
inline SeifertSymbol flip_orientation(const SeifertSymbol& s) {
  SeifertSymbol out = s;
  if (s.closed()) out.b = -s.b - static_cast<std::int64_t>(s.fibres.size());
  for (auto& f : out.fibres) f.beta = f.alpha - f.beta;
  return out;
}

namespace detail {
inline SeifertSymbol sorted_normal(const SeifertSymbol& s) {
  SeifertSymbol n = normalize(s);
  std::sort(n.fibres.begin(), n.fibres.end());
  return n;
}
}  // namespace detail

/// Lexicographic minimum of the sorted normal form and its flipped
/// counterpart. Constant on fibre permutation, normalization and flip.
inline SeifertSymbol canonical_form(const SeifertSymbol& s) {
  SeifertSymbol a = detail::sorted_normal(s);
  SeifertSymbol b = detail::sorted_normal(flip_orientation(a));
  return std::min(a, b);
}

/// Index-2 cover induced by the orientation cover of a non-orientable base.
/// The base becomes orientable of genus g - 1 with twice the boundary, every
/// exceptional fibre appears twice, and b doubles so that e doubles.
inline SeifertSymbol orientation_double_cover(const SeifertSymbol& s) {
  if (s.base.orientable) throw DomainError("orientation double cover needs a non-orientable base");
  SeifertSymbol out;
  out.base = {s.base.genus - 1, true, 2 * s.base.boundary_components};
  out.b = s.closed() ? 2 * s.b : 0;
  for (const auto& f : s.fibres) {
    out.fibres.push_back(f);
    out.fibres.push_back(f);
  }
  return out;
}

inline OrbifoldData base_orbifold(const SeifertSymbol& s) {
  OrbifoldData o{s.base, {}};
  for (const auto& f : s.fibres) o.cone_orders.push_back(f.alpha);
  std::sort(o.cone_orders.begin(), o.cone_orders.end());
  return o;
}

}  // namespace seifert
