#include "oracles.hpp"
#include "seifert/decider.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace seifert;

namespace {

SeifertSymbol sym(const char* text) { return parse_symbol(text); }

const SeifertSymbol M1 = parse_symbol("SFS[-1; o 0; (5,1)(5,1)(5,3)]");
const SeifertSymbol M2 = parse_symbol("SFS[-1; o 0; (5,1)(5,2)(5,2)]");

bool pairwise_coprime(const SeifertSymbol& s) {
  for (std::size_t i = 0; i < s.fibres.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::gcd(s.fibres[i].alpha, s.fibres[j].alpha) != 1) return false;
  return true;
}

// Random closed symbol over a hyperbolic base with e = 0, obtained by choosing
// the fibres first and then adjusting the last beta.
std::optional<SeifertSymbol> random_zero_euler(std::mt19937_64& rng, bool orientable) {
  oracle::SymbolShape shape{.allow_nonorientable = !orientable, .max_genus = 1, .max_fibres = 4, .max_alpha = 6};
  auto s = oracle::random_symbol(rng, shape);
  if (s.base.orientable != orientable || s.fibres.size() < 2) return std::nullopt;
  Rational sum = 0;
  for (std::size_t i = 0; i + 1 < s.fibres.size(); ++i) sum += make_rational(s.fibres[i].beta, s.fibres[i].alpha);
  auto& last = s.fibres.back();
  // need b + sum + beta/alpha = 0 with beta coprime to alpha
  for (std::int64_t beta = 1; beta < last.alpha; ++beta) {
    Rational total = sum + make_rational(beta, last.alpha);
    if (denominator_of(total) == 1 && std::gcd(beta, last.alpha) == 1) {
      last.beta = beta;
      s.b = -static_cast<std::int64_t>(numerator_of(total));
      if (sign_of(orbifold_euler_characteristic(base_orbifold(s))) < 0) return s;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(ClassVector, Examples) {
  auto c = class_vector(M1);
  EXPECT_EQ(c.b, -1);
  EXPECT_EQ(c.residues, (std::vector<Residue>{{5, 1}, {5, 1}, {5, 3}}));
  EXPECT_EQ(class_vector(sym("SFS[0; o 0; bd 1; (2,1)]")).b, 0);
}

TEST(ClassVector, ScalingReproducesPartner) {
  auto partners = hempel_partners(M1);
  auto scaled = detail::hempel_scaled(M1, 2);
  EXPECT_NE(std::find(partners.begin(), partners.end(), canonical_form(scaled)), partners.end());
  EXPECT_EQ(canonical_form(scaled), canonical_form(M2));
  EXPECT_EQ(scale_class(sym("SFS[0; o 0; bd 1; (2,1)(3,1)]"), 5), sym("SFS[0; o 0; bd 1; (2,1)(3,2)]"));
}

TEST(Partners, HempelExample) {
  auto partners = hempel_partners(M1);
  ASSERT_EQ(partners.size(), 2u);
  std::set<SeifertSymbol> expected{canonical_form(M1), canonical_form(M2)};
  EXPECT_EQ(std::set<SeifertSymbol>(partners.begin(), partners.end()), expected);
  EXPECT_EQ(canonical_form(detail::hempel_scaled(M1, 4)), canonical_form(M1));
  EXPECT_EQ(canonical_form(detail::hempel_scaled(M1, 3)), canonical_form(M2));
}

TEST(Partners, SingletonCases) {
  EXPECT_EQ(hempel_partners(sym("SFS[-2; o 1;]")).size(), 1u);
  EXPECT_EQ(hempel_partners(sym("SFS[-1; o 0; (2,1)(3,1)(7,1)]")).size(), 1u);
  EXPECT_EQ(hempel_partners(sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]")).size(), 1u);
  EXPECT_THROW(hempel_partners(sym("SFS[0; o 0; bd 1;]")), DomainError);
}

TEST(Partners, CoprimeOrdersGiveSingletons) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 100) {
    auto s = oracle::random_symbol(rng, {.max_fibres = 5, .max_alpha = 13});
    if (!pairwise_coprime(s)) continue;
    EXPECT_EQ(hempel_partners(s).size(), 1u) << render_symbol(s);
    ++checked;
  }
}

TEST(Partners, ClosureAndInvariants) {
  std::mt19937_64 rng(42);
  int checked = 0;
  while (checked < 60) {
    auto s = random_zero_euler(rng, true);
    if (!s) continue;
    ++checked;
    auto partners = hempel_partners(*s);
    EXPECT_NE(std::find(partners.begin(), partners.end(), canonical_form(*s)), partners.end());
    for (const auto& p : partners) {
      EXPECT_EQ(hempel_partners(p), partners) << render_symbol(p);
      EXPECT_EQ(sign_of(euler_number(p)), 0);
      EXPECT_EQ(base_orbifold(p), base_orbifold(*s));
      EXPECT_EQ(geometry(p), Geometry::H2xR);
    }
  }
}

TEST(DecideClosed, Examples) {
  EXPECT_EQ(decide_closed(M1, M1).kind, VerdictKind::Homeomorphic);
  EXPECT_EQ(decide_closed(M1, flip_orientation(M1)).kind, VerdictKind::Homeomorphic);
  auto v = decide_closed(M1, M2);
  EXPECT_EQ(v.kind, VerdictKind::HempelEquivalent);
  EXPECT_EQ(v.k, 2);
  auto w = decide_closed(sym("SFS[-2; o 1;]"), sym("SFS[-3; o 1;]"));
  EXPECT_EQ(w.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(w.separator(), "H1");
  EXPECT_NE(std::find(w.separators.begin(), w.separators.end(), "euler_number"), w.separators.end());
}

TEST(DecideClosed, GeometrySeparates) {
  auto v = decide_closed(sym("SFS[0; o 1;]"), sym("SFS[-1; o 1;]"));
  EXPECT_EQ(v.kind, VerdictKind::NotEquivalent);
  EXPECT_NE(std::find(v.separators.begin(), v.separators.end(), "geometry"), v.separators.end());
}

TEST(DecideClosed, NonzeroEulerWithSameInvariantsIsRigid) {
  // Same base, same |e|, same H1, but not related by flip.
  auto a = sym("SFS[-1; o 0; (5,1)(5,2)(7,1)(7,3)]");
  auto b = sym("SFS[-1; o 0; (5,1)(5,2)(7,2)(7,2)]");
  ASSERT_NE(sign_of(euler_number(a)), 0);
  auto v = decide_closed(a, b);
  EXPECT_EQ(v.kind, VerdictKind::NotEquivalent);
}

TEST(DecideClosed, EuclideanDecidedByHomology) {
  EXPECT_EQ(decide_closed(sym("SFS[0; o 1;]"), sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]")).kind,
            VerdictKind::NotEquivalent);
  EXPECT_EQ(decide_closed(sym("SFS[-1; o 0; (2,1)(3,1)(6,1)]"), sym("SFS[-1; o 0; (2,1)(3,2)(6,5)]")).kind,
            VerdictKind::NotEquivalent);
  EXPECT_EQ(decide_closed(sym("SFS[0; o 0;]"), sym("SFS[0; n 1;]")).separator(), "H1");
}

TEST(DecideClosed, SphericalUsesFingerprints) {
  auto cat = oracle::catalogue_up_to(24);
  DecideOptions opts;
  opts.catalogue = &cat;
  opts.max_index = 4;
  // Two different Seifert symbols with fundamental group Z/5.
  auto v = decide_closed(sym("SFS[-5; o 0;]"), sym("SFS[0; o 0; (2,1)(3,1)]"), opts);
  EXPECT_EQ(v.kind, VerdictKind::FiniteFundamentalGroup);
  EXPECT_TRUE(v.inconclusive);
  // Poincare sphere against a prism manifold: H1 is 0 vs Z/4.
  auto w = decide_closed(sym("SFS[-1; o 0; (2,1)(3,1)(5,1)]"), sym("SFS[-1; o 0; (2,1)(2,1)(3,1)]"), opts);
  EXPECT_EQ(w.kind, VerdictKind::FiniteFundamentalGroup);
  EXPECT_FALSE(w.inconclusive);
  EXPECT_EQ(w.separator(), "H1");
}

TEST(DecideClosed, SymmetricUnderSwap) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_symbol(rng, {.max_genus = 1, .max_fibres = 3, .max_alpha = 6});
    auto b = i % 3 == 0 ? normalize(flip_orientation(a)) : oracle::random_symbol(rng, {.max_genus = 1, .max_fibres = 3, .max_alpha = 6});
    if (geometry(normalize(a)) == Geometry::S3 && geometry(normalize(b)) == Geometry::S3) continue;
    auto v = decide_closed(a, b), w = decide_closed(b, a);
    EXPECT_EQ(v.kind, w.kind) << render_symbol(a) << " " << render_symbol(b);
    EXPECT_EQ(v.separator(), w.separator());
  }
}

TEST(DecideClosed, FlipAndPermutationAreHomeomorphisms) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 500; ++i) {
    auto s = oracle::random_raw_symbol(rng);
    auto t = flip_orientation(s);
    std::shuffle(t.fibres.begin(), t.fibres.end(), rng);
    EXPECT_EQ(decide_closed(s, t).kind, VerdictKind::Homeomorphic) << render_symbol(s);
  }
}

TEST(DecideClosed, EulerSeparation) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 200; ++i) {
    auto s = oracle::random_symbol(rng, {.allow_nonorientable = false, .max_genus = 2});
    auto t = s;
    t.b -= oracle::uniform(rng, 1, 3);
    auto es = euler_number(s), et = euler_number(t);
    if (sign_of(es) == 0 || sign_of(et) == 0 || es == -et) continue;
    if (geometry(s) == Geometry::S3) continue;
    EXPECT_EQ(decide_closed(s, t).kind, VerdictKind::NotEquivalent) << render_symbol(s);
  }
}

TEST(DecideClosed, ZeroEulerNonOrientableBase) {
  std::mt19937_64 rng(46);
  int checked = 0;
  while (checked < 40) {
    auto s = random_zero_euler(rng, false);
    if (!s) continue;
    ++checked;
    for (auto k : detail::units_mod(detail::order_lcm(*s))) {
      auto partner = detail::hempel_scaled(*s, k);
      auto v = decide_closed(*s, partner);
      EXPECT_TRUE(v.kind == VerdictKind::HempelEquivalent || v.kind == VerdictKind::Homeomorphic)
          << render_symbol(*s) << " k=" << k;
    }
  }
}

TEST(DecideClosed, ZeroEulerUnrelatedResidues) {
  auto a = sym("SFS[-1; o 0; (5,1)(5,1)(5,3)]");
  auto b = sym("SFS[-2; o 0; (5,2)(5,3)(5,1)(5,4)]");
  EXPECT_EQ(decide_closed(a, b).kind, VerdictKind::NotEquivalent);
  auto c = sym("SFS[-1; o 0; (7,1)(7,2)(7,4)]");
  auto d = sym("SFS[-1; o 0; (7,1)(7,1)(7,5)]");
  EXPECT_EQ(decide_closed(c, d).separator(), "class_vector");
}

TEST(DecideClosed, RejectsBounded) {
  EXPECT_THROW(decide_closed(sym("SFS[0; o 0; bd 1;]"), M1), DomainError);
}

TEST(DecideBounded, Examples) {
  auto v = decide_bounded(sym("SFS[0; o 0; bd 1; (2,1)(3,1)]"), sym("SFS[0; o 0; bd 1; (2,1)(3,2)]"));
  EXPECT_EQ(v.kind, VerdictKind::Equivalent);
  EXPECT_EQ(v.k, 5);
  EXPECT_NE(v.notes.find("peripheral"), std::string::npos);
  auto same = decide_bounded(sym("SFS[0; o 1; bd 2; (3,1)]"), sym("SFS[0; o 1; bd 2; (3,1)]"));
  EXPECT_EQ(same.kind, VerdictKind::Equivalent);
  EXPECT_EQ(same.k, 1);
  auto no = decide_bounded(sym("SFS[0; o 0; bd 1; (5,1)(5,1)]"), sym("SFS[0; o 0; bd 1; (5,1)(5,2)]"));
  EXPECT_EQ(no.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(no.separator(), "class_vector");
  auto base = decide_bounded(sym("SFS[0; o 0; bd 1; (5,1)]"), sym("SFS[0; o 0; bd 2; (5,1)]"));
  EXPECT_EQ(base.separator(), "base_orbifold");
  EXPECT_THROW(decide_bounded(M1, M2), DomainError);
}

TEST(DecideBounded, EquivalenceIsSymmetric) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_symbol(rng, {.allow_boundary = true});
    if (a.closed()) continue;
    auto k = oracle::uniform(rng, 1, 50);
    if (std::gcd(k, detail::order_lcm(a)) != 1) continue;
    auto b = scale_class(a, k);
    std::shuffle(b.fibres.begin(), b.fibres.end(), rng);
    EXPECT_EQ(decide_bounded(a, b).kind, VerdictKind::Equivalent);
    EXPECT_EQ(decide_bounded(b, a).kind, VerdictKind::Equivalent);
  }
}

TEST(DecideOrbifolds, Examples) {
  auto v = decide_orbifolds(parse_orbifold("ORB[o 0; 2,4,4]"), parse_orbifold("ORB[n 1; 2,2]"));
  EXPECT_EQ(v.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(decide_orbifolds(parse_orbifold("ORB[o 0; 2,3,7]"), parse_orbifold("ORB[o 0; 7,3,2]")).kind,
            VerdictKind::Homeomorphic);
  auto t = decide_orbifolds(parse_orbifold("ORB[o 1;]"), parse_orbifold("ORB[n 2;]"));
  EXPECT_EQ(t.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(t.separator(), "H1");
  EXPECT_THROW(decide_orbifolds(parse_orbifold("ORB[o 0; bd 1;]"), parse_orbifold("ORB[o 0;]")), DomainError);
}

TEST(DecideOrbifolds, FiniteGroupsUseFingerprints) {
  auto cat = oracle::catalogue_up_to(24);
  DecideOptions opts;
  opts.catalogue = &cat;
  opts.max_index = 3;
  // S^2(2,2,3) has group S3; S^2(6,6) has group Z/6.
  auto v = decide_orbifolds(parse_orbifold("ORB[o 0; 2,2,3]"), parse_orbifold("ORB[o 0; 6,6]"), opts);
  EXPECT_EQ(v.kind, VerdictKind::FiniteFundamentalGroup);
  EXPECT_FALSE(v.inconclusive);
  // S^2(3,3) has group Z/3; the plain sphere is simply connected.
  auto w = decide_orbifolds(parse_orbifold("ORB[o 0; 3,3]"), parse_orbifold("ORB[o 0;]"), opts);
  EXPECT_EQ(w.separator(), "H1");
}
