#include <gtest/gtest.h>

#include "liecascade/torusauto.hpp"

using namespace liecascade;

namespace {

TorusAut inner(const RootSystem& rs, const LatticeMap& w) { return make_torus_aut(rs, w, DiagramAut::identity(rs.rank())); }

TorusAut identity_aut(const RootSystem& rs) { return inner(rs, LatticeMap::identity(rs.dim())); }

}  // namespace

TEST(TorusAut, SplitsIntoWeylAndDiagramParts) {
  const RootSystem e6 = build_root_system("E6");
  const DiagramAut nu{{6, 2, 5, 4, 3, 1}};
  const LatticeMap w = compile(e6, WeylWord{{1, 3, 4, 2}});
  const TorusAut a = make_torus_aut(e6, w, nu);
  const TorusAut b = torus_aut_from_matrix(e6, a.compiled);
  EXPECT_EQ(b.diag_part, nu);
  EXPECT_EQ(b.weyl_part, w);
  EXPECT_FALSE(b.inner());
  EXPECT_TRUE(torus_aut_from_matrix(e6, w).inner());
  EXPECT_THROW(make_torus_aut(e6, induced_lattice_map(e6, nu), DiagramAut::identity(6)), Error);
}

TEST(TorusAut, FixedSubspaces) {
  const RootSystem d4 = build_root_system("D4");
  EXPECT_EQ(fixed_subspace(identity_aut(d4)).size(), 4u);
  for (const auto& r : d4.positives()) EXPECT_EQ(fixed_subspace(inner(d4, reflection_matrix(d4, r))).size(), 3u);
  const Root d1{1, 2, 1, 1}, a1{1, 0, 0, 0};
  EXPECT_EQ(fixed_subspace(inner(d4, reflection_matrix(d4, d1) * reflection_matrix(d4, a1))).size(), 2u);
}

TEST(TorusAut, MakePair) {
  const RootSystem d4 = build_root_system("D4");
  const PairSetup both = make_pair(d4, identity_aut(d4), identity_aut(d4));
  EXPECT_EQ(both.s.size(), 4u);
  EXPECT_TRUE(both.omega_plus.empty());
  EXPECT_TRUE(check_property_star(both));

  const Root d1{1, 2, 1, 1}, a1{1, 0, 0, 0};
  const TorusAut t = inner(d4, reflection_matrix(d4, d1) * reflection_matrix(d4, a1));
  const PairSetup p = make_pair(d4, t, t);
  EXPECT_EQ(as_set(p.omega_plus), (std::set<Root>{d1, a1}));
  EXPECT_TRUE(check_property_star(p));

  const RootSystem a3 = build_root_system("A3");
  const Root delta{1, 1, 1}, a2{0, 1, 0};
  const TorusAut s1 = inner(a3, reflection_matrix(a3, delta) * reflection_matrix(a3, a2));
  const TorusAut flip = make_torus_aut(a3, LatticeMap::identity(3), DiagramAut{{3, 2, 1}});
  const PairSetup q = make_pair(a3, s1, flip);
  EXPECT_TRUE(as_set(q.omega_plus).count(delta));
  EXPECT_TRUE(as_set(q.omega_plus).count(a2));

  try {
    make_pair(a3, inner(a3, simple_reflection_matrix(a3, 1)), inner(a3, simple_reflection_matrix(a3, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
  }
  const TorusAut rot = inner(a3, compile(a3, WeylWord{{1, 2}}));
  try {
    make_pair(a3, rot, rot);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvolution);
  }
}

TEST(TorusAut, PropertyStarCanFail) {
  // sigma2 of order 4 rotating two orthogonal vanishing roots into each other
  const RootSystem d4 = build_root_system("D4");
  const auto sweep = property_star_sweep(d4, 4);
  ASSERT_GT(sweep.failed, 0);
  for (const auto& [s1, s2] : sweep.failures) {
    const PairSetup p = make_pair(d4, s1, s2);
    EXPECT_FALSE(check_property_star(p));
    bool cycles = false;
    for (const auto& a : p.omega_plus) {
      const Root img = apply(s2.compiled, a);
      if (img != -a && as_set(p.omega_plus).count(d4.positive_rep(img)) && d4.positive_rep(img) != a) cycles = true;
    }
    EXPECT_TRUE(cycles);
  }
}

TEST(TorusAut, ReflectionOrder) {
  const RootSystem b2 = build_root_system("B2");
  const Root a{1, 1};
  const auto r1 = reflection_order(b2, inner(b2, reflection_matrix(b2, a)), a);
  EXPECT_EQ(r1.ell, 1);
  EXPECT_TRUE(r1.verified);
  const auto r0 = reflection_order(b2, identity_aut(b2), a);
  EXPECT_EQ(r0.ell, 1);
  EXPECT_FALSE(r0.verified);
  // e_1 -> e_2 -> -e_1 with e_1 = a_1 + a_2 and e_2 = a_2
  std::optional<LatticeMap> rot;
  for (const auto& m : weyl_group_elements(b2))
    if (apply(m, Root{1, 1}) == Root{0, 1} && apply(m, Root{0, 1}) == Root{-1, -1}) rot = m;
  ASSERT_TRUE(rot);
  const auto r2 = reflection_order(b2, inner(b2, *rot), a);
  EXPECT_EQ(r2.ell, 2);
  EXPECT_TRUE(r2.verified);
  EXPECT_EQ(r2.period, 4);
}

TEST(TorusAut, RankBound) {
  const RootSystem d5 = build_root_system("D5");
  const PairSetup id = make_pair(d5, identity_aut(d5), identity_aut(d5));
  const RankBound b0 = rank_bound(id);
  EXPECT_EQ(b0.lhs, 5);
  EXPECT_TRUE(b0.equality);
  const PairSetup p = make_pair(d5, identity_aut(d5), inner(d5, reflection_matrix(d5, d5.highest_long())));
  const RankBound b = rank_bound(p);
  EXPECT_EQ(b.lhs, 4);
  EXPECT_EQ(b.rhs, 4);
  EXPECT_TRUE(b.equality);
}

TEST(TorusAut, LiftSigns) {
  const RootSystem d4 = build_root_system("D4");
  const Root d1{1, 2, 1, 1};
  EXPECT_EQ(lift_sign(d4, d1, d1), 1);
  EXPECT_EQ(lift_sign(d4, d1, Root{0, 1, 0, 0}), -1);
  EXPECT_EQ(lift_sign(d4, d1, Root{1, 0, 0, 0}), 1);
  try {
    lift_sign(build_root_system("G2"), Root{1, 0}, Root{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedType);
  }
  EXPECT_TRUE(lifts_to_involution(d4, {}));
  for (int r = 4; r <= 7; ++r) {
    const RootSystem rs = build_root_system(SystemType{Family::D, r});
    for (int m = 1; m <= r - 2; m += 2) EXPECT_TRUE(lifts_to_involution(rs, d_form1(r, m))) << r << " " << m;
  }
  const RootSystem d6 = build_root_system("D6");
  EXPECT_FALSE(lifts_to_involution(d6, d_form2(6)));
  const auto w = odd_parity_witness(d6, d_form2(6));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, simple_root(6, 4));
}

TEST(TorusAut, SignAction) {
  const RootSystem d6 = build_root_system("D6");
  const OrthoSet f2 = d_form2(6);
  std::map<Root, Int> ones;
  for (const auto& a : f2) ones[a] = 1;
  const RatVec zero(6, Rational(0));
  EXPECT_EQ(torus_sign_action(d6, f2, ones, zero, simple_root(6, 4)).klass, SignClass::Odd);
  for (const auto& a : f2) EXPECT_EQ(torus_sign_action(d6, f2, ones, zero, a).klass, SignClass::Odd);
  for (const auto& b : d6.positives()) EXPECT_EQ(torus_sign_action(d6, {}, {}, zero, b).klass, SignClass::Even);
  // shifting a coefficient by 4 does not change the sign
  std::map<Root, Int> shifted = ones;
  shifted.begin()->second = 5;
  for (const auto& b : d6.positives())
    EXPECT_EQ(torus_sign_action(d6, f2, ones, zero, b).klass, torus_sign_action(d6, f2, shifted, zero, b).klass);
  try {
    torus_sign_action(d6, f2, {{f2[0], 1}}, zero, f2[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteCoefficients);
  }
  // a generic x perpendicular to the set makes some signs depend on x
  const auto perp = kernel_basis([&] {
    RatMatrix rows(f2.size(), 6);
    const RatMatrix b = to_rational(d6.form());
    for (std::size_t k = 0; k < f2.size(); ++k)
      for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < 6; ++i) rows(k, j) += Rational(f2[k][i]) * b(i, j);
    return rows;
  }());
  ASSERT_FALSE(perp.empty());
  bool dependent = false;
  for (const auto& b : d6.positives())
    dependent = dependent || torus_sign_action(d6, f2, ones, perp.front(), b).klass == SignClass::XDependent;
  EXPECT_TRUE(dependent);
  EXPECT_EQ(torus_sign_action(d6, f2, ones, perp.front(), f2[0]).klass, SignClass::Odd);
}

TEST(TorusAut, SweepIndependentOfJobs) {
  const RootSystem a3 = build_root_system("A3");
  const auto one = property_star_sweep(a3, 4, 1);
  const auto three = property_star_sweep(a3, 4, 3);
  EXPECT_EQ(one.checked, three.checked);
  EXPECT_EQ(one.skipped, three.skipped);
  EXPECT_EQ(one.failed, three.failed);
  ASSERT_EQ(one.failures.size(), three.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    EXPECT_EQ(one.failures[i].first.compiled, three.failures[i].first.compiled);
    EXPECT_EQ(one.failures[i].second.compiled, three.failures[i].second.compiled);
  }
  EXPECT_GT(one.checked, 0);
}

TEST(TorusAut, OrbitPeriodIsTwiceReflectionOrder) {
  const RootSystem b3 = build_root_system("B3");
  int verified = 0;
  for (const auto& a : automorphisms_up_to_order(b3, 6))
    for (const auto& r : b3.positives()) {
      const auto o = reflection_order(b3, a, r);
      if (o.verified) {
        ++verified;
        ASSERT_EQ(o.period, 2 * o.ell);
      }
    }
  EXPECT_GT(verified, 0);
}

TEST(TorusAut, LiftConsistency) {
  for (int r = 4; r <= 7; ++r) {
    const RootSystem rs = build_root_system(SystemType{Family::D, r});
    for (const auto& s : fixed_ortho_subsets(rs, standard_flip(rs))) {
      if (!lifts_to_involution(rs, s)) continue;
      LatticeMap m = LatticeMap::identity(rs.dim());
      for (const auto& a : s) m = m * reflection_matrix(rs, a);
      ASSERT_TRUE(involution_factorization(rs, m)) << to_string(s);
      for (const auto& b : rs.positives()) {
        int sign = 1;
        for (const auto& a : s) sign *= lift_sign(rs, a, b);
        ASSERT_EQ(sign, 1) << to_string(s) << " " << to_string(b);
      }
    }
  }
}
