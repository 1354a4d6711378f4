#include <gtest/gtest.h>

#include <random>

#include "liecascade/cascade.hpp"
#include "liecascade/torusauto.hpp"
#include "oracles.hpp"

using namespace liecascade;

namespace {

std::vector<RatVec> standard_basis(std::size_t n) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(Cascade, OmegaFromSubspace) {
  const RootSystem d4 = build_root_system("D4");
  EXPECT_TRUE(omega_from_subspace(d4, standard_basis(4)).empty());
  EXPECT_EQ(omega_from_subspace(d4, {}).size(), 12u);
  const Root d1{1, 2, 1, 1}, a1{1, 0, 0, 0};
  const TorusAut t = make_torus_aut(d4, reflection_matrix(d4, d1) * reflection_matrix(d4, a1), DiagramAut::identity(4));
  const auto omega = omega_from_subspace(d4, fixed_subspace(t));
  EXPECT_EQ(as_set(omega), (std::set<Root>{d1, a1}));
  EXPECT_THROW(omega_from_subspace(d4, {RatVec(3, Rational(1))}), Error);
}

TEST(Cascade, SmallCascades) {
  EXPECT_EQ(kostant_cascade(build_root_system("A1")), (OrthoSet{{1}}));
  EXPECT_EQ(kostant_cascade(build_root_system("A3")), (OrthoSet{{1, 1, 1}, {0, 1, 0}}));
  EXPECT_EQ(kostant_cascade(build_root_system("D4")), (OrthoSet{{1, 2, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(kostant_cascade(build_root_system("G2")).size(), 2u);
}

TEST(Cascade, CascadesAreMaximalStronglyOrthogonal) {
  for (const auto& t : oracle::all_types(7)) {
    const RootSystem rs = build_root_system(t);
    const OrthoSet c = kostant_cascade(rs);
    ASSERT_TRUE(is_ortho_set(rs, c)) << t.name();
    EXPECT_EQ(c.front(), rs.highest_long()) << t.name();
    EXPECT_TRUE(decomposition_holds(rs, c));
    const auto roots = oracle::closure_roots(rs.cartan());
    for (const auto& b : rs.positives()) {
      if (std::find(c.begin(), c.end(), b) != c.end()) continue;
      const bool all = std::all_of(c.begin(), c.end(), [&](const Root& a) { return oracle::strongly_orthogonal(roots, a.coeffs, b.coeffs) && form_value(rs, a, b) == 0; });
      EXPECT_FALSE(all) << t.name() << " " << to_string(b);
    }
  }
  // cascade sizes: A_n gives ceil(n/2), E8 gives 8
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(kostant_cascade(build_root_system(SystemType{Family::A, n})).size(), static_cast<std::size_t>((n + 1) / 2));
  EXPECT_EQ(kostant_cascade(build_root_system("E8")).size(), 8u);
  EXPECT_EQ(kostant_cascade(build_root_system("E6")).size(), 4u);
}

TEST(Cascade, Parity) {
  const RootSystem a3 = build_root_system("A3");
  const OrthoSet c = kostant_cascade(a3);
  EXPECT_EQ(parity(a3, c, Root{1, 0, 0}), 0);
  EXPECT_EQ(parity(a3, c, Root{0, 1, 0}), 2);
  EXPECT_EQ(parity(a3, c, Root{1, 1, 0}), 2);
  EXPECT_EQ(parity(a3, {}, Root{0, 1, 0}), 0);
  const RootSystem d4 = build_root_system("D4");
  const OrthoSet s{{1, 2, 1, 1}, {1, 0, 0, 0}};
  EXPECT_EQ(parity(d4, s, Root{0, 1, 0, 0}), 0);
  EXPECT_EQ(parity(d4, s, Root{1, 0, 0, 0}), 2);
  EXPECT_TRUE(lifts_to_involution(d4, s));
}

TEST(Cascade, Chains) {
  EXPECT_EQ(a_series_chain(5, 2), (OrthoSet{{1, 1, 1, 1, 1}, {0, 1, 1, 1, 0}}));
  EXPECT_EQ(a_series_chain(4, 2), (OrthoSet{{1, 1, 1, 1}, {0, 1, 1, 0}}));
  EXPECT_THROW(a_series_chain(4, 3), Error);
  EXPECT_EQ(d_delta(5, 1), (Root{1, 2, 2, 1, 1}));
  EXPECT_EQ(d_delta(5, 3), (Root{0, 0, 1, 1, 1}));
  EXPECT_EQ(d_series_chain(7, {1, 3, 5}).size(), 3u);
  EXPECT_THROW(d_series_chain(6, {2}), Error);
  EXPECT_THROW(d_series_chain(6, {5}), Error);
  EXPECT_EQ(d_form1(6, 3), (OrthoSet{d_delta(6, 1), simple_root(6, 1), d_delta(6, 3), simple_root(6, 3)}));
  EXPECT_EQ(d_form2(5), (OrthoSet{d_delta(5, 1), d_delta(5, 3)}));
  EXPECT_EQ(d_form2(6), (OrthoSet{d_delta(6, 1), d_delta(6, 3)}));
  for (int r = 4; r <= 9; ++r) {
    const RootSystem rs = build_root_system(SystemType{Family::D, r});
    EXPECT_TRUE(is_ortho_set(rs, d_form2(r)));
    for (int m = 1; m <= r - 2; m += 2) EXPECT_TRUE(is_ortho_set(rs, d_form1(r, m)));
  }
  for (int n = 1; n <= 9; ++n)
    for (int m = 1; m <= (n + 1) / 2; ++m) EXPECT_TRUE(is_ortho_set(build_root_system(SystemType{Family::A, n}), a_series_chain(n, m)));
}

TEST(Cascade, NormalFormExamples) {
  // {delta_1, delta_3, delta_5} in D7, moved by a flip-commuting element
  const RootSystem d7 = build_root_system("D7");
  const DiagramAut nu = standard_flip(d7);
  const WeylWord w{{5, 3, 1, 6, 7}};
  OrthoSet moved;
  for (const auto& r : d_form2(7)) moved.push_back(d7.positive_rep(apply(d7, w, r)));
  ASSERT_NE(as_set(moved), as_set(d_form2(7)));
  const NormalForm nf = normal_form(d7, moved, nu);
  EXPECT_EQ(as_set(nf.roots), as_set(d_form2(7)));
  for (std::size_t k = 0; k < moved.size(); ++k)
    EXPECT_EQ(as_set(nf.roots).count(d7.positive_rep(apply(d7, nf.word, moved[k]))), 1u);
  // the word commutes with the flip
  const LatticeMap m = compile(d7, nf.word), p = induced_lattice_map(d7, nu);
  EXPECT_EQ(m * p, p * m);

  const RootSystem a3 = build_root_system("A3");
  EXPECT_EQ(normal_form(a3, OrthoSet{{0, 1, 0}}, DiagramAut{{3, 2, 1}}).roots, (OrthoSet{{1, 1, 1}}));
  EXPECT_THROW(normal_form(a3, OrthoSet{{1, 0, 0}}, DiagramAut{{3, 2, 1}}), Error);
}

TEST(Cascade, NormalFormIdempotent) {
  for (const char* name : {"A5", "D5", "D6", "E6"}) {
    const RootSystem rs = build_root_system(name);
    const DiagramAut nu = standard_flip(rs);
    for (const auto& s : fixed_ortho_subsets(rs, nu)) {
      const NormalForm once = normal_form(rs, s, nu);
      const NormalForm twice = normal_form(rs, once.roots, nu);
      ASSERT_EQ(as_set(twice.roots), as_set(once.roots)) << name << " " << to_string(s);
      ASSERT_TRUE(twice.word.empty()) << name;
    }
  }
}

TEST(Cascade, ClassifyExamples) {
  const RootSystem d4 = build_root_system("D4");
  const auto c4 = classify_d_normal_form(d4, OrthoSet{{1, 2, 1, 1}, {1, 0, 0, 0}}, standard_flip(d4));
  EXPECT_EQ(c4.kind, DFormKind::Form1);
  EXPECT_EQ(c4.index, 1);
  const RootSystem d5 = build_root_system("D5");
  const auto c5 = classify_d_normal_form(d5, d_form2(5), standard_flip(d5));
  EXPECT_EQ(c5.kind, DFormKind::Form2);
  EXPECT_EQ(c5.index, 3);

  const RootSystem d6 = build_root_system("D6");
  const DiagramAut nu = standard_flip(d6);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 4);
  const std::vector<std::vector<int>> gens = {{1}, {2}, {3}, {4}, {5, 6}};
  for (int trial = 0; trial < 20; ++trial) {
    WeylWord w;
    for (int k = 0; k < 12; ++k)
      for (int l : gens[static_cast<std::size_t>(pick(rng))]) w.letters.push_back(l);
    OrthoSet moved;
    for (const auto& r : d_form1(6, 3)) moved.push_back(d6.positive_rep(apply(d6, w, r)));
    const auto c = classify_d_normal_form(d6, moved, nu);
    EXPECT_EQ(c.kind, DFormKind::Form1);
    EXPECT_EQ(c.index, 3);
  }
  EXPECT_THROW(classify_d_normal_form(d6, {}, nu), Error);
  EXPECT_THROW(classify_d_normal_form(build_root_system("A5"), OrthoSet{{1, 1, 1, 1, 1}}, DiagramAut{{5, 4, 3, 2, 1}}), Error);
  // D6 Form2 has odd parity at a_4 on its own normal form
  try {
    classify_d_normal_form(d6, d_form2(6), nu);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(Cascade, FixedSubsetsAreFixedAndOrthogonal) {
  const RootSystem d5 = build_root_system("D5");
  const DiagramAut nu = standard_flip(d5);
  const auto subsets = fixed_ortho_subsets(d5, nu);
  EXPECT_FALSE(subsets.empty());
  for (const auto& s : subsets) {
    ASSERT_TRUE(is_ortho_set(d5, s));
    for (const auto& r : s) ASSERT_EQ(apply(nu, r), r);
  }
  EXPECT_EQ(subsets, fixed_ortho_subsets(d5, nu));
}
