#include <gtest/gtest.h>

#include <numeric>

#include "liecascade/serialize.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace liecascade;

namespace {

TorusAut spec(const RootSystem& rs, const std::string& text) { return torus_aut_from_json(rs, parse_json(text, "spec")); }

Certificate certify(const Scenario& s) {
  const RootSystem rs = build_root_system(s.type);
  return formality_certificate(rs, spec(rs, s.sigma1), spec(rs, s.sigma2));
}

// Every subgroup is generated by at most two elements.
std::set<std::vector<Elem>> all_subgroups(int k) {
  std::vector<Elem> elems;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < k; ++b) elems.push_back({a, b});
  std::set<std::vector<Elem>> out;
  for (const auto& x : elems)
    for (const auto& y : elems) out.insert(detail::generate({x, y}, k));
  return out;
}

}  // namespace

TEST(Subgroups, SmallCases) {
  const auto k1 = subgroups_of_Z2xZk(1);
  ASSERT_EQ(k1.size(), 2u);
  EXPECT_EQ(shape_name(k1[0]), "Cyclic{1}");
  EXPECT_EQ(shape_name(k1[1]), "Cyclic{2}");
  const auto k2 = subgroups_of_Z2xZk(2);
  EXPECT_EQ(k2.size(), 5u);
  EXPECT_EQ(shape_name(k2.back()), "TwoByR{2}");
  bool found = false;
  for (const auto& h : subgroups_of_Z2xZk(4))
    if (h.elements == detail::generate({{1, 1}}, 4)) {
      found = true;
      EXPECT_EQ(shape_name(h), "Cyclic{4}");
    }
  EXPECT_TRUE(found);
  EXPECT_THROW(subgroups_of_Z2xZk(0), Error);
}

TEST(Subgroups, MatchBruteForceUpTo100) {
  for (int k = 1; k <= 100; ++k) {
    const auto subs = subgroups_of_Z2xZk(k);
    for (const auto& h : subs) {
      const auto [shape, param] = brute_force_shape(h);
      ASSERT_EQ(h.shape, shape) << k;
      ASSERT_EQ(h.param, param) << k;
      std::vector<Elem> gens = h.generators;
      ASSERT_EQ(detail::generate(gens, k), h.elements) << k;
    }
    if (k <= 30) ASSERT_EQ(subs.size(), all_subgroups(k).size()) << k;
  }
}

TEST(Subgroups, CrtCyclic) {
  EXPECT_TRUE(crt_cyclic(2, 3));
  EXPECT_FALSE(crt_cyclic(2, 2));
  for (long n = 1; n <= 50; ++n) EXPECT_TRUE(crt_cyclic(1, n));
  // Z_p x Z_q is cyclic exactly when some element has order pq
  for (int p = 1; p <= 12; ++p)
    for (int q = 1; q <= 12; ++q) {
      int best = 1;
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < q; ++y) best = std::max(best, std::lcm(p / std::gcd(p, x), q / std::gcd(q, y)));
      EXPECT_EQ(crt_cyclic(p, q), best == p * q) << p << " " << q;
    }
}

TEST(Tables, Examples) {
  const auto e6 = involution_table({Family::E, 6});
  bool a1a5 = false, d5 = false;
  for (const auto& r : e6) {
    if (r.inner && r.center_dim == 0 && r.fixed_summands == std::vector<SystemType>{{Family::A, 1}, {Family::A, 5}}) a1a5 = true;
    if (r.inner && r.center_dim == 1 && r.fixed_summands == std::vector<SystemType>{{Family::D, 5}}) d5 = true;
  }
  EXPECT_TRUE(a1a5);
  EXPECT_TRUE(d5);
  bool four_a1 = false;
  for (const auto& r : involution_table({Family::D, 4}))
    if (r.inner && r.center_dim == 0 && r.param == "p=2")
      four_a1 = r.fixed_summands == std::vector<SystemType>(4, {Family::A, 1});
  EXPECT_TRUE(four_a1);
  for (int m = 2; m <= 4; ++m) {
    bool bm = false;
    for (const auto& r : involution_table({Family::A, 2 * m}))
      if (!r.inner && r.fixed_summands == std::vector<SystemType>{{Family::B, m}}) bm = true;
    EXPECT_TRUE(bm) << m;
  }
}

TEST(Tables, RankIntegrity) {
  for (const auto& t : oracle::all_types(8)) {
    const RootSystem rs = build_root_system(t);
    const auto rows = involution_table(t);
    if (t.rank > 1) EXPECT_FALSE(rows.empty()) << t.name();
    for (const auto& row : rows) {
      if (row.inner) {
        EXPECT_EQ(total_rank(row.fixed_summands) + row.center_dim, t.rank) << t.name() << " " << row.pattern << " " << row.param;
      } else {
        const auto nu = automorphism_of_order(rs, 2);
        ASSERT_TRUE(nu) << t.name();
        EXPECT_EQ(total_rank(row.fixed_summands), folded_fixed_type(rs, *nu).rank) << t.name() << " " << row.pattern;
      }
    }
  }
}

TEST(Certificates, SpecExamples) {
  const RootSystem d4 = build_root_system("D4");
  const Certificate both = formality_certificate(d4, spec(d4, "{}"), spec(d4, "{}"));
  EXPECT_EQ(both.case_path, CasePath::BothInnerOrBothOuter);
  ASSERT_TRUE(both.property_star);
  EXPECT_TRUE(*both.property_star);
  EXPECT_EQ(both.verdict, "isotropy formal");

  const RootSystem a5 = build_root_system("A5");
  EXPECT_EQ(formality_certificate(a5, spec(a5, R"({"nu":[5,4,3,2,1]})"), spec(a5, "{}")).case_path, CasePath::OuterInner);

  const auto& s = certificate_scenarios()[18];
  ASSERT_EQ(s.type, "D5");
  const Certificate f2 = certify(s);
  EXPECT_EQ(f2.case_path, CasePath::InnerOuter_D_form2);
  ASSERT_TRUE(f2.lift);
  EXPECT_FALSE(*f2.lift);
  EXPECT_EQ(as_set(f2.omega_normal_form), as_set(d_form2(5)));
  EXPECT_NE(std::find(f2.citations.begin(), f2.citations.end(), "d-series:tnhz-in-g"), f2.citations.end());
}

TEST(Certificates, ScenariosCoverEveryPathAndReverify) {
  std::set<CasePath> seen;
  for (const auto& s : certificate_scenarios()) {
    const RootSystem rs = build_root_system(s.type);
    const TorusAut a = spec(rs, s.sigma1), b = spec(rs, s.sigma2);
    const Certificate c = formality_certificate(rs, a, b);
    EXPECT_EQ(c.case_path, s.expected) << s.type << " " << s.sigma1 << " " << s.sigma2;
    EXPECT_TRUE(reverify_certificate(rs, a, b, c)) << s.type << " " << s.sigma2;
    EXPECT_EQ(c.verdict, "isotropy formal");
    seen.insert(c.case_path);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Certificates, TamperedWitnessFailsReverification) {
  const auto& s = certificate_scenarios()[0];
  const RootSystem rs = build_root_system(s.type);
  const TorusAut a = spec(rs, s.sigma1), b = spec(rs, s.sigma2);
  Certificate c = formality_certificate(rs, a, b);
  c.ranks["dim_s"] += 1;
  EXPECT_FALSE(reverify_certificate(rs, a, b, c));
}

TEST(Certificates, JsonIsDeterministic) {
  for (const auto& s : certificate_scenarios()) EXPECT_EQ(to_json(certify(s)).dump(), to_json(certify(s)).dump());
  const Json j = to_json(certify(certificate_scenarios()[0]));
  for (const char* key : {"case_path", "witnesses", "citations", "verdict"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"omega_normal_form", "parity_even", "ranks"}) EXPECT_TRUE(j["witnesses"].contains(key)) << key;
}

TEST(Certificates, RejectsBadPairs) {
  const RootSystem a3 = build_root_system("A3");
  try {
    formality_certificate(a3, spec(a3, R"({"word":[1]})"), spec(a3, R"({"word":[2]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
  }
  EXPECT_THROW(spec(a3, R"({"bogus":1})"), Error);
  EXPECT_THROW(spec(a3, "not json"), Error);
}
