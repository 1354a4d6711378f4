#pragma once

// Involution tables, subgroups of Z2 x Zk, and certificates that replay the
// case analysis for a commuting pair (sigma1, sigma2) with computed witnesses.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecascade/cascade.hpp"
#include "liecascade/diagram.hpp"
#include "liecascade/error.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/torusauto.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade {

// ---------------------------------------------------------------------------
// Subgroups of Z2 x Zk

struct Elem {
  int a = 0;  // mod 2
  int b = 0;  // mod k
  auto operator<=>(const Elem&) const = default;
};

enum class GroupShape { Cyclic, TwoByR };

struct AbelianSubgroup {
  int k = 1;
  std::vector<Elem> elements;    // sorted
  std::vector<Elem> generators;  // (1, a), (0, b) style when possible
  GroupShape shape = GroupShape::Cyclic;
  int param = 1;  // l for Cyclic{l}, r for TwoByR{r}

  int size() const { return static_cast<int>(elements.size()); }
};

inline std::string shape_name(const AbelianSubgroup& g) {
  return (g.shape == GroupShape::Cyclic ? "Cyclic{" : "TwoByR{") + std::to_string(g.param) + "}";
}

namespace detail {

inline Elem add(Elem x, Elem y, int k) { return {(x.a + y.a) % 2, (x.b + y.b) % k}; }

inline std::vector<Elem> generate(const std::vector<Elem>& gens, int k) {
  std::set<Elem> seen{{0, 0}};
  std::vector<Elem> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        const Elem s = add(e, g, k);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline int element_order(Elem e, int k) {
  Elem x = e;
  int n = 1;
  while (x.a != 0 || x.b != 0) {
    x = add(x, e, k);
    ++n;
  }
  return n;
}

struct ExtGcd {
  long g, m, n;  // g = m*a + n*b
};

inline ExtGcd ext_gcd(long a, long b) {
  if (b == 0) return {a, 1, 0};
  const ExtGcd r = ext_gcd(b, a % b);
  return {r.g, r.n, r.m - (a / b) * r.n};
}

}  // namespace detail

/// Classification by the Bezout case split on generators (1, a), (0, b).
inline void classify_subgroup(AbelianSubgroup& h) {
  const int k = h.k;
  std::vector<int> second;  // H meets {0} x Zk in a cyclic group
  std::optional<int> a;
  for (const auto& e : h.elements) {
    if (e.a == 0) second.push_back(e.b);
    else if (!a) a = e.b;
  }
  const int gamma2 = static_cast<int>(second.size());
  const int b = k / gamma2;
  if (!a) {
    h.generators.clear();
    if (b % k != 0) h.generators.push_back({0, b % k});
    h.shape = GroupShape::Cyclic;
    h.param = gamma2;
    return;
  }
  h.generators = {{1, *a}};
  if (b % k != 0) h.generators.push_back({0, b % k});
  const auto eg = detail::ext_gcd(*a, b);
  const long g = eg.g;
  const bool m_even = eg.m % 2 == 0;
  bool contains_unit = false;  // (1, 0) in H
  if (m_even) contains_unit = true;
  else if ((*a / g) % 2 == 0 || (b / g) % 2 == 1) contains_unit = true;
  if (contains_unit) {
    // Z2 x Gamma2, which is cyclic when |Gamma2| is odd
    if (gamma2 % 2 == 1) {
      h.shape = GroupShape::Cyclic;
      h.param = 2 * gamma2;
    } else {
      h.shape = GroupShape::TwoByR;
      h.param = gamma2;
    }
  } else {
    h.shape = GroupShape::Cyclic;
    h.param = h.size();
    h.generators = {{1, static_cast<int>(g % k)}};
  }
}

/// Brute-force tag: cyclic iff some element has order |H|.
inline std::pair<GroupShape, int> brute_force_shape(const AbelianSubgroup& h) {
  int best = 1;
  for (const auto& e : h.elements) best = std::max(best, detail::element_order(e, h.k));
  if (best == h.size()) return {GroupShape::Cyclic, h.size()};
  return {GroupShape::TwoByR, h.size() / 2};
}

/// Cyclic subgroups first, then joins of pairs, without repetition.
inline std::vector<AbelianSubgroup> subgroups_of_Z2xZk(int k) {
  if (k < 1) fail(ErrorCode::InvalidCount, "k must be positive");
  std::set<std::vector<Elem>> cyclic;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < k; ++b) cyclic.insert(detail::generate({{a, b}}, k));
  std::set<std::vector<Elem>> all(cyclic.begin(), cyclic.end());
  const std::vector<std::vector<Elem>> cyc(cyclic.begin(), cyclic.end());
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t j = i + 1; j < cyc.size(); ++j) {
      std::vector<Elem> gens{cyc[i].size() > 1 ? cyc[i][1] : cyc[i][0]};
      for (const auto& e : cyc[j]) gens.push_back(e);
      for (const auto& e : cyc[i]) gens.push_back(e);
      all.insert(detail::generate(gens, k));
    }
  std::vector<AbelianSubgroup> out;
  for (const auto& elems : all) {
    AbelianSubgroup h{k, elems, {}, GroupShape::Cyclic, 1};
    classify_subgroup(h);
    out.push_back(std::move(h));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

inline bool crt_cyclic(long p, long q) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidCount, "orders must be positive");
  return std::gcd(p, q) == 1;
}

// ---------------------------------------------------------------------------
// Involution classification tables

struct InvolutionClassRow {
  SystemType ambient;
  bool inner = true;
  std::vector<SystemType> fixed_summands;
  int center_dim = 0;
  std::string pattern;  // source label such as "d_p+b_{n-p}"
  std::string param;    // concrete parameter, e.g. "p=2"
};

inline int total_rank(const std::vector<SystemType>& s) {
  int r = 0;
  for (const auto& t : s) r += t.rank;
  return r;
}

namespace detail {

inline std::vector<SystemType> join(std::vector<SystemType> x, const std::vector<SystemType>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

inline std::vector<SystemType> cs(Family f, int n) { return canonical_summands(f, n); }

}  // namespace detail

/// All rows that apply to the given type, parameters expanded. Small-rank
/// coincidences are applied (b_2 = c_2, d_3 = a_3); labels keep the source
/// pattern they were read from.
inline std::vector<InvolutionClassRow> involution_table(SystemType t) {
  using detail::cs;
  using detail::join;
  t = make_type(t.family, t.rank);
  const int n = t.rank;
  std::vector<InvolutionClassRow> rows;
  const auto row = [&](bool inner, std::vector<SystemType> s, int center, std::string pattern, std::string param = "") {
    rows.push_back({t, inner, std::move(s), center, std::move(pattern), std::move(param)});
  };
  const auto p_str = [](int p) { return "p=" + std::to_string(p); };

  // inner, semisimple fixed algebra
  switch (t.family) {
    case Family::B:
      for (int p = 2; p <= n; ++p) row(true, join(cs(Family::D, p), cs(Family::B, n - p)), 0, "d_p+b_{n-p}", p_str(p));
      break;
    case Family::C:
      for (int p = 1; p <= n / 2; ++p) row(true, join(cs(Family::C, p), cs(Family::C, n - p)), 0, "c_p+c_{n-p}", p_str(p));
      break;
    case Family::D:
      for (int p = 2; p <= n / 2; ++p) row(true, join(cs(Family::D, p), cs(Family::D, n - p)), 0, "d_p+d_{n-p}", p_str(p));
      break;
    case Family::G: row(true, {{Family::A, 1}, {Family::A, 1}}, 0, "a_1+a_1"); break;
    case Family::F:
      row(true, {{Family::B, 4}}, 0, "b_4");
      row(true, {{Family::A, 1}, {Family::C, 3}}, 0, "a_1+c_3");
      break;
    case Family::E:
      if (n == 6) row(true, {{Family::A, 1}, {Family::A, 5}}, 0, "a_1+a_5");
      if (n == 7) {
        row(true, {{Family::A, 7}}, 0, "a_7");
        row(true, {{Family::A, 1}, {Family::D, 6}}, 0, "a_1+d_6");
      }
      if (n == 8) {
        row(true, {{Family::A, 1}, {Family::E, 7}}, 0, "a_1+e_7");
        row(true, {{Family::D, 8}}, 0, "d_8");
      }
      break;
    case Family::A: break;
  }

  // inner, one-dimensional center
  switch (t.family) {
    case Family::A:
      for (int p = 0; p <= (n - 1) / 2; ++p) row(true, join(cs(Family::A, p), cs(Family::A, n - p - 1)), 1, "a_p+a_{n-p-1}", p_str(p));
      break;
    case Family::B:
      if (n > 2) row(true, cs(Family::B, n - 1), 1, "b_{n-1}");
      else row(true, cs(Family::A, 1), 1, "a_{n-1}");  // B2 = C2
      break;
    case Family::C: row(true, cs(Family::A, n - 1), 1, "a_{n-1}"); break;
    case Family::D:
      if (n == 4) {
        row(true, {{Family::A, 3}}, 1, "a_3");
      } else {
        row(true, cs(Family::D, n - 1), 1, "d_{n-1}");
        row(true, cs(Family::A, n - 1), 1, "a_{n-1}");
      }
      break;
    case Family::E:
      if (n == 6) row(true, {{Family::D, 5}}, 1, "d_5");
      if (n == 7) row(true, {{Family::E, 6}}, 1, "e_6");
      break;
    default: break;
  }

  // outer, semisimple fixed algebra
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0 && n / 2 >= 2) row(false, cs(Family::B, n / 2), 0, "b_n");
      if (n % 2 == 1 && (n + 1) / 2 > 2) {
        row(false, cs(Family::D, (n + 1) / 2), 0, "d_n");
        row(false, cs(Family::C, (n + 1) / 2), 0, "c_n");
      }
      if (n == 3)  // a_3 = d_3, read from the d_{n+1} column with n = 2
        for (int p = 0; p <= 1; ++p) row(false, join(cs(Family::B, p), cs(Family::B, 2 - p)), 0, "b_p+b_{n-p}", p_str(p));
      break;
    case Family::D:
      for (int p = 0; p <= (n - 1) / 2; ++p)
        row(false, join(cs(Family::B, p), cs(Family::B, n - 1 - p)), 0, "b_p+b_{n-p}", p_str(p));
      break;
    case Family::E:
      if (n == 6) {
        row(false, {{Family::C, 4}}, 0, "c_4");
        row(false, {{Family::F, 4}}, 0, "f_4");
      }
      break;
    default: break;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Normalization of a pair with property star

struct PairNormalization {
  WeylWord word;       // w
  DiagramAut nu;       // w (R sigma2) w^-1 as a diagram automorphism
  OrthoSet omega;      // positive representatives of w(Omega+), sorted
  RatVec regular;      // regular vector fixed by R sigma2
};

inline LatticeMap reflection_product(const RootSystem& rs, const OrthoSet& s) {
  LatticeMap m = LatticeMap::identity(rs.dim());
  for (const auto& r : s) m = m * reflection_matrix(rs, r);
  return m;
}

/// With property star, R = prod s_a over Omega+ and R sigma2 fixes a regular
/// vector in s + span(Omega); raising it to the dominant chamber conjugates
/// sigma2 to (prod of reflections) o nu.
inline PairNormalization normalize_pair(const RootSystem& rs, const PairSetup& p) {
  if (!check_property_star(p))
    throw CounterexampleFound("property star fails for the pair", coords(p.omega_plus));
  if (!is_ortho_set(rs, p.omega_plus))
    throw CounterexampleFound("vanishing set is not strongly orthogonal", coords(p.omega_plus));
  const LatticeMap rho = reflection_product(rs, p.omega_plus) * p.sigma2.compiled;

  std::vector<RatVec> basis = p.s;
  for (const auto& a : p.omega_plus) basis.push_back(a.to_rational());
  const auto regular = [&](const RatVec& x) {
    return std::all_of(rs.positives().begin(), rs.positives().end(),
                       [&](const Root& b) { return form_value(rs, b.to_rational(), x) != Rational(0); });
  };
  std::optional<RatVec> x;
  for (Int t = 2; t < 10000 && !x; ++t) {
    RatVec v(rs.dim(), Rational(0));
    Int c = 1;
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * b[i];
      c *= t;
    }
    if (regular(v)) x = v;
  }
  if (!x) fail(ErrorCode::InternalInvariantViolation, "no regular vector found in s + span(Omega)");

  auto [dom, applied] = ascend(rs, *x, rs.simples());
  PairNormalization out;
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) out.word.letters.push_back(static_cast<int>(*it) + 1);
  out.regular = *x;
  const LatticeMap w = compile(rs, out.word);
  const LatticeMap winv = compile(rs, inverse(out.word));
  const LatticeMap conj = w * rho * winv;
  out.nu = DiagramAut::identity(rs.rank());
  for (std::size_t j = 0; j < rs.dim(); ++j) {
    int hits = 0;
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      if (conj(i, j) == 1) {
        out.nu.perm[j] = static_cast<int>(i) + 1;
        ++hits;
      } else if (conj(i, j) != 0) {
        hits = 2;
      }
    }
    if (hits != 1) throw CounterexampleFound("normalized map is not a diagram automorphism", coords(p.omega_plus));
  }
  if (!is_diagram_aut(rs, out.nu)) throw CounterexampleFound("normalized permutation breaks the Cartan matrix", coords(p.omega_plus));
  for (const auto& a : p.omega_plus) out.omega.push_back(rs.positive_rep(apply(w, a)));
  std::sort(out.omega.begin(), out.omega.end(), positive_order);
  for (const auto& a : out.omega)
    if (apply(out.nu, a) != a) throw CounterexampleFound("normalized set is not fixed by the diagram part", coords(out.omega));
  if (w * p.sigma2.compiled * winv != reflection_product(rs, out.omega) * induced_lattice_map(rs, out.nu))
    fail(ErrorCode::InternalInvariantViolation, "normalization does not reproduce sigma2");
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CasePath {
  BothInnerOrBothOuter,
  OuterInner,
  InnerOuter_E6,
  InnerOuter_A,
  InnerOuter_D_order3,
  InnerOuter_D_form1,
  InnerOuter_D_form2,
};

inline std::string_view to_string(CasePath c) {
  switch (c) {
    case CasePath::BothInnerOrBothOuter: return "BothInnerOrBothOuter";
    case CasePath::OuterInner: return "OuterInner";
    case CasePath::InnerOuter_E6: return "InnerOuter_E6";
    case CasePath::InnerOuter_A: return "InnerOuter_A";
    case CasePath::InnerOuter_D_order3: return "InnerOuter_D_order3";
    case CasePath::InnerOuter_D_form1: return "InnerOuter_D_form1";
    case CasePath::InnerOuter_D_form2: return "InnerOuter_D_form2";
  }
  return "?";
}

struct Certificate {
  CasePath case_path = CasePath::BothInnerOrBothOuter;
  std::string type;
  bool sigma1_inner = true;
  bool sigma2_inner = true;
  int sigma2_order = 1;
  OrthoSet omega;  // raw vanishing set
  std::optional<bool> property_star;
  OrthoSet omega_normal_form;
  std::vector<int> nu_normal_form;
  std::optional<bool> parity_even;
  std::optional<bool> lift;
  std::optional<int> form_index;
  std::map<std::string, long> ranks;
  std::vector<std::string> citations;
  std::string verdict = "isotropy formal";
};

namespace detail {

inline void attach_star_witnesses(const RootSystem& rs, const PairSetup& p, Certificate& c) {
  c.property_star = check_property_star(p);
  const auto norm = normalize_pair(rs, p);
  c.omega_normal_form = normal_form(rs, norm.omega, norm.nu).roots;
  c.nu_normal_form = norm.nu.perm;
  const auto rb = rank_bound(p);
  if (rb.lhs > rb.rhs) throw CounterexampleFound("rank bound violated", coords(p.omega_plus));
  c.ranks["dim_s"] = rb.lhs;
  c.ranks["dim_fix_sigma1_minus_omega"] = rb.rhs;
  c.ranks["rank_bound_equality"] = rb.equality ? 1 : 0;
}

// Conjugates nu to the standard D flip by a diagram automorphism and carries
// the set along.
inline OrthoSet to_standard_flip(const RootSystem& rs, const DiagramAut& nu, const OrthoSet& s) {
  const DiagramAut flip = standard_flip(rs);
  for (const auto& pi : diagram_automorphisms(rs))
    if (compose(compose(pi, nu), inverse(pi)) == flip) {
      OrthoSet out;
      for (const auto& r : s) out.push_back(apply(pi, r));
      std::sort(out.begin(), out.end(), positive_order);
      return out;
    }
  fail(ErrorCode::InternalInvariantViolation, "diagram part is not conjugate to the standard flip");
}

// Lower bound on the sigma2-fixed rank inside a fixed algebra row: every
// summand keeps at least its minimal outer fixed rank, or its full rank when
// it has no outer automorphism; the center may be negated.
inline int row_rank_lower_bound(const InvolutionClassRow& row) {
  int bound = 0;
  for (const auto& t : row.fixed_summands) {
    try {
      bound += std::min(t.rank, min_outer_fixed_rank(t));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoOuter) throw;
      bound += t.rank;
    }
  }
  return bound;
}

}  // namespace detail

/// Selects the case by the inner/outer flags and records witnesses. Any
/// witness that fails raises CounterexampleFound; the verdict never changes.
inline Certificate formality_certificate(const RootSystem& rs, const TorusAut& sigma1, const TorusAut& sigma2) {
  const PairSetup p = make_pair(rs, sigma1, sigma2);
  Certificate c;
  c.type = rs.type().name();
  c.sigma1_inner = sigma1.inner();
  c.sigma2_inner = sigma2.inner();
  c.sigma2_order = sigma2.order;
  c.omega = p.omega_plus;

  if (sigma1.inner() == sigma2.inner()) {
    c.case_path = CasePath::BothInnerOrBothOuter;
    detail::attach_star_witnesses(rs, p, c);
    c.parity_even = std::all_of(rs.positives().begin(), rs.positives().end(),
                                [&](const Root& b) { return parity(rs, c.omega_normal_form, b) % 2 == 0; });
    c.citations = {"same-type-pair:sigma1*sigma2^-1-inner", "property-star", "torus-normal-form", "rank-bound"};
    return c;
  }

  if (!sigma1.inner()) {
    c.case_path = CasePath::OuterInner;
    // tau2 = sigma1 sigma2 is inner and has the same joint fixed space
    const TorusAut tau = torus_aut_from_matrix(rs, sigma1.compiled * sigma2.compiled);
    const PairSetup q = make_pair(rs, sigma1, tau);
    c.ranks["dim_s"] = static_cast<long>(p.s.size());
    c.ranks["dim_s_tau2"] = static_cast<long>(q.s.size());
    c.ranks["tau2_inner"] = tau.inner() ? 1 : 0;
    if (q.s.size() != p.s.size()) throw CounterexampleFound("tau2 changes the joint fixed space", coords(p.omega_plus));
    c.citations = {"outer-inner:tau2=sigma1*sigma2", "same-type-pair:sigma1*tau2^-1-inner", "maximal-torus-transfer"};
    return c;
  }

  // sigma1 inner, sigma2 outer
  const Family fam = rs.type().family;
  const int dim_s = static_cast<int>(p.s.size());
  detail::attach_star_witnesses(rs, p, c);
  if (fam == Family::E) {
    c.case_path = CasePath::InnerOuter_E6;
    c.ranks["min_outer_fixed_rank"] = min_outer_fixed_rank(rs.type());
    int lower = rs.rank();
    for (const auto& row : involution_table(rs.type()))
      if (row.inner) lower = std::min(lower, detail::row_rank_lower_bound(row));
    c.ranks["row_rank_lower_bound"] = lower;
    c.ranks["dim_s"] = dim_s;
    if (lower != 4 || c.ranks["min_outer_fixed_rank"] != 4)
      throw CounterexampleFound("e6 rank squeeze does not give rank 4", coords(p.omega_plus));
    c.citations = {"e6:rank-k-equals-4", "maximal-torus-of-k2", "z_k-symmetric-formality"};
    return c;
  }

  const DiagramAut nu{c.nu_normal_form};
  if (fam == Family::A) {
    c.case_path = CasePath::InnerOuter_A;
    const NormalForm nf = normal_form(rs, c.omega_normal_form, nu);
    c.omega_normal_form = nf.roots;
    const int n = rs.rank();
    const int ell = (n + 1) / 2;
    const int m = static_cast<int>(nf.roots.size());
    const bool chain = m == 0 || as_set(nf.roots) == as_set(a_series_chain(n, m));
    if (!chain) throw CounterexampleFound("A-series normal form is not a delta chain", coords(nf.roots));
    std::vector<RatVec> deltas, sums;
    for (int j = m + 1; j <= ell; ++j) {
      deltas.push_back(a_series_chain(n, j).back().to_rational());
      sums.push_back((simple_root(n, j) + simple_root(n, n - j + 1)).to_rational());
    }
    const bool basis_identity = same_span(deltas, sums);
    if (!basis_identity) throw CounterexampleFound("delta chain span differs from folded coroot span", coords(nf.roots));
    c.form_index = m;
    c.ranks["chain_length"] = m;
    c.ranks["ell"] = ell;
    c.ranks["span_dim"] = static_cast<long>(rank_of(deltas));
    c.citations = {"a-series:delta-chain", "a-series:s-basis-K_beta", "tnhz:dynkin-fixed-subalgebra"};
    return c;
  }

  if (fam == Family::D && order(nu) == 3) {
    c.case_path = CasePath::InnerOuter_D_order3;
    c.ranks["min_outer_fixed_rank"] = min_outer_fixed_rank(rs.type());
    c.ranks["dim_s"] = dim_s;
    if (dim_s < 1 || dim_s > 2) throw CounterexampleFound("triality pair with unexpected rank", coords(p.omega_plus));
    c.citations = {dim_s == 2 ? "d4-triality:s-maximal-in-k2" : "d4-triality:rank-1-tnhz", "z_k-symmetric-formality"};
    return c;
  }

  if (fam == Family::D) {
    const OrthoSet std_set = detail::to_standard_flip(rs, nu, c.omega_normal_form);
    const DiagramAut flip = standard_flip(rs);
    if (std_set.empty()) {
      c.case_path = CasePath::InnerOuter_D_form1;
      c.form_index = 0;
      c.lift = true;
      c.parity_even = true;
      c.omega_normal_form = {};
      c.citations = {"d-series:empty-omega-involution", "z2xz2-symmetric-formality"};
      return c;
    }
    const DFormClass cls = classify_d_normal_form(rs, std_set, flip);
    c.omega_normal_form = cls.normal.roots;
    c.form_index = cls.index;
    c.lift = lifts_to_involution(rs, cls.normal.roots);
    c.parity_even = *c.lift;
    if (cls.kind == DFormKind::Form1) {
      c.case_path = CasePath::InnerOuter_D_form1;
      if (!*c.lift) throw CounterexampleFound("form-1 set does not lift to an involution", coords(cls.normal.roots));
      c.citations = {"d-series:normal-form-1", "d-series:lift-to-involution", "z2xz2-symmetric-formality"};
    } else {
      c.case_path = CasePath::InnerOuter_D_form2;
      if (*c.lift) throw CounterexampleFound("form-2 set unexpectedly lifts", coords(cls.normal.roots));
      const int r = rs.rank();
      if (r % 2 == 0) throw CounterexampleFound("form-2 set with even rank", coords(cls.normal.roots));
      const int q = (r - 1) / 2;
      c.ranks["q"] = q;
      c.ranks["rank_g_prime"] = 2 * q;
      c.ranks["rank_k"] = q;
      c.ranks["min_outer_fixed_rank_a2q"] = min_outer_fixed_rank({Family::A, 2 * q});
      c.citations = {"d-series:normal-form-2", "d-series:tnhz-in-g", "maximal-torus-transfer"};
    }
    return c;
  }
  fail(ErrorCode::UnsupportedType, rs.type().name() + " has no outer automorphism");
}

/// Re-executes every witness op and compares with the recorded values.
inline bool reverify_certificate(const RootSystem& rs, const TorusAut& sigma1, const TorusAut& sigma2, const Certificate& c) {
  const PairSetup p = make_pair(rs, sigma1, sigma2);
  if (p.omega_plus != c.omega) return false;
  if (c.property_star && *c.property_star != check_property_star(p)) return false;
  if (c.ranks.count("dim_s") && c.ranks.at("dim_s") != static_cast<long>(p.s.size())) return false;
  if (c.ranks.count("min_outer_fixed_rank") && c.ranks.at("min_outer_fixed_rank") != min_outer_fixed_rank(rs.type()))
    return false;
  if (c.ranks.count("dim_fix_sigma1_minus_omega") && c.ranks.at("dim_fix_sigma1_minus_omega") != rank_bound(p).rhs) return false;
  if (c.lift && !c.omega_normal_form.empty() && *c.lift != lifts_to_involution(rs, c.omega_normal_form)) return false;
  if (c.case_path == CasePath::InnerOuter_A && c.form_index && *c.form_index > 0 &&
      as_set(c.omega_normal_form) != as_set(a_series_chain(rs.rank(), *c.form_index)))
    return false;
  if (c.case_path == CasePath::InnerOuter_D_form1 && c.form_index && *c.form_index > 0 &&
      as_set(c.omega_normal_form) != as_set(d_form1(rs.rank(), *c.form_index)))
    return false;
  if (c.case_path == CasePath::InnerOuter_D_form2 && as_set(c.omega_normal_form) != as_set(d_form2(rs.rank())))
    return false;
  const Certificate again = formality_certificate(rs, sigma1, sigma2);
  return again.case_path == c.case_path && again.omega_normal_form == c.omega_normal_form && again.ranks == c.ranks &&
         again.lift == c.lift && again.parity_even == c.parity_even && again.nu_normal_form == c.nu_normal_form &&
         again.citations == c.citations;
}

}  // namespace liecascade
