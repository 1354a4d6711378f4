#pragma once

// Finite-order automorphisms of the root lattice written as w o nu, commuting
// pairs of them, and the root-level sign calculus for lifting reflections.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "liecascade/cascade.hpp"
#include "liecascade/diagram.hpp"
#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade {

/// compiled = weyl_part * (permutation matrix of diag_part).
struct TorusAut {
  LatticeMap weyl_part;
  DiagramAut diag_part;
  LatticeMap compiled;
  int order = 1;

  bool inner() const { return diag_part.is_identity(); }
};

inline TorusAut make_torus_aut(const RootSystem& rs, const LatticeMap& w, const DiagramAut& nu) {
  if (!is_weyl_element(rs, w)) fail(ErrorCode::NotWeyl, "Weyl part is not in the Weyl group");
  TorusAut a{w, nu, w * induced_lattice_map(rs, nu), 1};
  const auto ord = matrix_order(a.compiled, 100000);
  if (!ord) fail(ErrorCode::InternalInvariantViolation, "automorphism has no finite order");
  a.order = *ord;
  return a;
}

inline TorusAut make_torus_aut(const RootSystem& rs, const WeylWord& w, const DiagramAut& nu) {
  return make_torus_aut(rs, compile(rs, w), nu);
}

/// Splits an automorphism of the root system into Weyl and diagram parts.
inline TorusAut torus_aut_from_matrix(const RootSystem& rs, const LatticeMap& m) {
  if (!is_root_isometry(rs, m)) fail(ErrorCode::NotWeyl, "matrix is not an automorphism of the root system");
  const IntVec x = two_rho(rs);
  auto [v, applied] = ascend(rs, m * std::span<const Int>(x), rs.simples());
  LatticeMap up = LatticeMap::identity(rs.dim());
  for (auto k : applied) up = simple_reflection_matrix(rs, static_cast<int>(k) + 1) * up;
  const LatticeMap p = up * m;  // a permutation of the simple roots
  DiagramAut nu = DiagramAut::identity(rs.rank());
  for (std::size_t j = 0; j < rs.dim(); ++j) {
    std::optional<int> image;
    for (std::size_t i = 0; i < rs.dim(); ++i)
      if (p(i, j) == 1) image = static_cast<int>(i) + 1;
    if (!image) fail(ErrorCode::InternalInvariantViolation, "dominant chamber not preserved by a permutation");
    nu.perm[j] = *image;
  }
  LatticeMap pinv = induced_lattice_map(rs, inverse(nu));
  return make_torus_aut(rs, m * pinv, nu);
}

inline std::vector<RatVec> fixed_subspace(const TorusAut& a) {
  return kernel_basis(to_rational(a.compiled - LatticeMap::identity(a.compiled.rows())));
}

struct PairSetup {
  TorusAut sigma1;
  TorusAut sigma2;
  std::vector<RatVec> s;        // joint fixed space
  std::vector<Root> omega_plus;  // positive roots vanishing on s
};

inline bool commute(const LatticeMap& a, const LatticeMap& b) { return a * b == b * a; }

inline PairSetup make_pair(const RootSystem& rs, const TorusAut& sigma1, const TorusAut& sigma2) {
  if (sigma1.compiled.rows() != rs.dim() || sigma2.compiled.rows() != rs.dim())
    fail(ErrorCode::ShapeError, "automorphism size does not match rank");
  if (!commute(sigma1.compiled, sigma2.compiled)) fail(ErrorCode::NotCommuting, "the two automorphisms do not commute");
  if (sigma1.order > 2) fail(ErrorCode::NotInvolution, "first automorphism has order " + std::to_string(sigma1.order));
  const LatticeMap id = LatticeMap::identity(rs.dim());
  PairSetup p{sigma1, sigma2, joint_kernel(to_rational(sigma1.compiled - id), to_rational(sigma2.compiled - id)), {}};
  p.omega_plus = omega_from_subspace(rs, p.s);
  return p;
}

/// sigma2 sends every vanishing root to its negative.
inline bool check_property_star(const PairSetup& p) {
  return std::all_of(p.omega_plus.begin(), p.omega_plus.end(),
                     [&](const Root& a) { return apply(p.sigma2.compiled, a) == -a; });
}

struct ReflectionOrder {
  int ell = 0;
  bool verified = false;
  int period = 0;
};

/// ell: number of linearly independent consecutive images a, a(alpha), ...
/// verified: a^ell(alpha) = -alpha; period: orbit length of alpha.
inline ReflectionOrder reflection_order(const RootSystem& rs, const TorusAut& a, const Root& alpha) {
  rs.require_root(alpha, "argument");
  ReflectionOrder out;
  std::vector<RatVec> images{alpha.to_rational()};
  Root cur = alpha;
  for (;;) {
    Root next = apply(a.compiled, cur);
    images.push_back(next.to_rational());
    if (rank_of(images) < images.size()) break;
    cur = next;
  }
  out.ell = static_cast<int>(images.size()) - 1;
  Root img = alpha;
  for (int j = 0; j < out.ell; ++j) img = apply(a.compiled, img);
  out.verified = img == -alpha;
  img = apply(a.compiled, alpha);
  out.period = 1;
  while (img != alpha) {
    img = apply(a.compiled, img);
    ++out.period;
  }
  if (out.verified && out.period != 2 * out.ell)
    fail(ErrorCode::InternalInvariantViolation, "orbit period differs from twice the reflection order");
  return out;
}

struct RankBound {
  int lhs = 0;
  int rhs = 0;
  bool equality = false;
};

/// dim s against dim Fix(sigma1) - |Omega+|.
inline RankBound rank_bound(const PairSetup& p) {
  RankBound b;
  b.lhs = static_cast<int>(p.s.size());
  b.rhs = static_cast<int>(fixed_subspace(p.sigma1).size()) - static_cast<int>(p.omega_plus.size());
  b.equality = b.lhs == b.rhs;
  return b;
}

inline void reject_g2(const RootSystem& rs) {
  if (rs.type().family == Family::G) fail(ErrorCode::UnsupportedType, "sign calculus excludes G2");
}

/// (-1)^(2<alpha, beta>/<alpha, alpha>)
inline int lift_sign(const RootSystem& rs, const Root& alpha, const Root& beta) {
  reject_g2(rs);
  return cartan_int(rs, alpha, beta) % 2 == 0 ? 1 : -1;
}

inline bool lifts_to_involution(const RootSystem& rs, const OrthoSet& omega) {
  reject_g2(rs);
  require_ortho_set(rs, omega);
  return std::all_of(rs.positives().begin(), rs.positives().end(),
                     [&](const Root& b) { return parity(rs, omega, b) % 2 == 0; });
}

/// First root of the positive system on which the parity is odd.
inline std::optional<Root> odd_parity_witness(const RootSystem& rs, const OrthoSet& omega) {
  for (const auto& b : rs.positives())
    if (parity(rs, omega, b) % 2 != 0) return b;
  return std::nullopt;
}

enum class SignClass { Even, Odd, XDependent };

inline std::string_view to_string(SignClass c) {
  switch (c) {
    case SignClass::Even: return "even";
    case SignClass::Odd: return "odd";
    case SignClass::XDependent: return "x-dependent";
  }
  return "?";
}

/// Action of t = exp(x + i pi sum m_a H_a/<a,a>) on the beta root space.
/// exponent = sum m_a <a, beta>/<a, a>; the sign is (-1)^exponent when it is
/// an integer. square_exponent = 2 * exponent governs the square.
struct SignDescriptor {
  Rational linear_term;      // <beta, x>
  Rational exponent;
  Int square_exponent = 0;
  SignClass klass = SignClass::Even;
  bool exponent_integral = true;
};

inline SignDescriptor torus_sign_action(const RootSystem& rs, const OrthoSet& omega, const std::map<Root, Int>& m_coeffs,
                                        const RatVec& x, const Root& beta) {
  rs.require_root(beta, "argument");
  require_ortho_set(rs, omega);
  if (x.size() != rs.dim()) fail(ErrorCode::ShapeError, "x has the wrong dimension");
  for (const auto& a : omega) {
    auto it = m_coeffs.find(a);
    if (it == m_coeffs.end()) fail(ErrorCode::IncompleteCoefficients, "no coefficient for " + to_string(a));
    if (it->second % 2 == 0) fail(ErrorCode::PreconditionViolated, "coefficient for " + to_string(a) + " must be odd");
    if (form_value(rs, a.to_rational(), x) != Rational(0))
      fail(ErrorCode::PreconditionViolated, "x is not perpendicular to " + to_string(a));
  }
  SignDescriptor d;
  d.linear_term = form_value(rs, beta.to_rational(), x);
  for (const auto& a : omega)
    d.exponent += Rational(m_coeffs.at(a) * form_value(rs, a, beta), rs.squared_length(a));
  const Rational twice = d.exponent * Rational(2);
  d.square_exponent = twice.numerator();  // the denominator is 1 for roots
  d.exponent_integral = d.exponent.denominator() == 1;
  if (d.linear_term != Rational(0)) {
    d.klass = SignClass::XDependent;
  } else if (d.exponent_integral) {
    d.klass = d.exponent.numerator() % 2 == 0 ? SignClass::Even : SignClass::Odd;
  } else {
    d.klass = d.square_exponent % 2 == 0 ? SignClass::Even : SignClass::Odd;
  }
  return d;
}

/// All involutions of the form R o nu, R a product of commuting reflections.
inline std::vector<TorusAut> structured_involutions(const RootSystem& rs) {
  std::vector<TorusAut> out;
  const auto weyl = weyl_group_elements(rs);
  for (const auto& nu : diagram_automorphisms(rs)) {
    const LatticeMap p = induced_lattice_map(rs, nu);
    for (const auto& w : weyl) {
      if (!(w * w).is_identity()) continue;
      const LatticeMap m = w * p;
      if (!(m * m).is_identity()) continue;
      out.push_back(make_torus_aut(rs, w, nu));
    }
  }
  return out;
}

/// Every automorphism w o nu of order at most max_order.
inline std::vector<TorusAut> automorphisms_up_to_order(const RootSystem& rs, int max_order) {
  std::vector<TorusAut> out;
  const auto weyl = weyl_group_elements(rs);
  for (const auto& nu : diagram_automorphisms(rs)) {
    const LatticeMap p = induced_lattice_map(rs, nu);
    for (const auto& w : weyl) {
      const auto ord = matrix_order(w * p, max_order);
      if (!ord) continue;
      out.push_back(TorusAut{w, nu, w * p, *ord});
    }
  }
  return out;
}

struct StarSweep {
  long checked = 0;
  long skipped = 0;
  long failed = 0;
  std::vector<std::pair<TorusAut, TorusAut>> failures;  // first few
};

namespace detail {

inline void star_sweep_slice(const RootSystem& rs, const std::vector<TorusAut>& ones, const std::vector<TorusAut>& twos,
                             std::size_t start, std::size_t stride, StarSweep& out) {
  for (std::size_t i = start; i < ones.size(); i += stride) {
    const auto& s1 = ones[i];
    for (const auto& s2 : twos) {
      if (!commute(s1.compiled, s2.compiled)) continue;
      const PairSetup p = make_pair(rs, s1, s2);
      bool structured = is_ortho_set(rs, p.omega_plus);
      for (const auto& a : p.omega_plus)
        if (apply(s1.compiled, a) != a) structured = false;
      if (!structured) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      if (!check_property_star(p)) {
        ++out.failed;
        if (out.failures.size() < 4) out.failures.emplace_back(s1, s2);
      }
    }
  }
}

}  // namespace detail

/// Commuting pairs whose vanishing set is strongly orthogonal and fixed
/// by sigma1 are checked for property star; others are skipped. Work is
/// split by sigma1 index modulo `jobs`; counts do not depend on it.
inline StarSweep property_star_sweep(const RootSystem& rs, int max_order, int jobs = 1) {
  const auto ones = structured_involutions(rs);
  const auto twos = automorphisms_up_to_order(rs, max_order);
  jobs = std::max(1, jobs);
  std::vector<StarSweep> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j)
    pool.emplace_back(detail::star_sweep_slice, std::cref(rs), std::cref(ones), std::cref(twos), static_cast<std::size_t>(j),
                      static_cast<std::size_t>(jobs), std::ref(parts[static_cast<std::size_t>(j)]));
  detail::star_sweep_slice(rs, ones, twos, 0, static_cast<std::size_t>(jobs), parts[0]);
  for (auto& t : pool) t.join();
  StarSweep total;
  for (const auto& p : parts) {
    total.checked += p.checked;
    total.skipped += p.skipped;
    total.failed += p.failed;
  }
  // failures reported in sigma1 order regardless of how the work was split
  for (std::size_t i = 0; i < ones.size() && total.failures.size() < 4; ++i) {
    const auto& part = parts[i % parts.size()];
    for (const auto& f : part.failures)
      if (f.first.compiled == ones[i].compiled && total.failures.size() < 4) total.failures.push_back(f);
  }
  return total;
}

}  // namespace liecascade
