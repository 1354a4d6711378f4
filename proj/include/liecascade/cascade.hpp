#pragma once

// Strongly orthogonal root sets: vanishing sets, cascades, parity, and the
// normal form of a nu-fixed set under nu-commuting Weyl elements.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecascade/diagram.hpp"
#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade {

using OrthoSet = std::vector<Root>;

inline std::vector<std::vector<Int>> coords(const OrthoSet& s) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : s) out.push_back(r.coeffs);
  return out;
}

inline std::string to_string(const OrthoSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out + "}";
}

inline bool is_ortho_set(const RootSystem& rs, const OrthoSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!rs.contains(s[i]) || !s[i].is_positive()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) return false;
      if (!is_strongly_orthogonal(rs, s[i], s[j])) return false;
    }
  }
  return true;
}

inline void require_ortho_set(const RootSystem& rs, const OrthoSet& s) {
  for (const auto& r : s) {
    rs.require_root(r, "set member");
    if (!r.is_positive()) fail(ErrorCode::NotStronglyOrthogonal, to_string(r) + " is not a positive root");
  }
  if (!is_ortho_set(rs, s)) fail(ErrorCode::NotStronglyOrthogonal, to_string(s) + " is not pairwise strongly orthogonal");
}

inline std::set<Root> as_set(const OrthoSet& s) { return {s.begin(), s.end()}; }

/// Positive roots vanishing on every basis vector of s.
inline std::vector<Root> omega_from_subspace(const RootSystem& rs, const std::vector<RatVec>& basis) {
  std::vector<Root> out;
  for (const auto& r : rs.positives()) {
    const RatVec rv = r.to_rational();
    bool vanishes = true;
    for (const auto& x : basis) {
      if (x.size() != rs.dim()) fail(ErrorCode::ShapeError, "subspace vector dimension does not match rank");
      if (form_value(rs, rv, x) != Rational(0)) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back(r);
  }
  return out;
}

/// dim span(S) + dim of the common kernel of S equals the rank.
inline bool decomposition_holds(const RootSystem& rs, const OrthoSet& s) {
  std::vector<RatVec> span;
  for (const auto& r : s) span.push_back(r.to_rational());
  const std::size_t dim_span = rank_of(span);
  std::size_t dim_ker = rs.dim();
  if (!s.empty()) {
    RatMatrix rows(s.size(), rs.dim());
    const RatMatrix b = to_rational(rs.form());
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t j = 0; j < rs.dim(); ++j)
        for (std::size_t i = 0; i < rs.dim(); ++i) rows(k, j) += Rational(s[k][i]) * b(i, j);
    dim_ker = kernel_basis(rows).size();
  }
  return dim_span + dim_ker == rs.dim();
}

namespace detail {

// Splits positive roots of a subsystem into irreducible pieces, ordered by
// the first simple root of each component.
inline std::vector<std::vector<Root>> split_components(const RootSystem& rs, const std::vector<Root>& positives) {
  if (positives.empty()) return {};
  const Subsystem sub = subsystem_from_positives(rs, positives);
  std::vector<std::vector<Root>> parts(sub.components.size());
  for (const auto& r : sub.positives)
    for (std::size_t c = 0; c < sub.components.size(); ++c) {
      const auto& simples = sub.components[c].simples;
      if (std::any_of(simples.begin(), simples.end(), [&](const Root& s) { return form_value(rs, s, r) != 0; })) {
        parts[c].push_back(r);
        break;
      }
    }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return positive_order(a.front(), b.front()); });
  return parts;
}

inline void cascade_into(const RootSystem& rs, const std::vector<Root>& positives, OrthoSet& out) {
  for (const auto& part : split_components(rs, positives)) {
    const Root top = *std::max_element(part.begin(), part.end(), positive_order);
    out.push_back(top);
    std::vector<Root> perp;
    for (const auto& r : part)
      if (form_value(rs, r, top) == 0) perp.push_back(r);
    cascade_into(rs, perp, out);
  }
}

}  // namespace detail

/// Highest root of each component, then recursively inside its perpendicular.
inline OrthoSet kostant_cascade(const RootSystem& rs) {
  OrthoSet out;
  detail::cascade_into(rs, rs.positives(), out);
  return out;
}

/// p(beta) = sum over alpha in the set of 2<alpha, beta>/<alpha, alpha>.
inline Int parity(const RootSystem& rs, const OrthoSet& s, const Root& beta) {
  Int p = 0;
  for (const auto& a : s) p += cartan_int(rs, a, beta);
  return p;
}

/// delta_t = a_t + ... + a_{n-t+1} for t = 1..m in A_n.
inline OrthoSet a_series_chain(int n, int m) {
  if (n < 1) fail(ErrorCode::InvalidType, "A_n needs n >= 1");
  if (m < 1 || m > (n + 1) / 2) fail(ErrorCode::InvalidCount, "chain length out of range");
  OrthoSet out;
  for (int t = 1; t <= m; ++t) {
    IntVec c(static_cast<std::size_t>(n), 0);
    for (int i = t; i <= n - t + 1; ++i) c[static_cast<std::size_t>(i - 1)] = 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

/// delta_t = a_t + 2(a_{t+1} + ... + a_{r-2}) + a_{r-1} + a_r in D_r.
inline Root d_delta(int r, int t) {
  if (r < 4) fail(ErrorCode::InvalidType, "D_r needs r >= 4");
  if (t < 1 || t > r - 2) fail(ErrorCode::InvalidIndex, "delta index out of range");
  IntVec c(static_cast<std::size_t>(r), 0);
  c[static_cast<std::size_t>(t - 1)] = 1;
  for (int i = t + 1; i <= r - 2; ++i) c[static_cast<std::size_t>(i - 1)] = 2;
  c[static_cast<std::size_t>(r - 2)] = 1;
  c[static_cast<std::size_t>(r - 1)] = 1;
  return Root(std::move(c));
}

inline OrthoSet d_series_chain(int r, const std::vector<int>& odd_indices) {
  OrthoSet out;
  for (int t : odd_indices) {
    if (t % 2 == 0 || t < 1 || t > r - 2) fail(ErrorCode::InvalidIndex, "index " + std::to_string(t) + " must be odd and at most r-2");
    out.push_back(d_delta(r, t));
  }
  return out;
}

inline int max_odd_at_most(int x) { return x % 2 ? x : x - 1; }

/// {delta_1, a_1, delta_3, a_3, ..., delta_m, a_m}
inline OrthoSet d_form1(int r, int m) {
  if (m % 2 == 0 || m < 1 || m > r - 2) fail(ErrorCode::InvalidIndex, "form-1 index must be odd and at most r-2");
  OrthoSet out;
  for (int t = 1; t <= m; t += 2) {
    out.push_back(d_delta(r, t));
    out.push_back(simple_root(r, t));
  }
  return out;
}

/// {delta_1, delta_3, ..., delta_k} with k the largest odd integer <= r-2.
inline OrthoSet d_form2(int r) {
  std::vector<int> idx;
  for (int t = 1; t <= max_odd_at_most(r - 2); t += 2) idx.push_back(t);
  return d_series_chain(r, idx);
}

struct NormalForm {
  WeylWord word;
  OrthoSet roots;  // in the order the recursion fixed them
};

namespace detail {

// Generators commuting with nu: one per nu-orbit O of simple indices inside J.
// Pairwise orthogonal orbits give the product of their reflections; an
// adjacent pair {i, j} gives s_i s_j s_i, the reflection in a_i + a_j.
struct OrbitGenerator {
  std::vector<int> nodes;
  Root root_probe;  // a_i for any i in the orbit, used for the sign test
  WeylWord word;
};

inline std::vector<OrbitGenerator> orbit_generators(const RootSystem& rs, const DiagramAut& nu, const std::vector<int>& nodes) {
  std::vector<OrbitGenerator> out;
  std::set<int> seen;
  for (int i : nodes) {
    if (seen.count(i)) continue;
    std::vector<int> orb;
    for (int j = i; !seen.count(j); j = nu(j)) {
      seen.insert(j);
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    bool orthogonal = true;
    for (std::size_t a = 0; a < orb.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (rs.form()(static_cast<std::size_t>(orb[a] - 1), static_cast<std::size_t>(orb[b] - 1)) != 0) orthogonal = false;
    OrbitGenerator g{orb, simple_root(rs.rank(), orb.front()), {}};
    if (orthogonal) {
      g.word.letters = orb;
    } else if (orb.size() == 2) {
      g.word.letters = {orb[0], orb[1], orb[0]};
    } else {
      fail(ErrorCode::InternalInvariantViolation, "unsupported diagram orbit shape");
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<std::vector<int>> node_components(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int s : nodes) {
    if (seen.count(s)) continue;
    std::vector<int> comp{s}, stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : nodes)
        if (!seen.count(u) && rs.form()(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) != 0) {
          seen.insert(u);
          comp.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool supported_in(const Root& r, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0 && std::find(nodes.begin(), nodes.end(), static_cast<int>(i) + 1) == nodes.end()) return false;
  return true;
}

}  // namespace detail

/// Conjugates a nu-fixed strongly orthogonal set by nu-commuting Weyl
/// elements: in every component the highest-placed member is raised to the
/// component's dominant root, then the recursion enters the simple roots
/// perpendicular to it. Members are kept as positive representatives.
inline NormalForm normal_form(const RootSystem& rs, const OrthoSet& omega, const DiagramAut& nu) {
  require_ortho_set(rs, omega);
  require_diagram_aut(rs, nu);
  for (const auto& r : omega)
    if (apply(nu, r) != r) fail(ErrorCode::PreconditionViolated, to_string(r) + " is not fixed by the diagram automorphism");

  NormalForm nf;
  std::vector<Root> pending = omega;
  std::vector<int> all(static_cast<std::size_t>(rs.rank()));
  std::iota(all.begin(), all.end(), 1);

  const auto apply_word = [&](const WeylWord& w) {
    for (auto& r : pending) r = rs.positive_rep(apply(rs, w, r));
    nf.word = concat(w, nf.word);
  };

  const auto process = [&](auto&& self, const std::vector<int>& nodes) -> void {
    for (const auto& comp : detail::node_components(rs, nodes)) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < pending.size(); ++k)
        if (detail::supported_in(pending[k], comp)) members.push_back(k);
      if (members.empty()) continue;
      std::size_t pick = members.front();
      for (auto k : members)
        if (positive_order(pending[pick], pending[k])) pick = k;
      const auto gens = detail::orbit_generators(rs, nu, comp);
      for (;;) {
        bool moved = false;
        for (const auto& g : gens)
          if (form_value(rs, pending[pick], g.root_probe) < 0) {
            apply_word(g.word);
            moved = true;
            break;
          }
        if (!moved) break;
      }
      const Root top = pending[pick];
      nf.roots.push_back(top);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
      std::vector<int> inner;
      for (int i : comp)
        if (form_value(rs, top, simple_root(rs.rank(), i)) == 0) inner.push_back(i);
      self(self, inner);
    }
  };
  process(process, all);
  if (!pending.empty()) fail(ErrorCode::InternalInvariantViolation, "normal form left roots unprocessed");
  return nf;
}

enum class DFormKind { Form1, Form2 };

struct DFormClass {
  DFormKind kind = DFormKind::Form1;
  int index = 0;  // m for Form1, k for Form2
  NormalForm normal;
};

/// p is even at every a_{2j} with 2j <= r-2.
inline bool d_interior_parity_even(const RootSystem& rs, const OrthoSet& s) {
  for (int j = 2; j <= rs.rank() - 2; j += 2)
    if (parity(rs, s, simple_root(rs.rank(), j)) % 2 != 0) return false;
  return true;
}

/// Classifies a nu-fixed set in D_r into one of the two standard forms.
/// The parity precondition is checked on the normal form.
inline DFormClass classify_d_normal_form(const RootSystem& rs, const OrthoSet& omega, const DiagramAut& nu) {
  if (rs.type().family != Family::D) fail(ErrorCode::InvalidType, "classification applies to type D only");
  if (nu != standard_flip(rs)) fail(ErrorCode::PreconditionViolated, "expected the flip exchanging a_{r-1} and a_r");
  if (omega.empty()) fail(ErrorCode::PreconditionViolated, "the set must be nonempty");
  DFormClass out;
  out.normal = normal_form(rs, omega, nu);
  const OrthoSet& nf = out.normal.roots;
  if (!d_interior_parity_even(rs, nf)) fail(ErrorCode::PreconditionViolated, "odd parity at an interior even simple root");
  const int r = rs.rank();
  const auto got = as_set(nf);
  for (int m = 1; m <= r - 2; m += 2)
    if (got == as_set(d_form1(r, m))) {
      out.kind = DFormKind::Form1;
      out.index = m;
      return out;
    }
  if (got == as_set(d_form2(r))) {
    out.kind = DFormKind::Form2;
    out.index = max_odd_at_most(r - 2);
    return out;
  }
  throw CounterexampleFound("normal form " + to_string(nf) + " matches neither standard form", coords(nf));
}

/// Every nonempty nu-fixed pairwise strongly orthogonal subset of the
/// positive roots, in a deterministic order.
inline std::vector<OrthoSet> fixed_ortho_subsets(const RootSystem& rs, const DiagramAut& nu) {
  std::vector<Root> fixed;
  for (const auto& r : rs.positives())
    if (apply(nu, r) == r) fixed.push_back(r);
  std::vector<OrthoSet> out;
  OrthoSet cur;
  const auto search = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t k = from; k < fixed.size(); ++k) {
      const bool ok = std::all_of(cur.begin(), cur.end(), [&](const Root& c) { return is_strongly_orthogonal(rs, c, fixed[k]); });
      if (!ok) continue;
      cur.push_back(fixed[k]);
      out.push_back(cur);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  search(search, 0);
  return out;
}

}  // namespace liecascade
