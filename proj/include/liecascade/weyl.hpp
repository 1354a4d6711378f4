#pragma once

// Weyl group elements as words in simple reflections and as integer matrices
// acting on simple-root coordinates (column vectors).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/recognize.hpp"
#include "liecascade/rootsys.hpp"

namespace liecascade {

/// Letters are simple-reflection indices 1..rank, applied right to left.
struct WeylWord {
  std::vector<int> letters;
  bool operator==(const WeylWord&) const = default;
  bool empty() const noexcept { return letters.empty(); }
};

using LatticeMap = IntMatrix;

inline void validate_word(const RootSystem& rs, const WeylWord& w) {
  for (int l : w.letters)
    if (l < 1 || l > rs.rank()) fail(ErrorCode::InvalidIndex, "word letter " + std::to_string(l) + " out of range");
}

/// s_a(b) = b - (2<b,a>/<a,a>) a
inline Root reflect(const RootSystem& rs, const Root& a, const Root& b) {
  rs.require_root(a, "reflection root");
  return b - a.scaled(cartan_int(rs, a, b));
}

/// Matrix of s_a, for any root a.
inline LatticeMap reflection_matrix(const RootSystem& rs, const Root& a) {
  rs.require_root(a, "reflection root");
  const std::size_t n = rs.dim();
  LatticeMap m = LatticeMap::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int c = cartan_int(rs, a, simple_root(rs.rank(), static_cast<int>(j) + 1));
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= c * a[i];
  }
  return m;
}

inline LatticeMap simple_reflection_matrix(const RootSystem& rs, int i) {
  return reflection_matrix(rs, simple_root(rs.rank(), i));
}

inline LatticeMap compile(const RootSystem& rs, const WeylWord& w) {
  validate_word(rs, w);
  LatticeMap m = LatticeMap::identity(rs.dim());
  for (int l : w.letters) m = m * simple_reflection_matrix(rs, l);
  return m;
}

inline Root apply(const LatticeMap& m, const Root& v) { return Root(m * std::span<const Int>(v.coeffs)); }
inline RatVec apply(const LatticeMap& m, const RatVec& v) {
  const RatMatrix r = to_rational(m);
  return r * std::span<const Rational>(v.data(), v.size());
}

inline Root apply(const RootSystem& rs, const WeylWord& w, Root v) {
  validate_word(rs, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = reflect(rs, simple_root(rs.rank(), *it), v);
  return v;
}

inline RatVec apply(const RootSystem& rs, const WeylWord& w, const RatVec& v) { return liecascade::apply(compile(rs, w), v); }

inline WeylWord concat(const WeylWord& outer, const WeylWord& inner) {
  WeylWord w = outer;
  w.letters.insert(w.letters.end(), inner.letters.begin(), inner.letters.end());
  return w;
}

inline WeylWord inverse(const WeylWord& w) {
  return WeylWord{std::vector<int>(w.letters.rbegin(), w.letters.rend())};
}

/// Pairing <v, a> in simple coordinates, over Int or Rational.
template <class T>
T pair_with(const RootSystem& rs, const std::vector<T>& v, const Root& a) {
  T s(0);
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    if (v[i] == T(0)) continue;
    for (std::size_t j = 0; j < rs.dim(); ++j) s += v[i] * T(rs.form()(i, j)) * T(a[j]);
  }
  return s;
}

/// Greedy ascent of v by the reflections in `gens`: while <v, g> < 0 for
/// some generator, reflect in the first such g. Returns the dominant vector
/// and the generator indices in the order they were applied.
template <class T>
std::pair<std::vector<T>, std::vector<std::size_t>> ascend(const RootSystem& rs, std::vector<T> v,
                                                           const std::vector<Root>& gens) {
  std::vector<std::size_t> applied;
  std::vector<Int> lengths;
  for (const auto& g : gens) lengths.push_back(rs.squared_length(g));
  for (;;) {
    bool moved = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const T p = pair_with(rs, v, gens[k]);
      if (p < T(0)) {
        const T c = T(2) * p / T(lengths[k]);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * T(gens[k][i]);
        applied.push_back(k);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, applied};
  }
}

struct DominantResult {
  Root dom;
  WeylWord word;
};

/// Greedy ascent by simple reflections, smallest index first.
inline DominantResult dominant_representative(const RootSystem& rs, const Root& beta) {
  rs.require_root(beta, "argument");
  auto [v, applied] = ascend(rs, beta.coeffs, rs.simples());
  WeylWord w;
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) w.letters.push_back(static_cast<int>(*it) + 1);
  return {Root(v), w};
}

/// Full Weyl orbit, sorted.
inline std::vector<Root> orbit(const RootSystem& rs, const Root& beta) {
  rs.require_root(beta, "argument");
  std::set<Root> seen{beta};
  std::vector<Root> frontier{beta};
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        Root s = reflect(rs, simple_root(rs.rank(), i), r);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Sum of the positive roots (twice the Weyl vector), strictly dominant.
inline IntVec two_rho(const RootSystem& rs) {
  IntVec v(rs.dim(), 0);
  for (const auto& r : rs.positives())
    for (std::size_t i = 0; i < rs.dim(); ++i) v[i] += r[i];
  return v;
}

inline bool preserves_form(const RootSystem& rs, const LatticeMap& m) {
  return m.transpose() * rs.form() * m == rs.form();
}

/// m permutes the roots and preserves the form.
inline bool is_root_isometry(const RootSystem& rs, const LatticeMap& m) {
  if (m.rows() != rs.dim() || m.cols() != rs.dim()) return false;
  if (!preserves_form(rs, m)) return false;
  for (const auto& r : rs.positives())
    if (!rs.contains(apply(m, r))) return false;
  return true;
}

/// Decides m in W for any rank: ascend m(2 rho) to the dominant chamber with
/// a word w; m is in W iff w m is the identity.
inline std::optional<WeylWord> weyl_word_of(const RootSystem& rs, const LatticeMap& m) {
  if (!is_root_isometry(rs, m)) return std::nullopt;
  const IntVec x = two_rho(rs);
  auto [v, applied] = ascend(rs, m * std::span<const Int>(x), rs.simples());
  WeylWord up;  // the ascent as a word: last applied letter leftmost
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) up.letters.push_back(static_cast<int>(*it) + 1);
  if (!(compile(rs, up) * m).is_identity()) return std::nullopt;
  return inverse(up);
}

inline bool is_weyl_element(const RootSystem& rs, const LatticeMap& m) { return weyl_word_of(rs, m).has_value(); }

/// Brute-force enumeration of W by closure; throws InvalidCount past `limit`.
inline std::vector<LatticeMap> weyl_group_elements(const RootSystem& rs, std::size_t limit = 100000) {
  std::vector<LatticeMap> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection_matrix(rs, i));
  std::set<LatticeMap> seen{LatticeMap::identity(rs.dim())};
  std::vector<LatticeMap> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<LatticeMap> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        LatticeMap p = m * g;
        if (seen.insert(p).second) {
          if (seen.size() > limit) fail(ErrorCode::InvalidCount, "Weyl group exceeds enumeration limit");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// If m is an involution, roots of pairwise perpendicular reflections whose
/// product is m (positive representatives, descending height).
inline std::optional<std::vector<Root>> involution_factorization(const RootSystem& rs, const LatticeMap& m) {
  if (!is_root_isometry(rs, m)) fail(ErrorCode::NotWeyl, "map does not permute the roots isometrically");
  if (!(m * m).is_identity()) return std::nullopt;
  RatMatrix plus = to_rational(m);
  for (std::size_t i = 0; i < rs.dim(); ++i) plus(i, i) += 1;
  const std::size_t target = kernel_basis(plus).size();

  std::vector<Root> cands;
  for (auto it = rs.positives().rbegin(); it != rs.positives().rend(); ++it)
    if (apply(m, *it) == -*it) cands.push_back(*it);

  std::vector<Root> chosen;
  const auto search = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == target) return true;
    for (std::size_t k = from; k < cands.size(); ++k) {
      const bool perp = std::all_of(chosen.begin(), chosen.end(),
                                    [&](const Root& c) { return form_value(rs, c, cands[k]) == 0; });
      if (!perp) continue;
      chosen.push_back(cands[k]);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) fail(ErrorCode::NotWeyl, "involution is not a product of commuting root reflections");
  LatticeMap prod = LatticeMap::identity(rs.dim());
  for (const auto& r : chosen) prod = prod * reflection_matrix(rs, r);
  if (prod != m) fail(ErrorCode::InternalInvariantViolation, "reflection product does not recompose the involution");
  return chosen;
}

struct SubsystemComponent {
  SystemType type;
  std::vector<Root> simples;  // in canonical labeling order
};

struct Subsystem {
  std::vector<Root> roots;      // all roots, sorted
  std::vector<Root> positives;  // in the ambient positive order
  std::vector<Root> simples;
  std::vector<SubsystemComponent> components;
};

/// Subsystem spanned by a set of positive roots closed in the ambient sense.
inline Subsystem subsystem_from_positives(const RootSystem& rs, std::vector<Root> positives) {
  std::sort(positives.begin(), positives.end(), positive_order);
  Subsystem s;
  s.positives = positives;
  std::set<Root> pos(positives.begin(), positives.end());
  for (const auto& r : positives) {
    s.roots.push_back(r);
    s.roots.push_back(-r);
  }
  std::sort(s.roots.begin(), s.roots.end());
  for (const auto& r : positives) {
    bool decomposable = false;
    for (const auto& a : positives) {
      if (a.height() >= r.height()) break;
      if (pos.count(r - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.simples.push_back(r);
  }
  const std::size_t m = s.simples.size();
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = cartan_int(rs, s.simples[j], s.simples[i]);
  for (const auto& comp : cartan_components(a)) {
    const auto rec = recognize_connected(submatrix(a, comp));
    SubsystemComponent c{rec.type, {}};
    for (auto k : rec.order) c.simples.push_back(s.simples[comp[k]]);
    s.components.push_back(std::move(c));
  }
  return s;
}

/// Roots perpendicular to delta.
inline Subsystem perp_subsystem(const RootSystem& rs, const Root& delta) {
  rs.require_root(delta, "argument");
  std::vector<Root> pos;
  for (const auto& r : rs.positives())
    if (form_value(rs, r, delta) == 0) pos.push_back(r);
  return subsystem_from_positives(rs, std::move(pos));
}

/// True iff m (which must fix delta) lies in the group generated by the
/// reflections in roots perpendicular to delta.
inline bool chevalley_check(const RootSystem& rs, const LatticeMap& m, const Root& delta) {
  rs.require_root(delta, "argument");
  if (apply(m, delta) != delta) fail(ErrorCode::PreconditionViolated, "map does not fix " + to_string(delta));
  const Subsystem sub = perp_subsystem(rs, delta);
  if (sub.positives.empty()) return m.is_identity();
  IntVec x(rs.dim(), 0);
  for (const auto& r : sub.positives)
    for (std::size_t i = 0; i < rs.dim(); ++i) x[i] += r[i];
  auto [v, applied] = ascend(rs, m * std::span<const Int>(x), sub.simples);
  LatticeMap w = LatticeMap::identity(rs.dim());
  for (auto k : applied) w = reflection_matrix(rs, sub.simples[k]) * w;
  return (w * m).is_identity();
}

}  // namespace liecascade
