#pragma once

// Dynkin diagram automorphisms and the root systems obtained by folding.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/recognize.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade {

/// perm[i - 1] is the image of simple index i (1-based).
struct DiagramAut {
  std::vector<int> perm;

  bool operator==(const DiagramAut&) const = default;
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i) + 1) return false;
    return true;
  }
  int operator()(int i) const { return perm[static_cast<std::size_t>(i - 1)]; }

  static DiagramAut identity(int rank) {
    DiagramAut a;
    a.perm.resize(static_cast<std::size_t>(rank));
    std::iota(a.perm.begin(), a.perm.end(), 1);
    return a;
  }
};

inline DiagramAut compose(const DiagramAut& a, const DiagramAut& b) {
  DiagramAut c;
  for (int x : b.perm) c.perm.push_back(a(x));
  return c;
}

inline DiagramAut inverse(const DiagramAut& a) {
  DiagramAut c;
  c.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[static_cast<std::size_t>(a.perm[i] - 1)] = static_cast<int>(i) + 1;
  return c;
}

inline int order(const DiagramAut& a) {
  DiagramAut p = a;
  int k = 1;
  while (!p.is_identity()) {
    p = compose(a, p);
    ++k;
  }
  return k;
}

inline bool is_diagram_aut(const RootSystem& rs, const DiagramAut& a) {
  if (a.perm.size() != rs.dim()) return false;
  std::vector<int> sorted = a.perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = 1; j <= rs.rank(); ++j)
      if (rs.cartan()(static_cast<std::size_t>(a(i) - 1), static_cast<std::size_t>(a(j) - 1)) !=
          rs.cartan()(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)))
        return false;
  return true;
}

inline void require_diagram_aut(const RootSystem& rs, const DiagramAut& a) {
  if (!is_diagram_aut(rs, a)) fail(ErrorCode::PreconditionViolated, "permutation is not a diagram automorphism of " + rs.type().name());
}

/// All Cartan-preserving permutations, identity first, then lexicographic.
inline std::vector<DiagramAut> diagram_automorphisms(const RootSystem& rs) {
  const std::size_t n = rs.dim();
  const auto& a = rs.cartan();
  std::vector<DiagramAut> out;
  std::vector<int> perm(n, 0);
  std::vector<bool> used(n, false);
  const auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(DiagramAut{perm});
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t cj = j == i ? c : static_cast<std::size_t>(perm[j] - 1);
        ok = a(c, cj) == a(i, j) && a(cj, c) == a(j, i);
      }
      if (!ok) continue;
      used[c] = true;
      perm[i] = static_cast<int>(c) + 1;
      self(self, i + 1);
      used[c] = false;
    }
  };
  search(search, 0);
  return out;  // lexicographic order already puts the identity first
}

/// Permutation matrix sending a_i to a_{nu(i)}.
inline LatticeMap induced_lattice_map(const RootSystem& rs, const DiagramAut& nu) {
  require_diagram_aut(rs, nu);
  LatticeMap m(rs.dim(), rs.dim());
  for (int i = 1; i <= rs.rank(); ++i) m(static_cast<std::size_t>(nu(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
  return m;
}

inline Root apply(const DiagramAut& nu, const Root& r) {
  IntVec c(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) c[static_cast<std::size_t>(nu(static_cast<int>(i) + 1) - 1)] = r[i];
  return Root(std::move(c));
}

struct Folding {
  SystemType type;
  std::vector<RatVec> positives;  // restricted positive roots (reduced)
  std::vector<RatVec> simples;    // in canonical labeling order
};

/// Restricts every root to the nu-fixed subspace by orbit averaging, drops
/// the doubled roots of a non-reduced result, and recognizes the type.
inline Folding fold(const RootSystem& rs, const DiagramAut& nu) {
  require_diagram_aut(rs, nu);
  if (nu.is_identity()) fail(ErrorCode::NotAFolding, "the identity automorphism does not fold");
  const int k = order(nu);
  std::set<RatVec> restricted;
  for (const auto& r : rs.positives()) {
    RatVec avg(rs.dim(), Rational(0));
    Root cur = r;
    for (int j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < rs.dim(); ++i) avg[i] += Rational(cur[i], k);
      cur = apply(nu, cur);
    }
    restricted.insert(avg);
  }
  Folding f;
  for (const auto& v : restricted) {
    RatVec half = v;
    for (auto& x : half) x /= 2;
    if (!restricted.count(half)) f.positives.push_back(v);
  }
  const std::set<RatVec> pos(f.positives.begin(), f.positives.end());
  std::vector<RatVec> simples;
  for (const auto& v : f.positives) {
    bool decomposable = false;
    for (const auto& a : f.positives) {
      RatVec d = v;
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[i];
      if (pos.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(v);
  }
  RatMatrix gram(simples.size(), simples.size());
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j) gram(i, j) = form_value(rs, simples[i], simples[j]);
  const IntMatrix cartan = cartan_from_gram(gram);
  if (cartan_components(cartan).size() != 1)
    fail(ErrorCode::InternalInvariantViolation, "folded root system is not irreducible");
  const auto rec = recognize_connected(cartan);
  f.type = rec.type;
  for (auto idx : rec.order) f.simples.push_back(simples[idx]);
  return f;
}

inline SystemType folded_fixed_type(const RootSystem& rs, const DiagramAut& nu) { return fold(rs, nu).type; }

/// Smallest folded rank over the nontrivial diagram automorphisms.
inline int min_outer_fixed_rank(SystemType t) {
  const RootSystem rs = build_root_system(t);
  std::optional<int> best;
  for (const auto& nu : diagram_automorphisms(rs)) {
    if (nu.is_identity()) continue;
    const int r = folded_fixed_type(rs, nu).rank;
    if (!best || r < *best) best = r;
  }
  if (!best) fail(ErrorCode::NoOuter, t.name() + " has no nontrivial diagram automorphism");
  return *best;
}

struct FoldingRecord {
  std::string source;  // table column label
  std::string fixed;
  SystemType source_type;
  int order = 2;
  SystemType fixed_type;
};

/// The classical folding table, expanded to concrete ranks up to max_rank.
/// Fixed types are canonicalized (b_1 = A1, c_2 = B2).
inline std::vector<FoldingRecord> folding_table(int max_rank = 8) {
  std::vector<FoldingRecord> rows;
  const auto canon = [](Family f, int n) { return canonical_summands(f, n).front(); };
  for (int n = 1; 2 * n <= max_rank; ++n)
    rows.push_back({"a_2n", "b_n", {Family::A, 2 * n}, 2, canon(Family::B, n)});
  for (int n = 2; 2 * n - 1 <= max_rank; ++n)
    rows.push_back({"a_2n-1", "c_n", {Family::A, 2 * n - 1}, 2, canon(Family::C, n)});
  for (int n = 4; n <= max_rank; ++n) rows.push_back({"d_n", "b_n-1", {Family::D, n}, 2, canon(Family::B, n - 1)});
  if (max_rank >= 4) rows.push_back({"d_4", "g_2", {Family::D, 4}, 3, {Family::G, 2}});
  if (max_rank >= 6) rows.push_back({"e_6", "f_4", {Family::E, 6}, 2, {Family::F, 4}});
  return rows;
}

/// Some automorphism of the given order, preferring the first in list order.
inline std::optional<DiagramAut> automorphism_of_order(const RootSystem& rs, int k) {
  for (const auto& nu : diagram_automorphisms(rs))
    if (order(nu) == k) return nu;
  return std::nullopt;
}

/// The standard flip: the unique order-2 automorphism, or for D4 the one
/// exchanging a_3 and a_4.
inline DiagramAut standard_flip(const RootSystem& rs) {
  if (rs.type().family == Family::D) {
    DiagramAut nu = DiagramAut::identity(rs.rank());
    std::swap(nu.perm[rs.dim() - 2], nu.perm[rs.dim() - 1]);
    return nu;
  }
  auto nu = automorphism_of_order(rs, 2);
  if (!nu) fail(ErrorCode::NoOuter, rs.type().name() + " has no diagram flip");
  return *nu;
}

}  // namespace liecascade
