#pragma once

// Identify the type of a Cartan matrix up to simultaneous relabeling.

#include <cstddef>
#include <algorithm>
#include <numeric>
#include <string>
#include <optional>
#include <vector>

#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"
#include "liecascade/rootsys.hpp"

namespace liecascade {

struct RecognizedComponent {
  SystemType type;
  // order[c] is the input index playing the role of canonical simple root c+1
  std::vector<std::size_t> order;
};

namespace detail {

inline bool match_cartan(const IntMatrix& canon, const IntMatrix& a, std::vector<std::size_t>& order,
                         std::vector<bool>& used, std::size_t depth) {
  const std::size_t n = canon.rows();
  if (depth == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a(cand, cand) != canon(depth, depth)) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < depth && ok; ++prev)
      ok = a(order[prev], cand) == canon(prev, depth) && a(cand, order[prev]) == canon(depth, prev);
    if (!ok) continue;
    used[cand] = true;
    order[depth] = cand;
    if (match_cartan(canon, a, order, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

inline std::vector<SystemType> candidate_types(int n) {
  std::vector<SystemType> out{{Family::A, n}};
  if (n >= 2) out.push_back({Family::B, n});
  if (n >= 3) out.push_back({Family::C, n});
  if (n >= 4) out.push_back({Family::D, n});
  if (n >= 6 && n <= 8) out.push_back({Family::E, n});
  if (n == 4) out.push_back({Family::F, 4});
  if (n == 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace detail

/// Recognizes a connected Cartan matrix. Throws InternalInvariantViolation
/// when the matrix is not of finite type.
inline RecognizedComponent recognize_connected(const IntMatrix& a) {
  if (!a.square() || a.rows() == 0) fail(ErrorCode::ShapeError, "recognize_connected needs a nonempty square matrix");
  const int n = static_cast<int>(a.rows());
  for (const auto& t : detail::candidate_types(n)) {
    const IntMatrix canon = cartan_matrix(t);
    std::vector<std::size_t> order(a.rows());
    std::vector<bool> used(a.rows(), false);
    if (detail::match_cartan(canon, a, order, used, 0)) return {t, order};
  }
  fail(ErrorCode::InternalInvariantViolation, "Cartan matrix of rank " + std::to_string(n) + " is not of finite type");
}

/// Connected components of the Dynkin graph, each as a sorted index list.
inline std::vector<std::vector<std::size_t>> cartan_components(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u)
        if (comp[u] < 0 && a(v, u) != 0) {
          comp[u] = comp[s];
          members.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& idx) {
  IntMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(idx[i], idx[j]);
  return s;
}

/// Cartan matrix 2<b_i, b_j>/<b_j, b_j> of a rational Gram matrix.
inline IntMatrix cartan_from_gram(const RatMatrix& g) {
  IntMatrix a(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Rational v = Rational(2) * g(i, j) / g(j, j);
      if (v.denominator() != 1) fail(ErrorCode::InternalInvariantViolation, "non-integral Cartan entry");
      a(i, j) = v.numerator();
    }
  return a;
}

}  // namespace liecascade
