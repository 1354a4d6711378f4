#pragma once

// Simple root systems in simple-root coordinates with an exact bilinear form.
//
// Normalization: short roots have squared length 2, long roots 4 (B, C, F)
// or 6 (G2). Under this normalization the form matrix is integral.
//
// Cartan matrix convention: cartan(i, j) = 2<a_i, a_j> / <a_j, a_j>.
//
// Labeling follows Bourbaki except for G2, where a_1 is the long root. In D_r
// the chain is a_1 ... a_{r-2} with a_{r-1} and a_r both attached to a_{r-2}.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liecascade/error.hpp"
#include "liecascade/matrix.hpp"

namespace liecascade {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct SystemType {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const SystemType&) const = default;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }
};

/// Validates rank bounds and canonicalizes C2 to B2. D3 is rejected.
inline SystemType make_type(Family family, int rank) {
  const auto bad = [&] {
    fail(ErrorCode::InvalidType, std::string(1, family_letter(family)) + std::to_string(rank) + " is out of bounds");
  };
  switch (family) {
    case Family::A: if (rank < 1) bad(); break;
    case Family::B: if (rank < 2) bad(); break;
    case Family::C:
      if (rank == 2) return {Family::B, 2};
      if (rank < 3) bad();
      break;
    case Family::D: if (rank < 4) bad(); break;
    case Family::E: if (rank < 6 || rank > 8) bad(); break;
    case Family::F: if (rank != 4) bad(); break;
    case Family::G: if (rank != 2) bad(); break;
  }
  return {family, rank};
}

/// Parses "D4", "e6", "C3" (case-insensitive).
inline SystemType parse_type(std::string_view text) {
  if (text.size() < 2) fail(ErrorCode::InvalidType, "cannot parse type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string_view letters = "ABCDEFG";
  const auto pos = letters.find(letter);
  if (pos == std::string_view::npos) fail(ErrorCode::InvalidType, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000)
      fail(ErrorCode::InvalidType, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
  }
  return make_type(static_cast<Family>(pos), rank);
}

/// Canonical simple summands of a classical algebra written with a possibly
/// degenerate rank (b_1, c_1, c_2, d_2, d_3, rank 0). Used by the tables.
inline std::vector<SystemType> canonical_summands(Family family, int rank) {
  if (rank <= 0) return {};
  switch (family) {
    case Family::A: return {{Family::A, rank}};
    case Family::B:
      if (rank == 1) return {{Family::A, 1}};
      return {{Family::B, rank}};
    case Family::C:
      if (rank == 1) return {{Family::A, 1}};
      if (rank == 2) return {{Family::B, 2}};
      return {{Family::C, rank}};
    case Family::D:
      if (rank == 1) fail(ErrorCode::InvalidType, "d_1 is abelian");
      if (rank == 2) return {{Family::A, 1}, {Family::A, 1}};
      if (rank == 3) return {{Family::A, 3}};
      return {{Family::D, rank}};
    default: return {make_type(family, rank)};
  }
}

/// A root (or lattice vector) in simple-root coordinates.
struct Root {
  IntVec coeffs;

  Root() = default;
  explicit Root(IntVec c) : coeffs(std::move(c)) {}
  Root(std::initializer_list<Int> c) : coeffs(c) {}

  std::size_t size() const noexcept { return coeffs.size(); }
  Int operator[](std::size_t i) const { return coeffs[i]; }

  Int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), Int(0)); }
  bool is_zero() const { return std::all_of(coeffs.begin(), coeffs.end(), [](Int x) { return x == 0; }); }
  bool is_positive() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](Int x) { return x >= 0; });
  }

  Root operator-() const {
    Root r = *this;
    for (auto& x : r.coeffs) x = -x;
    return r;
  }
  Root operator+(const Root& o) const {
    check_size(o);
    Root r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }
  Root operator-(const Root& o) const { return *this + (-o); }
  Root scaled(Int k) const {
    Root r = *this;
    for (auto& x : r.coeffs) x *= k;
    return r;
  }

  RatVec to_rational() const { return liecascade::to_rational(coeffs); }

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

 private:
  void check_size(const Root& o) const {
    if (o.coeffs.size() != coeffs.size()) fail(ErrorCode::ShapeError, "root dimension mismatch");
  }
};

inline Root simple_root(int rank, int index) {
  if (index < 1 || index > rank) fail(ErrorCode::InvalidIndex, "simple root index out of range");
  IntVec c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(index - 1)] = 1;
  return Root(std::move(c));
}

inline std::string to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r[i]);
  }
  return s + ")";
}

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int x : r.coeffs) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

/// Positive-root order: height first, then coordinates compared so that
/// a_1 precedes a_2 (descending lexicographic).
inline bool positive_order(const Root& a, const Root& b) {
  const Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

class RootSystem;
RootSystem build_root_system(SystemType stype);

/// Immutable after construction.
class RootSystem {
 public:
  const SystemType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(type_.rank); }

  const IntMatrix& cartan() const noexcept { return cartan_; }
  const IntMatrix& form() const noexcept { return form_; }

  /// All roots: the positives in order, followed by their negatives.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const std::vector<Root>& positives() const noexcept { return positives_; }
  std::vector<Root> simples() const {
    std::vector<Root> s;
    for (int i = 1; i <= rank(); ++i) s.push_back(simple_root(rank(), i));
    return s;
  }
  const Root& highest_long() const noexcept { return highest_long_; }
  const Root& highest_short() const noexcept { return highest_short_; }

  bool contains(const Root& r) const { return index_.count(r) != 0; }
  std::optional<std::size_t> index_of(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Positive representative of +-r.
  Root positive_rep(const Root& r) const { return r.is_positive() ? r : -r; }

  Int squared_length(const Root& r) const { return pair(r.coeffs, r.coeffs); }
  Int long_length() const { return long_length_; }
  bool is_long(const Root& r) const { return squared_length(r) == long_length_; }

  Int pair(std::span<const Int> a, std::span<const Int> b) const {
    if (a.size() != dim() || b.size() != dim()) fail(ErrorCode::ShapeError, "vector dimension does not match rank");
    Int s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += a[i] * form_(i, j) * b[j];
    }
    return s;
  }

  void require_root(const Root& r, const char* what) const {
    if (!contains(r)) fail(ErrorCode::NotARoot, std::string(what) + " " + to_string(r) + " is not a root of " + type_.name());
  }

 private:
  friend RootSystem build_root_system(SystemType stype);

  SystemType type_;
  IntMatrix cartan_;
  IntMatrix form_;
  std::vector<Root> roots_;
  std::vector<Root> positives_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
  Root highest_long_;
  Root highest_short_;
  Int long_length_ = 2;
};

namespace detail {

struct DiagramData {
  std::vector<Int> lengths;                   // squared length of each simple root
  std::vector<std::pair<int, int>> edges;     // 0-based
};

inline DiagramData diagram_data(SystemType t) {
  const int n = t.rank;
  DiagramData d;
  d.lengths.assign(static_cast<std::size_t>(n), 2);
  const auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.lengths[static_cast<std::size_t>(i)] = 4;
      break;
    case Family::C:
      chain(n);
      d.lengths[static_cast<std::size_t>(n - 1)] = 4;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      d.lengths = {4, 4, 2, 2};
      break;
    case Family::G:
      chain(2);
      d.lengths = {6, 2};
      break;
  }
  return d;
}

}  // namespace detail

/// Integral symmetric form on the simple roots of a (validated) type.
inline IntMatrix form_matrix(SystemType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  const auto data = detail::diagram_data(t);
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, i) = data.lengths[i];
  for (auto [x, y] : data.edges) {
    const auto i = static_cast<std::size_t>(x), j = static_cast<std::size_t>(y);
    const Int v = -std::max(data.lengths[i], data.lengths[j]) / 2;
    b(i, j) = v;
    b(j, i) = v;
  }
  return b;
}

inline IntMatrix cartan_from_form(const IntMatrix& b) {
  IntMatrix a(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(i, j) = 2 * b(i, j) / b(j, j);
  return a;
}

inline IntMatrix cartan_matrix(SystemType t) { return cartan_from_form(form_matrix(make_type(t.family, t.rank))); }

inline RootSystem build_root_system(SystemType stype) {
  stype = make_type(stype.family, stype.rank);
  const auto n = static_cast<std::size_t>(stype.rank);
  const auto data = detail::diagram_data(stype);

  RootSystem rs;
  rs.type_ = stype;
  rs.form_ = form_matrix(stype);
  rs.cartan_ = cartan_from_form(rs.form_);

  // Positive roots level by level: beta + a_i is a root iff q > 0, where
  // p - q = 2<beta, a_i>/<a_i, a_i> and p is read off the lower levels.
  std::unordered_map<Root, std::size_t, RootHash> known;
  std::vector<Root> level;
  for (int i = 1; i <= stype.rank; ++i) level.push_back(simple_root(stype.rank, i));
  std::vector<Root> positives;
  while (!level.empty()) {
    for (const auto& r : level) {
      known.emplace(r, 0);
      positives.push_back(r);
    }
    std::vector<Root> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        const Root ai = simple_root(stype.rank, static_cast<int>(i) + 1);
        if (beta == ai) continue;
        Int p = 0;
        Root down = beta - ai;
        while (known.count(down)) {
          ++p;
          down = down - ai;
        }
        const Int pairing = 2 * rs.pair(beta.coeffs, ai.coeffs) / rs.form_(i, i);
        const Int q = p - pairing;
        if (q > 0) {
          Root up = beta + ai;
          if (!known.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(positives.begin(), positives.end(), positive_order);
  rs.positives_ = positives;
  rs.roots_ = positives;
  for (const auto& r : positives) rs.roots_.push_back(-r);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_.emplace(rs.roots_[k], k);

  rs.long_length_ = *std::max_element(data.lengths.begin(), data.lengths.end());
  const Int short_length = *std::min_element(data.lengths.begin(), data.lengths.end());
  rs.highest_long_ = rs.positives_.back();
  rs.highest_short_ = rs.highest_long_;
  for (auto it = rs.positives_.rbegin(); it != rs.positives_.rend(); ++it) {
    if (rs.squared_length(*it) == short_length) {
      rs.highest_short_ = *it;
      break;
    }
  }
  return rs;
}

inline RootSystem build_root_system(std::string_view name) { return build_root_system(parse_type(name)); }

/// <a, b> for lattice vectors given in simple-root coordinates.
inline Int form_value(const RootSystem& rs, const Root& a, const Root& b) { return rs.pair(a.coeffs, b.coeffs); }

inline Rational form_value(const RootSystem& rs, std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != rs.dim() || b.size() != rs.dim()) fail(ErrorCode::ShapeError, "vector dimension does not match rank");
  Rational s(0);
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    if (a[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < rs.dim(); ++j) s += a[i] * Rational(rs.form()(i, j)) * b[j];
  }
  return s;
}

/// 2<a, b>/<a, a>. Integral whenever a and b are roots.
inline Int cartan_int(const RootSystem& rs, const Root& a, const Root& b) {
  const Int aa = form_value(rs, a, a);
  if (aa == 0) fail(ErrorCode::PreconditionViolated, "cartan_int with a zero denominator vector");
  const Int num = 2 * form_value(rs, a, b);
  if (num % aa != 0)
    fail(ErrorCode::InternalInvariantViolation,
         "non-integral pairing 2<" + to_string(a) + "," + to_string(b) + ">/<a,a> in " + rs.type().name());
  return num / aa;
}

struct RootString {
  int down = 0;  // p: beta - p*alpha is the bottom of the string
  int up = 0;    // q: beta + q*alpha is the top
  bool operator==(const RootString&) const = default;
};

/// Maximal p, q with beta - p*alpha, ..., beta + q*alpha all roots.
inline RootString root_string(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.require_root(alpha, "string direction");
  rs.require_root(beta, "string base");
  if (alpha == beta || alpha == -beta) fail(ErrorCode::DegenerateString, "root string of a root through itself");
  RootString s;
  for (Root r = beta - alpha; rs.contains(r); r = r - alpha) ++s.down;
  for (Root r = beta + alpha; rs.contains(r); r = r + alpha) ++s.up;
  if (s.down - s.up != cartan_int(rs, alpha, beta))
    fail(ErrorCode::InternalInvariantViolation, "root string violates p - q = 2<beta,alpha>/<alpha,alpha>");
  return s;
}

/// Neither a + b nor a - b is a root.
inline bool is_strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  rs.require_root(a, "first argument");
  rs.require_root(b, "second argument");
  if (a == b || a == -b) fail(ErrorCode::DegeneratePair, "strong orthogonality of a root with itself");
  return !rs.contains(a + b) && !rs.contains(a - b);
}

struct DominantRoots {
  Root highest_long;
  Root highest_short;
};

inline bool is_dominant(const RootSystem& rs, const Root& r) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (form_value(rs, r, simple_root(rs.rank(), i)) < 0) return false;
  return true;
}

/// The (at most two) dominant roots of an irreducible system.
inline DominantRoots dominant_roots(const RootSystem& rs) {
  DominantRoots d{rs.highest_long(), rs.highest_short()};
  if (!is_dominant(rs, d.highest_long) || !is_dominant(rs, d.highest_short))
    fail(ErrorCode::InternalInvariantViolation, "highest root is not dominant");
  return d;
}

}  // namespace liecascade
