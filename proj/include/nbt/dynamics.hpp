#pragma once

// Orbit patterns of pi_q, their horseshoe codes, tent-map kneading
// parameters, transition matrices with Perron roots, and the tight horseshoe
// map on the square with its boundary folds.

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbt/braid.hpp"
#include "nbt/families.hpp"

namespace nbt {

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Orbit patterns and codes
// ---------------------------------------------------------------------------

struct OrbitPattern {
  Permutation perm;
  int fold = 0;  // rises through fold+1 (the maximum), falls after it

  int size() const { return perm.size(); }

  bool is_valid() const {
    const int n = size();
    if (n < 2 || fold < 0 || fold >= n || !perm.is_cyclic()) return false;
    for (int r = 1; r < n; ++r) {
      const bool up = perm(r) < perm(r + 1);
      if (up != (r <= fold)) return false;
    }
    return true;
  }
};

inline OrbitPattern orbit_pattern(int m, int n) {
  OrbitPattern p{pi_q(m, n), fold_of(m, n)};
  if (!p.is_valid()) throw DynamicsError("pi_q is not a unimodal cycle");
  return p;
}

/// Itinerary of the orbit point at `start` (default: the rightmost point):
/// 0 at positions <= fold, 1 beyond.
inline std::string symbol_code(const OrbitPattern& p, int start = 0) {
  const int n = p.size();
  if (n < 2) throw DynamicsError("symbol_code: need at least two orbit points");
  if (start == 0) start = n;
  if (start < 1 || start > n) throw DynamicsError("symbol_code: start out of range");
  std::string code;
  for (int k = 0, x = start; k < n; ++k, x = p.perm(x)) code += x <= p.fold ? '0' : '1';
  return code;
}

// ---------------------------------------------------------------------------
// Tent maps T_t(x) = min(2 + t(x-1), t(1-x)), turning point 1 - 1/t
// ---------------------------------------------------------------------------

inline double tent(double t, double x) { return std::min(2.0 + t * (x - 1.0), t * (1.0 - x)); }

/// Symbols '0' / '1' either side of the turning point, 'C' on it.
inline std::string tent_itinerary(double t, double x0, int length) {
  if (!(t > 1.0 && t <= 2.0)) throw DynamicsError("tent_itinerary: t must lie in (1, 2]");
  if (x0 < 0.0 || x0 > 1.0) throw DynamicsError("tent_itinerary: x0 must lie in [0, 1]");
  const double c = 1.0 - 1.0 / t;
  std::string out;
  double x = x0;
  for (int k = 0; k < length; ++k) {
    out += x < c ? '0' : (x > c ? '1' : 'C');
    x = tent(t, x);
  }
  return out;
}

/// Unimodal order: compare at the first difference, reversed when the common
/// prefix holds an odd number of 1s. 0 < C < 1. Returns -1, 0, 1.
inline int kneading_compare(const std::string& a, const std::string& b) {
  auto rank = [](char s) { return s == '0' ? 0 : (s == 'C' ? 1 : 2); };
  int ones = 0;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) {
      const int c = rank(a[k]) < rank(b[k]) ? -1 : 1;
      return ones % 2 == 0 ? c : -c;
    }
    if (a[k] == '1') ++ones;
  }
  return 0;
}

struct TentParams {
  double t = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracket
};

/// Slope whose kneading sequence (itinerary of the critical value 1) is the
/// periodic horseshoe code of pi_q. Bisection on (sqrt 2, 2).
inline TentParams t_of_q(int m, int n, double eps = 1e-12) {
  const OrbitPattern p = orbit_pattern(m, n);
  const std::string code = symbol_code(p);
  // symbols further out are noise once t^k * eps_machine is large
  const int length = std::max(3 * p.size(), 40);
  std::string target;
  while (static_cast<int>(target.size()) < length) target += code;
  target.resize(static_cast<std::size_t>(length));

  double lo = std::sqrt(2.0), hi = 2.0;
  auto knead = [&](double t) { return tent_itinerary(t, 1.0, length); };
  if (kneading_compare(knead(lo), target) > 0 || kneading_compare(knead(hi), target) < 0)
    throw DynamicsError("t_of_q: code of pi_q not admissible in (sqrt 2, 2)");
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (kneading_compare(knead(mid), target) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

// ---------------------------------------------------------------------------
// Transition matrices
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<int>>;

/// Intervals I_j = [j, j+1]; row i marks the intervals covered by the image
/// of I_i.
inline Matrix transition_matrix(const OrbitPattern& p) {
  const int n = p.size();
  Matrix mat(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(n - 1), 0));
  for (int i = 1; i < n; ++i) {
    const int a = std::min(p.perm(i), p.perm(i + 1)), b = std::max(p.perm(i), p.perm(i + 1));
    for (int j = a; j < b; ++j) mat[i - 1][j - 1] = 1;
  }
  return mat;
}

/// Spectral radius of a non-negative matrix: power iteration on M + I (the
/// shift makes periodic matrices converge), accelerated by squaring, then a
/// Rayleigh-style quotient.
inline double perron_root(const Matrix& mat, double eps = 1e-13, int max_squarings = 200) {
  const std::size_t n = mat.size();
  if (n == 0) throw DynamicsError("perron_root: empty matrix");
  using Dense = std::vector<std::vector<double>>;
  Dense shifted(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (mat[i].size() != n) throw DynamicsError("perron_root: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) shifted[i][j] = mat[i][j] + (i == j ? 1.0 : 0.0);
  }
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += shifted[i][j] * v[j];
    return w;
  };
  auto estimate = [&](const std::vector<double>& v) {
    const auto w = apply(v);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) num += w[i], den += v[i];
    return num / den - 1.0;
  };

  Dense power = shifted;
  double last = -1.0;
  for (int k = 0; k < max_squarings; ++k) {
    Dense next(n, std::vector<double>(n, 0.0));
    double big = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l] != 0.0)
          for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * power[l][j];
    for (auto& row : next)
      for (double x : row) big = std::max(big, x);
    if (big == 0.0) return 0.0;
    for (auto& row : next)
      for (double& x : row) x /= big;
    power.swap(next);
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i] += power[i][j];
    const double lambda = estimate(v);
    if (k > 2 && std::abs(lambda - last) < eps) return lambda;
    last = lambda;
  }
  throw DynamicsError("perron_root: no convergence");
}

// ---------------------------------------------------------------------------
// The tight horseshoe
// ---------------------------------------------------------------------------

using Q = boost::rational<std::int64_t>;

struct SquarePoint {
  Q x, y;
  friend bool operator==(const SquarePoint&, const SquarePoint&) = default;
  friend bool operator<(const SquarePoint& a, const SquarePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline std::string to_string(const SquarePoint& p) {
  auto s = [](Q v) {
    return std::to_string(v.numerator()) + (v.denominator() == 1 ? "" : "/" + std::to_string(v.denominator()));
  };
  return "(" + s(p.x) + ", " + s(p.y) + ")";
}

inline bool in_square(const SquarePoint& p) { return p.x >= Q(0) && p.x <= Q(1) && p.y >= Q(0) && p.y <= Q(1); }
inline bool on_boundary(const SquarePoint& p) {
  return in_square(p) && (p.x == Q(0) || p.x == Q(1) || p.y == Q(0) || p.y == Q(1));
}

/// Stretch by 2 horizontally, squash by 2 vertically, fold the right half over.
inline SquarePoint horseshoe_F(const SquarePoint& p) {
  if (!in_square(p)) throw DynamicsError("horseshoe_F: point outside the square");
  if (p.x <= Q(1, 2)) return {2 * p.x, p.y / 2};
  return {2 - 2 * p.x, 1 - p.y / 2};
}

namespace detail {
/// i >= 1 with 2^{-i} <= v <= 2^{1-i}, preferring the segment whose interior
/// holds v; 0 if none.
inline int dyadic_segment(Q v) {
  if (v <= Q(0) || v > Q(1)) return 0;
  int i = 1;
  Q lo(1, 2);
  while (v < lo) {
    lo /= 2;
    ++i;
    if (i > 60) return 0;
  }
  return i;
}
inline bool is_dyadic_endpoint(Q v) {
  if (v <= Q(0) || v > Q(1)) return false;
  while (v < Q(1)) v *= 2;
  return v == Q(1);
}
}  // namespace detail

/// The point (0,0), the corners and the fold endpoints on the left and bottom
/// edges all collapse to the single point at infinity.
inline bool is_infinity_point(const SquarePoint& p) {
  if (!on_boundary(p)) return false;
  if (p.x == Q(0) && (p.y == Q(0) || detail::is_dyadic_endpoint(p.y))) return true;
  if (p.y == Q(0) && detail::is_dyadic_endpoint(p.x)) return true;
  return (p.x == Q(1) && p.y == Q(1));
}

/// Fold partner of a boundary point (itself at a fold centre).
inline SquarePoint boundary_ident(const SquarePoint& p) {
  if (!on_boundary(p)) throw DynamicsError("boundary_ident: " + to_string(p) + " is not on the boundary");
  if (is_infinity_point(p)) return {0, 0};
  if (p.y == Q(1)) return {1 - p.x, 1};
  if (p.x == Q(1)) return {1, 1 - p.y};
  if (p.x == Q(0)) {
    const int i = detail::dyadic_segment(p.y);
    return {0, Q(3, std::int64_t(1) << i) - p.y};
  }
  const int i = detail::dyadic_segment(p.x);
  return {Q(3, std::int64_t(1) << i) - p.x, 0};
}

/// Canonical representative of the identification class.
inline SquarePoint ident_class(const SquarePoint& p) {
  if (!on_boundary(p)) return p;
  if (is_infinity_point(p)) return {0, 0};
  const SquarePoint q = boundary_ident(p);
  return q < p ? q : p;
}

struct IdentCheck {
  bool ok = true;
  std::string counterexample;
};

/// F maps identified pairs to identified pairs, is continuous across x = 1/2,
/// and separates classes on the sampled points.
inline IdentCheck check_F_respects_ident(const std::vector<SquarePoint>& samples) {
  IdentCheck out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.counterexample = why;
    return out;
  };
  std::vector<std::pair<SquarePoint, SquarePoint>> image_of_class;
  std::set<std::pair<SquarePoint, SquarePoint>> seen;
  for (const auto& p : samples) {
    if (!in_square(p)) return fail("sample outside the square " + to_string(p));
    std::vector<SquarePoint> pts{p};
    if (on_boundary(p)) {
      const SquarePoint q = boundary_ident(p);
      if (!is_infinity_point(p)) pts.push_back(q);
      if (ident_class(horseshoe_F(p)) != ident_class(horseshoe_F(q)) && !is_infinity_point(p))
        return fail(to_string(p) + " ~ " + to_string(q) + " but F images " + to_string(horseshoe_F(p)) +
                    ", " + to_string(horseshoe_F(q)) + " are not identified");
      if (is_infinity_point(p) && !is_infinity_point(horseshoe_F(p)))
        return fail("F moves the point at infinity " + to_string(p) + " to " + to_string(horseshoe_F(p)));
    }
    // two one-sided images at x = 1/2
    const SquarePoint left{1, p.y / 2}, right{1, 1 - p.y / 2};
    if (ident_class(left) != ident_class(right))
      return fail("F is discontinuous across x = 1/2 at y = " + to_string(SquarePoint{Q(1, 2), p.y}));
    for (const auto& s : pts) {
      const auto key = std::make_pair(ident_class(horseshoe_F(s)), ident_class(s));
      if (seen.insert(key).second) image_of_class.push_back(key);
    }
  }
  std::sort(image_of_class.begin(), image_of_class.end());
  for (std::size_t k = 1; k < image_of_class.size(); ++k) {
    const auto& a = image_of_class[k - 1];
    const auto& b = image_of_class[k];
    if (a.first == b.first && a.second != b.second && !(a.first == SquarePoint{0, 0}))
      return fail("F identifies " + to_string(a.second) + " and " + to_string(b.second));
  }
  return out;
}

}  // namespace nbt
