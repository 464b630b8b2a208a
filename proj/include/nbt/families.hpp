#pragma once

// The braid families: pi_q, beta'_q, beta_q, gamma_nu, delta and zeta, and
// the ribbon description used to build beta_q.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nbt/braid.hpp"

namespace nbt {

/// Role label -> strands (top positions) carrying it.
using RoleMap = std::map<std::string, std::vector<int>>;

struct FamilyBraid {
  BraidWord word;
  RoleMap roles;
};

/// q = m/n in (0, 1/3] with gcd(m, n) = 1.
inline void check_q(int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1 || n < 3 * m)
    throw std::invalid_argument("q = " + std::to_string(m) + "/" + std::to_string(n) +
                                " must be a reduced fraction in (0, 1/3]");
}

/// nu = l/m in [0, 1) in lowest terms (0 only as 0/1).
inline void check_nu(int l, int m) {
  if (m < 1 || l < 0 || l >= m || std::gcd(l, m) != 1)
    throw std::invalid_argument("nu = " + std::to_string(l) + "/" + std::to_string(m) +
                                " must be a reduced fraction in [0, 1)");
}

inline Permutation pi_q(int m, int n) {
  check_q(m, n);
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(n + 2));
  for (int r = 1; r <= n + 2; ++r) {
    if (r <= n - 3 * m + 1)
      im.push_back(r + m);
    else if (r <= n - 2 * m + 1)
      im.push_back(r + m + 1);
    else if (r <= n - m + 1)
      im.push_back(2 * n - 2 * m + 4 - r);
    else if (r == n - m + 2)
      im.push_back(n - 2 * m + 2);
    else
      im.push_back(n + 3 - r);
  }
  return Permutation(std::move(im));
}

/// pi_q increases on 1..n-2m+1 and decreases after.
inline int fold_of(int m, int n) { return n - 2 * m + 1; }

// ---------------------------------------------------------------------------
// Ribbons
// ---------------------------------------------------------------------------

struct Ribbon {
  std::string label;
  int width = 1;
  int half_twists = 0;  // Delta_width^k, applied where the ribbon ends
};

/// events: +j crosses the ribbon in slot j over the one in slot j+1 (left over
/// right), -j is the inverse move. Slots are 1-based and renumber as ribbons
/// move.
struct RibbonBraid {
  std::vector<Ribbon> ribbons;
  std::vector<int> events;

  int strands() const {
    int s = 0;
    for (const auto& r : ribbons) s += r.width;
    return s;
  }
};

inline BraidWord ribbon_expand(const RibbonBraid& rb) {
  const int n = rb.strands();
  const int k = static_cast<int>(rb.ribbons.size());
  for (const auto& r : rb.ribbons)
    if (r.width < 1) throw std::invalid_argument("ribbon_expand: widths must be positive");
  std::vector<int> slot(k);  // slot[j] = ribbon index in slot j
  std::iota(slot.begin(), slot.end(), 0);
  BraidWord out(n);
  for (int e : rb.events) {
    const int j = std::abs(e);
    if (j < 1 || j >= k) throw std::invalid_argument("ribbon_expand: event out of range");
    int offset = 0;
    for (int s = 0; s < j - 1; ++s) offset += rb.ribbons[slot[s]].width;
    const int a = rb.ribbons[slot[j - 1]].width, b = rb.ribbons[slot[j]].width;
    std::vector<int> im(a + b);
    for (int s = 1; s <= a; ++s) im[s - 1] = s + b;
    for (int s = a + 1; s <= a + b; ++s) im[s - 1] = s - a;
    BraidWord x = positive_permutation_braid(Permutation(std::move(im))).embedded(n, offset);
    // the inverse move undoes a positive crossing of the right ribbon over the left
    if (e < 0) {
      std::vector<int> jm(a + b);
      for (int s = 1; s <= b; ++s) jm[s - 1] = s + a;
      for (int s = b + 1; s <= a + b; ++s) jm[s - 1] = s - b;
      x = positive_permutation_braid(Permutation(std::move(jm))).embedded(n, offset).inverse();
    }
    out *= x;
    std::swap(slot[j - 1], slot[j]);
  }
  int offset = 0;
  for (int s = 0; s < k; ++s) {
    const Ribbon& r = rb.ribbons[slot[s]];
    if (r.width >= 2 && r.half_twists != 0)
      out *= power(half_twist_range(n, offset + 1, offset + r.width), r.half_twists);
    offset += r.width;
  }
  return out;
}

/// Top-position role map of a ribbon braid.
inline RoleMap ribbon_roles(const RibbonBraid& rb) {
  RoleMap roles;
  int p = 1;
  for (const auto& r : rb.ribbons)
    for (int i = 0; i < r.width; ++i) roles[r.label].push_back(p++);
  return roles;
}

/// The five ribbons of beta'_q in order: they move as the permutation
/// [2,4,5,3,1] of ribbons, with half twists on the third and fifth.
/// final_full_twist switches to beta_q: a full twist on the fifth ribbon and
/// none on the third.
inline RibbonBraid beta_ribbons(int m, int n, bool final_full_twist) {
  check_q(m, n);
  RibbonBraid rb;
  rb.ribbons = {{"first-ribbon", n - 3 * m + 1, 0},
                {"mid-ribbon", m, 0},
                {"mid-ribbon", m, final_full_twist ? 0 : 1},
                {"rogue", 1, 0},
                {"final-ribbon", m, final_full_twist ? 2 : 1}};
  rb.events = positive_permutation_braid(Permutation({2, 4, 5, 3, 1})).letters();
  return rb;
}

inline FamilyBraid beta_prime(int m, int n) {
  return {positive_permutation_braid(pi_q(m, n)), ribbon_roles(beta_ribbons(m, n, false))};
}

/// Half twist H on the final m strands; beta = H beta' H^{-1}.
inline BraidWord beta_conjugator(int m, int n) {
  check_q(m, n);
  return half_twist_range(n + 2, n - m + 3, n + 2);
}

inline FamilyBraid beta(int m, int n) {
  const RibbonBraid rb = beta_ribbons(m, n, true);
  return {ribbon_expand(rb), ribbon_roles(rb)};
}

/// beta_{m/(3m+l)} shifted right by one, then the new fixed string at
/// position 1 loops once (positively) around the final ribbon where it ends,
/// at positions 2..m+1.
inline FamilyBraid gamma(int l, int m) {
  check_nu(l, m);
  const FamilyBraid b = beta(m, 3 * m + l);
  const int n = b.word.strands() + 1;
  BraidWord w = b.word.embedded(n, 1);
  for (int i = 1; i <= m; ++i) w *= BraidWord(n, {i});
  for (int i = m; i >= 1; --i) w *= BraidWord(n, {i});
  RoleMap roles{{"fixed", {1}}};
  for (const auto& [label, ss] : b.roles)
    for (int s : ss) roles[label].push_back(s + 1);
  return {w, roles};
}

inline FamilyBraid delta_word() {
  BraidWord w(10, {6, 5, 4, 3, 9, 8, 8, 9, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 6});
  return {w, {{"blue", {1, 3, 5, 7, 9}}, {"black", {2, 4, 6, 8}}, {"green", {10}}}};
}

/// delta with an extra fixed string (red) at position 1, looped once around
/// the black string. Erasing the red strand gives delta letter for letter.
inline FamilyBraid zeta_word() {
  BraidWord w(11, {-7, -7, -2, -4, -3, -6, -5, -4, 7,  6,  10, 9,  9,  10, 8,  7,  6,  5,  9,  8,  7,
                   6,  5,  -5, -6, -7, -8, -9, -10, -10, -7, -8, 4,  3,  2,  1,  1,  5,  6,  7,  8,  8,
                   8,  7,  6,  10, 10, 9,  8,  7,  6,  5,  9,  4,  5,  6,  3,  4,  2,  7,  7});
  return {w, {{"red", {1}}, {"blue", {2, 4, 6, 8, 10}}, {"black", {3, 5, 7, 9}}, {"green", {11}}}};
}

/// The conjugator that puts zeta into twisted form for the +3 twist on red.
inline BraidWord zeta_conjugator() { return BraidWord(11, {-7, -7, -2, -4, -3, -6, -5, -4}); }

}  // namespace nbt
