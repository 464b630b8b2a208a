#pragma once

// Garside structure of B_n: permutation braids as canonical factors, the
// left normal form Delta^p x_1 ... x_r, and the word problem.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nbt/braid.hpp"

namespace nbt {

/// A positive permutation braid, stored by its permutation (0-based:
/// image(s) is where the strand starting at s ends).
class CanonicalFactor {
 public:
  CanonicalFactor() = default;
  explicit CanonicalFactor(std::vector<int> zero_based) : p_(std::move(zero_based)) {}

  static CanonicalFactor identity(int n) {
    std::vector<int> p(n);
    for (int s = 0; s < n; ++s) p[s] = s;
    return CanonicalFactor(std::move(p));
  }
  static CanonicalFactor delta(int n) {
    std::vector<int> p(n);
    for (int s = 0; s < n; ++s) p[s] = n - 1 - s;
    return CanonicalFactor(std::move(p));
  }
  /// sigma_i, 1 <= i < n.
  static CanonicalFactor atom(int n, int i) {
    CanonicalFactor a = identity(n);
    std::swap(a.p_[i - 1], a.p_[i]);
    return a;
  }
  static CanonicalFactor from_permutation(const Permutation& perm) {
    std::vector<int> p(perm.size());
    for (int s = 1; s <= perm.size(); ++s) p[s - 1] = perm(s) - 1;
    return CanonicalFactor(std::move(p));
  }

  int strands() const { return static_cast<int>(p_.size()); }
  int image(int s) const { return p_[s]; }
  const std::vector<int>& images() const { return p_; }

  Permutation permutation() const {
    std::vector<int> im(p_.size());
    for (std::size_t s = 0; s < p_.size(); ++s) im[s] = p_[s] + 1;
    return Permutation(std::move(im));
  }
  BraidWord word() const { return positive_permutation_braid(permutation()); }
  int length() const { return permutation().inversions(); }

  bool is_identity() const {
    for (int s = 0; s < strands(); ++s)
      if (p_[s] != s) return false;
    return true;
  }
  bool is_delta() const {
    for (int s = 0; s < strands(); ++s)
      if (p_[s] != strands() - 1 - s) return false;
    return true;
  }

  std::vector<int> inverse_images() const {
    std::vector<int> inv(p_.size());
    for (int s = 0; s < strands(); ++s) inv[p_[s]] = s;
    return inv;
  }

  /// i (1-based) with this = sigma_i * x for a simple x.
  bool starts_with(int i) const { return p_[i - 1] > p_[i]; }
  /// i (1-based) with this = x * sigma_i for a simple x.
  bool ends_with(int i) const {
    auto inv = inverse_images();
    return inv[i - 1] > inv[i];
  }

  /// this * sigma_i; caller guarantees the result is simple.
  void append_atom(int i) {
    for (int& v : p_) {
      if (v == i - 1)
        v = i;
      else if (v == i)
        v = i - 1;
    }
  }
  /// sigma_i^{-1} * this; caller guarantees starts_with(i).
  void remove_leading_atom(int i) { std::swap(p_[i - 1], p_[i]); }

  /// Conjugation by Delta: sigma_i -> sigma_{n-i}.
  CanonicalFactor tau(int times = 1) const {
    if (times % 2 == 0) return *this;
    const int n = strands();
    std::vector<int> t(p_.size());
    for (int s = 0; s < n; ++s) t[s] = n - 1 - p_[n - 1 - s];
    return CanonicalFactor(std::move(t));
  }

  /// Right complement a^{-1} Delta.
  CanonicalFactor right_complement() const {
    const int n = strands();
    auto inv = inverse_images();
    std::vector<int> t(p_.size());
    for (int s = 0; s < n; ++s) t[s] = n - 1 - inv[s];
    return CanonicalFactor(std::move(t));
  }
  /// Left complement Delta a^{-1}.
  CanonicalFactor left_complement() const {
    const int n = strands();
    auto inv = inverse_images();
    std::vector<int> t(p_.size());
    for (int s = 0; s < n; ++s) t[s] = inv[n - 1 - s];
    return CanonicalFactor(std::move(t));
  }

  friend bool operator==(const CanonicalFactor&, const CanonicalFactor&) = default;
  friend auto operator<=>(const CanonicalFactor&, const CanonicalFactor&) = default;

 private:
  std::vector<int> p_;
};

/// Greatest common prefix of two simple elements.
inline CanonicalFactor meet(CanonicalFactor a, CanonicalFactor b) {
  const int n = a.strands();
  CanonicalFactor c = CanonicalFactor::identity(n);
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (a.starts_with(i) && b.starts_with(i)) {
        a.remove_leading_atom(i);
        b.remove_leading_atom(i);
        c.append_atom(i);
        found = true;
      }
    }
  }
  return c;
}

/// Makes the pair (a, b) left-weighted. Returns true if anything moved.
inline bool left_weight(CanonicalFactor& a, CanonicalFactor& b) {
  const int n = a.strands();
  bool changed = false;
  for (bool moved = true; moved;) {
    moved = false;
    auto ainv = a.inverse_images();
    for (int i = 1; i < n; ++i) {
      if (b.starts_with(i) && !(ainv[i - 1] > ainv[i])) {
        a.append_atom(i);
        b.remove_leading_atom(i);
        moved = changed = true;
        break;
      }
    }
  }
  return changed;
}

inline bool is_left_weighted(const CanonicalFactor& a, const CanonicalFactor& b) {
  auto ainv = a.inverse_images();
  for (int i = 1; i < a.strands(); ++i)
    if (b.starts_with(i) && !(ainv[i - 1] > ainv[i])) return false;
  return true;
}

class NormalForm {
 public:
  NormalForm() = default;
  NormalForm(int strands, int infimum, std::vector<CanonicalFactor> factors)
      : n_(strands), inf_(infimum), factors_(std::move(factors)) {}

  /// Normal form of Delta^p * f_1 * ... * f_k for arbitrary simple f_j.
  static NormalForm from_factors(int n, int p, const std::vector<CanonicalFactor>& fs) {
    NormalForm nf(n, p, {});
    for (const auto& f : fs) nf.push_back(f);
    nf.tidy();
    return nf;
  }

  int strands() const { return n_; }
  int infimum() const { return inf_; }
  int supremum() const { return inf_ + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<CanonicalFactor>& factors() const { return factors_; }

  /// Right multiplication by a simple element, keeping the form normal.
  void push_back(CanonicalFactor x) {
    factors_.push_back(std::move(x));
    for (std::size_t j = factors_.size() - 1; j > 0; --j)
      if (!left_weight(factors_[j - 1], factors_[j])) break;
  }

  /// Drops trailing identities and moves leading Deltas into the infimum.
  void tidy() {
    while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
    inf_ += static_cast<int>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  bool is_valid() const {
    for (const auto& f : factors_)
      if (f.is_identity() || f.is_delta()) return false;
    for (std::size_t j = 1; j < factors_.size(); ++j)
      if (!is_left_weighted(factors_[j - 1], factors_[j])) return false;
    return true;
  }

  /// Initial factor tau^{-p}(x_1) (identity when r = 0).
  CanonicalFactor initial_factor() const {
    return factors_.empty() ? CanonicalFactor::identity(n_) : factors_.front().tau(inf_ & 1);
  }
  CanonicalFactor final_factor() const {
    return factors_.empty() ? CanonicalFactor::delta(n_) : factors_.back();
  }

  BraidWord word() const {
    BraidWord out(n_);
    if (n_ >= 2) out *= power(delta_braid(n_), inf_);
    for (const auto& f : factors_) out *= f.word();
    return out;
  }

  NormalForm inverse() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  /// Lexicographic order, usable as a canonical tie-break.
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
    return a.factors_ < b.factors_;
  }

 private:
  int n_ = 1;
  int inf_ = 0;
  std::vector<CanonicalFactor> factors_;
};

inline NormalForm left_normal_form(const BraidWord& u) {
  const int n = u.strands();
  if (n == 1) return NormalForm(1, 0, {});
  // Runs of letters of one sign are packed into simple elements while they
  // stay simple. A negative run is s^{-1} = Delta^{-1} (Delta s^{-1}); every
  // Delta^{-1} is pushed to the front, applying tau to each factor it crosses.
  struct Piece {
    CanonicalFactor f;
    bool negative;
  };
  std::vector<Piece> pieces;
  for (int l : u.letters()) {
    const int i = std::abs(l);
    if (!pieces.empty() && pieces.back().negative == (l < 0)) {
      CanonicalFactor& f = pieces.back().f;
      if (l > 0 && !f.ends_with(i)) {
        f.append_atom(i);
        continue;
      }
      if (l < 0 && f.image(i - 1) < f.image(i)) {
        f.remove_leading_atom(i);  // prepends sigma_i
        continue;
      }
    }
    pieces.push_back({CanonicalFactor::atom(n, i), l < 0});
  }
  int negatives_after = 0;
  for (const auto& pc : pieces)
    if (pc.negative) ++negatives_after;
  const int p = -negatives_after;
  std::vector<CanonicalFactor> fs;
  fs.reserve(pieces.size());
  for (const auto& pc : pieces) {
    if (pc.negative) --negatives_after;
    const CanonicalFactor f = pc.negative ? pc.f.left_complement() : pc.f;
    fs.push_back(f.tau(negatives_after & 1));
  }
  return NormalForm::from_factors(n, p, fs);
}

inline NormalForm NormalForm::inverse() const {
  // (Delta^p x_1...x_r)^{-1} = d(x_r) Delta^{-1} ... d(x_1) Delta^{-1} Delta^{-p}
  // with d the right complement; moving every Delta to the front applies tau
  // j + p times to d(x_j).
  std::vector<CanonicalFactor> fs;
  const int r = canonical_length();
  fs.reserve(static_cast<std::size_t>(r));
  for (int j = r; j >= 1; --j)
    fs.push_back(factors_[j - 1].right_complement().tau(((j + inf_) % 2 + 2) % 2));
  return NormalForm::from_factors(n_, -inf_ - r, fs);
}

inline bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw BraidError("words_equal: strand-count mismatch (B" + std::to_string(u.strands()) +
                     " vs B" + std::to_string(v.strands()) + ")");
  return left_normal_form(u) == left_normal_form(v);
}

inline bool is_identity(const BraidWord& u) {
  const NormalForm nf = left_normal_form(u);
  return nf.infimum() == 0 && nf.canonical_length() == 0;
}

}  // namespace nbt
