#pragma once

// Braid words in Artin generators, permutations, and the word-level
// primitives shared by every other module.
//
// Conventions
//   * letter  i > 0 is sigma_i, i < 0 is sigma_|i|^{-1}; sigma_i exchanges the
//     strands at positions i and i+1 with the left strand passing over.
//   * words are read left to right, top to bottom: the leftmost letter acts
//     first.
//   * a permutation maps the starting position of a strand (1-based) to its
//     final position.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nbt {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

class Permutation {
 public:
  Permutation() = default;

  /// One-line notation, 1-based: images[s-1] is the image of s.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[v - 1]) throw BraidError("Permutation: not a bijection of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_.at(s - 1); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int s = 1; s <= size(); ++s) inv[images_[s - 1] - 1] = s;
    return Permutation(std::move(inv));
  }

  /// First this, then other.
  Permutation then(const Permutation& other) const {
    if (other.size() != size()) throw BraidError("Permutation: size mismatch");
    std::vector<int> im(images_.size());
    for (int s = 1; s <= size(); ++s) im[s - 1] = other(images_[s - 1]);
    return Permutation(std::move(im));
  }

  int inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (images_[i] > images_[j]) ++count;
    return count;
  }

  /// Cycles in orbit order, each starting at its smallest element, sorted by
  /// that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int s = 1; s <= size(); ++s) {
      if (seen[s - 1]) continue;
      std::vector<int> cyc;
      for (int x = s; !seen[x - 1]; x = (*this)(x)) {
        seen[x - 1] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  bool is_cyclic() const { return size() >= 1 && cycles().size() == 1; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// ---------------------------------------------------------------------------
// BraidWord
// ---------------------------------------------------------------------------

class BraidWord {
 public:
  BraidWord() : strands_(1) {}

  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw BraidError("BraidWord: strand count must be positive");
    for (int l : letters_)
      if (l == 0 || std::abs(l) >= strands_)
        throw BraidError("BraidWord: letter " + std::to_string(l) + " out of range for B" +
                         std::to_string(strands_));
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int exponent_sum() const {
    int e = 0;
    for (int l : letters_) e += l > 0 ? 1 : -1;
    return e;
  }

  BraidWord inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    return BraidWord(strands_, std::move(inv));
  }

  BraidWord& operator*=(const BraidWord& v) {
    if (v.strands_ != strands_)
      throw BraidError("compose: strand-count mismatch (B" + std::to_string(strands_) + " vs B" +
                       std::to_string(v.strands_) + ")");
    letters_.insert(letters_.end(), v.letters_.begin(), v.letters_.end());
    return *this;
  }

  /// Same word viewed in B_n (n >= strands()), letters shifted by offset.
  BraidWord embedded(int n, int offset = 0) const {
    if (offset < 0 || offset + strands_ > n) throw BraidError("embedded: does not fit");
    std::vector<int> out(letters_);
    for (int& l : out) l = l > 0 ? l + offset : l - offset;
    return BraidWord(n, std::move(out));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

inline BraidWord operator*(BraidWord u, const BraidWord& v) { return u *= v; }

inline BraidWord compose(const BraidWord& u, const BraidWord& v) { return u * v; }

inline BraidWord power(const BraidWord& u, int e) {
  BraidWord base = e >= 0 ? u : u.inverse();
  BraidWord out(u.strands());
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

/// c^{-1} u c.
inline BraidWord conjugate(const BraidWord& u, const BraidWord& c) {
  return c.inverse() * u * c;
}

inline Permutation permutation_of(const BraidWord& u) {
  // pos[s] = current position of the strand that started at s
  std::vector<int> at(u.strands());  // at[position] = starting label
  std::iota(at.begin(), at.end(), 1);
  for (int l : u.letters()) {
    const int i = std::abs(l);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> im(u.strands());
  for (int p = 0; p < u.strands(); ++p) im[at[p] - 1] = p + 1;
  return Permutation(std::move(im));
}

/// The positive braid inducing p in which every pair of strands crosses at
/// most once.
inline BraidWord positive_permutation_braid(const Permutation& p) {
  const int n = p.size();
  std::vector<int> target = p.images();  // target[pos] for the strand at pos
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(p.inversions()));
  // Bubble sort by target; each swap moves the left strand right over its
  // neighbour, which is a positive crossing.
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        letters.push_back(i + 1);
        swapped = true;
      }
    }
  }
  return BraidWord(std::max(n, 1), std::move(letters));
}

/// Garside half twist (s1)(s2 s1)...(s_{n-1}...s1).
inline BraidWord delta_braid(int n) {
  if (n < 2) throw BraidError("delta_braid: n must be at least 2");
  std::vector<int> letters;
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

/// theta_n = Delta_n^2, the generator of the centre.
inline BraidWord full_twist(int n) {
  BraidWord d = delta_braid(n);
  return d * d;
}

/// Delta on strands lo..hi, embedded in B_n.
inline BraidWord half_twist_range(int n, int lo, int hi) {
  if (lo < 1 || hi < lo || hi > n) throw BraidError("half_twist_range: bad range");
  if (hi == lo) return BraidWord(n);
  return delta_braid(hi - lo + 1).embedded(n, lo - 1);
}

/// Deletes the strand that starts at position s, following it through the
/// word. Crossings involving it vanish; the rest are renumbered.
inline BraidWord erase_strand(const BraidWord& u, int s) {
  if (s < 1 || s > u.strands()) throw BraidError("erase_strand: strand out of range");
  if (u.strands() == 1) throw BraidError("erase_strand: cannot erase the only strand");
  int p = s;
  std::vector<int> out;
  for (int l : u.letters()) {
    const int i = std::abs(l);
    if (i == p) {
      p = i + 1;
    } else if (i + 1 == p) {
      p = i;
    } else {
      const int j = i > p ? i - 1 : i;
      out.push_back(l > 0 ? j : -j);
    }
  }
  return BraidWord(u.strands() - 1, std::move(out));
}

/// Cycles of permutation_of(u): one per component of the closure.
inline std::vector<std::vector<int>> cycle_components(const BraidWord& u) {
  return permutation_of(u).cycles();
}

// ---------------------------------------------------------------------------
// Text format  "Bn: i1 i2 ... ik"
// ---------------------------------------------------------------------------

inline std::string to_text(const BraidWord& u) {
  std::ostringstream os;
  os << 'B' << u.strands() << ':';
  for (int l : u.letters()) os << ' ' << l;
  return os.str();
}

inline BraidWord parse_braid(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return BraidError("parse_braid: " + why + " in '" + std::string(text) + "'");
  };
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos || text[pos] != 'B') throw fail("missing 'B' prefix");
  const std::size_t colon = text.find(':', pos);
  if (colon == std::string_view::npos) throw fail("missing ':'");
  std::istringstream head(std::string(text.substr(pos + 1, colon - pos - 1)));
  int n = 0;
  if (!(head >> n) || n < 1) throw fail("bad strand count");
  std::string rest_word;
  if (head >> rest_word) throw fail("bad strand count");
  std::istringstream body(std::string(text.substr(colon + 1)));
  std::vector<int> letters;
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw fail("bad letter '" + tok + "'");
    }
    if (used != tok.size()) throw fail("bad letter '" + tok + "'");
    if (v == 0 || std::abs(v) >= n) throw fail("letter " + tok + " out of range");
    letters.push_back(v);
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace nbt
