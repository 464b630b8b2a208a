#pragma once

// Braid closures with an optional axis and Dehn surgery coefficients, and the
// twist moves that rewrite the braid while updating the coefficients.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nbt/braid.hpp"
#include "nbt/freegroup.hpp"
#include "nbt/garside.hpp"
#include "nbt/rational.hpp"

namespace nbt {

class SurgeryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjugation by Delta: sigma_i -> sigma_{n-i}; position p -> n+1-p.
inline BraidWord flip(const BraidWord& u) {
  std::vector<int> w(u.letters());
  const int n = u.strands();
  for (int& l : w) l = l > 0 ? n - l : -(n + l);
  return BraidWord(n, std::move(w));
}

// ---------------------------------------------------------------------------
// Twist templates for a fixed string at position 1
//
//   untwisted:  V1 * L_m * V2
//   -t twist:   V1[tm] * S_t * L_m * V2[tm]
//
// L_m = s1 s2 .. sm sm .. s1 loops the fixed string around the ribbon at
// positions 2..m+1, V1 and V2 avoid position 1, [k] shifts letters by k, and
// S_t passes the ribbon leftwards over t-1 parallel copies of itself.
// ---------------------------------------------------------------------------

inline BraidWord left_lasso(int n, int m) {
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  for (int i = m; i >= 1; --i) w.push_back(i);
  return BraidWord(n, std::move(w));
}

/// Positive crossing of the block at positions offset+1..offset+a over the
/// block of width b to its right.
inline BraidWord block_crossing(int n, int offset, int a, int b) {
  std::vector<int> im(a + b);
  for (int s = 1; s <= a; ++s) im[s - 1] = s + b;
  for (int s = a + 1; s <= a + b; ++s) im[s - 1] = s - a;
  return positive_permutation_braid(Permutation(std::move(im))).embedded(n, offset);
}

inline BraidWord ribbon_spiral(int n, int m, int t) {
  BraidWord s(n);
  if (t == 0) return s;
  const BraidWord b = block_crossing(n, 1, m, m);
  for (int j = t - 1; j >= 0; --j) {
    std::vector<int> w(b.letters());
    for (int& l : w) l += j * m;
    s *= BraidWord(n, std::move(w));
  }
  return s;
}

struct TwistTemplate {
  int width = 0;
  BraidWord before;  // V1, in B_n, avoids position 1
  BraidWord after;   // V2
};

/// V1[tm] S_t L_m V2[tm] in B_{n+tm}; t = 0 gives V1 L_m V2.
inline BraidWord twisted_form(const TwistTemplate& tt, int t) {
  const int n = tt.before.strands();
  const int big = n + t * tt.width;
  return tt.before.embedded(big, t * tt.width) * ribbon_spiral(big, tt.width, t) *
         left_lasso(big, tt.width) * tt.after.embedded(big, t * tt.width);
}

/// x lies in <sigma_{f+1}, ...>: strands 1..f are straight and unlinked.
inline bool avoids_first(const BraidWord& x, int f) {
  const Permutation p = permutation_of(x);
  for (int s = 1; s <= f; ++s)
    if (p(s) != s) return false;
  BraidWord y = x;
  for (int s = f; s >= 1; --s) y = erase_strand(y, s);
  return words_equal(x, y.embedded(x.strands(), f));
}

inline BraidWord drop_first(BraidWord x, int f) {
  for (int s = f; s >= 1; --s) x = erase_strand(x, s);
  return x;
}

/// Recognises u = V1 L_m V2 with the fixed string at position 1.
inline std::optional<TwistTemplate> match_untwisted(const BraidWord& u) {
  auto split = split_lasso_right(flip(u));
  if (!split) return std::nullopt;
  TwistTemplate tt{split->width, flip(split->before), flip(split->after)};
  if (!words_equal(twisted_form(tt, 0), u)) return std::nullopt;
  return tt;
}

/// Recognises u = V1[tm] S_t L_m V2[tm] (t >= 1) and returns V1, V2 in B_{N-tm}.
/// Erasing the fixed string and the ribbon strands that end at 2..m+1 leaves
/// V2 behind t-1 straight copies; V1 is then read off by division.
inline std::optional<TwistTemplate> match_twisted(const BraidWord& u, int m, int t) {
  const int big = u.strands();
  const int n = big - t * m;
  if (m < 1 || t < 1 || n < m + 1) return std::nullopt;
  const Permutation p = permutation_of(u);
  if (p(1) != 1) return std::nullopt;
  const Permutation pinv = p.inverse();
  std::vector<int> gone{1};
  for (int b = 2; b <= m + 1; ++b) gone.push_back(pinv(b));
  std::sort(gone.rbegin(), gone.rend());
  BraidWord y = u;
  for (int s : gone) y = erase_strand(y, s);
  const int copies = (t - 1) * m;
  if (!avoids_first(y, copies)) return std::nullopt;
  const BraidWord v2 = drop_first(y, copies);  // B_{n-1}
  TwistTemplate tt;
  tt.width = m;
  tt.after = v2.embedded(n, 1);
  const BraidWord tail = ribbon_spiral(big, m, t) * left_lasso(big, m);
  const BraidWord head = u * tt.after.embedded(big, t * m).inverse() * tail.inverse();
  if (!avoids_first(head, t * m + 1)) return std::nullopt;
  tt.before = drop_first(head, t * m + 1).embedded(n, 1);
  if (!words_equal(twisted_form(tt, t), u)) return std::nullopt;
  return tt;
}

// ---------------------------------------------------------------------------
// SurgeredLink
// ---------------------------------------------------------------------------

struct LinkComponent {
  std::string name;
  std::vector<int> strands;  // top positions, ascending
  std::optional<ExtendedRational> coefficient;
};

struct LedgerEntry {
  std::string operation;
  std::map<std::string, std::optional<ExtendedRational>> before;
  std::map<std::string, std::optional<ExtendedRational>> after;
};

using TwistLedger = std::vector<LedgerEntry>;

inline const std::string kAxisName = "A";

class SurgeredLink {
 public:
  SurgeredLink() = default;

  /// Each named strand list must be a union of closure cycles; together they
  /// must cover every strand exactly once.
  SurgeredLink(BraidWord braid, bool axis, std::vector<LinkComponent> components,
               std::optional<ExtendedRational> axis_coefficient = std::nullopt)
      : braid_(std::move(braid)), axis_(axis), axis_coefficient_(axis_coefficient) {
    const int n = braid_.strands();
    owner_.assign(n, -1);
    std::set<std::string> names;
    for (auto& c : components) {
      if (c.name.empty() || c.name == kAxisName || !names.insert(c.name).second)
        throw SurgeryError("SurgeredLink: bad or duplicate component name '" + c.name + "'");
      for (int s : c.strands) {
        if (s < 1 || s > n || owner_[s - 1] != -1)
          throw SurgeryError("SurgeredLink: strand sets must partition 1..n");
        owner_[s - 1] = static_cast<int>(names_.size());
      }
      names_.push_back(c.name);
      coefficients_.push_back(c.coefficient);
    }
    if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end())
      throw SurgeryError("SurgeredLink: strand sets must partition 1..n");
    check_cycles();
  }

  const BraidWord& braid() const { return braid_; }
  bool has_axis() const { return axis_; }
  std::optional<ExtendedRational> axis_coefficient() const { return axis_coefficient_; }
  const TwistLedger& ledger() const { return ledger_; }

  std::vector<LinkComponent> components() const {
    std::vector<LinkComponent> out;
    for (std::size_t k = 0; k < names_.size(); ++k) out.push_back({names_[k], strands_of(k), coefficients_[k]});
    return out;
  }

  bool has_component(const std::string& name) const {
    return name == kAxisName ? axis_ : find(name) >= 0;
  }
  std::vector<int> strands_of(const std::string& name) const { return strands_of(index_of(name)); }
  std::optional<ExtendedRational> coefficient(const std::string& name) const {
    if (name == kAxisName) {
      require_axis();
      return axis_coefficient_;
    }
    return coefficients_[index_of(name)];
  }

  SurgeredLink with_coefficient(const std::string& name, std::optional<ExtendedRational> r) const {
    SurgeredLink out = *this;
    if (name == kAxisName) {
      require_axis();
      out.axis_coefficient_ = r;
    } else {
      out.coefficients_[index_of(name)] = r;
    }
    return out;
  }

  /// Half the signed number of crossings between the two components; the
  /// axis links each component once per strand.
  int linking_number(const std::string& a, const std::string& b) const {
    if (a == b) throw SurgeryError("linking_number: needs two distinct components");
    if (a == kAxisName || b == kAxisName) {
      require_axis();
      return static_cast<int>(strands_of(a == kAxisName ? b : a).size());
    }
    const std::size_t ia = index_of(a), ib = index_of(b);
    std::vector<int> at(owner_);  // at[position] = owner of the strand there
    int sum = 0;
    for (int l : braid_.letters()) {
      const int i = std::abs(l);
      const int x = at[i - 1], y = at[i];
      if ((x == static_cast<int>(ia) && y == static_cast<int>(ib)) ||
          (x == static_cast<int>(ib) && y == static_cast<int>(ia)))
        sum += l > 0 ? 1 : -1;
      std::swap(at[i - 1], at[i]);
    }
    return sum / 2;
  }

  /// Replaces the braid by c^{-1} braid c; labels follow the strands.
  SurgeredLink conjugated(const BraidWord& c, const std::string& note = "") const {
    SurgeredLink out = *this;
    out.braid_ = conjugate(braid_, c);
    const Permutation pc = permutation_of(c);
    for (int p = 1; p <= braid_.strands(); ++p) out.owner_[pc(p) - 1] = owner_[p - 1];
    out.check_cycles();
    out.record(*this, note.empty() ? "conjugate by " + to_text(c) : note);
    return out;
  }

  /// A t twist on the axis: braid * theta^{-t}.
  SurgeredLink twist_axis(int t) const {
    require_axis();
    SurgeredLink out = *this;
    if (t == 0) return out;
    if (braid_.strands() >= 2) out.braid_ = braid_ * power(full_twist(braid_.strands()), -t);
    if (axis_coefficient_) out.axis_coefficient_ = twist_update(*axis_coefficient_, t);
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (coefficients_[k])
        out.coefficients_[k] = offset_update(*coefficients_[k], t, static_cast<int>(strands_of(k).size()));
    out.record(*this, "twist " + std::to_string(t) + " on axis");
    return out;
  }

  /// A t twist on a single-strand component sitting at position 1 or n.
  /// t < 0 needs the untwisted template, t > 0 the twisted one.
  SurgeredLink twist_fixed(const std::string& name, int t) const {
    const std::size_t k = index_of(name);
    const auto ss = strands_of(k);
    const int n = braid_.strands();
    if (ss.size() != 1) throw SurgeryError("twist_fixed: '" + name + "' is not a single fixed string");
    if (t == 0) return *this;
    const bool right = ss[0] == n && n > 1;
    if (ss[0] != 1 && !right)
      throw SurgeryError("twist_fixed: '" + name + "' must sit at the left or right end");

    // work with the fixed string on the left
    SurgeredLink work = right ? flipped() : *this;
    SurgeredLink out = work.twist_fixed_left(k, t);
    if (right) out = out.flipped();

    // coefficients, from the linking numbers before the twist
    if (coefficients_[k]) out.coefficients_[k] = twist_update(*coefficients_[k], t);
    for (std::size_t j = 0; j < names_.size(); ++j)
      if (j != k && coefficients_[j])
        out.coefficients_[j] = offset_update(*coefficients_[j], t, linking_number(name, names_[j]));
    if (axis_ && axis_coefficient_) out.axis_coefficient_ = offset_update(*axis_coefficient_, t, 1);
    out.ledger_ = ledger_;
    out.record(*this, "twist " + std::to_string(t) + " on " + name);
    return out;
  }

  /// Drops a component with coefficient infinity.
  SurgeredLink erase_component(const std::string& name) const {
    const std::size_t k = index_of(name);
    if (!coefficients_[k] || !coefficients_[k]->is_infinite())
      throw SurgeryError("erase_component: '" + name + "' does not have coefficient inf");
    auto ss = strands_of(k);
    if (static_cast<int>(ss.size()) == braid_.strands())
      throw SurgeryError("erase_component: cannot erase every strand");
    SurgeredLink out = *this;
    std::sort(ss.rbegin(), ss.rend());
    for (int s : ss) {
      out.braid_ = erase_strand(out.braid_, s);
      out.owner_.erase(out.owner_.begin() + (s - 1));
    }
    out.names_.erase(out.names_.begin() + static_cast<std::ptrdiff_t>(k));
    out.coefficients_.erase(out.coefficients_.begin() + static_cast<std::ptrdiff_t>(k));
    for (int& o : out.owner_)
      if (o > static_cast<int>(k)) --o;
    out.record(*this, "erase " + name);
    return out;
  }

  std::map<std::string, std::optional<ExtendedRational>> coefficient_map() const {
    std::map<std::string, std::optional<ExtendedRational>> m;
    for (std::size_t k = 0; k < names_.size(); ++k) m[names_[k]] = coefficients_[k];
    if (axis_) m[kAxisName] = axis_coefficient_;
    return m;
  }

 private:
  int find(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return static_cast<int>(k);
    return -1;
  }
  std::size_t index_of(const std::string& name) const {
    const int k = find(name);
    if (k < 0) throw SurgeryError("unknown component '" + name + "'");
    return static_cast<std::size_t>(k);
  }
  std::vector<int> strands_of(std::size_t k) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < owner_.size(); ++p)
      if (owner_[p] == static_cast<int>(k)) out.push_back(static_cast<int>(p) + 1);
    return out;
  }
  void require_axis() const {
    if (!axis_) throw SurgeryError("link has no braid axis");
  }
  void check_cycles() const {
    for (const auto& cyc : cycle_components(braid_))
      for (int s : cyc)
        if (owner_[s - 1] != owner_[cyc[0] - 1])
          throw SurgeryError("SurgeredLink: a closure component is split between labels");
  }
  void record(const SurgeredLink& prev, std::string what) {
    ledger_.push_back({std::move(what), prev.coefficient_map(), coefficient_map()});
  }

  SurgeredLink flipped() const {
    SurgeredLink out = *this;
    out.braid_ = flip(braid_);
    std::reverse(out.owner_.begin(), out.owner_.end());
    return out;
  }

  // The fixed string of component k is at position 1. Rewrites the braid and
  // the strand labels; coefficients are left to the caller.
  SurgeredLink twist_fixed_left(std::size_t k, int t) const {
    const int n = braid_.strands();
    SurgeredLink out = *this;
    if (t < 0) {
      auto tt = match_untwisted(braid_);
      if (!tt)
        throw SurgeryError("twist_fixed: '" + names_[k] +
                           "' does not loop once around a ribbon (template mismatch)");
      const int s = -t, m = tt->width;
      out.braid_ = twisted_form(*tt, s);
      // old position j >= 2 moves to j + s m; the copies join the ribbon's components
      std::vector<int> owner(static_cast<std::size_t>(n + s * m), -1);
      owner[0] = owner_[0];
      for (int j = 2; j <= n; ++j) owner[j - 1 + s * m] = owner_[j - 1];
      const Permutation pv = permutation_of(tt->before).inverse();
      for (int b = 0; b < s; ++b)
        for (int i = 1; i <= m; ++i) owner[1 + b * m + i - 1] = owner_[pv(1 + i) - 1];
      out.owner_ = std::move(owner);
    } else {
      int m = 0;
      for (std::size_t j = 0; j < names_.size(); ++j)
        if (j != k) m += linking_number(names_[k], names_[j]);
      auto tt = m > 0 ? match_twisted(braid_, m, t) : std::nullopt;
      if (!tt)
        throw SurgeryError("twist_fixed: '" + names_[k] + "' is not in twisted form for a +" +
                           std::to_string(t) + " twist");
      out.braid_ = twisted_form(*tt, 0);
      std::vector<int> owner{owner_[0]};
      for (int j = t * m + 2; j <= n; ++j) owner.push_back(owner_[j - 1]);
      out.owner_ = std::move(owner);
    }
    out.check_cycles();
    return out;
  }

  BraidWord braid_;
  bool axis_ = false;
  std::optional<ExtendedRational> axis_coefficient_;
  std::vector<std::string> names_;
  std::vector<std::optional<ExtendedRational>> coefficients_;
  std::vector<int> owner_;  // owner_[p-1] = component index of the strand at top position p
  TwistLedger ledger_;
};

/// beta on strands 1..n plus a strand n+1 that loops once around all of them;
/// the closure is the closure of beta together with its axis.
inline BraidWord axis_augmented_braid(const BraidWord& u) {
  const int n = u.strands();
  std::vector<int> w(u.letters());
  for (int i = n; i >= 1; --i) w.push_back(i);
  for (int i = 1; i <= n; ++i) w.push_back(i);
  return BraidWord(n + 1, std::move(w));
}

}  // namespace nbt
