#pragma once

// Replays of the twist / conjugacy chains. Every step records whether it
// held; conjugacies are found by search and re-checked before they count.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbt/conjugacy.hpp"
#include "nbt/families.hpp"
#include "nbt/rational.hpp"
#include "nbt/surgery.hpp"

namespace nbt {

struct VerificationStep {
  std::string description;
  bool pass = false;
  std::string detail;
  std::optional<ConjugacyCertificate> certificate;
};

struct VerificationReport {
  std::string name;
  std::vector<VerificationStep> steps;
  TwistLedger ledger;
  std::optional<SurgeredLink> final_link;

  bool overall() const {
    if (steps.empty()) return false;
    for (const auto& s : steps)
      if (!s.pass) return false;
    return true;
  }

  VerificationStep& add(std::string description, bool pass, std::string detail = "") {
    steps.push_back({std::move(description), pass, std::move(detail), std::nullopt});
    return steps.back();
  }
};

namespace detail {

inline std::string show(const std::optional<ExtendedRational>& r) { return r ? r->to_string() : "none"; }

/// Runs one link operation as a report step; a SurgeryError fails the step
/// and the replay stops there.
template <typename Op>
bool apply_step(VerificationReport& rep, SurgeredLink& link, const std::string& what, Op op) {
  try {
    link = op(link);
    rep.add(what, true);
    return true;
  } catch (const std::exception& e) {
    rep.add(what, false, e.what());
    return false;
  }
}

/// Checks x ~ y: word equality first, then a certified search.
inline void add_conjugacy_step(VerificationReport& rep, const std::string& what, const BraidWord& x,
                               const BraidWord& y, const SearchBudget& budget) {
  if (x.strands() != y.strands()) {
    rep.add(what, false,
            "strand counts differ: " + std::to_string(x.strands()) + " vs " + std::to_string(y.strands()));
    return;
  }
  if (words_equal(x, y)) {
    auto& s = rep.add(what, true, "equal as braids");
    s.certificate = ConjugacyCertificate{x, y, BraidWord(x.strands())};
    return;
  }
  SearchStats stats;
  auto cert = conjugacy_search(x, y, budget, &stats);
  const std::string nodes = std::to_string(stats.nodes[0]) + "+" + std::to_string(stats.nodes[1]) + " nodes";
  if (cert && cert->check()) {
    auto& s = rep.add(what, true, "conjugate, " + nodes);
    s.certificate = std::move(cert);
  } else {
    rep.add(what, false, "no certificate within budget (" + nodes + ")");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1/k filling on the fixed string of gamma_nu
// ---------------------------------------------------------------------------

inline VerificationReport verify_thm42(int l, int m, int k, SearchBudget budget = {}) {
  check_nu(l, m);
  if (k < 1) throw std::invalid_argument("verify_thm42: k must be at least 1");
  VerificationReport rep;
  rep.name = "gamma " + std::to_string(l) + "/" + std::to_string(m) + " with 1/" + std::to_string(k) +
             " on the fixed string";

  const FamilyBraid g = gamma(l, m);
  std::vector<int> rest;
  for (int s = 2; s <= g.word.strands(); ++s) rest.push_back(s);
  SurgeredLink link(g.word, true, {{"fixed", {1}, ExtendedRational(1, k)}, {"ribbons", rest, std::nullopt}});

  const bool ok = detail::apply_step(rep, link, "twist " + std::to_string(-k) + " on fixed",
                                     [&](const SurgeredLink& x) { return x.twist_fixed("fixed", -k); });
  if (ok) {
    const auto r = link.coefficient("fixed");
    rep.add("r(fixed) = inf", r && r->is_infinite(), "r(fixed) = " + detail::show(r));
    if (detail::apply_step(rep, link, "erase fixed",
                           [](const SurgeredLink& x) { return x.erase_component("fixed"); })) {
      const int n = (k + 3) * m + l;
      detail::add_conjugacy_step(rep, "closure is beta " + std::to_string(m) + "/" + std::to_string(n),
                                 link.braid(), beta(m, n).word, budget);
    }
  }
  rep.ledger = link.ledger();
  rep.final_link = link;
  return rep;
}

// ---------------------------------------------------------------------------
// -4 + 1/kappa filling on the black string of zeta
// ---------------------------------------------------------------------------

/// The three conjugators of the chain; exposed so that the replay can be
/// run with perturbed data.
struct Thm53Conjugators {
  BraidWord first = zeta_conjugator();
  BraidWord second = BraidWord(8, {-6, 7});
  BraidWord third = BraidWord(8, {7, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7});
};

/// Expected (r(red), r(black)) after each operation; nullopt once erased.
struct Thm53Expect {
  std::string op;
  std::optional<ExtendedRational> red, black;
};

inline std::vector<Thm53Expect> thm53_expected_ledger(int kappa) {
  using R = ExtendedRational;
  const R inf = R::infinity();
  const R b0 = R(-4) + R(1, kappa), b1 = R(-1) + R(1, kappa), b2 = R(1, kappa);
  return {{"conjugate", inf, b0},       {"twist +3 on red", R(1, 3), b1},
          {"conjugate", R(1, 3), b1},   {"twist +1 on axis", R(4, 3), b2},
          {"conjugate", R(4, 3), b2},   {"twist -kappa on black", R(4, 3), inf},
          {"erase black", R(4, 3), {}}, {"twist -1 on axis", R(1, 3), {}},
          {"twist -3 on red", inf, {}},  {"erase red", {}, {}}};
}

inline SurgeredLink zeta_link(int kappa) {
  const FamilyBraid z = zeta_word();
  std::vector<LinkComponent> cs;
  for (const auto& [name, ss] : z.roles) {
    std::optional<ExtendedRational> r;
    if (name == "red") r = ExtendedRational::infinity();
    if (name == "black") r = ExtendedRational(1 - 4 * kappa, kappa);
    cs.push_back({name, ss, r});
  }
  return SurgeredLink(z.word, true, cs);
}

inline VerificationReport verify_thm53(int kappa, SearchBudget budget = {}, const Thm53Conjugators& cj = {}) {
  if (kappa < 1) throw std::invalid_argument("verify_thm53: kappa must be at least 1");
  VerificationReport rep;
  rep.name = "zeta with " + (ExtendedRational(-4) + ExtendedRational(1, kappa)).to_string() + " on black";

  SurgeredLink link = zeta_link(kappa);
  const auto expected = thm53_expected_ledger(kappa);
  using Op = std::function<SurgeredLink(const SurgeredLink&)>;
  const std::vector<std::pair<std::string, Op>> ops = {
      {"conjugate by " + to_text(cj.first), [&](const SurgeredLink& x) { return x.conjugated(cj.first); }},
      {"twist +3 on red", [](const SurgeredLink& x) { return x.twist_fixed("red", 3); }},
      {"conjugate by " + to_text(cj.second), [&](const SurgeredLink& x) { return x.conjugated(cj.second); }},
      {"twist +1 on axis", [](const SurgeredLink& x) { return x.twist_axis(1); }},
      {"conjugate by " + to_text(cj.third), [&](const SurgeredLink& x) { return x.conjugated(cj.third); }},
      {"twist " + std::to_string(-kappa) + " on black",
       [kappa](const SurgeredLink& x) { return x.twist_fixed("black", -kappa); }},
      {"erase black", [](const SurgeredLink& x) { return x.erase_component("black"); }},
      {"twist -1 on axis", [](const SurgeredLink& x) { return x.twist_axis(-1); }},
      {"twist -3 on red", [](const SurgeredLink& x) { return x.twist_fixed("red", -3); }},
      {"erase red", [](const SurgeredLink& x) { return x.erase_component("red"); }},
  };

  bool ok = true;
  for (std::size_t i = 0; i < ops.size() && ok; ++i) {
    ok = detail::apply_step(rep, link, ops[i].first, ops[i].second);
    if (!ok) break;
    const auto got_r = link.has_component("red") ? link.coefficient("red") : std::nullopt;
    const auto got_b = link.has_component("black") ? link.coefficient("black") : std::nullopt;
    const bool match = got_r == expected[i].red && got_b == expected[i].black;
    rep.add("ledger after " + expected[i].op, match,
            "r(red) = " + detail::show(got_r) + ", r(black) = " + detail::show(got_b) + "; expected " +
                detail::show(expected[i].red) + ", " + detail::show(expected[i].black));
    ok = match;
  }
  if (ok)
    detail::add_conjugacy_step(rep,
                               "closure is gamma " + std::to_string(kappa) + "/" + std::to_string(kappa + 1),
                               link.braid(), gamma(kappa, kappa + 1).word, budget);
  rep.ledger = link.ledger();
  rep.final_link = link;
  return rep;
}

// ---------------------------------------------------------------------------
// gamma_0 to a three-strand braid
// ---------------------------------------------------------------------------

inline VerificationReport verify_magic() {
  VerificationReport rep;
  rep.name = "gamma 0/1 to a three-strand braid";
  const FamilyBraid g = gamma(0, 1);
  const int n = g.word.strands();
  std::vector<int> rest;
  for (int s = 2; s <= n; ++s) rest.push_back(s);
  SurgeredLink link(g.word, true, {{"red", {1}, std::nullopt}, {"ribbons", rest, std::nullopt}});

  const BraidWord c1(n, {-4});
  bool ok = detail::apply_step(rep, link, "conjugate by " + to_text(c1),
                               [&](const SurgeredLink& x) { return x.conjugated(c1); }) &&
            detail::apply_step(rep, link, "twist +3 on red",
                               [](const SurgeredLink& x) { return x.twist_fixed("red", 3); });
  if (ok) {
    rep.add("three strands after the twist", link.braid().strands() == 3,
            "B" + std::to_string(link.braid().strands()));
    const BraidWord c2(link.braid().strands(), {2}), c3(link.braid().strands(), {1, 2});
    ok = detail::apply_step(rep, link, "conjugate by " + to_text(c2),
                            [&](const SurgeredLink& x) { return x.conjugated(c2); }) &&
         detail::apply_step(rep, link, "twist +1 on axis", [](const SurgeredLink& x) { return x.twist_axis(1); }) &&
         detail::apply_step(rep, link, "conjugate by " + to_text(c3),
                            [&](const SurgeredLink& x) { return x.conjugated(c3); });
  }
  if (ok)
    rep.add("link has three components with the axis", link.components().size() + 1 == 3,
            std::to_string(link.components().size()) + " components plus axis");
  rep.ledger = link.ledger();
  rep.final_link = link;
  return rep;
}

// ---------------------------------------------------------------------------
// Filling sequences
// ---------------------------------------------------------------------------

/// a^2 + b^2 strictly increasing and no repeats.
inline bool hdst_check(const std::vector<ExtendedRational>& coeffs) {
  if (coeffs.empty()) return false;
  long double last = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_infinite()) return false;
    const long double b = static_cast<long double>(coeffs[i].numerator());
    const long double a = static_cast<long double>(coeffs[i].denominator());
    const long double norm = a * a + b * b;
    if (norm <= last) return false;
    last = norm;
    for (std::size_t j = 0; j < i; ++j)
      if (coeffs[j] == coeffs[i]) return false;
  }
  return true;
}

}  // namespace nbt
