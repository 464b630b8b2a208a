#pragma once

// Bounded conjugacy search. Both braids are slid into sliding circuits; the
// search then walks outward from each side through conjugation by atoms and
// simple factors, re-sliding after every step, until the two sides meet.
// A miss is inconclusive.

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbt/braid.hpp"
#include "nbt/garside.hpp"

namespace nbt {

struct ConjugacyCertificate {
  BraidWord source;
  BraidWord target;
  BraidWord conjugator;  // conjugate(source, conjugator) == target

  bool check() const { return words_equal(conjugate(source, conjugator), target); }
};

/// a^{-1} x a for a simple a.
inline NormalForm conjugate_by_simple(const NormalForm& x, const CanonicalFactor& a) {
  // a^{-1} = Delta^{-1} (Delta a^{-1}), and Delta^{-1} b Delta^p = Delta^{p-1} tau^p(b)
  const int n = x.strands();
  std::vector<CanonicalFactor> fs;
  fs.reserve(x.factors().size() + 2);
  fs.push_back(a.left_complement().tau(x.infimum() & 1));
  fs.insert(fs.end(), x.factors().begin(), x.factors().end());
  fs.push_back(a);
  return NormalForm::from_factors(n, x.infimum() - 1, fs);
}

/// Conjugation by Delta.
inline NormalForm tau_of(const NormalForm& x) {
  std::vector<CanonicalFactor> fs;
  for (const auto& f : x.factors()) fs.push_back(f.tau());
  return NormalForm(x.strands(), x.infimum(), std::move(fs));
}

/// Preferred prefix iota(x) meet d(phi(x)); sliding conjugates by it.
inline CanonicalFactor preferred_prefix(const NormalForm& x) {
  if (x.canonical_length() == 0) return CanonicalFactor::identity(x.strands());
  return meet(x.initial_factor(), x.final_factor().right_complement());
}

struct Conjugate {
  NormalForm form;
  BraidWord conjugator;  // from the starting braid
};

/// Iterated cyclic sliding until the orbit closes; returns the smallest
/// element of the circuit reached and the conjugator to it.
inline Conjugate slide_to_circuit(const NormalForm& x, const BraidWord& c, int max_steps = 1 << 14) {
  std::map<NormalForm, int> seen;
  std::vector<Conjugate> path{{x, c}};
  for (int step = 0; step < max_steps; ++step) {
    const Conjugate& cur = path.back();
    auto [it, fresh] = seen.emplace(cur.form, step);
    if (!fresh) {
      std::size_t best = static_cast<std::size_t>(it->second);
      for (std::size_t j = best; j < path.size() - 1; ++j)
        if (path[j].form < path[best].form) best = j;
      return path[best];
    }
    const CanonicalFactor p = preferred_prefix(cur.form);
    Conjugate next{conjugate_by_simple(cur.form, p), cur.conjugator * p.word()};
    path.push_back(std::move(next));
  }
  throw std::runtime_error("slide_to_circuit: no circuit within the step limit");
}

struct SearchBudget {
  std::size_t max_nodes = 20000;  // circuit representatives per side
};

struct SearchStats {
  std::size_t nodes[2] = {0, 0};
};

/// Finds c with c^{-1} x c = y, or nothing within the budget.
inline std::optional<ConjugacyCertificate> conjugacy_search(const BraidWord& x, const BraidWord& y,
                                                            SearchBudget budget = {},
                                                            SearchStats* stats = nullptr) {
  if (x.strands() != y.strands()) throw BraidError("conjugacy_search: strand-count mismatch");
  const int n = x.strands();
  if (words_equal(x, y)) return ConjugacyCertificate{x, y, BraidWord(n)};
  if (x.exponent_sum() != y.exponent_sum()) return std::nullopt;
  {
    auto cx = permutation_of(x).cycles(), cy = permutation_of(y).cycles();
    std::vector<std::size_t> sx, sy;
    for (auto& c : cx) sx.push_back(c.size());
    for (auto& c : cy) sy.push_back(c.size());
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }

  using Side = std::map<NormalForm, BraidWord>;
  Side side[2];
  std::deque<NormalForm> queue[2];
  const BraidWord start[2] = {x, y};
  for (int s = 0; s < 2; ++s) {
    Conjugate c = slide_to_circuit(left_normal_form(start[s]), BraidWord(n));
    side[s].emplace(c.form, c.conjugator);
    queue[s].push_back(c.form);
  }

  auto certify = [&](const NormalForm& z) -> std::optional<ConjugacyCertificate> {
    if (stats) stats->nodes[0] = side[0].size(), stats->nodes[1] = side[1].size();
    ConjugacyCertificate cert{x, y, side[0].at(z) * side[1].at(z).inverse()};
    if (cert.check()) return cert;
    return std::nullopt;
  };
  if (side[1].count(queue[0].front())) return certify(queue[0].front());

  std::vector<CanonicalFactor> atoms;
  for (int i = 1; i < n; ++i) atoms.push_back(CanonicalFactor::atom(n, i));

  while (!queue[0].empty() || !queue[1].empty()) {
    for (int s = 0; s < 2; ++s) {
      if (queue[s].empty()) continue;
      if (side[s].size() >= budget.max_nodes) {
        queue[s].clear();
        continue;
      }
      const NormalForm z = queue[s].front();
      queue[s].pop_front();
      const BraidWord cz = side[s].at(z);

      std::vector<std::pair<NormalForm, BraidWord>> steps;
      for (const auto& a : atoms) {
        steps.emplace_back(conjugate_by_simple(z, a), a.word());
        steps.emplace_back(conjugate_by_simple(z, a.left_complement()), a.left_complement().word());
      }
      for (const auto& f : z.factors()) steps.emplace_back(conjugate_by_simple(z, f), f.word());
      if (z.canonical_length() > 0) {
        const CanonicalFactor first = z.initial_factor();
        steps.emplace_back(conjugate_by_simple(z, first), first.word());
        const CanonicalFactor last = z.final_factor().right_complement();
        steps.emplace_back(conjugate_by_simple(z, last), last.word());
      }
      if (n >= 2) steps.emplace_back(tau_of(z), delta_braid(n));

      for (auto& [w, a] : steps) {
        Conjugate c = slide_to_circuit(w, cz * a);
        if (side[s].count(c.form)) continue;
        side[s].emplace(c.form, c.conjugator);
        if (side[1 - s].count(c.form)) return certify(c.form);
        queue[s].push_back(c.form);
      }
    }
  }
  if (stats) stats->nodes[0] = side[0].size(), stats->nodes[1] = side[1].size();
  return std::nullopt;
}

}  // namespace nbt
