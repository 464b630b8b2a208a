#pragma once

// Free group words and the Artin action of B_n on F_n = <x_1, ..., x_n>.
// Used to locate the loop a fixed string makes around the other strands.

#include <cstdlib>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "nbt/braid.hpp"
#include "nbt/garside.hpp"

namespace nbt {

/// Letters +j / -j stand for x_j / x_j^{-1}.
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

/// sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
/// sigma_i^{-1}: x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
inline FreeWord artin_letter(int letter, const FreeWord& w) {
  const int i = std::abs(letter);
  FreeWord out;
  out.reserve(w.size() + 8);
  for (int l : w) {
    const int g = std::abs(l);
    FreeWord img;
    if (g == i)
      img = letter > 0 ? FreeWord{i, i + 1, -i} : FreeWord{i + 1};
    else if (g == i + 1)
      img = letter > 0 ? FreeWord{i} : FreeWord{-(i + 1), i, i + 1};
    else
      img = {g};
    if (l < 0) img = free_inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(out);
}

/// Applies the letters of u in order.
inline FreeWord artin_action(const BraidWord& u, FreeWord w) {
  for (int l : u.letters()) w = artin_letter(l, w);
  return w;
}

/// u = before * L * after, where the strand at position n is a fixed string,
/// L = sigma_{n-1} ... sigma_{n-m} sigma_{n-m} ... sigma_{n-1} is its positive
/// lasso around the m strands to its left, and before/after do not touch
/// position n.
struct LassoSplit {
  int width = 0;
  BraidWord before;
  BraidWord after;
};

inline BraidWord right_lasso(int n, int m) {
  std::vector<int> w;
  for (int i = n - 1; i >= n - m; --i) w.push_back(i);
  for (int i = n - m; i <= n - 1; ++i) w.push_back(i);
  return BraidWord(n, std::move(w));
}

/// Finds the split for a fixed string at the right end, or nothing if the
/// string does not make a single positive lasso around a ribbon. max_steps
/// caps the number of free words visited.
///
/// The loop u * ubar^{-1} (ubar = u with the string erased) acts on x_n as
/// conjugation by a word w; w is shortened greedily by the Artin action of
/// runs in sigma_1..sigma_{n-2} until it reads x_j ... x_{j+m-1}, then
/// shifted to end at x_{n-1}. Then after = V^{-1} ubar.
inline std::optional<LassoSplit> split_lasso_right(const BraidWord& u, int max_steps = 4096) {
  const int n = u.strands();
  if (n < 2 || permutation_of(u)(n) != n) return std::nullopt;
  const BraidWord rest = erase_strand(u, n).embedded(n, 0);
  const BraidWord loop = u * rest.inverse();

  const FreeWord image = artin_action(loop, {n});
  if (image.size() % 2 == 0) return std::nullopt;
  const std::size_t half = image.size() / 2;
  if (image[half] != n) return std::nullopt;
  FreeWord w(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(half));
  if (free_inverse(w) != FreeWord(image.begin() + static_cast<std::ptrdiff_t>(half) + 1, image.end()))
    return std::nullopt;
  while (!w.empty() && std::abs(w.back()) == n) w.pop_back();
  if (w.empty()) return std::nullopt;
  for (int l : w)
    if (std::abs(l) == n) return std::nullopt;

  // moves: monotone runs s_i s_{i+1} .. s_j and s_j .. s_i of either sign;
  // a run carries one generator across several neighbours at once
  std::vector<std::vector<int>> moves;
  for (int len = 1; len <= n - 2; ++len)
    for (int i = 1; i + len - 1 <= n - 2; ++i)
      for (int s : {1, -1}) {
        std::vector<int> up, down;
        for (int k = 0; k < len; ++k) {
          up.push_back(s * (i + k));
          down.push_back(s * (i + len - 1 - k));
        }
        moves.push_back(up);
        if (len > 1) moves.push_back(down);
      }

  // best-first over words: shortest first, so plateaus are crossed when the
  // plain greedy descent would stop
  auto is_block = [](const FreeWord& x) {
    if (x.empty() || x[0] < 1) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] != x[0] + static_cast<int>(k)) return false;
    return true;
  };
  struct Node {
    FreeWord word;
    std::vector<int> path;
  };
  auto worse = [](const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
    return a > b;
  };
  std::vector<Node> nodes{{w, {}}};
  std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                      decltype(worse)>
      open(worse);
  std::set<FreeWord> seen{w};
  open.emplace(w.size(), 0);
  std::optional<std::size_t> goal;
  while (!open.empty() && static_cast<int>(nodes.size()) <= max_steps) {
    const std::size_t id = open.top().second;
    open.pop();
    if (is_block(nodes[id].word)) {
      goal = id;
      break;
    }
    for (const auto& mv : moves) {
      FreeWord w2 = nodes[id].word;
      for (int l : mv) w2 = artin_letter(l, w2);
      if (w2.size() > nodes[id].word.size() || !seen.insert(w2).second) continue;
      std::vector<int> path = nodes[id].path;
      path.insert(path.end(), mv.begin(), mv.end());
      open.emplace(w2.size(), nodes.size());
      nodes.push_back({std::move(w2), std::move(path)});
    }
  }
  if (!goal) return std::nullopt;
  w = nodes[*goal].word;
  std::vector<int> v = nodes[*goal].path;

  const int m = static_cast<int>(w.size());
  for (int k = 0; k < m; ++k)
    if (w[k] != w[0] + k) return std::nullopt;
  // shift the block x_j..x_{j+m-1} right until it ends at x_{n-1}
  for (int j = w[0]; j + m - 1 < n - 1; ++j)
    for (int i = j + m - 1; i >= j; --i) v.push_back(-i);

  LassoSplit split;
  split.width = m;
  split.before = BraidWord(n, std::move(v));
  const BraidWord lasso = right_lasso(n, m);
  split.after = split.before.inverse() * rest;
  if (!words_equal(split.before * lasso * split.before.inverse(), loop)) return std::nullopt;
  return split;
}

}  // namespace nbt
