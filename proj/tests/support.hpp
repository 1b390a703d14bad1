#pragma once

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ultrashift/matrix.hpp"
#include "ultrashift/partial_action.hpp"
#include "ultrashift/shift_space.hpp"
#include "ultrashift/ultragraph.hpp"

namespace testsupport {

using namespace ultrashift;

// s(e_i) = v_i, r(e_1) = {v_3,v_4,...}, r(e_j) = G0 otherwise.
inline Ultragraph example3() {
  Universe u = Universe::infinite(1);
  return Ultragraph(u, {{1, 1, IndexSet::excluding(u, {1, 2})}},
                    TailRule{2, TailRule::Identity{}, TailRule::ConstantRange{IndexSet::all(u)}});
}

// s(e_i) = v_i, r(e_i) = {v_j : j >= i}.
inline Ultragraph example42() {
  Universe u = Universe::infinite(1);
  return Ultragraph(u, {}, TailRule{1, TailRule::Identity{}, TailRule::UpperTail{0}});
}

// s(e_0) = s(e_1) = v_1, s(e_i) = v_i for i >= 2; r(e_0) = G0\{v2},
// r(e_1) = r(e_2) = G0\{v1,v2}, r(e_j) = G0 for j > 2.
inline Ultragraph example53() {
  Universe u = Universe::infinite(1);
  return Ultragraph(u,
                    {{0, 1, IndexSet::excluding(u, {2})},
                     {1, 1, IndexSet::excluding(u, {1, 2})},
                     {2, 2, IndexSet::excluding(u, {1, 2})}},
                    TailRule{3, TailRule::Identity{}, TailRule::ConstantRange{IndexSet::all(u)}});
}

// Countably many loops at a single vertex.
inline Ultragraph bouquet() {
  Universe u = Universe::finite(1);
  return Ultragraph(
      u, {},
      TailRule{1, TailRule::ConstantVertex{0}, TailRule::ConstantRange{IndexSet::of(u, {0})}});
}

// Membership model over {0..63} plus one flag for everything >= 64.
struct BitsetModel {
  std::uint64_t low = 0;
  bool rest = false;

  static BitsetModel from(const IndexSet& s) {
    BitsetModel m;
    for (int i = 0; i < 64; ++i) {
      if (s.contains(static_cast<Index>(i))) m.low |= (1ull << i);
    }
    m.rest = s.is_infinite();
    return m;
  }
  friend BitsetModel operator|(BitsetModel a, BitsetModel b) {
    return {a.low | b.low, a.rest || b.rest};
  }
  friend BitsetModel operator&(BitsetModel a, BitsetModel b) {
    return {a.low & b.low, a.rest && b.rest};
  }
  BitsetModel operator~() const { return {~low, !rest}; }
  bool operator==(const BitsetModel&) const = default;
};

inline IndexSet random_set(std::mt19937_64& rng, const Universe& u) {
  std::uniform_int_distribution<int> size_dist(0, 6);
  std::uniform_int_distribution<Index> idx(u.min_index(), 63);
  std::vector<Index> support;
  for (int i = 0, n = size_dist(rng); i < n; ++i) support.push_back(idx(rng));
  if (!u.is_finite() && rng() % 2 == 0) return IndexSet::excluding(u, std::move(support));
  return IndexSet::of(u, std::move(support));
}

// Rank over Q by fraction-free elimination; oracle for the SNF rank.
inline std::size_t bareiss_rank(const IntMatrix& input) {
  IntMatrix a = input;
  std::size_t rank = 0;
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(row, col) - a.at(i, col) * a.at(row, j)) / prev;
      }
      a.at(i, col) = 0;
    }
    prev = a.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

// Determinantal-divisor oracle: d_k = gcd of all k x k minors, invariant
// factor_k = d_k / d_{k-1}. Only for small matrices.
inline std::vector<BigInt> minor_gcd_invariant_factors(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  auto combinations = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0 || k > n) return out;
    for (;;) {
      out.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  auto minor_det = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
    }
    return determinant(sub);
  };
  std::vector<BigInt> factors;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    BigInt g = 0;
    for (const auto& rs : combinations(r, k)) {
      for (const auto& cs : combinations(c, k)) {
        g = boost::multiprecision::gcd(g, minor_det(rs, cs));
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    if (g == 0) break;  // all k-minors vanish; rank < k
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// Members of X plus group elements assembled from short paths; drives the
// partial-action law suites.
struct LawSampler {
  const Ultragraph& g;
  std::vector<std::vector<Index>> paths;
  std::vector<Word> words;
  std::mt19937_64 rng;

  explicit LawSampler(const Ultragraph& graph, std::uint64_t seed) : g(graph), rng(seed) {
    for (std::size_t len = 1; len <= 4; ++len) {
      for (const Word& w : enumerate_paths(g, len, 12)) {
        paths.push_back(w.prefix(len));
      }
    }
    words.push_back(Word::empty());
    for (const auto& p : paths) {
      Word w = Word::finite(p);
      if (in_edge_shift(g, w)) words.push_back(w);
    }
    for (const auto& p : paths) {
      if (!g.range(p.back()).contains(g.source(p.front()))) continue;
      Word w = Word::eventually_periodic({}, p);
      if (is_path(g, w)) words.push_back(w);
      for (const auto& q : paths) {
        if (!g.range(q.back()).contains(g.source(p.front()))) continue;
        Word v = Word::eventually_periodic(q, p);
        if (is_path(g, v)) words.push_back(v);
        break;
      }
    }
  }

  const Word& word() { return words[rng() % words.size()]; }

  GroupWord positive(const std::vector<Index>& path) {
    std::vector<GroupLetter> ls;
    for (Index e : path) ls.push_back({e, false});
    return GroupWord::reduce(std::move(ls));
  }

  GroupWord group_word() {
    switch (rng() % 5) {
      case 0:
        return GroupWord();
      case 1:
        return positive(paths[rng() % paths.size()]);
      case 2:
        return positive(paths[rng() % paths.size()]).inverse();
      case 3: {
        GroupWord a = positive(paths[rng() % paths.size()]);
        GroupWord b = positive(paths[rng() % paths.size()]);
        return a * b.inverse();
      }
      default: {
        // Raw letters, reduced; mostly lands outside V.
        std::vector<GroupLetter> ls;
        for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) {
          ls.push_back({paths[rng() % paths.size()][0], rng() % 2 == 0});
        }
        return GroupWord::reduce(std::move(ls));
      }
    }
  }
};

// In-class infinite graphs: identity or constant-vertex tails with a
// singleton constant range, plus singleton exceptional edges.
inline Ultragraph random_infinite_graph(std::mt19937_64& rng) {
  if (rng() % 3 == 0) {
    Universe u = Universe::finite(1);
    std::vector<ExceptionalEdge> extra;
    Index start = rng() % 3;
    for (Index e = 0; e < start; ++e) extra.push_back({e, 0, IndexSet::of(u, {0})});
    return Ultragraph(u, std::move(extra),
                      TailRule{start, TailRule::ConstantVertex{0},
                               TailRule::ConstantRange{IndexSet::of(u, {0})}});
  }
  if (rng() % 2 == 0) {
    Index n = 2 + rng() % 4;
    Universe u = Universe::finite(n);
    Index hub = rng() % n, target = rng() % n;
    std::vector<ExceptionalEdge> extra;
    Index start = rng() % 3;
    for (Index e = 0; e < start; ++e) {
      extra.push_back({e, rng() % n, IndexSet::of(u, {rng() % n})});
    }
    return Ultragraph(u, std::move(extra),
                      TailRule{start, TailRule::ConstantVertex{hub},
                               TailRule::ConstantRange{IndexSet::of(u, {target})}});
  }
  Universe u = Universe::infinite(1);
  Index target = 1 + rng() % 5;
  Index start = 1 + rng() % 3;
  std::vector<ExceptionalEdge> extra;
  for (Index e = 1; e < start; ++e) extra.push_back({e, e, IndexSet::of(u, {1 + rng() % 5})});
  return Ultragraph(u, std::move(extra),
                    TailRule{start, TailRule::Identity{},
                             TailRule::ConstantRange{IndexSet::of(u, {target})}});
}

}  // namespace testsupport
