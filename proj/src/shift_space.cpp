#include "ultrashift/shift_space.hpp"

#include <algorithm>
#include <string>

namespace ultrashift {

namespace {

void require_letters_exist(const Ultragraph& g, const Word& x) {
  auto check = [&](std::span<const Index> letters) {
    for (Index e : letters) {
      if (!g.has_edge(e)) throw LookupError("unknown edge e" + std::to_string(e));
    }
  };
  check(x.preperiod());
  check(x.period());
}

// Scan window that decides subblock membership for an eventually periodic
// word: preperiod + two periods + the longest forbidden block.
std::vector<Index> scan_window(const ForbiddenSet& f, const Word& x) {
  return x.prefix(x.preperiod().size() + 2 * x.period().size() + f.max_block_length());
}

bool has_forbidden_subblock(const ForbiddenSet& f, std::span<const Index> letters) {
  for (const std::vector<Index>& w : f.words()) {
    if (w.size() > letters.size()) continue;
    for (std::size_t i = 0; i + w.size() <= letters.size(); ++i) {
      if (std::equal(w.begin(), w.end(), letters.begin() + static_cast<std::ptrdiff_t>(i))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool cylinder_contains(const Cylinder& c, const Word& y) {
  if (c.stem.is_infinite()) throw UsageError("cylinder stems are finite");
  std::span<const Index> stem = c.stem.letters();
  if (!y.starts_with(stem)) return false;
  // The condition on y_{k+1} is vacuous when y is the stem itself.
  if (!y.is_infinite() && y.length() == stem.size()) return true;
  Index next = y.letter(stem.size());
  return std::find(c.excluded.begin(), c.excluded.end(), next) == c.excluded.end();
}

ForbiddenSet::ForbiddenSet(std::vector<std::vector<Index>> words) : words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.empty()) throw UsageError("forbidden words must be nonempty");
    max_len_ = std::max(max_len_, w.size());
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool in_xf(const ForbiddenSet& f, const Universe& alphabet, const Word& x) {
  auto check_letters = [&](std::span<const Index> letters) {
    for (Index a : letters) {
      if (!alphabet.admits(a)) {
        throw UsageError("letter e" + std::to_string(a) + " outside the alphabet");
      }
    }
  };
  check_letters(x.preperiod());
  check_letters(x.period());

  if (x.is_infinite()) {
    std::vector<Index> window = scan_window(f, x);
    return !has_forbidden_subblock(f, window);
  }
  // Finite alphabets: the full shift consists of infinite sequences only.
  if (alphabet.is_finite()) return false;
  if (x.is_empty()) return true;
  return !has_forbidden_subblock(f, x.letters());
}

bool is_path(const Ultragraph& g, std::span<const Index> letters) {
  for (Index e : letters) {
    if (!g.has_edge(e)) throw LookupError("unknown edge e" + std::to_string(e));
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (!g.range(letters[i]).contains(g.source(letters[i + 1]))) return false;
  }
  return true;
}

bool is_path(const Ultragraph& g, const Word& x) {
  require_letters_exist(g, x);
  if (!x.is_infinite()) return is_path(g, x.letters());
  // Preperiod, junction, period and wrap are covered by one unrolled window.
  std::vector<Index> window = x.prefix(x.preperiod().size() + x.period().size() + 1);
  return is_path(g, std::span<const Index>(window));
}

MembershipResult edge_shift_membership(const Ultragraph& g, const Word& x) {
  if (!g.hypotheses().ranges_contain_non_sink) {
    throw PreconditionError(
        "membership characterization inapplicable: some range contains only sinks");
  }
  require_letters_exist(g, x);
  if (!g.has_infinitely_many_edges()) {
    if (!x.is_infinite()) return {false, "the edge set is finite, so only infinite paths belong"};
    if (!is_path(g, x)) return {false, "not a path"};
    return {true, ""};
  }
  if (x.is_empty()) return {true, ""};
  if (!is_path(g, x)) {
    std::size_t n = x.is_infinite() ? x.preperiod().size() + x.period().size() + 1 : x.length();
    std::vector<Index> w = x.prefix(n);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!g.range(w[i]).contains(g.source(w[i + 1]))) {
        return {false, "not a path: s(e" + std::to_string(w[i + 1]) + ") not in r(e" +
                           std::to_string(w[i]) + ")"};
      }
    }
    return {false, "not a path"};
  }
  if (x.is_infinite()) return {true, ""};
  Index last = x.letters().back();
  if (g.source_preimage(g.range(last)).is_infinite()) return {true, ""};
  return {false, "finite path with only finitely many continuations: s^-1(r(e" +
                     std::to_string(last) + ")) is finite"};
}

bool in_edge_shift(const Ultragraph& g, const Word& x) {
  return edge_shift_membership(g, x).member;
}

std::optional<ForbiddenSet> edge_shift_forbidden_set(const Ultragraph& g) {
  IndexSet all_edges = g.edge_set();
  if (g.tail()) {
    if (g.tail()->is_upper_tail()) {
      // r(e_i) eventually excludes any fixed source, so the complements
      // {f : s(f) < i + c} are nonempty for infinitely many tail edges.
      return std::nullopt;
    }
    const IndexSet& tail_range = std::get<TailRule::ConstantRange>(g.tail()->range).set;
    if (!set_difference(all_edges, g.source_preimage(tail_range)).is_empty()) {
      return std::nullopt;
    }
  }
  std::vector<std::vector<Index>> words;
  for (const ExceptionalEdge& e : g.exceptional_edges()) {
    IndexSet bad = set_difference(all_edges, g.source_preimage(e.range));
    if (bad.is_infinite()) return std::nullopt;
    for (Index f : bad.members()) words.push_back({e.edge, f});
  }
  return ForbiddenSet(std::move(words));
}

Ultragraph ultragraph_from_one_step(const ForbiddenSet& f) {
  Universe vertices = Universe::infinite(1);
  std::vector<std::pair<Index, std::vector<Index>>> blocked;  // letter -> forbidden successors
  for (const std::vector<Index>& w : f.words()) {
    if (w.size() != 2) {
      throw UsageError("one-step conversion needs forbidden words of length exactly 2");
    }
    for (Index a : w) {
      if (!vertices.admits(a)) {
        throw UsageError("letter e" + std::to_string(a) + " outside the infinite alphabet");
      }
    }
    auto it = std::find_if(blocked.begin(), blocked.end(),
                           [&](const auto& p) { return p.first == w[0]; });
    if (it == blocked.end()) {
      blocked.push_back({w[0], {w[1]}});
    } else {
      it->second.push_back(w[1]);
    }
  }
  Index start = 1;
  for (const auto& [letter, succ] : blocked) start = std::max(start, letter + 1);
  std::vector<ExceptionalEdge> exceptional;
  for (Index a = 1; a < start; ++a) {
    auto it = std::find_if(blocked.begin(), blocked.end(),
                           [&](const auto& p) { return p.first == a; });
    IndexSet range = it == blocked.end() ? IndexSet::all(vertices)
                                         : IndexSet::excluding(vertices, it->second);
    exceptional.push_back({a, a, range});
  }
  TailRule tail{start, TailRule::Identity{}, TailRule::ConstantRange{IndexSet::all(vertices)}};
  return Ultragraph(vertices, std::move(exceptional), tail);
}

std::vector<Word> enumerate_paths(const Ultragraph& g, std::size_t len, Index max_edge_index) {
  if (len == 0) throw UsageError("path length must be at least 1");
  std::vector<Index> pool = g.edges_up_to(max_edge_index);
  std::vector<Word> out;
  std::vector<Index> stack;
  auto dfs = [&](auto&& self) -> void {
    if (stack.size() == len) {
      out.push_back(Word::finite(stack));
      return;
    }
    for (Index f : pool) {
      if (!stack.empty() && !g.range(stack.back()).contains(g.source(f))) continue;
      stack.push_back(f);
      self(self);
      stack.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<Index> member_extensions(const Ultragraph& g, const Word& alpha, std::size_t want) {
  if (alpha.is_infinite()) throw UsageError("extensions are for finite members");
  std::vector<Index> found;
  IndexSet candidates =
      alpha.is_empty() ? g.edge_set() : g.source_preimage(g.range(alpha.letters().back()));
  for (Index a : candidates.first(want + 8)) {
    std::vector<Index> extended = alpha.prefix(alpha.length());
    extended.push_back(a);
    if (in_edge_shift(g, Word::finite(std::move(extended)))) found.push_back(a);
    if (found.size() == want) break;
  }
  return found;
}

}  // namespace ultrashift
