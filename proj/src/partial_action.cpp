#include "ultrashift/partial_action.hpp"

#include <algorithm>

namespace ultrashift {

namespace {

void require_standing_hypotheses(const Ultragraph& g) {
  const HypothesisReport& h = g.hypotheses();
  if (!h.infinite_edges || !h.range_preimage_complements_finite) {
    throw PreconditionError(
        "partial action needs infinitely many edges and finite complements s^-1(r(e))^c");
  }
}

void require_in_shift(const Ultragraph& g, const Word& x) {
  if (!in_edge_shift(g, x)) {
    throw UsageError("word " + x.to_string() + " is not in the edge shift");
  }
}

// Range of a path (range of its last edge).
IndexSet path_range(const Ultragraph& g, const std::vector<Index>& path) {
  return g.range(path.back());
}

}  // namespace

GroupWord GroupWord::reduce(std::vector<GroupLetter> letters) {
  GroupWord w;
  for (const GroupLetter& l : letters) {
    if (!w.letters_.empty() && w.letters_.back().edge == l.edge &&
        w.letters_.back().inverse != l.inverse) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  std::vector<GroupLetter> rev(letters_.rbegin(), letters_.rend());
  for (GroupLetter& l : rev) l.inverse = !l.inverse;
  GroupWord w;
  w.letters_ = std::move(rev);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  std::vector<GroupLetter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(std::move(all));
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += '.';
    if (letters_[i].inverse) out += '~';
    out += "e" + std::to_string(letters_[i].edge);
  }
  return out;
}

DomainForm classify(const Ultragraph& g, const GroupWord& w) {
  for (const GroupLetter& l : w.letters()) {
    if (!g.has_edge(l.edge)) throw LookupError("unknown edge e" + std::to_string(l.edge));
  }
  if (w.is_neutral()) return {DomainForm::Kind::Neutral, {}, {}};

  // Reduced elements of W.W^{-1} read as a positive block then a negative
  // block; the negative block lists b's letters from the end.
  std::size_t split = 0;
  while (split < w.letters().size() && !w.letters()[split].inverse) ++split;
  for (std::size_t i = split; i < w.letters().size(); ++i) {
    if (!w.letters()[i].inverse) return {DomainForm::Kind::OutsideV, {}, {}};
  }
  std::vector<Index> a, b;
  for (std::size_t i = 0; i < split; ++i) a.push_back(w.letters()[i].edge);
  for (std::size_t i = w.letters().size(); i > split; --i) b.push_back(w.letters()[i - 1].edge);

  if (!a.empty() && !is_path(g, std::span<const Index>(a))) return {DomainForm::Kind::OutsideV, {}, {}};
  if (!b.empty() && !is_path(g, std::span<const Index>(b))) return {DomainForm::Kind::OutsideV, {}, {}};

  if (b.empty()) return {DomainForm::Kind::PositivePath, std::move(a), {}};
  if (a.empty()) return {DomainForm::Kind::InversePath, std::move(b), {}};
  if (set_intersection(path_range(g, a), path_range(g, b)).is_empty()) {
    return {DomainForm::Kind::OutsideV, {}, {}};
  }
  return {DomainForm::Kind::Transition, std::move(a), std::move(b)};
}

bool in_x(const Ultragraph& g, const GroupWord& gw, const Word& x) {
  require_standing_hypotheses(g);
  require_in_shift(g, x);
  DomainForm form = classify(g, gw);
  switch (form.kind) {
    case DomainForm::Kind::Neutral:
      return true;
    case DomainForm::Kind::PositivePath:
      // X_a = {x : x_1...x_|a| = a}.
      return x.starts_with(form.a);
    case DomainForm::Kind::InversePath:
      // X_{a^-1} = {x : s(x) in r(a)} + {empty}.
      if (x.is_empty()) return true;
      return path_range(g, form.a).contains(g.source(x.letter(0)));
    case DomainForm::Kind::Transition: {
      // X_{ab^-1} = {ay : s(y) in r(a) /\ r(b)} + {a}.
      if (x.is_empty()) return false;
      if (!x.is_infinite() && x.length() == form.a.size()) return x.starts_with(form.a);
      if (!x.starts_with(form.a)) return false;
      Index first_after = x.letter(form.a.size());
      return set_intersection(path_range(g, form.a), path_range(g, form.b))
          .contains(g.source(first_after));
    }
    case DomainForm::Kind::OutsideV:
      return false;
  }
  return false;
}

bool in_domain(const Ultragraph& g, const GroupWord& gw, const Word& x) {
  return in_x(g, gw.inverse(), x);
}

Word theta(const Ultragraph& g, const GroupWord& gw, const Word& x) {
  require_standing_hypotheses(g);
  DomainForm form = classify(g, gw);
  if (!in_domain(g, gw, x)) {
    static const char* names[] = {"neutral", "positive-path", "inverse-path", "transition",
                                  "outside-V"};
    throw PreconditionError("theta_" + gw.to_string() + " undefined at " + x.to_string() + " (" +
                            names[static_cast<int>(form.kind)] + " domain)");
  }
  switch (form.kind) {
    case DomainForm::Kind::Neutral:
      return x;
    case DomainForm::Kind::PositivePath:
      // theta_a: empty -> a, x -> ax.
      return x.prepended(form.a);
    case DomainForm::Kind::InversePath:
      // theta_{a^-1}: a -> empty, else drop the first |a| letters.
      return x.dropped(form.a.size());
    case DomainForm::Kind::Transition:
      // g = a b^{-1} maps X_{b a^{-1}} to X_{a b^{-1}}: b -> a, by -> ay.
      return x.dropped(form.b.size()).prepended(form.a);
    case DomainForm::Kind::OutsideV:
      break;
  }
  throw PreconditionError("theta undefined outside V");
}

bool in_xa(const Ultragraph& g, const IndexSet& vertices, const Word& x) {
  require_in_shift(g, x);
  if (!g.hypotheses().source_fibers_finite_or_cofinite) {
    throw PreconditionError("X_A needs every source fiber finite or cofinite");
  }
  IndexSet preimage = g.source_preimage(vertices);
  bool preimage_finite = !preimage.is_infinite();
  bool complement_finite = !set_difference(g.edge_set(), preimage).is_infinite();
  if (!preimage_finite && !complement_finite) {
    throw PreconditionError("X_A undefined: s^-1(A) and its complement are both infinite");
  }
  if (x.is_empty()) return complement_finite;
  return vertices.contains(g.source(x.letter(0)));
}

}  // namespace ultrashift
