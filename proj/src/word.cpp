#include "ultrashift/word.hpp"

#include <algorithm>

namespace ultrashift {

namespace {

// Shortest u with period = u^k.
std::vector<Index> primitive_root(std::vector<Index> period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = period[i] == period[i - d];
    if (ok) return std::vector<Index>(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return period;
}

}  // namespace

Word Word::finite(std::vector<Index> letters) {
  if (letters.empty()) return Word();
  Word w;
  w.form_ = Form::Finite;
  w.pre_ = std::move(letters);
  return w;
}

Word Word::eventually_periodic(std::vector<Index> preperiod, std::vector<Index> period) {
  if (period.empty()) throw UsageError("eventually periodic word needs a nonempty period");
  period = primitive_root(std::move(period));
  // Absorb preperiod letters that already agree with the cycle:
  // a (p1..pk)^inf with a = pk equals (pk p1 .. p_{k-1})^inf.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  Word w;
  w.form_ = Form::EventuallyPeriodic;
  w.pre_ = std::move(preperiod);
  w.period_ = std::move(period);
  return w;
}

std::size_t Word::length() const {
  if (form_ == Form::EventuallyPeriodic) throw UsageError("infinite word has no finite length");
  return pre_.size();
}

Index Word::letter(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  if (form_ == Form::EventuallyPeriodic) return period_[(i - pre_.size()) % period_.size()];
  throw UsageError("letter index past the end of the word");
}

std::vector<Index> Word::prefix(std::size_t n) const {
  if (form_ != Form::EventuallyPeriodic) n = std::min(n, pre_.size());
  std::vector<Index> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
  return out;
}

Word Word::shifted() const {
  switch (form_) {
    case Form::Empty:
      return Word();
    case Form::Finite:
      if (pre_.size() == 1) return Word();
      return finite(std::vector<Index>(pre_.begin() + 1, pre_.end()));
    case Form::EventuallyPeriodic:
      return dropped(1);
  }
  return Word();
}

Word Word::dropped(std::size_t k) const {
  if (k == 0) return *this;
  if (form_ != Form::EventuallyPeriodic) {
    if (k > pre_.size()) throw UsageError("cannot drop past the end of a finite word");
    return finite(std::vector<Index>(pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()));
  }
  if (k <= pre_.size()) {
    return eventually_periodic(std::vector<Index>(pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()),
                               period_);
  }
  std::size_t rot = (k - pre_.size()) % period_.size();
  std::vector<Index> p = period_;
  std::rotate(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(rot), p.end());
  return eventually_periodic({}, std::move(p));
}

Word Word::prepended(std::span<const Index> head) const {
  if (head.empty()) return *this;
  std::vector<Index> pre(head.begin(), head.end());
  pre.insert(pre.end(), pre_.begin(), pre_.end());
  if (form_ == Form::EventuallyPeriodic) return eventually_periodic(std::move(pre), period_);
  return finite(std::move(pre));
}

bool Word::starts_with(std::span<const Index> head) const {
  if (form_ != Form::EventuallyPeriodic && head.size() > pre_.size()) return false;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (letter(i) != head[i]) return false;
  }
  return true;
}

std::string Word::to_string() const {
  if (form_ == Form::Empty) return "@";
  std::string out;
  for (std::size_t i = 0; i < pre_.size(); ++i) {
    if (i > 0) out += '.';
    out += "e" + std::to_string(pre_[i]);
  }
  if (form_ == Form::EventuallyPeriodic) {
    if (!pre_.empty()) out += '.';
    out += '(';
    for (std::size_t i = 0; i < period_.size(); ++i) {
      if (i > 0) out += '.';
      out += "e" + std::to_string(period_[i]);
    }
    out += ")*";
  }
  return out;
}

}  // namespace ultrashift
