#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ultrashift/errors.hpp"
#include "ultrashift/index_set.hpp"

namespace ultrashift {

// Element of the full shift: the empty sequence, a finite sequence of edge
// letters, or an eventually periodic infinite sequence. Infinite words are
// kept canonical: primitive period, minimal preperiod.
class Word {
 public:
  enum class Form { Empty, Finite, EventuallyPeriodic };

  Word() : form_(Form::Empty) {}
  static Word empty() { return Word(); }
  static Word finite(std::vector<Index> letters);
  static Word eventually_periodic(std::vector<Index> preperiod, std::vector<Index> period);

  Form form() const { return form_; }
  bool is_empty() const { return form_ == Form::Empty; }
  bool is_infinite() const { return form_ == Form::EventuallyPeriodic; }
  // Length of a non-infinite word (0 for the empty word).
  std::size_t length() const;

  std::span<const Index> letters() const { return pre_; }  // finite form
  std::span<const Index> preperiod() const { return pre_; }
  std::span<const Index> period() const { return period_; }

  Index letter(std::size_t i) const;  // 0-based; infinite words unroll
  // First min(n, length) letters.
  std::vector<Index> prefix(std::size_t n) const;

  Word shifted() const;               // the shift map sigma
  Word dropped(std::size_t k) const;  // drop the first k letters; k <= length
  Word prepended(std::span<const Index> head) const;
  bool starts_with(std::span<const Index> head) const;

  bool operator==(const Word&) const = default;

  std::string to_string() const;  // "@", "e1.e5", "e1.(e2.e3)*"

 private:
  Form form_;
  std::vector<Index> pre_;     // letters when Finite, preperiod when periodic
  std::vector<Index> period_;  // nonempty iff EventuallyPeriodic
};

}  // namespace ultrashift
