#pragma once

#include <string>

#include "ultrashift/partial_action.hpp"
#include "ultrashift/shift_space.hpp"
#include "ultrashift/ultragraph.hpp"
#include "ultrashift/word.hpp"

namespace ultrashift {

// Word syntax: "@" for the empty word, "e1.e5.e7", "e1.e2.(e3.e4)*".
Word parse_word(const std::string& text);

// Group word syntax: "e1.e3.~e2" (tilde marks an inverse letter), "0" for
// the neutral element; reduced on parse.
GroupWord parse_group_word(const std::string& text);

// "forbid { e1.e1; e1.e2 }" with flexible whitespace.
ForbiddenSet parse_forbidden_set(const std::string& text);
std::string render_forbidden_set(const ForbiddenSet& f);

// Line-oriented presentation files ('#' comments):
//   vertices = infinite | finite(N)
//   edge <k> source=v<i> range=<set>
//   tail start=<k> source=identity|constant(v<i>) range=<set>|uppertail(<c>)
// with <set> ::= all | none | finite(v..,..) | cofinite(v..,..).
Ultragraph parse_presentation(const std::string& text);
std::string render_presentation(const Ultragraph& g);

}  // namespace ultrashift
