#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "ultrashift/text_format.hpp"

using namespace ultrashift;
using namespace testsupport;

TEST_CASE("word syntax") {
  CHECK(parse_word("@") == Word::empty());
  CHECK(parse_word("e1.e5.e7") == Word::finite({1, 5, 7}));
  CHECK(parse_word("e1.e2.(e3.e4)*") == Word::eventually_periodic({1, 2}, {3, 4}));
  CHECK(parse_word("(e3)*") == Word::eventually_periodic({}, {3}));
  CHECK(parse_word(parse_word("e1.e2.(e3.e4)*").to_string()) ==
        Word::eventually_periodic({1, 2}, {3, 4}));
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("e1."), ParseError);
  CHECK_THROWS_AS(parse_word("e1.(e2)"), ParseError);
  CHECK_THROWS_AS(parse_word("x3"), ParseError);
  CHECK_THROWS_AS(parse_word("e99999999999999999999999999"), CapacityError);
}

TEST_CASE("group word syntax") {
  GroupWord w = parse_group_word("e1.e3.~e2.~e1");
  CHECK(w.to_string() == "e1.e3.~e2.~e1");
  CHECK(parse_group_word("0").is_neutral());
  CHECK(parse_group_word("e2.~e2").is_neutral());
  CHECK(parse_group_word("e1.e2.~e2") == parse_group_word("e1"));
  CHECK_THROWS_AS(parse_group_word("~"), ParseError);
}

TEST_CASE("forbidden set files") {
  ForbiddenSet f = parse_forbidden_set("forbid { e1.e1; e1.e2 }");
  CHECK(f == ForbiddenSet({{1, 1}, {1, 2}}));
  CHECK(parse_forbidden_set("forbid{}") == ForbiddenSet());
  CHECK(parse_forbidden_set("forbid {\n  e1.e1;\n  e1.e2;\n}") == f);
  CHECK(render_forbidden_set(f) == "forbid { e1.e1; e1.e2; }");
  CHECK(parse_forbidden_set(render_forbidden_set(f)) == f);
  CHECK_THROWS_AS(parse_forbidden_set("forbid { e1.e1 e2 }"), ParseError);
  CHECK_THROWS_AS(parse_forbidden_set("forbid { e1.e1;"), ParseError);
}

TEST_CASE("presentation files for the worked examples") {
  std::string text3 =
      "# comment line\n"
      "vertices = infinite\n"
      "edge 1 source=v1 range=cofinite(v1,v2)\n"
      "tail start=2 source=identity range=all\n";
  CHECK(parse_presentation(text3) == example3());

  std::string text42 =
      "vertices = infinite\n"
      "tail start=1 source=identity range=uppertail(0)\n";
  CHECK(parse_presentation(text42) == example42());

  std::string textb =
      "vertices = finite(1)\n"
      "tail start=1 source=constant(v0) range=finite(v0)\n";
  CHECK(parse_presentation(textb) == bouquet());
}

TEST_CASE("parse after render is the identity") {
  for (const Ultragraph& g : {example3(), example42(), example53(), bouquet()}) {
    std::string text = render_presentation(g);
    CHECK(parse_presentation(text) == g);
    CHECK(render_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("diagnostics carry positions and reasons") {
  CHECK_THROWS_AS(parse_presentation("vertices = sometimes\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("edge 1 source=v1 range=all\n"), ParseError);

  try {
    parse_presentation("vertices = infinite\nedge 1 source=v1 range=none\n");
    FAIL("empty range accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("empty range") != std::string::npos);
  }
  try {
    parse_presentation(
        "vertices = infinite\n"
        "edge 1 source=v1 range=all\n"
        "edge 1 source=v2 range=all\n");
    FAIL("duplicate edge accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
  }
  try {
    parse_presentation("vertices = infinite\nedge 0 source=v0 range=all\n");
    FAIL("vertex 0 accepted in an infinite universe");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("outside") != std::string::npos);
  }
  try {
    parse_presentation("vertices = infinite\nbogus line\n");
    FAIL("bogus line accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
