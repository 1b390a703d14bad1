#include "ultrashift/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ultrashift {

namespace {

// Single-line scanner with 1-based error positions.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool next_is(char c) {
    skip_spaces();
    return peek() == c;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_, pos_ + 1, reason);
  }

  bool try_consume(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool try_keyword(std::string_view kw) {
    skip_spaces();
    if (text_.substr(pos_).starts_with(kw)) {
      std::size_t after = pos_ + kw.size();
      if (after >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[after]))) {
        pos_ = after;
        return true;
      }
    }
    return false;
  }
  void expect_keyword(std::string_view kw) {
    if (!try_keyword(kw)) fail("expected '" + std::string(kw) + "'");
  }

  Index number() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    Index value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec == std::errc::result_out_of_range) {
      throw CapacityError("index literal exceeds the machine integer range (line " +
                          std::to_string(line_) + ")");
    }
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("malformed number");
    return value;
  }

  Index prefixed(char prefix) {
    skip_spaces();
    if (peek() != prefix) fail(std::string("expected '") + prefix + "<index>'");
    ++pos_;
    return number();
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

IndexSet parse_set(Cursor& c, const Universe& u) {
  if (c.try_keyword("all")) return IndexSet::all(u);
  if (c.try_keyword("none")) return IndexSet::none(u);
  bool cofinite = c.try_keyword("cofinite");
  if (!cofinite && !c.try_keyword("finite")) c.fail("expected a set (all/none/finite/cofinite)");
  c.expect('(');
  std::vector<Index> indices;
  if (!c.try_consume(')')) {
    do {
      indices.push_back(c.prefixed('v'));
    } while (c.try_consume(','));
    c.expect(')');
  }
  return cofinite ? IndexSet::excluding(u, std::move(indices)) : IndexSet::of(u, std::move(indices));
}

std::vector<Index> parse_letter_run(Cursor& c) {
  std::vector<Index> letters;
  do {
    letters.push_back(c.prefixed('e'));
  } while (c.try_consume('.') && !c.next_is('('));
  return letters;
}

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Word parse_word(const std::string& text) {
  Cursor c(text, 1);
  if (c.try_consume('@')) {
    if (!c.at_end()) c.fail("trailing input after '@'");
    return Word::empty();
  }
  std::vector<Index> pre;
  if (!c.next_is('(')) {
    pre = parse_letter_run(c);
  }
  if (c.try_consume('(')) {
    std::vector<Index> period = parse_letter_run(c);
    c.expect(')');
    c.expect('*');
    if (!c.at_end()) c.fail("trailing input after the period");
    return Word::eventually_periodic(std::move(pre), std::move(period));
  }
  if (!c.at_end()) c.fail("trailing input after the word");
  if (pre.empty()) c.fail("expected a word");
  return Word::finite(std::move(pre));
}

GroupWord parse_group_word(const std::string& text) {
  Cursor c(text, 1);
  if (c.try_consume('0')) {
    if (!c.at_end()) c.fail("trailing input after '0'");
    return GroupWord();
  }
  std::vector<GroupLetter> letters;
  do {
    bool inverse = c.try_consume('~');
    letters.push_back({c.prefixed('e'), inverse});
  } while (c.try_consume('.'));
  if (!c.at_end()) c.fail("trailing input after the group word");
  return GroupWord::reduce(std::move(letters));
}

ForbiddenSet parse_forbidden_set(const std::string& text) {
  std::string flat;
  for (char ch : text) flat += (ch == '\n' || ch == '\r') ? ' ' : ch;
  Cursor c(flat, 1);
  c.expect_keyword("forbid");
  c.expect('{');
  std::vector<std::vector<Index>> words;
  while (!c.try_consume('}')) {
    if (c.at_end()) c.fail("unterminated forbid block");
    words.push_back(parse_letter_run(c));
    if (!c.try_consume(';') && !c.next_is('}')) c.fail("expected ';' or '}'");
  }
  if (!c.at_end()) c.fail("trailing input after the forbid block");
  return ForbiddenSet(std::move(words));
}

std::string render_forbidden_set(const ForbiddenSet& f) {
  std::string out = "forbid {";
  for (const std::vector<Index>& w : f.words()) {
    out += ' ';
    out += Word::finite(w).to_string();
    out += ';';
  }
  out += " }";
  return out;
}

Ultragraph parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Universe> universe;
  std::vector<ExceptionalEdge> edges;
  std::optional<TailRule> tail;
  std::size_t last_content_line = 1;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string content = strip_comment(raw);
    Cursor c(content, line_no);
    if (c.at_end()) continue;
    last_content_line = line_no;
    if (c.try_keyword("vertices")) {
      if (universe) c.fail("duplicate vertices line");
      c.expect('=');
      if (c.try_keyword("infinite")) {
        universe = Universe::infinite(1);
      } else {
        c.expect_keyword("finite");
        c.expect('(');
        universe = Universe::finite(c.number());
        c.expect(')');
      }
    } else if (c.try_keyword("edge")) {
      if (!universe) c.fail("vertices line must come first");
      if (tail) c.fail("edge lines must precede the tail line");
      Index e = c.number();
      c.expect_keyword("source");
      c.expect('=');
      Index src = c.prefixed('v');
      c.expect_keyword("range");
      c.expect('=');
      edges.push_back({e, src, parse_set(c, *universe)});
    } else if (c.try_keyword("tail")) {
      if (!universe) c.fail("vertices line must come first");
      if (tail) c.fail("duplicate tail line");
      c.expect_keyword("start");
      c.expect('=');
      Index start = c.number();
      c.expect_keyword("source");
      c.expect('=');
      std::variant<TailRule::Identity, TailRule::ConstantVertex> source;
      if (!c.try_keyword("identity")) {
        c.expect_keyword("constant");
        c.expect('(');
        source = TailRule::ConstantVertex{c.prefixed('v')};
        c.expect(')');
      }
      c.expect_keyword("range");
      c.expect('=');
      std::variant<TailRule::ConstantRange, TailRule::UpperTail> range{TailRule::UpperTail{0}};
      if (c.try_keyword("uppertail")) {
        c.expect('(');
        range = TailRule::UpperTail{c.number()};
        c.expect(')');
      } else {
        range = TailRule::ConstantRange{parse_set(c, *universe)};
      }
      tail = TailRule{start, source, range};
    } else {
      c.fail("expected a vertices/edge/tail line");
    }
    if (!c.at_end()) c.fail("trailing input on the line");
  }
  if (!universe) throw ParseError(1, 1, "missing vertices line");
  try {
    return Ultragraph(*universe, std::move(edges), std::move(tail));
  } catch (const UsageError& err) {
    throw ParseError(last_content_line, 1, err.what());
  }
}

std::string render_presentation(const Ultragraph& g) {
  std::string out = "vertices = ";
  out += g.vertex_universe().is_finite()
             ? "finite(" + std::to_string(g.vertex_universe().size()) + ")"
             : "infinite";
  out += '\n';
  for (const ExceptionalEdge& e : g.exceptional_edges()) {
    out += "edge " + std::to_string(e.edge) + " source=v" + std::to_string(e.source) +
           " range=" + e.range.to_string("v") + '\n';
  }
  if (g.tail()) {
    const TailRule& t = *g.tail();
    out += "tail start=" + std::to_string(t.start) + " source=";
    if (t.is_identity()) {
      out += "identity";
    } else {
      out += "constant(v" + std::to_string(std::get<TailRule::ConstantVertex>(t.source).vertex) + ")";
    }
    out += " range=";
    if (const auto* up = std::get_if<TailRule::UpperTail>(&t.range)) {
      out += "uppertail(" + std::to_string(up->offset) + ")";
    } else {
      out += std::get<TailRule::ConstantRange>(t.range).set.to_string("v");
    }
    out += '\n';
  }
  return out;
}

}  // namespace ultrashift
