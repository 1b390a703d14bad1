#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ultrashift/invariants.hpp"
#include "ultrashift/ktheory.hpp"
#include "ultrashift/partial_action.hpp"
#include "ultrashift/shift_space.hpp"
#include "ultrashift/text_format.hpp"

namespace {

using namespace ultrashift;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kNotConjugate = 3;
constexpr int kOperation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Ultragraph load(const std::string& path) { return parse_presentation(read_file(path)); }

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& file) {
  load(file);
  std::cout << "ok\n";
  return kOk;
}

int cmd_info(const std::string& file) {
  Ultragraph g = load(file);
  Classification c = g.classify();
  const HypothesisReport& h = g.hypotheses();
  std::cout << "vertices: "
            << (g.vertex_universe().is_finite()
                    ? "finite(" + std::to_string(g.vertex_universe().size()) + ")"
                    : "infinite")
            << "\n";
  std::cout << "edges: " << (g.has_infinitely_many_edges() ? "infinite" : "finite") << "\n";
  std::cout << "is-graph: " << yesno(c.is_graph) << "\n";
  std::cout << "is-bouquet: " << yesno(c.is_bouquet) << "\n";
  std::cout << "sinks: " << c.sinks.to_string("v") << "\n";
  std::cout << "regular-vertices: " << c.regular_vertices.to_string("v") << "\n";
  std::cout << "H1 infinite-edges: " << yesno(h.infinite_edges) << "\n";
  std::cout << "H2 finite-range-preimage-complements: "
            << yesno(h.range_preimage_complements_finite) << "\n";
  std::cout << "H3 source-fibers-finite-or-cofinite: "
            << yesno(h.source_fibers_finite_or_cofinite) << "\n";
  std::cout << "H4 no-sinks: " << yesno(h.no_sinks) << "\n";
  std::cout << "H5 ranges-contain-non-sink: " << yesno(h.ranges_contain_non_sink) << "\n";
  ConditionL l = g.condition_l(8);
  std::cout << "condition-L: ";
  switch (l.status) {
    case ConditionL::Status::Satisfied:
      std::cout << "satisfied (" << l.reason << ")\n";
      break;
    case ConditionL::Status::Violated:
      std::cout << "violated (witness " << Word::finite(l.witness_loop).to_string() << ")\n";
      break;
    case ConditionL::Status::Unknown:
      std::cout << "unknown up to loop length " << l.searched_up_to << "\n";
      break;
  }
  return kOk;
}

int cmd_member(const std::string& file, const std::string& word) {
  Ultragraph g = load(file);
  MembershipResult r = edge_shift_membership(g, parse_word(word));
  if (r.member) {
    std::cout << "member\n";
    return kOk;
  }
  std::cout << r.reason << "\n";
  return kFalse;
}

int cmd_shift(const std::string& word) {
  std::cout << shift(parse_word(word)).to_string() << "\n";
  return kOk;
}

int cmd_forbidden(const std::string& file) {
  Ultragraph g = load(file);
  if (auto f = edge_shift_forbidden_set(g)) {
    std::cout << render_forbidden_set(*f) << "\n";
    return kOk;
  }
  std::cout << "infinitely-forbidden\n";
  return kOk;
}

int cmd_from_forbidden(const std::string& file) {
  ForbiddenSet f = parse_forbidden_set(read_file(file));
  std::cout << render_presentation(ultragraph_from_one_step(f));
  return kOk;
}

int cmd_xf_member(const std::string& forbid_file, std::uint64_t alphabet_size,
                  const std::string& word) {
  ForbiddenSet f = parse_forbidden_set(read_file(forbid_file));
  Universe alphabet =
      alphabet_size == 0 ? Universe::infinite(1) : Universe::finite(alphabet_size);
  if (in_xf(f, alphabet, parse_word(word))) {
    std::cout << "member\n";
    return kOk;
  }
  std::cout << "not a member\n";
  return kFalse;
}

int cmd_theta(const std::string& file, const std::string& group_word, const std::string& word) {
  Ultragraph g = load(file);
  std::cout << theta(g, parse_group_word(group_word), parse_word(word)).to_string() << "\n";
  return kOk;
}

int cmd_paths(const std::string& file, std::size_t len, Index max_edge) {
  Ultragraph g = load(file);
  for (const Word& w : enumerate_paths(g, len, max_edge)) {
    std::cout << w.to_string() << "\n";
  }
  return kOk;
}

int cmd_ktheory(const std::string& file, bool emit_matrix, std::size_t n_max) {
  Ultragraph g = load(file);
  KTheory k = k_theory(g, 2, n_max);
  std::cout << "K0 = " << k.k0.to_string() << "\n";
  std::cout << "K1 = " << k.k1.to_string() << "\n";
  if (emit_matrix) {
    std::cout << "boundary matrix (n=" << k.stabilized_at << "):\n";
    std::cout << boundary_matrix(g, k.stabilized_at).to_grid();
  }
  return kOk;
}

int cmd_obstruct(const std::string& left, const std::string& right) {
  Ultragraph a = load(left);
  Ultragraph b = load(right);
  ObstructionReport r = obstruction(a, b);
  auto print_side = [](const char* name, const std::string& path, const SideReport& s) {
    std::cout << name << ": " << path << "\n";
    std::cout << name << ".eligible: " << yesno(s.eligible())
              << (s.eligible() ? "" : " (" + s.hypotheses.failing() + ")") << "\n";
    std::cout << name << ".sft: "
              << (s.sft == SftStatus::Sft ? render_forbidden_set(*s.forbidden)
                                          : std::string("not-sft"))
              << "\n";
    if (s.k) {
      std::cout << name << ".K0: " << s.k->k0.to_string() << "\n";
      std::cout << name << ".K1: " << s.k->k1.to_string() << "\n";
    } else {
      std::cout << name << ".K0: unavailable (" << s.k_unavailable << ")\n";
      std::cout << name << ".K1: unavailable (" << s.k_unavailable << ")\n";
    }
  };
  print_side("left", left, r.left);
  print_side("right", right, r.right);
  bool refuted = r.verdict == ObstructionReport::Verdict::NotConjugate;
  std::cout << "verdict: " << (refuted ? "not-conjugate" : "inconclusive") << "\n";
  std::cout << "reason: " << r.reason << "\n";
  return refuted ? kNotConjugate : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for ultragraph edge shifts over countable alphabets"};
  app.require_subcommand(1);

  std::string file, word_arg, group_arg, second_file;
  std::size_t len = 1, n_max = 16;
  Index max_edge = 0;
  std::uint64_t alphabet_size = 0;
  bool emit_matrix = false;

  auto* validate = app.add_subcommand("validate", "parse and validate a presentation");
  validate->add_option("file", file)->required();

  auto* info = app.add_subcommand("info", "classification and hypothesis report");
  info->add_option("file", file)->required();

  auto* member = app.add_subcommand("member", "edge-shift membership (exit 0/1)");
  member->add_option("file", file)->required();
  member->add_option("word", word_arg)->required();

  auto* shift_cmd = app.add_subcommand("shift", "apply the shift map to a word");
  shift_cmd->add_option("word", word_arg)->required();

  auto* forbidden = app.add_subcommand("forbidden", "canonical forbidden set of the edge shift");
  forbidden->add_option("file", file)->required();

  auto* from_forbidden =
      app.add_subcommand("from-forbidden", "present a one-step shift as an ultragraph");
  from_forbidden->add_option("file", file)->required();

  auto* xf = app.add_subcommand("xf-member", "X_F membership (exit 0/1)");
  xf->add_option("--forbid", second_file, "forbidden-set file")->required();
  xf->add_option("--alphabet", alphabet_size, "finite alphabet size (default: infinite)");
  xf->add_option("word", word_arg)->required();

  auto* theta_cmd = app.add_subcommand("theta", "apply theta_g to a word");
  theta_cmd->add_option("file", file)->required();
  theta_cmd->add_option("groupword", group_arg)->required();
  theta_cmd->add_option("word", word_arg)->required();

  auto* paths = app.add_subcommand("paths", "enumerate paths");
  paths->add_option("file", file)->required();
  paths->add_option("--len", len, "path length")->required();
  paths->add_option("--max-edge", max_edge, "largest edge index")->required();

  auto* kth = app.add_subcommand("ktheory", "K0 and K1 of the ultragraph C*-algebra");
  kth->add_option("file", file)->required();
  kth->add_flag("--emit-matrix", emit_matrix, "print the boundary matrix");
  kth->add_option("--n-max", n_max, "stabilization budget");

  auto* obstruct = app.add_subcommand("obstruct", "conjugacy obstruction report (exit 0/3)");
  obstruct->add_option("left", file)->required();
  obstruct->add_option("right", second_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (info->parsed()) return cmd_info(file);
    if (member->parsed()) return cmd_member(file, word_arg);
    if (shift_cmd->parsed()) return cmd_shift(word_arg);
    if (forbidden->parsed()) return cmd_forbidden(file);
    if (from_forbidden->parsed()) return cmd_from_forbidden(file);
    if (xf->parsed()) return cmd_xf_member(second_file, alphabet_size, word_arg);
    if (theta_cmd->parsed()) return cmd_theta(file, group_arg, word_arg);
    if (paths->parsed()) return cmd_paths(file, len, max_edge);
    if (kth->parsed()) return cmd_ktheory(file, emit_matrix, n_max);
    if (obstruct->parsed()) return cmd_obstruct(file, second_file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperation;
  }
  return kUsage;
}
