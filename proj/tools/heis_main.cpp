#include <algorithm>

#include <CLI11.hpp>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "heis/expr.hpp"
#include "heis/ideal.hpp"
#include "heis/morphism.hpp"
#include "heis/oracle.hpp"
#include "heis/render.hpp"
#include "heis/weyl.hpp"

using namespace heis;
using nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 usage/parse, 2 type error, 3 verification failure
constexpr int kParseExit = 1;
constexpr int kTypeExit = 2;
constexpr int kVerifyExit = 3;

ordered_json mat_json(const oracle::SparseMat& m) {
  ordered_json entries = ordered_json::array();
  for (size_t c = 0; c < m.col.size(); ++c)
    for (const auto& [r, v] : m.col[c])
      entries.push_back({r, static_cast<std::int64_t>(c), v});
  ordered_json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["entries"] = entries;
  return j;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two-sided" || s == "twosided") return Side::TwoSided;
  throw CLI::ValidationError("--side must be left, right, or two-sided");
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int closure_selftest(int max_len, int oracle_level, bool quiet) {
  std::vector<Word> words = {Word{}};
  for (size_t k = 0; k < words.size(); ++k) {
    const Word w = words[k];
    if (w.size() >= max_len) continue;
    for (Orientation o : {Orientation::Up, Orientation::Down}) {
      auto ls = w.letters();
      ls.push_back(o);
      words.push_back(Word{std::move(ls)});
    }
  }
  long long pairs = 0, fails = 0;
  for (const Word& x : words)
    for (const Word& y : words)
      for (const Word& z : words)
        for (const auto& f : restricted_basis(x, y))
          for (const auto& g : restricted_basis(y, z)) {
            ++pairs;
            try {
              Morphism r = reduce(glue(g, f));
              bool ok = true;
              for (int n = 0; n <= oracle_level && ok; ++n) {
                auto lhs = oracle::mat_mul(oracle::eval_diagram(g, n),
                                           oracle::eval_diagram(f, n));
                auto rhs = oracle::SparseMat::zero(lhs.rows, lhs.cols);
                for (const auto& [d, c] : r.terms)
                  rhs = oracle::mat_add(rhs,
                                        oracle::mat_scale(oracle::eval_diagram(d, n), c));
                ok = lhs == rhs;
              }
              if (!ok) ++fails;
            } catch (const std::exception&) {
              ++fails;
            }
          }
  if (!quiet) {
    ordered_json j;
    j["pairs"] = pairs;
    j["failures"] = fails;
    j["max_word_length"] = max_len;
    j["oracle_level"] = oracle_level;
    emit(report("closure-selftest", j));
  }
  return fails == 0 ? 0 : kVerifyExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale calculator for the restricted Heisenberg fragment"};
  app.require_subcommand(1);

  std::string mode = "restricted";
  int level = 4;
  std::string format = "ascii";
  unsigned seed = 0;
  app.add_option("--mode", mode, "evaluation mode")
      ->check(CLI::IsMember({"restricted", "oracle"}));
  app.add_option("--level", level, "oracle truncation level N");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"ascii", "tikz", "json"}));
  app.add_option("--seed", seed, "seed for sampled property suites");

  auto show = [&](const Morphism& m) { std::cout << render(m, format); };
  auto eval_and_show = [&](const std::string& text) {
    ExprPtr e = parse_expr(text);
    if (mode == "oracle") {
      ordered_json levels = ordered_json::array();
      for (int n = 0; n <= level; ++n)
        levels.push_back({{"level", n}, {"matrix", mat_json(evaluate_oracle(e, n))}});
      ordered_json j;
      j["expr"] = print_expr(e);
      j["source"] = e->source.str();
      j["target"] = e->target.str();
      j["levels"] = levels;
      emit(report("oracle-evaluation", j));
    } else {
      show(evaluate(e));
    }
  };

  // normalize / render
  std::string expr_text;
  auto* normalize = app.add_subcommand("normalize", "evaluate an expression to normal form");
  normalize->add_option("expr", expr_text, "expression")->required();
  normalize->callback([&] { eval_and_show(expr_text); });
  auto* rendercmd = app.add_subcommand("render", "render an expression");
  rendercmd->add_option("expr", expr_text, "expression")->required();
  rendercmd->callback([&] { show(evaluate(parse_expr(expr_text))); });

  // compose
  std::string expr2_text;
  auto* composecmd = app.add_subcommand("compose", "vertical composition of two expressions");
  composecmd->add_option("top", expr_text, "upper expression")->required();
  composecmd->add_option("bottom", expr2_text, "lower expression")->required();
  composecmd->callback([&] {
    Morphism top = evaluate(parse_expr(expr_text));
    Morphism bottom = evaluate(parse_expr(expr2_text));
    if (bottom.target != top.source)
      throw TypeError("compose mismatch: bottom produces " + bottom.target.str() +
                      ", top expects " + top.source.str());
    show(compose(top, bottom));
  });

  // basis / homdim
  std::string word_x, word_y;
  auto* basiscmd = app.add_subcommand("basis", "restricted basis of Hom(x, y)");
  basiscmd->add_option("x", word_x)->required();
  basiscmd->add_option("y", word_y)->required();
  basiscmd->callback([&] {
    auto bs = restricted_basis(Word::parse(word_x), Word::parse(word_y));
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& d : bs) arr.push_back(to_json(d));
      emit(report("basis", {{"count", bs.size()}, {"diagrams", arr}}));
    } else {
      for (const auto& d : bs)
        std::cout << (format == "tikz" ? render_tikz(d) : render_ascii(d)) << "\n";
      std::cout << "count: " << bs.size() << "\n";
    }
  });
  auto* homdim = app.add_subcommand("homdim", "dimension of restricted Hom(x, y)");
  homdim->add_option("x", word_x)->required();
  homdim->add_option("y", word_y)->required();
  homdim->callback([&] {
    std::cout << hom_dim_restricted(Word::parse(word_x), Word::parse(word_y)) << "\n";
  });

  // decompose / k0 / normal-order / iso
  auto* decompose = app.add_subcommand("decompose", "decompose a word into simples");
  decompose->add_option("word", word_x)->required();
  decompose->callback([&] {
    auto d = decompose_object(Word::parse(word_x));
    bool ok = matrix_is_identity(matrix_compose(d.forward, d.backward)) &&
              matrix_is_identity(matrix_compose(d.backward, d.forward));
    ordered_json mults = ordered_json::array();
    for (const auto& [s, c] : d.multiplicities)
      mults.push_back({{"ups", s.ups}, {"downs", s.downs}, {"mult", c}});
    emit(report("decomposition", {{"word", word_x},
                                  {"multiplicities", mults},
                                  {"roundtrip_identity", ok}}));
    if (!ok) std::exit(kVerifyExit);
  });
  auto* k0cmd = app.add_subcommand("k0", "K0 class in the Weyl algebra");
  k0cmd->add_option("word", word_x)->required();
  k0cmd->callback([&] {
    WeylElement e = k0(Word::parse(word_x));
    if (format == "json")
      emit(report("weyl", to_json(e)));
    else
      std::cout << e.str() << "\n";
  });
  std::string weyl_letters;
  auto* nocmd = app.add_subcommand("normal-order", "normal order a word over {x, d}");
  nocmd->add_option("letters", weyl_letters)->required();
  nocmd->callback([&] {
    WeylElement e = normal_order(weyl_letters);
    if (format == "json")
      emit(report("weyl", to_json(e)));
    else
      std::cout << e.str() << "\n";
  });
  std::string sum_a, sum_b;
  auto* isocmd = app.add_subcommand("iso", "object isomorphism of two direct sums of words");
  isocmd->add_option("a", sum_a, "'+'-separated list of words")->required();
  isocmd->add_option("b", sum_b, "'+'-separated list of words")->required();
  isocmd->callback([&] {
    auto parse_sum = [](const std::string& text) {
      std::vector<Word> out;
      size_t start = 0;
      while (start <= text.size()) {
        size_t end = text.find('+', start);
        if (end == std::string::npos) end = text.size();
        std::string piece = text.substr(start, end - start);
        piece.erase(std::remove(piece.begin(), piece.end(), ' '), piece.end());
        if (!piece.empty()) out.push_back(Word::parse(piece));
        start = end + 1;
      }
      return out;
    };
    bool iso = iso_objects(parse_sum(sum_a), parse_sum(sum_b));
    emit(report("iso-objects", {{"a", sum_a}, {"b", sum_b}, {"isomorphic", iso}}));
  });

  // ideal subcommands
  auto* ideal = app.add_subcommand("ideal", "thick tensor ideal calculus");
  ideal->require_subcommand(1);
  std::string side_name = "right";
  std::vector<std::string> gen_words;
  int trunc = 4;
  auto* igen = ideal->add_subcommand("gen", "canonical ideal generated by words");
  igen->add_option("--side", side_name);
  igen->add_option("words", gen_words, "generator words")->required();
  igen->callback([&] {
    std::vector<SplitObject> gens;
    for (const auto& w : gen_words) gens.push_back(split(Word::parse(w)));
    emit(report("ideal", to_json(ideal_generated(parse_side(side_name), gens))));
  });
  auto* imember = ideal->add_subcommand("member", "membership in a generated ideal");
  imember->add_option("--side", side_name);
  imember->add_option("gen", word_x, "generator word")->required();
  imember->add_option("word", word_y, "query word")->required();
  imember->callback([&] {
    Side side = parse_side(side_name);
    auto desc = ideal_generated(side, {split(Word::parse(word_x))});
    bool member = ideal_member(side, desc, split(Word::parse(word_y)));
    emit(report("ideal-membership", {{"ideal", to_json(desc)},
                                     {"word", word_y},
                                     {"member", member}}));
  });
  auto* ilattice = ideal->add_subcommand("lattice", "ideal lattice at truncation L");
  ilattice->add_option("--side", side_name);
  ilattice->add_option("-L,--truncation", trunc);
  ilattice->callback([&] {
    ordered_json arr = ordered_json::array();
    for (const auto& d : enumerate_ideals(parse_side(side_name), trunc))
      arr.push_back(to_json(d));
    emit(report("ideal-lattice", {{"side", side_name}, {"truncation", trunc}, {"chain", arr}}));
  });

  // spectrum
  int sample = 3;
  auto* spc = app.add_subcommand("spc", "Balmer spectrum report");
  spc->add_option("--sample", sample, "sample word length");
  spc->callback([&] {
    SpcReport r = spc_report(sample);
    emit(report("spc", {{"sample_length", r.sample_length},
                        {"two_sided_lattice_is_trivial", r.two_sided_lattice_is_trivial},
                        {"zero_ideal_prime", r.zero_ideal_prime},
                        {"completely_prime", r.completely_prime},
                        {"supports_correct", r.supports_correct},
                        {"tensor_product_property", r.tensor_product_property}}));
    if (!r.all_ok()) std::exit(kVerifyExit);
  });
  auto* qscmd = app.add_subcommand("quasi-support", "quasi-support points at truncation L");
  qscmd->add_option("-L,--truncation", trunc);
  qscmd->callback([&] {
    QuasiSupport qs = quasi_support_points(trunc);
    ordered_json pts = ordered_json::array();
    for (const auto& p : qs.points) pts.push_back(to_json(p));
    ordered_json opens = ordered_json::array();
    for (const auto& [n, open] : qs.opens) {
      ordered_json o = ordered_json::array();
      for (const auto& p : open) o.push_back(to_json(p));
      opens.push_back({{"object", "u^" + std::to_string(n)}, {"support", o}});
    }
    emit(report("quasi-support", {{"truncation", trunc},
                                  {"points", pts},
                                  {"all_meet_prime", qs.all_meet_prime},
                                  {"opens", opens}}));
    if (!qs.all_meet_prime) std::exit(kVerifyExit);
  });

  // self-tests and oracle comparison
  auto* selftest = app.add_subcommand("selftest", "batch verification suites");
  selftest->require_subcommand(1);
  auto* st_rel = selftest->add_subcommand("relations", "defining relations in the oracle");
  st_rel->callback([&] {
    auto results = oracle::relations_selftest(level);
    ordered_json arr = ordered_json::array();
    bool all = true;
    for (const auto& [name, ok] : results) {
      arr.push_back({{"relation", name}, {"holds", ok}});
      all = all && ok;
    }
    emit(report("relations-selftest", {{"level", level}, {"relations", arr}, {"all_hold", all}}));
    if (!all) std::exit(kVerifyExit);
  });
  int max_len = 3;
  int closure_level = 4;
  auto* st_clo = selftest->add_subcommand("closure", "exhaustive closure vs the oracle");
  st_clo->add_option("--max-len", max_len, "maximum word length");
  st_clo->add_option("--oracle-level", closure_level, "oracle truncation");
  st_clo->callback([&] { std::exit(closure_selftest(max_len, closure_level, false)); });

  auto* oeq = app.add_subcommand("oracle-equal", "compare two expressions in the oracle");
  oeq->add_option("expr1", expr_text)->required();
  oeq->add_option("expr2", expr2_text)->required();
  oeq->callback([&] {
    ExprPtr a = parse_expr(expr_text);
    ExprPtr b = parse_expr(expr2_text);
    if (a->source != b->source || a->target != b->target)
      throw TypeError("compared expressions must share source and target");
    ordered_json arr = ordered_json::array();
    bool all = true;
    for (int n = 0; n <= level; ++n) {
      bool eq = evaluate_oracle(a, n) == evaluate_oracle(b, n);
      arr.push_back({{"level", n}, {"equal", eq}});
      all = all && eq;
    }
    emit(report("oracle-equal", {{"expr1", print_expr(a)},
                                 {"expr2", print_expr(b)},
                                 {"levels", arr},
                                 {"equal", all}}));
    if (!all) std::exit(kVerifyExit);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kParseExit : 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kTypeExit;
  } catch (const NonRestrictedAtom& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kTypeExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyExit;
  }
  return 0;
}
