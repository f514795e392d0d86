// Command line front end for the bicyclic library.
//
// Exit status: 0 = yes / ok, 1 = no / refuted, 2 = error.

#include <cstdint>    // for uint64_t
#include <exception>  // for exception
#include <fstream>    // for ifstream
#include <iostream>   // for cout, cerr
#include <sstream>    // for stringstream
#include <string>     // for string

#include "CLI11.hpp"

#include "bicyclic/bicyclic.hpp"

namespace {

  using namespace bicyclic;

  constexpr int exit_yes   = 0;
  constexpr int exit_no    = 1;
  constexpr int exit_error = 2;

  Subsemigroup load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return Subsemigroup(parse_spec(buffer.str()));
    } catch (parse_error const& e) {
      throw parse_error(path + ": " + e.what());
    }
  }

  Side side_of(bool right) {
    return right ? Side::right : Side::left;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic, subsemigroups and I-order decisions in the "
               "bicyclic monoid"};
  app.require_subcommand(1);

  std::string a, b, word, file, element;
  std::uint64_t window = 0, pairs = 0;
  bool          right = false, human = false;

  auto* mul = app.add_subcommand("mul", "Multiply two elements (i,j) (k,l)");
  mul->add_option("x", a)->required();
  mul->add_option("y", b)->required();

  auto* inv = app.add_subcommand("inv", "Inverse of an element (i,j)");
  inv->add_option("x", a)->required();

  auto* normalize
      = app.add_subcommand("normalize", "Normal form of a word over {a,b}");
  normalize->add_option("word", word)->required();

  auto* classify
      = app.add_subcommand("classify", "Parse, validate and echo a spec file");
  classify->add_option("file", file)->required();

  auto* decide_cmd = app.add_subcommand(
      "decide", "Decide whether a spec is a left (or right) I-order in B");
  decide_cmd->add_option("file", file)->required();
  decide_cmd->add_flag("--right", right, "Decide the right I-order property");
  decide_cmd->add_flag("--human", human, "Print a one-line summary as well");

  auto* witness = app.add_subcommand(
      "witness", "Straight decomposition of (m,n) over a left I-order");
  witness->add_option("file", file)->required();
  witness->add_option("q", element)->required();
  witness->add_flag("--right", right, "Decompose as x y^-1 with x L y");

  auto* render = app.add_subcommand("render", "Draw the spec on a window");
  render->add_option("file", file)->required();
  render->add_option("--window", window)->required();

  auto* cover = app.add_subcommand(
      "coverage", "Which window elements are x^-1 y over enumerated pairs");
  cover->add_option("file", file)->required();
  cover->add_option("--window", window)->required();
  auto* pairs_opt = cover->add_option(
      "--pairs", pairs, "Coordinate bound for pairs (default 3(2W+p+m+4))");
  cover->add_flag("--right", right, "Use x y^-1 instead");

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Check the decision against the coverage oracle");
  crosscheck->add_option("file", file)->required();
  crosscheck->add_option("--window", window)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (mul->parsed()) {
      std::cout << to_string(parse_element(a) * parse_element(b)) << '\n';
      return exit_yes;
    }
    if (inv->parsed()) {
      std::cout << to_string(inverse(parse_element(a))) << '\n';
      return exit_yes;
    }
    if (normalize->parsed()) {
      std::cout << to_string(word_normalize(word)) << '\n';
      return exit_yes;
    }
    if (classify->parsed()) {
      Subsemigroup const S = load(file);
      std::cout << "valid=true\n"
                << "fd_reading=" << fd_reading << '\n'
                << format_spec(S.spec());
      return exit_yes;
    }
    if (decide_cmd->parsed()) {
      Decision const d = decide(load(file), side_of(right));
      std::cout << to_record(d);
      if (human) {
        std::cout << describe(d) << '\n';
      }
      return d.yes() ? exit_yes : exit_no;
    }
    if (witness->parsed()) {
      Subsemigroup const S = load(file);
      Element const      q = parse_element(element);
      try {
        Witness const w = right ? decompose_right(S, q) : decompose(S, q);
        std::cout << to_string(w) << '\n';
        return verify_witness(S, w) ? exit_yes : exit_error;
      } catch (not_an_iorder const& e) {
        std::cout << to_record(e.decision());
        std::cerr << e.what() << '\n';
        return exit_no;
      }
    }
    if (render->parsed()) {
      std::cout << render_window(load(file), window) << '\n';
      return exit_yes;
    }
    if (cover->parsed()) {
      Subsemigroup const   S = load(file);
      CoverageReport const c
          = pairs_opt->count() > 0
                ? coverage(S, window, pairs, side_of(right))
                : coverage(S, window, side_of(right));
      std::cout << to_record(c);
      return c.gaps.empty() ? exit_yes : exit_no;
    }
    if (crosscheck->parsed()) {
      CrossValidation const r = cross_validate(load(file), window);
      std::cout << to_record(r);
      return r.pass ? exit_yes : exit_no;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
