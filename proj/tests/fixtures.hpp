// Named specs and test-only oracles shared by the test suites.

#ifndef BICYCLIC_TESTS_FIXTURES_HPP_
#define BICYCLIC_TESTS_FIXTURES_HPP_

#include <algorithm>   // for sort
#include <filesystem>  // for directory_iterator, path
#include <fstream>     // for ifstream
#include <optional>    // for optional
#include <random>      // for mt19937_64
#include <sstream>     // for stringstream
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "bicyclic/bicyclic.hpp"

namespace bicyclic::test {

  // The piecewise product, written out separately from multiply().
  inline Element multiply_piecewise(Element x, Element y) {
    index_type const k = x.i, l = x.j, m = y.i, n = y.j;
    if (l <= m) {
      return {k + m - l, n};
    }
    return {k, l - m + n};
  }

  // Left-to-right fold of generator elements; never touches word_normalize.
  inline Element fold_word(std::string const& w) {
    Element acc = identity;
    for (char c : w) {
      acc = multiply_piecewise(acc, c == 'a' ? generator_a : generator_b);
    }
    return acc;
  }

  inline Upper r1() {
    Upper s;
    s.index.finite    = {0};
    s.index.threshold = 1;
    s.rows.overrides[0] = RowOverride{0, {}};
    return s;
  }

  inline Upper bplus() {
    Upper s;
    s.index.residues = {0};
    return s;
  }

  // {(i,j) : i >= j, i >= m}
  inline Lower lower_t(index_type m) {
    Lower s;
    s.index.residues        = {0};
    s.rows.default_threshold = m;
    return s;
  }

  // {(i,0) : i >= 0}
  inline Lower lower_column0() {
    Lower s;
    s.index.finite    = {0};
    s.index.threshold = 1;
    return s;
  }

  inline TwoSidedII twosided_ii(index_type p, IndexSet I, index_type q = 0) {
    TwoSidedII s;
    s.q        = q;
    s.p        = p;
    s.d        = 1;
    s.rows     = std::move(I);
    s.residues = {0};
    return s;
  }

  inline TwoSidedI twosided_i_with_r1() {
    TwoSidedI s;
    s.q        = 0;
    s.p        = 2;
    s.d        = 1;
    s.rows     = {0, 1};
    s.residues = {0};
    s.diagonal = {{0, 0}};
    s.triangle = {{0, 1}, {1, 1}};
    return s;
  }

  inline Upper upper_d(index_type d) {
    Upper s;
    s.index.period   = d;
    s.index.residues = {0};
    return s;
  }

  inline Diagonal diagonal(ElementSet elements) {
    return Diagonal{std::move(elements), std::nullopt};
  }

  // Exhaustive search for q = x^-1 y over members with coordinates <= bound.
  inline std::optional<std::pair<Element, Element>>
  search_left_pair(Subsemigroup const& S, Element q, index_type bound) {
    auto const members = enumerate_window(S, bound);
    for (Element x : members) {
      for (Element y : members) {
        if (multiply_piecewise(inverse(x), y) == q) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  inline Element random_element(std::mt19937_64& rng, index_type max) {
    std::uniform_int_distribution<index_type> dist(0, max);
    index_type const                          i = dist(rng);
    return {i, dist(rng)};
  }

  inline std::string read_file(std::filesystem::path const& path) {
    std::ifstream     in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  inline std::filesystem::path corpus_dir() {
    return BICYCLIC_CORPUS_DIR;
  }

  // Valid corpus specs, keyed by file stem, in name order.
  inline std::vector<std::pair<std::string, SubsemigroupSpec>> corpus() {
    std::vector<std::pair<std::string, SubsemigroupSpec>> out;
    for (auto const& entry : std::filesystem::directory_iterator(corpus_dir())) {
      if (entry.path().extension() == ".spec") {
        out.emplace_back(entry.path().stem().string(),
                         parse_spec(read_file(entry.path())));
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    return out;
  }

  inline SubsemigroupSpec corpus_spec(std::string const& stem) {
    return parse_spec(read_file(corpus_dir() / (stem + ".spec")));
  }

}  // namespace bicyclic::test

#endif  // BICYCLIC_TESTS_FIXTURES_HPP_
