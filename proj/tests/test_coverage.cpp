#include <string>  // for string

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"

namespace bicyclic {

  TEST_CASE("coverage: examples", "[coverage]") {
    CoverageReport const r1 = coverage(Subsemigroup(test::r1()), 5);
    CHECK(r1.gaps.empty());
    CHECK(r1.covered.size() == 36);
    CHECK(r1.pair_bound == 3 * (2 * 5 + 0 + 0 + 4));

    // Every idempotent up to B_W.
    Subsemigroup const diag(Diagonal{{}, DiagonalTail{0, 1, 0}});
    CoverageReport const d = coverage(diag, 2);
    CHECK(d.is_gap({0, 1}));
    CHECK(d.covered == std::vector<Element>{{0, 0}, {1, 1}, {2, 2}});

    CoverageReport const even = coverage(Subsemigroup(test::upper_d(2)), 3);
    CHECK(even.is_gap({0, 1}));
    for (Element q : even.covered) {
      CHECK((q.i + q.j) % 2 == 0);
    }
  }

  TEST_CASE("coverage: partition and monotonicity", "[coverage]") {
    for (auto const& [name, spec] : test::corpus()) {
      INFO(name);
      Subsemigroup const S(spec);
      CoverageReport const small = coverage(S, 6, 8);
      CoverageReport const large = coverage(S, 6, 30);
      CHECK(small.covered.size() + small.gaps.size() == 49);
      for (Element q : small.covered) {
        CHECK(large.is_covered(q));
        CHECK_FALSE(small.is_gap(q));
      }
    }
  }

  TEST_CASE("coverage agrees with an unpruned pair search", "[coverage]") {
    // The pruned candidate set must not lose anything.
    for (auto const& [name, spec] : test::corpus()) {
      INFO(name);
      Subsemigroup const S(spec);
      for (Side side : {Side::left, Side::right}) {
        CoverageReport const c       = coverage(S, 5, 14, side);
        auto const           members = enumerate_window(S, 14);
        std::set<Element>    covered;
        for (Element x : members) {
          for (Element y : members) {
            Element const q = side == Side::left
                                  ? test::multiply_piecewise(inverse(x), y)
                                  : test::multiply_piecewise(x, inverse(y));
            if (q.i <= 5 && q.j <= 5) {
              covered.insert(q);
            }
          }
        }
        CHECK(std::vector<Element>(covered.begin(), covered.end()) == c.covered);
      }
    }
  }

  TEST_CASE("render_window: examples", "[coverage]") {
    CHECK(render_window(Subsemigroup(test::r1()), 2) == "# # #\n. . .\n. . .");
    CHECK(render_window(Subsemigroup(test::diagonal({{0, 0}, {1, 1}})), 1)
          == "# .\n. #");
    CHECK(render_window(Subsemigroup(test::bplus()), 2)
          == "# # #\n. # #\n. . #");
    for (index_type W = 0; W < 8; ++W) {
      CHECK(render_window(Subsemigroup(test::lower_t(1)), W).size()
            == (W + 1) * (2 * W + 1) + W);
    }
  }

  TEST_CASE("cross_validate: examples", "[coverage]") {
    auto const r1 = cross_validate(Subsemigroup(test::r1()), 6);
    CHECK(r1.pass);
    CHECK(r1.coverage.gaps.empty());

    auto const col = cross_validate(Subsemigroup(test::lower_column0()), 4);
    CHECK(col.pass);
    CHECK(col.certificate_checked);
    CHECK(col.coverage.is_gap({1, 1}));
    CHECK(col.strength() == "evidence");

    auto const ii = cross_validate(Subsemigroup(test::twosided_ii(2, {0, 1})), 6);
    CHECK(ii.pass);
    CHECK(ii.coverage.gaps.empty());
    CHECK_FALSE(ii.closure.has_value());
  }

  TEST_CASE("cross_validate: whole corpus at window 10", "[coverage][corpus]") {
    for (auto const& [name, spec] : test::corpus()) {
      INFO(name);
      CHECK(cross_validate(Subsemigroup(spec), 10).pass);
    }
  }

}  // namespace bicyclic
