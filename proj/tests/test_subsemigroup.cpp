#include <algorithm>  // for any_of
#include <stdexcept>  // for domain_error
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"

namespace bicyclic {

  namespace {
    bool has_violation(SubsemigroupSpec const& s, std::string const& message) {
      auto const v = validate(s);
      return std::any_of(v.begin(), v.end(), [&](Violation const& x) {
        return x.message() == message;
      });
    }
  }  // namespace

  TEST_CASE("IDescription", "[subsemigroup]") {
    IDescription I{{0, 2}, {1}, 4, 3};  // {0, 2} u {4, 7, 10, ...}
    CHECK(I.contains(0));
    CHECK_FALSE(I.contains(1));
    CHECK(I.contains(2));
    CHECK_FALSE(I.contains(3));
    CHECK(I.contains(4));
    CHECK(I.contains(7));
    CHECK_FALSE(I.contains(8));
    CHECK(I.min() == 0);
    CHECK(IDescription{{}, {1}, 4, 3}.min() == 4);
    CHECK(IDescription{{}, {0, 2}, 4, 3}.min() == 5);
    CHECK_FALSE(IDescription{{}, {}, 4, 3}.min().has_value());
    CHECK(IDescription{{0, 1}, {0}, 2, 1}.is_everything());
    CHECK_FALSE(IDescription{{1}, {0}, 2, 1}.is_everything());
    CHECK(IDescription{{}, {0, 1}, 0, 2}.is_everything());
  }

  TEST_CASE("validate: examples", "[subsemigroup]") {
    TwoSidedI bad_q;
    bad_q.q        = 1;
    bad_q.p        = 3;
    bad_q.rows     = {2};
    bad_q.residues = {0};
    CHECK(has_violation(bad_q, "q ∈ I fails"));

    Upper ok;
    ok.diagonal       = {{0, 0}};
    ok.index.finite   = {0};
    ok.index.threshold = 1;
    CHECK(validate(ok).empty());

    TwoSidedI bad_p;
    bad_p.q        = 0;
    bad_p.p        = 2;
    bad_p.d        = 2;
    bad_p.rows     = {0};
    bad_p.residues = {1};
    CHECK(has_violation(bad_p, "0 ∈ P fails"));
    CHECK(validate(bad_p).front().parameter == "P");
  }

  TEST_CASE("validate: every constraint is reported", "[subsemigroup]") {
    TwoSidedI s;
    s.q        = 4;
    s.p        = 3;
    s.d        = 3;
    s.rows     = {1, 4};
    s.residues = {0, 5};
    s.diagonal = {{5, 5}};
    CHECK(has_violation(s, "q ≤ p fails"));
    CHECK(has_violation(s, "I ⊆ {q,…,p−1} fails"));
    CHECK(has_violation(s, "P ⊆ {0,…,d−1} fails"));
    CHECK(has_violation(s, "FD ⊆ D ∩ L^q fails"));

    TwoSidedII t = test::twosided_ii(3, {0, 2});
    t.triangle   = {{1, 3}};
    CHECK(has_violation(t, "F ⊆ T_{q,p} fails"));
    t.triangle = {{1, 2}};
    CHECK(validate(t).empty());

    Upper u;
    u.index          = {{3}, {0}, 2, 2};
    u.diagonal       = {{1, 1}};
    u.rows.overrides[1] = RowOverride{1, {{1, 2}}};
    CHECK(has_violation(u, "I0 ⊆ {0,…,N−1} fails"));
    CHECK(has_violation(u, "row index 1 ∈ I fails"));
    CHECK(has_violation(u, "F_1 ⊆ Λ_{1,1,d} fails"));
    CHECK_FALSE(has_violation(u, "FD ⊆ D ∩ L^min(I) fails"));

    Lower empty;
    CHECK(has_violation(empty, "I ≠ ∅ fails"));
    Lower zero_d;
    zero_d.index.period = 0;
    CHECK(has_violation(zero_d, "d ≥ 1 fails"));

    Diagonal diag{{{1, 2}}, DiagonalTail{3, 2, 2}};
    CHECK(has_violation(diag, "elements ⊆ D fails"));
    CHECK(has_violation(diag, "tail_r < tail_d fails"));
  }

  TEST_CASE("Subsemigroup rejects invalid specs", "[subsemigroup]") {
    CHECK_THROWS_AS(Subsemigroup(Lower{}), std::domain_error);
    CHECK_THROWS_AS(contains(Lower{}, identity), std::domain_error);
    CHECK_THROWS_AS(enumerate_window(Lower{}, 3), std::domain_error);
    CHECK_THROWS_AS(closure_falsify(Lower{}, 3), std::domain_error);
  }

  TEST_CASE("contains: examples", "[subsemigroup]") {
    TwoSidedI s;
    s.q        = 0;
    s.p        = 3;
    s.rows     = {0, 2};
    s.residues = {0};
    s.triangle = {{0, 1}};
    CHECK(contains(s, {2, 5}));
    CHECK(contains(s, {0, 1}));
    CHECK_FALSE(contains(s, {1, 5}));
    CHECK_FALSE(contains(s, {0, 2}));
    CHECK(contains(s, {4, 3}));

    CHECK(contains(test::r1(), {0, 9}));
    CHECK_FALSE(contains(test::r1(), {1, 1}));
    CHECK(contains(test::lower_t(2), {2, 0}));
    CHECK_FALSE(contains(test::lower_t(2), {1, 0}));
    CHECK(contains(test::lower_t(2), {7, 7}));
    CHECK_FALSE(contains(test::lower_t(2), {1, 1}));

    Diagonal d{{{0, 0}}, DiagonalTail{5, 2, 1}};
    CHECK(contains(d, {0, 0}));
    CHECK_FALSE(contains(d, {3, 3}));
    CHECK(contains(d, {5, 5}));
    CHECK_FALSE(contains(d, {6, 6}));
    CHECK(contains(d, {101, 101}));
    CHECK_FALSE(contains(d, {5, 6}));
  }

  TEST_CASE("contains: rows with overrides", "[subsemigroup]") {
    Upper s;
    s.index.period           = 2;
    s.index.residues         = {0};
    s.rows.default_threshold = 5;
    s.rows.overrides[2]      = RowOverride{10, {{2, 4}}};
    CHECK(contains(s, {0, 6}));
    CHECK_FALSE(contains(s, {0, 4}));
    CHECK_FALSE(contains(s, {0, 7}));
    CHECK(contains(s, {2, 4}));
    CHECK_FALSE(contains(s, {2, 6}));
    CHECK(contains(s, {2, 10}));
    // m_6 = max(6, 5)
    CHECK(contains(s, {6, 6}));
    CHECK_FALSE(contains(s, {1, 7}));
  }

  TEST_CASE("enumerate_window: examples", "[subsemigroup]") {
    CHECK(enumerate_window(test::r1(), 3)
          == std::vector<Element>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(enumerate_window(test::diagonal({{1, 1}}), 0).empty());
    CHECK(enumerate_window(test::bplus(), 1)
          == std::vector<Element>{{0, 0}, {0, 1}, {1, 1}});
  }

  TEST_CASE("closure_falsify: examples", "[subsemigroup]") {
    CHECK_FALSE(closure_falsify(test::r1(), 10).has_value());

    Upper row1;
    row1.index.finite    = {1};
    row1.index.threshold = 2;
    row1.rows.overrides[1] = RowOverride{1, {}};
    CHECK_FALSE(closure_falsify(row1, 5).has_value());

    TwoSidedI s;
    s.q        = 0;
    s.p        = 2;
    s.rows     = {0};
    s.residues = {0};
    s.triangle = {{0, 1}};
    auto const failure = closure_falsify(s, 6);
    REQUIRE(failure.has_value());
    CHECK(failure->x == Element{0, 1});
    CHECK(failure->y == Element{2, 2});
    CHECK(failure->product == Element{1, 2});
  }

  TEST_CASE("corpus: window properties", "[subsemigroup][corpus]") {
    for (auto const& [name, spec] : test::corpus()) {
      INFO(name);
      Subsemigroup const S(spec);
      auto const         members = enumerate_window(S, 12);
      std::size_t        k       = 0;
      for (index_type i = 0; i <= 12; ++i) {
        for (index_type j = 0; j <= 12; ++j) {
          bool const listed = k < members.size() && members[k] == Element{i, j};
          CHECK(listed == S.contains({i, j}));
          k += listed ? 1 : 0;
        }
      }
      for (Element x : members) {
        if (S.form() == Form::upper) {
          CHECK(x.j >= x.i);
        } else if (S.form() == Form::lower) {
          CHECK(x.i >= x.j);
        }
        index_type const d    = S.period();
        index_type const diff = x.i > x.j ? x.i - x.j : x.j - x.i;
        CHECK(diff % d == 0);
      }
      CHECK_FALSE(closure_falsify(S, 12).has_value());
    }
  }

  TEST_CASE("Lower enumerates the reflection of Upper", "[subsemigroup]") {
    for (auto const& [name, spec] : test::corpus()) {
      if (auto const* u = std::get_if<Upper>(&spec)) {
        INFO(name);
        auto upper = enumerate_window(*u, 12);
        auto lower = enumerate_window(Lower{*u}, 12);
        for (Element& x : upper) {
          x = hat(x);
        }
        std::sort(upper.begin(), upper.end());
        CHECK(upper == lower);
      }
    }
  }

}  // namespace bicyclic
