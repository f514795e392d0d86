// Brute-force coverage oracle, the ASCII array view, and the cross-check of
// decisions against coverage.

#ifndef BICYCLIC_COVERAGE_HPP_
#define BICYCLIC_COVERAGE_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "element.hpp"       // for Element, multiply, inverse
#include "iorder.hpp"        // for Decision, decide, Side
#include "subsemigroup.hpp"  // for Subsemigroup, enumerate_window

namespace bicyclic {

  struct CoverageReport {
    Side                 side = Side::left;
    index_type           window     = 0;  // W
    index_type           pair_bound = 0;  // B_W
    std::vector<Element> covered;         // lexicographic
    std::vector<Element> gaps;            // lexicographic

    [[nodiscard]] bool is_covered(Element x) const {
      return std::binary_search(covered.begin(), covered.end(), x);
    }

    [[nodiscard]] bool is_gap(Element x) const {
      return std::binary_search(gaps.begin(), gaps.end(), x);
    }
  };

  //! B_W = 3 (2W + p + m + 4) where m is the largest row threshold. This
  //! bounds the coordinates of every canonical witness for q in the window.
  inline index_type default_pair_bound(Subsemigroup const& S, index_type W) {
    using detail::checked_add;
    using detail::checked_mul;
    index_type const inner = checked_add(
        checked_add(checked_mul(2, W), S.p()),
        checked_add(S.max_row_threshold(), 4));
    return checked_mul(3, inner);
  }

  //! Which q in the (W+1) x (W+1) window are x^-1 y (left) or x y^-1 (right)
  //! for x, y members of S with coordinates at most pair_bound.
  //!
  //! x^-1 y = (x.j - x.i + t, y.j - y.i + t) with t >= x.i, y.i, so its
  //! coordinates bound x.j and y.j; members with j > W cannot contribute on
  //! the left. Dually i > W on the right.
  inline CoverageReport coverage(Subsemigroup const& S,
                                 index_type          W,
                                 index_type          pair_bound,
                                 Side                side = Side::left) {
    CoverageReport report;
    report.side       = side;
    report.window     = W;
    report.pair_bound = pair_bound;

    std::vector<Element> candidates;
    for (Element x : enumerate_window(S, pair_bound)) {
      if ((side == Side::left ? x.j : x.i) <= W) {
        candidates.push_back(x);
      }
    }
    std::size_t const side_len = static_cast<std::size_t>(W) + 1;
    std::vector<char> hit(side_len * side_len, 0);
    for (Element x : candidates) {
      for (Element y : candidates) {
        Element const q = side == Side::left ? multiply(inverse(x), y)
                                             : multiply(x, inverse(y));
        if (q.i <= W && q.j <= W) {
          hit[q.i * side_len + q.j] = 1;
        }
      }
    }
    for (index_type i = 0; i <= W; ++i) {
      for (index_type j = 0; j <= W; ++j) {
        (hit[i * side_len + j] ? report.covered : report.gaps).push_back({i, j});
      }
    }
    return report;
  }

  inline CoverageReport coverage(Subsemigroup const& S,
                                 index_type          W,
                                 Side                side = Side::left) {
    return coverage(S, W, default_pair_bound(S, W), side);
  }

  //! W + 1 lines of W + 1 cells separated by single spaces, '#' for members
  //! and '.' otherwise. Row i is the R-class of a^i. No trailing newline.
  inline std::string render_window(Subsemigroup const& S, index_type W) {
    std::string out;
    for (index_type i = 0; i <= W; ++i) {
      if (i > 0) {
        out += '\n';
      }
      for (index_type j = 0; j <= W; ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += S.contains({i, j}) ? '#' : '.';
      }
    }
    return out;
  }

  struct CrossValidation {
    Decision       decision;
    CoverageReport coverage;
    //! True when the certificate element fits the window and was checked.
    bool                          certificate_checked = false;
    bool                          pass                = false;
    std::optional<ClosureFailure> closure;

    //! A negative verdict checked on a finite window is evidence only.
    [[nodiscard]] std::string strength() const {
      return decision.yes() ? "window" : "evidence";
    }
  };

  //! PASS iff a yes-verdict leaves no gaps in the window and a no-verdict's
  //! certificate element, when it fits the window, is a gap.
  inline CrossValidation cross_validate(Subsemigroup const& S,
                                        index_type          W,
                                        Side                side = Side::left) {
    CrossValidation r;
    r.decision = decide(S, side);
    r.coverage = coverage(S, W, side);
    r.closure  = closure_falsify(S, W);
    if (r.decision.yes()) {
      r.pass = r.coverage.gaps.empty();
    } else if (r.decision.certificate && r.decision.certificate->uncovered) {
      Element const c = *r.decision.certificate->uncovered;
      if (c.i <= W && c.j <= W) {
        r.certificate_checked = true;
        r.pass                = r.coverage.is_gap(c);
      } else {
        r.pass = true;
      }
    } else {
      r.pass = true;
    }
    return r;
  }

  inline std::string to_record(CoverageReport const& c) {
    std::string out;
    out += "side=" + std::string(to_string(c.side)) + "\n";
    out += "window=" + std::to_string(c.window) + "\n";
    out += "pairs=" + std::to_string(c.pair_bound) + "\n";
    out += "covered=" + std::to_string(c.covered.size()) + "\n";
    out += "gaps=" + std::to_string(c.gaps.size()) + "\n";
    std::string list;
    for (Element x : c.gaps) {
      list += (list.empty() ? "" : ",") + to_string(x);
    }
    out += "gap_elements=" + list + "\n";
    return out;
  }

  inline std::string to_record(CrossValidation const& r) {
    std::string out = "result=" + std::string(r.pass ? "PASS" : "FAIL") + "\n";
    out += "strength=" + r.strength() + "\n";
    out += to_record(r.decision);
    out += "coverage.window=" + std::to_string(r.coverage.window) + "\n";
    out += "coverage.pairs=" + std::to_string(r.coverage.pair_bound) + "\n";
    out += "coverage.gaps=" + std::to_string(r.coverage.gaps.size()) + "\n";
    out += "certificate.checked="
           + std::string(r.certificate_checked ? "true" : "false") + "\n";
    if (r.closure) {
      out += "closure=counterexample " + to_string(r.closure->x) + "*"
             + to_string(r.closure->y) + "=" + to_string(r.closure->product)
             + "\n";
    } else {
      out += "closure=ok\n";
    }
    return out;
  }

}  // namespace bicyclic

#endif  // BICYCLIC_COVERAGE_HPP_
