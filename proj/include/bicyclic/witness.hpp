// Straight decompositions: for a left I-order S and q in B, members x R y of
// S with x^-1 y = q. Each scheme is a closed formula; nothing is searched.

#ifndef BICYCLIC_WITNESS_HPP_
#define BICYCLIC_WITNESS_HPP_

#include <algorithm>    // for max
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <variant>      // for get

#include "element.hpp"       // for Element, multiply, inverse, green
#include "iorder.hpp"        // for Decision, decide_left_iorder, Side
#include "rewrite.hpp"       // for multiply_via_rewriting
#include "subsemigroup.hpp"  // for Subsemigroup

namespace bicyclic {

  enum class Scheme {
    //! q = (0,m)^-1 (0,n), valid whenever R_1 is in S
    row0,
    //! q = (m+n+t, m)^-1 (m+n+t, n) with t = max(m_m, m_n)
    lower,
    //! q = (p+m+n, m)^-1 (p+m+n, n)
    twosided_ii
  };

  constexpr std::string_view to_string(Scheme s) noexcept {
    switch (s) {
      case Scheme::row0:
        return "row0";
      case Scheme::lower:
        return "lower";
      case Scheme::twosided_ii:
        return "twosided-ii";
    }
    return "unknown";
  }

  //! Left witnesses satisfy x^-1 y = q and x R y. Right witnesses satisfy
  //! x y^-1 = q and x L y.
  struct Witness {
    Element q;
    Element x;
    Element y;
    Scheme  scheme = Scheme::row0;
    Side    side   = Side::left;

    bool operator==(Witness const&) const = default;
  };

  class not_an_iorder : public std::runtime_error {
   public:
    explicit not_an_iorder(Decision d)
        : std::runtime_error(describe(d)), _decision(std::move(d)) {}

    [[nodiscard]] Decision const& decision() const noexcept {
      return _decision;
    }

   private:
    Decision _decision;
  };

  namespace detail {
    inline Witness decompose_unchecked(Subsemigroup const& S, Element q) {
      index_type const m = q.i;
      index_type const n = q.j;
      switch (S.form()) {
        case Form::upper:
        case Form::twosided_i:
          return {q, {0, m}, {0, n}, Scheme::row0};
        case Form::lower: {
          // Unnormalised thresholds suffice: m + n + t already exceeds both
          // row indices.
          auto const&      rows = std::get<Lower>(S.spec()).rows;
          index_type const t
              = std::max(rows.raw_threshold(m), rows.raw_threshold(n));
          index_type const row = checked_add(checked_add(m, n), t);
          return {q, {row, m}, {row, n}, Scheme::lower};
        }
        case Form::twosided_ii: {
          index_type const row = checked_add(checked_add(S.p(), m), n);
          return {q, {row, m}, {row, n}, Scheme::twosided_ii};
        }
        default:
          break;
      }
      throw std::logic_error("decompose: form admits no left I-order");
    }
  }  // namespace detail

  //! The canonical straight decomposition of q over S. Throws not_an_iorder
  //! when S is not a left I-order in B.
  inline Witness decompose(Subsemigroup const& S, Element q) {
    Decision d = decide_left_iorder(S);
    if (!d.yes()) {
      throw not_an_iorder(std::move(d));
    }
    return detail::decompose_unchecked(S, q);
  }

  //! q = x y^-1 with x L y, obtained by reflecting a left decomposition of
  //! hat(q) over hat(S).
  inline Witness decompose_right(Subsemigroup const& S, Element q) {
    Decision d = decide_right_iorder(S);
    if (!d.yes()) {
      throw not_an_iorder(std::move(d));
    }
    Witness const w = detail::decompose_unchecked(hat_spec(S), hat(q));
    return {q, hat(w.y), hat(w.x), w.scheme, Side::right};
  }

  //! Checks membership, the product (by the closed formula and by rewriting)
  //! and the Green's relation, each independently.
  inline bool verify_witness(Subsemigroup const& S, Witness const& w) {
    if (!S.contains(w.x) || !S.contains(w.y)) {
      return false;
    }
    Element const lhs  = w.side == Side::left ? inverse(w.x) : w.x;
    Element const rhs  = w.side == Side::left ? w.y : inverse(w.y);
    auto const    rels = green(w.x, w.y);
    return multiply(lhs, rhs) == w.q && multiply_via_rewriting(lhs, rhs) == w.q
           && (w.side == Side::left ? rels.R : rels.L);
  }

  inline std::string to_string(Witness const& w) {
    return "q=" + to_string(w.q) + " x=" + to_string(w.x) + " y="
           + to_string(w.y) + " scheme=" + std::string(to_string(w.scheme))
           + (w.side == Side::right ? " side=right" : "");
  }

}  // namespace bicyclic

#endif  // BICYCLIC_WITNESS_HPP_
