// Decision procedures for "S is a left (right) I-order in B": every q in B is
// x^-1 y (resp. x y^-1) for some x, y in S. One procedure per classification
// form, each returning the conditions it checked and, for negative answers, a
// certificate element that no pair of S produces whenever one is available.

#ifndef BICYCLIC_IORDER_HPP_
#define BICYCLIC_IORDER_HPP_

#include <algorithm>    // for all_of, max
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <type_traits>  // for decay_t, is_same_v
#include <utility>      // for move
#include <variant>      // for visit, get
#include <vector>       // for vector

#include "element.hpp"       // for Element, hat
#include "subsemigroup.hpp"  // for Subsemigroup, SubsemigroupSpec, Form

namespace bicyclic {

  enum class Verdict { yes, no };
  enum class Side { left, right };

  //! Why a certificate element cannot be written as x^-1 y over S.
  enum class Reason {
    //! every member has d | j - i, but the element does not
    parity,
    //! the element is (k,k) and S misses the L-class L_k
    empty_l_class,
    //! the element is (0,h); only x = 1 could produce it and (0,h) is not in S
    row0_gap,
    //! reflection of row0_gap: (h,0) needs a member (m,0) with m >= h >= 1
    column0_gap,
    //! S consists of idempotents, so every x^-1 y is idempotent
    idempotents_only
  };

  constexpr std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::yes ? "yes" : "no";
  }

  constexpr std::string_view to_string(Side s) noexcept {
    return s == Side::left ? "left" : "right";
  }

  constexpr std::string_view to_string(Reason r) noexcept {
    switch (r) {
      case Reason::parity:
        return "parity";
      case Reason::empty_l_class:
        return "empty-L-class";
      case Reason::row0_gap:
        return "row0-gap";
      case Reason::column0_gap:
        return "column0-gap";
      case Reason::idempotents_only:
        return "idempotents-only";
    }
    return "unknown";
  }

  struct Condition {
    std::string name;
    bool        holds;

    bool operator==(Condition const&) const = default;
  };

  struct Certificate {
    std::string            failed_condition;
    std::optional<Element> uncovered;
    std::optional<Reason>  reason;

    bool operator==(Certificate const&) const = default;
  };

  struct Decision {
    Verdict                    verdict = Verdict::no;
    Form                       form    = Form::diagonal;
    Side                       side    = Side::left;
    std::vector<Condition>     conditions;
    std::optional<Certificate> certificate;

    [[nodiscard]] bool yes() const noexcept {
      return verdict == Verdict::yes;
    }

    bool operator==(Decision const&) const = default;
  };

  // Condition names, as they appear in reports.
  namespace condition {
    inline constexpr std::string_view not_diagonal  = "not_diagonal";
    inline constexpr std::string_view d_eq_1        = "d_eq_1";
    inline constexpr std::string_view zero_in_I     = "zero_in_I";
    inline constexpr std::string_view row0_prefix   = "row0_prefix_in_FD_F0";
    inline constexpr std::string_view q_eq_0        = "q_eq_0";
    inline constexpr std::string_view R1_subset_S   = "R1_subset_S";
    inline constexpr std::string_view I_eq_N0       = "I_eq_N0";
    inline constexpr std::string_view I_eq_below_p  = "I_eq_0_to_p_minus_1";
  }  // namespace condition

  //! Upper <-> Lower and TwoSidedI <-> TwoSidedII with the same parameters;
  //! diagonal specs are fixed.
  inline SubsemigroupSpec hat_spec(SubsemigroupSpec const& spec) {
    return std::visit(
        [](auto const& s) -> SubsemigroupSpec {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Upper>) {
            return Lower{s};
          } else if constexpr (std::is_same_v<T, Lower>) {
            return Upper{s};
          } else if constexpr (std::is_same_v<T, TwoSidedI>) {
            return TwoSidedII{s};
          } else if constexpr (std::is_same_v<T, TwoSidedII>) {
            return TwoSidedI{s};
          } else {
            return s;
          }
        },
        spec);
  }

  inline Subsemigroup hat_spec(Subsemigroup const& S) {
    return Subsemigroup(hat_spec(S.spec()));
  }

  namespace detail {
    inline Decision finish(Form form, std::vector<Condition> conditions) {
      Decision d;
      d.form       = form;
      d.conditions = std::move(conditions);
      d.verdict    = std::all_of(d.conditions.begin(),
                              d.conditions.end(),
                              [](Condition const& c) { return c.holds; })
                         ? Verdict::yes
                         : Verdict::no;
      return d;
    }

    inline std::string first_failed(Decision const& d) {
      for (auto const& c : d.conditions) {
        if (!c.holds) {
          return c.name;
        }
      }
      return {};
    }

    inline Certificate parity_certificate() {
      return {std::string(condition::d_eq_1), Element{0, 1}, Reason::parity};
    }

    inline Decision decide_diagonal() {
      Decision d
          = finish(Form::diagonal, {{std::string(condition::not_diagonal), false}});
      d.certificate = Certificate{std::string(condition::not_diagonal),
                                  Element{0, 1},
                                  Reason::idempotents_only};
      return d;
    }

    // R_1 is in S iff d = 1, 0 in I and F_D u F_0 covers (0,0), ...,
    // (0, m_0 - 1). Containment rather than equality, since F_0 may also
    // repeat elements of Lambda_{0,m_0,1}.
    inline Decision decide_upper(Subsemigroup const& S, Upper const& s) {
      bool const d_ok    = s.period() == 1;
      bool const zero_ok = s.index.contains(0);
      bool       prefix  = zero_ok;
      if (zero_ok) {
        for (index_type j = 0; j < s.rows.threshold(0) && prefix; ++j) {
          prefix = s.diagonal.contains({0, j})
                   || s.rows.in_finite_part(0, {0, j});
        }
      }
      Decision d = finish(Form::upper,
                          {{std::string(condition::d_eq_1), d_ok},
                           {std::string(condition::zero_in_I), zero_ok},
                           {std::string(condition::row0_prefix), prefix}});
      if (d.yes()) {
        return d;
      }
      if (!d_ok) {
        d.certificate = parity_certificate();
        return d;
      }
      // (0,h) = x^-1 y forces x = 1, so the least row-0 gap is uncovered.
      index_type const bound = zero_ok ? s.rows.threshold(0) : 1;
      for (index_type h = 0; h <= bound; ++h) {
        if (!S.contains({0, h})) {
          d.certificate
              = Certificate{first_failed(d), Element{0, h}, Reason::row0_gap};
          return d;
        }
      }
      d.certificate = Certificate{first_failed(d), std::nullopt, std::nullopt};
      return d;
    }

    inline Decision decide_lower(Lower const& s) {
      bool const d_ok   = s.period() == 1;
      bool const all_ok = d_ok && s.index.is_everything();
      Decision   d      = finish(Form::lower,
                          {{std::string(condition::d_eq_1), d_ok},
                           {std::string(condition::I_eq_N0), all_ok}});
      if (d.yes()) {
        return d;
      }
      if (!d_ok) {
        d.certificate = parity_certificate();
        return d;
      }
      // Column k of S is non-empty iff k in I or (k,k) in F_D; an empty
      // column leaves (k,k) uncovered.
      index_type max_fd = 0;
      for (Element x : s.diagonal) {
        max_fd = std::max(max_fd, x.i);
      }
      index_type const bound = s.index.threshold + max_fd + 2;
      for (index_type k = 0; k <= bound; ++k) {
        if (!s.index.contains(k) && !s.diagonal.contains({k, k})) {
          d.certificate = Certificate{std::string(condition::I_eq_N0),
                                      Element{k, k},
                                      Reason::empty_l_class};
          return d;
        }
      }
      // Every missing column is filled by F_D, so those columns lie below
      // min(I) and 0 is not in I.
      d.certificate = Certificate{
          std::string(condition::I_eq_N0), Element{1, 0}, Reason::column0_gap};
      return d;
    }

    inline Decision decide_twosided_i(Subsemigroup const& S,
                                      TwoSidedI const&    s) {
      bool const d_ok = s.d == 1;
      bool const q_ok = s.q == 0;
      // With d = 1, row 0 beyond p lies in Lambda_{0,p,1} exactly when (0,p)
      // does, so the prefix j <= p decides R_1 in S.
      std::optional<index_type> gap;
      for (index_type j = 0; j <= s.p && !gap; ++j) {
        if (!S.contains({0, j})) {
          gap = j;
        }
      }
      bool const r1_ok = d_ok && !gap;
      Decision   d     = finish(Form::twosided_i,
                          {{std::string(condition::d_eq_1), d_ok},
                           {std::string(condition::q_eq_0), q_ok},
                           {std::string(condition::R1_subset_S), r1_ok}});
      if (d.yes()) {
        return d;
      }
      if (!d_ok) {
        d.certificate = parity_certificate();
      } else if (gap) {
        d.certificate
            = Certificate{first_failed(d), Element{0, *gap}, Reason::row0_gap};
      } else {
        d.certificate = Certificate{first_failed(d), std::nullopt, std::nullopt};
      }
      return d;
    }

    inline Decision decide_twosided_ii(TwoSidedII const& s) {
      bool const d_ok  = s.d == 1;
      bool const q_ok  = s.q == 0;
      bool       i_ok  = s.rows.size() == s.p;
      for (index_type i : s.rows) {
        i_ok = i_ok && i < s.p;
      }
      Decision d = finish(Form::twosided_ii,
                          {{std::string(condition::d_eq_1), d_ok},
                           {std::string(condition::q_eq_0), q_ok},
                           {std::string(condition::I_eq_below_p), i_ok}});
      if (d.yes()) {
        return d;
      }
      if (!d_ok) {
        d.certificate = parity_certificate();
        return d;
      }
      if (!q_ok) {
        // Row 0 and column 0 of S are {1} at most, so (0,1) is uncovered.
        d.certificate = Certificate{
            std::string(condition::q_eq_0), Element{0, 1}, Reason::row0_gap};
        return d;
      }
      index_type m = 0;
      while (s.rows.contains(m)) {
        ++m;
      }
      bool column_empty = !s.diagonal.contains({m, m});
      for (Element f : s.triangle) {
        column_empty = column_empty && f.i != m;
      }
      d.certificate = Certificate{
          std::string(condition::I_eq_below_p),
          column_empty ? std::optional<Element>(Element{m, m}) : std::nullopt,
          column_empty ? std::optional<Reason>(Reason::empty_l_class)
                       : std::nullopt};
      return d;
    }
  }  // namespace detail

  inline Decision decide_left_iorder(Subsemigroup const& S) {
    auto const& spec = S.spec();
    switch (S.form()) {
      case Form::diagonal:
        return detail::decide_diagonal();
      case Form::upper:
        return detail::decide_upper(S, std::get<Upper>(spec));
      case Form::lower:
        return detail::decide_lower(std::get<Lower>(spec));
      case Form::twosided_i:
        return detail::decide_twosided_i(S, std::get<TwoSidedI>(spec));
      case Form::twosided_ii:
        return detail::decide_twosided_ii(std::get<TwoSidedII>(spec));
    }
    return {};
  }

  //! S is a right I-order iff hat(S) is a left I-order. The certificate
  //! element is reflected back, so it is an element that is not x y^-1 for
  //! any x, y in S.
  inline Decision decide_right_iorder(Subsemigroup const& S) {
    Decision d = decide_left_iorder(hat_spec(S));
    d.form     = S.form();
    d.side     = Side::right;
    if (d.certificate && d.certificate->uncovered) {
      d.certificate->uncovered = hat(*d.certificate->uncovered);
    }
    return d;
  }

  inline Decision decide(Subsemigroup const& S, Side side) {
    return side == Side::left ? decide_left_iorder(S) : decide_right_iorder(S);
  }

  inline Decision decide_left_iorder(SubsemigroupSpec const& spec) {
    return decide_left_iorder(Subsemigroup(spec));
  }

  inline Decision decide_right_iorder(SubsemigroupSpec const& spec) {
    return decide_right_iorder(Subsemigroup(spec));
  }

  //! Machine-readable record, one key=value per line.
  inline std::string to_record(Decision const& d) {
    std::string out;
    out += "verdict=" + std::string(to_string(d.verdict)) + "\n";
    out += "form=" + std::string(to_string(d.form)) + "\n";
    out += "side=" + std::string(to_string(d.side)) + "\n";
    for (auto const& c : d.conditions) {
      out += "condition." + c.name + "=" + (c.holds ? "true" : "false") + "\n";
    }
    if (d.certificate) {
      out += "certificate.condition=" + d.certificate->failed_condition + "\n";
      if (d.certificate->uncovered) {
        out += "certificate.element=" + to_string(*d.certificate->uncovered)
               + "\n";
      }
      if (d.certificate->reason) {
        out += "certificate.reason="
               + std::string(to_string(*d.certificate->reason)) + "\n";
      }
    }
    return out;
  }

  inline std::string describe(Decision const& d) {
    std::string out = "S (" + std::string(to_string(d.form)) + ") is ";
    out += d.yes() ? "a " : "not a ";
    out += std::string(to_string(d.side)) + " I-order in B";
    if (d.certificate) {
      out += ": condition " + d.certificate->failed_condition + " fails";
      if (d.certificate->uncovered) {
        out += "; " + to_string(*d.certificate->uncovered) + " is not of the form "
               + (d.side == Side::left ? "x^-1 y" : "x y^-1") + " ("
               + std::string(to_string(*d.certificate->reason)) + ")";
      }
    }
    return out;
  }

}  // namespace bicyclic

#endif  // BICYCLIC_IORDER_HPP_
