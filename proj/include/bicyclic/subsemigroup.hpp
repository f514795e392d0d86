// Finite descriptions of subsemigroups of B following the classification into
// diagonal, upper, lower and two-sided subsemigroups.
//
// Parameter data is always given in the upper orientation: a Lower spec
// denotes the reflection of the Upper spec with the same parameters, and
// TwoSidedII denotes F_D u hat(F) u hat(Lambda_{I,p,d}) u Sigma_{p,d,P} for
// the same F and I as TwoSidedI.

#ifndef BICYCLIC_SUBSEMIGROUP_HPP_
#define BICYCLIC_SUBSEMIGROUP_HPP_

#include <algorithm>    // for max
#include <cstddef>      // for size_t
#include <map>          // for map
#include <optional>     // for optional
#include <set>          // for set
#include <stdexcept>    // for domain_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <variant>      // for variant, visit
#include <vector>       // for vector

#include "element.hpp"  // for Element, index_type, hat, multiply
#include "regions.hpp"  // for in_lambda_union, in_sigma, in_triangle

namespace bicyclic {

  using ElementSet = std::set<Element>;
  using IndexSet   = std::set<index_type>;

  //! I = I0 u {r + ud : r in R, u >= 0, r + ud >= N}.
  struct IDescription {
    IndexSet   finite;         // I0, a subset of {0, ..., N - 1}
    IndexSet   residues;       // R, a subset of {0, ..., d - 1}
    index_type threshold = 0;  // N
    index_type period    = 1;  // d

    [[nodiscard]] bool contains(index_type i) const {
      return finite.contains(i)
             || (i >= threshold && residues.contains(i % period));
    }

    // Least element of the tail in residue class r.
    [[nodiscard]] index_type tail_start(index_type r) const {
      if (r >= threshold) {
        return r;
      }
      index_type const steps = (threshold - r + period - 1) / period;
      return detail::checked_add(r, detail::checked_mul(steps, period));
    }

    [[nodiscard]] std::optional<index_type> min() const {
      if (!finite.empty()) {
        return *finite.begin();
      }
      std::optional<index_type> result;
      for (index_type r : residues) {
        index_type const s = tail_start(r);
        if (!result || s < *result) {
          result = s;
        }
      }
      return result;
    }

    // Requires a valid description.
    [[nodiscard]] bool is_everything() const {
      return residues.size() == period && finite.size() == threshold;
    }

    bool operator==(IDescription const&) const = default;
  };

  struct RowOverride {
    index_type threshold = 0;  // m_i before normalisation
    ElementSet finite;         // F_i

    bool operator==(RowOverride const&) const = default;
  };

  //! Row thresholds m_i and finite parts F_i. Rows without an override use
  //! m_i = default_threshold and F_i empty.
  struct RowData {
    index_type                        default_threshold = 0;
    std::map<index_type, RowOverride> overrides;

    [[nodiscard]] index_type raw_threshold(index_type i) const {
      auto it = overrides.find(i);
      return it == overrides.end() ? default_threshold : it->second.threshold;
    }

    //! m_i normalised to max(m_i, i).
    [[nodiscard]] index_type threshold(index_type i) const {
      return std::max(i, raw_threshold(i));
    }

    [[nodiscard]] bool in_finite_part(index_type i, Element x) const {
      auto it = overrides.find(i);
      return it != overrides.end() && it->second.finite.contains(x);
    }

    [[nodiscard]] index_type max_raw_threshold() const {
      index_type result = default_threshold;
      for (auto const& [i, row] : overrides) {
        result = std::max(result, row.threshold);
      }
      return result;
    }

    bool operator==(RowData const&) const = default;
  };

  struct DiagonalTail {
    index_type start   = 0;  // N_t
    index_type period  = 1;  // d_t
    index_type residue = 0;  // r_t

    bool operator==(DiagonalTail const&) const = default;
  };

  //! A finite set of idempotents, optionally with an arithmetic tail
  //! {(n,n) : n >= N_t, n = r_t mod d_t}.
  struct Diagonal {
    ElementSet                  elements;
    std::optional<DiagonalTail> tail;

    bool operator==(Diagonal const&) const = default;
  };

  //! F_D u (union over i in I of S_i) with S_i = F_i u Lambda_{i,m_i,d}.
  struct RowFamily {
    ElementSet   diagonal;  // F_D
    IDescription index;     // I, carries d
    RowData      rows;

    [[nodiscard]] index_type period() const noexcept {
      return index.period;
    }

    bool operator==(RowFamily const&) const = default;
  };

  struct Upper : RowFamily {
    bool operator==(Upper const&) const = default;
  };

  struct Lower : RowFamily {
    bool operator==(Lower const&) const = default;
  };

  struct TwoSidedData {
    index_type q = 0;
    index_type p = 0;
    index_type d = 1;
    IndexSet   rows;      // I, a subset of {q, ..., p - 1}
    IndexSet   residues;  // P, a subset of {0, ..., d - 1}
    ElementSet diagonal;  // F_D
    ElementSet triangle;  // F, a subset of T_{q,p}

    bool operator==(TwoSidedData const&) const = default;
  };

  //! F_D u F u Lambda_{I,p,d} u Sigma_{p,d,P}.
  struct TwoSidedI : TwoSidedData {
    bool operator==(TwoSidedI const&) const = default;
  };

  //! F_D u hat(F) u hat(Lambda_{I,p,d}) u Sigma_{p,d,P}.
  struct TwoSidedII : TwoSidedData {
    bool operator==(TwoSidedII const&) const = default;
  };

  using SubsemigroupSpec
      = std::variant<Diagonal, Upper, Lower, TwoSidedI, TwoSidedII>;

  enum class Form { diagonal, upper, lower, twosided_i, twosided_ii };

  constexpr std::string_view to_string(Form f) noexcept {
    switch (f) {
      case Form::diagonal:
        return "diagonal";
      case Form::upper:
        return "upper";
      case Form::lower:
        return "lower";
      case Form::twosided_i:
        return "twosided-i";
      case Form::twosided_ii:
        return "twosided-ii";
    }
    return "unknown";
  }

  inline Form form_of(SubsemigroupSpec const& spec) noexcept {
    return static_cast<Form>(spec.index());
  }

  // F_D is constrained to D n L^q, read with L^q the left strip
  // {a^i b^j : j <= q}, not the L-class L_q.
  inline constexpr std::string_view fd_reading
      = "left-strip: F_D entries (i,i) with i <= bound";

  struct Violation {
    std::string parameter;
    std::string constraint;

    [[nodiscard]] std::string message() const {
      return constraint + " fails";
    }

    bool operator==(Violation const&) const = default;
  };

  namespace detail {
    inline void check_diagonal_bound(ElementSet const&       fd,
                                     std::optional<index_type> bound,
                                     std::string const&        constraint,
                                     std::vector<Violation>&   out) {
      for (Element x : fd) {
        if (x.i != x.j || !bound || x.i > *bound) {
          out.push_back({"FD", constraint});
          return;
        }
      }
    }

    inline std::vector<Violation> violations(Diagonal const& s) {
      std::vector<Violation> out;
      for (Element x : s.elements) {
        if (x.i != x.j) {
          out.push_back({"elements", "elements ⊆ D"});
          break;
        }
      }
      if (s.tail) {
        if (s.tail->period == 0) {
          out.push_back({"tail_d", "tail_d ≥ 1"});
        } else if (s.tail->residue >= s.tail->period) {
          out.push_back({"tail_r", "tail_r < tail_d"});
        }
      }
      return out;
    }

    inline std::vector<Violation> violations(RowFamily const& s) {
      std::vector<Violation> out;
      IDescription const&    I = s.index;
      if (I.period == 0) {
        out.push_back({"d", "d ≥ 1"});
        return out;
      }
      for (index_type r : I.residues) {
        if (r >= I.period) {
          out.push_back({"R", "R ⊆ {0,…,d−1}"});
          break;
        }
      }
      for (index_type i : I.finite) {
        if (i >= I.threshold) {
          out.push_back({"I0", "I0 ⊆ {0,…,N−1}"});
          break;
        }
      }
      auto const least = I.min();
      if (!least) {
        out.push_back({"I", "I ≠ ∅"});
      }
      check_diagonal_bound(s.diagonal, least, "FD ⊆ D ∩ L^min(I)", out);
      for (auto const& [i, row] : s.rows.overrides) {
        if (!I.contains(i)) {
          out.push_back({"row", "row index " + std::to_string(i) + " ∈ I"});
        }
        for (Element x : row.finite) {
          if (x.i != i || x.j < i || (x.j - i) % I.period != 0) {
            out.push_back({"F", "F_" + std::to_string(i) + " ⊆ Λ_{"
                                    + std::to_string(i) + ","
                                    + std::to_string(i) + ",d}"});
            break;
          }
        }
      }
      return out;
    }

    inline std::vector<Violation> violations(TwoSidedData const& s) {
      std::vector<Violation> out;
      if (s.d == 0) {
        out.push_back({"d", "d ≥ 1"});
      }
      if (s.q > s.p) {
        out.push_back({"q", "q ≤ p"});
      }
      if (!s.rows.contains(s.q)) {
        out.push_back({"I", "q ∈ I"});
      }
      for (index_type i : s.rows) {
        if (i < s.q || i >= s.p) {
          out.push_back({"I", "I ⊆ {q,…,p−1}"});
          break;
        }
      }
      if (!s.residues.contains(0)) {
        out.push_back({"P", "0 ∈ P"});
      }
      for (index_type r : s.residues) {
        if (s.d != 0 && r >= s.d) {
          out.push_back({"P", "P ⊆ {0,…,d−1}"});
          break;
        }
      }
      check_diagonal_bound(s.diagonal, s.q, "FD ⊆ D ∩ L^q", out);
      if (s.q <= s.p) {
        for (Element x : s.triangle) {
          if (!in_triangle(x, s.q, s.p)) {
            out.push_back({"F", "F ⊆ T_{q,p}"});
            break;
          }
        }
      }
      return out;
    }

    inline bool contains_upper(RowFamily const& s, Element x) {
      if (s.diagonal.contains(x)) {
        return true;
      }
      if (x.j < x.i || !s.index.contains(x.i)) {
        return false;
      }
      if (s.rows.in_finite_part(x.i, x)) {
        return true;
      }
      return x.j >= s.rows.threshold(x.i) && (x.j - x.i) % s.period() == 0;
    }
  }  // namespace detail

  //! Every constraint of the classification that the data violates; empty
  //! when the spec is valid.
  inline std::vector<Violation> validate(SubsemigroupSpec const& spec) {
    return std::visit([](auto const& s) { return detail::violations(s); },
                      spec);
  }

  //! A spec that has passed validation. All queries are exact for arbitrary
  //! elements.
  class Subsemigroup {
   public:
    explicit Subsemigroup(SubsemigroupSpec spec) : _spec(std::move(spec)) {
      auto const v = validate(_spec);
      if (!v.empty()) {
        std::string msg = "invalid subsemigroup spec:";
        for (auto const& x : v) {
          msg += " " + x.message() + ";";
        }
        throw std::domain_error(msg);
      }
    }

    [[nodiscard]] SubsemigroupSpec const& spec() const noexcept {
      return _spec;
    }

    [[nodiscard]] Form form() const noexcept {
      return form_of(_spec);
    }

    //! d for non-diagonal forms, 1 for diagonal ones.
    [[nodiscard]] index_type period() const noexcept;

    //! p for two-sided forms, 0 otherwise.
    [[nodiscard]] index_type p() const noexcept;

    //! Largest m_i before normalisation, 0 for forms without row data.
    [[nodiscard]] index_type max_row_threshold() const noexcept;

    [[nodiscard]] bool contains(Element x) const;

   private:
    SubsemigroupSpec _spec;
  };

  inline index_type Subsemigroup::period() const noexcept {
    switch (form()) {
      case Form::upper:
        return std::get<Upper>(_spec).period();
      case Form::lower:
        return std::get<Lower>(_spec).period();
      case Form::twosided_i:
        return std::get<TwoSidedI>(_spec).d;
      case Form::twosided_ii:
        return std::get<TwoSidedII>(_spec).d;
      default:
        return 1;
    }
  }

  inline index_type Subsemigroup::p() const noexcept {
    if (auto const* s = std::get_if<TwoSidedI>(&_spec)) {
      return s->p;
    }
    if (auto const* s = std::get_if<TwoSidedII>(&_spec)) {
      return s->p;
    }
    return 0;
  }

  inline index_type Subsemigroup::max_row_threshold() const noexcept {
    if (auto const* s = std::get_if<Upper>(&_spec)) {
      return s->rows.max_raw_threshold();
    }
    if (auto const* s = std::get_if<Lower>(&_spec)) {
      return s->rows.max_raw_threshold();
    }
    return 0;
  }

  inline bool Subsemigroup::contains(Element x) const {
    switch (form()) {
      case Form::diagonal: {
        auto const& s = std::get<Diagonal>(_spec);
        if (s.elements.contains(x)) {
          return true;
        }
        return s.tail && x.i == x.j && x.i >= s.tail->start
               && x.i % s.tail->period == s.tail->residue;
      }
      case Form::upper:
        return detail::contains_upper(std::get<Upper>(_spec), x);
      case Form::lower:
        return detail::contains_upper(std::get<Lower>(_spec), hat(x));
      case Form::twosided_i: {
        auto const& s = std::get<TwoSidedI>(_spec);
        return s.diagonal.contains(x) || s.triangle.contains(x)
               || in_lambda_union(x, s.rows, s.p, s.d)
               || in_sigma(x, s.p, s.d, s.residues);
      }
      case Form::twosided_ii: {
        auto const& s = std::get<TwoSidedII>(_spec);
        return s.diagonal.contains(x) || s.triangle.contains(hat(x))
               || in_lambda_union(hat(x), s.rows, s.p, s.d)
               || in_sigma(x, s.p, s.d, s.residues);
      }
    }
    return false;
  }

  //! Members of S with both coordinates at most W, in lexicographic order.
  inline std::vector<Element> enumerate_window(Subsemigroup const& S,
                                               index_type          W) {
    std::vector<Element> out;
    for (index_type i = 0; i <= W; ++i) {
      for (index_type j = 0; j <= W; ++j) {
        if (S.contains({i, j})) {
          out.push_back({i, j});
        }
      }
    }
    return out;
  }

  struct ClosureFailure {
    Element x;
    Element y;
    Element product;
  };

  //! Bounded refutation of closure: the first pair (x, y) of window members
  //! whose product lies outside S. No failure is evidence, not proof.
  inline std::optional<ClosureFailure> closure_falsify(Subsemigroup const& S,
                                                       index_type          W) {
    auto const members = enumerate_window(S, W);
    for (Element x : members) {
      for (Element y : members) {
        Element const xy = x * y;
        if (!S.contains(xy)) {
          return ClosureFailure{x, y, xy};
        }
      }
    }
    return std::nullopt;
  }

  inline bool contains(SubsemigroupSpec const& spec, Element x) {
    return Subsemigroup(spec).contains(x);
  }

  inline std::vector<Element> enumerate_window(SubsemigroupSpec const& spec,
                                               index_type              W) {
    return enumerate_window(Subsemigroup(spec), W);
  }

  inline std::optional<ClosureFailure>
  closure_falsify(SubsemigroupSpec const& spec, index_type W) {
    return closure_falsify(Subsemigroup(spec), W);
  }

}  // namespace bicyclic

#endif  // BICYCLIC_SUBSEMIGROUP_HPP_
