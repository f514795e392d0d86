// Membership predicates for the basic subsets of B from which every
// subsemigroup is assembled: the diagonal, left strips, triangles, rows with
// modular spacing, and modular squares.

#ifndef BICYCLIC_REGIONS_HPP_
#define BICYCLIC_REGIONS_HPP_

#include <ranges>     // for range
#include <stdexcept>  // for domain_error
#include <utility>    // for forward

#include "element.hpp"  // for Element, index_type, hat

namespace bicyclic {

  namespace detail {
    inline void require_positive_period(index_type d) {
      if (d == 0) {
        throw std::domain_error("period d must be at least 1");
      }
    }
  }  // namespace detail

  //! D = {a^i b^i}.
  constexpr bool in_diagonal(Element x) noexcept {
    return x.i == x.j;
  }

  //! L^p = {a^i b^j : j <= p}.
  constexpr bool in_left_strip(Element x, index_type p) noexcept {
    return x.j <= p;
  }

  //! T_{q,p} = {a^i b^j : q <= i <= j < p}.
  inline bool in_triangle(Element x, index_type q, index_type p) {
    if (q > p) {
      throw std::domain_error("triangle requires q <= p");
    }
    return q <= x.i && x.i <= x.j && x.j < p;
  }

  //! Lambda_{i,m,d} = {a^i b^j : d | j - i, j >= m}. Since the difference is
  //! signed, d | j - i is tested as i = j (mod d).
  inline bool in_lambda(Element x, index_type row, index_type m, index_type d) {
    detail::require_positive_period(d);
    return x.i == row && x.j >= m && x.i % d == x.j % d;
  }

  //! Lambda_{I,m,d} = union of Lambda_{i,m,d} over i in I. IndexSet is
  //! anything with contains(index_type), e.g. std::set or IDescription.
  template <typename IndexSet>
  bool in_lambda_union(Element           x,
                       IndexSet const&   rows,
                       index_type        m,
                       index_type        d) {
    detail::require_positive_period(d);
    return rows.contains(x.i) && x.j >= m && x.i % d == x.j % d;
  }

  //! Sigma_{p,d,r} = {a^{p+r+ud} b^{p+r+vd} : u, v >= 0}. The offset r is taken
  //! literally as p + r, so r >= d is accepted here.
  inline bool in_sigma(Element x, index_type p, index_type d, index_type r) {
    detail::require_positive_period(d);
    index_type const corner = detail::checked_add(p, r);
    return x.i >= corner && x.j >= corner && (x.i - corner) % d == 0
           && (x.j - corner) % d == 0;
  }

  //! Sigma_{p,d,P} = union of Sigma_{p,d,r} over r in P. Plain Sigma_p is
  //! in_sigma(x, p, 1, 0).
  template <std::ranges::range Residues>
  bool in_sigma(Element x, index_type p, index_type d, Residues const& P) {
    detail::require_positive_period(d);
    for (index_type r : P) {
      if (in_sigma(x, p, d, r)) {
        return true;
      }
    }
    return false;
  }

  //! Evaluates pred at hat(x), giving membership in the reflected region.
  template <typename Pred, typename... Args>
  bool reflected(Pred&& pred, Element x, Args&&... args) {
    return std::forward<Pred>(pred)(hat(x), std::forward<Args>(args)...);
  }

}  // namespace bicyclic

#endif  // BICYCLIC_REGIONS_HPP_
