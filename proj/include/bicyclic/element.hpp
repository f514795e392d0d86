// Elements of the bicyclic monoid B = <a, b | ba = 1> in standard form a^i b^j.

#ifndef BICYCLIC_ELEMENT_HPP_
#define BICYCLIC_ELEMENT_HPP_

#include <algorithm>     // for max
#include <cctype>        // for isspace, isdigit
#include <charconv>      // for from_chars
#include <compare>       // for strong_ordering
#include <cstdint>       // for uint64_t
#include <ostream>       // for ostream
#include <stdexcept>     // for overflow_error, domain_error, runtime_error
#include <string>        // for string, to_string
#include <string_view>   // for string_view

namespace bicyclic {

  using index_type = std::uint64_t;

  // Raised for malformed textual input. Line is 0 when not applicable.
  class parse_error : public std::runtime_error {
   public:
    explicit parse_error(std::string const& msg, std::size_t line = 0)
        : std::runtime_error(line == 0 ? msg
                                       : "line " + std::to_string(line) + ": "
                                             + msg),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  namespace detail {
    inline index_type checked_add(index_type x, index_type y) {
      index_type result;
      if (__builtin_add_overflow(x, y, &result)) {
        throw std::overflow_error("bicyclic: coordinate overflow");
      }
      return result;
    }

    inline index_type checked_mul(index_type x, index_type y) {
      index_type result;
      if (__builtin_mul_overflow(x, y, &result)) {
        throw std::overflow_error("bicyclic: coordinate overflow");
      }
      return result;
    }
  }  // namespace detail

  //! The element a^i b^j. Standard form is unique, so structural equality is
  //! equality in B.
  struct Element {
    index_type i = 0;
    index_type j = 0;

    auto operator<=>(Element const&) const = default;
  };

  inline constexpr Element identity{0, 0};
  inline constexpr Element generator_a{1, 0};
  inline constexpr Element generator_b{0, 1};

  //! (k,l)(m,n) = (k - l + t, n - m + t) with t = max(l, m).
  inline Element multiply(Element x, Element y) {
    index_type const t = std::max(x.j, y.i);
    return {detail::checked_add(x.i, t - x.j),
            detail::checked_add(y.j, t - y.i)};
  }

  inline Element operator*(Element x, Element y) {
    return multiply(x, y);
  }

  //! The unique inverse in the inverse-semigroup sense.
  constexpr Element inverse(Element x) noexcept {
    return {x.j, x.i};
  }

  //! Reflection in the main diagonal; an anti-isomorphism of B.
  constexpr Element hat(Element x) noexcept {
    return {x.j, x.i};
  }

  constexpr bool is_idempotent(Element x) noexcept {
    return x.i == x.j;
  }

  //! e_n = a^n b^n.
  constexpr Element idempotent(index_type n) noexcept {
    return {n, n};
  }

  struct GreenRelations {
    bool L;
    bool R;
    bool H;
    bool D;

    bool operator==(GreenRelations const&) const = default;
  };

  // Rows of the array are R-classes, columns are L-classes, H is trivial and
  // B is bisimple.
  constexpr GreenRelations green(Element x, Element y) noexcept {
    bool const L = x.j == y.j;
    bool const R = x.i == y.i;
    return {L, R, L && R, true};
  }

  //! Answers e <= f in the natural order on idempotents, where
  //! 1 = e_0 >= e_1 >= e_2 >= ...
  inline bool idempotent_leq(Element e, Element f) {
    if (!is_idempotent(e) || !is_idempotent(f)) {
      throw std::domain_error(
          "idempotent_leq: the natural order is only defined on idempotents");
    }
    return e.i >= f.i;
  }

  inline std::string to_string(Element x) {
    return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
  }

  inline std::ostream& operator<<(std::ostream& os, Element x) {
    return os << to_string(x);
  }

  namespace detail {
    inline void skip_space(std::string_view s, std::size_t& pos) {
      while (pos < s.size()
             && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
    }

    inline index_type parse_index(std::string_view s, std::size_t& pos) {
      skip_space(s, pos);
      if (pos >= s.size()
          || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw parse_error("expected a nonnegative integer in \""
                          + std::string(s) + "\"");
      }
      index_type  value = 0;
      auto const* first = s.data() + pos;
      auto const [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
      if (ec == std::errc::result_out_of_range) {
        throw parse_error("integer out of range in \"" + std::string(s) + "\"");
      }
      pos += static_cast<std::size_t>(ptr - first);
      return value;
    }

    inline void expect_char(std::string_view s, std::size_t& pos, char c) {
      skip_space(s, pos);
      if (pos >= s.size() || s[pos] != c) {
        throw parse_error(std::string("expected '") + c + "' in \""
                          + std::string(s) + "\"");
      }
      ++pos;
    }

    inline Element parse_element_at(std::string_view s, std::size_t& pos) {
      expect_char(s, pos, '(');
      index_type const i = parse_index(s, pos);
      expect_char(s, pos, ',');
      index_type const j = parse_index(s, pos);
      expect_char(s, pos, ')');
      return {i, j};
    }
  }  // namespace detail

  //! Parses the textual syntax "(i,j)"; surrounding whitespace is allowed.
  inline Element parse_element(std::string_view s) {
    std::size_t pos = 0;
    Element     x   = detail::parse_element_at(s, pos);
    detail::skip_space(s, pos);
    if (pos != s.size()) {
      throw parse_error("trailing characters after element in \""
                        + std::string(s) + "\"");
    }
    return x;
  }

}  // namespace bicyclic

#endif  // BICYCLIC_ELEMENT_HPP_
