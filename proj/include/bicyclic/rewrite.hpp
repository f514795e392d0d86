// B as the monoid on {a, b} presented by the single rule ba -> empty word.
// Independent of the closed-form product in element.hpp and used to check it.

#ifndef BICYCLIC_REWRITE_HPP_
#define BICYCLIC_REWRITE_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view

#include "element.hpp"  // for Element, index_type, parse_error

namespace bicyclic {

  using Word = std::string;

  namespace detail {
    inline void check_letters(std::string_view w) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != 'a' && w[k] != 'b') {
          throw parse_error("letter '" + std::string(1, w[k]) + "' at position "
                            + std::to_string(k) + " is not in {a, b}");
        }
      }
    }

    // Reads a word that has no factor "ba".
    inline Element read_normal_word(std::string_view w) {
      std::size_t const split = w.find('b');
      if (split == std::string_view::npos) {
        return {w.size(), 0};
      }
      return {split, w.size() - split};
    }
  }  // namespace detail

  //! Normal form of w by a single left-to-right scan: every a read while
  //! b's are pending cancels one of them.
  inline Element word_normalize(std::string_view w) {
    detail::check_letters(w);
    index_type as = 0;
    index_type pending_bs = 0;
    for (char c : w) {
      if (c == 'b') {
        ++pending_bs;
      } else if (pending_bs > 0) {
        --pending_bs;
      } else {
        ++as;
      }
    }
    return {as, pending_bs};
  }

  enum class DeletionOrder { leftmost, rightmost };

  //! Second reference: delete occurrences of "ba" one at a time until none
  //! remain. Quadratic; only for cross-checking word_normalize.
  inline Element word_normalize_fixpoint(std::string_view w,
                                         DeletionOrder order
                                         = DeletionOrder::leftmost) {
    detail::check_letters(w);
    std::string s(w);
    while (true) {
      std::size_t const pos = order == DeletionOrder::leftmost ? s.find("ba")
                                                               : s.rfind("ba");
      if (pos == std::string::npos) {
        break;
      }
      s.erase(pos, 2);
    }
    return detail::read_normal_word(s);
  }

  //! The word a^i b^j.
  inline Word to_word(Element x) {
    return Word(x.i, 'a') + Word(x.j, 'b');
  }

  inline Element multiply_via_rewriting(Element x, Element y) {
    return word_normalize(to_word(x) + to_word(y));
  }

}  // namespace bicyclic

#endif  // BICYCLIC_REWRITE_HPP_
