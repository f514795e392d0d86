// Text format for subsemigroup specs.
//
//   # comment
//   form=upper
//   d=1
//   I0=0
//   N=1
//   FD=(0,0)
//   default_m=0
//   row=0 m=3 F=(0,1),(0,2)
//
// One key=value per token; several tokens may share a line. Keys by form:
//   diagonal          elements tail_N tail_d tail_r
//   upper, lower      d I0 R N FD default_m row (with m and F on the same line)
//   twosided-i/-ii    d q p I P FD F
// Integer lists and element lists are comma separated and may be empty.
// Defaults: d=1, default_m=0, N=max(I0)+1 (or 0), P=0, tail_r=0.

#ifndef BICYCLIC_SPEC_IO_HPP_
#define BICYCLIC_SPEC_IO_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <optional>     // for optional
#include <set>          // for set
#include <sstream>      // for istringstream
#include <string>       // for string, getline
#include <string_view>  // for string_view
#include <type_traits>  // for decay_t, is_same_v, is_base_of_v
#include <utility>      // for pair, move
#include <variant>      // for visit
#include <vector>       // for vector

#include "element.hpp"       // for Element, parse_error, to_string
#include "subsemigroup.hpp"  // for SubsemigroupSpec, validate

namespace bicyclic {

  namespace detail {
    struct Entry {
      std::string key;
      std::string value;
      std::size_t line;
    };

    inline std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    // Tokens without '=' continue the previous value, which lets element
    // lists contain spaces.
    inline std::vector<Entry> tokenize_line(std::string_view line,
                                            std::size_t      number) {
      std::vector<Entry> out;
      std::istringstream in{std::string(line)};
      std::string        token;
      while (in >> token) {
        auto const eq = token.find('=');
        if (eq == std::string::npos) {
          if (out.empty()) {
            throw parse_error("expected key=value, got \"" + token + "\"",
                              number);
          }
          out.back().value += token;
          continue;
        }
        if (eq == 0) {
          throw parse_error("missing key before '='", number);
        }
        out.push_back({token.substr(0, eq), token.substr(eq + 1), number});
      }
      return out;
    }

    inline index_type parse_int_value(Entry const& e) {
      try {
        std::size_t      pos = 0;
        std::string_view v   = trim(e.value);
        index_type const x   = parse_index(v, pos);
        if (pos != v.size()) {
          throw parse_error("trailing characters");
        }
        return x;
      } catch (parse_error const&) {
        throw parse_error(
            "key " + e.key + ": expected a nonnegative integer, got \""
                + e.value + "\"",
            e.line);
      }
    }

    inline IndexSet parse_int_list(Entry const& e) {
      IndexSet         out;
      std::string_view v = trim(e.value);
      if (v.empty()) {
        return out;
      }
      std::size_t start = 0;
      while (true) {
        auto const comma = v.find(',', start);
        Entry      item{e.key,
                   std::string(v.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start)),
                   e.line};
        out.insert(parse_int_value(item));
        if (comma == std::string_view::npos) {
          break;
        }
        start = comma + 1;
      }
      return out;
    }

    inline ElementSet parse_element_list(Entry const& e) {
      ElementSet       out;
      std::string_view v = trim(e.value);
      std::size_t      pos = 0;
      try {
        skip_space(v, pos);
        while (pos < v.size()) {
          out.insert(parse_element_at(v, pos));
          skip_space(v, pos);
          if (pos < v.size()) {
            expect_char(v, pos, ',');
            skip_space(v, pos);
          }
        }
      } catch (parse_error const& err) {
        throw parse_error("key " + e.key + ": " + err.what(), e.line);
      }
      return out;
    }

    class SpecReader {
     public:
      explicit SpecReader(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string        raw;
        std::size_t        number = 0;
        while (std::getline(in, raw)) {
          ++number;
          std::string_view line = raw;
          line                  = line.substr(0, line.find('#'));
          line                  = trim(line);
          if (line.empty()) {
            continue;
          }
          auto entries = tokenize_line(line, number);
          if (entries.front().key == "row") {
            read_row(entries);
            continue;
          }
          for (auto& e : entries) {
            if (e.key == "row" || e.key == "m") {
              throw parse_error("key " + e.key + " must start a row line",
                                e.line);
            }
            if (_keys.contains(e.key)) {
              throw parse_error("duplicate key " + e.key, e.line);
            }
            _keys.emplace(e.key, std::move(e));
          }
        }
      }

      SubsemigroupSpec build() {
        auto const form = take("form");
        if (!form) {
          throw parse_error("missing key form");
        }
        std::string_view const f = trim(form->value);
        SubsemigroupSpec       spec;
        if (f == "diagonal") {
          spec = build_diagonal();
        } else if (f == "upper") {
          spec = Upper{build_rows()};
        } else if (f == "lower") {
          spec = Lower{build_rows()};
        } else if (f == "twosided-i") {
          spec = TwoSidedI{build_twosided()};
        } else if (f == "twosided-ii") {
          spec = TwoSidedII{build_twosided()};
        } else {
          throw parse_error("unknown form \"" + std::string(f) + "\"",
                            form->line);
        }
        if (!_keys.empty()) {
          auto const& e = _keys.begin()->second;
          throw parse_error("unknown key " + e.key + " for form="
                                + std::string(f),
                            e.line);
        }
        if (!_rows.empty() && form_of(spec) != Form::upper
            && form_of(spec) != Form::lower) {
          throw parse_error("row lines are only valid for upper and lower forms",
                            _rows.front().line);
        }
        auto const violations = validate(spec);
        if (!violations.empty()) {
          std::string msg;
          for (auto const& v : violations) {
            msg += (msg.empty() ? "" : "; ") + v.message();
          }
          std::size_t line = 0;
          if (auto it = _lines.find(violations.front().parameter);
              it != _lines.end()) {
            line = it->second;
          }
          throw parse_error("validation failed: " + msg, line);
        }
        return spec;
      }

     private:
      struct RowLine {
        index_type  index;
        RowOverride row;
        std::size_t line;
      };

      std::map<std::string, Entry> _keys;
      std::vector<RowLine>         _rows;
      std::map<std::string, std::size_t> _lines;

      void read_row(std::vector<Entry> const& entries) {
        RowLine r{parse_int_value(entries.front()), {}, entries.front().line};
        bool    seen_m = false, seen_f = false;
        for (std::size_t k = 1; k < entries.size(); ++k) {
          auto const& e = entries[k];
          if (e.key == "m" && !seen_m) {
            r.row.threshold = parse_int_value(e);
            seen_m          = true;
          } else if (e.key == "F" && !seen_f) {
            r.row.finite = parse_element_list(e);
            seen_f       = true;
          } else {
            throw parse_error("unexpected key " + e.key + " on a row line",
                              e.line);
          }
        }
        if (!seen_m) {
          throw parse_error("row line requires m=<int>", r.line);
        }
        _lines.try_emplace("row", r.line);
        _rows.push_back(std::move(r));
      }

      std::optional<Entry> take(std::string const& key) {
        auto it = _keys.find(key);
        if (it == _keys.end()) {
          return std::nullopt;
        }
        Entry e = std::move(it->second);
        _keys.erase(it);
        _lines[key] = e.line;
        return e;
      }

      index_type take_int(std::string const& key, index_type fallback) {
        auto e = take(key);
        return e ? parse_int_value(*e) : fallback;
      }

      index_type require_int(std::string const& key) {
        auto e = take(key);
        if (!e) {
          throw parse_error("missing key " + key);
        }
        return parse_int_value(*e);
      }

      IndexSet take_ints(std::string const& key, IndexSet fallback = {}) {
        auto e = take(key);
        return e ? parse_int_list(*e) : fallback;
      }

      ElementSet take_elements(std::string const& key) {
        auto e = take(key);
        return e ? parse_element_list(*e) : ElementSet{};
      }

      Diagonal build_diagonal() {
        Diagonal s;
        s.elements     = take_elements("elements");
        auto const N   = take("tail_N");
        auto const d   = take("tail_d");
        auto const r   = take("tail_r");
        if (N || d || r) {
          if (!N || !d) {
            throw parse_error("a diagonal tail needs both tail_N and tail_d",
                              (N ? N : d ? d : r)->line);
          }
          s.tail = DiagonalTail{parse_int_value(*N),
                                parse_int_value(*d),
                                r ? parse_int_value(*r) : 0};
        }
        return s;
      }

      RowFamily build_rows() {
        RowFamily s;
        s.index.period   = take_int("d", 1);
        s.index.finite   = take_ints("I0");
        s.index.residues = take_ints("R");
        s.index.threshold
            = take_int("N", s.index.finite.empty() ? 0
                                                   : *s.index.finite.rbegin() + 1);
        s.diagonal               = take_elements("FD");
        s.rows.default_threshold = take_int("default_m", 0);
        for (auto& r : _rows) {
          if (!s.rows.overrides.emplace(r.index, std::move(r.row)).second) {
            throw parse_error("duplicate row " + std::to_string(r.index),
                              r.line);
          }
        }
        _rows.clear();
        return s;
      }

      TwoSidedData build_twosided() {
        TwoSidedData s;
        s.d        = take_int("d", 1);
        s.q        = require_int("q");
        s.p        = require_int("p");
        s.rows     = take_ints("I");
        s.residues = take_ints("P", IndexSet{0});
        s.diagonal = take_elements("FD");
        s.triangle = take_elements("F");
        return s;
      }
    };

    inline std::string join(IndexSet const& s) {
      std::string out;
      for (index_type x : s) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
      }
      return out;
    }

    inline std::string join(ElementSet const& s) {
      std::string out;
      for (Element x : s) {
        out += (out.empty() ? "" : ",") + to_string(x);
      }
      return out;
    }
  }  // namespace detail

  //! Parses and validates a spec. Errors carry the offending line where known.
  inline SubsemigroupSpec parse_spec(std::string_view text) {
    return detail::SpecReader(text).build();
  }

  //! Canonical text for a spec; parse_spec(format_spec(s)) == s.
  inline std::string format_spec(SubsemigroupSpec const& spec) {
    using detail::join;
    std::string out = "form=" + std::string(to_string(form_of(spec))) + "\n";
    std::visit(
        [&out](auto const& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Diagonal>) {
            out += "elements=" + join(s.elements) + "\n";
            if (s.tail) {
              out += "tail_N=" + std::to_string(s.tail->start)
                     + " tail_d=" + std::to_string(s.tail->period)
                     + " tail_r=" + std::to_string(s.tail->residue) + "\n";
            }
          } else if constexpr (std::is_base_of_v<RowFamily, T>) {
            out += "d=" + std::to_string(s.index.period) + "\n";
            out += "I0=" + join(s.index.finite) + "\n";
            out += "R=" + join(s.index.residues) + "\n";
            out += "N=" + std::to_string(s.index.threshold) + "\n";
            out += "FD=" + join(s.diagonal) + "\n";
            out += "default_m=" + std::to_string(s.rows.default_threshold)
                   + "\n";
            for (auto const& [i, row] : s.rows.overrides) {
              out += "row=" + std::to_string(i)
                     + " m=" + std::to_string(row.threshold)
                     + " F=" + join(row.finite) + "\n";
            }
          } else {
            out += "d=" + std::to_string(s.d) + "\n";
            out += "q=" + std::to_string(s.q) + "\n";
            out += "p=" + std::to_string(s.p) + "\n";
            out += "I=" + join(s.rows) + "\n";
            out += "P=" + join(s.residues) + "\n";
            out += "FD=" + join(s.diagonal) + "\n";
            out += "F=" + join(s.triangle) + "\n";
          }
        },
        spec);
    return out;
  }

}  // namespace bicyclic

#endif  // BICYCLIC_SPEC_IO_HPP_
