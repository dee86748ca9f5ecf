#pragma once

// Noncommutative polynomials with integer coefficients.
//
// A monomial is a word in generator indices; a polynomial maps monomials to
// nonzero coefficients.  Text form uses generator names joined by '*' (or
// whitespace), '^' for powers, and integers, e.g. "u_x*u_y - u_xy" or
// "p^2 - 1 + 4*p + 2*r^2".

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dgw/error.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

using Monomial = std::vector<std::size_t>;

class NCPolynomial {
 public:
  NCPolynomial() = default;

  static NCPolynomial constant(const Integer& c) {
    NCPolynomial p;
    p.add_term({}, c);
    return p;
  }
  static NCPolynomial generator(std::size_t g) {
    NCPolynomial p;
    p.add_term({g}, 1);
    return p;
  }

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) {
        Monomial m = m1;
        m.insert(m.end(), m2.begin(), m2.end());
        out.add_term(m, c1 * c2);
      }
    return out;
  }
  friend NCPolynomial operator*(const Integer& s, const NCPolynomial& a) {
    return NCPolynomial::constant(s) * a;
  }
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Text form with the given generator names; terms in degree-then-lex
  /// order, constant first.
  std::string to_string(const std::vector<std::string>& names) const {
    std::vector<std::pair<Monomial, Integer>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first.size() < b.first.size();
    });
    std::string out;
    for (const auto& [m, c0] : sorted) {
      Integer c = c0;
      bool neg = c < 0;
      if (neg) c = -c;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) mono += "*";
        mono += names.at(m[k]);
      }
      if (m.empty()) out += c.get_str();
      else if (c == 1) out += mono;
      else out += c.get_str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
  }

  /// Parses "lhs = rhs" (as lhs - rhs) or a bare expression.
  static NCPolynomial parse(const std::string& text, const std::vector<std::string>& names) {
    auto eq = text.find('=');
    if (eq != std::string::npos)
      return parse(text.substr(0, eq), names) - parse(text.substr(eq + 1), names);
    Parser p{names, text, 0};
    NCPolynomial v = p.expr();
    p.skip();
    if (p.pos != text.size())
      throw ValidationError("unexpected '" + text.substr(p.pos) + "' in '" + text + "'");
    return v;
  }

 private:
  struct Parser {
    const std::vector<std::string>& names;
    const std::string& s;
    std::size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
      throw ValidationError(why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }
    static bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    NCPolynomial expr() {
      NCPolynomial v;
      bool neg = eat('-');
      if (!neg) eat('+');
      NCPolynomial t = term();
      v = neg ? v - t : v + t;
      for (;;) {
        if (eat('+')) v = v + term();
        else if (eat('-')) v = v - term();
        else return v;
      }
    }
    bool at_factor_start() {
      skip();
      return pos < s.size() && (s[pos] == '(' || ident_char(s[pos]));
    }
    NCPolynomial term() {
      NCPolynomial v = power();
      for (;;) {
        if (eat('*')) v = v * power();
        else if (at_factor_start()) v = v * power();
        else return v;
      }
    }
    NCPolynomial power() {
      NCPolynomial base = atom();
      if (eat('^')) {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an exponent");
        long e = std::stol(s.substr(start, pos - start));
        NCPolynomial r = NCPolynomial::constant(1);
        for (long k = 0; k < e; ++k) r = r * base;
        return r;
      }
      return base;
    }
    NCPolynomial atom() {
      skip();
      if (pos >= s.size()) fail("unexpected end");
      if (eat('(')) {
        NCPolynomial v = expr();
        if (!eat(')')) fail("missing ')'");
        return v;
      }
      std::size_t start = pos;
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return NCPolynomial::constant(Integer(s.substr(start, pos - start)));
      }
      while (pos < s.size() && ident_char(s[pos])) ++pos;
      std::string word = s.substr(start, pos - start);
      for (std::size_t g = 0; g < names.size(); ++g)
        if (names[g] == word) return NCPolynomial::generator(g);
      pos = start;
      fail("unknown generator '" + word + "'");
    }
  };

  std::map<Monomial, Integer> terms_;
};

}  // namespace dgw
