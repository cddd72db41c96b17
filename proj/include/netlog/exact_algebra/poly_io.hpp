#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra/poly.hpp"

namespace netlog {

template <class K>
std::string monomial_to_string(const Monomial& m, const PolyRing<K>& R) {
  std::string s;
  for (int i = 0; i < R.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += R.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

template <class K>
std::string to_string(const Poly<K>& f, const PolyRing<K>& R) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto& t : f.terms()) {
    std::string mono = monomial_to_string(t.m, R);
    std::string c = t.c.to_string();
    if (!t.c.is_atomic()) c = "(" + c + ")";
    std::string piece;
    if (mono.empty()) piece = c;
    else if (t.c.is_one()) piece = mono;
    else if ((-t.c).is_one()) piece = "-" + mono;
    else piece = c + "*" + mono;
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(const std::string& s, const PolyRing<K>& R) : s_(s), R_(R) {}

  Poly<K> parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Poly<K> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + " in '" + s_ +
                     "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly<K> expr() {
    Poly<K> acc;
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Poly<K> t = term();
    acc = neg ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly<K> u = term();
      acc = c == '+' ? acc + u : acc - u;
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        Poly<K> d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(d.lead_coeff().inverse());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Poly<K> base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 5) fail("exponent too large");
      int e = std::stoi(digits);
      base = power(base, e, R_.one());
    }
    return base;
  }

  Poly<K> primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly<K> p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(s_.substr(start, pos_ - start), 10);
      return R_.constant(R_.scalar(mpq_class(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = R_.index_of(name);
      if (idx >= 0) return R_.var(idx);
      if (!name.empty() && name == generator_name(R_.context()))
        return R_.constant(field_generator(R_.context()));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const PolyRing<K>& R_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Poly<K> parse_poly(const std::string& s, const PolyRing<K>& R) {
  return detail::PolyParser<K>(s, R).parse();
}

// Parses a univariate polynomial over QQ in the variable `var`.
inline UPoly parse_upoly(const std::string& s, const std::string& var) {
  PolyRing<Rational> R({var}, RationalField{});
  Poly<Rational> p = parse_poly(s, R);
  std::vector<mpq_class> c(std::max(0, p.degree() + 1));
  for (auto& t : p.terms()) c[t.m[0]] = t.c.value();
  return UPoly(c);
}

}  // namespace netlog
