#ifndef DECGROUP_IO_HPP
#define DECGROUP_IO_HPP

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace decgroup {

// Text form of polynomial systems:
//
//   vars: x1 x2 x3
//   # comment
//   x1*x2 - 1
//   3/2*x3^2 + (x1 - x2)*x3
//
// Implicit multiplication is rejected; `/` only divides by constants.

namespace detail {

inline bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, const RingPtr& ring, std::size_t line)
      : src_(src), ring_(ring), line_(line) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expression();
    skip_space();
    if (!at_end()) {
      if (is_identifier_start(peek()) || peek() == '(')
        fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant()) fail_at("division by a non-constant", at);
        if (d.is_zero()) fail_at("division by zero", at);
        acc = acc * (Rational(1) / d.constant_coeff());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_space();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("exponent must be a non-negative integer literal");
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const auto digits = src_.substr(start, pos_ - start);
      if (digits.size() > 6) fail_at("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Integer value(std::string(src_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(ring_, Rational(value));
    }
    if (is_identifier_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_identifier_char(peek())) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail_at("undeclared variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  bool accept(char c) {
    if (peek() == c && !at_end()) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, at + 1);
  }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Returns the index of the `vars:` line and fills `names`.
inline std::size_t read_header(const std::vector<std::string_view>& lines,
                               std::vector<std::string>& names) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 5) != "vars:") throw ParseError("expected 'vars:' header", i + 1, 1);
    std::istringstream in{std::string(line.substr(5))};
    std::string name;
    while (in >> name) {
      if (!is_identifier_start(name.front()))
        throw ParseError("invalid variable name '" + name + "'", i + 1, 1);
      for (char ch : name)
        if (!is_identifier_char(ch)) throw ParseError("invalid variable name '" + name + "'", i + 1, 1);
      names.push_back(name);
    }
    if (names.empty()) throw ParseError("no variables declared", i + 1, 1);
    return i;
  }
  throw ParseError("missing 'vars:' header", 1, 1);
}

}  // namespace detail

struct PolynomialSystem {
  RingPtr ring;
  std::vector<Polynomial> polys;
};

/// Parses a single expression in `ring`.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1) {
  return detail::ExpressionParser(text, ring, line).parse();
}

/// Parses a `vars:` header followed by one polynomial per non-empty, non-comment line.
inline PolynomialSystem parse_system(std::string_view text, OrderKind order = OrderKind::degrevlex) {
  const auto lines = detail::split_lines(text);
  std::vector<std::string> names;
  const auto header = detail::read_header(lines, names);
  PolynomialSystem sys{make_ring(std::move(names), order), {}};
  for (std::size_t i = header + 1; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    sys.polys.push_back(parse_polynomial(lines[i], sys.ring, i + 1));
  }
  return sys;
}

struct PointSet {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> points;
};

/// `vars:` header followed by one whitespace-separated row of rationals per point.
inline PointSet parse_points(std::string_view text) {
  const auto lines = detail::split_lines(text);
  PointSet ps;
  const auto header = detail::read_header(lines, ps.names);
  for (std::size_t i = header + 1; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::vector<Rational> row;
    std::string tok;
    while (in >> tok) {
      try {
        row.push_back(make_rational(tok[0] == '+' ? tok.substr(1) : tok));
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + tok + "'", i + 1, 1);
      }
    }
    if (row.size() != ps.names.size())
      throw ParseError("row has " + std::to_string(row.size()) + " coordinates, expected " +
                           std::to_string(ps.names.size()),
                       i + 1, 1);
    ps.points.push_back(std::move(row));
  }
  return ps;
}

inline std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text: terms in descending order, e.g. `x4^2 - 3*x4 + 2`.
inline std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += format_monomial(t.mono, *p.ring());
    }
  }
  return out;
}

inline std::string format_system(const PolynomialSystem& sys) {
  std::string out = "vars:";
  for (const auto& n : sys.ring->names()) out += " " + n;
  out += "\n";
  for (const auto& p : sys.polys) out += format_poly(p) + "\n";
  return out;
}

}  // namespace decgroup

#endif  // DECGROUP_IO_HPP
