#include "ffh/text.hpp"

#include <cctype>

#include "ffh/error.hpp"

namespace ffh {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Field& f, int nvars) : s_(s), f_(f), nvars_(nvars) {}

  MultiPoly parse_all() {
    MultiPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  // Largest x-index mentioned, or -1.
  static int max_index(std::string_view s) {
    int best = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 'x') continue;
      std::size_t j = i + 1;
      int v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && v <= kMaxVars) v = v * 10 + (s[j++] - '0');
      if (j > i + 1) best = std::max(best, v);
    }
    return best;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly constant(const RingElement& c) const { return MultiPoly::constant(f_, nvars_, c); }

  MultiPoly sum() {
    MultiPoly acc(f_, nvars_);
    if (accept('-')) {
      acc -= term();
    } else {
      acc += term();
    }
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  std::uint64_t integer() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (accept('^')) base = base.pow(static_cast<int>(integer()));
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      MultiPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      if (v >= f_.characteristic()) {
        pos_ = start;
        fail("coefficient " + std::to_string(v) + " not in field " + f_.name());
      }
      return constant(RingElement::constant(f_, static_cast<std::uint32_t>(v)));
    }
    if (c == 't') {
      ++pos_;
      return constant(RingElement::t(f_));
    }
    if (c == 'u') {
      if (f_.degree() == 1) fail("'u' is only defined over non-prime fields");
      ++pos_;
      return constant(RingElement::constant(f_, f_.generator()));
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t digits = pos_;
      int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) && v <= kMaxVars) {
        v = v * 10 + (s_[pos_++] - '0');
      }
      if (pos_ == digits) fail("expected a variable index after 'x'");
      if (v >= nvars_) {
        pos_ = start;
        fail("variable x" + std::to_string(v) + " out of range");
      }
      return MultiPoly::variable(f_, nvars_, v);
    }
    std::size_t end = pos_;
    while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
    fail("unknown variable '" + std::string(s_.substr(pos_, std::max<std::size_t>(end - pos_, 1))) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Field f_;
  int nvars_;
};

std::string coefficient_text(const std::string& c) {
  return c.find('+') == std::string::npos ? c : "(" + c + ")";
}

template <class C>
std::string poly_text(const SparsePoly<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string mono = format_monomial(m, f.nvars());
    const std::string coef = c.to_string();
    if (mono.empty()) {
      out += coefficient_text(coef);
    } else if (c == CoeffTraits<C>::one(f.field())) {
      out += mono;
    } else {
      out += coefficient_text(coef) + "*" + mono;
    }
  }
  return out;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const Field& f, int nvars) {
  if (nvars <= 0) nvars = std::max(1, Parser::max_index(text) + 1);
  if (nvars > kMaxVars) throw ParseError("at most " + std::to_string(kMaxVars) + " variables are supported", 0);
  return Parser(text, f, nvars).parse_all();
}

RingElement parse_ring_element(std::string_view text, const Field& f) {
  const MultiPoly p = parse_poly(text, f, 1);
  if (p.degree() > 0) throw ParseError("expected an element of F_q[t]", 0);
  return p.coeff(Monomial{});
}

PolyMatrix parse_matrix(std::string_view text, const Field& f) {
  std::vector<PolyVector> rows;
  std::size_t offset = 0;
  for (;;) {
    const std::size_t semi = text.find(';', offset);
    const std::string_view row = text.substr(offset, semi == std::string_view::npos ? std::string_view::npos : semi - offset);
    PolyVector entries;
    std::size_t e = 0;
    for (;;) {
      const std::size_t comma = row.find(',', e);
      const std::string_view cell = row.substr(e, comma == std::string_view::npos ? std::string_view::npos : comma - e);
      try {
        entries.push_back(parse_ring_element(cell, f));
      } catch (const ParseError& err) {
        throw ParseError("bad matrix entry", offset + e + err.position());
      }
      if (comma == std::string_view::npos) break;
      e = comma + 1;
    }
    if (!rows.empty() && entries.size() != rows[0].size()) throw ParseError("ragged matrix rows", offset);
    rows.push_back(std::move(entries));
    if (semi == std::string_view::npos) break;
    offset = semi + 1;
  }
  return PolyMatrix::from_rows(f, rows);
}

std::string to_string(const MultiPoly& f) { return poly_text(f); }
std::string to_string(const ResiduePoly& f) { return poly_text(f); }

}  // namespace ffh
