// Text grammar for polynomials:
//
//   poly      := [sign] term { sign term }
//   term      := coefficient [ ['*'] monomials ] | monomials
//   monomials := monomial { ['*'] monomial }
//   monomial  := var [ '^' positive-integer ]
//   coefficient := integer [ '/' integer ]
//
// Whitespace is ignored everywhere.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "invol/error.hpp"
#include "invol/poly.hpp"

namespace invol {
namespace {

class Parser {
 public:
  Parser(std::string_view text, VarNames names) : text_(text), names_(names) {}

  Poly parse() {
    std::vector<Poly::Term> terms;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (ch != '+' && ch != '-') throw SyntaxError(pos_, "expected '+' or '-'");
      ++pos_;
      terms.push_back(term(ch == '-'));
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(start, std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  // Returns 0 for x, 1 for y, -1 when no variable starts here.
  int variable() {
    skip_ws();
    for (int v = 0; v < 2; ++v) {
      std::string_view name = v == 0 ? names_.x : names_.y;
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return v;
      }
    }
    return -1;
  }

  bool starts_variable() {
    skip_ws();
    for (std::string_view name : {names_.x, names_.y})
      if (text_.substr(pos_, name.size()) == name) return true;
    return false;
  }

  void monomials(Monomial& m) {
    while (true) {
      std::size_t at = pos_;
      int v = variable();
      if (v < 0) throw SyntaxError(at, "expected variable");
      std::uint64_t e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t epos = pos_;
        Integer n = digits("exponent");
        if (n <= 0 || n > kMaxVarDegree) throw SyntaxError(epos, "exponent out of range");
        e = n.get_ui();
      }
      (v == 0 ? m.i : m.j) += static_cast<std::uint32_t>(e);
      if (m.i > kMaxVarDegree || m.j > kMaxVarDegree)
        throw SyntaxError(at, "exponent out of range");
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (!starts_variable()) return;
    }
  }

  Poly::Term term(bool negative) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected term");
    Rat c = 1;
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits("coefficient");
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t dpos = pos_;
        den = digits("denominator");
        if (den == 0) throw SyntaxError(dpos, "zero denominator");
      }
      c = Rat(num, den);
      c.canonicalize();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        monomials(m);
      } else if (starts_variable()) {
        monomials(m);
      }
    } else {
      monomials(m);
    }
    if (negative) c = -c;
    return {m, c};
  }

  std::string_view text_;
  VarNames names_;
  std::size_t pos_ = 0;
};

void put_monomial(std::ostringstream& os, Monomial m, VarNames names) {
  bool first = true;
  auto put = [&](std::string_view name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << name;
    if (e > 1) os << '^' << e;
    first = false;
  };
  put(names.x, m.i);
  put(names.y, m.j);
}

}  // namespace

Poly parse_poly(std::string_view text, VarNames names) {
  return Parser(text, names).parse();
}

std::string render(const Poly& p, VarNames names) {
  if (p.is_zero()) return "0";
  std::vector<const Poly::Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Poly::Term* a, const Poly::Term* b) {
    if (a->m.i != b->m.i) return a->m.i > b->m.i;
    return a->m.j > b->m.j;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    bool negative = sgn(t->c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    Rat mag = abs(t->c);
    if (t->m.degree() == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      put_monomial(os, t->m, names);
    }
  }
  return os.str();
}

}  // namespace invol
