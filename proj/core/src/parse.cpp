#include "adelekit/parse.hpp"

#include <cctype>

namespace adelekit {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail(Errc::ParseError, "expected digits in '" + s + "' at position " +
                                               std::to_string(start));
    return s.substr(start, i - start);
  }
};

Rat parse_rat(Cursor& c) {
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  Int n(c.digits());
  Int d = 1;
  if (c.eat('/')) d = Int(c.digits());
  return make_rat(sign * n, d);
}

Int parse_int(Cursor& c) {
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  return sign * Int(c.digits());
}

}  // namespace

Rat parse_rational(const std::string& text) {
  Cursor c{text};
  Rat r = parse_rat(c);
  if (!c.done()) fail(Errc::ParseError, "trailing input in rational '" + text + "'");
  return r;
}

FieldElement parse_element(const std::string& text) {
  Cursor c{text};
  Rat first = parse_rat(c);
  if (c.done()) return FieldElement(first);
  if (c.eat('w')) {
    if (!c.done()) fail(Errc::ParseError, "trailing input in element '" + text + "'");
    return FieldElement{Rat(0), first};
  }
  int sign;
  if (c.eat('+'))
    sign = 1;
  else if (c.eat('-'))
    sign = -1;
  else
    fail(Errc::ParseError, "expected '+', '-' or 'w' in element '" + text + "'");
  Rat second = parse_rat(c);
  if (!c.eat('w')) fail(Errc::ParseError, "expected 'w' in element '" + text + "'");
  if (!c.done()) fail(Errc::ParseError, "trailing input in element '" + text + "'");
  return FieldElement{first, sign * second};
}

PlaceSpec parse_place_spec(const std::string& text) {
  Cursor c{text};
  PlaceSpec spec;
  if (c.eat('p')) {
    if (!c.eat(':')) fail(Errc::ParseError, "expected ':' after 'p' in '" + text + "'");
    spec.p = parse_int(c);
    if (!c.done()) fail(Errc::ParseError, "trailing input in place '" + text + "'");
    return spec;
  }
  if (!c.eat('d') || !c.eat(':'))
    fail(Errc::ParseError, "place must start with 'p:' or 'd:' in '" + text + "'");
  spec.rational = false;
  spec.d = parse_int(c);
  if (!c.eat(',') || !c.eat('p') || !c.eat(':'))
    fail(Errc::ParseError, "expected ',p:' in place '" + text + "'");
  spec.p = parse_int(c);
  if (c.eat(',')) {
    if (!c.eat('i') || !c.eat(':'))
      fail(Errc::ParseError, "expected 'i:' in place '" + text + "'");
    spec.index = static_cast<int>(to_i64(parse_int(c)));
  }
  if (!c.done()) fail(Errc::ParseError, "trailing input in place '" + text + "'");
  return spec;
}

NumberField field_of_spec(const PlaceSpec& spec) {
  return spec.rational ? NumberField::rationals() : NumberField::quadratic(spec.d);
}

FinitePlace parse_finite_place(const std::string& text) {
  PlaceSpec spec = parse_place_spec(text);
  return FinitePlace::over(field_of_spec(spec), spec.p, spec.index);
}

}  // namespace adelekit
