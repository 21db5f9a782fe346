#pragma once

// Text grammars shared by the CLI and the JSON wire formats.
//
//   rational := ['+'|'-'] digits ['/' digits]
//   element  := rational [('+'|'-') rational 'w'] | rational 'w'
//   place    := 'p:' digits                      (a prime of Q)
//             | 'd:' int ',p:' digits [',i:' digits]   (factor i over p in Q(sqrt d))
//
// Spaces are allowed around '+'/'-' and before 'w'.

#include <string>

#include "adelekit/number_field.hpp"

namespace adelekit {

Rat parse_rational(const std::string& text);
FieldElement parse_element(const std::string& text);

struct PlaceSpec {
  bool rational = true;
  Int d;  // meaningful when !rational
  Int p;
  int index = 0;
};

PlaceSpec parse_place_spec(const std::string& text);

// Resolves the spec into a concrete place, factoring p if needed.
FinitePlace parse_finite_place(const std::string& text);

// The field a place spec lives over.
NumberField field_of_spec(const PlaceSpec& spec);

}  // namespace adelekit
