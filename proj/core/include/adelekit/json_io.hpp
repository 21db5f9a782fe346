#pragma once

// JSON wire formats. Every encoder here has a decoder and round-trips on
// canonical values; the CLI emits these verbatim.

#include <json.hpp>

#include "adelekit/topology.hpp"

namespace adelekit {

using Json = nlohmann::json;

// {"zero":true} or {"exp":n}
Json mult_int_zero_to_json(const MultIntZero& g);
MultIntZero mult_int_zero_from_json(const Json& j);

// {"p":5,"e":1,"f":1,"hnf":[[1,0],[2,5]],"gen2":{"a":"-2","b":"1"}}
Json prime_ideal_to_json(const PrimeIdeal& P);
Json factorization_to_json(const std::vector<std::pair<PrimeIdeal, int>>& factors);

// {"val":0,"digits":[2,1,1],"prec":3}; digits are [a,b] pairs when f = 2.
Json local_element_to_json(const LocalElement& x);

// {"global":"1/2","corrections":{"p:3":"1/3"}}; quadratic fields add "d".
Json finite_adele_to_json(const FiniteAdele& x);
FiniteAdele finite_adele_from_json(const Json& j);

// {"center":"1/3","gamma":2}
Json ball_to_json(const Ball& b);
Ball ball_from_json(const FinitePlace& v, const Json& j);

// {"opens":{"p:3":[{"center":"1/3","gamma":2}]}}; quadratic fields add "d".
Json basic_open_to_json(const BasicOpen& U);
BasicOpen basic_open_from_json(const Json& j);

// {"kind":"scaled","place":"p:3","center":"0","m":3}
// {"kind":"product","T":["p:3"],"blocks":{"p:3":{...}}}; quadratic adds "d".
Json compact_cert_to_json(const CompactCert& cert);
CompactCert compact_cert_from_json(const Json& j);

Json place_set_to_json(const PlaceSet& S);

Json domain_error_to_json(const DomainError& e);

}  // namespace adelekit
