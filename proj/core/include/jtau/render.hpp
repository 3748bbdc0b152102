#pragma once
#include "jtau/formal.hpp"

namespace jtau {

/* Text forms. Lie elements render canonically as signed terms over the
   basis, "[a,b] - 2*[a,[a,b]]"; parse_lie reads the same grammar back. */
std::string lie_to_string(const LieElement& x);
std::string series_to_string(const TruncatedSeries& s);
std::string derivation_to_string(const Derivation& d);
std::string tail_to_string(const DerivationTail& t);
std::string aut0_to_string(const Aut0& f);

/* Machine forms: canonical JSON, exact coefficients as strings, keys
   sorted, no whitespace variation between runs. */
std::string lie_to_json(const LieElement& x);
std::string series_to_json(const TruncatedSeries& s);
std::string degree_to_json(const Degree& d);
std::string derivation_to_json(const Derivation& d);
std::string tail_to_json(const DerivationTail& t);
std::string report_to_json(const CheckReport& r);

/* Lie expressions over generator names:
     expr   := [sign] term ((+|-) term)*
     term   := rational [*] factor | rational | factor
     factor := name | "[" expr "," expr "]" | "(" expr ")"
   A bare rational is only the zero element "0". */
LieElement parse_lie(const AlphabetPtr& alpha, const Ring& ring, const std::string& text);

/* Expansion tails, one line per generator: "name -> lie-expr", rationals.
   Section markers "d1:"/"d2:" are permitted and ignored; generators without
   a line keep the standard tail (the bare generator class). */
Expansion parse_expansion_text(const AlphabetPtr& alpha, int cap, const std::string& text);
Expansion parse_expansion_file(const AlphabetPtr& alpha, int cap, const std::string& path);

/* Linear combination of words: terms joined by +/-, each a rational, a word
   in the word DSL, or rational * word. "1" is the identity word. */
GroupRingElem parse_group_ring(const AlphabetPtr& alpha, const std::string& text);

}  // namespace jtau
