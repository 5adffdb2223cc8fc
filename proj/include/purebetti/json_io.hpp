#ifndef PUREBETTI_JSON_IO_HPP
#define PUREBETTI_JSON_IO_HPP

#include <json.hpp>

#include "purebetti/decomposition.hpp"
#include "purebetti/diagram.hpp"
#include "purebetti/hilbert.hpp"
#include "purebetti/hk.hpp"
#include "purebetti/oracle.hpp"

// JSON encodings of the library's value types. Rationals are always
// strings ("n" or "p/q"); readers also accept JSON integers. Malformed
// input throws Error(InvalidJson).
namespace purebetti::json {

using nlohmann::json;

json parse(std::string_view text);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const DegreeSequence& d);
DegreeSequence degree_sequence_from_json(const json& j);

// {"entries":[{"i":0,"j":0,"v":"1"}, ...]}; the reader also takes the bare array.
json to_json(const BettiTable& t);
BettiTable betti_table_from_json(const json& j);

// exponent -> rational string
json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const json& j);

// {"numerator":{...},"pole_order":r}
json to_json(const HilbertSeries& h);
HilbertSeries hilbert_series_from_json(const json& j);

// {"n":3,"generators":[[{"exp":[1,1,0],"c":"1"}], ...]}
json to_json(const HomogeneousIdeal& ideal);
HomogeneousIdeal ideal_from_json(const json& j);

json to_json(const HKReport& r);
json to_json(const Thm2Report& r);
json to_json(const CyclicClassification& c);
json to_json(const CmSufficiency& v);
json to_json(const Decomposition& d);
json to_json(const std::vector<DecompositionTerm>& terms);
json to_json(const PureBetti& p);
json to_json(const ModuleFacts& f);

}  // namespace purebetti::json

#endif
