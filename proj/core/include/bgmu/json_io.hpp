// JSON and DOT serialization. Rationals travel as "p/q" strings in lowest
// terms with positive denominator ("p" when the denominator is 1); integers
// as decimal strings. Output key order is fixed, so equal inputs produce
// byte-identical output.
#pragma once

#include "bgmu/kottwitz.hpp"
#include "bgmu/strata.hpp"

#include <string>

namespace bgmu {

std::string rat_string(const Rat& r);
std::string int_string(const Int& v);

/// Parse "a,b,c" into an integer vector.
IntVec parse_int_vector(const std::string& text);

/// Root datum from a JSON object with keys: label, rank, simple_roots,
/// simple_coroots, weight_lifts (entries "p/q"), galois_generators
/// (row-major integer matrices). Throws std::invalid_argument on bad input.
RootDatum root_datum_from_json_string(const std::string& text);
std::string root_datum_to_json_string(const RootDatum& rd);

std::string strata_json(const RootDatum& rd, const KottwitzSet& set,
                        bool strict_integral);
std::string cells_json(const RootDatum& rd, const KottwitzSet& set);
std::string poset_dot(const RootDatum& rd, const KottwitzSet& set,
                      bool bun_order);
std::string b_of_lambda_json(const RootDatum& rd, const IntVec& lambda);
std::string minimal_lambda_json(const RootDatum& rd, const SigmaConjClass& c);

}  // namespace bgmu
