#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "glnq/counting.hpp"
#include "glnq/green.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

using json = nlohmann::json;

// Integer (or fraction) when the value is rational, otherwise the canonical cyclotomic form.
std::string display(const CyclotomicSum& x);

json to_json(const Partition& mu);
Partition partition_from_json(const json& j);

// [{"poly": [coeffs low first], "text": "z+1", "partition": [2,1]}, ...]
json to_json(const Fq& F, const ClassIndex& idx);
ClassIndex class_index_from_json(const json& j);

// {"modulus": M, "terms": [[exponent, "coeff"], ...], "display": ..., "approx": [re, im]}
json to_json(const CyclotomicSum& x);
CyclotomicSum cyclotomic_from_json(const json& j);

// {"n", "k", "mu", "q", "value" (decimal string), "method", "box"}
json to_json(const CountResult& r);
CountResult count_from_json(const json& j);

// {"n", "k", "residue", "coefficients" (rational strings), "verdict", "witness"?, "samples"}
json to_json(const FitResult& r);
FitResult fit_from_json(const json& j);

json to_json(const std::vector<LimitRow>& rows);

json to_json(const Fq& F, const CharacterTable& t);
// Header "class" then one column per class index; one line per character.
std::string to_csv(const Fq& F, const CharacterTable& t);
std::string to_pretty(const Fq& F, const CharacterTable& t);

std::string to_string(Verdict v);

}  // namespace glnq
