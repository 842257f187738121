#pragma once

// JSON encodings: an Eisenstein integer is [a, b]; a matrix is
// {"entries": [[[a, b], ...], ...]}. Integers that do not fit in 64 bits are
// written as decimal strings and accepted back in either form.

#include <json.hpp>

#include "su21/eisenstein.hpp"
#include "su21/matgroup.hpp"
#include "su21/weightdenom.hpp"

namespace su21 {

nlohmann::json integer_to_json(const mpz_class& n);
// Throws ParseError.
mpz_class integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Eisenstein& z);
Eisenstein eisenstein_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupMatrix& g);
GroupMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DenominatorReport& r);

}  // namespace su21
