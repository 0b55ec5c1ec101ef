#pragma once

// JSON encoding of exact integers: a JSON integer when the value fits in
// int64, a decimal string otherwise. Decoding accepts both.

#include "json.hpp"

#include "monoball/rational.hpp"

namespace monoball {

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

/// {num, den, pi_power}
nlohmann::json exact_to_json(const Rational& q, int pi_power);

}  // namespace monoball
