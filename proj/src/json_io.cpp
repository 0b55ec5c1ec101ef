#include "monoball/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace monoball {

nlohmann::json integer_to_json(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (z >= lo && z <= hi) return std::stoll(z.get_str());
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("integer_from_json: expected integer or decimal string");
}

nlohmann::json exact_to_json(const Rational& q, int pi_power) {
  return {{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}, {"pi_power", pi_power}};
}

}  // namespace monoball
