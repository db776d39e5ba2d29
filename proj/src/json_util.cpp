#include "streamsub/json_util.hpp"

#include <fstream>

#include "streamsub/errors.hpp"

namespace streamsub {

namespace {

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo = BigInt(INT64_MIN), hi = BigInt(INT64_MAX);
  if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw PreconditionError("rational component is not an integer: " + j.dump());
    }
  }
  throw PreconditionError("rational component must be integer or string: " + j.dump());
}

}  // namespace

Json rat_to_json(const Rat& r) {
  return Json{{"num", bigint_to_json(numerator(r))},
              {"den", bigint_to_json(denominator(r))}};
}

Rat rat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw PreconditionError("rational must be {num, den}: " + j.dump());
  BigInt den = bigint_from_json(j.at("den"));
  if (den == 0) throw PreconditionError("rational with zero denominator");
  return Rat(bigint_from_json(j.at("num")), den);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace streamsub
