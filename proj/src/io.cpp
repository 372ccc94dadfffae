#include "odeinv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "odeinv/parser.hpp"

namespace odeinv {

namespace {

nlohmann::json loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error(path + ": expected a JSON object");
  return j;
}

RatFunc field(const nlohmann::json& j, const std::string& key,
              const std::string& fallback = "0") {
  if (!j.contains(key)) return parseExpr(fallback);
  if (!j.at(key).is_string())
    throw std::runtime_error("key \"" + key + "\" must be a string expression");
  return parseExpr(j.at(key).get<std::string>());
}

}  // namespace

CubicODE readEquation(const std::string& path) {
  nlohmann::json j = loadJson(path);
  if (!j.contains("P") && !j.contains("Q") && !j.contains("R") && !j.contains("S"))
    throw std::runtime_error(path + ": equation file needs at least one of P, Q, R, S");
  return CubicODE{field(j, "P"), field(j, "Q"), field(j, "R"), field(j, "S")};
}

PointMap readMap(const std::string& path) {
  nlohmann::json j = loadJson(path);
  if (!j.contains("forward") || !j.contains("inverse"))
    throw std::runtime_error(path + ": map file needs \"forward\" and \"inverse\"");
  const auto& f = j.at("forward");
  const auto& i = j.at("inverse");
  PointMap m;
  m.fwdX = field(f, "xt");
  m.fwdY = field(f, "yt");
  m.invX = field(i, "x");
  m.invY = field(i, "y");
  return m;
}

std::string equationJson(const CubicODE& eq) {
  nlohmann::json j;
  j["P"] = eq.P.toString();
  j["Q"] = eq.Q.toString();
  j["R"] = eq.R.toString();
  j["S"] = eq.S.toString();
  return j.dump(2);
}

void writeEquation(const CubicODE& eq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << equationJson(eq) << "\n";
}

}  // namespace odeinv
