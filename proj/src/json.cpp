#include "figeight/json.hpp"

#include <limits>
#include <stdexcept>

namespace figeight {

namespace {

long long checked(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("value " + v.str() + " does not fit a JSON integer");
  }
  return v.convert_to<long long>();
}

}  // namespace

Json to_json(const ContactStructureCert& c) {
  Json evaluations = Json::array();
  for (const auto& e : c.certificate.evaluations) evaluations.push_back(to_string(e));
  Json out;
  out["family"] = to_string(c.family());
  out["evaluations"] = std::move(evaluations);
  out["scale"] = checked(c.certificate.scale);
  out["stein"] = to_string(c.stein);
  out["strong"] = c.strong ? "Yes" : "No";
  out["universally_tight"] = to_string(c.universally_tight);
  return out;
}

Json to_json(const ClassificationResult& r) {
  Json count;
  count["kind"] = to_string(r.count.kind);
  if (r.count.kind != TightCount::Kind::infinite) count["value"] = checked(r.count.value);
  Json structures = Json::array();
  for (const auto& c : r.structures) structures.push_back(to_json(c));
  Json out;
  out["coefficient"] = r.coefficient.str();
  out["geometry"] = to_string(r.geometry);
  out["count"] = std::move(count);
  out["structures"] = std::move(structures);
  return out;
}

Json to_json(const ThickeningPath& p) {
  Json slopes = Json::array();
  for (const auto& s : p.slopes) slopes.push_back(s.str());
  Json out;
  out["path"] = std::move(slopes);
  out["reached_minus_three"] = p.reached_minus_three;
  out["reached_infinity"] = p.reached_infinity;
  return out;
}

Json to_json(const LegendrianChain& c) {
  Json components = Json::array();
  for (const auto& comp : c.components) {
    Json o;
    o["tb"] = to_string(comp.tb);
    o["rot"] = to_string(comp.rot);
    o["budget"] = checked(comp.budget);
    components.push_back(std::move(o));
  }
  return components;
}

Json to_json(const StabilizationTuple& t) {
  Json out = Json::array();
  for (const auto& r : t.rots) out.push_back(to_string(r));
  return out;
}

}  // namespace figeight
