#include "tt/serialize.hpp"

#include <limits>

namespace tt {

Json integer_to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_num();
  throw Error(ErrorKind::InvalidInput, "expected an integer in JSON, got " + j.dump());
}

Json to_json(const LengthSet& ls) {
  Json j = Json::object();
  const auto fields = ls.fields();
  for (std::size_t i = 0; i < LengthSet::kNames.size(); ++i) {
    j[std::string(LengthSet::kNames[i])] = to_string(*fields[i]);
  }
  return j;
}

LengthSet length_set_from_json(const Json& j) {
  LengthSet ls;
  const auto fields = ls.fields();
  for (std::size_t i = 0; i < LengthSet::kNames.size(); ++i) {
    *fields[i] = parse_surd(j.at(std::string(LengthSet::kNames[i])).get<std::string>());
  }
  return ls;
}

Json to_json(const IntegralityReport& report) {
  Json j = Json::object();
  j["tier"] = std::string(to_string(report.tier));
  if (report.delta) j["delta"] = integer_to_json(*report.delta);
  if (report.r1 && report.r2) {
    Json r = Json::array({integer_to_json(*report.r1), integer_to_json(*report.r2)});
    if (report.r3) r.push_back(integer_to_json(*report.r3));
    j["r"] = r;
  }
  if (report.t) j["t"] = integer_to_json(*report.t);
  if (report.rational_lengths) {
    Json lengths = Json::object();
    for (std::size_t i = 0; i < RationalLengths::kNames.size(); ++i) {
      lengths[std::string(RationalLengths::kNames[i])] = to_string(report.rational_lengths->values[i]);
    }
    j["lengths"] = lengths;
  }
  return j;
}

IntegralityReport integrality_report_from_json(const Json& j) {
  IntegralityReport report;
  report.tier = parse_tier(j.at("tier").get<std::string>());
  if (j.contains("delta")) report.delta = integer_from_json(j["delta"]);
  if (j.contains("r")) {
    const Json& r = j["r"];
    report.r1 = integer_from_json(r.at(0));
    report.r2 = integer_from_json(r.at(1));
    if (r.size() > 2) report.r3 = integer_from_json(r.at(2));
  }
  if (j.contains("t")) report.t = integer_from_json(j["t"]);
  if (j.contains("lengths")) {
    RationalLengths lengths;
    for (std::size_t i = 0; i < RationalLengths::kNames.size(); ++i) {
      lengths.values[i] = parse_rational(j["lengths"].at(std::string(RationalLengths::kNames[i])).get<std::string>());
    }
    report.rational_lengths = lengths;
  }
  return report;
}

Json to_json(const FullConfig& config) {
  Json j = Json::object();
  j["m"] = integer_to_json(config.params.m);
  j["n"] = integer_to_json(config.params.n);
  j["t"] = integer_to_json(config.t);
  j["r"] = Json::array({integer_to_json(config.triple.r1), integer_to_json(config.triple.r2),
                        integer_to_json(config.triple.r3)});
  j["delta"] = integer_to_json(config.delta);
  j["R1"] = integer_to_json(config.R1);
  j["R2"] = integer_to_json(config.R2);
  for (std::size_t i = 0; i < IntegerLengths::kNames.size(); ++i) {
    j[std::string(IntegerLengths::kNames[i])] = integer_to_json(config.lengths.values[i]);
  }
  j["d1_radicand"] = integer_to_json(config.d1_radicand);
  j["d2_radicand"] = integer_to_json(config.d2_radicand);
  return j;
}

FullConfig full_config_from_json(const Json& j) {
  FullConfig config;
  config.params = {integer_from_json(j.at("m")), integer_from_json(j.at("n"))};
  config.t = integer_from_json(j.at("t"));
  const Json& r = j.at("r");
  config.triple = {integer_from_json(r.at(0)), integer_from_json(r.at(1)), integer_from_json(r.at(2))};
  config.delta = integer_from_json(j.at("delta"));
  config.R1 = integer_from_json(j.at("R1"));
  config.R2 = integer_from_json(j.at("R2"));
  for (std::size_t i = 0; i < IntegerLengths::kNames.size(); ++i) {
    config.lengths.values[i] = integer_from_json(j.at(std::string(IntegerLengths::kNames[i])));
  }
  config.d1_radicand = integer_from_json(j.at("d1_radicand"));
  config.d2_radicand = integer_from_json(j.at("d2_radicand"));
  return config;
}

Json to_json(const Scene& scene) {
  Json j = Json::object();
  j["R1"] = scene.R1;
  j["R2"] = scene.R2;
  j["omega"] = scene.omega;
  j["phi"] = scene.phi;
  Json points = Json::object();
  for (const auto& [name, p] : scene.points()) points[name] = Json::array({p.x, p.y});
  j["points"] = points;
  return j;
}

std::string csv_header() {
  std::string out = "m,n,t,r1,r2,r3,delta,R1,R2";
  for (auto name : IntegerLengths::kNames) out += "," + std::string(name);
  return out + ",d1_radicand,d2_radicand";
}

std::string csv_row(const FullConfig& c) {
  std::string out;
  for (const Integer* v : {&c.params.m, &c.params.n, &c.t, &c.triple.r1, &c.triple.r2, &c.triple.r3, &c.delta,
                           &c.R1, &c.R2}) {
    out += v->get_str() + ",";
  }
  for (const Integer& v : c.lengths.values) out += v.get_str() + ",";
  return out + c.d1_radicand.get_str() + "," + c.d2_radicand.get_str();
}

}  // namespace tt
