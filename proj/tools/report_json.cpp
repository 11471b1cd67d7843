#include "report_json.hpp"

#include <stdexcept>

#include "ctc/parse.hpp"
#include "json.hpp"

namespace ctc::report_json {

namespace {

using nlohmann::json;

json quotient_to_json(const QuotientType& q) {
  return json{{"r", q.r}, {"b", q.b}};
}

QuotientType quotient_from_json(const json& j) {
  return QuotientType(j.at("r").get<long>(),
                      j.at("b").get<std::vector<long>>());
}

// Tags follow the fixed dispatch order.
const char* const kTagNames[] = {"I", "II", "III", "IV", "V",
                                 "VI", "VII", "VIII", "IX", "X"};

CaseTag tag_from_name(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (name == kTagNames[i]) return static_cast<CaseTag>(i);
  throw std::runtime_error("unknown case tag: " + name);
}

}  // namespace

std::string print(const ClassificationReport& r) {
  json j;
  j["schema"] = kSchema;
  j["cdv"] = r.cdv;
  j["case_tag"] = kTagNames[static_cast<int>(r.tag)];
  j["case"] = r.case_label;
  j["row"] = r.row;
  j["curve_ideal"] = r.curve_ideal;
  j["embedding_dim"] = r.embedding_dim;
  j["weights"] = json{{"entries", r.weights.entries},
                      {"denom", r.weights.denom}};
  json eqs = json::array();
  for (const auto& f : r.equations) eqs.push_back(to_string(f));
  j["equations"] = eqs;
  json sing = json::array();
  for (const auto& s : r.singularities) {
    sing.push_back(json{{"chart", s.chart},
                        {"label", s.label},
                        {"axial_weight", s.axial_weight},
                        {"quotient", quotient_to_json(s.quotient)},
                        {"notes", s.notes}});
  }
  j["singularities"] = sing;
  j["group"] = quotient_to_json(r.group);
  j["admissible"] = r.admissible;
  j["group_note"] = r.group_note;
  j["elephant"] = r.elephant;
  j["normalizations"] = r.normalizations;
  j["diagnostics"] = r.diagnostics;
  return j.dump(2);
}

ClassificationReport parse(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema").get<std::string>() != kSchema)
    throw std::runtime_error("unsupported report schema");
  ClassificationReport r;
  r.cdv = j.at("cdv").get<std::string>();
  r.tag = tag_from_name(j.at("case_tag").get<std::string>());
  r.case_label = j.at("case").get<std::string>();
  r.row = j.at("row").get<std::string>();
  r.curve_ideal = j.at("curve_ideal").get<std::vector<std::string>>();
  r.embedding_dim = j.at("embedding_dim").get<std::size_t>();
  r.weights.entries =
      j.at("weights").at("entries").get<std::vector<long>>();
  r.weights.denom = j.at("weights").at("denom").get<long>();
  // The ambient roster is the section x followed by the curve generators.
  std::vector<std::string> names{"x"};
  for (const auto& v : r.curve_ideal) names.push_back(v);
  const RosterPtr roster = make_roster(names);
  for (const auto& eq : j.at("equations"))
    r.equations.push_back(parse_polynomial(eq.get<std::string>(), roster));
  for (const auto& s : j.at("singularities")) {
    ChartSingularity c;
    c.chart = s.at("chart").get<std::string>();
    c.label = s.at("label").get<std::string>();
    c.axial_weight = s.at("axial_weight").get<int>();
    c.quotient = quotient_from_json(s.at("quotient"));
    c.notes = s.at("notes").get<std::vector<std::string>>();
    r.singularities.push_back(std::move(c));
  }
  r.group = quotient_from_json(j.at("group"));
  r.admissible = j.at("admissible").get<bool>();
  r.group_note = j.at("group_note").get<std::string>();
  r.elephant = j.at("elephant").get<std::string>();
  r.normalizations =
      j.at("normalizations").get<std::vector<std::string>>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return r;
}

bool equal(const ClassificationReport& a, const ClassificationReport& b) {
  return print(a) == print(b);
}

}  // namespace ctc::report_json
