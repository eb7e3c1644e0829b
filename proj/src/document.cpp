#include "favorable/document.hpp"

namespace favorable {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) {
      throw ParseError(std::string("\"") + key + "\" must hold strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

RankMatrix int_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array of rows");
  }
  RankMatrix out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) {
      throw ParseError(std::string("\"") + key + "\" rows must be arrays");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string("\"") + key + "\" entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ProfileDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");

  ProfileDocument doc;
  doc.allocations = string_list(j, "allocations");
  doc.individuals = string_list(j, "individuals");
  if (j.contains("ranks")) doc.ranks = int_matrix(j, "ranks");
  if (j.contains("assignment")) {
    const json& a = j.at("assignment");
    if (!a.is_object()) throw ParseError("\"assignment\" must be an object");
    doc.assignment = ProfileDocument::AssignmentPart{
        string_list(a, "widgets"), int_matrix(a, "private_ranks")};
  }
  if (j.contains("social")) {
    const json& s = j.at("social");
    if (!s.is_object()) throw ParseError("\"social\" must be an object");
    doc.social = ProfileDocument::SocialPart{int_matrix(s, "ranks")};
  }
  if (doc.ranks.has_value() == doc.assignment.has_value()) {
    throw ParseError("exactly one of \"ranks\" and \"assignment\" is required");
  }
  if (doc.social && !doc.assignment) {
    throw ParseError("\"social\" requires \"assignment\"");
  }
  return doc;
}

json document_to_json(const ProfileDocument& doc) {
  json j = json::object();
  if (!doc.allocations.empty()) j["allocations"] = doc.allocations;
  if (!doc.individuals.empty()) j["individuals"] = doc.individuals;
  if (doc.ranks) j["ranks"] = *doc.ranks;
  if (doc.assignment) {
    json a = json::object();
    if (!doc.assignment->widgets.empty()) a["widgets"] = doc.assignment->widgets;
    a["private_ranks"] = doc.assignment->private_ranks;
    j["assignment"] = std::move(a);
  }
  if (doc.social) j["social"] = {{"ranks", doc.social->ranks}};
  return j;
}

PreferenceProfile document_profile(const ProfileDocument& doc) {
  if (!doc.ranks) {
    throw Error(ErrorKind::InvalidArgument, "document has no \"ranks\"");
  }
  PreferenceProfile p = validate_profile(*doc.ranks);
  if (!doc.allocations.empty()) p = p.with_labels(doc.allocations);
  return p;
}

AssignmentInstance document_instance(const ProfileDocument& doc) {
  if (!doc.assignment) {
    throw Error(ErrorKind::InvalidArgument, "document has no \"assignment\"");
  }
  return AssignmentInstance::from_ranks(doc.assignment->private_ranks);
}

LexProfile document_lex_profile(const ProfileDocument& doc) {
  AssignmentInstance inst = document_instance(doc);
  if (!doc.social) return LexProfile::individualistic(std::move(inst));
  return LexProfile::make(std::move(inst), doc.social->ranks);
}

json witness_to_json(const PsiWitness& psi,
                     const PreferenceProfile& labels_from) {
  json j = json::array();
  for (const auto& [x, y] : psi.mapping) {
    j.push_back({{"from", x.value},
                 {"to", y.value},
                 {"from_label", labels_from.label(x)},
                 {"to_label", labels_from.label(y)}});
  }
  return j;
}

json census_to_json(const oracle::CensusReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"claim", v.claim}, {"first", v.first}, {"second", v.second}});
  }
  return {{"num_individuals", report.num_individuals},
          {"num_allocations", report.num_allocations},
          {"strict_only", report.strict_only},
          {"total_profiles", report.total_profiles},
          {"maximal_ids", report.maximal_ids},
          {"upper_bound_ids", report.upper_bound_ids},
          {"minimal_ids", report.minimal_ids},
          {"violations", std::move(violations)}};
}

}  // namespace favorable
