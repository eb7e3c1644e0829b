#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "favorable/assignment.hpp"
#include "favorable/core.hpp"
#include "favorable/oracle.hpp"
#include "favorable/order.hpp"
#include "favorable/social.hpp"

namespace favorable {

/// JSON input document. Exactly one of `ranks` and `assignment` is present;
/// `social` only accompanies `assignment`.
struct ProfileDocument {
  struct AssignmentPart {
    std::vector<std::string> widgets;
    RankMatrix private_ranks;
    bool operator==(const AssignmentPart&) const = default;
  };
  struct SocialPart {
    RankMatrix ranks;  // per individual, over others_space order
    bool operator==(const SocialPart&) const = default;
  };

  std::vector<std::string> allocations;
  std::vector<std::string> individuals;
  std::optional<RankMatrix> ranks;
  std::optional<AssignmentPart> assignment;
  std::optional<SocialPart> social;

  bool operator==(const ProfileDocument&) const = default;
};

/// Malformed JSON or a document that violates the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProfileDocument parse_document(const std::string& text);
nlohmann::json document_to_json(const ProfileDocument& doc);

/// Validated profile of a `ranks` document, labeled with its allocations.
PreferenceProfile document_profile(const ProfileDocument& doc);
AssignmentInstance document_instance(const ProfileDocument& doc);
LexProfile document_lex_profile(const ProfileDocument& doc);

nlohmann::json witness_to_json(const PsiWitness& psi,
                               const PreferenceProfile& labels_from);
nlohmann::json census_to_json(const oracle::CensusReport& report);

}  // namespace favorable
