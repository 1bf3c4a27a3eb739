#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sclab/collection.hpp"
#include "sclab/equivalence.hpp"
#include "sclab/functor.hpp"
#include "sclab/poset.hpp"

namespace sclab {

using json = nlohmann::json;

// One record of a batch run; verdicts are one of PASS, FAIL, EVIDENCE_PASS,
// MISMATCH, VACUOUS, UNKNOWN.
struct CheckRecord {
    std::string check_id;
    json inputs;
    std::string verdict;
    json witnesses;
    double wall_ms = 0;
};

struct SuiteResult {
    std::vector<CheckRecord> records;
    bool all_expected() const;
};

json to_json(const CheckRecord& r);
json to_json(const SuiteResult& s);
SuiteResult suite_from_json(const json& j);

json to_json(const HomologyReport& h);
json collection_json(const Collection& C);
json to_json(const EvidenceReport& r);
json to_json(const SharpnessReport& r);
json to_json(const ContractionCertificate& c);

std::string verdict_of_evidence(const EvidenceReport& r);

}  // namespace sclab
