#pragma once

#include <json.hpp>

#include "subshift/block_code.hpp"
#include "subshift/language.hpp"
#include "subshift/recurrence.hpp"
#include "subshift/special.hpp"

namespace subshift {

/// {alphabet: [...], max_length: N, factors: {"1": [...], ...}, provenance: {...}}
nlohmann::json to_json(const LanguageTable& table);
LanguageTable table_from_json(const nlohmann::json& doc);

/// {memory, anticipation, rule: [[window_word, output_letter], ...]}
nlohmann::json to_json(const SlidingBlockCode& code);
SlidingBlockCode code_from_json(const nlohmann::json& doc, const TablePtr& table);

nlohmann::json to_json(const EndomorphismReport& report);
nlohmann::json to_json(const BranchPointCertificate& cert, const Alphabet& alphabet);
nlohmann::json to_json(const BranchCensus& census);
nlohmann::json to_json(const AsymptoticCensus& census);
nlohmann::json to_json(const Rational& value);

}  // namespace subshift
