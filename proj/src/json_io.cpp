#include "subshift/json_io.hpp"

#include "subshift/error.hpp"

namespace subshift {

using nlohmann::json;

namespace {

json letters_json(const std::vector<Letter>& letters, const Alphabet& alphabet) {
  json out = json::array();
  for (auto a : letters) out.push_back(std::string(1, alphabet.symbol(a)));
  return out;
}

SourceKind kind_from_string(const std::string& s) {
  if (s == "substitution") return SourceKind::substitution;
  if (s == "sturmian") return SourceKind::sturmian;
  if (s == "sequence") return SourceKind::sequence;
  throw DomainError("unknown provenance kind '" + s + "'");
}

}  // namespace

json to_json(const LanguageTable& table) {
  const auto& alphabet = table.alphabet();
  json symbols = json::array();
  for (char c : alphabet.symbols()) symbols.push_back(std::string(1, c));
  json factors = json::object();
  for (int n = 1; n <= table.max_length(); ++n) {
    json level = json::array();
    for (const auto& w : table.factors(n)) level.push_back(alphabet.decode(w));
    factors[std::to_string(n)] = std::move(level);
  }
  const auto& prov = table.provenance();
  json details = json::object();
  for (const auto& [key, value] : prov.details) details[key] = value;
  return {{"alphabet", symbols},
          {"max_length", table.max_length()},
          {"factors", factors},
          {"provenance",
           {{"kind", to_string(prov.kind)},
            {"description", prov.description},
            {"lower_approximation", prov.lower_approximation},
            {"details", details}}}};
}

LanguageTable table_from_json(const json& doc) {
  try {
    std::string symbols;
    for (const auto& s : doc.at("alphabet")) {
      auto text = s.get<std::string>();
      if (text.size() != 1) throw DomainError("alphabet symbols must be single characters");
      symbols += text;
    }
    Alphabet alphabet(symbols);
    const int max_length = doc.at("max_length").get<int>();
    std::vector<std::vector<Word>> sets;
    for (int n = 1; n <= max_length; ++n) {
      std::vector<Word> level;
      for (const auto& w : doc.at("factors").at(std::to_string(n))) {
        level.push_back(alphabet.encode(w.get<std::string>()));
      }
      sets.push_back(std::move(level));
    }
    Provenance prov;
    if (doc.contains("provenance")) {
      const auto& p = doc.at("provenance");
      prov.kind = kind_from_string(p.value("kind", "sequence"));
      prov.description = p.value("description", "");
      prov.lower_approximation = p.value("lower_approximation", false);
      if (p.contains("details")) {
        for (const auto& [key, value] : p.at("details").items()) {
          prov.details.emplace_back(key, value.get<std::string>());
        }
      }
    }
    return LanguageTable(std::move(alphabet), std::move(sets), std::move(prov));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed language table JSON: ") + e.what());
  }
}

json to_json(const SlidingBlockCode& code) {
  const auto& table = *code.table();
  const auto& alphabet = table.alphabet();
  json rule = json::array();
  const auto domain = table.factors(code.window());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    rule.push_back({alphabet.decode(domain[i]), std::string(1, alphabet.symbol(code.rule()[i]))});
  }
  return {{"memory", code.memory()}, {"anticipation", code.anticipation()}, {"rule", rule}};
}

SlidingBlockCode code_from_json(const json& doc, const TablePtr& table) {
  try {
    const int memory = doc.at("memory").get<int>();
    const int anticipation = doc.at("anticipation").get<int>();
    const auto& alphabet = table->alphabet();
    const int window = memory + 1 + anticipation;
    if (window > table->max_length()) throw DepthError("code window exceeds the table depth");
    std::vector<int> rule(table->factors(window).size(), -1);
    for (const auto& entry : doc.at("rule")) {
      Word w = alphabet.encode(entry.at(0).get<std::string>());
      auto out = entry.at(1).get<std::string>();
      auto idx = table->index_of(w);
      if (!idx || static_cast<int>(w.size()) != window) {
        throw DomainError("rule entry '" + entry.at(0).get<std::string>() +
                          "' is not a window-length factor");
      }
      if (out.size() != 1 || !alphabet.code(out[0])) throw DomainError("bad rule output '" + out + "'");
      if (rule[*idx] != -1) throw DomainError("duplicate rule entry");
      rule[*idx] = *alphabet.code(out[0]);
    }
    std::vector<Letter> values;
    for (int v : rule) {
      if (v < 0) throw DomainError("rule does not cover every window-length factor");
      values.push_back(static_cast<Letter>(v));
    }
    return SlidingBlockCode(table, memory, anticipation, std::move(values));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed code JSON: ") + e.what());
  }
}

json to_json(const EndomorphismReport& report) {
  json out{{"code", to_json(report.code)}, {"verified_depth", report.verified_depth}};
  out["shift_power_equivalent"] =
      report.shift_power_equivalent ? json(*report.shift_power_equivalent) : json(nullptr);
  out["root_relation"] = report.root_relation
                             ? json{report.root_relation->first, report.root_relation->second}
                             : json(nullptr);
  return out;
}

json to_json(const BranchPointCertificate& cert, const Alphabet& alphabet) {
  json out;
  if (const auto* fp = std::get_if<PeriodicFixedPoint>(&cert.kind)) {
    out["variant"] = "PeriodicFixedPoint";
    out["period"] = fp->period;
    out["seed"] = std::string(1, alphabet.symbol(fp->seed));
  } else {
    const auto& cs = std::get<CommonSuffixLimit>(cert.kind);
    out["variant"] = "CommonSuffixLimit";
    out["period"] = cs.period;
    out["sharing_letters"] = letters_json(cs.sharing_letters, alphabet);
    out["head"] = alphabet.decode(cs.head);
  }
  out["point_prefix"] = alphabet.decode(cert.point_prefix);
  out["extension_letters"] = letters_json(cert.extension_letters, alphabet);
  out["order"] = cert.order();
  return out;
}

json to_json(const BranchCensus& census) {
  json counts = json::object();
  json certified = json::object();
  for (const auto& [k, e] : census.counts) {
    counts[std::to_string(k)] = e.count;
    certified[std::to_string(k)] = e.fully_certified();
  }
  return {{"depth", census.depth}, {"counts", counts}, {"certified", certified}};
}

json to_json(const AsymptoticCensus& census) {
  json sizes = json::object();
  for (const auto& [k, m] : census.class_size_counts) sizes[std::to_string(k)] = m;
  return {{"class_size_counts", sizes},
          {"upper_bound_total", census.upper_bound_total},
          {"two_sided_bound", census.two_sided_bound},
          {"exact", census.exact}};
}

json to_json(const Rational& value) {
  return {{"num", value.num}, {"den", value.den}, {"value", value.value()}};
}

}  // namespace subshift
