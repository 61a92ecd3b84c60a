// subshift: command-line reports over substitution, Sturmian and explicit
// prefix shifts.
//
// Exit status: 0 ok, 1 usage or parse error, 2 verification failure,
// 3 budget or iteration cap exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subshift/block_code.hpp"
#include "subshift/catalog.hpp"
#include "subshift/claims.hpp"
#include "subshift/error.hpp"
#include "subshift/json_io.hpp"
#include "subshift/recurrence.hpp"
#include "subshift/search.hpp"
#include "subshift/special.hpp"
#include "subshift/sturmian.hpp"
#include "subshift/version.hpp"

using nlohmann::json;
using namespace subshift;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------------
// Sources

struct SourceFlags {
  std::string rules;
  std::string cf;
  std::string prefix_file;
  std::string alphabet;
  std::string builtin;
};

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--rules", f.rules, "substitution rules file (one `a -> acb` per line)");
  cmd->add_option("--cf", f.cf, "Sturmian partial quotients, e.g. 1,1,1 (last one repeats)");
  cmd->add_option("--prefix-file", f.prefix_file, "file holding an explicit prefix");
  cmd->add_option("--alphabet", f.alphabet, "symbol order for --prefix-file (default: sorted)");
  cmd->add_option("--builtin", f.builtin, "fibonacci | thue-morse | acb | morse-mirror");
}

constexpr int kMirrorExponent = 14;

class Source {
 public:
  explicit Source(const SourceFlags& f) {
    const int given = !f.rules.empty() + !f.cf.empty() + !f.prefix_file.empty() + !f.builtin.empty();
    if (given != 1) {
      throw UsageError("give exactly one of --rules, --cf, --prefix-file, --builtin");
    }
    if (!f.alphabet.empty() && f.prefix_file.empty()) {
      throw UsageError("--alphabet only applies to --prefix-file");
    }
    if (!f.rules.empty()) {
      kind_ = "rules";
      value_ = f.rules;
      content_ = read_file(f.rules);
      theta_ = parse_substitution(content_);
    } else if (!f.cf.empty()) {
      kind_ = "cf";
      value_ = content_ = f.cf;
      cf_ = ContinuedFraction::parse(f.cf);
    } else if (!f.prefix_file.empty()) {
      kind_ = "prefix-file";
      value_ = f.prefix_file;
      content_ = read_file(f.prefix_file);
      load_prefix(f.alphabet);
    } else {
      kind_ = "builtin";
      value_ = content_ = f.builtin;
      if (f.builtin == "fibonacci") {
        theta_ = catalog::fibonacci();
      } else if (f.builtin == "thue-morse") {
        theta_ = catalog::thue_morse();
      } else if (f.builtin == "acb") {
        theta_ = catalog::acb();
      } else if (f.builtin == "morse-mirror") {
        mirror_ = true;
      } else {
        throw UsageError("unknown builtin '" + f.builtin + "'");
      }
    }
  }

  const std::optional<Substitution>& substitution() const { return theta_; }
  bool is_mirror() const { return mirror_; }

  TablePtr table(int n_max) const {
    if (n_max < 1) throw UsageError("table depth must be >= 1");
    if (theta_) return share(build_language(*theta_, n_max));
    if (cf_) return share(sturmian_language(*cf_, n_max));
    if (mirror_) return morse_mirror_system(kMirrorExponent, n_max).table;
    return share(build_language_from_sequence(*alphabet_, prefix_, n_max, "prefix file " + value_));
  }

  /// A long word of the shift, used to scan occurrences.
  Word probe(std::size_t length) const {
    if (theta_) return catalog::fixed_point_prefix(*theta_, length).substr(0, length);
    if (cf_) {
      const auto tail = std::max<std::size_t>(cf_->quotients().size(), 64);
      return characteristic_word(cf_->with_periodic_tail(tail), length);
    }
    if (mirror_) {
      Word coded;
      for (char t : thue_morse_prefix(kMirrorExponent)) {
        coded += sturmian_alphabet().encode(t == 0 ? "1001" : "1101");
      }
      return coded.substr(0, std::min(length, coded.size()));
    }
    return prefix_.substr(0, std::min(length, prefix_.size()));
  }

  json provenance() const {
    return {{"kind", kind_}, {"value", value_}, {"fnv1a64", hex(fnv1a(content_))}};
  }

 private:
  static TablePtr share(LanguageTable t) { return std::make_shared<const LanguageTable>(std::move(t)); }

  void load_prefix(const std::string& order) {
    std::string text;
    std::istringstream in(content_);
    for (std::string line; std::getline(in, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
      }
    }
    if (text.empty()) throw UsageError("prefix file '" + value_ + "' holds no symbols");
    std::string symbols = order;
    if (symbols.empty()) {
      std::set<char> seen(text.begin(), text.end());
      symbols.assign(seen.begin(), seen.end());
    }
    alphabet_ = Alphabet(symbols);
    prefix_ = alphabet_->encode(text);
  }

  std::string kind_, value_, content_;
  std::optional<Substitution> theta_;
  std::optional<ContinuedFraction> cf_;
  std::optional<Alphabet> alphabet_;
  Word prefix_;
  bool mirror_ = false;
};

// ---------------------------------------------------------------------------
// Output

enum class Format { tsv, json };

struct Report {
  std::string command;
  json params = json::object();
  json source;
};

json header(const Report& r) {
  json h{{"tool", "subshift"}, {"version", kVersion}, {"command", r.command}, {"parameters", r.params}};
  if (!r.source.is_null()) h["source"] = r.source;
  return h;
}

void print_tsv_header(const Report& r) {
  std::cout << "# subshift " << kVersion << " " << r.command << "\n";
  if (!r.source.is_null()) {
    std::cout << "# source\t" << r.source["kind"].get<std::string>() << "\t"
              << r.source["value"].get<std::string>() << "\tfnv1a64=" << r.source["fnv1a64"].get<std::string>()
              << "\n";
  }
  for (const auto& [k, v] : r.params.items()) std::cout << "# " << k << "\t" << v.dump() << "\n";
}

void print_json(const Report& r, json body) {
  json out = header(r);
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  std::cout << out.dump(2) << "\n";
}

std::string letters(const std::vector<Letter>& ls, const Alphabet& ab) {
  std::string s;
  for (auto l : ls) s += ab.symbol(l);
  return s;
}

json census_counts(const BranchCensus& census) {
  json counts = json::object();
  for (const auto& [k, e] : census.counts) counts[std::to_string(k)] = e.count;
  return counts;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_complexity(const Source& src, int depth, Format fmt) {
  if (depth < 1) throw UsageError("--depth must be >= 1");
  const auto table = src.table(depth + 1);
  Report r{"complexity", {{"depth", depth}, {"table_max_length", depth + 1}}, src.provenance()};
  const auto est = cassaigne_K(*table, depth);

  int max_s = 0;
  json rows = json::array();
  for (int n = 1; n <= depth; ++n) {
    const int s = complexity_diff(*table, n);
    max_s = std::max(max_s, s);
    rows.push_back({{"n", n}, {"p", complexity(*table, n)}, {"s", s}});
  }
  if (fmt == Format::json) {
    print_json(r, {{"rows", rows},
                   {"max_s", max_s},
                   {"cassaigne", {{"L_hat", est.L_hat}, {"K", est.K}, {"probe_depth", est.probe_depth},
                                  {"empirical", est.empirical}}},
                   {"strictly_growing", table->strictly_growing()}});
    return kOk;
  }
  print_tsv_header(r);
  std::cout << "n\tp\ts\n";
  for (const auto& row : rows) std::cout << row["n"] << "\t" << row["p"] << "\t" << row["s"] << "\n";
  std::cout << "# max_s\t" << max_s << "\n# L_hat\t" << est.L_hat << "\n# K\t" << est.K
            << "\n# L_hat is an empirical lower bound for sup s(n)\n";
  return kOk;
}

int cmd_special(const Source& src, int length, const std::string& side, Format fmt) {
  if (length < 1) throw UsageError("--length must be >= 1");
  if (side != "left" && side != "right" && side != "both") throw UsageError("--side is left, right or both");
  const auto table = src.table(length + 1);
  const auto& ab = table->alphabet();
  Report r{"special", {{"length", length}, {"side", side}}, src.provenance()};
  json rows = json::array();
  for (Side s : {Side::left, Side::right}) {
    const char* name = s == Side::left ? "left" : "right";
    if (side != "both" && side != name) continue;
    for (const auto& sw : special_words(*table, length, s)) {
      rows.push_back({{"side", name}, {"word", ab.decode(sw.word)}, {"extensions", letters(sw.extensions, ab)}});
    }
  }
  if (fmt == Format::json) {
    print_json(r, {{"special_words", rows}, {"s", complexity_diff(*table, length)}});
    return kOk;
  }
  print_tsv_header(r);
  std::cout << "side\tword\textensions\n";
  for (const auto& row : rows) {
    std::cout << row["side"].get<std::string>() << "\t" << row["word"].get<std::string>() << "\t"
              << row["extensions"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_branch(const Source& src, int depth, int lookahead, int max_period, Format fmt) {
  if (depth < 1) throw UsageError("--depth must be >= 1");
  if (lookahead == 0) lookahead = 4 * depth;
  if (lookahead < depth) throw UsageError("--lookahead must be >= --depth");
  const auto table = src.table(lookahead + 1);
  const auto& ab = table->alphabet();
  const auto tree = left_special_tree(*table, depth, lookahead);

  std::vector<BranchPointCertificate> certs;
  if (const auto& theta = src.substitution()) {
    certs = certify_branch_periodic(*theta, *table, max_period);
    const auto suffix = certify_branch_suffix(*theta, *table, max_period);
    certs.insert(certs.end(), suffix.begin(), suffix.end());
  }
  const auto census = branch_census(tree, certs);
  const auto asym = asymptotic_upper_bound(census);
  const int bound = aut_upper_bound(census);

  Report r{"branch",
           {{"depth", depth}, {"lookahead", lookahead}, {"max_period", max_period}},
           src.provenance()};
  json chains = json::array();
  for (std::size_t i = 0; i < tree.chains.size(); ++i) {
    const auto& c = tree.chains[i];
    json entry{{"prefix", ab.decode(c.prefix)},
               {"order", c.order()},
               {"extensions", letters(c.extensions, ab)},
               {"witnesses", c.witnesses.size()},
               {"stable_from", c.stable_from}};
    entry["certificate"] = census.chain_certificate[i] ? json(*census.chain_certificate[i]) : json(nullptr);
    chains.push_back(std::move(entry));
  }
  json cert_json = json::array();
  for (const auto& c : certs) {
    json j = to_json(c, ab);
    if (const auto& theta = src.substitution()) j["replayed_length"] = replay_certificate(c, *theta, *table);
    cert_json.push_back(std::move(j));
  }

  if (fmt == Format::json) {
    json doc = to_json(census);
    print_json(r, {{"depth", depth},
                   {"counts", census_counts(census)},
                   {"census", doc},
                   {"chains", chains},
                   {"certificates", cert_json},
                   {"unmatched_certificates", census.unmatched_certificates},
                   {"aut_bound", bound},
                   {"asymptotic_upper_bound", to_json(asym)}});
    return kOk;
  }
  print_tsv_header(r);
  std::cout << "prefix\torder\textensions\twitnesses\tcertificate\n";
  for (const auto& c : chains) {
    std::cout << c["prefix"].get<std::string>() << "\t" << c["order"] << "\t"
              << c["extensions"].get<std::string>() << "\t" << c["witnesses"] << "\t"
              << (c["certificate"].is_null() ? std::string("-") : c["certificate"].dump()) << "\n";
  }
  std::cout << "# counts\t" << census_counts(census).dump() << "\n# aut_bound\t" << bound
            << "\n# asymptotic_upper_bound\t" << asym.upper_bound_total << "\n# two_sided_bound\t"
            << asym.two_sided_bound << "\n";
  return kOk;
}

int cmd_return_words(const Source& src, const std::string& u_text, int max_u, std::size_t probe_length,
                     int table_depth, Format fmt) {
  if (u_text.empty() == (max_u == 0)) throw UsageError("give exactly one of --u and --max-u");
  const auto table = src.table(table_depth);
  const Word probe = src.probe(probe_length);
  const auto& ab = table->alphabet();
  Report r{"return-words",
           {{"probe_length", probe.size()}, {"table_max_length", table_depth}},
           src.provenance()};

  if (!u_text.empty()) {
    r.params["u"] = u_text;
    const Word u = ab.encode(u_text);
    json words = json::array();
    for (const auto& w : return_words(*table, probe, u)) words.push_back(ab.decode(w));
    if (fmt == Format::json) {
      print_json(r, {{"return_words", words}});
    } else {
      print_tsv_header(r);
      std::cout << "return_word\tlength\n";
      for (const auto& w : words) std::cout << w.get<std::string>() << "\t" << w.get<std::string>().size() << "\n";
    }
    return kOk;
  }

  r.params["max_u"] = max_u;
  const auto est = recurrence_constant(*table, probe, max_u);
  const auto K = est.K_hat.ceil();
  json body{{"K_hat", to_json(est.K_hat)},
            {"witness", ab.decode(est.witness)},
            {"lower_bound_only", est.lower_bound_only},
            {"K", K},
            {"s_bound", cassaigne_s_bound(K)},
            {"aut_bound", lr_aut_bound(K)}};
  if (fmt == Format::json) {
    print_json(r, body);
    return kOk;
  }
  print_tsv_header(r);
  std::cout << "K_hat\t" << est.K_hat.num << "/" << est.K_hat.den << "\nwitness\t" << ab.decode(est.witness)
            << "\nK\t" << K << "\ns_bound\t" << cassaigne_s_bound(K) << "\naut_bound\t" << lr_aut_bound(K)
            << "\n# K_hat is a lower bound for the recurrence constant\n";
  return kOk;
}

int cmd_bounds(std::int64_t K, int alphabet_size, Format fmt) {
  if (K < 1) throw UsageError("--K must be >= 1");
  Report r{"bounds", {{"K", K}}, nullptr};
  json body{{"K", K},
            {"s_bound", cassaigne_s_bound(K)},
            {"aut_bound", lr_aut_bound(K)},
            {"root_index_bound", lr_aut_bound(K)}};
  if (alphabet_size > 0) {
    r.params["alphabet_size"] = alphabet_size;
    body["substitution_root_bound"] = substitution_root_bound(alphabet_size);
  }
  if (fmt == Format::json) {
    print_json(r, body);
    return kOk;
  }
  print_tsv_header(r);
  for (const auto& [k, v] : body.items()) std::cout << k << "\t" << v << "\n";
  return kOk;
}

int cmd_search(const Source& src, int radius, int depth, std::uint64_t budget, const std::string& emit,
               bool serial, Format fmt) {
  if (radius < 0) throw UsageError("--radius must be >= 0");
  if (depth < radius + 1) throw UsageError("--depth must be > --radius");
  const auto table = src.table(depth + radius);
  SearchOptions opts;
  opts.node_budget = budget;
  opts.parallel = !serial;
  const auto result = enumerate_endomorphisms(table, radius, depth, opts);

  Report r{"search-endo",
           {{"radius", radius}, {"depth", depth}, {"node_budget", budget}, {"nodes", result.nodes}},
           src.provenance()};
  json codes = json::array();
  for (const auto& rep : result.reports) {
    json j = to_json(rep);
    const auto inverse = find_inverse(rep.code, 2 * radius, InverseMode::one_sided);
    j["invertible"] = inverse.has_value();
    codes.push_back(std::move(j));
  }
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw UsageError("cannot write '" + emit + "'");
    json doc = header(r);
    doc["codes"] = codes;
    out << doc.dump(2) << "\n";
  }
  if (fmt == Format::json) {
    print_json(r, {{"codes", codes}});
    return kOk;
  }
  print_tsv_header(r);
  std::cout << "index\tanticipation\tshift_power\tinvertible\n";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& c = codes[i];
    std::cout << i << "\t" << c["code"]["anticipation"] << "\t"
              << (c["shift_power_equivalent"].is_null() ? std::string("-") : c["shift_power_equivalent"].dump())
              << "\t" << (c["invertible"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_verify(const Source& src, const std::string& code_path, int depth, int k_max, int n_max, Format fmt) {
  json doc;
  if (!code_path.empty()) {
    try {
      doc = json::parse(read_file(code_path));
    } catch (const json::parse_error& e) {
      throw UsageError("code file '" + code_path + "': " + e.what());
    }
    if (doc.contains("code")) doc = doc["code"];
  } else if (!src.is_mirror()) {
    throw UsageError("--code is required unless the source is --builtin morse-mirror");
  }
  const int memory = doc.is_null() ? 0 : doc.value("memory", 0);
  const int anticipation = doc.is_null() ? 3 : doc.value("anticipation", 0);
  const int window = memory + 1 + anticipation;
  if (depth < window) throw UsageError("--depth must be at least the code window");
  const int needed = std::max({depth + window - 1, std::max(k_max * anticipation, n_max) + k_max * memory + 1});

  TablePtr table;
  std::optional<SlidingBlockCode> code;
  if (doc.is_null()) {
    auto mirror = morse_mirror_system(kMirrorExponent, needed);
    table = mirror.table;
    code = mirror.phi;
  } else {
    table = src.table(needed);
    code = code_from_json(doc, table);
  }
  const auto& ab = table->alphabet();
  Report r{"verify", {{"depth", depth}, {"k_max", k_max}, {"n_max", n_max}}, src.provenance()};
  if (!code_path.empty()) r.params["code"] = code_path;

  const auto outcome = verify_endomorphism(*code, depth);
  json body{{"code", to_json(*code)}, {"verified", outcome.verified()}};
  if (outcome.verified()) {
    auto report = *outcome.report;
    report.root_relation = find_root_relation(*code, k_max, n_max);
    body["report"] = to_json(report);
  } else {
    body["counterexample"] = {{"factor", ab.decode(outcome.witness->factor)},
                              {"image", ab.decode(outcome.witness->image)}};
  }
  if (fmt == Format::json) {
    print_json(r, body);
  } else {
    print_tsv_header(r);
    std::cout << "verified\t" << (outcome.verified() ? "yes" : "no") << "\n";
    if (outcome.verified()) {
      const auto& rep = body["report"];
      std::cout << "verified_depth\t" << rep["verified_depth"] << "\nshift_power\t"
                << (rep["shift_power_equivalent"].is_null() ? std::string("-") : rep["shift_power_equivalent"].dump())
                << "\nroot_relation\t"
                << (rep["root_relation"].is_null() ? std::string("-") : rep["root_relation"].dump()) << "\n";
    } else {
      std::cout << "counterexample\t" << body["counterexample"]["factor"].get<std::string>() << " -> "
                << body["counterexample"]["image"].get<std::string>() << "\n";
    }
  }
  return outcome.verified() ? kOk : kVerifyFailed;
}

int cmd_paper_check(const std::vector<std::string>& only, Format fmt) {
  const auto results = claims::run_all(only);
  Report r{"paper-check", {{"only", only}}, nullptr};
  bool all = true;
  json rows = json::array();
  for (const auto& res : results) {
    all = all && res.passed();
    json checks = json::array();
    for (const auto& c : res.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    rows.push_back({{"criterion", res.number},
                    {"group", res.group},
                    {"title", res.title},
                    {"passed", res.passed()},
                    {"seconds", res.seconds},
                    {"time_limit", res.time_limit},
                    {"checks", checks}});
  }
  if (fmt == Format::json) {
    print_json(r, {{"results", rows}, {"passed", all}});
  } else {
    print_tsv_header(r);
    for (const auto& res : results) {
      std::cout << (res.passed() ? "PASS" : "FAIL") << "\t" << res.group << "\t" << res.title << "\t"
                << std::fixed << std::setprecision(2) << res.seconds << "s\n";
      for (const auto& c : res.checks) {
        std::cout << "  " << (c.passed ? "ok" : "FAIL") << "\t" << c.name;
        if (!c.detail.empty()) std::cout << "\t" << c.detail;
        std::cout << "\n";
      }
    }
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor complexity, branch points and block-code automorphisms of minimal shifts"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "tsv";
  app.add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  SourceFlags src_flags;
  int complexity_depth = 0, branch_depth = 30, search_depth = 12, verify_depth = 20;
  int length = 0, lookahead = 0, max_period = 3, radius = 2, max_u = 0, table_depth = 64;
  int k_max = 4, n_max = 8, alphabet_size = 0;
  std::int64_t K = 0;
  std::size_t probe_length = 200000;
  std::uint64_t budget = 100'000'000;
  std::string side = "left", u_text, emit, code_path;
  bool serial = false;
  std::vector<std::string> only;

  auto* complexity = app.add_subcommand("complexity", "p(n), s(n) and Cassaigne's K up to a depth");
  add_source_flags(complexity, src_flags);
  complexity->add_option("--depth", complexity_depth, "largest n")->required();

  auto* special = app.add_subcommand("special", "left/right special factors of one length");
  add_source_flags(special, src_flags);
  special->add_option("--length", length, "factor length")->required();
  special->add_option("--side", side, "left, right or both");

  auto* branch = app.add_subcommand("branch", "branch-point census, certificates and automorphism bound");
  add_source_flags(branch, src_flags);
  branch->add_option("--depth", branch_depth, "chain prefix length")->capture_default_str();
  branch->add_option("--lookahead", lookahead, "witness length (default 4 * depth)");
  branch->add_option("--max-period", max_period, "largest substitution power probed for certificates");

  auto* returns = app.add_subcommand("return-words", "return words and the empirical recurrence constant");
  add_source_flags(returns, src_flags);
  returns->add_option("--u", u_text, "list the return words to this factor");
  returns->add_option("--max-u", max_u, "estimate K over factors up to this length");
  returns->add_option("--probe-length", probe_length, "length of the scanned word");
  returns->add_option("--table-depth", table_depth, "factor table depth");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds for recurrence constant K");
  bounds->add_option("--K", K, "recurrence constant")->required();
  bounds->add_option("--alphabet-size", alphabet_size, "also report the k^2 root bound");

  auto* search = app.add_subcommand("search-endo", "enumerate one-sided block-code endomorphisms");
  add_source_flags(search, src_flags);
  search->add_option("--radius", radius, "largest anticipation");
  search->add_option("--depth", search_depth, "verification depth")->capture_default_str();
  search->add_option("--node-budget", budget, "search node limit");
  search->add_option("--emit-json", emit, "also write the codes to this JSON file");
  search->add_flag("--serial", serial, "use the serial search");

  auto* verify = app.add_subcommand("verify", "depth-bounded endomorphism check and root relation");
  add_source_flags(verify, src_flags);
  verify->add_option("--code", code_path, "code JSON {memory, anticipation, rule}");
  verify->add_option("--depth", verify_depth, "verification depth")->capture_default_str();
  verify->add_option("--k-max", k_max, "largest root index tried");
  verify->add_option("--n-max", n_max, "largest shift power tried");

  auto* check = app.add_subcommand("paper-check", "run the built-in result checks");
  check->add_option("--only", only, "restrict to groups: " + [] {
    std::string s;
    for (const auto& g : claims::groups()) s += (s.empty() ? "" : ", ") + g;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  const Format fmt = format == "json" ? Format::json : Format::tsv;

  try {
    if (*bounds) return cmd_bounds(K, alphabet_size, fmt);
    if (*check) return cmd_paper_check(only, fmt);
    const Source src(src_flags);
    if (*complexity) return cmd_complexity(src, complexity_depth, fmt);
    if (*special) return cmd_special(src, length, side, fmt);
    if (*branch) return cmd_branch(src, branch_depth, lookahead, max_period, fmt);
    if (*returns) return cmd_return_words(src, u_text, max_u, probe_length, table_depth, fmt);
    if (*search) return cmd_search(src, radius, search_depth, budget, emit, serial, fmt);
    if (*verify) return cmd_verify(src, code_path, verify_depth, k_max, n_max, fmt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
