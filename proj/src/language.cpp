#include "subshift/language.hpp"

#include <algorithm>
#include <unordered_set>

#include "subshift/error.hpp"
#include "subshift/harvest.hpp"

namespace subshift {

std::string to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::substitution: return "substitution";
    case SourceKind::sturmian: return "sturmian";
    case SourceKind::sequence: return "sequence";
  }
  return "unknown";
}

LanguageTable::LanguageTable(Alphabet alphabet,
                             std::vector<std::vector<Word>> factors,
                             Provenance provenance)
    : alphabet_(std::move(alphabet)),
      factors_(std::move(factors)),
      provenance_(std::move(provenance)) {
  if (factors_.empty()) throw DomainError("language table needs max_length >= 1");
  const int top = max_length();
  index_.resize(factors_.size());
  for (int n = 1; n <= top; ++n) {
    const auto& level = factors_[n - 1];
    if (level.empty()) {
      throw DomainError("no factors of length " + std::to_string(n));
    }
    auto& idx = index_[n - 1];
    idx.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& w = level[i];
      if (static_cast<int>(w.size()) != n || !alphabet_.admits(w)) {
        throw DomainError("malformed factor at length " + std::to_string(n));
      }
      if (i > 0 && !(level[i - 1] < w)) {
        throw DomainError("factors of length " + std::to_string(n) +
                          " are not sorted and unique");
      }
      idx.emplace(w, static_cast<std::uint32_t>(i));
    }
  }

  for (int n = 2; n <= top; ++n) {
    const auto& below = index_[n - 2];
    for (const auto& w : factors_[n - 1]) {
      if (!below.count(w.substr(0, n - 1)) || !below.count(w.substr(1))) {
        throw DomainError("inconsistent table: a subword of '" +
                          alphabet_.decode(w) + "' is missing");
      }
    }
  }

  for (int n = 1; n < top; ++n) {
    std::unordered_set<Word> prefixes, suffixes;
    for (const auto& w : factors_[n]) {
      prefixes.insert(w.substr(0, n));
      suffixes.insert(w.substr(1));
    }
    for (const auto& w : factors_[n - 1]) {
      if (!prefixes.count(w) || !suffixes.count(w)) {
        throw DomainError("factor '" + alphabet_.decode(w) +
                          "' is not extendable on both sides");
      }
    }
  }

  strictly_growing_ = true;
  for (int n = 1; n < top; ++n) {
    if (factors_[n].size() <= factors_[n - 1].size()) strictly_growing_ = false;
  }
}

std::span<const Word> LanguageTable::factors(int n) const {
  if (n < 1 || n > max_length()) {
    throw DepthError("length " + std::to_string(n) + " outside table range 1.." +
                     std::to_string(max_length()));
  }
  return factors_[n - 1];
}

bool LanguageTable::contains(const Word& w) const { return index_of(w).has_value(); }

std::optional<std::uint32_t> LanguageTable::index_of(const Word& w) const {
  if (w.empty() || static_cast<int>(w.size()) > max_length()) return std::nullopt;
  const auto& idx = index_[w.size() - 1];
  auto it = idx.find(w);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

void LanguageTable::require_infinite(const char* operation) const {
  if (!strictly_growing_) {
    throw DomainError(std::string(operation) +
                      ": table violates p(n+1) > p(n); the source looks periodic");
  }
}

LanguageTable build_language(const Substitution& theta, int n_max,
                             const BuildOptions& options) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (!is_primitive(theta)) {
    throw DomainError("substitution is not primitive; its language need not be minimal");
  }
  const auto k = theta.alphabet().size();
  std::vector<Word> current;
  for (std::size_t a = 0; a < k; ++a) current.push_back(single_letter(static_cast<Letter>(a)));

  int steps = 0;
  for (;;) {
    if (steps >= options.iteration_cap) {
      throw CapExceeded("language of substitution did not stabilize within " +
                        std::to_string(options.iteration_cap) + " iterations");
    }
    auto next = options.parallel ? kernels::expand_windows(theta, current, n_max)
                                 : kernels::expand_windows_serial(theta, current, n_max);
    ++steps;
    if (next == current) break;
    current = std::move(next);
  }

  auto sets = options.parallel ? kernels::harvest_factors(current, n_max)
                               : kernels::harvest_factors_serial(current, n_max);
  Provenance prov;
  prov.kind = SourceKind::substitution;
  prov.description = "primitive substitution";
  prov.details = {{"rules", theta.to_text()},
                  {"stabilization_iterations", std::to_string(steps)}};
  return LanguageTable(theta.alphabet(), std::move(sets), std::move(prov));
}

LanguageTable build_language_from_sequence(const Alphabet& alphabet,
                                           const Word& prefix, int n_max,
                                           std::string description) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (static_cast<int>(prefix.size()) < n_max) {
    throw DomainError("prefix of length " + std::to_string(prefix.size()) +
                      " is shorter than n_max = " + std::to_string(n_max));
  }
  if (!alphabet.admits(prefix)) throw DomainError("prefix symbol outside alphabet");
  std::vector<Word> sources{prefix};
  auto reduced = kernels::reduce_sources(sources, n_max);
  Provenance prov;
  prov.kind = SourceKind::sequence;
  prov.description = std::move(description);
  prov.details = {{"prefix_length", std::to_string(prefix.size())}};
  prov.lower_approximation = true;
  return LanguageTable(alphabet, kernels::harvest_factors(reduced, n_max), std::move(prov));
}

int complexity(const LanguageTable& table, int n) {
  return static_cast<int>(table.factors(n).size());
}

int complexity_diff(const LanguageTable& table, int n) {
  if (n < 1 || n + 1 > table.max_length()) {
    throw DepthError("s(" + std::to_string(n) + ") needs p(" + std::to_string(n + 1) +
                     "), table max_length is " + std::to_string(table.max_length()));
  }
  return complexity(table, n + 1) - complexity(table, n);
}

namespace {

std::vector<Letter> extensions(const LanguageTable& table, const Word& w, Side side) {
  if (!table.contains(w)) {
    throw DomainError("word '" + table.alphabet().decode(w) + "' is not in the language");
  }
  if (static_cast<int>(w.size()) >= table.max_length()) {
    throw DepthError("extensions of a length-" + std::to_string(w.size()) +
                     " word need a deeper table");
  }
  std::vector<Letter> out;
  const auto k = table.alphabet().size();
  Word probe = side == Side::left ? "?" + w : w + "?";
  const std::size_t slot = side == Side::left ? 0 : w.size();
  for (std::size_t a = 0; a < k; ++a) {
    probe[slot] = static_cast<char>(a);
    if (table.contains(probe)) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

}  // namespace

std::vector<Letter> left_extensions(const LanguageTable& table, const Word& w) {
  return extensions(table, w, Side::left);
}

std::vector<Letter> right_extensions(const LanguageTable& table, const Word& w) {
  return extensions(table, w, Side::right);
}

std::vector<SpecialWord> special_words(const LanguageTable& table, int n, Side side) {
  if (n < 1 || n >= table.max_length()) {
    throw DepthError("special words of length " + std::to_string(n) +
                     " need max_length > n");
  }
  std::vector<SpecialWord> out;
  for (const auto& w : table.factors(n)) {
    auto ext = extensions(table, w, side);
    if (ext.size() >= 2) out.push_back({w, std::move(ext)});
  }
  return out;
}

CassaigneEstimate cassaigne_K(const LanguageTable& table, int probe_depth) {
  table.require_infinite("cassaigne_K");
  if (probe_depth < 1 || probe_depth + 1 > table.max_length()) {
    throw DepthError("cassaigne_K probe depth " + std::to_string(probe_depth) +
                     " needs max_length >= " + std::to_string(probe_depth + 1));
  }
  CassaigneEstimate est;
  est.probe_depth = probe_depth;
  for (int n = 1; n <= probe_depth; ++n) est.L_hat = std::max(est.L_hat, complexity_diff(table, n));
  est.K = std::max(est.L_hat, complexity(table, 1));
  return est;
}

}  // namespace subshift
