#include "subshift/sturmian.hpp"

#include <charconv>

#include "subshift/error.hpp"

namespace subshift {

ContinuedFraction::ContinuedFraction(std::vector<int> quotients)
    : quotients_(std::move(quotients)) {
  if (quotients_.empty()) throw DomainError("continued fraction needs at least one quotient");
  for (int q : quotients_) {
    if (q < 1) throw DomainError("partial quotients must be >= 1");
  }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw DomainError("bad partial quotient '" + std::string(item) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return ContinuedFraction(std::move(out));
}

ContinuedFraction ContinuedFraction::with_periodic_tail(std::size_t count) const {
  auto q = quotients_;
  while (q.size() < count) q.push_back(quotients_.back());
  return ContinuedFraction(std::move(q));
}

const Alphabet& sturmian_alphabet() {
  static const Alphabet binary("01");
  return binary;
}

Word characteristic_word(const ContinuedFraction& cf, std::size_t length) {
  if (length < 1) throw DomainError("length must be >= 1");
  Word older = single_letter(1);  // s_{-1}
  Word newer = single_letter(0);  // s_0
  for (int a : cf.quotients()) {
    if (newer.size() >= length) break;
    Word next;
    next.reserve(newer.size() * static_cast<std::size_t>(a) + older.size());
    for (int i = 0; i < a; ++i) next += newer;
    next += older;
    older = std::move(newer);
    newer = std::move(next);
  }
  if (newer.size() < length) {
    throw DomainError("continued fraction exhausted at standard word length " +
                      std::to_string(newer.size()) + " < " + std::to_string(length));
  }
  newer.resize(length);
  return newer;
}

namespace {

std::string join(const std::vector<int>& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(q[i]);
  }
  return s;
}

}  // namespace

LanguageTable sturmian_language(const ContinuedFraction& cf, int n_max,
                                const SturmianOptions& options) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  std::size_t length = 8 * static_cast<std::size_t>(n_max) + 64;
  for (int attempt = 0; attempt < options.retry_cap; ++attempt, length *= 2) {
    // Standard words grow at least like Fibonacci numbers, so this many
    // quotients always reach `length`.
    auto extended = cf.with_periodic_tail(2 * 64 + cf.quotients().size());
    Word prefix = characteristic_word(extended, length);
    try {
      auto table = build_language_from_sequence(sturmian_alphabet(), prefix, n_max,
                                                "Sturmian characteristic word");
      bool exact = true;
      for (int n = 1; n <= n_max && exact; ++n) exact = complexity(table, n) == n + 1;
      if (!exact) continue;
      Provenance prov = table.provenance();
      prov.kind = SourceKind::sturmian;
      prov.description = "Sturmian characteristic word (standard-word recursion)";
      prov.details.emplace_back("quotients", join(cf.quotients()));
      prov.details.emplace_back("tail", "last quotient repeated");
      prov.lower_approximation = false;  // certified by p(n) = n + 1
      std::vector<std::vector<Word>> sets;
      for (int n = 1; n <= n_max; ++n) {
        auto f = table.factors(n);
        sets.emplace_back(f.begin(), f.end());
      }
      return LanguageTable(sturmian_alphabet(), std::move(sets), std::move(prov));
    } catch (const DomainError&) {
      // Prefix too short to make every factor bi-extendable; retry longer.
    }
  }
  throw CapExceeded("Sturmian table failed p(n) = n + 1 after " +
                    std::to_string(options.retry_cap) + " prefix doublings");
}

}  // namespace subshift
