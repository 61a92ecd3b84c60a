#include "subshift/block_code.hpp"

#include <algorithm>
#include <bit>

#include "subshift/error.hpp"

namespace subshift {
namespace {

const LanguageTable& same_table(const SlidingBlockCode& a, const SlidingBlockCode& b) {
  if (a.table() != b.table() && !(*a.table() == *b.table())) {
    throw DomainError("codes are defined over different languages");
  }
  return *a.table();
}

void require_length(const LanguageTable& table, int length, const char* what) {
  if (length > table.max_length()) {
    throw DepthError(std::string(what) + " needs factors of length " + std::to_string(length) +
                     ", table max_length is " + std::to_string(table.max_length()));
  }
}

}  // namespace

SlidingBlockCode::SlidingBlockCode(TablePtr table, int memory, int anticipation,
                                   std::vector<Letter> rule)
    : table_(std::move(table)), memory_(memory), anticipation_(anticipation), rule_(std::move(rule)) {
  if (!table_) throw DomainError("code needs a language table");
  if (memory_ < 0 || anticipation_ < 0) throw DomainError("memory and anticipation must be >= 0");
  require_length(*table_, window(), "code window");
  if (rule_.size() != table_->factors(window()).size()) {
    throw DomainError("rule must cover exactly the window-length factors");
  }
  for (auto out : rule_) {
    if (out >= table_->alphabet().size()) throw DomainError("rule output outside alphabet");
  }
}

SlidingBlockCode SlidingBlockCode::from_function(TablePtr table, int memory, int anticipation,
                                                 const std::function<Letter(const Word&)>& rule) {
  if (!table) throw DomainError("code needs a language table");
  require_length(*table, memory + 1 + anticipation, "code window");
  std::vector<Letter> values;
  for (const auto& w : table->factors(memory + 1 + anticipation)) values.push_back(rule(w));
  return SlidingBlockCode(std::move(table), memory, anticipation, std::move(values));
}

Letter SlidingBlockCode::output(const Word& window_word) const {
  auto idx = static_cast<int>(window_word.size()) == window() ? table_->index_of(window_word)
                                                               : std::nullopt;
  if (!idx) {
    throw DomainError("window '" + table_->alphabet().decode(window_word) +
                      "' is outside the rule domain");
  }
  return rule_[*idx];
}

bool SlidingBlockCode::operator==(const SlidingBlockCode& other) const {
  return table_ == other.table_ && memory_ == other.memory_ &&
         anticipation_ == other.anticipation_ && rule_ == other.rule_;
}

bool SlidingBlockCode::operator<(const SlidingBlockCode& other) const {
  if (window() != other.window()) return window() < other.window();
  if (memory_ != other.memory_) return memory_ < other.memory_;
  return rule_ < other.rule_;
}

Word ApplyFn::operator()(const SlidingBlockCode& code, const Word& w) const {
  const auto win = static_cast<std::size_t>(code.window());
  if (w.size() < win) {
    throw DomainError("word shorter than the code window (" + std::to_string(win) + ")");
  }
  Word out(w.size() - win + 1, '\0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<char>(code.output(w.substr(i, win)));
  }
  return out;
}

SlidingBlockCode shift_power(int n, const TablePtr& table) {
  if (n < 0) throw DomainError("shift power must be >= 0");
  if (!table) throw DomainError("code needs a language table");
  require_length(*table, n + 1, "shift_power");
  return SlidingBlockCode::from_function(table, 0, n, [n](const Word& w) { return letter_at(w, n); });
}

SlidingBlockCode letter_map(const TablePtr& table, const std::vector<Letter>& image) {
  if (!table || image.size() != table->alphabet().size()) {
    throw DomainError("letter map needs one image per letter");
  }
  return SlidingBlockCode::from_function(table, 0, 0,
                                         [&](const Word& w) { return image[letter_at(w, 0)]; });
}

SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner) {
  const auto& table = same_table(outer, inner);
  const int memory = outer.memory() + inner.memory();
  const int anticipation = outer.anticipation() + inner.anticipation();
  require_length(table, memory + 1 + anticipation, "compose");
  return SlidingBlockCode::from_function(inner.table(), memory, anticipation, [&](const Word& w) {
    Word mid = apply(inner, w);
    if (!table.contains(mid)) {
      throw DomainError("inner image '" + table.alphabet().decode(mid) + "' of '" +
                        table.alphabet().decode(w) + "' leaves the language");
    }
    return outer.output(mid);
  });
}

SlidingBlockCode code_power(const SlidingBlockCode& code, int k) {
  if (k < 1) throw DomainError("code power must be >= 1");
  SlidingBlockCode power = code;
  for (int i = 1; i < k; ++i) power = compose(code, power);
  return power;
}

bool equals(const SlidingBlockCode& a, const SlidingBlockCode& b) {
  const auto& table = same_table(a, b);
  const int memory = std::max(a.memory(), b.memory());
  const int anticipation = std::max(a.anticipation(), b.anticipation());
  const int length = memory + 1 + anticipation;
  require_length(table, length, "equals");
  const auto offset_a = static_cast<std::size_t>(memory - a.memory());
  const auto offset_b = static_cast<std::size_t>(memory - b.memory());
  for (const auto& w : table.factors(length)) {
    if (a.output(w.substr(offset_a, a.window())) != b.output(w.substr(offset_b, b.window()))) {
      return false;
    }
  }
  return true;
}

VerifyOutcome verify_endomorphism(const SlidingBlockCode& code, int depth) {
  const auto& table = *code.table();
  if (depth < code.window()) {
    throw DomainError("verification depth must be at least the window length");
  }
  require_length(table, depth + code.window() - 1, "verify_endomorphism");
  VerifyOutcome outcome;
  for (int n = 1; n <= depth; ++n) {
    for (const auto& w : table.factors(n + code.window() - 1)) {
      Word image = apply(code, w);
      if (!table.contains(image)) {
        outcome.witness = Counterexample{w, std::move(image)};
        return outcome;
      }
    }
  }
  outcome.report = EndomorphismReport{code, depth, shift_power_match(code), std::nullopt};
  if (outcome.report->shift_power_equivalent) {
    outcome.report->root_relation = std::pair{1, *outcome.report->shift_power_equivalent};
  }
  return outcome;
}

std::optional<int> shift_power_match(const SlidingBlockCode& code) {
  for (int n = 0; n <= code.anticipation(); ++n) {
    if (equals(code, shift_power(n, code.table()))) return n;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_root_relation(const SlidingBlockCode& code, int k_max,
                                                      int n_max) {
  const auto& table = *code.table();
  const int needed = std::max(k_max * code.anticipation(), n_max) + k_max * code.memory() + 1;
  require_length(table, needed, "find_root_relation");
  std::optional<SlidingBlockCode> power;
  for (int k = 1; k <= k_max; ++k) {
    power = power ? compose(code, *power) : code;
    for (int n = 0; n <= n_max; ++n) {
      if (equals(*power, shift_power(n, code.table()))) return std::pair{k, n};
    }
  }
  return std::nullopt;
}

namespace {

// Codes d of anticipation `anticipation` with d o code = sigma^shift, as a
// partial rule (-1 = unconstrained); nullopt on a conflict.
std::optional<std::vector<int>> forced_inverse_rule(const SlidingBlockCode& code, int anticipation,
                                                    int shift) {
  const auto& table = *code.table();
  const int width = anticipation + 1;
  std::vector<int> rule(table.factors(width).size(), -1);
  for (const auto& v : table.factors(code.window() + anticipation)) {
    auto idx = table.index_of(apply(code, v));
    if (!idx) return std::nullopt;
    const int target = letter_at(v, static_cast<std::size_t>(code.memory() + shift));
    if (rule[*idx] == -1) {
      rule[*idx] = target;
    } else if (rule[*idx] != target) {
      return std::nullopt;
    }
  }
  return rule;
}

constexpr std::size_t kMaxFreeAssignments = 4096;

}  // namespace

std::optional<InverseWitness> find_inverse(const SlidingBlockCode& code, int max_anticipation,
                                           InverseMode mode) {
  const auto& table = *code.table();
  const auto k = table.alphabet().size();
  require_length(table, code.window() + max_anticipation, "find_inverse");
  for (int a = 0; a <= max_anticipation; ++a) {
    const int max_shift = mode == InverseMode::one_sided ? 0 : code.anticipation() + a;
    for (int left = 0; left <= max_shift; ++left) {
      auto partial = forced_inverse_rule(code, a, left);
      if (!partial) continue;
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < partial->size(); ++i) {
        if ((*partial)[i] == -1) free.push_back(i);
      }
      std::size_t combos = 1;
      for (std::size_t i = 0; i < free.size() && combos <= kMaxFreeAssignments; ++i) combos *= k;
      if (combos > kMaxFreeAssignments) continue;

      for (std::size_t c = 0; c < combos; ++c) {
        std::vector<Letter> rule(partial->size());
        std::size_t digits = c;
        for (std::size_t i = 0; i < partial->size(); ++i) {
          if ((*partial)[i] >= 0) rule[i] = static_cast<Letter>((*partial)[i]);
        }
        for (auto slot : free) {
          rule[slot] = static_cast<Letter>(digits % k);
          digits /= k;
        }
        SlidingBlockCode candidate(code.table(), 0, a, std::move(rule));
        std::optional<SlidingBlockCode> right;
        try {
          right = compose(code, candidate);
        } catch (const DomainError&) {
          continue;  // candidate image leaves the language
        }
        const int right_max = mode == InverseMode::one_sided ? 0 : right->anticipation();
        for (int r = 0; r <= right_max; ++r) {
          if (equals(*right, shift_power(r, code.table()))) {
            return InverseWitness{std::move(candidate), left, r};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Word thue_morse_prefix(int exponent) {
  if (exponent < 0 || exponent > 30) throw DomainError("Thue-Morse exponent out of range");
  const std::size_t length = std::size_t{1} << exponent;
  Word out(length, '\0');
  for (std::size_t i = 0; i < length; ++i) out[i] = static_cast<char>(std::popcount(i) & 1);
  return out;
}

MorseMirror morse_mirror_system(int depth_exponent, int max_length) {
  if (depth_exponent < 10) throw DomainError("Morse-mirror system needs depth_exponent >= 10");
  Alphabet binary("01");
  const Word block_b = binary.encode("1001");
  const Word block_c = binary.encode("1101");
  Word coded;
  const Word tm = thue_morse_prefix(depth_exponent);
  coded.reserve(tm.size() * 4);
  for (char t : tm) coded += t == 0 ? block_b : block_c;

  auto table = std::make_shared<const LanguageTable>(build_language_from_sequence(
      binary, coded, max_length,
      "Morse-mirror system: Thue-Morse prefix 2^" + std::to_string(depth_exponent) +
          " coded 0->1001, 1->1101"));
  auto phi = SlidingBlockCode::from_function(table, 0, 3, [&](const Word& w) -> Letter {
    if (w == block_b) return 1;
    if (w == block_c) return 0;
    return letter_at(w, 1);
  });
  return {table, std::move(phi)};
}

}  // namespace subshift
