#include "subshift/special.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "subshift/error.hpp"

namespace subshift {
namespace {

bool is_subset(const std::vector<Letter>& small, const std::vector<Letter>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Letter> merge_letters(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::size_t common_suffix(const Word& x, const Word& y) {
  std::size_t n = 0;
  const std::size_t limit = std::min(x.size(), y.size());
  while (n < limit && x[x.size() - 1 - n] == y[y.size() - 1 - n]) ++n;
  return n;
}

// Maximal common suffix that is a proper suffix of both words.
std::size_t proper_common_suffix(const Word& x, const Word& y) {
  auto n = common_suffix(x, y);
  const auto cap = std::min(x.size(), y.size());
  return cap == 0 ? 0 : std::min(n, cap - 1);
}

constexpr std::size_t kImageLimit = std::size_t{1} << 24;

std::vector<Word> power_images(const Substitution& theta, const std::vector<Word>& base,
                               int extra) {
  std::vector<Word> out = base;
  for (auto& w : out) {
    w = iterate_word(theta, std::move(w), extra);
    if (w.size() > kImageLimit) {
      throw DomainError("substitution images grow past the probe limit; lower max_period");
    }
  }
  return out;
}

Word apply_images(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (char c : w) out += images[static_cast<Letter>(c)];
  return out;
}

// Merges certificates describing the same point prefix.
void add_certificate(std::vector<BranchPointCertificate>& out, BranchPointCertificate cert) {
  for (auto& existing : out) {
    if (existing.point_prefix != cert.point_prefix) continue;
    existing.extension_letters =
        merge_letters(existing.extension_letters, cert.extension_letters);
    if (auto* mine = std::get_if<CommonSuffixLimit>(&existing.kind)) {
      if (const auto* theirs = std::get_if<CommonSuffixLimit>(&cert.kind)) {
        mine->sharing_letters = merge_letters(mine->sharing_letters, theirs->sharing_letters);
      }
    }
    return;
  }
  out.push_back(std::move(cert));
}

bool letter_precedes(const LanguageTable& table, Letter a, const Word& point) {
  const auto len = std::min<std::size_t>(point.size(), table.max_length() - 1);
  return table.contains(single_letter(a) + point.substr(0, len));
}

}  // namespace

LeftSpecialTree left_special_tree(const LanguageTable& table, int depth, int lookahead) {
  table.require_infinite("left_special_tree");
  if (lookahead == 0) lookahead = 4 * depth;
  if (depth < 1 || lookahead < depth || lookahead >= table.max_length()) {
    throw DepthError("left_special_tree(depth " + std::to_string(depth) + ", lookahead " +
                     std::to_string(lookahead) + ") needs max_length > lookahead; table has " +
                     std::to_string(table.max_length()));
  }
  LeftSpecialTree tree;
  tree.depth = depth;
  tree.lookahead = lookahead;
  tree.levels.resize(static_cast<std::size_t>(lookahead));

  std::unordered_map<Word, int> previous;
  for (int n = 1; n <= lookahead; ++n) {
    std::unordered_map<Word, int> here;
    auto& level = tree.levels[n - 1];
    for (auto& sw : special_words(table, n, Side::left)) {
      LeftSpecialNode node{std::move(sw.word), std::move(sw.extensions), -1};
      if (n > 1) {
        auto it = previous.find(node.word.substr(0, n - 1));
        if (it == previous.end()) throw Error("left-special word with non-special prefix");
        node.parent = it->second;
        if (!is_subset(node.extensions, tree.levels[n - 2][it->second].extensions)) {
          throw Error("extension set grew along a prefix chain");
        }
      }
      here.emplace(node.word, static_cast<int>(level.size()));
      level.push_back(std::move(node));
    }
    previous = std::move(here);
  }

  // Deep nodes are sorted, so nodes sharing a depth-prefix are adjacent.
  const auto& deep = tree.levels[lookahead - 1];
  for (std::size_t i = 0; i < deep.size(); ++i) {
    const auto& node = deep[i];
    Word prefix = node.word.substr(0, depth);
    if (tree.chains.empty() || tree.chains.back().prefix != prefix) {
      tree.chains.push_back(BranchChain{prefix, {}, {}, 1});
    }
    auto& chain = tree.chains.back();
    chain.witnesses.push_back(node.word);
    if (node.extensions.size() > chain.extensions.size()) {
      chain.extensions = node.extensions;
      int stable = lookahead;
      int at = static_cast<int>(i);
      for (int n = lookahead; n >= 1; --n) {
        const auto& ancestor = tree.levels[n - 1][at];
        if (ancestor.extensions != node.extensions) break;
        stable = n;
        at = ancestor.parent;
      }
      chain.stable_from = stable;
    }
  }
  return tree;
}

std::vector<BranchPointCertificate> certify_branch_periodic(const Substitution& theta,
                                                            const LanguageTable& table,
                                                            int max_period) {
  std::vector<BranchPointCertificate> out;
  const auto k = theta.alphabet().size();
  const auto target = static_cast<std::size_t>(table.max_length());
  std::vector<Word> images;
  for (std::size_t a = 0; a < k; ++a) images.push_back(single_letter(static_cast<Letter>(a)));

  for (int q = 1; q <= max_period; ++q) {
    images = power_images(theta, images, 1);
    for (std::size_t c = 0; c < k; ++c) {
      const auto seed = static_cast<Letter>(c);
      if (images[c].size() < 2 || letter_at(images[c], 0) != seed) continue;
      std::vector<Letter> letters;
      for (std::size_t a = 0; a < k; ++a) {
        const auto letter = static_cast<Letter>(a);
        Word pair{static_cast<char>(letter), static_cast<char>(seed)};
        if (letter_at(images[a], images[a].size() - 1) == letter && table.contains(pair)) {
          letters.push_back(letter);
        }
      }
      if (letters.size() < 2) continue;
      Word point = single_letter(seed);
      while (point.size() < target) point = apply_images(images, point);
      point.resize(target);
      add_certificate(out, {PeriodicFixedPoint{q, seed}, std::move(point), std::move(letters)});
    }
  }
  return out;
}

std::vector<BranchPointCertificate> certify_branch_suffix(const Substitution& theta,
                                                          const LanguageTable& table,
                                                          int max_period) {
  std::vector<BranchPointCertificate> out;
  const auto k = theta.alphabet().size();
  const auto target = static_cast<std::size_t>(table.max_length());
  std::vector<Word> letters_as_words;
  for (std::size_t a = 0; a < k; ++a) letters_as_words.push_back(single_letter(static_cast<Letter>(a)));

  for (int p = 1; p <= max_period; ++p) {
    auto once = power_images(theta, letters_as_words, p);
    auto twice = power_images(theta, once, p);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        const auto short_len = proper_common_suffix(once[a], once[b]);
        const auto long_len = proper_common_suffix(twice[a], twice[b]);
        if (short_len == 0 || long_len <= short_len) continue;

        const Word short_suffix = once[a].substr(once[a].size() - short_len);
        const Word long_suffix = twice[a].substr(twice[a].size() - long_len);
        const Word tail = apply_images(once, short_suffix);
        if (tail.size() >= long_suffix.size() ||
            long_suffix.compare(long_suffix.size() - tail.size(), tail.size(), tail) != 0) {
          continue;
        }
        Word head = long_suffix.substr(0, long_suffix.size() - tail.size());

        Word point = head;
        while (point.size() < target) point = head + apply_images(once, point);
        point.resize(target);

        std::vector<Letter> preceding{
            letter_at(twice[a], twice[a].size() - long_len - 1),
            letter_at(twice[b], twice[b].size() - long_len - 1)};
        std::sort(preceding.begin(), preceding.end());
        std::vector<Letter> extension;
        for (auto x : preceding) {
          if (letter_precedes(table, x, point)) extension.push_back(x);
        }
        if (extension.size() < 2) continue;
        CommonSuffixLimit limit{p, {static_cast<Letter>(a), static_cast<Letter>(b)}, std::move(head)};
        add_certificate(out, {std::move(limit), std::move(point), std::move(extension)});
      }
    }
  }
  return out;
}

int replay_certificate(const BranchPointCertificate& cert, const Substitution& theta,
                       const LanguageTable& table) {
  const Word& y = cert.point_prefix;
  if (y.empty()) return 0;
  int period = 0;
  Word head;
  if (const auto* fp = std::get_if<PeriodicFixedPoint>(&cert.kind)) {
    period = fp->period;
    if (letter_at(y, 0) != fp->seed) return 0;
  } else {
    const auto& cs = std::get<CommonSuffixLimit>(cert.kind);
    period = cs.period;
    head = cs.head;
    if (head.empty() || y.compare(0, head.size(), head) != 0) return 0;
  }

  std::vector<Word> images;
  for (std::size_t a = 0; a < theta.alphabet().size(); ++a) {
    images.push_back(iterate(theta, static_cast<Letter>(a), period));
  }

  // Longest prefix y[0, m) whose image still fits inside the stored prefix.
  Word rebuilt = head;
  for (std::size_t m = 0; m < y.size(); ++m) {
    const auto& img = images[letter_at(y, m)];
    if (rebuilt.size() + img.size() > y.size()) break;
    rebuilt += img;
  }
  if (rebuilt.size() <= head.size() || y.compare(0, rebuilt.size(), rebuilt) != 0) return 0;

  for (auto a : cert.extension_letters) {
    if (!letter_precedes(table, a, y)) return 0;
    if (cert.is_periodic() && letter_at(images[a], images[a].size() - 1) != a) return 0;
  }
  return static_cast<int>(rebuilt.size());
}

int BranchCensus::total() const {
  int t = 0;
  for (const auto& [k, e] : counts) t += e.count;
  return t;
}

BranchCensus branch_census(const LeftSpecialTree& tree,
                           const std::vector<BranchPointCertificate>& certificates) {
  BranchCensus census;
  census.depth = tree.depth;
  census.chain_certificate.assign(tree.chains.size(), std::nullopt);
  for (const auto& chain : tree.chains) ++census.counts[chain.order()].count;

  const auto depth = static_cast<std::size_t>(tree.depth);
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    const auto& cert = certificates[i];
    bool matched = false;
    if (cert.point_prefix.size() >= depth) {
      const Word prefix = cert.point_prefix.substr(0, depth);
      for (std::size_t j = 0; j < tree.chains.size(); ++j) {
        const auto& chain = tree.chains[j];
        if (chain.prefix != prefix || census.chain_certificate[j]) continue;
        if (chain.order() != cert.order()) break;
        census.chain_certificate[j] = i;
        ++census.counts[chain.order()].certified;
        matched = true;
        break;
      }
    }
    if (!matched) census.unmatched_certificates.push_back(i);
  }
  return census;
}

int aut_upper_bound(const BranchCensus& census) {
  int best = std::numeric_limits<int>::max();
  for (const auto& [k, e] : census.counts) {
    if (e.count >= 1) best = std::min(best, e.count);
  }
  if (best == std::numeric_limits<int>::max()) {
    throw DomainError("empty branch census: an infinite minimal shift has a branch point");
  }
  return best;
}

AsymptoticCensus asymptotic_upper_bound(const BranchCensus& census) {
  AsymptoticCensus out;
  for (const auto& [k, e] : census.counts) {
    if (e.count < 1) continue;
    out.class_size_counts[k] = e.count;
    out.upper_bound_total += k * e.count;
  }
  if (out.class_size_counts.empty()) {
    throw DomainError("empty branch census: no asymptotic bound available");
  }
  out.two_sided_bound = std::numeric_limits<int>::max();
  for (const auto& [k, m] : out.class_size_counts) out.two_sided_bound = std::min(out.two_sided_bound, m);
  return out;
}

AsymptoticCensus asymptotic_census_from_classes(const std::vector<int>& class_sizes) {
  AsymptoticCensus out;
  out.exact = true;
  for (int size : class_sizes) {
    if (size < 2) throw DomainError("a ~-class of right-asymptotic orbits has size >= 2");
    ++out.class_size_counts[size];
    out.upper_bound_total += size;
  }
  if (out.class_size_counts.empty()) throw DomainError("no classes supplied");
  out.two_sided_bound = std::numeric_limits<int>::max();
  for (const auto& [k, m] : out.class_size_counts) out.two_sided_bound = std::min(out.two_sided_bound, m);
  return out;
}

long long substitution_root_bound(int alphabet_size) {
  if (alphabet_size < 2) throw DomainError("substitution root bound needs >= 2 letters");
  return static_cast<long long>(alphabet_size) * alphabet_size;
}

}  // namespace subshift
