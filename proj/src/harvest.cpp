#include "subshift/harvest.hpp"

#include <algorithm>
#include <set>
#include <string_view>
#include <unordered_set>

#include <omp.h>

namespace subshift::kernels {
namespace {

std::vector<Word> windows_of_length(std::span<const Word> sources, std::size_t n) {
  std::unordered_set<std::string_view> seen;
  for (const auto& s : sources) {
    if (s.size() < n) continue;
    std::string_view view(s);
    for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(view.substr(i, n));
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (auto v : seen) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void append_windows(const Word& image, std::size_t width, std::vector<Word>& out) {
  if (image.size() < width) {
    out.push_back(image);
    return;
  }
  for (std::size_t i = 0; i + width <= image.size(); ++i) {
    out.push_back(image.substr(i, width));
  }
}

void sort_unique(std::vector<Word>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FactorSets harvest_factors(std::span<const Word> sources, int max_length) {
  FactorSets sets(static_cast<std::size_t>(std::max(max_length, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int n = 1; n <= max_length; ++n) {
    sets[n - 1] = windows_of_length(sources, static_cast<std::size_t>(n));
  }
  return sets;
}

FactorSets harvest_factors_serial(std::span<const Word> sources, int max_length) {
  FactorSets sets(static_cast<std::size_t>(std::max(max_length, 0)));
  for (int n = 1; n <= max_length; ++n) {
    std::set<Word> found;
    for (const auto& s : sources) {
      for (std::size_t i = 0; i + n <= s.size(); ++i) found.insert(s.substr(i, n));
    }
    sets[n - 1].assign(found.begin(), found.end());
  }
  return sets;
}

std::vector<Word> expand_windows(const Substitution& theta,
                                 std::span<const Word> words, int width) {
  const auto w = static_cast<std::size_t>(width);
  std::vector<std::vector<Word>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < words.size(); ++i) {
      append_windows(substitute(theta, words[i]), w, mine);
    }
    sort_unique(mine);
  }
  std::vector<Word> merged;
  for (auto& part : partial) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  sort_unique(merged);
  return merged;
}

std::vector<Word> expand_windows_serial(const Substitution& theta,
                                        std::span<const Word> words, int width) {
  std::vector<Word> out;
  for (const auto& word : words) {
    append_windows(substitute(theta, word), static_cast<std::size_t>(width), out);
  }
  sort_unique(out);
  return out;
}

std::vector<Word> reduce_sources(std::span<const Word> sources, int width) {
  const auto w = static_cast<std::size_t>(width);
  std::vector<Word> out = windows_of_length(sources, w);
  for (const auto& s : sources) {
    if (s.size() < w) {
      out.push_back(s);
    } else if (w > 1) {
      out.push_back(s.substr(s.size() - (w - 1)));
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace subshift::kernels
