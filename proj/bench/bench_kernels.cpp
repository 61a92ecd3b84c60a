// Times the OpenMP kernels against their serial references on identical
// inputs and checks that the outputs agree.
//
//   bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "subshift/block_code.hpp"
#include "subshift/catalog.hpp"
#include "subshift/harvest.hpp"
#include "subshift/language.hpp"
#include "subshift/search.hpp"

using namespace subshift;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, double parallel, double serial, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, parallel, serial, serial / parallel,
              same ? "outputs agree" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d runs\n", omp_get_max_threads(), repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "omp [s]", "serial [s]", "speedup");
  bool all_same = true;

  {
    const std::vector<Word> sources{thue_morse_prefix(20), catalog::fixed_point_prefix(catalog::acb(), 1 << 19)};
    kernels::FactorSets a, b;
    const double p = best_of(repeats, [&] { a = kernels::harvest_factors(sources, 40); });
    const double s = best_of(repeats, [&] { b = kernels::harvest_factors_serial(sources, 40); });
    row("harvest_factors (n <= 40)", p, s, a == b);
    all_same = all_same && a == b;
  }
  {
    const auto theta = catalog::acb();
    const auto table = build_language(theta, 200);
    const auto level = table.factors(200);
    const std::vector<Word> words(level.begin(), level.end());
    std::vector<Word> a, b;
    const double p = best_of(repeats, [&] { a = kernels::expand_windows(theta, words, 200); });
    const double s = best_of(repeats, [&] { b = kernels::expand_windows_serial(theta, words, 200); });
    row("expand_windows (acb, w=200)", p, s, a == b);
    all_same = all_same && a == b;
  }
  {
    auto table = std::make_shared<const LanguageTable>(build_language(catalog::thue_morse(), 24));
    SearchResult a, b;
    const double p = best_of(repeats, [&] { a = enumerate_endomorphisms(table, 6, 16); });
    const double s = best_of(repeats, [&] { b = enumerate_endomorphisms_serial(table, 6, 16); });
    bool same = a.reports.size() == b.reports.size();
    for (std::size_t i = 0; same && i < a.reports.size(); ++i) same = a.reports[i].code == b.reports[i].code;
    row("endomorphism search (TM r=6)", p, s, same);
    all_same = all_same && same;
  }
  return all_same ? 0 : 1;
}
