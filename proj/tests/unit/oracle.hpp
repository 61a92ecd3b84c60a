#pragma once

// Test-local oracles. Deliberately naive and independent of the library's
// kernels: everything here is a direct scan over an explicit word.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "subshift/alphabet.hpp"

namespace oracle {

inline std::vector<std::vector<std::string>> subwords(const std::string& w, int n_max) {
  std::vector<std::vector<std::string>> out;
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
    out.emplace_back(seen.begin(), seen.end());
  }
  return out;
}

// t_i = parity of the binary digit sum, written in dense codes.
inline std::string thue_morse(std::size_t length) {
  std::string w(length, '\0');
  for (std::size_t i = 0; i < length; ++i) w[i] = static_cast<char>(__builtin_popcountll(i) & 1);
  return w;
}

// Fibonacci word by the length-doubling recursion f_{k+1} = f_k f_{k-1}.
inline std::string fibonacci(std::size_t length) {
  std::string a(1, '\0'), b = std::string{'\0', '\1'};
  while (b.size() < length) {
    std::string next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return b.substr(0, length);
}

// Characteristic word c_n = floor((n+2) p/q) - floor((n+1) p/q).
inline std::string mechanical(std::int64_t p, std::int64_t q, std::size_t length) {
  std::string w(length, '\0');
  for (std::size_t n = 0; n < length; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    w[n] = static_cast<char>((i + 2) * p / q - (i + 1) * p / q);
  }
  return w;
}

// Convergent p/q of [0; b1, b2, ...].
inline std::pair<std::int64_t, std::int64_t> convergent(const std::vector<int>& b) {
  std::int64_t p = 0, q = 1;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    // x = 1 / (b + x)
    const std::int64_t np = q;
    const std::int64_t nq = static_cast<std::int64_t>(*it) * q + p;
    p = np;
    q = nq;
  }
  return {p, q};
}

}  // namespace oracle
