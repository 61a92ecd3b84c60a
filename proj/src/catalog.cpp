#include "subshift/catalog.hpp"

#include "subshift/error.hpp"

namespace subshift::catalog {

Substitution fibonacci() { return Substitution::from_rules({{'0', "01"}, {'1', "0"}}); }

Substitution thue_morse() { return Substitution::from_rules({{'0', "01"}, {'1', "10"}}); }

Substitution acb() {
  return Substitution::from_rules({{'a', "acb"}, {'b', "aba"}, {'c', "aca"}});
}

ContinuedFraction fibonacci_cf() { return ContinuedFraction({1, 1, 1, 1, 1, 1, 1, 1}); }

ContinuedFraction skewed_cf() { return ContinuedFraction({2, 1, 1, 1, 1, 1}); }

Word fixed_point_prefix(const Substitution& theta, std::size_t length) {
  const auto k = theta.alphabet().size();
  for (int q = 1; q <= static_cast<int>(k) + 1; ++q) {
    for (std::size_t c = 0; c < k; ++c) {
      const auto seed = static_cast<Letter>(c);
      Word image = iterate(theta, seed, q);
      if (image.size() < 2 || letter_at(image, 0) != seed) continue;
      Word w = single_letter(seed);
      while (w.size() < length) w = iterate_word(theta, std::move(w), q);
      return w;
    }
  }
  throw DomainError("substitution has no growing letter fixing its first symbol");
}

std::vector<std::string> builtin_names() {
  return {"fibonacci", "thue-morse", "acb", "morse-mirror"};
}

}  // namespace subshift::catalog
