#ifndef HILBNUM_TESTS_SUPPORT_HPP
#define HILBNUM_TESTS_SUPPORT_HPP

#include <random>

#include "hilbnum/cli.hpp"
#include "hilbnum/series.hpp"

namespace testing {

inline hilbnum::Monomial mono(const char* text) { return hilbnum::parse_monomial(text); }

// Small random series in x1..n with coefficients in [-3, 3].
inline hilbnum::GradedSeries random_series(std::mt19937_64& rng, hilbnum::VarIndex n, hilbnum::Degree cap,
                                           std::size_t terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  hilbnum::GradedSeries f(cap);
  for (std::size_t i = 0; i < terms; ++i) f.accumulate(hilbnum::random_monomial(rng, n, 0, cap), coeff(rng));
  return f;
}

}  // namespace testing

#endif
