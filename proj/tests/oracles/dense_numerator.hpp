#ifndef HILBNUM_TESTS_DENSE_NUMERATOR_HPP
#define HILBNUM_TESTS_DENSE_NUMERATOR_HPP

// Brute-force Hilbert numerator on a dense exponent box.
//
// q is the 0/1 indicator of monomials outside the ideal; multiplying by
// prod (1 - x_i) is a backward difference in each coordinate. No sparse
// series arithmetic is involved, so this checks the library independently.

#include <cstdint>
#include <map>
#include <vector>

#include "hilbnum/ideal.hpp"

namespace oracle {

inline std::map<std::vector<std::uint32_t>, std::int64_t> dense_numerator(const std::vector<std::vector<std::uint32_t>>& gens,
                                                                           std::uint32_t n, std::uint32_t cap) {
  // box [0, cap]^n holds every monomial of total degree <= cap
  const std::uint64_t side = cap + 1;
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) size *= side;
  std::vector<std::int64_t> val(size, 0);
  std::vector<std::uint32_t> e(n, 0);

  auto decode = [&](std::uint64_t idx) {
    for (std::uint32_t i = 0; i < n; ++i) {
      e[i] = static_cast<std::uint32_t>(idx % side);
      idx /= side;
    }
  };
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    decode(idx);
    bool inside = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::uint32_t i = 0; i < n; ++i) div = div && g[i] <= e[i];
      inside = inside || div;
    }
    val[idx] = inside ? 0 : 1;
  }
  std::uint64_t stride = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint64_t idx = size; idx-- > 0;) {
      if ((idx / stride) % side != 0) val[idx] -= val[idx - stride];
    }
    stride *= side;
  }
  std::map<std::vector<std::uint32_t>, std::int64_t> out;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    decode(idx);
    std::uint64_t deg = 0;
    for (auto x : e) deg += x;
    if (deg <= cap && val[idx] != 0) out[e] = val[idx];
  }
  return out;
}

// The same numerator as a GradedSeries for comparison.
inline hilbnum::GradedSeries dense_numerator_series(const hilbnum::MonomialIdeal& ideal, std::uint32_t n, std::uint32_t cap) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& g : ideal.generators()) {
    if (g.max_variable() > n) continue;
    std::vector<std::uint32_t> v(n, 0);
    for (const auto& [var, exp] : g.factors()) v[var - 1] = exp;
    gens.push_back(std::move(v));
  }
  hilbnum::GradedSeries out(cap, n);
  for (const auto& [e, c] : dense_numerator(gens, n, cap)) {
    std::vector<hilbnum::Monomial::Factor> f;
    for (std::uint32_t i = 0; i < n; ++i)
      if (e[i] > 0) f.emplace_back(i + 1, e[i]);
    out.accumulate(hilbnum::Monomial(std::move(f)), c);
  }
  return out;
}

}  // namespace oracle

#endif
