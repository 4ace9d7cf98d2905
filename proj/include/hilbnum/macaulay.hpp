#ifndef HILBNUM_MACAULAY_HPP
#define HILBNUM_MACAULAY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hilbnum/series.hpp"

namespace hilbnum {

// a_0 + a_1 t + ... + a_cap t^cap.
struct UnivariateSeries {
  std::vector<Coefficient> coeffs;

  Degree cap() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Coefficient operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;

  std::string to_string() const;
};

// `1,-1,0,2` -> 1 - t + 2t^3.
UnivariateSeries parse_univariate(std::string_view text);
// Requires r = 1.
UnivariateSeries to_univariate(const CollapsedSeries& s);
CollapsedSeries to_collapsed(const UnivariateSeries& s);

// u = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta) with
// k_d > k_{d-1} > ... > k_delta >= delta >= 1, built greedily.
struct MacaulayExpansion {
  std::uint64_t d = 1;
  // ks[0] pairs with d, ks[1] with d - 1, and so on.
  std::vector<std::uint64_t> ks;

  std::uint64_t reconstruct() const;
};

MacaulayExpansion macaulay_expand(std::uint64_t u, std::uint64_t d);
// u^<d> = C(k_d + 1, d + 1) + ... + C(k_delta + 1, delta + 1).
std::uint64_t macaulay_bound(std::uint64_t u, std::uint64_t d);

// h_0 = 1, h_i >= 0 and h_{i+1} <= h_i^<i> for 1 <= i < cap.
bool is_o_sequence(const UnivariateSeries& h);

// f / (1 - t)^b through degree cap, by b rounds of prefix sums.
UnivariateSeries divide_by_one_minus_t(const UnivariateSeries& f, std::uint64_t b);

// A witness that f = (1 - t)^b h with h an O-sequence, valid through the
// cap of f. a = h_1; degenerate when h = 1 (a = 0, the quotient is the
// field itself).
struct Certificate {
  std::uint64_t a;
  std::uint64_t b;
  bool degenerate;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Classification {
  std::vector<Certificate> certificates;

  bool certified() const { return !certificates.empty(); }
};

Classification classify_numerator(const UnivariateSeries& f, std::uint64_t b_max);

// Upper bound on tdeg p(I) over finitely generated I generated in degrees
// <= d whose collapsed numerator starts 1 + a_1 t + ... + a_d t^d.
// `a` holds a_1..a_d.
std::uint64_t numerator_degree_bound(const std::vector<Coefficient>& a);

// |c_m| <= C(r - 1, floor((r - 1) / 2)) with r = #supp(m); |c_1| <= 1.
bool bjorner_kalai_check(const GradedSeries& p);
std::uint64_t bjorner_kalai_bound(std::size_t support);

// The divisor sums of p are 0/1 and the 1's form an order ideal, checked for
// every monomial of degree <= cap in the variables present in p.
bool divisor_sum_check(const GradedSeries& p);

}  // namespace hilbnum

#endif
