#ifndef HILBNUM_ENGINE_HPP
#define HILBNUM_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbnum/ideal.hpp"
#include "hilbnum/series.hpp"

namespace hilbnum {

// The Hilbert numerator p(I) = mu * q(I), where q(I) is the sum of the
// monomials outside I. Four routes compute it:
//
//   incl_excl    sum over subsets s of W(I) of (-1)^{#s} lcm(s)
//   lcm_lattice  Moebius values of the lcm lattice of W(I)
//   koszul       reduced Euler characteristic of the upper Koszul complex
//                at each monomial
//   oracle       mu_n * staircase complement, computed in x1..xn
//
// incl_excl and lcm_lattice see every variable; koszul and oracle see x1..xn.

GradedSeries numerator_incl_excl(const MonomialIdeal& ideal, Degree cap);

struct LcmLattice {
  // Lattice elements in a linear extension of divisibility: ascending total
  // degree, ties in canonical order. elements.front() is 1.
  std::vector<Monomial> elements;
  // Moebius value mu(1, m) of each element, aligned with `elements`.
  std::vector<Coefficient> mobius;

  std::optional<Coefficient> mobius_at(const Monomial& m) const;
};

// All lcm's of subsets of W(I). With a cap, only elements of total degree
// <= cap are built; their Moebius values are unaffected since everything
// below an element has smaller degree.
LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, std::optional<Degree> cap = std::nullopt);
GradedSeries numerator_lcm_lattice(const MonomialIdeal& ideal, Degree cap);

struct KoszulComplex {
  Monomial m;
  // Subsets s of supp(m) with m / prod_{i in s} x_i in I, as sorted variable
  // lists ordered by size then lexicographically.
  std::vector<std::vector<VarIndex>> faces;

  // sum over faces of (-1)^{|F| - 1}; the empty face counts -1.
  Coefficient reduced_euler_characteristic() const;
};

KoszulComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& m);
// Coefficient of m in p(I). Equals the reduced Euler characteristic of the
// Koszul complex except at m = 1, where the complex is {empty} or nothing
// and the coefficient is 1 - [1 in I].
Coefficient koszul_coefficient(const MonomialIdeal& ideal, const Monomial& m);
GradedSeries numerator_koszul(const MonomialIdeal& ideal, VarIndex n, Degree cap);

GradedSeries numerator_oracle(const MonomialIdeal& ideal, VarIndex n, Degree cap);

enum class Method { incl_excl, lcm_lattice, koszul, oracle };

std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

// Default variable count for the koszul and oracle routes: the largest
// variable index among the generators (at least 1). Every term of p(I) lives
// in those variables.
VarIndex natural_variable_count(const MonomialIdeal& ideal);

GradedSeries numerator(const MonomialIdeal& ideal, Method method, Degree cap, std::optional<VarIndex> n = std::nullopt);

// First coefficient at which two routes disagree.
struct Mismatch {
  Method left;
  Method right;
  Monomial at;
  Coefficient left_value;
  Coefficient right_value;

  std::string describe() const;
};

// First term, in canonical order, where two series differ.
std::optional<Mismatch> first_difference(Method left, const GradedSeries& a, Method right, const GradedSeries& b);

// Runs all four routes in x1..n (default: natural_variable_count) and
// compares them term by term. Returns the agreed numerator or the first
// disagreement in canonical monomial order.
struct CrossCheck {
  GradedSeries numerator;
  std::optional<Mismatch> mismatch;
};

CrossCheck cross_validate(const MonomialIdeal& ideal, Degree cap, std::optional<VarIndex> n = std::nullopt);

// rho_n(p(I)) == p^n(rho_n(I)).
bool truncation_law(const MonomialIdeal& ideal, VarIndex n, Degree cap);

// p^(I1 + I2) == p^(I1) + p^(I2) - p^(I1 cap I2) with p^ = p - 1, where the
// blocks split W(I): `in_first[i]` places generator i in the first block.
bool split_incl_excl(const MonomialIdeal& ideal, const std::vector<bool>& in_first, Degree cap);

struct ConvergenceRun {
  // (n, g_n) for n = 1..n_max.
  std::vector<std::pair<VarIndex, CollapsedSeries>> steps;
  // Largest D <= cap with g_{n_max - 1} and g_{n_max} equal through degree
  // D (g_0 = 1). Empty if even the constant terms differ.
  std::optional<Degree> stabilized_prefix;

  const CollapsedSeries& last() const { return steps.back().second; }
};

// g_n = collapse(p^n(rho_n(I)), y) with I the stream realized to degree cap.
ConvergenceRun convergence_run(const GeneratorStream& stream, const Partition& y, VarIndex n_max, Degree cap);

// v_n = (x_{n-1} + x_n^4) x1...x_{n-2} x_n^2 prod_{i<n} (x_i - 1), built
// term by term and truncated at cap.
GradedSeries example_23gen_increment(VarIndex n, Degree cap);
// p_n - p_{n-1} == (-1)^n v_n for n = 2..n_max.
bool verify_23gen_recursion(VarIndex n_max, Degree cap);

}  // namespace hilbnum

#endif
