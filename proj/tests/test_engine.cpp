#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hilbnum/engine.hpp"
#include "hilbnum/errors.hpp"
#include "hilbnum/macaulay.hpp"
#include "oracles/dense_numerator.hpp"
#include "test_support.hpp"

using namespace hilbnum;
using testing::mono;

namespace {

MonomialIdeal ideal(std::initializer_list<const char*> gens) {
  std::vector<Monomial> raw;
  for (const char* g : gens) raw.push_back(mono(g));
  return MonomialIdeal::minimalize(raw);
}

GradedSeries series(Degree cap, std::initializer_list<std::pair<const char*, Coefficient>> terms) {
  GradedSeries out(cap);
  for (const auto& [m, c] : terms) out.accumulate(mono(m), c);
  return out;
}

// Every monomial of degree 1..max_degree in x1..n.
std::vector<Monomial> small_monomials(VarIndex n, Degree max_degree) {
  std::vector<Monomial> out;
  const auto all = nu(n, max_degree);
  for (const auto& [m, c] : all.terms())
    if (!m.is_one()) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("inclusion-exclusion") {
  CHECK(numerator_incl_excl(ideal({"x1"}), 3) == series(3, {{"1", 1}, {"x1", -1}}));
  CHECK(numerator_incl_excl(ideal({"x1", "x2"}), 2) == series(2, {{"1", 1}, {"x1", -1}, {"x2", -1}, {"x1*x2", 1}}));
  CHECK(numerator_incl_excl(ideal({"x1*x2", "x2*x3"}), 3) ==
        series(3, {{"1", 1}, {"x1*x2", -1}, {"x2*x3", -1}, {"x1*x2*x3", 1}}));
  CHECK(numerator_incl_excl(MonomialIdeal::zero(), 4) == GradedSeries::constant(1, 4));
  CHECK(numerator_incl_excl(MonomialIdeal::unit(), 4).is_zero());
  // terms above the cap are dropped
  CHECK(numerator_incl_excl(ideal({"x1", "x2"}), 1) == series(1, {{"1", 1}, {"x1", -1}, {"x2", -1}}));
}

TEST_CASE("lcm lattice") {
  const auto L = build_lcm_lattice(ideal({"x1*x2", "x2*x3"}));
  CHECK(L.elements == std::vector<Monomial>{Monomial::one(), mono("x1*x2"), mono("x2*x3"), mono("x1*x2*x3")});
  CHECK(L.mobius == std::vector<Coefficient>{1, -1, -1, 1});
  CHECK(L.mobius_at(mono("x1*x2*x3")) == 1);
  CHECK_FALSE(L.mobius_at(mono("x1")).has_value());

  const auto single = build_lcm_lattice(ideal({"x1"}));
  CHECK(single.mobius == std::vector<Coefficient>{1, -1});
  const auto empty = build_lcm_lattice(MonomialIdeal::zero());
  CHECK(empty.elements == std::vector<Monomial>{Monomial::one()});
  CHECK(empty.mobius == std::vector<Coefficient>{1});

  CHECK(numerator_lcm_lattice(ideal({"x1*x2", "x2*x3"}), 3) == numerator_incl_excl(ideal({"x1*x2", "x2*x3"}), 3));
  CHECK(numerator_lcm_lattice(ideal({"x1^2", "x2^3"}), 5) ==
        series(5, {{"1", 1}, {"x1^2", -1}, {"x2^3", -1}, {"x1^2*x2^3", 1}}));
  CHECK(numerator_lcm_lattice(MonomialIdeal::unit(), 3).is_zero());

  // the top of a path has Moebius value zero
  const auto path = ideal({"x1*x2", "x2*x3", "x3*x4"});
  CHECK(build_lcm_lattice(path).mobius_at(mono("x1*x2*x3*x4")) == 0);
  CHECK(numerator_lcm_lattice(path, 4) ==
        series(4, {{"1", 1}, {"x1*x2", -1}, {"x2*x3", -1}, {"x3*x4", -1}, {"x1*x2*x3", 1}, {"x2*x3*x4", 1}}));
  CHECK(numerator_lcm_lattice(ideal({"x1*x2", "x1*x3", "x2*x3"}), 4) ==
        series(4, {{"1", 1}, {"x1*x2", -1}, {"x1*x3", -1}, {"x2*x3", -1}, {"x1*x2*x3", 2}}));
}

TEST_CASE("Koszul coefficients") {
  CHECK(koszul_coefficient(ideal({"x1*x2"}), mono("x1*x2")) == -1);
  CHECK(koszul_coefficient(ideal({"x1^2"}), mono("x1*x2")) == 0);
  CHECK(koszul_coefficient(ideal({"x1^2"}), mono("x2^3")) == 0);
  // pinned to the dense oracle: p = 1 - x1 - x2 + x1*x2
  const auto I = ideal({"x1", "x2"});
  CHECK(koszul_coefficient(I, mono("x1*x2")) == oracle::dense_numerator_series(I, 2, 2).coefficient(mono("x1*x2")));
  CHECK(koszul_coefficient(I, mono("x1*x2")) == 1);

  const auto K = koszul_complex(I, mono("x1*x2"));
  CHECK(K.faces == std::vector<std::vector<VarIndex>>{{}, {1}, {2}});
  CHECK(K.reduced_euler_characteristic() == 1);

  CHECK(koszul_coefficient(MonomialIdeal::zero(), Monomial::one()) == 1);
  CHECK(koszul_coefficient(MonomialIdeal::unit(), Monomial::one()) == 0);
}

TEST_CASE("Koszul sign convention on an exhaustive small family") {
  // all ideals with at most 3 generators in 3 variables of degree <= 2
  const auto pool = small_monomials(3, 2);
  const Degree cap = 6;
  std::size_t checked = 0;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a; b < pool.size(); ++b)
      for (std::size_t c = b; c < pool.size(); ++c) {
        const auto I = MonomialIdeal::minimalize({pool[a], pool[b], pool[c]});
        const auto expected = oracle::dense_numerator_series(I, 3, cap);
        CHECK(numerator_koszul(I, 3, cap) == expected);
        ++checked;
      }
  CHECK(checked == 165);
}

TEST_CASE("oracle route") {
  CHECK(numerator_oracle(ideal({"x1^2"}), 1, 3) == series(3, {{"1", 1}, {"x1^2", -1}}));
  CHECK(numerator_oracle(MonomialIdeal::zero(), 3, 5) == GradedSeries::constant(1, 5));
  CHECK(numerator_oracle(ideal({"x1", "x2"}), 2, 2) == series(2, {{"1", 1}, {"x1", -1}, {"x2", -1}, {"x1*x2", 1}}));
}

TEST_CASE("four routes agree with the dense oracle on random ideals") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, 5, 4, 3);
    const Degree cap = 8;
    const auto dense = oracle::dense_numerator_series(I, 4, cap);
    const auto check = cross_validate(I, cap, 4);
    CHECK_FALSE(check.mismatch.has_value());
    CHECK(check.numerator == dense);
    CHECK(numerator_incl_excl(I, cap) == dense);
  }
}

TEST_CASE("engine invariants on random ideals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_ideal(rng, 6, 5, 4);
    const Degree cap = 8;
    const auto p = numerator_incl_excl(I, cap);

    CHECK(divisor_sum_check(p));
    CHECK(bjorner_kalai_check(p));

    // q = nu * p
    const VarIndex n = 5;
    CHECK(nu(n, cap) * p.restricted(n) == staircase_complement(I, n, cap));

    // relabeling commutes with the numerator
    std::vector<VarIndex> image{1, 2, 3, 4, 5};
    std::shuffle(image.begin(), image.end(), rng);
    std::map<VarIndex, VarIndex> perm;
    for (VarIndex i = 1; i <= 5; ++i) perm[i] = image[i - 1];
    CHECK(numerator_incl_excl(relabel(I, perm), cap) == relabel(p, perm));

    // Moebius sums vanish above the bottom
    const auto L = build_lcm_lattice(I);
    for (std::size_t j = 1; j < L.elements.size(); ++j) {
      Coefficient sum = 0;
      for (std::size_t k = 0; k <= j; ++k)
        if (divides(L.elements[k], L.elements[j])) sum += L.mobius[k];
      CHECK(sum == 0);
    }
    // terms off the lattice vanish
    for (const auto& [m, c] : p.terms()) CHECK(L.mobius_at(m).has_value());
  }
}

TEST_CASE("method names") {
  for (auto m : {Method::incl_excl, Method::lcm_lattice, Method::koszul, Method::oracle})
    CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("all").has_value());
  CHECK(natural_variable_count(ideal({"x2", "x7^2"})) == 7);
  CHECK(natural_variable_count(MonomialIdeal::zero()) == 1);
}

TEST_CASE("mismatch description") {
  const Mismatch m{Method::incl_excl, Method::koszul, mono("x1*x2"), 1, -1};
  CHECK(m.describe().find("x1*x2") != std::string::npos);
}

TEST_CASE("truncation law") {
  CHECK(truncation_law(ideal({"x1*x3", "x2^2"}), 2, 4));
  CHECK(truncation_law(ideal({"x2^2*x5"}), 3, 6));
  CHECK(truncation_law(MonomialIdeal::zero(), 3, 4));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto I = random_ideal(rng, 5, 5, 3);
    for (VarIndex n : {1u, 2u, 3u, 4u}) CHECK(truncation_law(I, n, 7));
  }
}

TEST_CASE("two-block inclusion-exclusion") {
  CHECK(split_incl_excl(ideal({"x1"}), {true}, 3));
  CHECK(split_incl_excl(ideal({"x1", "x2"}), {true, false}, 3));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> raw;
    while (raw.size() < 4) {
      raw.push_back(random_monomial(rng, 4, 1, 3));
      if (MonomialIdeal::minimalize(raw).size() < raw.size()) raw.pop_back();
    }
    const auto I = MonomialIdeal::minimalize(raw);
    std::vector<bool> in_first(4);
    for (auto&& b : in_first) b = rng() % 2 == 0;
    CHECK(split_incl_excl(I, in_first, 10));
  }
}

TEST_CASE("convergence runs") {
  const auto total = Partition::total();
  const auto ci = CollapsedSeries::univariate({1, 0, -1, -1, 0, 1}, 5);

  const auto powers = convergence_run(streams::powers({2, 3}), total, 4, 5);
  REQUIRE(powers.steps.size() == 4);
  for (const auto& [n, g] : powers.steps)
    if (n >= 2) CHECK(g == ci);

  const auto run = convergence_run(streams::example_23gen(), total, 6, 5);
  CHECK(run.last() == ci);
  CHECK(run.stabilized_prefix == Degree{5});

  const auto empty = convergence_run(streams::empty(), total, 3, 4);
  for (const auto& [n, g] : empty.steps) CHECK(g == CollapsedSeries::constant(1, 1, 4));
}

TEST_CASE("recursion for the two-stream example") {
  CHECK(verify_23gen_recursion(4, 10));
  CHECK(verify_23gen_recursion(2, 8));
  CHECK(verify_23gen_recursion(2, 1));
  CHECK_THROWS_AS(verify_23gen_recursion(1, 5), Error);

  // v_2 = (x1 + x2^4) x2^2 (x1 - 1)
  CHECK(example_23gen_increment(2, 8) == series(8, {{"x1^2*x2^2", 1}, {"x1*x2^2", -1}, {"x1*x2^6", 1}, {"x2^6", -1}}));
}
