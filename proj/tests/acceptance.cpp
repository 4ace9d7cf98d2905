// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hilbnum/cli.hpp"
#include "hilbnum/engine.hpp"
#include "hilbnum/macaulay.hpp"
#include "oracles/order_ideal_oracle.hpp"

using namespace hilbnum;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && seconds > limit_seconds) o.fail("over the time limit");
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, title, seconds,
              limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

// The 200 ideals shared by criteria 3, 4 and 7.
std::vector<MonomialIdeal> shared_ideals() {
  std::mt19937_64 rng(default_seed());
  std::vector<MonomialIdeal> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_ideal(rng, 6, 5, 4));
  return out;
}

constexpr Degree kCap = 12;
constexpr VarIndex kVars = 5;

}  // namespace

int main() {
  const auto ideals = shared_ideals();
  std::vector<GradedSeries> numerators;
  bool all = true;

  all &= criterion(1, "principal ideals have numerator 1 - m under every route", 1, [] {
    Outcome o;
    std::mt19937_64 rng(default_seed() + 1);
    for (int i = 0; i < 50; ++i) {
      const Monomial m = random_monomial(rng, 5, 0, 6);
      const MonomialIdeal I = MonomialIdeal::principal(m);
      GradedSeries expected(6);
      expected.accumulate(Monomial::one(), 1);
      expected.accumulate(m, -1);
      for (auto method : {Method::incl_excl, Method::lcm_lattice, Method::koszul, Method::oracle})
        if (!(numerator(I, method, 6, kVars) == expected)) o.fail(to_string(method) + " at " + m.to_string());
    }
    return o;
  });

  all &= criterion(2, "nu * mu = 1 for n <= 6, D <= 10", 5, [] {
    Outcome o;
    for (VarIndex n = 1; n <= 6; ++n)
      for (Degree d = 0; d <= 10; ++d)
        if (!(nu(n, d) * mu(n, d) == GradedSeries::constant(1, d)))
          o.fail("n=" + std::to_string(n) + " D=" + std::to_string(d));
    return o;
  });

  all &= criterion(3, "four-way agreement on 200 random ideals at cap 12", 60, [&] {
    Outcome o;
    for (const auto& I : ideals) {
      const CrossCheck check = cross_validate(I, kCap, kVars);
      if (check.mismatch) o.fail(I.to_string() + ": " + check.mismatch->describe());
      numerators.push_back(check.numerator);
    }
    return o;
  });

  all &= criterion(4, "truncation law at n = 2, 3, 5 on the same ideals", 60, [&] {
    Outcome o;
    for (const auto& I : ideals)
      for (VarIndex n : {2u, 3u, 5u})
        if (!truncation_law(I, n, kCap)) o.fail(I.to_string() + " at n=" + std::to_string(n));
    return o;
  });

  all &= criterion(5, "two-stream example converges to 1 - t^2 - t^3 + t^5 and its recursion holds", 30, [] {
    Outcome o;
    const ConvergenceRun run = convergence_run(streams::example_23gen(), Partition::total(), 6, 5);
    const CollapsedSeries limit = CollapsedSeries::univariate({1, 0, -1, -1, 0, 1}, 5);
    if (run.stabilized_prefix != Degree{5} || !(run.last() == limit)) o.fail("g_6 = " + run.last().to_string());
    if (!verify_23gen_recursion(4, 10)) o.fail("recursion fails for n <= 4 at cap 10");
    return o;
  });

  all &= criterion(6, "complete intersections collapse to prod (1 - t^d_j)", 5, [] {
    Outcome o;
    const std::vector<std::vector<Exponent>> families{{2, 3}, {2, 2, 2}, {3, 4}};
    for (const auto& degrees : families) {
      Degree cap = 2;
      for (auto d : degrees) cap += d;
      CollapsedSeries expected = CollapsedSeries::constant(1, 1, cap);
      for (auto d : degrees) {
        std::vector<Coefficient> factor(d + 1, 0);
        factor.front() = 1;
        factor.back() = -1;
        CollapsedSeries f(1, cap);
        for (std::size_t k = 0; k < factor.size(); ++k) f.accumulate(MultiDegree{{k}}, factor[k]);
        expected = multiply(expected, f);
      }
      const MonomialIdeal I = realize_stream(streams::powers(degrees), cap);
      const VarIndex r = static_cast<VarIndex>(degrees.size());
      for (VarIndex n = r; n <= r + 4; ++n) {
        for (auto method : {Method::oracle, Method::koszul, Method::incl_excl}) {
          const GradedSeries p = numerator(I, method, cap, n);
          if (!(collapse(p, Partition::total()) == expected))
            o.fail(streams::powers(degrees).name + " n=" + std::to_string(n) + " via " + to_string(method));
        }
      }
    }
    return o;
  });

  all &= criterion(7, "classification, divisor sums and Bjorner-Kalai on the criterion 3 numerators", 60, [&] {
    Outcome o;
    if (numerators.size() != ideals.size()) {
      o.fail("criterion 3 did not produce every numerator");
      return o;
    }
    std::mt19937_64 rng(default_seed() + 7);
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      const GradedSeries& p = numerators[i];
      const std::string who = ideals[i].to_string();
      if (!classify_numerator(to_univariate(collapse(p, Partition::total())), 6).certified()) o.fail("not certified: " + who);
      if (!divisor_sum_check(p)) o.fail("divisor sums fail: " + who);
      if (!bjorner_kalai_check(p)) o.fail("bjorner-kalai fails: " + who);

      // perturb one coefficient
      auto it = p.terms().begin();
      std::advance(it, static_cast<long>(rng() % p.size()));
      const Monomial m = it->first;
      GradedSeries bumped = p;
      bumped.accumulate(m, 2);
      if (divisor_sum_check(bumped)) o.fail("divisor-sum check accepts a perturbation at " + m.to_string() + " of " + who);
      GradedSeries big = p;
      big.accumulate(m, static_cast<Coefficient>(bjorner_kalai_bound(m.support_size())) + 1 - it->second);
      if (bjorner_kalai_check(big)) o.fail("bjorner-kalai accepts a perturbation at " + m.to_string() + " of " + who);
    }
    return o;
  });

  all &= criterion(8, "Macaulay bound matches exhaustive order-ideal search for u <= 12, d <= 3", 120, [] {
    Outcome o;
    for (std::uint64_t d = 1; d <= 3; ++d) {
      for (std::uint64_t u = 0; u <= 12; ++u) {
        const std::int64_t expected = oracle::max_next_slice(u, d);
        if (expected < 0)
          o.fail("oracle could not search u=" + std::to_string(u) + " d=" + std::to_string(d));
        else if (macaulay_bound(u, d) != static_cast<std::uint64_t>(expected))
          o.fail("u=" + std::to_string(u) + " d=" + std::to_string(d) + ": " + std::to_string(macaulay_bound(u, d)) +
                 " vs " + std::to_string(expected));
      }
    }
    return o;
  });

  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
