#include "hilbnum/engine.hpp"

#include <algorithm>
#include <set>

#include "hilbnum/errors.hpp"

namespace hilbnum {

namespace {

bool degree_then_canonical(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree(), db = b.total_degree();
  return da != db ? da < db : a < b;
}

// Calls fn on every monomial of x1..xn with total degree <= cap.
template <typename Fn>
void for_each_monomial(VarIndex n, Degree cap, Fn&& fn) {
  std::vector<Monomial::Factor> prefix;
  auto walk = [&](auto&& self, VarIndex var, Degree budget) -> void {
    if (var > n) {
      fn(Monomial(prefix));
      return;
    }
    self(self, var + 1, budget);
    for (Exponent e = 1; e <= budget; ++e) {
      prefix.emplace_back(var, e);
      self(self, var + 1, budget - e);
      prefix.pop_back();
    }
  };
  walk(walk, 1, cap);
}

}  // namespace

std::optional<Mismatch> first_difference(Method left, const GradedSeries& a, Method right, const GradedSeries& b) {
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first))
      return Mismatch{left, right, i->first, i->second, 0};
    if (i == a.terms().end() || j->first < i->first) return Mismatch{left, right, j->first, 0, j->second};
    if (i->second != j->second) return Mismatch{left, right, i->first, i->second, j->second};
    ++i, ++j;
  }
  return std::nullopt;
}

GradedSeries numerator_incl_excl(const MonomialIdeal& ideal, Degree cap) {
  GradedSeries out(cap, ideal.max_variable());
  std::vector<Monomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), degree_then_canonical);

  out.accumulate(Monomial::one(), 1);
  // Extending a subset never lowers the degree of its lcm, so a branch whose
  // running lcm is above the cap contributes nothing.
  auto extend = [&](auto&& self, std::size_t from, const Monomial& running, Coefficient sign) -> void {
    for (std::size_t i = from; i < gens.size(); ++i) {
      Monomial next = lcm(running, gens[i]);
      if (next.total_degree() > cap) continue;
      out.accumulate(next, -sign);
      self(self, i + 1, next, -sign);
    }
  };
  extend(extend, 0, Monomial::one(), 1);
  return out;
}

std::optional<Coefficient> LcmLattice::mobius_at(const Monomial& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return mobius[i];
  return std::nullopt;
}

LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, std::optional<Degree> cap) {
  const auto fits = [&](const Monomial& m) { return !cap || m.total_degree() <= *cap; };

  // Every lcm of a subset is reached by joining generators one at a time,
  // and the partial joins never exceed the final degree.
  std::set<Monomial> seen{Monomial::one()};
  std::vector<Monomial> frontier{Monomial::one()};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& e : frontier) {
      for (const auto& g : ideal.generators()) {
        Monomial j = lcm(e, g);
        if (fits(j) && seen.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  LcmLattice lattice;
  lattice.elements.assign(seen.begin(), seen.end());
  std::sort(lattice.elements.begin(), lattice.elements.end(), degree_then_canonical);
  lattice.mobius.resize(lattice.elements.size(), 0);
  lattice.mobius[0] = 1;
  for (std::size_t k = 1; k < lattice.elements.size(); ++k) {
    Coefficient sum = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (divides(lattice.elements[j], lattice.elements[k])) sum = checked_add(sum, lattice.mobius[j]);
    lattice.mobius[k] = checked_sub<Coefficient>(0, sum);
  }
  return lattice;
}

GradedSeries numerator_lcm_lattice(const MonomialIdeal& ideal, Degree cap) {
  GradedSeries out(cap, ideal.max_variable());
  // For the unit ideal the generator 1 coincides with the bottom element and
  // q(I) = 0.
  if (ideal.is_unit()) return out;
  const LcmLattice lattice = build_lcm_lattice(ideal, cap);
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) out.accumulate(lattice.elements[i], lattice.mobius[i]);
  return out;
}

Coefficient KoszulComplex::reduced_euler_characteristic() const {
  Coefficient chi = 0;
  for (const auto& f : faces) chi += f.size() % 2 == 0 ? -1 : 1;
  return chi;
}

KoszulComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& m) {
  KoszulComplex complex{m, {}};
  std::vector<VarIndex> support;
  for (const auto& [var, exp] : m.factors()) support.push_back(var);
  if (support.size() >= 63) throw ArithmeticOverflow("monomial support too large for face enumeration");

  const std::uint64_t subsets = std::uint64_t{1} << support.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Monomial::Factor> sq;
    std::vector<VarIndex> face;
    for (std::size_t b = 0; b < support.size(); ++b) {
      if (mask >> b & 1) {
        sq.emplace_back(support[b], 1);
        face.push_back(support[b]);
      }
    }
    if (ideal.contains(quotient_exact(m, Monomial(std::move(sq))))) complex.faces.push_back(std::move(face));
  }
  std::sort(complex.faces.begin(), complex.faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return complex;
}

Coefficient koszul_coefficient(const MonomialIdeal& ideal, const Monomial& m) {
  const Coefficient chi = koszul_complex(ideal, m).reduced_euler_characteristic();
  return m.is_one() ? 1 + chi : chi;
}

GradedSeries numerator_koszul(const MonomialIdeal& ideal, VarIndex n, Degree cap) {
  GradedSeries out(cap, n);
  const MonomialIdeal local = truncate_ideal(ideal, n);
  for_each_monomial(n, cap, [&](const Monomial& m) { out.accumulate(m, koszul_coefficient(local, m)); });
  return out;
}

GradedSeries numerator_oracle(const MonomialIdeal& ideal, VarIndex n, Degree cap) {
  return multiply(mu(n, cap), staircase_complement(truncate_ideal(ideal, n), n, cap));
}

std::string to_string(Method m) {
  switch (m) {
    case Method::incl_excl:
      return "incl-excl";
    case Method::lcm_lattice:
      return "lcm-lattice";
    case Method::koszul:
      return "koszul";
    case Method::oracle:
      return "oracle";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto m : {Method::incl_excl, Method::lcm_lattice, Method::koszul, Method::oracle})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

VarIndex natural_variable_count(const MonomialIdeal& ideal) { return std::max<VarIndex>(1, ideal.max_variable()); }

GradedSeries numerator(const MonomialIdeal& ideal, Method method, Degree cap, std::optional<VarIndex> n) {
  const VarIndex vars = n.value_or(natural_variable_count(ideal));
  switch (method) {
    case Method::incl_excl:
      return numerator_incl_excl(ideal, cap);
    case Method::lcm_lattice:
      return numerator_lcm_lattice(ideal, cap);
    case Method::koszul:
      return numerator_koszul(ideal, vars, cap);
    case Method::oracle:
      return numerator_oracle(ideal, vars, cap);
  }
  throw Error("unknown method");
}

std::string Mismatch::describe() const {
  return to_string(left) + " and " + to_string(right) + " disagree at " + at.to_string() + ": " +
         std::to_string(left_value) + " vs " + std::to_string(right_value);
}

CrossCheck cross_validate(const MonomialIdeal& ideal, Degree cap, std::optional<VarIndex> n) {
  const VarIndex vars = n.value_or(natural_variable_count(ideal));
  GradedSeries incl = numerator_incl_excl(ideal, cap);
  const GradedSeries lattice = numerator_lcm_lattice(ideal, cap);
  if (auto d = first_difference(Method::incl_excl, incl, Method::lcm_lattice, lattice)) return {incl, d};

  const GradedSeries restricted = incl.restricted(vars);
  const GradedSeries oracle = numerator_oracle(ideal, vars, cap);
  if (auto d = first_difference(Method::incl_excl, restricted, Method::oracle, oracle)) return {incl, d};
  const GradedSeries koszul = numerator_koszul(ideal, vars, cap);
  if (auto d = first_difference(Method::incl_excl, restricted, Method::koszul, koszul)) return {incl, d};
  return {incl, std::nullopt};
}

bool truncation_law(const MonomialIdeal& ideal, VarIndex n, Degree cap) {
  return numerator_incl_excl(ideal, cap).restricted(n) == numerator_oracle(ideal, n, cap);
}

bool split_incl_excl(const MonomialIdeal& ideal, const std::vector<bool>& in_first, Degree cap) {
  const auto& gens = ideal.generators();
  if (in_first.size() != gens.size()) throw Error("split mask does not match the generator count");
  std::vector<Monomial> first, second;
  for (std::size_t i = 0; i < gens.size(); ++i) (in_first[i] ? first : second).push_back(gens[i]);
  const auto a = MonomialIdeal::minimalize(first);
  const auto b = MonomialIdeal::minimalize(second);

  const GradedSeries one = GradedSeries::constant(1, cap);
  auto reduced = [&](const MonomialIdeal& i) { return numerator_incl_excl(i, cap) - one; };
  return reduced(ideal) == reduced(a) + reduced(b) - reduced(intersect(a, b));
}

ConvergenceRun convergence_run(const GeneratorStream& stream, const Partition& y, VarIndex n_max, Degree cap) {
  const MonomialIdeal ideal = realize_stream(stream, cap);
  ConvergenceRun run;
  for (VarIndex n = 1; n <= n_max; ++n) run.steps.emplace_back(n, collapse(numerator_oracle(ideal, n, cap), y));
  if (run.steps.empty()) return run;

  const CollapsedSeries previous =
      run.steps.size() >= 2 ? run.steps[run.steps.size() - 2].second : CollapsedSeries::constant(1, y.classes(), cap);
  const CollapsedSeries& current = run.last();
  std::optional<Degree> first_diff;
  auto note = [&](const MultiDegree& d) {
    if (!first_diff || d.total() < *first_diff) first_diff = d.total();
  };
  for (const auto& [d, c] : current.terms())
    if (previous.coefficient(d) != c) note(d);
  for (const auto& [d, c] : previous.terms())
    if (current.coefficient(d) != c) note(d);
  if (!first_diff)
    run.stabilized_prefix = cap;
  else if (*first_diff > 0)
    run.stabilized_prefix = *first_diff - 1;
  return run;
}

GradedSeries example_23gen_increment(VarIndex n, Degree cap) {
  if (n < 2) throw Error("the increment v_n is defined for n >= 2");
  const auto x = [](VarIndex i, Exponent e = 1) { return Monomial::variable(i, e); };
  GradedSeries v(cap, n, {{x(n - 1), 1}, {x(n, 4), 1}});
  v = v * GradedSeries(cap, n, {{Monomial::squarefree_range(1, n - 2) * x(n, 2), 1}});
  for (VarIndex i = 1; i <= n - 1; ++i) v = v * GradedSeries(cap, n, {{x(i), 1}, {Monomial::one(), -1}});
  return v;
}

bool verify_23gen_recursion(VarIndex n_max, Degree cap) {
  if (n_max < 2) throw Error("the recursion is checked from n = 2");
  const MonomialIdeal ideal = realize_stream(streams::example_23gen(), cap);
  GradedSeries previous = numerator_oracle(ideal, 1, cap);
  bool ok = true;
  for (VarIndex n = 2; n <= n_max; ++n) {
    GradedSeries current = numerator_oracle(ideal, n, cap);
    GradedSeries increment = example_23gen_increment(n, cap);
    if (n % 2 == 1) increment = -increment;
    ok = ok && (current - previous) == increment;
    previous = std::move(current);
  }
  return ok;
}

}  // namespace hilbnum
