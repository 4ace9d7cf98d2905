#include <doctest.h>

#include <random>

#include "hilbnum/cli.hpp"
#include "hilbnum/errors.hpp"
#include "hilbnum/monomial.hpp"

using namespace hilbnum;

namespace {

Monomial mono(const char* text) { return parse_monomial(text); }

}  // namespace

TEST_CASE("divides compares exponents componentwise") {
  CHECK(divides(mono("x1"), mono("x1^2*x2")));
  CHECK(divides(Monomial::one(), mono("x4^3*x7")));
  CHECK_FALSE(divides(mono("x2^3"), mono("x2^2*x3")));
  CHECK_FALSE(divides(mono("x5"), mono("x1*x2")));
}

TEST_CASE("lcm takes the componentwise maximum") {
  CHECK(lcm(mono("x1^2*x2"), mono("x2^3*x3")) == mono("x1^2*x2^3*x3"));
  const auto m = mono("x1*x4^2");
  CHECK(lcm(m, Monomial::one()) == m);
  CHECK(lcm(m, m) == m);
}

TEST_CASE("quotient_exact") {
  CHECK(quotient_exact(mono("x1^2*x2"), mono("x1")) == mono("x1*x2"));
  const auto m = mono("x3^2*x9");
  CHECK(quotient_exact(m, m).is_one());
  CHECK_THROWS_AS(quotient_exact(mono("x1*x2"), mono("x3")), NotDivisible);
}

TEST_CASE("truncate_monomial sends monomials with large indices to zero") {
  CHECK_FALSE(truncate_monomial(mono("x1*x3"), 2).has_value());
  CHECK(truncate_monomial(mono("x1*x3"), 3) == mono("x1*x3"));
  CHECK(truncate_monomial(Monomial::one(), 1) == Monomial::one());
}

TEST_CASE("multi_degree") {
  CHECK(multi_degree(mono("x1^2*x2"), Partition::total()).vec == std::vector<Degree>{3});
  const Partition parity = parse_partition("r=2;default=1;2:2,4,6");
  CHECK(multi_degree(mono("x1*x2^2"), parity).vec == std::vector<Degree>{1, 2});
  CHECK(multi_degree(Monomial::one(), Partition(3, 1)).vec == std::vector<Degree>{0, 0, 0});
}

TEST_CASE("monomial text syntax") {
  CHECK(mono(" x1 ^ 2 * x3 ").to_string() == "x1^2*x3");
  CHECK(mono("x3*x1").to_string() == "x1*x3");
  CHECK(mono("1").is_one());
  CHECK(mono("x1^2*x3").total_degree() == 3);
  CHECK_THROWS_AS(mono("x0"), ParseError);
  CHECK_THROWS_AS(mono("x1*x1"), ParseError);
  CHECK_THROWS_AS(mono("x1^0"), ParseError);
  CHECK_THROWS_AS(mono("y1"), ParseError);
  CHECK_THROWS_AS(mono(""), ParseError);
  CHECK_THROWS_AS(mono("x1*"), ParseError);
  CHECK_THROWS_AS(mono("12"), ParseError);
  try {
    mono("x1*x0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("overflowing exponents are an error") {
  const auto big = Monomial::variable(1, UINT32_MAX);
  CHECK_THROWS_AS(big * mono("x1"), ArithmeticOverflow);
}

TEST_CASE("partition parsing") {
  const auto total = parse_partition("total");
  CHECK(total.classes() == 1);
  CHECK(total.class_of(17) == 1);

  const auto p = parse_partition("r=2;default=1;2:2,4,6");
  CHECK(p.classes() == 2);
  CHECK(p.class_of(1) == 1);
  CHECK(p.class_of(4) == 2);
  CHECK(p.class_of(8) == 1);

  CHECK_THROWS_AS(parse_partition("r=2;default=3"), ClassOutOfRange);
  CHECK_THROWS_AS(parse_partition("r=2;3:1"), ClassOutOfRange);
  CHECK_THROWS_AS(parse_partition("default=1"), ParseError);
  CHECK_THROWS_AS(parse_partition("r=two"), ParseError);
  CHECK_THROWS_AS(parse_partition("r=2;2:1,1"), ParseError);
}

TEST_CASE("monoid laws on random monomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_monomial(rng, 5, 0, 6);
    const auto b = random_monomial(rng, 5, 0, 6);
    const auto c = random_monomial(rng, 5, 0, 6);
    CHECK(lcm(a, lcm(b, c)) == lcm(lcm(a, b), c));
    CHECK(lcm(a, b) == lcm(b, a));
    CHECK(lcm(a, a) == a);
    CHECK(divides(a, b) == (lcm(a, b) == b));

    const auto l = lcm(a, b);
    CHECK(l.total_degree() <= a.total_degree() + b.total_degree());
    CHECK((l.total_degree() == a.total_degree() + b.total_degree()) == gcd(a, b).is_one());

    const auto y = parse_partition("r=3;default=2;1:1,4;3:5");
    CHECK(multi_degree(a * b, y) == multi_degree(a, y) + multi_degree(b, y));
    CHECK(multi_degree(a, Partition::total()).vec[0] == a.total_degree());

    for (VarIndex n = a.max_variable(); n < a.max_variable() + 3; ++n) CHECK(truncate_monomial(a, n) == a);
  }
}
