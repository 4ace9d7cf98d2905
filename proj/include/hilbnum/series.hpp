#ifndef HILBNUM_SERIES_HPP
#define HILBNUM_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbnum/checked.hpp"
#include "hilbnum/monomial.hpp"

namespace hilbnum {

// Largest variable index a series may involve; nullopt means unbounded.
using VarBound = std::optional<VarIndex>;

// Element of Z[[x1, x2, ...]] known modulo monomials of total degree > cap.
//
// Equality compares cap and coefficients: two series are equal when they
// agree in every degree up to the shared cap. Arithmetic between series of
// different caps happens at the smaller cap, which is exact because the
// product of a degree-a and a degree-b term has degree a + b.
class GradedSeries {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  explicit GradedSeries(Degree cap, VarBound nvars = std::nullopt) : cap_(cap), nvars_(nvars) {}
  GradedSeries(Degree cap, VarBound nvars, std::initializer_list<std::pair<Monomial, Coefficient>> terms);

  static GradedSeries constant(Coefficient c, Degree cap, VarBound nvars = std::nullopt);

  Degree cap() const { return cap_; }
  VarBound nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Throws CapExceeded when tdeg(m) > cap.
  Coefficient coefficient(const Monomial& m) const;
  // Adds c to the coefficient of m. Terms above the cap are discarded, and
  // so are terms outside x1..nvars when nvars is bounded.
  void accumulate(const Monomial& m, Coefficient c);

  // Same series known to a smaller cap.
  GradedSeries truncated(Degree cap) const;
  // Drops every term involving a variable beyond n.
  GradedSeries restricted(VarIndex n) const;

  GradedSeries operator-() const;

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Degree cap_;
  VarBound nvars_;
  Terms terms_;
};

GradedSeries add(const GradedSeries& f, const GradedSeries& g);
GradedSeries subtract(const GradedSeries& f, const GradedSeries& g);
GradedSeries multiply(const GradedSeries& f, const GradedSeries& g);

inline GradedSeries operator+(const GradedSeries& f, const GradedSeries& g) { return add(f, g); }
inline GradedSeries operator-(const GradedSeries& f, const GradedSeries& g) { return subtract(f, g); }
inline GradedSeries operator*(const GradedSeries& f, const GradedSeries& g) { return multiply(f, g); }

// Sum of every monomial in x1..xn of degree <= cap.
GradedSeries nu(VarIndex n, Degree cap);
// prod_{i <= n} (1 - x_i) truncated at cap.
GradedSeries mu(VarIndex n, Degree cap);

// Applies a permutation of variable indices (missing entries are fixed).
Monomial relabel(const Monomial& m, const std::map<VarIndex, VarIndex>& perm);
GradedSeries relabel(const GradedSeries& f, const std::map<VarIndex, VarIndex>& perm);

// Image of a series under x_i -> t_{class(i)}: Z[[t1..tr]] modulo degree > cap.
class CollapsedSeries {
 public:
  using Terms = std::map<MultiDegree, Coefficient>;

  CollapsedSeries(std::uint32_t r, Degree cap) : r_(r), cap_(cap) {}

  static CollapsedSeries constant(Coefficient c, std::uint32_t r, Degree cap);
  // Univariate polynomial from coefficients a_0..a_cap.
  static CollapsedSeries univariate(std::initializer_list<Coefficient> coeffs, Degree cap);

  std::uint32_t classes() const { return r_; }
  Degree cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const MultiDegree& d) const;
  void accumulate(const MultiDegree& d, Coefficient c);
  CollapsedSeries truncated(Degree cap) const;

  friend bool operator==(const CollapsedSeries& a, const CollapsedSeries& b) {
    return a.r_ == b.r_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  // `t` when r = 1, otherwise t1..tr; ascending total degree.
  std::string to_string() const;

 private:
  std::uint32_t r_;
  Degree cap_;
  Terms terms_;
};

CollapsedSeries add(const CollapsedSeries& f, const CollapsedSeries& g);
CollapsedSeries multiply(const CollapsedSeries& f, const CollapsedSeries& g);

CollapsedSeries collapse(const GradedSeries& f, const Partition& y);

// Coefficient of x1^a1...xn^an moved to the integer p1^a1...pn^an (p_i the
// i-th prime). Turns the convolution product into Dirichlet convolution.
std::map<std::uint64_t, Coefficient> to_dirichlet(const GradedSeries& f);

// The i-th prime, 1-based.
std::uint64_t nth_prime(std::size_t i);
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace hilbnum

#endif
