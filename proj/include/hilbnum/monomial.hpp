#ifndef HILBNUM_MONOMIAL_HPP
#define HILBNUM_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbnum {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;
using Degree = std::uint64_t;

// An element of the free commutative monoid on x1, x2, ...
//
// Stored sparsely as (variable index, exponent) pairs sorted by index with
// no zero exponents, so equality and the canonical order are plain
// lexicographic comparison of the pair lists. The empty list is 1.
class Monomial {
 public:
  using Factor = std::pair<VarIndex, Exponent>;

  Monomial() = default;
  // Factors may come in any order; repeated indices are merged by adding
  // exponents and zero exponents are dropped. Index 0 is rejected.
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial one() { return {}; }
  static Monomial variable(VarIndex i, Exponent e = 1);
  // x_{first} * x_{first+1} * ... * x_{last}; 1 when last < first.
  static Monomial squarefree_range(VarIndex first, VarIndex last);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Degree total_degree() const;
  // Largest variable index present, 0 for the unit.
  VarIndex max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }
  std::size_t support_size() const { return factors_.size(); }
  Exponent exponent(VarIndex i) const;

  // Exponent addition.
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

bool divides(const Monomial& t, const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// m / t; throws NotDivisible unless t | m.
Monomial quotient_exact(const Monomial& m, const Monomial& t);
// Projection onto x1..xn: m itself, or nullopt (the zero of the pointed
// monoid) when m involves a variable beyond n.
std::optional<Monomial> truncate_monomial(const Monomial& m, VarIndex n);

// Parses `1` or `x<k>[^<e>]` factors joined by `*`; whitespace ignored.
Monomial parse_monomial(std::string_view text);

/// Assignment of variables to grading classes 1..r.
class Partition {
 public:
  Partition(std::uint32_t classes, std::uint32_t default_class,
            std::map<VarIndex, std::uint32_t> explicit_classes = {});

  // r = 1, every variable in class 1.
  static Partition total() { return Partition(1, 1); }

  std::uint32_t classes() const { return classes_; }
  std::uint32_t default_class() const { return default_class_; }
  const std::map<VarIndex, std::uint32_t>& explicit_classes() const { return explicit_; }
  std::uint32_t class_of(VarIndex i) const;

 private:
  std::uint32_t classes_;
  std::uint32_t default_class_;
  std::map<VarIndex, std::uint32_t> explicit_;
};

// `total` or `r=<int>;default=<class>;<class>:<idx>,<idx>,...;...`
Partition parse_partition(std::string_view spec);

struct MultiDegree {
  std::vector<Degree> vec;

  Degree total() const;
  MultiDegree operator+(const MultiDegree& other) const;
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

MultiDegree multi_degree(const Monomial& m, const Partition& y);

}  // namespace hilbnum

#endif
