#ifndef HILBNUM_IDEAL_HPP
#define HILBNUM_IDEAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbnum/monomial.hpp"
#include "hilbnum/series.hpp"

namespace hilbnum {

// A monomial ideal held by its minimal generators W(I).
//
// Generators form a divisibility antichain kept in canonical order. The zero
// ideal has no generators; the unit ideal is exactly {1}.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero() { return {}; }
  static MonomialIdeal unit() { return minimalize(std::vector<Monomial>{Monomial::one()}); }
  static MonomialIdeal principal(const Monomial& m) { return minimalize(std::vector<Monomial>{m}); }

  // Drops duplicates and every monomial divisible by another one.
  static MonomialIdeal minimalize(std::span<const Monomial> raw);
  static MonomialIdeal minimalize(std::initializer_list<Monomial> raw) {
    return minimalize(std::span<const Monomial>(raw.begin(), raw.size()));
  }

  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  std::size_t size() const { return gens_.size(); }
  VarIndex max_variable() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const;

 private:
  std::vector<Monomial> gens_;
};

// Generators supported on x1..xn.
MonomialIdeal truncate_ideal(const MonomialIdeal& ideal, VarIndex n);
// Generators of total degree <= d.
MonomialIdeal truncate_below_degree(const MonomialIdeal& ideal, Degree d);
// Generated by pairwise lcm's of generators, then minimalized.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal relabel(const MonomialIdeal& ideal, const std::map<VarIndex, VarIndex>& perm);

// Monomials of x1..xn with degree <= cap outside the ideal, each with
// coefficient 1.
GradedSeries staircase_complement(const MonomialIdeal& ideal, VarIndex n, Degree cap);
// Monomials of x1..xn with degree <= cap inside the ideal.
GradedSeries char_series(const MonomialIdeal& ideal, VarIndex n, Degree cap);

// A locally finitely generated family: finitely many generators per degree.
struct GeneratorStream {
  std::string name;
  // Generators of total degree exactly d, d >= 1.
  std::function<std::vector<Monomial>(Degree)> per_degree;
};

namespace streams {

GeneratorStream empty();
// a_i = x1...x_{i-1} x_i^2 (i >= 1) and b_j = x1...x_{j-2} x_j^6 (j >= 2).
GeneratorStream example_23gen();
// x_i^{d_i}.
GeneratorStream powers(std::vector<Exponent> degrees);

// `example-23gen`, `empty`, or `powers:d1,d2,...`; nullopt for other names.
std::optional<GeneratorStream> by_name(std::string_view name);

}  // namespace streams

// Minimal generators among all emissions of degree 1..max_degree. Throws
// StreamDegreeMismatch when an emission has the wrong degree.
MonomialIdeal realize_stream(const GeneratorStream& stream, Degree max_degree);

enum class DistanceKind { varwise, degreewise };

// 2^{-exponent} for the last level at which both ideals agree, or
// indistinguishable when they agree through the whole search bound.
struct IdealDistance {
  std::optional<std::uint32_t> exponent;

  bool indistinguishable() const { return !exponent.has_value(); }
  double value() const;
  std::string to_string() const;
};

IdealDistance ideal_distance(const MonomialIdeal& a, const MonomialIdeal& b, DistanceKind kind,
                             std::uint32_t search_bound);

// Ideal file contents: one monomial per line, `#` comments, blank lines
// ignored. Redundant generators are dropped and their line numbers returned
// through `redundant_lines` when given.
MonomialIdeal parse_ideal_text(std::string_view text, std::vector<std::size_t>* redundant_lines = nullptr);
MonomialIdeal parse_ideal_file(const std::string& path, std::vector<std::size_t>* redundant_lines = nullptr);

}  // namespace hilbnum

#endif
