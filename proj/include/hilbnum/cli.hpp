#ifndef HILBNUM_CLI_HPP
#define HILBNUM_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include "hilbnum/errors.hpp"
#include "hilbnum/ideal.hpp"
#include "hilbnum/monomial.hpp"

namespace hilbnum {

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { numerator, series, lattice, koszul, converge, classify, check, distance, selftest };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::numerator;
  // File path or builtin stream name (example-23gen, empty, powers:...).
  std::string ideal_source;
  // Second ideal for `distance`.
  std::string other_source;
  // incl-excl, lcm-lattice, koszul, oracle or all.
  std::string method = "incl-excl";
  std::optional<VarIndex> nvars;
  std::optional<Degree> cap;
  // Partition spec for collapsing; none keeps the multigraded series.
  std::optional<std::string> partition;
  OutputFormat output = OutputFormat::text;
  std::string monomial;
  // Comma-separated coefficients or a JSON series file.
  std::string series;
  std::string series_file;
  std::uint64_t b_max = 6;
  VarIndex n_max = 6;
  std::uint32_t search_bound = 20;
  std::string distance_kind = "varwise";
  std::uint32_t count = 50;
  std::optional<std::uint64_t> seed;
};

// Exit status: 0 success, 1 failed check or mismatch, 2 usage error.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// Resolves a builtin stream name (realized through `max_degree`) or reads an
// ideal file, noting redundant generator lines on `diag`.
MonomialIdeal load_ideal(const std::string& source, Degree max_degree, std::ostream& diag);

// Seed from HILBNUM_SEED, or the fixed default.
std::uint64_t default_seed();
inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Minimalized ideal with 1..max_gens generators in x1..max_vars, each of
// degree 1..max_degree.
MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_gens, VarIndex max_vars, Degree max_degree);
Monomial random_monomial(std::mt19937_64& rng, VarIndex max_vars, Degree min_degree, Degree max_degree);

}  // namespace hilbnum

#endif
