#include "hilbnum/cli.hpp"

#include <cstdlib>
#include <variant>

#include "hilbnum/engine.hpp"
#include "hilbnum/io.hpp"
#include "hilbnum/macaulay.hpp"

namespace hilbnum {

using nlohmann::ordered_json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HILBNUM_SEED"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw UsageError("HILBNUM_SEED must be an unsigned integer");
  }
  return kDefaultSeed;
}

Monomial random_monomial(std::mt19937_64& rng, VarIndex max_vars, Degree min_degree, Degree max_degree) {
  std::uniform_int_distribution<Degree> degree(min_degree, max_degree);
  std::uniform_int_distribution<VarIndex> var(1, max_vars);
  const Degree d = degree(rng);
  std::vector<Monomial::Factor> f;
  for (Degree i = 0; i < d; ++i) f.emplace_back(var(rng), 1);
  return Monomial(std::move(f));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_gens, VarIndex max_vars, Degree max_degree) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Monomial> raw;
  const auto n = count(rng);
  for (std::size_t i = 0; i < n; ++i) raw.push_back(random_monomial(rng, max_vars, 1, max_degree));
  return MonomialIdeal::minimalize(raw);
}

MonomialIdeal load_ideal(const std::string& source, Degree max_degree, std::ostream& diag) {
  if (source.empty()) throw UsageError("no ideal given (--ideal <file|stream>)");
  if (auto stream = streams::by_name(source)) return realize_stream(*stream, max_degree);
  std::vector<std::size_t> redundant;
  MonomialIdeal ideal = parse_ideal_file(source, &redundant);
  for (auto line : redundant) diag << source << ":" << line << ": note: redundant generator dropped\n";
  return ideal;
}

namespace {

Degree require_cap(const RunConfig& cfg) {
  if (!cfg.cap) throw UsageError("--cap is required for this command");
  return *cfg.cap;
}

void emit(std::ostream& out, const RunConfig& cfg, const GradedSeries& f) {
  if (cfg.partition) {
    const CollapsedSeries c = collapse(f, parse_partition(*cfg.partition));
    out << (cfg.output == OutputFormat::json ? to_json(c).dump() : c.to_string()) << '\n';
  } else {
    out << (cfg.output == OutputFormat::json ? to_json(f).dump() : f.to_string()) << '\n';
  }
}

ordered_json series_json(const RunConfig& cfg, const GradedSeries& f) {
  if (cfg.partition) return to_json(collapse(f, parse_partition(*cfg.partition)));
  return to_json(f);
}

std::string series_text(const RunConfig& cfg, const GradedSeries& f) {
  if (cfg.partition) return collapse(f, parse_partition(*cfg.partition)).to_string();
  return f.to_string();
}

int run_numerator(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Degree cap = require_cap(cfg);
  const MonomialIdeal ideal = load_ideal(cfg.ideal_source, cap, diag);
  if (cfg.method == "all") {
    const CrossCheck check = cross_validate(ideal, cap, cfg.nvars);
    if (check.mismatch) {
      out << to_json(*check.mismatch).dump() << '\n';
      diag << "error: " << check.mismatch->describe() << '\n';
      return 1;
    }
    emit(out, cfg, check.numerator);
    return 0;
  }
  const auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  emit(out, cfg, numerator(ideal, *method, cap, cfg.nvars));
  return 0;
}

int run_series(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Degree cap = require_cap(cfg);
  const MonomialIdeal ideal = load_ideal(cfg.ideal_source, cap, diag);
  const VarIndex n = cfg.nvars.value_or(natural_variable_count(ideal));
  const GradedSeries chi = char_series(ideal, n, cap);
  const GradedSeries q = staircase_complement(ideal, n, cap);
  if (cfg.output == OutputFormat::json) {
    out << ordered_json{{"chi", series_json(cfg, chi)}, {"q", series_json(cfg, q)}}.dump() << '\n';
  } else {
    out << "chi: " << series_text(cfg, chi) << '\n' << "q: " << series_text(cfg, q) << '\n';
  }
  return 0;
}

int run_lattice(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const MonomialIdeal ideal = load_ideal(cfg.ideal_source, cfg.cap.value_or(64), diag);
  const LcmLattice lattice = build_lcm_lattice(ideal, cfg.cap);
  if (cfg.output == OutputFormat::json) {
    ordered_json elements = ordered_json::array();
    for (std::size_t i = 0; i < lattice.elements.size(); ++i)
      elements.push_back({{"monomial", lattice.elements[i].to_string()}, {"mobius", lattice.mobius[i]}});
    out << ordered_json{{"elements", std::move(elements)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < lattice.elements.size(); ++i)
      out << lattice.elements[i] << '\t' << lattice.mobius[i] << '\n';
  }
  return 0;
}

std::string face_text(const std::vector<VarIndex>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + std::to_string(face[i]);
  return s + "}";
}

int run_koszul(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (cfg.monomial.empty()) throw UsageError("--monomial is required for koszul");
  const Monomial m = parse_monomial(cfg.monomial);
  const MonomialIdeal ideal = load_ideal(cfg.ideal_source, cfg.cap.value_or(m.total_degree()), diag);
  const KoszulComplex complex = koszul_complex(ideal, m);
  const Coefficient chi = complex.reduced_euler_characteristic();
  const Coefficient coeff = koszul_coefficient(ideal, m);
  if (cfg.output == OutputFormat::json) {
    out << ordered_json{{"monomial", m.to_string()},
                        {"faces", complex.faces},
                        {"reduced_euler_characteristic", chi},
                        {"coefficient", coeff}}
               .dump()
        << '\n';
  } else {
    out << "faces:";
    for (const auto& f : complex.faces) out << ' ' << face_text(f);
    out << '\n' << "reduced euler characteristic: " << chi << '\n' << "coefficient: " << coeff << '\n';
  }
  return 0;
}

int run_converge(const RunConfig& cfg, std::ostream& out) {
  const Degree cap = require_cap(cfg);
  auto stream = streams::by_name(cfg.ideal_source);
  if (!stream) throw UsageError("converge needs a builtin stream (--stream), got '" + cfg.ideal_source + "'");
  const Partition y = parse_partition(cfg.partition.value_or("total"));
  const ConvergenceRun run = convergence_run(*stream, y, cfg.n_max, cap);

  bool recursion_ok = true;
  const bool check_recursion = stream->name == "example-23gen" && cfg.n_max >= 2;
  if (check_recursion) recursion_ok = verify_23gen_recursion(cfg.n_max, cap);

  if (cfg.output == OutputFormat::json) {
    ordered_json steps = ordered_json::array();
    for (const auto& [n, g] : run.steps) steps.push_back({{"n", n}, {"g", to_json(g)}});
    ordered_json report{{"stream", stream->name}, {"steps", std::move(steps)}};
    if (run.stabilized_prefix) {
      report["stabilized_prefix"] = *run.stabilized_prefix;
      report["limit"] = to_json(run.last().truncated(*run.stabilized_prefix));
    } else {
      report["stabilized_prefix"] = nullptr;
    }
    if (check_recursion) report["recursion"] = recursion_ok;
    out << report.dump() << '\n';
  } else {
    for (const auto& [n, g] : run.steps) out << "g_" << n << ": " << g.to_string() << '\n';
    if (run.stabilized_prefix)
      out << "stabilized through degree " << *run.stabilized_prefix << ": "
          << run.last().truncated(*run.stabilized_prefix).to_string() << '\n';
    else
      out << "not stabilized\n";
    if (check_recursion) out << "recursion: " << (recursion_ok ? "ok" : "FAILED") << '\n';
  }
  return recursion_ok ? 0 : 1;
}

UnivariateSeries load_univariate(const RunConfig& cfg) {
  if (!cfg.series.empty()) return parse_univariate(cfg.series);
  if (cfg.series_file.empty()) throw UsageError("classify needs --series or --series-file");
  auto parsed = read_series_file(cfg.series_file);
  if (auto* c = std::get_if<CollapsedSeries>(&parsed)) return to_univariate(*c);
  throw UsageError("classify expects a collapsed series with r = 1");
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
  const UnivariateSeries f = load_univariate(cfg);
  const Classification result = classify_numerator(f, cfg.b_max);
  if (cfg.output == OutputFormat::json) {
    ordered_json certs = ordered_json::array();
    for (const auto& c : result.certificates) certs.push_back({{"a", c.a}, {"b", c.b}, {"degenerate", c.degenerate}});
    out << ordered_json{{"series", f.to_string()}, {"cap", f.cap()}, {"certified", result.certified()},
                        {"certificates", std::move(certs)}}
               .dump()
        << '\n';
  } else {
    if (!result.certified()) out << "not certified (b <= " << cfg.b_max << ", through degree " << f.cap() << ")\n";
    for (const auto& c : result.certificates) {
      if (c.degenerate)
        out << "degenerate: (1-t)^" << c.b << " (quotient is the field)\n";
      else
        out << "G_{" << c.a << "," << c.b << "} through degree " << f.cap() << '\n';
    }
  }
  return result.certified() ? 0 : 1;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.series_file.empty()) throw UsageError("check needs --series-file");
  auto parsed = read_series_file(cfg.series_file);
  const auto* p = std::get_if<GradedSeries>(&parsed);
  if (!p) throw UsageError("check expects a multigraded series JSON");
  const bool sums = divisor_sum_check(*p);
  const bool bk = bjorner_kalai_check(*p);
  if (cfg.output == OutputFormat::json)
    out << ordered_json{{"divisor_sums", sums}, {"bjorner_kalai", bk}}.dump() << '\n';
  else
    out << "divisor-sums: " << (sums ? "pass" : "fail") << '\n' << "bjorner-kalai: " << (bk ? "pass" : "fail") << '\n';
  return sums && bk ? 0 : 1;
}

int run_distance(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  DistanceKind kind;
  if (cfg.distance_kind == "varwise")
    kind = DistanceKind::varwise;
  else if (cfg.distance_kind == "degreewise")
    kind = DistanceKind::degreewise;
  else
    throw UsageError("--kind must be varwise or degreewise");
  const Degree realize = cfg.cap.value_or(cfg.search_bound);
  const MonomialIdeal a = load_ideal(cfg.ideal_source, realize, diag);
  const MonomialIdeal b = load_ideal(cfg.other_source, realize, diag);
  const IdealDistance d = ideal_distance(a, b, kind, cfg.search_bound);
  if (cfg.output == OutputFormat::json)
    out << ordered_json{{"kind", cfg.distance_kind},
                        {"exponent", d.exponent ? ordered_json(*d.exponent) : ordered_json(nullptr)},
                        {"indistinguishable", d.indistinguishable()}}
               .dump()
        << '\n';
  else
    out << d.to_string() << '\n';
  return 0;
}

int run_selftest(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed.value_or(default_seed());
  const Degree cap = cfg.cap.value_or(12);
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = 0; i < cfg.count; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 6, 5, 4);
    const CrossCheck check = cross_validate(ideal, cap, 5);
    if (check.mismatch) {
      out << to_json(*check.mismatch).dump() << '\n';
      return 1;
    }
  }
  out << "selftest: " << cfg.count << " random ideals, seed " << seed << ", cap " << cap << ": all routes agree\n";
  return 0;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  try {
    switch (cfg.command) {
      case Command::numerator:
        return run_numerator(cfg, out, diag);
      case Command::series:
        return run_series(cfg, out, diag);
      case Command::lattice:
        return run_lattice(cfg, out, diag);
      case Command::koszul:
        return run_koszul(cfg, out, diag);
      case Command::converge:
        return run_converge(cfg, out);
      case Command::classify:
        return run_classify(cfg, out);
      case Command::check:
        return run_check(cfg, out);
      case Command::distance:
        return run_distance(cfg, out, diag);
      case Command::selftest:
        return run_selftest(cfg, out);
    }
  } catch (const UsageError& e) {
    diag << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    diag << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    diag << "io error: " << e.what() << '\n';
    return 2;
  } catch (const ClassOutOfRange& e) {
    diag << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hilbnum
