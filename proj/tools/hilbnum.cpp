// hilbnum: Hilbert series and numerators of monomial ideals.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hilbnum/cli.hpp"

namespace {

using hilbnum::Command;
using hilbnum::OutputFormat;
using hilbnum::RunConfig;

void add_ideal(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--ideal,--stream", cfg.ideal_source,
                  "ideal file, or a builtin stream: example-23gen, empty, powers:d1,d2,...");
}

void add_cap(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--cap", cfg.cap, "total-degree truncation bound");
}

void add_collapse(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--collapse,--partition", cfg.partition,
                  "collapse by a partition: `total` or `r=<r>;default=<c>;<c>:<i>,<j>;...`");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"json", OutputFormat::json}};
  sub->add_option("--output", cfg.output, "text or json")->transform(CLI::CheckedTransformer(formats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded Hilbert series and numerators of monomial ideals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* numerator = app.add_subcommand("numerator", "Hilbert numerator p(I)");
  add_ideal(numerator, cfg);
  add_cap(numerator, cfg);
  add_collapse(numerator, cfg);
  add_output(numerator, cfg);
  numerator->add_option("--method", cfg.method, "incl-excl, lcm-lattice, koszul, oracle or all")
      ->check(CLI::IsMember({"incl-excl", "lcm-lattice", "koszul", "oracle", "all"}));
  numerator->add_option("--nvars", cfg.nvars, "variables x1..xn for the koszul and oracle routes");

  auto* series = app.add_subcommand("series", "characteristic series chi(I) and Hilbert series q(I)");
  add_ideal(series, cfg);
  add_cap(series, cfg);
  add_collapse(series, cfg);
  add_output(series, cfg);
  series->add_option("--nvars", cfg.nvars, "variables x1..xn");

  auto* lattice = app.add_subcommand("lattice", "lcm lattice with Moebius values");
  add_ideal(lattice, cfg);
  add_cap(lattice, cfg);
  add_output(lattice, cfg);

  auto* koszul = app.add_subcommand("koszul", "Koszul complex at a monomial");
  add_ideal(koszul, cfg);
  add_cap(koszul, cfg);
  add_output(koszul, cfg);
  koszul->add_option("--monomial", cfg.monomial, "monomial such as x1^2*x3")->required();

  auto* converge = app.add_subcommand("converge", "collapsed numerators g_n of truncations");
  add_ideal(converge, cfg);
  add_cap(converge, cfg);
  add_collapse(converge, cfg);
  add_output(converge, cfg);
  converge->add_option("--nmax", cfg.n_max, "largest truncation n")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "certify a univariate numerator as (1-t)^b * O-sequence");
  add_output(classify, cfg);
  classify->add_option("--series", cfg.series, "coefficients a_0,a_1,...");
  classify->add_option("--series-file", cfg.series_file, "collapsed series JSON with r = 1");
  classify->add_option("--bmax", cfg.b_max, "largest power of (1-t) tried")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "numerator conditions on a multigraded series");
  add_output(check, cfg);
  check->add_option("--series-file", cfg.series_file, "series JSON")->required();

  auto* distance = app.add_subcommand("distance", "truncation distance between two ideals");
  add_ideal(distance, cfg);
  add_cap(distance, cfg);
  add_output(distance, cfg);
  distance->add_option("--other", cfg.other_source, "second ideal file or stream")->required();
  distance->add_option("--kind", cfg.distance_kind, "varwise or degreewise")
      ->check(CLI::IsMember({"varwise", "degreewise"}));
  distance->add_option("--search-bound", cfg.search_bound, "largest level inspected")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "random four-way cross-validation (seed: HILBNUM_SEED)");
  add_cap(selftest, cfg);
  selftest->add_option("--count", cfg.count, "number of random ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::map<CLI::App*, Command> commands{
      {numerator, Command::numerator}, {series, Command::series},     {lattice, Command::lattice},
      {koszul, Command::koszul},       {converge, Command::converge}, {classify, Command::classify},
      {check, Command::check},         {distance, Command::distance}, {selftest, Command::selftest}};
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) cfg.command = command;

  return hilbnum::run_command(cfg, std::cout, std::cerr);
}
