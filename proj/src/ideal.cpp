#include "hilbnum/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hilbnum/errors.hpp"

namespace hilbnum {

MonomialIdeal MonomialIdeal::minimalize(std::span<const Monomial> raw) {
  std::vector<std::pair<Degree, const Monomial*>> order;
  order.reserve(raw.size());
  for (const auto& m : raw) order.emplace_back(m.total_degree(), &m);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  });
  // Nothing of larger degree divides a smaller one, so one ascending pass
  // against the kept set is enough.
  MonomialIdeal out;
  for (const auto& [deg, m] : order) {
    const bool redundant =
        std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& g) { return divides(g, *m); });
    if (!redundant) out.gens_.push_back(*m);
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

VarIndex MonomialIdeal::max_variable() const {
  VarIndex n = 0;
  for (const auto& g : gens_) n = std::max(n, g.max_variable());
  return n;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal truncate_ideal(const MonomialIdeal& ideal, VarIndex n) {
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators())
    if (g.max_variable() <= n) kept.push_back(g);
  return MonomialIdeal::minimalize(kept);
}

MonomialIdeal truncate_below_degree(const MonomialIdeal& ideal, Degree d) {
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators())
    if (g.total_degree() <= d) kept.push_back(g);
  return MonomialIdeal::minimalize(kept);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) lcms.push_back(lcm(g, h));
  return MonomialIdeal::minimalize(lcms);
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::minimalize(all);
}

MonomialIdeal relabel(const MonomialIdeal& ideal, const std::map<VarIndex, VarIndex>& perm) {
  std::vector<Monomial> mapped;
  for (const auto& g : ideal.generators()) mapped.push_back(relabel(g, perm));
  return MonomialIdeal::minimalize(mapped);
}

GradedSeries staircase_complement(const MonomialIdeal& ideal, VarIndex n, Degree cap) {
  GradedSeries out(cap, n);
  const MonomialIdeal local = truncate_ideal(ideal, n);
  if (local.is_unit()) return out;

  // Depth-first over exponent vectors of x1..xn. Once the prefix lies in the
  // ideal every extension does too, so that branch and all larger exponents
  // of the current variable are skipped.
  std::vector<Monomial::Factor> prefix;
  auto walk = [&](auto&& self, VarIndex var, Degree budget) -> void {
    if (var > n) {
      out.accumulate(Monomial(prefix), 1);
      return;
    }
    self(self, var + 1, budget);
    for (Exponent e = 1; e <= budget; ++e) {
      prefix.emplace_back(var, e);
      const bool inside = local.contains(Monomial(prefix));
      if (!inside) self(self, var + 1, budget - e);
      prefix.pop_back();
      if (inside) break;
    }
  };
  walk(walk, 1, cap);
  return out;
}

GradedSeries char_series(const MonomialIdeal& ideal, VarIndex n, Degree cap) {
  return subtract(nu(n, cap), staircase_complement(ideal, n, cap));
}

namespace streams {

GeneratorStream empty() {
  return {"empty", [](Degree) { return std::vector<Monomial>{}; }};
}

GeneratorStream example_23gen() {
  return {"example-23gen", [](Degree d) {
            std::vector<Monomial> out;
            // a_i has degree i + 1
            if (d >= 2) {
              const auto i = static_cast<VarIndex>(d - 1);
              out.push_back(Monomial::squarefree_range(1, i - 1) * Monomial::variable(i, 2));
            }
            // b_j has degree j + 4, j >= 2
            if (d >= 6) {
              const auto j = static_cast<VarIndex>(d - 4);
              out.push_back(Monomial::squarefree_range(1, j - 2) * Monomial::variable(j, 6));
            }
            return out;
          }};
}

GeneratorStream powers(std::vector<Exponent> degrees) {
  std::string name = "powers:";
  for (std::size_t i = 0; i < degrees.size(); ++i) name += (i ? "," : "") + std::to_string(degrees[i]);
  return {name, [degrees = std::move(degrees)](Degree d) {
            std::vector<Monomial> out;
            for (std::size_t i = 0; i < degrees.size(); ++i)
              if (degrees[i] == d) out.push_back(Monomial::variable(static_cast<VarIndex>(i + 1), degrees[i]));
            return out;
          }};
}

std::optional<GeneratorStream> by_name(std::string_view name) {
  if (name == "example-23gen") return example_23gen();
  if (name == "empty") return empty();
  if (!name.starts_with("powers:")) return std::nullopt;
  std::vector<Exponent> degrees;
  std::string rest(name.substr(7));
  std::stringstream ss(rest);
  std::string item;
  std::size_t column = 8;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0 || v > UINT32_MAX)
      throw ParseError("expected positive degree in powers stream", 1, column);
    degrees.push_back(static_cast<Exponent>(v));
    column += item.size() + 1;
  }
  if (degrees.empty()) throw ParseError("powers stream needs at least one degree", 1, 8);
  return powers(std::move(degrees));
}

}  // namespace streams

MonomialIdeal realize_stream(const GeneratorStream& stream, Degree max_degree) {
  std::vector<Monomial> all;
  for (Degree d = 1; d <= max_degree; ++d) {
    for (auto& m : stream.per_degree(d)) {
      if (m.total_degree() != d)
        throw StreamDegreeMismatch(stream.name + " emitted " + m.to_string() + " at degree " + std::to_string(d));
      all.push_back(std::move(m));
    }
  }
  return MonomialIdeal::minimalize(all);
}

double IdealDistance::value() const { return exponent ? std::ldexp(1.0, -static_cast<int>(*exponent)) : 0.0; }

std::string IdealDistance::to_string() const {
  return exponent ? "2^-" + std::to_string(*exponent) : std::string("indistinguishable");
}

IdealDistance ideal_distance(const MonomialIdeal& a, const MonomialIdeal& b, DistanceKind kind,
                             std::uint32_t search_bound) {
  for (std::uint32_t level = 1; level <= search_bound; ++level) {
    const bool agree = kind == DistanceKind::varwise
                           ? truncate_ideal(a, level) == truncate_ideal(b, level)
                           : truncate_below_degree(a, level) == truncate_below_degree(b, level);
    if (!agree) return {level - 1};
  }
  return {};
}

MonomialIdeal parse_ideal_text(std::string_view text, std::vector<std::size_t>* redundant_lines) {
  std::vector<Monomial> raw;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    try {
      raw.push_back(parse_monomial(line));
    } catch (const ParseError& e) {
      const std::string what = e.what();
      throw ParseError(what.substr(what.find(": ") + 2), line_no, e.column());
    }
    lines.push_back(line_no);
    if (end == text.size()) break;
  }
  MonomialIdeal ideal = MonomialIdeal::minimalize(raw);
  if (redundant_lines) {
    redundant_lines->clear();
    std::set<Monomial> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const bool minimal =
          std::binary_search(ideal.generators().begin(), ideal.generators().end(), raw[i]);
      if (!minimal || !seen.insert(raw[i]).second) redundant_lines->push_back(lines[i]);
    }
  }
  return ideal;
}

MonomialIdeal parse_ideal_file(const std::string& path, std::vector<std::size_t>* redundant_lines) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open ideal file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read ideal file " + path);
  return parse_ideal_text(buf.str(), redundant_lines);
}

}  // namespace hilbnum
