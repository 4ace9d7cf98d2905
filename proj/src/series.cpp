#include "hilbnum/series.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "hilbnum/errors.hpp"

namespace hilbnum {

namespace {

VarBound join(VarBound a, VarBound b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}

// Appends " + term" / " - term" (or a leading "-term") to out.
void append_term(std::string& out, Coefficient c, const std::string& body) {
  const bool negative = c < 0;
  const auto magnitude = negative ? -static_cast<unsigned __int128>(c) : static_cast<unsigned __int128>(c);
  std::string mag;
  for (auto v = magnitude; v > 0; v /= 10) mag.insert(mag.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body.empty())
    out += mag;
  else if (magnitude == 1)
    out += body;
  else
    out += mag + "*" + body;
}

}  // namespace

GradedSeries::GradedSeries(Degree cap, VarBound nvars,
                           std::initializer_list<std::pair<Monomial, Coefficient>> terms)
    : cap_(cap), nvars_(nvars) {
  for (const auto& [m, c] : terms) accumulate(m, c);
}

GradedSeries GradedSeries::constant(Coefficient c, Degree cap, VarBound nvars) {
  GradedSeries s(cap, nvars);
  s.accumulate(Monomial::one(), c);
  return s;
}

Coefficient GradedSeries::coefficient(const Monomial& m) const {
  if (m.total_degree() > cap_)
    throw CapExceeded("degree of " + m.to_string() + " exceeds cap " + std::to_string(cap_));
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void GradedSeries::accumulate(const Monomial& m, Coefficient c) {
  if (c == 0 || m.total_degree() > cap_) return;
  if (nvars_ && m.max_variable() > *nvars_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

GradedSeries GradedSeries::truncated(Degree cap) const {
  GradedSeries out(std::min(cap, cap_), nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() <= out.cap_) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

GradedSeries GradedSeries::restricted(VarIndex n) const {
  GradedSeries out(cap_, nvars_ ? std::min(*nvars_, n) : n);
  for (const auto& [m, c] : terms_)
    if (m.max_variable() <= n) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out(cap_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, checked_sub<Coefficient>(0, c));
  return out;
}

std::string GradedSeries::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) append_term(out, c, m.is_one() ? std::string() : m.to_string());
  return out.empty() ? "0" : out;
}

GradedSeries add(const GradedSeries& f, const GradedSeries& g) {
  GradedSeries out = f.truncated(g.cap());
  GradedSeries widened(out.cap(), join(f.nvars(), g.nvars()));
  for (const auto& [m, c] : out.terms()) widened.accumulate(m, c);
  for (const auto& [m, c] : g.terms()) widened.accumulate(m, c);
  return widened;
}

GradedSeries subtract(const GradedSeries& f, const GradedSeries& g) { return add(f, -g); }

GradedSeries multiply(const GradedSeries& f, const GradedSeries& g) {
  const Degree cap = std::min(f.cap(), g.cap());
  GradedSeries out(cap, join(f.nvars(), g.nvars()));

  struct Term {
    const Monomial* m;
    Coefficient c;
    Degree deg;
  };
  auto collect = [cap](const GradedSeries& s) {
    std::vector<Term> v;
    v.reserve(s.size());
    for (const auto& [m, c] : s.terms()) {
      const Degree d = m.total_degree();
      if (d <= cap) v.push_back({&m, c, d});
    }
    std::stable_sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.deg < b.deg; });
    return v;
  };
  const auto lhs = collect(f);
  const auto rhs = collect(g);

  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      if (a.deg + b.deg > cap) break;
      out.accumulate(*a.m * *b.m, checked_mul(a.c, b.c));
    }
  }
  return out;
}

GradedSeries nu(VarIndex n, Degree cap) {
  GradedSeries out(cap, n);
  std::vector<Monomial::Factor> factors;
  std::function<void(VarIndex, Degree)> walk = [&](VarIndex var, Degree budget) {
    if (var > n) {
      out.accumulate(Monomial(factors), 1);
      return;
    }
    walk(var + 1, budget);
    for (Exponent e = 1; e <= budget; ++e) {
      factors.emplace_back(var, e);
      walk(var + 1, budget - e);
      factors.pop_back();
    }
  };
  walk(1, cap);
  return out;
}

GradedSeries mu(VarIndex n, Degree cap) {
  GradedSeries out(cap, n);
  std::vector<Monomial::Factor> factors;
  std::function<void(VarIndex)> walk = [&](VarIndex var) {
    if (var > n) {
      out.accumulate(Monomial(factors), factors.size() % 2 == 0 ? 1 : -1);
      return;
    }
    walk(var + 1);
    if (factors.size() < cap) {
      factors.emplace_back(var, 1);
      walk(var + 1);
      factors.pop_back();
    }
  };
  walk(1);
  return out;
}

Monomial relabel(const Monomial& m, const std::map<VarIndex, VarIndex>& perm) {
  std::vector<Monomial::Factor> f;
  f.reserve(m.support_size());
  for (const auto& [var, exp] : m.factors()) {
    auto it = perm.find(var);
    f.emplace_back(it == perm.end() ? var : it->second, exp);
  }
  return Monomial(std::move(f));
}

GradedSeries relabel(const GradedSeries& f, const std::map<VarIndex, VarIndex>& perm) {
  GradedSeries out(f.cap());
  for (const auto& [m, c] : f.terms()) out.accumulate(relabel(m, perm), c);
  return out;
}

CollapsedSeries CollapsedSeries::constant(Coefficient c, std::uint32_t r, Degree cap) {
  CollapsedSeries s(r, cap);
  s.accumulate(MultiDegree{std::vector<Degree>(r, 0)}, c);
  return s;
}

CollapsedSeries CollapsedSeries::univariate(std::initializer_list<Coefficient> coeffs, Degree cap) {
  CollapsedSeries s(1, cap);
  Degree d = 0;
  for (auto c : coeffs) s.accumulate(MultiDegree{{d++}}, c);
  return s;
}

Coefficient CollapsedSeries::coefficient(const MultiDegree& d) const {
  if (d.total() > cap_) throw CapExceeded("degree " + std::to_string(d.total()) + " exceeds cap " + std::to_string(cap_));
  auto it = terms_.find(d);
  return it == terms_.end() ? 0 : it->second;
}

void CollapsedSeries::accumulate(const MultiDegree& d, Coefficient c) {
  if (d.vec.size() != r_) throw Error("multidegree has " + std::to_string(d.vec.size()) + " components, expected " + std::to_string(r_));
  if (c == 0 || d.total() > cap_) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

CollapsedSeries CollapsedSeries::truncated(Degree cap) const {
  CollapsedSeries out(r_, std::min(cap, cap_));
  for (const auto& [d, c] : terms_)
    if (d.total() <= out.cap_) out.terms_.emplace(d, c);
  return out;
}

std::string CollapsedSeries::to_string() const {
  std::vector<std::pair<MultiDegree, Coefficient>> ordered(terms_.begin(), terms_.end());
  // graded, and within a degree t1 before t2
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto ta = a.first.total(), tb = b.first.total();
    if (ta != tb) return ta < tb;
    return a.first.vec > b.first.vec;
  });
  std::string out;
  for (const auto& [d, c] : ordered) {
    std::string body;
    for (std::size_t i = 0; i < d.vec.size(); ++i) {
      if (d.vec[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += r_ == 1 ? std::string("t") : "t" + std::to_string(i + 1);
      if (d.vec[i] != 1) body += "^" + std::to_string(d.vec[i]);
    }
    append_term(out, c, body);
  }
  return out.empty() ? "0" : out;
}

CollapsedSeries add(const CollapsedSeries& f, const CollapsedSeries& g) {
  if (f.classes() != g.classes()) throw Error("collapsed series over different class counts");
  CollapsedSeries out(f.classes(), std::min(f.cap(), g.cap()));
  for (const auto& [d, c] : f.terms()) out.accumulate(d, c);
  for (const auto& [d, c] : g.terms()) out.accumulate(d, c);
  return out;
}

CollapsedSeries multiply(const CollapsedSeries& f, const CollapsedSeries& g) {
  if (f.classes() != g.classes()) throw Error("collapsed series over different class counts");
  CollapsedSeries out(f.classes(), std::min(f.cap(), g.cap()));
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      if (a.total() + b.total() > out.cap()) continue;
      out.accumulate(a + b, checked_mul(ca, cb));
    }
  }
  return out;
}

CollapsedSeries collapse(const GradedSeries& f, const Partition& y) {
  CollapsedSeries out(y.classes(), f.cap());
  for (const auto& [m, c] : f.terms()) out.accumulate(multi_degree(m, y), c);
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::uint64_t candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::uint64_t nth_prime(std::size_t i) {
  if (i == 0) throw Error("primes are indexed from 1");
  return first_primes(i).back();
}

std::map<std::uint64_t, Coefficient> to_dirichlet(const GradedSeries& f) {
  std::map<std::uint64_t, Coefficient> out;
  VarIndex largest = 0;
  for (const auto& [m, c] : f.terms()) largest = std::max(largest, m.max_variable());
  const auto primes = first_primes(largest);
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t key = 1;
    for (const auto& [var, exp] : m.factors()) {
      const auto p = primes[var - 1];
      for (Exponent e = 0; e < exp; ++e) key = checked_mul(key, p);
    }
    out[key] = c;
  }
  out.try_emplace(1, 0);
  return out;
}

}  // namespace hilbnum
