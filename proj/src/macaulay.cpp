#include "hilbnum/macaulay.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "hilbnum/errors.hpp"

namespace hilbnum {

namespace {

// C(k, j) <= u without overflowing on large k.
bool binomial_at_most(std::uint64_t k, std::uint64_t j, std::uint64_t u) {
  try {
    return binomial(k, j) <= u;
  } catch (const ArithmeticOverflow&) {
    return false;
  }
}

}  // namespace

std::string UnivariateSeries::to_string() const { return to_collapsed(*this).to_string(); }

UnivariateSeries parse_univariate(std::string_view text) {
  UnivariateSeries out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t offset = start;
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
      ++offset;
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') {
      item.remove_prefix(1);
      ++offset;
    }
    Coefficient v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("expected integer coefficient", 1, offset + 1);
    out.coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

UnivariateSeries to_univariate(const CollapsedSeries& s) {
  if (s.classes() != 1) throw Error("expected a univariate series (r = 1)");
  UnivariateSeries out{std::vector<Coefficient>(s.cap() + 1, 0)};
  for (const auto& [d, c] : s.terms()) out.coeffs[d.vec[0]] = c;
  return out;
}

CollapsedSeries to_collapsed(const UnivariateSeries& s) {
  CollapsedSeries out(1, s.cap());
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) out.accumulate(MultiDegree{{i}}, s.coeffs[i]);
  return out;
}

std::uint64_t MacaulayExpansion::reconstruct() const {
  std::uint64_t u = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) u = checked_add(u, binomial(ks[i], d - i));
  return u;
}

MacaulayExpansion macaulay_expand(std::uint64_t u, std::uint64_t d) {
  if (d == 0) throw Error("Macaulay expansions need d >= 1");
  MacaulayExpansion e{d, {}};
  for (std::uint64_t j = d; j >= 1 && u > 0; --j) {
    std::uint64_t k = j;
    if (j == 1) {
      k = u;
    } else {
      while (binomial_at_most(k + 1, j, u)) ++k;
    }
    e.ks.push_back(k);
    u -= binomial(k, j);
  }
  return e;
}

std::uint64_t macaulay_bound(std::uint64_t u, std::uint64_t d) {
  const MacaulayExpansion e = macaulay_expand(u, d);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < e.ks.size(); ++i) out = checked_add(out, binomial(e.ks[i] + 1, d - i + 1));
  return out;
}

bool is_o_sequence(const UnivariateSeries& h) {
  if (h.coeffs.empty() || h.coeffs[0] != 1) return false;
  if (std::any_of(h.coeffs.begin(), h.coeffs.end(), [](Coefficient c) { return c < 0; })) return false;
  for (std::size_t i = 1; i + 1 < h.coeffs.size(); ++i) {
    const auto bound = macaulay_bound(static_cast<std::uint64_t>(h.coeffs[i]), i);
    if (static_cast<std::uint64_t>(h.coeffs[i + 1]) > bound) return false;
  }
  return true;
}

UnivariateSeries divide_by_one_minus_t(const UnivariateSeries& f, std::uint64_t b) {
  UnivariateSeries h = f;
  for (std::uint64_t round = 0; round < b; ++round)
    for (std::size_t i = 1; i < h.coeffs.size(); ++i) h.coeffs[i] = checked_add(h.coeffs[i], h.coeffs[i - 1]);
  return h;
}

Classification classify_numerator(const UnivariateSeries& f, std::uint64_t b_max) {
  Classification out;
  if (f.coeffs.empty() || f.coeffs[0] != 1) return out;
  for (std::uint64_t b = 1; b <= b_max; ++b) {
    UnivariateSeries h;
    try {
      h = divide_by_one_minus_t(f, b);
    } catch (const ArithmeticOverflow&) {
      continue;
    }
    if (!is_o_sequence(h)) continue;
    const Coefficient a = h[1];
    if (a == 0)
      out.certificates.push_back({0, b, true});
    else if (static_cast<std::uint64_t>(a) <= b)
      out.certificates.push_back({static_cast<std::uint64_t>(a), b, false});
  }
  return out;
}

std::uint64_t numerator_degree_bound(const std::vector<Coefficient>& a) {
  if (a.empty()) throw Error("the degree bound needs d >= 1");
  using Wide = __int128;
  const std::size_t d = a.size();
  // u[l] bounds the number of minimal generators of degree l.
  std::vector<std::uint64_t> u(d + 1, 0);
  u[1] = a[0] < 0 ? static_cast<std::uint64_t>(-static_cast<Wide>(a[0])) : 0;

  for (std::size_t i = 1; i < d; ++i) {
    // Tuples of lower-degree generators whose lcm has degree i + 1: lambda_l
    // generators of degree l, at most C(i + 1, l) of them since they all
    // divide one monomial of degree i + 1, at least two in total, and with
    // enough combined degree to reach i + 1.
    std::vector<std::uint64_t> limit(i + 1, 0), lambda(i + 1, 0);
    for (std::size_t l = 1; l <= i; ++l) {
      std::uint64_t divisors = UINT64_MAX;
      try {
        divisors = binomial(i + 1, l);
      } catch (const ArithmeticOverflow&) {
      }
      limit[l] = std::min(u[l], divisors);
    }
    Wide raise = 0;
    auto walk = [&](auto&& self, std::size_t l, std::uint64_t count, std::uint64_t weight) -> void {
      if (l > i) {
        if (count < 2 || weight < i + 1) return;
        Wide ways = 1;
        for (std::size_t k = 1; k <= i; ++k) ways = checked_mul<Wide>(ways, binomial(u[k], lambda[k]));
        // an s-tuple contributes (-1)^s, only even ones can push w up
        if (count % 2 == 0) raise = checked_add<Wide>(raise, ways);
        return;
      }
      for (std::uint64_t c = 0; c <= limit[l]; ++c) {
        lambda[l] = c;
        self(self, l + 1, count + c, weight + c * l);
      }
      lambda[l] = 0;
    };
    walk(walk, 1, 0, 0);
    const Wide upper = -static_cast<Wide>(a[i]) + raise;
    if (upper > static_cast<Wide>(UINT64_MAX)) throw ArithmeticOverflow("generator count bound overflow");
    u[i + 1] = upper > 0 ? static_cast<std::uint64_t>(upper) : 0;
  }

  std::uint64_t bound = 0;
  for (std::size_t i = 1; i <= d; ++i) bound = checked_add(bound, checked_mul<std::uint64_t>(i, u[i]));
  return bound;
}

std::uint64_t bjorner_kalai_bound(std::size_t support) {
  if (support == 0) return 1;
  return binomial(support - 1, (support - 1) / 2);
}

bool bjorner_kalai_check(const GradedSeries& p) {
  for (const auto& [m, c] : p.terms()) {
    const auto magnitude = c < 0 ? -static_cast<__int128>(c) : static_cast<__int128>(c);
    if (magnitude > static_cast<__int128>(bjorner_kalai_bound(m.support_size()))) return false;
  }
  return true;
}

bool divisor_sum_check(const GradedSeries& p) {
  // Relabel the variables present to x1..xk so the divisor sums q = nu * p
  // can be taken over a finite ring.
  std::set<VarIndex> present;
  for (const auto& [m, c] : p.terms())
    for (const auto& [var, exp] : m.factors()) present.insert(var);
  std::map<VarIndex, VarIndex> compact;
  for (auto var : present) compact.emplace(var, static_cast<VarIndex>(compact.size() + 1));
  const auto k = static_cast<VarIndex>(present.size());

  GradedSeries local(p.cap(), k);
  for (const auto& [m, c] : p.terms()) local.accumulate(relabel(m, compact), c);
  const GradedSeries q = multiply(nu(k, p.cap()), local);

  for (const auto& [m, c] : q.terms()) {
    if (c != 1) return false;
    for (const auto& [var, exp] : m.factors()) {
      if (q.coefficient(quotient_exact(m, Monomial::variable(var))) != 1) return false;
    }
  }
  return true;
}

}  // namespace hilbnum
