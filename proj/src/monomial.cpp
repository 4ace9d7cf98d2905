#include "hilbnum/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hilbnum/checked.hpp"
#include "hilbnum/errors.hpp"

namespace hilbnum {

namespace {

std::vector<Monomial::Factor> normalize(std::vector<Monomial::Factor> factors) {
  std::sort(factors.begin(), factors.end());
  std::vector<Monomial::Factor> out;
  out.reserve(factors.size());
  for (const auto& [var, exp] : factors) {
    if (var == 0) throw Error("variable indices start at 1");
    if (exp == 0) continue;
    if (!out.empty() && out.back().first == var)
      out.back().second = checked_add(out.back().second, exp);
    else
      out.emplace_back(var, exp);
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Factor> factors)
    : factors_(normalize(std::vector<Factor>(factors))) {}

Monomial::Monomial(std::vector<Factor> factors) : factors_(normalize(std::move(factors))) {}

Monomial Monomial::variable(VarIndex i, Exponent e) { return Monomial{Factor{i, e}}; }

Monomial Monomial::squarefree_range(VarIndex first, VarIndex last) {
  std::vector<Factor> f;
  for (VarIndex i = first; i <= last && last >= first; ++i) f.emplace_back(i, 1);
  return Monomial(std::move(f));
}

Degree Monomial::total_degree() const {
  Degree d = 0;
  for (const auto& f : factors_) d = checked_add<Degree>(d, f.second);
  return d;
}

Exponent Monomial::exponent(VarIndex i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{i, 0});
  return it != factors_.end() && it->first == i ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto& r = out.factors_;
  r.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.push_back(*b++);
    } else {
      r.emplace_back(a->first, checked_add(a->second, b->second));
      ++a, ++b;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [var, exp] : factors_) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(var);
    if (exp != 1) {
      s += '^';
      s += std::to_string(exp);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

bool divides(const Monomial& t, const Monomial& m) {
  const auto& tf = t.factors();
  const auto& mf = m.factors();
  auto it = mf.begin();
  for (const auto& [var, exp] : tf) {
    while (it != mf.end() && it->first < var) ++it;
    if (it == mf.end() || it->first != var || it->second < exp) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> r;
  const auto& af = a.factors();
  const auto& bf = b.factors();
  r.reserve(af.size() + bf.size());
  auto i = af.begin(), j = bf.begin();
  while (i != af.end() || j != bf.end()) {
    if (j == bf.end() || (i != af.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == af.end() || j->first < i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    }
  }
  return Monomial(std::move(r));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> r;
  for (const auto& [var, exp] : a.factors()) {
    const Exponent e = std::min(exp, b.exponent(var));
    if (e > 0) r.emplace_back(var, e);
  }
  return Monomial(std::move(r));
}

Monomial quotient_exact(const Monomial& m, const Monomial& t) {
  if (!divides(t, m)) throw NotDivisible(t.to_string() + " does not divide " + m.to_string());
  std::vector<Monomial::Factor> r;
  for (const auto& [var, exp] : m.factors()) {
    const Exponent e = exp - t.exponent(var);
    if (e > 0) r.emplace_back(var, e);
  }
  return Monomial(std::move(r));
}

std::optional<Monomial> truncate_monomial(const Monomial& m, VarIndex n) {
  if (m.max_variable() > n) return std::nullopt;
  return m;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t number(const char* what) {
    skip_space();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec == std::errc::result_out_of_range) fail(std::string(what) + " out of range");
    if (ec != std::errc()) fail(std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }
  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty monomial");
  if (cur.accept('1')) {
    if (!cur.done()) cur.fail("unexpected trailing input after 1");
    return Monomial::one();
  }
  std::vector<Monomial::Factor> factors;
  do {
    if (!cur.accept('x')) cur.fail("expected variable x<k>");
    const auto column = cur.column();
    const auto var = cur.number("variable index");
    if (var == 0) throw ParseError("variable indices start at 1", 1, column);
    if (var > UINT32_MAX) throw ParseError("variable index out of range", 1, column);
    std::uint64_t exp = 1;
    if (cur.accept('^')) {
      const auto ecol = cur.column();
      exp = cur.number("exponent");
      if (exp == 0) throw ParseError("exponents must be positive", 1, ecol);
      if (exp > UINT32_MAX) throw ParseError("exponent out of range", 1, ecol);
    }
    for (const auto& f : factors)
      if (f.first == var) throw ParseError("duplicate variable x" + std::to_string(var), 1, column);
    factors.emplace_back(static_cast<VarIndex>(var), static_cast<Exponent>(exp));
  } while (cur.accept('*'));
  if (!cur.done()) cur.fail("unexpected character");
  return Monomial(std::move(factors));
}

Partition::Partition(std::uint32_t classes, std::uint32_t default_class,
                     std::map<VarIndex, std::uint32_t> explicit_classes)
    : classes_(classes), default_class_(default_class), explicit_(std::move(explicit_classes)) {
  if (classes_ == 0) throw ClassOutOfRange("partition needs at least one class");
  if (default_class_ < 1 || default_class_ > classes_)
    throw ClassOutOfRange("default class " + std::to_string(default_class_) + " outside 1.." +
                          std::to_string(classes_));
  for (const auto& [var, cls] : explicit_) {
    if (var == 0) throw Error("variable indices start at 1");
    if (cls < 1 || cls > classes_)
      throw ClassOutOfRange("class " + std::to_string(cls) + " outside 1.." + std::to_string(classes_));
  }
}

std::uint32_t Partition::class_of(VarIndex i) const {
  auto it = explicit_.find(i);
  return it == explicit_.end() ? default_class_ : it->second;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_uint(std::string_view s, std::string_view spec, const char* what) {
  s = trim(s);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  const auto column = static_cast<std::size_t>(s.data() - spec.data()) + 1;
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("expected ") + what, 1, column);
  return v;
}

}  // namespace

Partition parse_partition(std::string_view spec) {
  if (trim(spec) == "total") return Partition::total();
  std::optional<std::uint32_t> r, def;
  std::map<VarIndex, std::uint32_t> assigned;
  std::vector<std::pair<std::uint32_t, std::string_view>> class_lists;
  for (auto field : split(spec, ';')) {
    field = trim(field);
    if (field.empty()) continue;
    const auto column = static_cast<std::size_t>(field.data() - spec.data()) + 1;
    if (field.starts_with("r=")) {
      r = parse_uint(field.substr(2), spec, "class count");
    } else if (field.starts_with("default=")) {
      def = parse_uint(field.substr(8), spec, "default class");
    } else {
      auto colon = field.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected <class>:<indices>", 1, column);
      class_lists.emplace_back(parse_uint(field.substr(0, colon), spec, "class"), field.substr(colon + 1));
    }
  }
  if (!r) throw ParseError("missing r=<count>", 1, 1);
  for (const auto& [cls, list] : class_lists) {
    for (auto idx : split(list, ',')) {
      const auto var = parse_uint(idx, spec, "variable index");
      if (var == 0)
        throw ParseError("variable indices start at 1", 1, static_cast<std::size_t>(idx.data() - spec.data()) + 1);
      if (!assigned.emplace(var, cls).second)
        throw ParseError("variable x" + std::to_string(var) + " assigned twice", 1,
                         static_cast<std::size_t>(idx.data() - spec.data()) + 1);
    }
  }
  return Partition(*r, def.value_or(1), std::move(assigned));
}

Degree MultiDegree::total() const {
  Degree t = 0;
  for (auto v : vec) t = checked_add(t, v);
  return t;
}

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
  MultiDegree out{vec};
  if (out.vec.size() < other.vec.size()) out.vec.resize(other.vec.size(), 0);
  for (std::size_t i = 0; i < other.vec.size(); ++i) out.vec[i] = checked_add(out.vec[i], other.vec[i]);
  return out;
}

MultiDegree multi_degree(const Monomial& m, const Partition& y) {
  MultiDegree d{std::vector<Degree>(y.classes(), 0)};
  for (const auto& [var, exp] : m.factors()) {
    auto& slot = d.vec[y.class_of(var) - 1];
    slot = checked_add<Degree>(slot, exp);
  }
  return d;
}

}  // namespace hilbnum
