#include "chenlie/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "chenlie/error.hpp"

namespace chenlie {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(std::string_view name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::string(name), exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(std::string_view name) const {
  for (const auto& f : factors_)
    if (f.first == name) return f.second;
  return 0;
}

std::pair<unsigned, Monomial> Monomial::split(std::string_view name) const {
  Monomial rest;
  unsigned e = 0;
  for (const auto& f : factors_) {
    if (f.first == name)
      e = f.second;
    else
      rest.factors_.push_back(f);
  }
  return {e, rest};
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.factors_ < b.factors_;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [name, e] : factors_) {
    if (!s.empty()) s += '*';
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::var(std::string_view name) { return term(Monomial::var(name), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

int Poly::degree_in(std::string_view name) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(name)));
  return d;
}

bool Poly::depends_only_on(std::string_view name) const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (f.first != name) return false;
  return true;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return *this = std::move(r);
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Poly Poly::derivative(std::string_view name) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    auto [e, rest] = m.split(name);
    if (e == 0) continue;
    r.add_term(rest * Monomial::var(name, e - 1), c * e);
  }
  return r;
}

Poly Poly::substitute(std::string_view name, const Poly& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    auto [e, rest] = m.split(name);
    r += term(rest, c) * value.pow(e);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    if (m.is_one())
      s += to_string(mag);
    else if (mag == 1)
      s += m.str();
    else
      s += to_string(mag) + "*" + m.str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dense univariate helpers over Q[t].

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const Poly& p) {
  Dense d;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(kT);
    if (d.size() <= e) d.resize(e + 1, Rational(0));
    d[e] += c;
  }
  trim(d);
  return d;
}

// a = q*b + r; b nonzero.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense make_monic(Dense a) {
  trim(a);
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (!den.depends_only_on(kT))
    throw DomainError("denominator must be a polynomial in t alone: " + den.str());
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  // Group the numerator by its non-t part; each group is a polynomial in t.
  std::map<Monomial, Dense> groups;
  for (const auto& [m, c] : num.terms()) {
    auto [e, rest] = m.split(kT);
    Dense& g = groups[rest];
    if (g.size() <= e) g.resize(e + 1, Rational(0));
    g[e] += c;
  }
  Dense d = to_dense(den);
  Dense g = d;
  for (auto& [rest, coeffs] : groups) {
    trim(coeffs);
    if (g.size() <= 1) break;
    g = gcd(g, coeffs);
  }
  if (g.size() > 1) {
    d = divmod(d, g).first;
    for (auto& [rest, coeffs] : groups) coeffs = divmod(coeffs, g).first;
  }
  const Rational lead = d.back();
  Poly n, dd;
  for (const auto& [rest, coeffs] : groups)
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      if (coeffs[e] != 0)
        n += Poly::term(rest * Monomial::var(kT, static_cast<unsigned>(e)), coeffs[e] / lead);
  for (std::size_t e = 0; e < d.size(); ++e)
    if (d[e] != 0) dd += Poly::term(Monomial::var(kT, static_cast<unsigned>(e)), d[e] / lead);
  num_ = std::move(n);
  den_ = std::move(dd);
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

Scalar demote(const Poly& p) {
  if (p.is_constant()) return Scalar(p.constant_term());
  return Scalar(p);
}

}  // namespace

Scalar::Scalar(const Poly& p) {
  if (p.is_constant())
    value_ = p.constant_term();
  else
    value_ = p;
}

Scalar::Scalar(const RatFunc& r) {
  if (r.is_polynomial())
    *this = Scalar(r.numerator());
  else
    value_ = r;
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DomainError("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_zero() const {
  const auto* q = std::get_if<Rational>(&value_);
  return q && *q == 0;
}

bool Scalar::is_one() const {
  const auto* q = std::get_if<Rational>(&value_);
  return q && *q == 1;
}

const Rational& Scalar::rational() const {
  const auto* q = std::get_if<Rational>(&value_);
  if (!q) throw DomainError("scalar is not rational: " + str());
  return *q;
}

Poly Scalar::numerator() const {
  switch (kind()) {
    case Kind::rational:
      return Poly(std::get<Rational>(value_));
    case Kind::polynomial:
      return std::get<Poly>(value_);
    case Kind::rational_function:
      return std::get<RatFunc>(value_).numerator();
  }
  return Poly();
}

Poly Scalar::denominator() const {
  if (kind() == Kind::rational_function) return std::get<RatFunc>(value_).denominator();
  return Poly(1);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += o.rational();
    return *this;
  }
  if (kind() != Kind::rational_function && o.kind() != Kind::rational_function)
    return *this = demote(numerator() + o.numerator());
  return *this = Scalar(RatFunc(numerator() * o.denominator() + o.numerator() * denominator(),
                                denominator() * o.denominator()));
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) *= o.rational();
    return *this;
  }
  if (kind() != Kind::rational_function && o.kind() != Kind::rational_function)
    return *this = demote(numerator() * o.numerator());
  return *this =
             Scalar(RatFunc(numerator() * o.numerator(), denominator() * o.denominator()));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_rational()) {
    const Rational inv = 1 / o.rational();
    return *this *= Scalar(inv);
  }
  const Poly on = o.numerator();
  if (!on.depends_only_on(kT))
    throw DomainError("cannot divide by a scalar that is not a rational function of t: " +
                      o.str());
  return *this = Scalar(RatFunc(numerator() * o.denominator(), denominator() * on));
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::rational:
      return Scalar(Rational(-std::get<Rational>(value_)));
    case Kind::polynomial:
      return Scalar(-std::get<Poly>(value_));
    case Kind::rational_function: {
      const auto& r = std::get<RatFunc>(value_);
      return Scalar(RatFunc(-r.numerator(), r.denominator()));
    }
  }
  return {};
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Scalar Scalar::derivative_t() const {
  switch (kind()) {
    case Kind::rational:
      return Scalar(0);
    case Kind::polynomial:
      return Scalar(std::get<Poly>(value_).derivative(kT));
    case Kind::rational_function: {
      const auto& r = std::get<RatFunc>(value_);
      const Poly& n = r.numerator();
      const Poly& d = r.denominator();
      return Scalar(RatFunc(n.derivative(kT) * d - n * d.derivative(kT), d * d));
    }
  }
  return {};
}

Scalar Scalar::substitute(std::string_view name, const Poly& value) const {
  if (is_rational()) return *this;
  Scalar num(numerator().substitute(name, value));
  Scalar den(denominator().substitute(name, value));
  return num / den;
}

std::string Scalar::str() const {
  switch (kind()) {
    case Kind::rational:
      return to_string(std::get<Rational>(value_));
    case Kind::polynomial:
      return std::get<Poly>(value_).str();
    case Kind::rational_function: {
      const auto& r = std::get<RatFunc>(value_);
      auto wrap = [](const Poly& p) {
        const std::string s = p.str();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
      };
      return wrap(r.numerator()) + "/" + wrap(r.denominator());
    }
  }
  return {};
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace chenlie
