#pragma once

// Exact scalars: rationals, multivariate polynomials over Q in named
// indeterminates, and rational functions whose denominator is a polynomial in
// the distinguished variable `t` alone.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chenlie {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Name of the distinguished variable of rational functions.
inline constexpr std::string_view kT = "t";

// Product of named indeterminates. Factors are sorted by name with positive
// exponents; the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial var(std::string_view name, unsigned exponent = 1);

  unsigned degree() const;
  unsigned exponent(std::string_view name) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  // Splits off the power of `name`: returns (exponent, remaining monomial).
  std::pair<unsigned, Monomial> split(std::string_view name) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded: total degree first, then lexicographic on the factor list.
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Factor> factors_;
};

// Multivariate polynomial with rational coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(std::string_view name);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  // Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::string_view name) const;
  bool depends_only_on(std::string_view name) const;
  std::set<std::string> variables() const;
  const Terms& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  Poly pow(unsigned e) const;

  Poly derivative(std::string_view name) const;
  Poly substitute(std::string_view name, const Poly& value) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Terms printed from the highest monomial down, e.g. "w2 - w1".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

// num / den with den monic in t, and gcd(den, t-content of num) = 1.
class RatFunc {
 public:
  RatFunc(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

// Tagged union with promotion Rational -> Poly -> RatFunc. Values are always
// stored in the narrowest kind that represents them, so equality is
// structural.
class Scalar {
 public:
  enum class Kind { rational, polynomial, rational_function };

  Scalar() : value_(Rational(0)) {}
  Scalar(long c) : value_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : value_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Poly& p);  // NOLINT(google-explicit-constructor)
  Scalar(const RatFunc& r);  // NOLINT(google-explicit-constructor)
  static Scalar var(std::string_view name) { return Scalar(Poly::var(name)); }
  static Scalar fraction(long num, long den);

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return kind() == Kind::rational; }
  const Rational& rational() const;  // throws unless is_rational()
  Poly numerator() const;
  Poly denominator() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  Scalar pow(unsigned e) const;

  // d/dt.
  Scalar derivative_t() const;
  // Replaces the indeterminate `name` by `value` in numerator and denominator.
  Scalar substitute(std::string_view name, const Poly& value) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string str() const;

 private:
  std::variant<Rational, Poly, RatFunc> value_;
};

std::string to_string(const Scalar& s);

}  // namespace chenlie
