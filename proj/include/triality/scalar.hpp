#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace triality {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Dense univariate polynomial over Q in the indeterminate u.
/// Coefficients are stored lowest degree first with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  explicit QPoly(const Rational& constant);

  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& s) const;

  /// Euclidean division; throws on zero divisor.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  /// Monic greatest common divisor (zero if both are zero).
  static QPoly gcd(QPoly a, QPoly b);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::optional<QPoly> sqrt() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(u) kept in lowest terms with a monic denominator, so
/// structural equality is field equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFunc(QPoly num, QPoly den);

  static RatFunc u() { return RatFunc(QPoly::monomial(Rational(1), 1), QPoly(Rational(1))); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::optional<RatFunc> sqrt() const;
  Complex evaluate(Complex u) const;
  std::string to_string() const;

 private:
  RatFunc(QPoly num, QPoly den, bool /*already_reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  QPoly num_;
  QPoly den_;
};

enum class ScalarMode { rational, qhalf, complex };

std::string_view mode_name(ScalarMode mode);
ScalarMode parse_mode(std::string_view name);

/// Tolerance used by complex-mode comparisons: |a-b| <= eps*max(1,|a|,|b|).
double numeric_tolerance();
void set_numeric_tolerance(double eps);

/// A field element in one of three interchangeable modes: exact rationals,
/// exact rational functions in u = q^(1/2), or complex doubles. Binary
/// operations require both operands to share a mode.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) { std::get<Rational>(v_).canonicalize(); }  // NOLINT(implicit)
  Scalar(RatFunc f) : v_(std::move(f)) {}   // NOLINT(implicit)
  Scalar(Complex z) : v_(z) {}              // NOLINT(implicit)

  static Scalar integer(long value, ScalarMode mode);
  static Scalar rational(long num, long den, ScalarMode mode);
  static Scalar zero(ScalarMode mode) { return integer(0, mode); }
  static Scalar one(ScalarMode mode) { return integer(1, mode); }
  /// The indeterminate u of Q(u).
  static Scalar u();

  ScalarMode mode() const { return static_cast<ScalarMode>(v_.index()); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// Exact equality in exact modes, tolerance equality in complex mode.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Deterministic total order used to canonicalize multisets. In complex
  /// mode this orders by (re, im) without tolerance.
  static int compare(const Scalar& a, const Scalar& b);

  /// Sign used for canonical representative choices: rational sign, sign
  /// of the numerator leading coefficient, or sign of the first nonzero of
  /// (re, im) beyond tolerance.
  int sign() const;

  /// Square root when one exists in the current mode (principal branch in
  /// complex mode, non-negative root for rationals, leading-coefficient
  /// positive root for rational functions).
  std::optional<Scalar> sqrt() const;

  /// Numeric value; qhalf scalars need a value for u.
  Complex to_complex(double u_value = 0.0) const;
  Scalar to_mode(ScalarMode mode) const;

  std::string to_string() const;
  static Scalar parse(std::string_view text, ScalarMode mode);

  const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
  const RatFunc* as_ratfunc() const { return std::get_if<RatFunc>(&v_); }
  const Complex* as_complex() const { return std::get_if<Complex>(&v_); }

 private:
  std::variant<Rational, RatFunc, Complex> v_;
};

/// Parse an expression in Q(u): rationals, u, + - * / ^ (integer exponent)
/// and parentheses. Throws ParseError with an empty location on failure.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace triality
