#include "triality/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "triality/error.hpp"

namespace triality {

namespace {

std::atomic<double> g_eps{1e-9};

[[noreturn]] void mode_mismatch(const Scalar& a, const Scalar& b) {
  throw Error(ErrorCode::ScalarModeMismatch,
              "scalar mode mismatch: " + std::string(mode_name(a.mode())) + " vs " +
                  std::string(mode_name(b.mode())));
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rational(0);
  mpz_class n = r.get_num();
  mpz_class d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return QPoly();
  QPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  rem = a;
  std::vector<Rational> q;
  if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational factor = rem.leading() * inv_lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= factor * b.c_[i];
    rem.trim();
  }
  quot = QPoly(std::move(q));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

std::optional<QPoly> QPoly::sqrt() const {
  if (is_zero()) return QPoly();
  if (degree() % 2 != 0) return std::nullopt;
  auto lead = rational_sqrt(leading());
  if (!lead) return std::nullopt;
  const auto d = static_cast<std::size_t>(degree() / 2);
  std::vector<Rational> r(d + 1, Rational(0));
  r[d] = *lead;
  const Rational two_lead = 2 * *lead;
  for (std::size_t step = 1; step <= d; ++step) {
    const std::size_t k = d - step;
    QPoly partial(r);
    QPoly residue = *this - partial * partial;
    r[k] = residue.coeff(d + k) / two_lead;
  }
  QPoly root(r);
  if (!(root * root == *this)) return std::nullopt;
  return root;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    bool first = out.empty();
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// -------------------------------------------------------------- RatFunc

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly(Rational(1));
    return;
  }
  QPoly g = QPoly::gcd(num, den);
  if (g.degree() > 0) {
    QPoly q, r;
    QPoly::divmod(num, g, q, r);
    num = std::move(q);
    QPoly::divmod(den, g, q, r);
    den = std::move(q);
  }
  const Rational lead_inv = 1 / den.leading();
  num_ = num.scaled(lead_inv);
  den_ = den.scaled(lead_inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(u)");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<RatFunc> RatFunc::sqrt() const {
  if (is_zero()) return RatFunc();
  auto n = num_.sqrt();
  auto d = den_.sqrt();
  if (!n || !d) return std::nullopt;
  QPoly nn = *n;
  if (sgn(nn.leading()) < 0) nn = -nn;
  return RatFunc(nn, *d);
}

Complex RatFunc::evaluate(Complex u) const {
  auto eval = [&](const QPoly& p) {
    Complex acc = 0.0;
    for (long k = p.degree(); k >= 0; --k) acc = acc * u + p.coeff(static_cast<std::size_t>(k)).get_d();
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// --------------------------------------------------------------- parser

namespace {

class RatFuncParser {
 public:
  explicit RatFuncParser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("", "cannot parse scalar '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        RatFunc d = power();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      RatFunc r(Rational(1));
      for (long i = 0; i < e; ++i) r = r * base;
      if (neg) {
        if (r.is_zero()) fail("zero to a negative power");
        r = RatFunc(Rational(1)) / r;
      }
      return r;
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'u') {
      ++pos_;
      return RatFunc::u();
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return RatFunc(Rational(z));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return RatFuncParser(text).parse(); }

// --------------------------------------------------------------- Scalar

std::string_view mode_name(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::rational: return "rational";
    case ScalarMode::qhalf: return "qhalf";
    case ScalarMode::complex: return "complex";
  }
  return "?";
}

ScalarMode parse_mode(std::string_view name) {
  if (name == "rational") return ScalarMode::rational;
  if (name == "qhalf") return ScalarMode::qhalf;
  if (name == "complex") return ScalarMode::complex;
  throw ParseError("/mode", "unknown scalar mode '" + std::string(name) + "'");
}

double numeric_tolerance() { return g_eps.load(std::memory_order_relaxed); }

void set_numeric_tolerance(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::ParseError, "tolerance must be positive");
  g_eps.store(eps, std::memory_order_relaxed);
}

Scalar Scalar::integer(long value, ScalarMode mode) {
  switch (mode) {
    case ScalarMode::rational: return Scalar(Rational(value));
    case ScalarMode::qhalf: return Scalar(RatFunc(Rational(value)));
    case ScalarMode::complex: return Scalar(Complex(static_cast<double>(value), 0.0));
  }
  return {};
}

Scalar Scalar::rational(long num, long den, ScalarMode mode) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r).to_mode(mode);
}

Scalar Scalar::u() { return Scalar(RatFunc::u()); }

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) return sgn(x) == 0;
        else if constexpr (std::is_same_v<T, RatFunc>) return x.is_zero();
        else return std::abs(x) <= numeric_tolerance();
      },
      v_);
}

bool Scalar::is_one() const { return *this == Scalar::one(mode()); }

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) -> Scalar { return Scalar(-x); }, v_);
}

#define TRIALITY_BINARY_OP(op)                                                    \
  Scalar operator op(const Scalar& a, const Scalar& b) {                          \
    if (a.v_.index() != b.v_.index()) mode_mismatch(a, b);                        \
    switch (a.mode()) {                                                           \
      case ScalarMode::rational:                                                  \
        return Scalar(Rational(std::get<Rational>(a.v_) op std::get<Rational>(b.v_))); \
      case ScalarMode::qhalf:                                                     \
        return Scalar(std::get<RatFunc>(a.v_) op std::get<RatFunc>(b.v_));        \
      case ScalarMode::complex:                                                   \
        return Scalar(std::get<Complex>(a.v_) op std::get<Complex>(b.v_));        \
    }                                                                             \
    return {};                                                                    \
  }

TRIALITY_BINARY_OP(+)
TRIALITY_BINARY_OP(-)
TRIALITY_BINARY_OP(*)
#undef TRIALITY_BINARY_OP

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mode_mismatch(a, b);
  if (b.mode() == ScalarMode::rational) {
    const auto& d = std::get<Rational>(b.v_);
    if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return Scalar(Rational(std::get<Rational>(a.v_) / d));
  }
  if (b.mode() == ScalarMode::qhalf) return Scalar(std::get<RatFunc>(a.v_) / std::get<RatFunc>(b.v_));
  const auto& d = std::get<Complex>(b.v_);
  if (d == Complex(0.0, 0.0)) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return Scalar(std::get<Complex>(a.v_) / d);
}

Scalar Scalar::inverse() const { return Scalar::one(mode()) / *this; }

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar acc = Scalar::one(mode());
  while (e) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mode_mismatch(a, b);
  switch (a.mode()) {
    case ScalarMode::rational: return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
    case ScalarMode::qhalf: return std::get<RatFunc>(a.v_) == std::get<RatFunc>(b.v_);
    case ScalarMode::complex: {
      const Complex x = std::get<Complex>(a.v_);
      const Complex y = std::get<Complex>(b.v_);
      const double scale = std::max({1.0, std::abs(x), std::abs(y)});
      return std::abs(x - y) <= numeric_tolerance() * scale;
    }
  }
  return false;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mode_mismatch(a, b);
  switch (a.mode()) {
    case ScalarMode::rational: return cmp(std::get<Rational>(a.v_), std::get<Rational>(b.v_));
    case ScalarMode::qhalf: {
      const auto& x = std::get<RatFunc>(a.v_);
      const auto& y = std::get<RatFunc>(b.v_);
      auto cmp_poly = [](const QPoly& p, const QPoly& q) {
        if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
        for (long k = p.degree(); k >= 0; --k) {
          int c = cmp(p.coeff(static_cast<std::size_t>(k)), q.coeff(static_cast<std::size_t>(k)));
          if (c) return c < 0 ? -1 : 1;
        }
        return 0;
      };
      if (int c = cmp_poly(x.den(), y.den())) return c;
      return cmp_poly(x.num(), y.num());
    }
    case ScalarMode::complex: {
      const Complex x = std::get<Complex>(a.v_);
      const Complex y = std::get<Complex>(b.v_);
      if (x.real() != y.real()) return x.real() < y.real() ? -1 : 1;
      if (x.imag() != y.imag()) return x.imag() < y.imag() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

int Scalar::sign() const {
  switch (mode()) {
    case ScalarMode::rational: return sgn(std::get<Rational>(v_));
    case ScalarMode::qhalf: {
      const auto& f = std::get<RatFunc>(v_);
      return f.is_zero() ? 0 : sgn(f.num().leading());
    }
    case ScalarMode::complex: {
      const Complex z = std::get<Complex>(v_);
      const double tol = numeric_tolerance() * std::max(1.0, std::abs(z));
      if (std::abs(z.real()) > tol) return z.real() > 0 ? 1 : -1;
      if (std::abs(z.imag()) > tol) return z.imag() > 0 ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

std::optional<Scalar> Scalar::sqrt() const {
  switch (mode()) {
    case ScalarMode::rational: {
      auto r = rational_sqrt(std::get<Rational>(v_));
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    case ScalarMode::qhalf: {
      auto r = std::get<RatFunc>(v_).sqrt();
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    case ScalarMode::complex: return Scalar(std::sqrt(std::get<Complex>(v_)));
  }
  return std::nullopt;
}

Complex Scalar::to_complex(double u_value) const {
  switch (mode()) {
    case ScalarMode::rational: return Complex(std::get<Rational>(v_).get_d(), 0.0);
    case ScalarMode::qhalf: return std::get<RatFunc>(v_).evaluate(Complex(u_value, 0.0));
    case ScalarMode::complex: return std::get<Complex>(v_);
  }
  return {};
}

Scalar Scalar::to_mode(ScalarMode target) const {
  if (target == mode()) return *this;
  if (mode() == ScalarMode::rational) {
    const auto& r = std::get<Rational>(v_);
    if (target == ScalarMode::qhalf) return Scalar(RatFunc(r));
    return Scalar(Complex(r.get_d(), 0.0));
  }
  if (mode() == ScalarMode::qhalf) {
    const auto& f = std::get<RatFunc>(v_);
    if (f.is_constant()) return Scalar(f.num().coeff(0)).to_mode(target);
    throw Error(ErrorCode::Unsupported, "non-constant element of Q(u) has no value in mode " +
                                            std::string(mode_name(target)));
  }
  throw Error(ErrorCode::Unsupported, "complex scalars cannot be converted to an exact mode");
}

std::string Scalar::to_string() const {
  switch (mode()) {
    case ScalarMode::rational: return std::get<Rational>(v_).get_str();
    case ScalarMode::qhalf: return std::get<RatFunc>(v_).to_string();
    case ScalarMode::complex: {
      const Complex z = std::get<Complex>(v_);
      return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
    }
  }
  return "";
}

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
  switch (mode) {
    case ScalarMode::rational: {
      std::string s(text);
      s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
              s.end());
      auto valid = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
      };
      auto slash = s.find('/');
      std::string num = s.substr(0, slash);
      std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
      if (!valid(num, true) || !valid(den, false)) {
        throw ParseError("", "cannot parse rational '" + std::string(text) + "'");
      }
      if (num[0] == '+') num.erase(0, 1);
      mpz_class d(den);
      if (d == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
      Rational r(mpz_class(num), d);
      r.canonicalize();
      return Scalar(r);
    }
    case ScalarMode::qhalf: return Scalar(parse_ratfunc(text));
    case ScalarMode::complex: {
      std::string s(text);
      s.erase(std::remove_if(s.begin(), s.end(),
                             [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')'; }),
              s.end());
      auto comma = s.find(',');
      try {
        std::size_t used = 0;
        double re = std::stod(s.substr(0, comma), &used);
        if (used != s.substr(0, comma).size()) throw std::invalid_argument("trailing");
        double im = 0.0;
        if (comma != std::string::npos) {
          std::string tail = s.substr(comma + 1);
          im = std::stod(tail, &used);
          if (used != tail.size()) throw std::invalid_argument("trailing");
        }
        return Scalar(Complex(re, im));
      } catch (const std::logic_error&) {
        throw ParseError("", "cannot parse complex '" + std::string(text) + "'");
      }
    }
  }
  return {};
}

}  // namespace triality
