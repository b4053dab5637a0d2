#include "triality/lfunction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "triality/error.hpp"

namespace triality {

// ----------------------------------------------------------- LocalFactor

LocalFactor::LocalFactor(std::uint64_t p, std::vector<Scalar> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || !coeffs_.front().is_one()) {
    throw Error(ErrorCode::ParseError, "local factor must have constant coefficient 1");
  }
  for (const auto& c : coeffs_) {
    if (c.mode() != coeffs_.front().mode()) {
      throw Error(ErrorCode::ScalarModeMismatch, "local factor coefficients use different scalar modes");
    }
  }
}

Complex LocalFactor::evaluate(Complex t) const {
  const double u = std::sqrt(static_cast<double>(p_));
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_complex(u);
  return acc;
}

bool LocalFactor::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  }
  return true;
}

LocalFactor operator*(const LocalFactor& a, const LocalFactor& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::Unsupported, "cannot multiply local factors at different primes");
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.mode()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LocalFactor(a.p_, std::move(c));
}

bool operator==(const LocalFactor& a, const LocalFactor& b) {
  if (a.p_ != b.p_) return false;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  const Scalar zero = Scalar::zero(a.mode());
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& x = i < a.coeffs_.size() ? a.coeffs_[i] : zero;
    const Scalar& y = i < b.coeffs_.size() ? b.coeffs_[i] : zero;
    if (x != y) return false;
  }
  return true;
}

LocalFactor local_factor(const EigenMultiset& eigen, std::uint64_t p, ScalarMode mode) {
  if (!eigen.empty()) mode = eigen.items().front().mode();
  std::vector<Scalar> c{Scalar::one(mode)};
  for (const auto& lambda : eigen.items()) {
    // Multiply by (1 - lambda T).
    c.push_back(Scalar::zero(mode));
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= lambda * c[k - 1];
  }
  return LocalFactor(p, std::move(c));
}

// ------------------------------------------------------- identity checks

G2IdentityReport g2_euler_identity(const GSpinOddParam& c, std::uint64_t p) {
  const bool g2 = g2_test(c);
  const ScalarMode mode = c.mode();
  LocalFactor spin = local_factor(spin_eigen(c), p, mode);
  LocalFactor rhs = local_factor(EigenMultiset({Scalar::one(mode)}), p, mode) *
                    local_factor(std_eigen(c), p, mode);
  const bool holds = spin == rhs;
  return G2IdentityReport{g2, holds, std::move(spin), std::move(rhs)};
}

bool g2_euler_identity_check(const GSpinOddParam& c) {
  if (!g2_test(c)) throw Error(ErrorCode::NotG2Type, "parameter is not of G2 type (1 is not a spin eigenvalue)");
  return g2_euler_identity(c).holds;
}

bool constituent_product_check(const EigenMultiset& spin_eval, const ArthurParam& shape, std::uint64_t prime,
                               const Scalar& q) {
  const ScalarMode mode = q.mode();
  LocalFactor product = local_factor(EigenMultiset(), prime, mode);
  for (const auto& t : shape.terms) {
    const EigenMultiset& c = t.pi.satake_at(prime);
    for (int k = 0; k < t.d; ++k) {
      product = product * local_factor(c.scaled(half_power(q, t.d - 1 - 2 * k)), prime, mode);
    }
  }
  return local_factor(spin_eval, prime, mode) == product;
}

// ---------------------------------------------------------------- Gamma

GammaProduct gamma_factor(const ArchWeightParam& wp) {
  return GammaProduct{std::vector<int>(wp.w.begin(), wp.w.end())};
}

namespace {

std::string complex_str(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

bool is_nonpositive_integer(Complex z) {
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.imag()) <= 1e-12 && std::abs(z.real() - r) <= 1e-12 * std::max(1.0, std::abs(r));
}

}  // namespace

Complex complex_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorCode::PoleAt, "Gamma has a pole at " + complex_str(z));
  }
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  static constexpr double g = 7.0;
  static constexpr double coef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                    771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  Complex x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  const Complex t = z + g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex gamma_c(Complex s) {
  if (is_nonpositive_integer(s)) throw Error(ErrorCode::PoleAt, "Gamma_C has a pole at s = " + complex_str(s));
  return 2.0 * std::pow(2.0 * std::numbers::pi, -s) * complex_gamma(s);
}

Complex gamma_eval(const GammaProduct& gp, Complex s) {
  Complex v{1.0, 0.0};
  for (int w : gp.shifts) {
    const Complex z = s + static_cast<double>(w);
    if (is_nonpositive_integer(z)) {
      throw Error(ErrorCode::PoleAt, "Gamma_C(s + " + std::to_string(w) + ") has a pole at s = " + complex_str(s));
    }
    v *= gamma_c(z);
  }
  return v;
}

// ---------------------------------------------------------------- Euler

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  if (x < 2) return out;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return out;
}

namespace {

class EulerAccumulator {
 public:
  EulerAccumulator(Complex s, std::uint64_t cutoff, const EulerOptions& opts) : s_(s) {
    r_.cutoff = cutoff;
    r_.abscissa = 1.0 + opts.beta;
    degree_ = opts.degree;
    if (s.real() <= r_.abscissa) {
      std::ostringstream os;
      os << "Re(s) = " << s.real() << " is not above the convergence abscissa " << r_.abscissa;
      r_.warning = os.str();
    }
  }

  void add(const LocalFactor& f) {
    const Complex t = std::pow(static_cast<double>(f.prime()), -s_);
    const Complex inv = 1.0 / f.evaluate(t);
    r_.value *= inv;
    r_.last_term = std::abs(inv - 1.0);
    ++r_.primes_used;
    seen_degree_ = std::max(seen_degree_, f.degree());
  }

  EulerResult finish(double beta) {
    const std::size_t n = degree_ != 0 ? degree_ : seen_degree_;
    const double excess = s_.real() - 1.0 - beta;
    const double x = static_cast<double>(std::max<std::uint64_t>(r_.cutoff, 2));
    if (r_.warning) {
      r_.tail_estimate = std::numeric_limits<double>::infinity();
    } else {
      // sum_{p > X} n p^{beta - sigma} ~ n X^{-excess} / (excess log X)
      r_.tail_estimate = static_cast<double>(n) * std::pow(x, -excess) / (excess * std::log(x));
    }
    return r_;
  }

 private:
  Complex s_;
  EulerResult r_;
  std::size_t degree_ = 0;
  std::size_t seen_degree_ = 0;
};

}  // namespace

EulerResult euler_eval(const std::map<std::uint64_t, LocalFactor>& family, Complex s, std::uint64_t cutoff,
                       const EulerOptions& opts) {
  EulerAccumulator acc(s, cutoff, opts);
  for (const auto& [p, f] : family) {
    if (p > cutoff) break;
    acc.add(f);
  }
  return acc.finish(opts.beta);
}

EulerResult euler_eval(const std::function<LocalFactor(std::uint64_t)>& family, Complex s,
                       std::uint64_t cutoff, const EulerOptions& opts) {
  EulerAccumulator acc(s, cutoff, opts);
  for (auto p : primes_up_to(cutoff)) acc.add(family(p));
  return acc.finish(opts.beta);
}

// -------------------------------------------------------------- epsilon

EpsilonResult epsilon_sign(const ArthurParam& p, bool generic) {
  EpsilonResult r;
  for (const auto& t : p.terms) {
    const std::string name = "(" + t.pi.label + ", d=" + std::to_string(t.d) + ")";
    if (generic && t.d != 1) {
      throw Error(ErrorCode::ShapeInvalid, "generic parameter has a term with d > 1: " + name);
    }
    switch (t.pi.selfdual) {
      case SelfDualType::orthogonal:
        r.trace.push_back(name + ": orthogonal, eps = +1");
        break;
      case SelfDualType::symplectic:
        if (t.d % 2 == 0) {
          r.trace.push_back(name + ": symplectic, eps^" + std::to_string(t.d) + " = (+-1)^" +
                            std::to_string(t.d) + " = +1");
        } else {
          if (!t.pi.root_number) {
            throw Error(ErrorCode::MissingRootNumber, "symplectic constituent '" + t.pi.label +
                                                          "' needs a declared root number");
          }
          const int eps = *t.pi.root_number;
          r.trace.push_back(name + ": symplectic, declared eps = " + (eps > 0 ? "+1" : "-1"));
          r.sign *= eps;
        }
        break;
      case SelfDualType::none:
      case SelfDualType::unspecified:
        throw Error(ErrorCode::MissingSelfdualType,
                    "constituent '" + t.pi.label + "' has self-duality type " +
                        std::string(selfdual_name(t.pi.selfdual)));
    }
  }
  r.trace.push_back(std::string("total: ") + (r.sign > 0 ? "+1" : "-1"));
  return r;
}

bool predicts_pole_at_one(const ArthurParam& p) {
  for (const auto& t : p.terms) {
    if (t.d == 1 && t.pi.degree == 1 && t.pi.label == "1") return true;
  }
  return false;
}

SpinLMetadata spin_l_metadata(const ArthurParam& p) {
  SpinLMetadata m;
  m.pole_at_one = predicts_pole_at_one(p);
  m.epsilon = epsilon_sign(p, false).sign;
  return m;
}

}  // namespace triality
