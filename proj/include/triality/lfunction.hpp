#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "triality/arthur.hpp"
#include "triality/satake.hpp"

namespace triality {

/// det(1 - c T) at a prime p, as coefficients c_0 = 1, c_1, ..., c_N.
class LocalFactor {
 public:
  LocalFactor(std::uint64_t p, std::vector<Scalar> coeffs);

  std::uint64_t prime() const { return p_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  ScalarMode mode() const { return coeffs_.front().mode(); }

  /// P(T); qhalf coefficients are evaluated at u = sqrt(p).
  Complex evaluate(Complex t) const;
  /// T^N P(1/T) = P(T).
  bool is_palindromic() const;

  friend LocalFactor operator*(const LocalFactor& a, const LocalFactor& b);
  friend bool operator==(const LocalFactor& a, const LocalFactor& b);
  friend bool operator!=(const LocalFactor& a, const LocalFactor& b) { return !(a == b); }

 private:
  std::uint64_t p_;
  std::vector<Scalar> coeffs_;
};

/// prod over lambda of (1 - lambda T). An empty multiset gives 1 in `mode`.
LocalFactor local_factor(const EigenMultiset& eigen, std::uint64_t p,
                         ScalarMode mode = ScalarMode::rational);

struct G2IdentityReport {
  bool g2_type = false;
  bool holds = false;
  LocalFactor spin;
  LocalFactor rhs;  // (1 - T) det(1 - std T)
};
/// Compares det(1 - spin T) with (1 - T) det(1 - std T) for any PGSp6
/// parameter, G2 or not.
G2IdentityReport g2_euler_identity(const GSpinOddParam& c, std::uint64_t p = 0);
/// Same, but throws NotG2Type unless g2_test(c) holds.
bool g2_euler_identity_check(const GSpinOddParam& c);

/// det(1 - spin_eval T) against the product over terms (pi, d) and shifts
/// k of the Godement-Jacquet factors det(1 - c(pi)_p q^{k} T).
bool constituent_product_check(const EigenMultiset& spin_eval, const ArthurParam& shape, std::uint64_t prime,
                               const Scalar& q);

/// prod_i Gamma_C(s + w_i).
struct GammaProduct {
  std::vector<int> shifts;
};
GammaProduct gamma_factor(const ArchWeightParam& wp);

/// Lanczos approximation; throws PoleAt at non-positive integers.
Complex complex_gamma(Complex z);
/// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).
Complex gamma_c(Complex s);
Complex gamma_eval(const GammaProduct& gp, Complex s);

std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

struct EulerOptions {
  /// Declared eigenvalue bound |lambda| <= p^beta.
  double beta = 0.5;
  /// Family degree for the tail estimate; 0 means "take it from the factors".
  std::size_t degree = 0;
};

struct EulerResult {
  Complex value{1.0, 0.0};
  std::uint64_t cutoff = 0;
  std::size_t primes_used = 0;
  /// |1/P(p^-s) - 1| at the largest prime used.
  double last_term = 0.0;
  /// Heuristic bound on |log| of the omitted tail, infinite below the abscissa.
  double tail_estimate = 0.0;
  double abscissa = 1.5;
  /// Set when Re(s) is not above the abscissa.
  std::optional<std::string> warning;
};

/// prod over primes p <= cutoff present in the family of 1 / P_p(p^-s),
/// accumulated in increasing prime order.
EulerResult euler_eval(const std::map<std::uint64_t, LocalFactor>& family, Complex s, std::uint64_t cutoff,
                       const EulerOptions& opts = {});
/// Family given by a function of the prime, used at every prime <= cutoff.
EulerResult euler_eval(const std::function<LocalFactor(std::uint64_t)>& family, Complex s,
                       std::uint64_t cutoff, const EulerOptions& opts = {});

struct EpsilonResult {
  int sign = 1;
  std::vector<std::string> trace;
};
/// Product over terms (pi, d) of eps(pi, 1/2)^d: +1 for orthogonal pi,
/// the declared root number for symplectic pi (not needed when d is even).
/// Throws MissingSelfdualType, MissingRootNumber, or ShapeInvalid when
/// `generic` is set but some d > 1.
EpsilonResult epsilon_sign(const ArthurParam& p, bool generic);

struct SpinLMetadata {
  bool pole_at_one = false;
  int epsilon = 1;
  /// Asserted by shape, never checked numerically.
  std::string functional_equation = "Lambda(s) = Lambda(1 - s)";
};
/// A simple pole at s = 1 exactly when the trivial constituent occurs with d = 1.
bool predicts_pole_at_one(const ArthurParam& p);
SpinLMetadata spin_l_metadata(const ArthurParam& p);

}  // namespace triality
