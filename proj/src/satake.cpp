#include "triality/satake.hpp"

#include <algorithm>
#include <cstdlib>

#include "triality/error.hpp"

namespace triality {

namespace {

bool by_compare(const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; }

void check_entries(const std::vector<Scalar>& chi, const Scalar& mu) {
  if (mu.is_zero()) throw Error(ErrorCode::ZeroScalar, "mu must be nonzero");
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i].mode() != mu.mode()) {
      throw Error(ErrorCode::ScalarModeMismatch, "chi and mu use different scalar modes");
    }
    if (chi[i].is_zero()) {
      throw Error(ErrorCode::ZeroScalar, "chi[" + std::to_string(i) + "] must be nonzero");
    }
  }
}

// mu * prod_{i in S} x_i for every subset S, filtered by subset parity
// (parity < 0: all subsets).
EigenMultiset subset_products(const std::vector<Scalar>& chi, const Scalar& mu, int parity) {
  const std::size_t n = chi.size();
  std::vector<Scalar> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const int bits = __builtin_popcountll(mask);
    if (parity >= 0 && bits % 2 != parity) continue;
    Scalar v = mu;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) v *= chi[i];
    }
    out.push_back(std::move(v));
  }
  return EigenMultiset(std::move(out));
}

std::vector<Scalar> plus_minus(const std::vector<Scalar>& chi) {
  std::vector<Scalar> out;
  out.reserve(2 * chi.size() + 1);
  for (const auto& x : chi) {
    out.push_back(x);
    out.push_back(x.inverse());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------- EigenMultiset

EigenMultiset::EigenMultiset(std::vector<Scalar> items) : items_(std::move(items)) {
  for (const auto& x : items_) {
    if (x.mode() != items_.front().mode()) {
      throw Error(ErrorCode::ScalarModeMismatch, "multiset entries use different scalar modes");
    }
  }
}

std::vector<Scalar> EigenMultiset::sorted() const {
  std::vector<Scalar> s = items_;
  std::sort(s.begin(), s.end(), by_compare);
  return s;
}

std::size_t EigenMultiset::count(const Scalar& x) const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [&](const Scalar& y) { return y == x; }));
}

EigenMultiset operator+(const EigenMultiset& a, const EigenMultiset& b) {
  std::vector<Scalar> v = a.items_;
  v.insert(v.end(), b.items_.begin(), b.items_.end());
  return EigenMultiset(std::move(v));
}

EigenMultiset tensor(const EigenMultiset& a, const EigenMultiset& b) {
  std::vector<Scalar> v;
  v.reserve(a.size() * b.size());
  for (const auto& x : a.items_) {
    for (const auto& y : b.items_) v.push_back(x * y);
  }
  return EigenMultiset(std::move(v));
}

EigenMultiset EigenMultiset::scaled(const Scalar& s) const {
  std::vector<Scalar> v;
  v.reserve(items_.size());
  for (const auto& x : items_) v.push_back(s * x);
  return EigenMultiset(std::move(v));
}

EigenMultiset EigenMultiset::dual() const {
  std::vector<Scalar> v;
  v.reserve(items_.size());
  for (const auto& x : items_) v.push_back(x.inverse());
  return EigenMultiset(std::move(v));
}

std::optional<EigenMultiset> EigenMultiset::without(const Scalar& x) const {
  std::vector<Scalar> v = items_;
  auto it = std::find_if(v.begin(), v.end(), [&](const Scalar& y) { return y == x; });
  if (it == v.end()) return std::nullopt;
  v.erase(it);
  return EigenMultiset(std::move(v));
}

bool operator==(const EigenMultiset& a, const EigenMultiset& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (a.items_.front().mode() != ScalarMode::complex) {
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i] != sb[i]) return false;
    }
    return true;
  }
  // Greedy tolerance matching.
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a.items_) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b.items_[j] == x) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// ------------------------------------------------------------- parameters

GSpinOddParam GSpinOddParam::make(std::vector<Scalar> chi, Scalar mu) {
  check_entries(chi, mu);
  return GSpinOddParam{std::move(chi), std::move(mu)};
}

GSpinEvenParam GSpinEvenParam::make(std::vector<Scalar> chi, Scalar mu) {
  check_entries(chi, mu);
  return GSpinEvenParam{std::move(chi), std::move(mu)};
}

EigenMultiset std_eigen(const GSpinOddParam& c) {
  auto v = plus_minus(c.chi);
  v.push_back(Scalar::one(c.mode()));
  return EigenMultiset(std::move(v));
}

EigenMultiset std_eigen(const GSpinEvenParam& c) { return EigenMultiset(plus_minus(c.chi)); }

EigenMultiset spin_eigen(const GSpinOddParam& c) { return subset_products(c.chi, c.mu, -1); }

EigenMultiset halfspin_eigen(const GSpinEvenParam& c, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::ParseError, "half-spin sign must be +1 or -1");
  return subset_products(c.chi, c.mu, sign > 0 ? 0 : 1);
}

Scalar similitude_character(const GSpinOddParam& c) {
  Scalar v = c.mu * c.mu;
  for (const auto& x : c.chi) v *= x;
  return v;
}

GSpinOddParam weyl_invert(const GSpinOddParam& c, std::size_t index) {
  GSpinOddParam r = c;
  r.mu = c.mu * c.chi.at(index);
  r.chi[index] = c.chi[index].inverse();
  return r;
}

GSpinEvenParam iota_7to8(const GSpinOddParam& c) {
  if (c.rank() != 3) throw Error(ErrorCode::WrongRank, "iota_7to8 needs a GSpin7 parameter (n = 3)");
  auto chi = c.chi;
  chi.push_back(Scalar::one(c.mode()));
  return GSpinEvenParam{std::move(chi), c.mu};
}

GSpinEvenParam embed_odd_odd(const GSpinOddParam& c1, const GSpinOddParam& c2) {
  auto chi = c1.chi;
  chi.insert(chi.end(), c2.chi.begin(), c2.chi.end());
  chi.push_back(Scalar::one(c1.mode()));
  return GSpinEvenParam::make(std::move(chi), c1.mu * c2.mu);
}

GSpinEvenParam embed_even_even(const GSpinEvenParam& c1, const GSpinEvenParam& c2) {
  auto chi = c1.chi;
  chi.insert(chi.end(), c2.chi.begin(), c2.chi.end());
  return GSpinEvenParam::make(std::move(chi), c1.mu * c2.mu);
}

GSpinOddParam embed_odd_even(const GSpinOddParam& c1, const GSpinEvenParam& c2) {
  auto chi = c1.chi;
  chi.insert(chi.end(), c2.chi.begin(), c2.chi.end());
  return GSpinOddParam::make(std::move(chi), c1.mu * c2.mu);
}

GSpinParam embed_spin_torus(EmbedCase which, const GSpinParam& c1, const GSpinParam& c2) {
  switch (which) {
    case EmbedCase::OddOdd:
      if (auto a = std::get_if<GSpinOddParam>(&c1)) {
        if (auto b = std::get_if<GSpinOddParam>(&c2)) return embed_odd_odd(*a, *b);
      }
      throw Error(ErrorCode::RankMismatch, "OddOdd embedding needs two odd GSpin parameters");
    case EmbedCase::EvenEven:
      if (auto a = std::get_if<GSpinEvenParam>(&c1)) {
        if (auto b = std::get_if<GSpinEvenParam>(&c2)) return embed_even_even(*a, *b);
      }
      throw Error(ErrorCode::RankMismatch, "EvenEven embedding needs two even GSpin parameters");
    case EmbedCase::OddEvenToOdd:
      if (auto a = std::get_if<GSpinOddParam>(&c1)) {
        if (auto b = std::get_if<GSpinEvenParam>(&c2)) return embed_odd_even(*a, *b);
      }
      throw Error(ErrorCode::RankMismatch,
                  "OddEvenToOdd embedding needs an odd then an even GSpin parameter");
  }
  throw Error(ErrorCode::RankMismatch, "unknown embedding case");
}

GSpinEvenParam gspin4_from_gl2_pair(const Gl2Param& a, const Gl2Param& b) {
  if (a[0] * a[1] != b[0] * b[1]) {
    throw Error(ErrorCode::DeterminantMismatch, "GSpin4 needs det A = det B");
  }
  const Scalar inv = a[0].inverse();
  return GSpinEvenParam::make({b[0] * inv, b[1] * inv}, a[0]);
}

GSpinOddParam gspin3_from_gl2(const Gl2Param& c) {
  return GSpinOddParam::make({c[0] / c[1]}, c[1]);
}

GSpinOddParam nu_embed(const Gl2Param& a, const Gl2Param& b, const Gl2Param& c) {
  if (a[0] * a[1] != b[0] * b[1]) {
    throw Error(ErrorCode::DeterminantMismatch, "nu needs det A = det B");
  }
  return GSpinOddParam::make({b[0] / a[0], c[0] / c[1], b[1] / a[0]}, a[0] * c[1]);
}

Scalar half_power(const Scalar& q, long twice_exponent) {
  if (twice_exponent % 2 == 0) return q.pow(twice_exponent / 2);
  auto root = q.sqrt();
  if (!root) {
    throw Error(ErrorCode::NeedsHalfPowerMode,
                "q = " + q.to_string() + " has no square root in mode " + std::string(mode_name(q.mode())) +
                    "; use the qhalf or complex mode");
  }
  return root->pow(twice_exponent);
}

GSpinOddParam satake_of_trivial(std::size_t n, const Scalar& q) {
  std::vector<Scalar> chi;
  for (std::size_t k = n; k >= 1; --k) chi.push_back(q.pow(static_cast<long>(k)));
  const long nn = static_cast<long>(n);
  return GSpinOddParam::make(std::move(chi), half_power(q, -nn * (nn + 1) / 2));
}

GSpinEvenParam theta_satake(const GSpinOddParam& c, std::size_t m, const Scalar& q) {
  if (m <= c.rank()) {
    throw Error(ErrorCode::RankTooSmall, "theta lift needs m >= n + 1 (n = " + std::to_string(c.rank()) +
                                             ", m = " + std::to_string(m) + ")");
  }
  const GSpinOddParam triv = satake_of_trivial(m - c.rank() - 1, q);
  return embed_odd_odd(c, triv);
}

bool g2_test(const GSpinOddParam& c) {
  if (c.rank() != 3) throw Error(ErrorCode::WrongRank, "G2 criterion needs a GSpin7 parameter (n = 3)");
  if (!similitude_character(c).is_one()) {
    throw Error(ErrorCode::NotPGSp6Param, "mu^2 x1 x2 x3 = " + similitude_character(c).to_string() +
                                              " != 1; the criterion applies to PGSp6 only");
  }
  return spin_eigen(c).contains(Scalar::one(c.mode()));
}

// ----------------------------------------------------------- Archimedean

ArchWeightParam siegel_weights(int k1, int k2, int k3) {
  if (!(k1 >= k2 && k2 >= k3)) {
    throw Error(ErrorCode::WeightConstraintViolated, "weights must satisfy k1 >= k2 >= k3");
  }
  if (k3 < 4) throw Error(ErrorCode::WeightConstraintViolated, "weights must satisfy k3 >= 4");
  if ((k1 + k2 + k3) % 2 != 0) {
    throw Error(ErrorCode::WeightConstraintViolated, "k1 + k2 + k3 must be even");
  }
  ArchWeightParam wp;
  wp.k1 = k1;
  wp.k2 = k2;
  wp.k3 = k3;
  wp.a = k1 - 1;
  wp.b = k2 - 2;
  wp.c = k3 - 3;
  wp.w = {(wp.a + wp.b + wp.c) / 2, (wp.a + wp.b - wp.c) / 2, (wp.a - wp.b + wp.c) / 2,
          std::abs(wp.a - wp.b - wp.c) / 2};
  return wp;
}

std::vector<int> arch_spin(const ArchWeightParam& wp) {
  std::vector<int> v;
  for (int w : wp.w) {
    v.push_back(w);
    v.push_back(-w);
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> arch_std(const ArchWeightParam& wp) {
  std::vector<int> v{0, wp.a, -wp.a, wp.b, -wp.b, wp.c, -wp.c};
  std::sort(v.begin(), v.end());
  return v;
}

// ------------------------------------------------------------ projective

ProjectiveMultiset::ProjectiveMultiset(EigenMultiset m) : m_(std::move(m)) {
  for (const auto& x : m_.items()) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroScalar, "projective multiset entries must be nonzero");
  }
}

std::vector<Scalar> ProjectiveMultiset::canonical() const {
  if (m_.empty()) return {};
  if (m_.items().front().mode() == ScalarMode::complex) {
    throw Error(ErrorCode::Unsupported, "canonical projective form needs an exact mode");
  }
  std::vector<Scalar> best;
  for (const auto& x : m_.items()) {
    std::vector<Scalar> cand = m_.scaled(x.inverse()).sorted();
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                                     by_compare)) {
      best = std::move(cand);
    }
  }
  return best;
}

bool operator==(const ProjectiveMultiset& a, const ProjectiveMultiset& b) {
  if (a.m_.size() != b.m_.size()) return false;
  if (a.m_.empty()) return true;
  const EigenMultiset normalized = a.m_.scaled(a.m_.items().front().inverse());
  for (const auto& y : b.m_.items()) {
    if (b.m_.scaled(y.inverse()) == normalized) return true;
  }
  return false;
}

ProjectiveMultiset spinbar(const GSpinOddParam& c) { return ProjectiveMultiset(spin_eigen(c)); }

}  // namespace triality
