#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/half_int.hpp"

namespace eisencoh {

/// Inputs that fix the critical strip of L(σ_f × σ′_fᵛ, s) in both the
/// cohomological and the automorphic normalization.
struct CriticalData {
  std::int64_t p_mu = 0;
  std::int64_t total_weight = 0;  // w + w′
  HalfInt a_mu;                   // d − d′
  std::int64_t N = 0;

  static CriticalData make(std::int64_t p_mu, std::int64_t total_weight, HalfInt a_mu, std::int64_t N) {
    if (total_weight < 0 || 2 * p_mu <= total_weight)
      throw Error(ErrorCode::InvalidConfig, "need p(mu) > (w+w')/2, got p=" + std::to_string(p_mu) +
                                                " and w+w'=" + std::to_string(total_weight));
    if (N < 3 || N % 2 == 0) throw Error(ErrorCode::InvalidConfig, "N must be odd and >= 3");
    return CriticalData{p_mu, total_weight, a_mu, N};
  }

  HalfInt halfTotal() const { return HalfInt::fromTwice(total_weight); }
  HalfInt minusHalfN() const { return HalfInt::fromTwice(-N); }

  friend bool operator==(const CriticalData&, const CriticalData&) = default;
};

/// p(μ), p(μ)−1, …, w+w′+1−p(μ).
inline std::vector<std::int64_t> criticalSetCoh(const CriticalData& cd) {
  std::vector<std::int64_t> out;
  for (std::int64_t s = cd.p_mu; s >= cd.total_weight + 1 - cd.p_mu; --s) out.push_back(s);
  return out;
}

/// Cohomological argument s ↦ automorphic argument s − (w+w′)/2 + a(μ).
inline HalfInt cohToAutomorphic(const CriticalData& cd, std::int64_t sCoh) {
  const HalfInt out = HalfInt::fromInt(sCoh) - cd.halfTotal() + cd.a_mu;
  if (out.isInteger())
    throw Error(ErrorCode::ShiftNotHalfIntegral,
                "shift -(w+w')/2 + a(mu) = " + (cd.a_mu - cd.halfTotal()).str() + " is integral");
  return out;
}

inline std::vector<HalfInt> criticalSetAutomorphic(const CriticalData& cd) {
  std::vector<HalfInt> out;
  for (auto s : criticalSetCoh(cd)) out.push_back(cohToAutomorphic(cd, s));
  return out;
}

/// Centre of the automorphic critical strip, 1/2 + a(μ). The strip is
/// symmetric about s = 1/2 only when a(μ) = 0.
inline HalfInt automorphicCenter(const CriticalData& cd) { return HalfInt::fromTwice(1) + cd.a_mu; }

struct NuZero {
  HalfInt value;
  bool integral = false;
  HalfInt automorphic_image;  // ν₀ − (w+w′)/2 + a(μ); always −N/2
};

/// ν₀ = (w+w′)/2 − a(μ) − N/2.
inline NuZero nuZero(const CriticalData& cd) {
  NuZero out;
  out.value = cd.halfTotal() - cd.a_mu + cd.minusHalfN();
  out.integral = out.value.isInteger();
  out.automorphic_image = out.value - cd.halfTotal() + cd.a_mu;
  return out;
}

/// Closed interval of a(μ) values allowed by the combinatorial condition.
struct AInterval {
  HalfInt lower;
  HalfInt upper;

  /// Number of points lower, lower+1, …, upper (0 when empty).
  std::int64_t count() const {
    const HalfInt width = upper - lower;
    return width < HalfInt{} ? 0 : width.floor() + 1;
  }
  bool contains(HalfInt a) const { return lower <= a && a <= upper; }

  friend bool operator==(const AInterval&, const AInterval&) = default;
};

inline AInterval admissibleAInterval(std::int64_t totalWeight, std::int64_t pMu, std::int64_t N) {
  const HalfInt halfTotal = HalfInt::fromTwice(totalWeight);
  const HalfInt halfN = HalfInt::fromTwice(N);
  return AInterval{halfTotal - pMu + 1 - halfN, HalfInt{} - halfTotal + pMu - 1 - halfN};
}

inline AInterval admissibleAInterval(const CriticalData& cd) {
  return admissibleAInterval(cd.total_weight, cd.p_mu, cd.N);
}

/// Formal algebraicity statement for Λ(m)/Λ(m+1). The sign ε_σ′ is kept
/// symbolic: it is attached to σ′ and never evaluated here.
struct RatioStatement {
  HalfInt m;
  std::int64_t m0 = 0;  // m = 1/2 + m0
  int epsilon_m = 1;    // (−1)^{m0}

  static constexpr const char* epsilon_sigma_prime = "ε_σ′";
  static constexpr const char* field_tag = "ι(F)";

  std::string lhs() const { return "Λ(" + m.str() + ")/Λ(" + (m + 1).str() + ")"; }
  std::string periodExponent() const { return std::string(epsilon_m > 0 ? "+1" : "-1") + "·" + epsilon_sigma_prime; }
  std::string claim() const {
    return lhs() + " ∈ Ω(σ_f, ι)^{" + periodExponent() + "} · " + field_tag;
  }

  friend bool operator==(const RatioStatement&, const RatioStatement&) = default;
};

inline RatioStatement buildRatioStatement(const CriticalData& cd, HalfInt m) {
  const auto crit = criticalSetAutomorphic(cd);
  auto isCritical = [&](HalfInt x) { return std::find(crit.begin(), crit.end(), x) != crit.end(); };
  if (!isCritical(m) || !isCritical(m + 1))
    throw Error(ErrorCode::NotSuccessiveCritical,
                "m = " + m.str() + " and m+1 = " + (m + 1).str() + " are not both critical");
  RatioStatement out;
  out.m = m;
  out.m0 = (m - HalfInt::fromTwice(1)).toInt();
  out.epsilon_m = (out.m0 % 2 == 0) ? 1 : -1;
  return out;
}

/// One statement per adjacent pair of automorphic critical points,
/// ordered by increasing m.
inline std::vector<RatioStatement> allRatioStatements(const CriticalData& cd) {
  auto crit = criticalSetAutomorphic(cd);
  std::sort(crit.begin(), crit.end());
  std::vector<RatioStatement> out;
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) out.push_back(buildRatioStatement(cd, crit[i]));
  return out;
}

}  // namespace eisencoh
