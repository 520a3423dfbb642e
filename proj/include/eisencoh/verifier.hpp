#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/hodge.hpp"
#include "eisencoh/lvalues.hpp"
#include "eisencoh/weights.hpp"
#include "eisencoh/weyl.hpp"

namespace eisencoh {

/// b_n: n²/4 for even n, (n²−1)/4 for odd n.
constexpr std::int64_t bottomDegree(std::int64_t n) { return n % 2 == 0 ? n * n / 4 : (n * n - 1) / 4; }

/// b_N = b_n + b_{n′} + dim(U_P)/2.
constexpr bool degreeIdentity(const BlockPair& b) {
  const auto n = static_cast<std::int64_t>(b.n);
  const auto np = static_cast<std::int64_t>(b.n_prime);
  const std::int64_t dim = n * np;
  if (dim % 2 != 0) return false;
  return bottomDegree(n + np) == bottomDegree(n) + bottomDegree(np) + dim / 2;
}

/// μ = λ + λ′ with both weights admitted by `validate`, n even, n′ odd.
struct LemmaInstance {
  Weight lambda;
  Weight lambda_prime;
  BlockPair block;
  CuspidalParams params;
  CuspidalParams params_prime;

  static LemmaInstance make(Weight lambda, Weight lambdaPrime) {
    auto block = BlockPair::make(static_cast<std::int64_t>(lambda.size()),
                                 static_cast<std::int64_t>(lambdaPrime.size()));
    block.requireEvenOdd();
    auto params = validate(lambda);
    auto paramsPrime = validate(lambdaPrime);
    return LemmaInstance{std::move(lambda), std::move(lambdaPrime), block, std::move(params), std::move(paramsPrime)};
  }

  GLNWeight mu() const { return concatLeviWeight(lambda, lambda_prime); }
  HalfInt aMu() const { return params.d - params_prime.d; }
  std::size_t targetLength() const { return block.dimUnipotent() / 2; }
};

struct Witness {
  Perm w;
  GLNWeight mu_tilde;
};

struct BruteForceResult {
  std::optional<Witness> first;
  std::size_t count = 0;
};

/// Scans `reps` (assumed to be kostantRepsOfLength(block, n·n′/2) in
/// canonical order) for w with w⁻¹(μ+ρ̃)−ρ̃ dominant.
inline BruteForceResult bruteForceSearch(const LemmaInstance& inst, const std::vector<Perm>& reps) {
  BruteForceResult out;
  const GLNWeight mu = inst.mu();
  for (const auto& w : reps) {
    GLNWeight candidate = dotPreimage(w, mu);
    if (!isDominant(candidate)) continue;
    if (!out.first) out.first = Witness{w, std::move(candidate)};
    ++out.count;
  }
  return out;
}

inline std::optional<Witness> bruteForceLemma(const LemmaInstance& inst) {
  return bruteForceSearch(inst, kostantRepsOfLength(inst.block, inst.targetLength())).first;
}

/// Rechecks a witness from scratch: w ∈ W^P, l(w) = n·n′/2, μ̃ dominant,
/// and w·μ̃ = λ + λ′.
inline bool checkWitness(const LemmaInstance& inst, const Witness& witness) {
  return isKostantRep(witness.w, inst.block) && witness.w.length() == inst.targetLength() &&
         isDominant(witness.mu_tilde) && dotAction(witness.w, witness.mu_tilde) == inst.mu();
}

inline HodgeSet tensorHodgeOf(const LemmaInstance& inst) {
  return tensorHodge(hodgeSetOf(inst.params), hodgeSetOf(inst.params_prime));
}

inline CriticalData criticalDataOf(const LemmaInstance& inst) {
  const auto h = tensorHodgeOf(inst);
  return CriticalData::make(pOfMu(h), h.weight(), inst.aMu(), static_cast<std::int64_t>(inst.block.N()));
}

/// a(μ) ∈ admissibleAInterval(w+w′, p(μ), N). Throws MiddleNonzero when
/// the tensor Hodge structure has a middle Hodge number.
inline bool closedFormLemma(const LemmaInstance& inst) {
  return admissibleAInterval(criticalDataOf(inst)).contains(inst.aMu());
}

enum class Verdict { AgreeTrue, AgreeFalse, Discrepancy, HypothesisFail };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AgreeTrue: return "AGREE_TRUE";
    case Verdict::AgreeFalse: return "AGREE_FALSE";
    case Verdict::Discrepancy: return "DISCREPANCY";
    case Verdict::HypothesisFail: return "HYPOTHESIS_FAIL";
  }
  return "UNKNOWN";
}

inline std::optional<Verdict> verdictFromString(std::string_view s) {
  for (auto v : {Verdict::AgreeTrue, Verdict::AgreeFalse, Verdict::Discrepancy, Verdict::HypothesisFail})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

/// Quantities derived along the way; the critical-strip block is only
/// populated when the middle Hodge number vanishes.
struct Derived {
  std::int64_t w = 0;
  std::int64_t w_prime = 0;
  HalfInt d;
  HalfInt d_prime;
  HalfInt a_mu;
  HodgeSet hodge;
  std::int64_t middle_hodge = 0;
  NuZero nu0;

  std::optional<CriticalData> critical;
  std::optional<AInterval> interval;
  std::vector<std::int64_t> crit_coh;
  std::vector<HalfInt> crit_aut;
  std::vector<RatioStatement> ratios;
  bool shift_half_integral = true;
  bool symmetric_about_half = false;

  /// |crit_coh| = 2p − (w+w′) and interval count = 2p − (w+w′) − 1.
  bool count_formulas_ok = true;
  /// Set when the closed form holds: ν₀, ν₀+1 ∈ crit_coh and ν₀ ↦ −N/2.
  std::optional<bool> nu0_pair_ok;
};

struct LemmaReport {
  LemmaInstance instance;
  bool middle_hodge_ok = false;
  bool closed_form = false;
  bool brute_force = false;
  std::optional<Witness> witness;
  std::size_t witness_count = 0;
  bool witness_valid = true;
  Derived derived;
  Verdict verdict = Verdict::AgreeFalse;
};

namespace detail {

inline void fillCriticalStrip(const LemmaInstance& inst, Derived& d) {
  const auto cd = CriticalData::make(pOfMu(d.hodge), d.hodge.weight(), d.a_mu,
                                     static_cast<std::int64_t>(inst.block.N()));
  d.critical = cd;
  d.interval = admissibleAInterval(cd);
  d.crit_coh = criticalSetCoh(cd);
  try {
    d.crit_aut = criticalSetAutomorphic(cd);
    d.ratios = allRatioStatements(cd);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ShiftNotHalfIntegral) throw;
    d.shift_half_integral = false;
    d.crit_aut.clear();
    d.ratios.clear();
  }
  d.symmetric_about_half = automorphicCenter(cd) == HalfInt::fromTwice(1);
  const std::int64_t span = 2 * cd.p_mu - cd.total_weight;
  d.count_formulas_ok = static_cast<std::int64_t>(d.crit_coh.size()) == span && d.interval->count() == span - 1;
}

inline bool nu0PairOk(const Derived& d) {
  if (!d.nu0.integral || !d.critical) return false;
  const std::int64_t nu = d.nu0.value.toInt();
  const auto& crit = d.crit_coh;
  const bool inStrip = !crit.empty() && nu >= crit.back() && nu + 1 <= crit.front();
  return inStrip && d.nu0.automorphic_image == d.critical->minusHalfN();
}

}  // namespace detail

/// Runs both decision procedures on a validated instance and classifies
/// the outcome. `reps` must be kostantRepsOfLength(block, n·n′/2).
inline LemmaReport verifyInstance(const LemmaInstance& inst, const std::vector<Perm>& reps) {
  LemmaReport r;
  r.instance = inst;
  Derived& d = r.derived;
  d.w = inst.params.motivic_weight;
  d.w_prime = inst.params_prime.motivic_weight;
  d.d = inst.params.d;
  d.d_prime = inst.params_prime.d;
  d.a_mu = inst.aMu();
  d.hodge = tensorHodgeOf(inst);
  d.middle_hodge = middleHodgeNumber(d.hodge);
  d.nu0.value = HalfInt::fromTwice(d.w + d.w_prime) - d.a_mu -
                HalfInt::fromTwice(static_cast<std::int64_t>(inst.block.N()));
  d.nu0.integral = d.nu0.value.isInteger();
  d.nu0.automorphic_image = d.nu0.value - HalfInt::fromTwice(d.w + d.w_prime) + d.a_mu;

  const auto brute = bruteForceSearch(inst, reps);
  r.brute_force = brute.first.has_value();
  r.witness = brute.first;
  r.witness_count = brute.count;
  r.witness_valid = !r.witness || checkWitness(inst, *r.witness);

  r.middle_hodge_ok = d.middle_hodge == 0;
  if (!r.middle_hodge_ok) {
    r.verdict = Verdict::HypothesisFail;
    return r;
  }

  detail::fillCriticalStrip(inst, d);
  d.nu0 = nuZero(*d.critical);
  r.closed_form = d.interval->contains(d.a_mu);
  if (r.closed_form) d.nu0_pair_ok = detail::nu0PairOk(d);

  if (r.closed_form != r.brute_force)
    r.verdict = Verdict::Discrepancy;
  else
    r.verdict = r.closed_form ? Verdict::AgreeTrue : Verdict::AgreeFalse;
  return r;
}

inline LemmaReport verifyInstance(const LemmaInstance& inst) {
  return verifyInstance(inst, kostantRepsOfLength(inst.block, inst.targetLength()));
}

}  // namespace eisencoh
