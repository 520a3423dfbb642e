#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/verifier.hpp"

namespace eisencoh {

enum class ReportFormat { Json, Csv, Text };
enum class Verbosity { Summary, Full };

/// Which det-twists λ ↦ λ − l·det are applied to each canonical shape.
/// Automatic ranges cover a(μ) from (lower − margin) to (upper + margin)
/// of the admissible interval, or l ∈ [−margin, margin] when the orbit
/// fails the middle-Hodge hypothesis.
struct TwistRange {
  bool automatic = true;
  std::int64_t margin = 2;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::string str() const {
    if (automatic) return "auto:" + std::to_string(margin);
    return std::to_string(lo) + ":" + std::to_string(hi);
  }
};

struct SweepConfig {
  std::vector<BlockPair> block_pairs;
  std::int64_t entry_bound = 0;
  TwistRange twist_range;
  std::optional<std::string> output_path;
  ReportFormat format = ReportFormat::Json;
  Verbosity verbosity = Verbosity::Summary;
  unsigned threads = 1;  // does not influence the report
};

inline void validateConfig(const SweepConfig& c) {
  if (c.block_pairs.empty()) throw Error(ErrorCode::InvalidConfig, "no block pairs given");
  for (const auto& b : c.block_pairs)
    if (!b.isEvenOdd()) throw Error(ErrorCode::InvalidConfig, "block pair " + b.str() + " is not (even, odd)");
  if (c.entry_bound < 1) throw Error(ErrorCode::InvalidConfig, "entry bound must be >= 1");
  if (c.twist_range.automatic && c.twist_range.margin < 0)
    throw Error(ErrorCode::InvalidConfig, "twist margin must be >= 0");
  if (!c.twist_range.automatic && c.twist_range.lo > c.twist_range.hi)
    throw Error(ErrorCode::InvalidConfig, "empty twist range " + c.twist_range.str());
  if (c.threads < 1) throw Error(ErrorCode::InvalidConfig, "threads must be >= 1");
}

/// Valid weights of GL_n normalized by λ_n = 0 with λ₁ ≤ bound, in
/// lexicographic order. Every valid weight is a det-twist of exactly one.
inline std::vector<Weight> canonicalShapes(std::size_t n, std::int64_t bound) {
  std::vector<Weight> out;
  if (n == 1) {
    out.push_back(Weight{0});
    return out;
  }
  const std::size_t gaps = n - 1;
  const std::size_t free = (gaps + 1) / 2;
  std::vector<std::int64_t> a(gaps, 2);
  // Depth-first over the free half of the symmetric gap vector.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
    if (i == free) {
      std::vector<std::int64_t> entries(n, 0);
      for (std::size_t k = gaps; k-- > 0;) entries[k] = entries[k + 1] + a[k] - 1;
      out.emplace_back(std::move(entries));
      return;
    }
    const bool paired = (gaps - 1 - i) != i;
    const std::int64_t perUnit = paired ? 2 : 1;
    for (std::int64_t g = 2; perUnit * (g - 1) <= budget; ++g) {
      a[i] = g;
      a[gaps - 1 - i] = g;
      self(self, i + 1, budget - perUnit * (g - 1));
    }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

enum class Coverage { Verified, Failed, NotApplicable };

constexpr std::string_view to_string(Coverage c) {
  switch (c) {
    case Coverage::Verified: return "verified";
    case Coverage::Failed: return "failed";
    case Coverage::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

/// One det-twist orbit: a canonical (λ, λ′) shape pair and its twists.
struct OrbitResult {
  BlockPair block;
  Weight shape;
  Weight shape_prime;
  bool hypothesis = true;
  std::int64_t expected_true = 0;  // 2p(μ) − (w+w′) − 1
  std::vector<std::int64_t> twists;
  std::vector<std::int64_t> agree_true_twists;
  std::size_t first_instance = 0;  // index into SweepReport::instances
  Coverage coverage = Coverage::NotApplicable;
  std::string note;
};

struct VerdictCounts {
  std::int64_t agree_true = 0;
  std::int64_t agree_false = 0;
  std::int64_t discrepancy = 0;
  std::int64_t hypothesis_fail = 0;

  void add(Verdict v) {
    switch (v) {
      case Verdict::AgreeTrue: ++agree_true; break;
      case Verdict::AgreeFalse: ++agree_false; break;
      case Verdict::Discrepancy: ++discrepancy; break;
      case Verdict::HypothesisFail: ++hypothesis_fail; break;
    }
  }
  std::int64_t total() const { return agree_true + agree_false + discrepancy + hypothesis_fail; }

  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

/// Consistency checks run on top of the verdicts.
struct CheckCounts {
  std::int64_t count_formula_failures = 0;
  std::int64_t nu0_failures = 0;
  std::int64_t invalid_witnesses = 0;
  std::int64_t shift_failures = 0;
  std::int64_t coverage_verified = 0;
  std::int64_t coverage_failures = 0;
  std::int64_t coverage_not_applicable = 0;
  std::int64_t asymmetric_automorphic = 0;
  std::size_t max_witness_count = 0;

  bool clean() const {
    return count_formula_failures == 0 && nu0_failures == 0 && invalid_witnesses == 0 && shift_failures == 0 &&
           coverage_failures == 0;
  }
};

struct SweepReport {
  SweepConfig config;
  std::vector<LemmaReport> instances;
  std::vector<OrbitResult> orbits;
  VerdictCounts counts;
  std::map<std::string, VerdictCounts> counts_by_block;  // key BlockPair::str()
  CheckCounts checks;

  /// A counterexample or a failed consistency check.
  bool hasFindings() const { return counts.discrepancy > 0 || !checks.clean(); }
};

namespace detail {

inline std::vector<std::int64_t> twistsFor(const LemmaInstance& base, const TwistRange& range, bool hypothesis,
                                           const std::optional<AInterval>& interval) {
  std::int64_t lo = range.lo;
  std::int64_t hi = range.hi;
  if (range.automatic) {
    if (hypothesis && interval) {
      // a(μ) − l must cover [min − margin, max + margin].
      const HalfInt low = std::min(interval->lower, interval->upper) - range.margin;
      const HalfInt high = std::max(interval->lower, interval->upper) + range.margin;
      lo = (base.aMu() - high).ceil();
      hi = (base.aMu() - low).floor();
    } else {
      lo = -range.margin;
      hi = range.margin;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

/// Successive-pair coverage on one orbit: the AGREE_TRUE twists form a
/// run of 2p − (w+w′) − 1 consecutive l, and a(μ) ↦ (ν₀, ν₀+1) hits each
/// adjacent pair of the cohomological critical set exactly once, with
/// ν₀ ↦ −N/2 in the automorphic normalization.
inline void checkCoverage(OrbitResult& orbit, const std::vector<LemmaReport>& reports) {
  const auto* first = &reports[orbit.first_instance];
  if (!orbit.hypothesis) {
    orbit.note = "middle Hodge number nonzero";
    return;
  }
  for (std::size_t k = 0; k < orbit.twists.size(); ++k)
    if (reports[orbit.first_instance + k].verdict == Verdict::Discrepancy) {
      orbit.note = "orbit contains a discrepancy";
      return;
    }
  const auto& interval = *first->derived.interval;
  const HalfInt a0 = first->derived.a_mu + orbit.twists.front();  // a(μ) at l = 0
  // Twists whose a(μ) = a0 − l lands in the interval must all be present.
  for (HalfInt a = interval.lower; a <= interval.upper; a += HalfInt::fromInt(1)) {
    const HalfInt l = a0 - a;
    if (!l.isInteger() || l.toInt() < orbit.twists.front() || l.toInt() > orbit.twists.back()) {
      orbit.note = "twist range does not cover the admissible interval";
      return;
    }
  }

  const auto& crit = first->derived.crit_coh;
  std::set<std::int64_t> bottoms;
  bool ok = static_cast<std::int64_t>(orbit.agree_true_twists.size()) == orbit.expected_true;
  for (std::size_t k = 1; ok && k < orbit.agree_true_twists.size(); ++k)
    ok = orbit.agree_true_twists[k] == orbit.agree_true_twists[k - 1] + 1;
  for (std::size_t k = 0; ok && k < orbit.twists.size(); ++k) {
    const auto& r = reports[orbit.first_instance + k];
    if (r.verdict != Verdict::AgreeTrue) continue;
    ok = r.derived.crit_coh == crit && r.derived.nu0_pair_ok.value_or(false) &&
         bottoms.insert(r.derived.nu0.value.toInt()).second;
    if (ok && r.derived.a_mu == interval.upper) ok = r.derived.nu0.value.toInt() == crit.back();
    if (ok && r.derived.a_mu == interval.lower) ok = r.derived.nu0.value.toInt() + 1 == crit.front();
  }
  if (ok) {
    std::set<std::int64_t> expected;
    for (std::size_t i = 1; i < crit.size(); ++i) expected.insert(crit[i]);
    ok = bottoms == expected;
  }
  orbit.coverage = ok ? Coverage::Verified : Coverage::Failed;
  if (!ok) orbit.note = "successive-pair coverage failed";
}

template <typename Fn>
void parallelFor(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Exhaustive campaign over canonical shapes and their det-twists. The
/// report order is (block pair, shape λ, shape λ′, twist l) regardless of
/// the thread count.
inline SweepReport sweep(const SweepConfig& config) {
  validateConfig(config);
  SweepReport report;
  report.config = config;

  std::vector<LemmaInstance> pending;
  std::vector<const std::vector<Perm>*> repsFor;
  std::map<std::string, std::vector<Perm>> repsByBlock;

  for (const auto& block : config.block_pairs) {
    auto& reps = repsByBlock[block.str()];
    if (reps.empty()) reps = kostantRepsOfLength(block, block.dimUnipotent() / 2);
    for (const auto& shape : canonicalShapes(block.n, config.entry_bound)) {
      for (const auto& shapePrime : canonicalShapes(block.n_prime, config.entry_bound)) {
        const auto base = LemmaInstance::make(shape, shapePrime);
        const auto hodge = tensorHodgeOf(base);
        const bool hypothesis = middleHodgeNumber(hodge) == 0;
        std::optional<AInterval> interval;
        OrbitResult orbit;
        orbit.block = block;
        orbit.shape = shape;
        orbit.shape_prime = shapePrime;
        orbit.hypothesis = hypothesis;
        if (hypothesis) {
          const auto cd = criticalDataOf(base);
          interval = admissibleAInterval(cd);
          orbit.expected_true = interval->count();
        }
        orbit.twists = detail::twistsFor(base, config.twist_range, hypothesis, interval);
        orbit.first_instance = pending.size();
        for (auto l : orbit.twists) {
          pending.push_back(LemmaInstance::make(twistByDet(shape, l), shapePrime));
          repsFor.push_back(&reps);
        }
        report.orbits.push_back(std::move(orbit));
      }
    }
  }

  std::vector<std::optional<LemmaReport>> results(pending.size());
  detail::parallelFor(pending.size(), config.threads,
                      [&](std::size_t i) { results[i] = verifyInstance(pending[i], *repsFor[i]); });
  report.instances.reserve(results.size());
  for (auto& r : results) report.instances.push_back(std::move(*r));

  for (auto& orbit : report.orbits) {
    for (std::size_t k = 0; k < orbit.twists.size(); ++k)
      if (report.instances[orbit.first_instance + k].verdict == Verdict::AgreeTrue)
        orbit.agree_true_twists.push_back(orbit.twists[k]);
    if (!orbit.twists.empty()) detail::checkCoverage(orbit, report.instances);
    switch (orbit.coverage) {
      case Coverage::Verified: ++report.checks.coverage_verified; break;
      case Coverage::Failed: ++report.checks.coverage_failures; break;
      case Coverage::NotApplicable: ++report.checks.coverage_not_applicable; break;
    }
  }

  for (const auto& r : report.instances) {
    report.counts.add(r.verdict);
    report.counts_by_block[r.instance.block.str()].add(r.verdict);
    auto& c = report.checks;
    if (!r.derived.count_formulas_ok) ++c.count_formula_failures;
    if (r.derived.nu0_pair_ok == false) ++c.nu0_failures;
    if (!r.witness_valid) ++c.invalid_witnesses;
    if (!r.derived.shift_half_integral) ++c.shift_failures;
    if (r.middle_hodge_ok && !r.derived.symmetric_about_half) ++c.asymmetric_automorphic;
    c.max_witness_count = std::max(c.max_witness_count, r.witness_count);
  }
  return report;
}

}  // namespace eisencoh
