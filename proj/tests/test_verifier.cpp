#include <catch_amalgamated.hpp>

#include "eisencoh/sweep.hpp"
#include "eisencoh/verifier.hpp"
#include "oracles.hpp"

using namespace eisencoh;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::fromTwice(twice); }

LemmaInstance inst(Weight l, Weight lp) { return LemmaInstance::make(std::move(l), std::move(lp)); }

}  // namespace

TEST_CASE("bottomDegree") {
  CHECK(bottomDegree(2) == 1);
  CHECK(bottomDegree(1) == 0);
  CHECK(bottomDegree(3) == 2);
}

TEST_CASE("degreeIdentity") {
  CHECK(degreeIdentity(BlockPair{2, 1}));
  CHECK(degreeIdentity(BlockPair{2, 3}));
  CHECK(degreeIdentity(BlockPair{4, 3}));
  CHECK(bottomDegree(7) == 12);
  for (std::size_t n = 2; n <= 98; n += 2)
    for (std::size_t np = 1; n + np <= 99; np += 2) CHECK(degreeIdentity(BlockPair{n, np}));
}

TEST_CASE("LemmaInstance admission") {
  CHECK_THROWS_AS(inst(Weight{1, 0}, Weight{1, 0}), Error);
  CHECK_THROWS_AS(inst(Weight{2}, Weight{1, 0}), Error);
  CHECK_THROWS_AS(inst(Weight{0, 0}, Weight{1}), Error);
  CHECK_THROWS_AS(inst(Weight{1, 0}, Weight{1, 0, 0}), Error);
}

TEST_CASE("bruteForceLemma examples") {
  const auto w = bruteForceLemma(inst(Weight{1, 0}, Weight{2}));
  REQUIRE(w);
  CHECK(w->w == Perm({1, 3, 2}));
  CHECK(w->w.length() == 1);
  CHECK(w->mu_tilde == GLNWeight{1, 1, 1});
  CHECK_FALSE(bruteForceLemma(inst(Weight{1, 0}, Weight{3})));
  CHECK_FALSE(bruteForceLemma(inst(Weight{1, 0}, Weight{1})));
}

TEST_CASE("closedFormLemma examples") {
  CHECK(inst(Weight{1, 0}, Weight{2}).aMu() == h(-3));
  CHECK(closedFormLemma(inst(Weight{1, 0}, Weight{2})));
  CHECK(inst(Weight{1, 0}, Weight{3}).aMu() == h(-5));
  CHECK_FALSE(closedFormLemma(inst(Weight{1, 0}, Weight{3})));
  CHECK(inst(Weight{1, 0}, Weight{1}).aMu() == h(-1));
  CHECK_FALSE(closedFormLemma(inst(Weight{1, 0}, Weight{1})));
}

TEST_CASE("verifyInstance verdicts") {
  const auto r = verifyInstance(inst(Weight{1, 0}, Weight{2}));
  CHECK(r.verdict == Verdict::AgreeTrue);
  REQUIRE(r.witness);
  CHECK(r.witness_count == 1);
  CHECK(r.witness_valid);
  CHECK(r.derived.nu0.value == 1);
  CHECK(r.derived.nu0_pair_ok == true);
  CHECK(r.derived.crit_coh == std::vector<std::int64_t>{2, 1});
  CHECK(r.derived.ratios.size() == 1);

  const auto f = verifyInstance(inst(Weight{1, 0}, Weight{3}));
  CHECK(f.verdict == Verdict::AgreeFalse);
  CHECK_FALSE(f.witness);
  CHECK_FALSE(f.derived.nu0_pair_ok.has_value());

  // a = (4) against a′ = (2,2): S − w/2 = ±2 cancels S′ − w′/2 = ∓2.
  const auto hf = verifyInstance(inst(Weight{3, 0}, Weight{2, 1, 0}));
  CHECK(hf.verdict == Verdict::HypothesisFail);
  CHECK_FALSE(hf.middle_hodge_ok);
  CHECK(hf.derived.middle_hodge == 2);
  CHECK_FALSE(hf.derived.critical.has_value());
  CHECK_THROWS_AS(closedFormLemma(hf.instance), Error);
}

TEST_CASE("witnesses satisfy all four conditions") {
  for (const BlockPair b : {BlockPair{2, 1}, BlockPair{2, 3}, BlockPair{4, 1}, BlockPair{4, 3}}) {
    const auto minimal = oracle::minimalCosetReps(b.n, b.n_prime);
    for (const auto& shape : canonicalShapes(b.n, 6))
      for (const auto& shapePrime : canonicalShapes(b.n_prime, 6))
        for (std::int64_t l = -12; l <= 4; ++l) {
          const auto i = inst(twistByDet(shape, l), shapePrime);
          const auto r = verifyInstance(i);
          INFO(i.lambda.str() << " " << i.lambda_prime.str());
          CHECK(r.brute_force == oracle::lemmaBySorting(i.lambda, i.lambda_prime, minimal));
          if (!r.witness) continue;
          const auto& w = *r.witness;
          CHECK(minimal.count(w.w.images()) == 1);
          CHECK(w.w.length() == b.dimUnipotent() / 2);
          CHECK(isDominant(w.mu_tilde));
          CHECK(dotAction(w.w, w.mu_tilde) == i.mu());
          CHECK(r.witness_count == 1);
        }
  }
}

TEST_CASE("closed form equals brute force for n = 2, n' = 1, entries up to 8") {
  const auto reps = kostantRepsOfLength(BlockPair{2, 1}, 1);
  std::int64_t checked = 0;
  for (std::int64_t top = -8; top <= 8; ++top)
    for (std::int64_t bottom = -8; bottom < top; ++bottom)
      for (std::int64_t c = -8; c <= 8; ++c) {
        const auto i = inst(Weight{top, bottom}, Weight{c});
        const auto r = verifyInstance(i, reps);
        INFO(i.lambda.str() << " " << i.lambda_prime.str());
        CHECK(r.closed_form == r.brute_force);
        CHECK(r.verdict != Verdict::Discrepancy);
        ++checked;
      }
  CHECK(checked == 136 * 17);
}

TEST_CASE("twist transport") {
  for (const auto& [shape, shapePrime] : std::vector<std::pair<Weight, Weight>>{
           {Weight{3, 0}, Weight{0}}, {Weight{5, 3, 2, 0}, Weight{2, 1, 0}}, {Weight{4, 0}, Weight{4, 2, 0}}}) {
    const auto base = inst(shape, shapePrime);
    const auto iv = admissibleAInterval(criticalDataOf(base));
    for (std::int64_t l = -10; l <= 10; ++l) {
      const auto r = verifyInstance(inst(twistByDet(shape, l), shapePrime));
      CHECK(r.closed_form == iv.contains(base.aMu() - l));
      CHECK(r.brute_force == r.closed_form);
      CHECK(*r.derived.interval == iv);
    }
  }
}
