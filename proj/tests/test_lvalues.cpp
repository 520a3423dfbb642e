#include <catch_amalgamated.hpp>

#include "eisencoh/lvalues.hpp"

using namespace eisencoh;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::fromTwice(twice); }

const CriticalData kBasic = CriticalData::make(2, 2, h(-3), 3);

}  // namespace

TEST_CASE("CriticalData validation") {
  CHECK_THROWS_AS(CriticalData::make(1, 2, h(-3), 3), Error);
  CHECK_THROWS_AS(CriticalData::make(2, 2, h(-3), 4), Error);
  CHECK_THROWS_AS(CriticalData::make(2, 2, h(-3), 1), Error);
}

TEST_CASE("criticalSetCoh") {
  CHECK(criticalSetCoh(kBasic) == std::vector<std::int64_t>{2, 1});
  CHECK(criticalSetCoh(CriticalData::make(5, 8, h(-3), 5)) == std::vector<std::int64_t>{5, 4});
  for (std::int64_t total = 0; total <= 20; total += 2) {
    const auto cd = CriticalData::make(total / 2 + 1, total, h(1), 3);
    CHECK(criticalSetCoh(cd) == std::vector<std::int64_t>{total / 2 + 1, total / 2});
  }
}

TEST_CASE("critical strip properties") {
  for (std::int64_t total = 0; total <= 14; ++total)
    for (std::int64_t p = total / 2 + 1; p <= total + 2; ++p) {
      const auto cd = CriticalData::make(p, total, h(total % 2 == 0 ? -3 : -2), 5);
      const auto coh = criticalSetCoh(cd);
      CHECK(static_cast<std::int64_t>(coh.size()) == 2 * p - total);
      // Symmetric about (w+w′+1)/2.
      for (std::size_t i = 0; i < coh.size(); ++i) CHECK(coh[i] + coh[coh.size() - 1 - i] == total + 1);
      const auto aut = criticalSetAutomorphic(cd);
      REQUIRE(aut.size() == coh.size());
      for (std::size_t i = 0; i < aut.size(); ++i) {
        CHECK_FALSE(aut[i].isInteger());
        if (i) CHECK(aut[i - 1] - aut[i] == 1);
      }
      CHECK(static_cast<std::int64_t>(allRatioStatements(cd).size()) == static_cast<std::int64_t>(aut.size()) - 1);
      const auto iv = admissibleAInterval(cd);
      CHECK(iv.count() == std::max<std::int64_t>(0, 2 * p - total - 1));
      CHECK((iv.upper - iv.lower).toInt() + 1 == 2 * p - total - 1);
    }
}

TEST_CASE("cohToAutomorphic") {
  CHECK(cohToAutomorphic(kBasic, 1) == h(-3));
  CHECK(cohToAutomorphic(kBasic, 2) == h(-1));
  CHECK(cohToAutomorphic(CriticalData::make(1, 0, h(-3), 3), 0) == h(-3));
  try {
    cohToAutomorphic(CriticalData::make(2, 2, h(-2), 3), 1);
    FAIL("expected ShiftNotHalfIntegral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShiftNotHalfIntegral);
  }
}

TEST_CASE("criticalSetAutomorphic") {
  CHECK(criticalSetAutomorphic(kBasic) == std::vector<HalfInt>{h(-1), h(-3)});
}

TEST_CASE("nuZero") {
  const auto nu = nuZero(kBasic);
  CHECK(nu.value == 1);
  CHECK(nu.integral);
  CHECK(nu.automorphic_image == h(-3));
  for (std::int64_t N = 3; N <= 11; N += 2) CHECK(nuZero(CriticalData::make(1, 0, h(-N), N)).value == 0);
  for (std::int64_t total = 0; total <= 10; ++total)
    for (std::int64_t twiceA = -21; twiceA <= 21; ++twiceA) {
      const auto cd = CriticalData::make(total + 1, total, h(twiceA), 7);
      CHECK(nuZero(cd).automorphic_image == h(-7));
    }
}

TEST_CASE("admissibleAInterval") {
  const auto a = admissibleAInterval(2, 2, 3);
  CHECK(a.lower == h(-3));
  CHECK(a.upper == h(-3));
  CHECK(a.count() == 1);
  const auto b = admissibleAInterval(8, 6, 5);
  CHECK(b.lower == h(-7));
  CHECK(b.upper == h(-3));
  CHECK(b.count() == 3);
  // 2p − (w+w′) − 1 = 0: empty.
  CHECK(admissibleAInterval(3, 2, 3).count() == 0);
}

TEST_CASE("buildRatioStatement") {
  const auto s = buildRatioStatement(kBasic, h(-3));
  CHECK(s.m0 == -2);
  CHECK(s.epsilon_m == 1);
  CHECK(s.lhs() == "Λ(-3/2)/Λ(-1/2)");
  CHECK(s.claim() == "Λ(-3/2)/Λ(-1/2) ∈ Ω(σ_f, ι)^{+1·ε_σ′} · ι(F)");
  try {
    buildRatioStatement(kBasic, h(-1));
    FAIL("expected NotSuccessiveCritical");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSuccessiveCritical);
  }
  // a(μ) = 0 puts m = 1/2 in the strip.
  const auto cd = CriticalData::make(3, 3, HalfInt{}, 3);
  const auto t = buildRatioStatement(cd, h(1));
  CHECK(t.m0 == 0);
  CHECK(t.epsilon_m == 1);
  CHECK(buildRatioStatement(cd, h(-1)).epsilon_m == -1);
  CHECK(automorphicCenter(cd) == h(1));
}

TEST_CASE("twisting shifts the automorphic strip rigidly") {
  for (std::int64_t l = -3; l <= 3; ++l) {
    const auto twisted = CriticalData::make(kBasic.p_mu, kBasic.total_weight, kBasic.a_mu - l, kBasic.N);
    CHECK(criticalSetCoh(twisted) == criticalSetCoh(kBasic));
    const auto a = criticalSetAutomorphic(kBasic), b = criticalSetAutomorphic(twisted);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == a[i] - l);
  }
}
