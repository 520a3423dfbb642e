#pragma once

#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/half_int.hpp"

namespace eisencoh {

/// Highest weight of GL_n in the standard character coordinates
/// (λ₁, …, λ_n) on the diagonal torus.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit Weight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t sum() const { return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0}); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  std::vector<std::int64_t> entries_;
};

/// Weight of GL_N for N = n + n′; same coordinates and conventions.
using GLNWeight = Weight;

/// Parses the bracketed token form, e.g. "[1,0]" or "[ 2, 0, -2 ]".
inline Weight parseWeight(std::string_view token) {
  auto fail = [&](const std::string& why) -> Weight {
    throw Error(ErrorCode::ParseError, "cannot parse weight '" + std::string(token) + "': " + why);
  };
  auto skipSpace = [&](std::size_t& pos) {
    while (pos < token.size() && (token[pos] == ' ' || token[pos] == '\t')) ++pos;
  };
  std::size_t pos = 0;
  skipSpace(pos);
  if (pos >= token.size() || token[pos] != '[') return fail("expected '['");
  ++pos;
  std::vector<std::int64_t> entries;
  for (;;) {
    skipSpace(pos);
    std::int64_t value = 0;
    const char* first = token.data() + pos;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) return fail("expected an integer at offset " + std::to_string(pos));
    entries.push_back(value);
    pos += static_cast<std::size_t>(ptr - first);
    skipSpace(pos);
    if (pos < token.size() && token[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < token.size() && token[pos] == ']') {
      ++pos;
      break;
    }
    return fail("expected ',' or ']'");
  }
  skipSpace(pos);
  if (pos != token.size()) return fail("trailing characters");
  return Weight(std::move(entries));
}

/// Cuspidal parameters of a validated weight: λ+ρ = Σ a_i γ_i + d·det.
struct CuspidalParams {
  std::vector<std::int64_t> a;
  HalfInt d;
  std::int64_t motivic_weight = 0;
  std::size_t n = 0;

  friend bool operator==(const CuspidalParams&, const CuspidalParams&) = default;
};

/// Half the sum of positive roots of GL_n: ((n−1)/2, (n−3)/2, …, −(n−1)/2).
inline std::vector<HalfInt> rho(std::size_t n) {
  std::vector<HalfInt> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    out.push_back(HalfInt::fromTwice(static_cast<std::int64_t>(n + 1) - 2 * static_cast<std::int64_t>(i)));
  return out;
}

inline bool isDominant(const Weight& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

/// Admission gate for every downstream computation. Checks, in order:
/// dominance, essential self-duality, regularity, 2d ∈ ℤ, and the parity
/// 2d ≡ w + n − 1 (mod 2). Each failure names the first offending index.
inline CuspidalParams validate(const Weight& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) throw Error(ErrorCode::ParseError, "weight must have at least one entry");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1])
      throw Error(ErrorCode::NotDominant,
                  lambda.str() + " increases at index " + std::to_string(i + 1), i + 1);

  std::vector<std::int64_t> a(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) a[i] = lambda[i] - lambda[i + 1] + 1;

  for (std::size_t i = 0; i + 1 < n; ++i)
    if (a[i] != a[n - 2 - i])
      throw Error(ErrorCode::NotSelfDual,
                  lambda.str() + ": a_" + std::to_string(i + 1) + " != a_" + std::to_string(n - 1 - i), i + 1);

  for (std::size_t i = 0; i + 1 < n; ++i)
    if (a[i] < 2)
      throw Error(ErrorCode::NotRegular,
                  lambda.str() + ": a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) + " < 2", i + 1);

  const std::int64_t twiceSum = 2 * lambda.sum();
  const auto sn = static_cast<std::int64_t>(n);
  if (twiceSum % sn != 0)
    throw Error(ErrorCode::NotHalfIntegral, lambda.str() + ": mean of entries is not in (1/2)Z");
  const HalfInt d = HalfInt::fromTwice(twiceSum / sn);

  const std::int64_t w = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto mod2 = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
  if (mod2(d.twice()) != mod2(w + sn - 1))
    throw Error(ErrorCode::ParityViolation,
                lambda.str() + ": 2d = " + std::to_string(d.twice()) + " but w + n - 1 = " + std::to_string(w + sn - 1));

  return CuspidalParams{std::move(a), d, w, n};
}

inline CuspidalParams cuspidalParams(const Weight& lambda) { return validate(lambda); }

/// Inverse of cuspidalParams: rebuilds λ from the gaps and the mean.
inline Weight weightFromParams(const std::vector<std::int64_t>& a, HalfInt d) {
  const auto n = static_cast<std::int64_t>(a.size() + 1);
  // λ_i = λ_n + Σ_{j ≥ i} (a_j − 1); solve mean(λ) = d for λ_n.
  std::vector<std::int64_t> offset(a.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > 0;) offset[i] = offset[i + 1] + a[i] - 1;
  const std::int64_t offsetSum = std::accumulate(offset.begin(), offset.end(), std::int64_t{0});
  const std::int64_t twiceLast = n * d.twice() - 2 * offsetSum;
  if (twiceLast % (2 * n) != 0)
    throw Error(ErrorCode::NotHalfIntegral, "gaps and mean do not determine an integral weight");
  const std::int64_t last = twiceLast / (2 * n);
  for (auto& x : offset) x += last;
  return Weight(std::move(offset));
}

/// λ − l·det.
inline Weight twistByDet(const Weight& lambda, std::int64_t l) {
  std::vector<std::int64_t> out(lambda.entries());
  for (auto& x : out) x -= l;
  return Weight(std::move(out));
}

/// Highest weight of the contragredient: (−λ_n, …, −λ₁).
inline Weight dualWeight(const Weight& lambda) {
  std::vector<std::int64_t> out(lambda.entries().rbegin(), lambda.entries().rend());
  for (auto& x : out) x = -x;
  return Weight(std::move(out));
}

/// (−1)^l, the exponent in the period relation under λ ↦ λ − l·det.
constexpr int periodTwistExponent(std::int64_t l) { return (l % 2 == 0) ? 1 : -1; }

}  // namespace eisencoh
