#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "eisencoh/error.hpp"
#include "eisencoh/weights.hpp"

namespace eisencoh {

/// Multiset of Hodge pairs (p, q) of a pure Hodge structure of the given
/// weight. Pairs are kept sorted by (p, q).
class HodgeSet {
 public:
  using Pair = std::pair<std::int64_t, std::int64_t>;

  HodgeSet() = default;
  explicit HodgeSet(std::int64_t weight) : weight_(weight) {}

  void add(std::int64_t p, std::int64_t q, std::int64_t mult = 1) {
    if (p + q != weight_ || p < 0 || q < 0 || mult < 1)
      throw Error(ErrorCode::InvalidConfig,
                  "bad Hodge pair (" + std::to_string(p) + "," + std::to_string(q) + ") for weight " +
                      std::to_string(weight_));
    pairs_[{p, q}] += mult;
  }

  std::int64_t weight() const { return weight_; }
  const std::map<Pair, std::int64_t>& pairs() const { return pairs_; }

  std::int64_t multiplicity(std::int64_t p, std::int64_t q) const {
    auto it = pairs_.find({p, q});
    return it == pairs_.end() ? 0 : it->second;
  }

  std::int64_t totalMultiplicity() const {
    std::int64_t total = 0;
    for (const auto& [pair, mult] : pairs_) total += mult;
    return total;
  }

  bool isSymmetric() const {
    for (const auto& [pair, mult] : pairs_)
      if (multiplicity(pair.second, pair.first) != mult) return false;
    return true;
  }

  friend bool operator==(const HodgeSet&, const HodgeSet&) = default;

 private:
  std::int64_t weight_ = 0;
  std::map<Pair, std::int64_t> pairs_;
};

/// {(w − S_s, S_s) : s = 0..n−1} where S_s = a_1 + … + a_s.
inline HodgeSet hodgeSetOf(const CuspidalParams& params) {
  HodgeSet out(params.motivic_weight);
  std::int64_t partial = 0;
  out.add(params.motivic_weight, 0);
  for (auto a : params.a) {
    partial += a;
    out.add(params.motivic_weight - partial, partial);
  }
  return out;
}

inline HodgeSet tensorHodge(const HodgeSet& h, const HodgeSet& hPrime) {
  HodgeSet out(h.weight() + hPrime.weight());
  for (const auto& [x, mx] : h.pairs())
    for (const auto& [y, my] : hPrime.pairs()) out.add(x.first + y.first, x.second + y.second, mx * my);
  return out;
}

/// h^{w/2, w/2}; zero when the weight is odd.
inline std::int64_t middleHodgeNumber(const HodgeSet& h) {
  if (h.weight() % 2 != 0) return 0;
  return h.multiplicity(h.weight() / 2, h.weight() / 2);
}

/// p(μ): the least p with weight ≥ p > weight/2 and h^{p, weight−p} ≠ 0.
/// For odd weight the middle condition is vacuous and 2p > weight is used.
inline std::int64_t pOfMu(const HodgeSet& h) {
  if (middleHodgeNumber(h) != 0)
    throw Error(ErrorCode::MiddleNonzero,
                "middle Hodge number h^{" + std::to_string(h.weight() / 2) + "," + std::to_string(h.weight() / 2) +
                    "} = " + std::to_string(middleHodgeNumber(h)));
  for (const auto& [pair, mult] : h.pairs())
    if (2 * pair.first > h.weight()) return pair.first;
  throw Error(ErrorCode::NoPairAboveMiddle, "no Hodge pair above the middle");
}

}  // namespace eisencoh
