#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/weights.hpp"

namespace eisencoh {

/// Permutation of {1, …, N} in one-line notation, with its length
/// (inversion count) cached.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
      if (x < 1 || static_cast<std::size_t>(x) > images_.size() || seen[x])
        throw Error(ErrorCode::InvalidPermutation, "not a permutation: " + str());
      seen[x] = 1;
    }
    length_ = countInversions(images_);
  }

  static Perm identity(std::size_t n) {
    std::vector<int> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
    return Perm(std::move(images));
  }

  std::size_t size() const { return images_.size(); }
  /// w(i) for 1-based i.
  int operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  std::size_t length() const { return length_; }

  Perm inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i + 1);
    return Perm(std::move(inv));
  }

  /// (*this ∘ rhs)(i) = this(rhs(i)).
  Perm operator*(const Perm& rhs) const {
    std::vector<int> out(rhs.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[rhs.images_[i] - 1];
    return Perm(std::move(out));
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.images_ < b.images_;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

 private:
  static std::size_t countInversions(const std::vector<int>& v) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] > v[j]) ++count;
    return count;
  }

  std::vector<int> images_;
  std::size_t length_ = 0;
};

inline std::size_t lengthOf(const Perm& w) { return w.length(); }

/// Two-block standard parabolic of GL_N with Levi GL_n × GL_{n′}
/// (first block of size n). Any n, n′ ≥ 1 describes a parabolic; the
/// Eisenstein setting additionally needs n even and n′ odd, see
/// `isEvenOdd` / `requireEvenOdd`.
struct BlockPair {
  std::size_t n = 0;
  std::size_t n_prime = 0;

  static BlockPair make(std::int64_t n, std::int64_t n_prime) {
    if (n < 1 || n_prime < 1)
      throw Error(ErrorCode::InvalidBlockPair,
                  "block sizes must be positive, got " + std::to_string(n) + "x" + std::to_string(n_prime));
    return BlockPair{static_cast<std::size_t>(n), static_cast<std::size_t>(n_prime)};
  }

  std::size_t N() const { return n + n_prime; }
  std::size_t dimUnipotent() const { return n * n_prime; }
  bool isEvenOdd() const { return n % 2 == 0 && n_prime % 2 == 1; }

  const BlockPair& requireEvenOdd() const {
    if (!isEvenOdd())
      throw Error(ErrorCode::InvalidBlockPair,
                  "need n even and n' odd, got " + str());
    return *this;
  }

  /// The opposite parabolic Q with Levi GL_{n′} × GL_n.
  BlockPair swapped() const { return BlockPair{n_prime, n}; }

  std::string str() const { return std::to_string(n) + "x" + std::to_string(n_prime); }

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

/// Minimal-length representatives of W_{M_P}\W: the (n, n′)-shuffles w
/// with w⁻¹ increasing on positions {1..n} and on {n+1..N}. Sorted by
/// (length, one-line form).
inline std::vector<Perm> kostantReps(const BlockPair& b) {
  const std::size_t N = b.N();
  std::vector<Perm> out;
  // Choose the set S = w⁻¹({1..n}) via a bitmask walk over combinations.
  std::vector<char> chosen(N, 0);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(b.n), 1);
  do {
    std::vector<int> inv;
    inv.reserve(N);
    for (std::size_t i = 0; i < N; ++i)
      if (chosen[i]) inv.push_back(static_cast<int>(i + 1));
    for (std::size_t i = 0; i < N; ++i)
      if (!chosen[i]) inv.push_back(static_cast<int>(i + 1));
    out.push_back(Perm(std::move(inv)).inverse());
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Perm> kostantRepsOfLength(const BlockPair& b, std::size_t target) {
  std::vector<Perm> out;
  if (target > b.dimUnipotent()) return out;
  for (auto& w : kostantReps(b))
    if (w.length() == target) out.push_back(std::move(w));
  return out;
}

/// True iff w is block-preserving for b, i.e. lies in W_{M_P}.
inline bool inLeviWeylGroup(const Perm& u, const BlockPair& b) {
  for (std::size_t i = 1; i <= u.size(); ++i)
    if ((i <= b.n) != (static_cast<std::size_t>(u(i)) <= b.n)) return false;
  return true;
}

/// True iff w⁻¹ is increasing on each block of positions.
inline bool isKostantRep(const Perm& w, const BlockPair& b) {
  if (w.size() != b.N()) return false;
  const Perm inv = w.inverse();
  for (std::size_t i = 1; i < b.N(); ++i) {
    if (i == b.n) continue;
    if (inv(i) > inv(i + 1)) return false;
  }
  return true;
}

namespace detail {

/// (w·v)_i = v_{w⁻¹(i)}, i.e. entry i of v moves to position w(i).
template <typename T>
std::vector<T> permuteVector(const Perm& w, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[w.images()[i] - 1] = v[i];
  return out;
}

inline void requireSameSize(const Perm& w, const Weight& v) {
  if (w.size() != v.size())
    throw Error(ErrorCode::InvalidPermutation,
                "permutation " + w.str() + " does not act on weight " + v.str());
}

}  // namespace detail

/// Shifted action w·μ̃ = w(μ̃ + ρ̃) − ρ̃. Computed with 2ρ̃ so that even N
/// (half-integral ρ̃) stays exact; w(ρ̃) − ρ̃ is always integral.
inline GLNWeight dotAction(const Perm& w, const GLNWeight& mu) {
  detail::requireSameSize(w, mu);
  const std::size_t N = mu.size();
  std::vector<std::int64_t> shifted(N);
  const auto r = rho(N);
  for (std::size_t i = 0; i < N; ++i) shifted[i] = 2 * mu[i] + r[i].twice();
  auto moved = detail::permuteVector(w, shifted);
  for (std::size_t i = 0; i < N; ++i) moved[i] = (moved[i] - r[i].twice()) / 2;
  return GLNWeight(std::move(moved));
}

/// Solves w·μ̃ = μ for μ̃: w⁻¹(μ + ρ̃) − ρ̃.
inline GLNWeight dotPreimage(const Perm& w, const GLNWeight& mu) { return dotAction(w.inverse(), mu); }

/// (λ₁, …, λ_n, λ′₁, …, λ′_{n′}).
inline GLNWeight concatLeviWeight(const Weight& lambda, const Weight& lambdaPrime) {
  std::vector<std::int64_t> out(lambda.entries());
  out.insert(out.end(), lambdaPrime.entries().begin(), lambdaPrime.entries().end());
  return GLNWeight(std::move(out));
}

/// Coefficients (index = power of q) of Σ_{w ∈ W^P} q^{l(w)}.
inline std::vector<std::int64_t> lengthPolynomial(const std::vector<Perm>& reps) {
  std::vector<std::int64_t> coeffs;
  for (const auto& w : reps) {
    if (coeffs.size() <= w.length()) coeffs.resize(w.length() + 1, 0);
    ++coeffs[w.length()];
  }
  return coeffs;
}

/// Gaussian binomial [N choose k]_q by the q-Pascal rule
/// [N,k] = [N−1,k−1] + q^k [N−1,k].
inline std::vector<std::int64_t> gaussianBinomial(std::size_t N, std::size_t k) {
  if (k > N) return {};
  // table[j] holds [m choose j]_q for the current m.
  std::vector<std::vector<std::int64_t>> table(k + 1);
  table[0] = {1};
  for (std::size_t m = 1; m <= N; ++m) {
    for (std::size_t j = std::min(k, m); j >= 1; --j) {
      std::vector<std::int64_t> next = table[j - 1];
      const auto& prev = table[j];
      if (!prev.empty()) {
        if (next.size() < prev.size() + j) next.resize(prev.size() + j, 0);
        for (std::size_t e = 0; e < prev.size(); ++e) next[e + j] += prev[e];
      }
      table[j] = std::move(next);
    }
  }
  return table[k];
}

inline std::string formatPolynomial(const std::vector<std::int64_t>& coeffs) {
  std::string out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool showCoeff = coeffs[e] != 1 || e == 0;
    if (showCoeff) out += std::to_string(coeffs[e]);
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace eisencoh
