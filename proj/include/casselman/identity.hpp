#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casselman/spectral.hpp"

namespace casselman {

/// Configuration for randomized rational-function identity checking.
/// Defaults: primes {2^61-1, 2^61-31}, 3 points per prime.
struct IdentityCheckConfig {
  std::vector<uint64_t> primes{2305843009213693951ULL, 2305843009213693921ULL};
  int points_per_prime = 3;
  uint64_t seed = 2026;

  void validate() const {
    if (primes.empty()) throw std::invalid_argument("IdentityCheckConfig: no primes");
    for (uint64_t p : primes) {
      if (p <= (1ULL << 31)) throw std::invalid_argument("IdentityCheckConfig: prime must exceed 2^31");
      if (!is_prime_u64(p)) throw std::invalid_argument("IdentityCheckConfig: " + std::to_string(p) + " is not prime");
    }
    if (points_per_prime < 1) throw std::invalid_argument("IdentityCheckConfig: points_per_prime must be >= 1");
  }
};

/// Seed for point #k of prime #i under a sweep seed; pinned so reports are
/// reproducible byte for byte.
inline uint64_t point_seed(const IdentityCheckConfig& cfg, size_t prime_index, int point_index) {
  return mix_seed(cfg.seed, cfg.primes[prime_index], static_cast<uint64_t>(point_index));
}

struct IdentityWitness {
  uint64_t prime;
  int point_index;
  uint64_t seed;
  std::vector<uint64_t> zbar;
  uint64_t q;
  uint64_t lhs, rhs;
};

struct IdentityVerdict {
  bool equal;
  std::optional<IdentityWitness> witness;
};

/// Schwartz-Zippel style equality of two scalar evaluators: sample generic
/// points over each configured prime; EQUAL only if the values agree at
/// every point, otherwise the first mismatch is returned as a witness.
inline IdentityVerdict check_scalar_identity(
    const WeylGroup& g,
    const std::function<Fp(const SpectralPoint<Fp>&)>& lhs_eval,
    const std::function<Fp(const SpectralPoint<Fp>&)>& rhs_eval,
    const IdentityCheckConfig& cfg = {}) {
  cfg.validate();
  for (size_t pi = 0; pi < cfg.primes.size(); ++pi) {
    for (int k = 0; k < cfg.points_per_prime; ++k) {
      uint64_t s = point_seed(cfg, pi, k);
      SpectralPoint<Fp> z = random_generic_point(g, cfg.primes[pi], s);
      Fp a = lhs_eval(z);
      Fp b = rhs_eval(z);
      if (a != b) {
        IdentityWitness w;
        w.prime = cfg.primes[pi];
        w.point_index = k;
        w.seed = s;
        for (const Fp& x : z.zbar) w.zbar.push_back(x.value());
        w.q = z.q.value();
        w.lhs = a.value();
        w.rhs = b.value();
        return IdentityVerdict{false, w};
      }
    }
  }
  return IdentityVerdict{true, std::nullopt};
}

/// Total-degree bound used in the reported false-EQUAL probability
/// (D/p)^N: any transition-matrix entry is a ratio of polynomials in the
/// z-variables and q of total degree at most 2 l(w0) (1 + max root height).
inline long long identity_degree_bound(const WeylGroup& g) {
  return 2LL * g.length(g.longest_element()) * (1 + g.roots().max_height());
}

}  // namespace casselman
