#pragma once

#include <cstdint>
#include <vector>

#include "delone/exact/matrix.hpp"

namespace delone {

struct ModularProfile {
  std::uint32_t prime = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // increasing
  std::vector<std::size_t> pivot_rows;  // input row that produced each pivot
};

/// Row-echelon profile of an integer matrix reduced modulo p (p < 2^25).
ModularProfile modular_profile(const IntMatrix& m, std::uint32_t p);

/// Deterministic sequence of primes in [2^24, 2^25).
std::uint32_t modular_prime(std::size_t index);

struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::uint32_t> primes;  // primes whose profiles agreed
  RatMatrix kernel;                   // cols - rank independent rows, exactly verified
  bool exact_fallback = false;        // true when certification fell back to fraction-free elimination
};

/// Rank over Q. The modular rank is a lower bound; it is certified from above
/// by reconstructing cols - rank kernel vectors and verifying them exactly.
RankCertificate certified_rank(const RatMatrix& m);
std::size_t rank_exact(const RatMatrix& m);

/// Rank by fraction-free elimination over Z (slow, exact).
std::size_t bareiss_rank(const IntMatrix& m);

/// n/d with n ≡ a d (mod m), |n|, d <= sqrt(m/2); false if none exists.
bool rational_reconstruction(const Integer& a, const Integer& m, Rational* out);

}  // namespace delone
