#pragma once

#include <span>

#include "posdiff/rat.hpp"

namespace posdiff {

Nat factorial(unsigned n);

// Zero when k > n.
Nat binomial(unsigned n, unsigned k);

// k! / prod(parts!); throws std::invalid_argument unless the parts sum to k.
Nat multinomial(unsigned k, std::span<const unsigned> parts);

/// Stirling numbers of the second kind from the triangle recurrence
/// S(j,n) = n S(j-1,n) + S(j-1,n-1), S(0,0) = 1. Rows up to the cache cap are
/// memoized; larger arguments are computed per call.
Nat stirling2(unsigned j, unsigned n);

/// The same numbers from the alternating sum (1/n!) sum_i (-1)^(n-i) C(n,i) i^j
/// with 0^0 = 1. Kept separate from the recurrence so the two can be checked
/// against each other.
Nat stirling2_alternating_sum(unsigned j, unsigned n);

/// Unsigned Stirling numbers of the first kind c(j,k), the coefficients in
/// n(n-1)...(n-j+1) = sum_k (-1)^(j-k) c(j,k) n^k.
Nat stirling1_unsigned(unsigned j, unsigned k);

// x(x-1)...(x-j+1); 1 when j = 0.
Rat falling_factorial(const Rat& x, unsigned j);

inline constexpr unsigned kDefaultStirlingCacheCap = 32;

// Changes the memo cap and drops cached rows. Safe to call concurrently.
void set_stirling_cache_cap(unsigned cap);
unsigned stirling_cache_cap();

}  // namespace posdiff
