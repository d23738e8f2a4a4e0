#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posdiff {

// mpq_class keeps its value canonical (gcd-reduced, positive denominator)
// under arithmetic; values built from raw parts go through make_rat.
using Rat = mpq_class;
using Nat = mpz_class;

// A point, increment or codomain value: one exact rational per coordinate.
using Vec = std::vector<Rat>;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Nat& num, const Nat& den);

// Accepts "a" or "a/b" with optional leading '-'; throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(std::span<const Rat> v);

Rat pow(const Rat& base, unsigned exponent);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Vec vec_add(std::span<const Rat> a, std::span<const Rat> b);
Vec vec_sub(std::span<const Rat> a, std::span<const Rat> b);
Vec vec_scale(std::span<const Rat> a, const Rat& c);
// acc += c * v
void vec_axpy(Vec& acc, const Rat& c, std::span<const Rat> v);

bool is_zero(std::span<const Rat> v);
bool is_nonneg(std::span<const Rat> v);

// Lexicographic order on equal-length vectors, used to sort witnesses.
bool vec_less(std::span<const Rat> a, std::span<const Rat> b);

// Parses a comma separated list of rationals, e.g. "1,-2,3/4".
Vec parse_vec(std::string_view text);

}  // namespace posdiff
