#include "posdiff/rat.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace posdiff {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(const Nat& num, const Nat& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Nat n(std::string(num), 10);
  Nat d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (negative) n = -n;
  return make_rat(n, d);
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

Rat pow(const Rat& base, unsigned exponent) {
  Nat num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  return Rat(num, den);
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

namespace {
void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vector length mismatch");
}
}  // namespace

Vec vec_add(std::span<const Rat> a, std::span<const Rat> b) {
  require_same(a.size(), b.size());
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(std::span<const Rat> a, std::span<const Rat> b) {
  require_same(a.size(), b.size());
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(std::span<const Rat> a, const Rat& c) {
  Vec out(a.begin(), a.end());
  for (auto& q : out) q *= c;
  return out;
}

void vec_axpy(Vec& acc, const Rat& c, std::span<const Rat> v) {
  require_same(acc.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return sgn(q) == 0; });
}

bool is_nonneg(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return sgn(q) >= 0; });
}

bool vec_less(std::span<const Rat> a, std::span<const Rat> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vec parse_vec(std::string_view text) {
  Vec out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    out.push_back(parse_rat(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace posdiff
