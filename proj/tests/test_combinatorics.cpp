#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "posdiff/combinatorics.hpp"

using namespace posdiff;

TEST_CASE("binomial and factorial") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::binom(n, k));
}

TEST_CASE("multinomial") {
  const unsigned a[] = {3};
  const unsigned b[] = {1, 1, 1};
  const unsigned c[] = {2, 1, 1};
  const unsigned bad[] = {1, 1};
  CHECK(multinomial(3, a) == 1);
  CHECK(multinomial(3, b) == 6);
  CHECK(multinomial(4, c) == 12);
  CHECK_THROWS_AS(multinomial(3, bad), std::invalid_argument);
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(2, 3) == 0);
  for (unsigned k = 0; k <= 6; ++k) CHECK(stirling2(k, k) == 1);
  for (unsigned j = 0; j <= 8; ++j)
    for (unsigned n = 0; n <= 9; ++n) {
      CAPTURE(j);
      CAPTURE(n);
      CHECK(stirling2(j, n) == oracle::set_partitions(j, n));
      CHECK(stirling2_alternating_sum(j, n) == stirling2(j, n));
    }
}

TEST_CASE("recurrence and alternating sum agree beyond the memo") {
  for (unsigned j = 30; j <= 40; ++j)
    for (unsigned n = 0; n <= j; n += 3) CHECK(stirling2(j, n) == stirling2_alternating_sum(j, n));
}

TEST_CASE("unsigned stirling numbers of the first kind") {
  CHECK(stirling1_unsigned(3, 2) == 3);
  CHECK(stirling1_unsigned(4, 2) == 11);
  for (unsigned j = 0; j <= 6; ++j) CHECK(stirling1_unsigned(j, j) == 1);
  for (unsigned j = 1; j <= 7; ++j)
    for (unsigned k = 0; k <= j; ++k) CHECK(stirling1_unsigned(j, k) == oracle::permutations_with_cycles(j, k));
}

TEST_CASE("falling factorial expands through signed first-kind numbers") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(make_rat(1, 2), 2) == make_rat(-1, 4));
  for (unsigned j = 0; j <= 7; ++j)
    for (long n = -3; n <= 9; ++n) {
      Rat sum = 0;
      for (unsigned k = 0; k <= j; ++k) {
        const Rat term = Rat(stirling1_unsigned(j, k)) * pow(Rat(n), k);
        sum += (j - k) % 2 ? -term : term;
      }
      CHECK(sum == falling_factorial(Rat(n), j));
    }
}

TEST_CASE("stirling inversion: second kind times signed first kind is the identity") {
  for (unsigned j = 0; j <= 8; ++j)
    for (unsigned k = 0; k <= j; ++k) {
      Nat s = 0;
      for (unsigned i = k; i <= j; ++i) {
        const Nat t = stirling2(j, i) * stirling1_unsigned(i, k);
        s += (i - k) % 2 ? Nat(-t) : t;
      }
      CHECK(s == (j == k ? 1 : 0));
    }
}

TEST_CASE("cache cap changes do not change values and are thread safe") {
  const unsigned old = stirling_cache_cap();
  set_stirling_cache_cap(4);
  CHECK(stirling_cache_cap() == 4);
  CHECK(stirling2(10, 3) == oracle::set_partitions(10, 3));
  std::vector<std::thread> pool;
  std::vector<Nat> out(8);
  for (unsigned t = 0; t < 8; ++t) pool.emplace_back([&, t] { out[t] = stirling2(20 + t, 5); });
  for (auto& th : pool) th.join();
  set_stirling_cache_cap(old);
  for (unsigned t = 0; t < 8; ++t) CHECK(out[t] == stirling2_alternating_sum(20 + t, 5));
}

TEST_CASE("rational helpers") {
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(to_string(make_rat(4, -6)) == "-2/3");
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  const Vec v = parse_vec("1,-2,3/4");
  CHECK(to_string(v) == "(1, -2, 3/4)");
  CHECK(is_nonneg(parse_vec("0,1/2")));
  CHECK_FALSE(is_nonneg(v));
}
