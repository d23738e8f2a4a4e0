#include "posdiff/combinatorics.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace posdiff {

Nat factorial(unsigned n) {
  Nat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Nat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Nat multinomial(unsigned k, std::span<const unsigned> parts) {
  unsigned long total = 0;
  for (unsigned p : parts) total += p;
  if (total != k) throw std::invalid_argument("multinomial: parts do not sum to k");
  Nat out = 1;
  unsigned remaining = k;
  for (unsigned p : parts) {
    out *= binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

namespace {

using Row = std::vector<Nat>;
using Triangle = std::vector<Row>;

// Row j holds entries for 0..j.
Row next_stirling2_row(const Row& prev) {
  const auto j = static_cast<unsigned>(prev.size());
  Row row(j + 1, Nat(0));
  for (unsigned n = 1; n <= j; ++n) {
    const Nat same = n < prev.size() ? prev[n] : Nat(0);
    row[n] = n * same + prev[n - 1];
  }
  return row;
}

Row next_stirling1_row(const Row& prev) {
  const auto j = static_cast<unsigned>(prev.size());
  Row row(j + 1, Nat(0));
  for (unsigned k = 1; k <= j; ++k) {
    const Nat same = k < prev.size() ? prev[k] : Nat(0);
    row[k] = prev[k - 1] + (j - 1) * same;
  }
  return row;
}

class StirlingCache {
 public:
  Nat lookup(bool first_kind, unsigned j, unsigned k) {
    if (k > j) return 0;
    std::lock_guard lock(mutex_);
    if (j > cap_) return compute(first_kind, j, k);
    Triangle& table = first_kind ? first_ : second_;
    if (table.empty()) table.push_back(Row{Nat(1)});
    while (table.size() <= j) {
      table.push_back(first_kind ? next_stirling1_row(table.back())
                                 : next_stirling2_row(table.back()));
    }
    return table[j][k];
  }

  void set_cap(unsigned cap) {
    std::lock_guard lock(mutex_);
    cap_ = cap;
    first_.clear();
    second_.clear();
  }

  unsigned cap() {
    std::lock_guard lock(mutex_);
    return cap_;
  }

 private:
  static Nat compute(bool first_kind, unsigned j, unsigned k) {
    Row row{Nat(1)};
    for (unsigned i = 1; i <= j; ++i) {
      row = first_kind ? next_stirling1_row(row) : next_stirling2_row(row);
    }
    return row[k];
  }

  std::mutex mutex_;
  unsigned cap_ = kDefaultStirlingCacheCap;
  Triangle first_;
  Triangle second_;
};

StirlingCache& cache() {
  static StirlingCache instance;
  return instance;
}

}  // namespace

Nat stirling2(unsigned j, unsigned n) { return cache().lookup(false, j, n); }

Nat stirling1_unsigned(unsigned j, unsigned k) { return cache().lookup(true, j, k); }

Nat stirling2_alternating_sum(unsigned j, unsigned n) {
  Nat sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    Nat power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, j);  // GMP gives 0^0 = 1
    const Nat term = binomial(n, i) * power;
    if ((n - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Nat out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), factorial(n).get_mpz_t());
  return out;
}

Rat falling_factorial(const Rat& x, unsigned j) {
  Rat out = 1;
  for (unsigned i = 0; i < j; ++i) out *= x - i;
  return out;
}

void set_stirling_cache_cap(unsigned cap) { cache().set_cap(cap); }

unsigned stirling_cache_cap() { return cache().cap(); }

}  // namespace posdiff
