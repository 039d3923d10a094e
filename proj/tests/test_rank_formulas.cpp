#include <gmpxx.h>

#include "braidlcs/rank_formulas.hpp"
#include "doctest.h"

using namespace braidlcs;

namespace {

// Moebius via explicit factorization.
int mobius_oracle(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; n > 1; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 1) return 0;
    if (e == 1) primes.push_back(p);
  }
  return primes.size() % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("Moebius function") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  for (std::size_t n = 1; n <= 500; ++n) CHECK(mobius(n) == mobius_oracle(n));
  CHECK_THROWS(mobius(0));
}

TEST_CASE("Witt ranks") {
  CHECK(witt_rank(2, 1) == 2);
  CHECK(witt_rank(2, 2) == 1);
  CHECK(witt_rank(3, 3) == 8);
  // necklace identity: sum_{d | i} d W(k, d) = k^i
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t i = 1; i <= 8; ++i) {
      BigInt sum = 0;
      for (std::size_t d = 1; d <= i; ++d)
        if (i % d == 0) sum += BigInt(static_cast<unsigned long>(d)) * witt_rank(k, d);
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), k, i);
      CHECK(sum == power);
    }
  }
}

TEST_CASE("k alpha_k") {
  CHECK(k_alpha_k(1) == 0);
  CHECK(k_alpha_k(2) == 6);
  CHECK(k_alpha_k(3) == 6);
  CHECK(k_alpha_k(4) == 18);
  CHECK(k_alpha_k(70) > 0);
}

TEST_CASE("R_i as printed") {
  CHECK(gaglione_R(2) == 0);
  CHECK(gaglione_R(3) == 3);
  CHECK(gaglione_R(4) == 5);
  CHECK(gaglione_R(5) == 8);
  CHECK(gaglione_R(6) == 14);
  CHECK(gaglione_R(7) == 23);
  for (std::size_t i = 2; i <= 64; ++i) CHECK_NOTHROW(gaglione_R(i));
  CHECK_THROWS(gaglione_R(1));
}

TEST_CASE("R_i increments are necklace-like counts") {
  // R_{i+1} - R_i = (1/i) sum_{k | i, k > 1} mu(i/k) k alpha_k, recomputed
  // here with integer division after checking divisibility.
  for (std::size_t i = 2; i <= 40; ++i) {
    BigInt num = 0;
    for (std::size_t k = 2; k <= i; ++k)
      if (i % k == 0) num += mobius(i / k) * k_alpha_k(k);
    BigInt den(static_cast<unsigned long>(i));
    CHECK(num % den == 0);
    CHECK(gaglione_R(i + 1) - gaglione_R(i) == num / den);
  }
}

TEST_CASE("series identity") {
  CHECK(series_check(1));
  CHECK(series_check(4));
  CHECK(series_check(10));
  CHECK(series_check(12));
  CHECK(series_check(40));
}

TEST_CASE("rank tables") {
  auto t = gaglione_table(6);
  CHECK(to_string(t) == "2 0\n3 3\n4 5\n5 8\n6 14\n");
  CHECK(to_string(witt_table(2, 3)) == "1 2\n2 1\n3 2\n");
}
