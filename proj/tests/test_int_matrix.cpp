#include <numeric>
#include <random>

#include "braidlcs/int_matrix.hpp"
#include "doctest.h"

using namespace braidlcs;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Laplace expansion along the first row.
BigInt cofactor_det(IntMatrix const& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    BigInt term = m(0, j) * cofactor_det(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
BigInt minors_gcd(IntMatrix const& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  BigInt g = 0;
  for (auto const& r : rs)
    for (auto const& c : cs) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_det(sub).get_mpz_t());
    }
  return g;
}

bool unimodular(IntMatrix const& u) { return abs(determinant(u)) == 1; }

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 5;
    auto m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == cofactor_det(m));
  }
  CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
}

TEST_CASE("Hermite form: U A = H, U unimodular, echelon with reduced columns") {
  std::mt19937 rng(12);
  for (int t = 0; t < 150; ++t) {
    auto a = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5, 6);
    auto [h, u] = hermite_normal_form(a);
    CHECK(u * a == h);
    CHECK(unimodular(u));
    std::size_t last = 0;
    bool seen = false;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      std::size_t c = 0;
      while (c < h.cols() && h(r, c) == 0) ++c;
      if (c == h.cols()) {
        for (std::size_t r2 = r; r2 < h.rows(); ++r2)
          for (std::size_t c2 = 0; c2 < h.cols(); ++c2) CHECK(h(r2, c2) == 0);
        break;
      }
      if (seen) CHECK(c > last);
      CHECK(h(r, c) > 0);
      for (std::size_t r2 = 0; r2 < r; ++r2) {
        CHECK(h(r2, c) >= 0);
        CHECK(h(r2, c) < h(r, c));
      }
      last = c;
      seen = true;
    }
  }
}

TEST_CASE("Smith form: invariant factors are quotients of minor gcds") {
  std::mt19937 rng(13);
  for (int t = 0; t < 120; ++t) {
    auto a = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, 5);
    auto [s, u, v] = smith_normal_form(a);
    CHECK(u * a * v == s);
    CHECK(unimodular(u));
    CHECK(unimodular(v));
    BigInt prefix = 1;
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < s.cols(); ++j)
        if (j != k) CHECK(s(k, j) == 0);
      CHECK(s(k, k) >= 0);
      if (k + 1 < n && s(k, k) != 0) CHECK(s(k + 1, k + 1) % s(k, k) == 0);
      prefix *= s(k, k);
      CHECK(prefix == minors_gcd(a, k + 1));
    }
  }
}

TEST_CASE("cokernel invariants and rendering") {
  CHECK(to_string(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}})) == "Z/6");
  CHECK(to_string(cokernel_invariants(IntMatrix{{2, 0, 0}, {0, 4, 0}})) == "Z + Z/2 + Z/4");
  CHECK(to_string(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}})) == "0");
  CHECK(to_string(cokernel_invariants(IntMatrix(0, 3))) == "Z^3");
  AbelianInvariants a = cokernel_invariants(IntMatrix{{2}});
  AbelianInvariants b = cokernel_invariants(IntMatrix{{3, 0}});
  CHECK(to_string(direct_sum(a, b)) == "Z + Z/6");
}

TEST_CASE("abelian invariants of a presentation") {
  auto p = parse_presentation("gens: a b\nrels: a^4 b^-2; [a,b]\n");
  CHECK(to_string(abelian_invariants(p)) == "Z + Z/2");
  CHECK(relation_matrix(p) == IntMatrix{{4, -2}, {0, 0}});
}

TEST_CASE("incremental echelon lattice matches the Hermite form") {
  std::mt19937 rng(14);
  for (int t = 0; t < 100; ++t) {
    std::size_t rows = 1 + t % 6, cols = 1 + (t / 6) % 5;
    auto a = random_matrix(rng, rows, cols, 7);
    EchelonLattice lat(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<BigInt> v(cols);
      for (std::size_t c = 0; c < cols; ++c) v[c] = a(r, c);
      lat.add(v);
    }
    lat.finalize();
    auto h = hermite_normal_form(a).H;
    auto m = lat.to_matrix();
    REQUIRE(m.rows() == lat.rank());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) CHECK(m(r, c) == h(r, c));
    for (std::size_t r = m.rows(); r < h.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) CHECK(h(r, c) == 0);
    CHECK(cokernel_invariants(m) == cokernel_invariants(a));
  }
}
