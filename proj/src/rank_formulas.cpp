#include "braidlcs/rank_formulas.hpp"

#include <gmpxx.h>

#include <sstream>

namespace braidlcs {

namespace {

using Rational = mpq_class;

BigInt to_integer(Rational const& q, std::string const& what) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() != 1) {
    throw NonIntegralRank(what + " evaluated to " + r.get_str());
  }
  return r.get_num();
}

BigInt ipow(long base, std::size_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(e));
  if (base < 0 && e % 2 == 1) out = -out;
  return out;
}

}  // namespace

int mobius(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mobius needs n >= 1");
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt witt_rank(std::size_t k, std::size_t i) {
  if (k == 0 || i == 0) throw std::invalid_argument("witt_rank needs k, i >= 1");
  BigInt sum = 0;
  for (std::size_t d = 1; d <= i; ++d) {
    if (i % d == 0) sum += mobius(d) * ipow(static_cast<long>(k), i / d);
  }
  return to_integer(Rational(sum, BigInt(static_cast<unsigned long>(i))),
                    "witt_rank");
}

BigInt k_alpha_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k_alpha_k needs k >= 1");
  return ipow(2, k) + 2 * ipow(-1, k);
}

BigInt gaglione_R(std::size_t i) {
  if (i < 2) throw std::invalid_argument("gaglione_R needs i >= 2");
  Rational total = 0;
  for (std::size_t j = 1; j + 2 <= i; ++j) {
    std::size_t d = i - j;
    for (std::size_t k = 2; k <= d; ++k) {
      if (d % k != 0) continue;
      total += Rational(mobius(d / k) * k_alpha_k(k),
                        BigInt(static_cast<unsigned long>(d)));
    }
  }
  return to_integer(total, "R_" + std::to_string(i));
}

bool series_check(std::size_t order) {
  if (order == 0) throw std::invalid_argument("series_check needs order >= 1");
  std::size_t n = order + 1;
  // f = (1+x)^2 (1-2x) = 1 - 3x^2 - 2x^3
  std::vector<Rational> f(n, 0);
  f[0] = 1;
  if (n > 2) f[2] = -3;
  if (n > 3) f[3] = -2;
  std::vector<Rational> df(n, 0);
  for (std::size_t k = 1; k < n; ++k) df[k - 1] = f[k] * static_cast<long>(k);
  // q = f'/f by series division, then -ln f = -integral(q)
  std::vector<Rational> q(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = df[k];
    for (std::size_t t = 1; t <= k; ++t) acc -= f[t] * q[k - t];
    q[k] = acc / f[0];
  }
  for (std::size_t k = 1; k <= order; ++k) {
    Rational coeff = -q[k - 1] / static_cast<long>(k);
    Rational scaled = coeff * static_cast<long>(k);
    if (scaled != Rational(k_alpha_k(k))) return false;
  }
  return true;
}

RankTable witt_table(std::size_t k, std::size_t last) {
  RankTable t{"free_group(" + std::to_string(k) + ")", 1, {}};
  for (std::size_t i = 1; i <= last; ++i) t.ranks.push_back(witt_rank(k, i));
  return t;
}

RankTable gaglione_table(std::size_t last) {
  RankTable t{"z2_free_cubed R_i", 2, {}};
  for (std::size_t i = 2; i <= last; ++i) t.ranks.push_back(gaglione_R(i));
  return t;
}

std::string to_string(RankTable const& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.ranks.size(); ++i) {
    out << (t.first_index + i) << ' ' << t.ranks[i].get_str() << '\n';
  }
  return out.str();
}

}  // namespace braidlcs
