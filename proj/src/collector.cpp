#include "collector.hpp"

#include <string>

#include "braidlcs/nq.hpp"

namespace braidlcs::detail {

namespace {

// Collection on a consistent nilpotent table always terminates; this bound
// only trips on a bug or a hostile table.
constexpr std::uint64_t kStepBound = 4'000'000'000ULL;

Exp checked_add(Exp a, Exp b) {
  Exp out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ResourceLimitExceeded("exponent overflow during collection");
  }
  return out;
}

Exp floor_div(Exp a, Exp b) {
  Exp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Sparse Element::word() const {
  Sparse out;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] != 0) out.emplace_back(i, exp[i]);
  }
  return out;
}

Collector::Collector(std::vector<Exp> orders, std::size_t tail_dim)
    : orders_(std::move(orders)), tail_dim_(tail_dim) {
  std::size_t n = orders_.size();
  powers_.resize(n);
  conj_pos_.resize(n);
  conj_neg_.resize(n);
  commute_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    conj_pos_[j].resize(j);
    conj_neg_[j].resize(j);
    commute_[j].assign(j, 1);
    for (std::size_t i = 0; i < j; ++i) {
      conj_pos_[j][i].word = {{j, 1}};
      conj_neg_[j][i].word = {{j, 1}};
    }
  }
}

void Collector::set_power(std::size_t i, Rule rhs) {
  powers_[i] = std::move(rhs);
}

void Collector::set_conjugate(std::size_t j, std::size_t i, Rule rest) {
  Rule full;
  full.word.reserve(rest.word.size() + 1);
  full.word.emplace_back(j, 1);
  for (auto const& t : rest.word) {
    if (t.first <= j) {
      throw InternalInconsistency("conjugate of g" + std::to_string(j) +
                                  " mentions an earlier generator");
    }
    full.word.push_back(t);
  }
  full.tail = std::move(rest.tail);
  commute_[j][i] = full.word.size() == 1 && full.tail.empty();
  conj_pos_[j][i] = std::move(full);
  conj_neg_[j][i] = conj_pos_[j][i];
}

Rule Collector::conjugate(std::size_t j, std::size_t i, int sign) const {
  return sign > 0 ? conj_pos_[j][i] : conj_neg_[j][i];
}

void Collector::compute_inverse_conjugates() {
  std::size_t n = size();
  // Conjugation by g_i is an automorphism of <g_{i+1}, ...>; invert it from
  // the top generator down, so each step only needs already-known images.
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = n; k-- > i + 1;) {
      if (commute_[k][i]) {
        conj_neg_[k][i] = conj_pos_[k][i];
        continue;
      }
      Rule const& fwd = conj_pos_[k][i];
      Element x = unit(k);
      for (std::size_t t = fwd.word.size(); t-- > 1;) {
        auto [l, e] = fwd.word[t];
        mul_rule(x, conj_neg_[l][i], -e);
      }
      for (auto const& [c, v] : fwd.tail) x.tail[c] = checked_add(x.tail[c], -v);
      conj_neg_[k][i] = to_rule(x);
    }
  }
}

Element Collector::identity() const {
  return Element{std::vector<Exp>(size(), 0), std::vector<Exp>(tail_dim_, 0)};
}

Element Collector::unit(std::size_t i, Exp e) const {
  Element x = identity();
  mul_gen_pow(x, i, e);
  return x;
}

Rule Collector::to_rule(Element const& x) {
  Rule r;
  r.word = x.word();
  for (std::size_t c = 0; c < x.tail.size(); ++c) {
    if (x.tail[c] != 0) r.tail.emplace_back(c, x.tail[c]);
  }
  return r;
}

void Collector::tick() const {
  if (++steps_ > kStepBound) {
    throw InternalInconsistency("collection step bound exceeded");
  }
}

void Collector::mul_rule(Element& x, Rule const& r, Exp e) const {
  if (e > 0) {
    for (Exp rep = 0; rep < e; ++rep) {
      for (auto const& [g, f] : r.word) mul_gen_pow(x, g, f);
      for (auto const& [c, v] : r.tail) x.tail[c] = checked_add(x.tail[c], v);
    }
  } else {
    for (Exp rep = 0; rep < -e; ++rep) {
      for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) {
        mul_gen_pow(x, it->first, -it->second);
      }
      for (auto const& [c, v] : r.tail) x.tail[c] = checked_add(x.tail[c], -v);
    }
  }
}

void Collector::mul_element(Element& x, Element const& y) const {
  for (std::size_t g = 0; g < y.exp.size(); ++g) {
    if (y.exp[g] != 0) mul_gen_pow(x, g, y.exp[g]);
  }
  for (std::size_t c = 0; c < y.tail.size(); ++c) {
    if (y.tail[c] != 0) x.tail[c] = checked_add(x.tail[c], y.tail[c]);
  }
}

void Collector::mul_gen_pow(Element& x, std::size_t k, Exp e) const {
  if (e == 0) return;
  std::size_t n = size();
  bool fast = true;
  for (std::size_t j = k + 1; j < n; ++j) {
    if (x.exp[j] != 0 && !commutes(j, k)) {
      fast = false;
      break;
    }
  }
  if (!fast) {
    int sign = e > 0 ? 1 : -1;
    for (Exp rep = 0; rep < (e > 0 ? e : -e); ++rep) mul_gen(x, k, sign);
    return;
  }
  tick();
  Exp m = orders_[k];
  Exp v = checked_add(x.exp[k], e);
  if (m == 0 || (v >= 0 && v < m)) {
    x.exp[k] = v;
    return;
  }
  // The suffix commutes with g_k:  A g_k^v S = A g_k^r (g_k^m)^q S.
  Exp q = floor_div(v, m);
  Sparse suffix;
  for (std::size_t j = k + 1; j < n; ++j) {
    if (x.exp[j] != 0) {
      suffix.emplace_back(j, x.exp[j]);
      x.exp[j] = 0;
    }
  }
  x.exp[k] = v - q * m;
  mul_rule(x, powers_[k], q);
  for (auto const& [j, f] : suffix) mul_gen_pow(x, j, f);
}

void Collector::mul_gen(Element& x, std::size_t i, int sign) const {
  tick();
  std::size_t n = size();
  // x = A g_i^a B  ->  A g_i^(a+sign) B^(g_i^sign)
  Sparse suffix;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (x.exp[j] != 0) {
      suffix.emplace_back(j, x.exp[j]);
      x.exp[j] = 0;
    }
  }
  Exp m = orders_[i];
  Exp v = checked_add(x.exp[i], sign);
  if (m != 0 && v == m) {
    x.exp[i] = 0;
    mul_rule(x, powers_[i], 1);
  } else if (m != 0 && v == -1) {
    x.exp[i] = m - 1;
    mul_rule(x, powers_[i], -1);
  } else {
    x.exp[i] = v;
  }
  auto const& conj = sign > 0 ? conj_pos_ : conj_neg_;
  for (auto const& [j, f] : suffix) {
    if (commutes(j, i)) {
      mul_gen_pow(x, j, f);
    } else {
      mul_rule(x, conj[j][i], f);
    }
  }
}

}  // namespace braidlcs::detail
