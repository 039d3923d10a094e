#include "braidlcs/b2t2.hpp"

#include <stdexcept>

namespace braidlcs::b2t2 {

namespace {

void check_letter(std::size_t index) {
  if (index > 2) {
    throw std::invalid_argument("B2(T2) words use generators 0, 1, 2 only");
  }
}

// Central part of x^2 for a generator x.
void add_square(Element& e, Letter x, std::int64_t times) {
  if (x != Beta) e.m += times;
  if (x != Alpha) e.n += times;
}

void push_letter(Element& e, Letter x) {
  if (!e.shadow.empty() && e.shadow.back() == x) {
    e.shadow.pop_back();
    add_square(e, x, 1);
  } else {
    e.shadow.push_back(x);
  }
}

// x^-1 = x * x^-2 with x^-2 central.
void push(Element& e, GeneratorRef g) {
  check_letter(g.index);
  auto x = static_cast<Letter>(g.index);
  push_letter(e, x);
  if (g.sign < 0) add_square(e, x, -1);
}

std::int64_t shadow_count_except(Element const& x, Letter skip) {
  std::int64_t count = 0;
  for (Letter l : x.shadow) count += l != skip;
  return count;
}

std::int64_t length_skipping(Word const& w, std::size_t skip) {
  std::int64_t total = 0;
  for (auto const& l : w) {
    check_letter(l.index);
    if (l.index != skip) total += l.sign;
  }
  return total;
}

}  // namespace

Element to_normal_form(Word const& w) {
  Element e;
  for (auto const& l : w) push(e, l);
  return e;
}

Element multiply(Element const& x, Element const& y) {
  Element e = x;
  for (Letter l : y.shadow) push_letter(e, l);
  e.m += y.m;
  e.n += y.n;
  return e;
}

Element inverse(Element const& x) {
  Element e;
  e.m = -x.m;
  e.n = -x.n;
  for (auto it = x.shadow.rbegin(); it != x.shadow.rend(); ++it) {
    push(e, inv(*it));
  }
  return e;
}

bool is_identity(Element const& x) {
  return x.m == 0 && x.n == 0 && x.shadow.empty();
}

bool is_central(Element const& x) { return x.shadow.empty(); }

std::int64_t length_alpha_hat(Word const& w) { return length_skipping(w, Alpha); }
std::int64_t length_beta_hat(Word const& w) { return length_skipping(w, Beta); }

std::int64_t length_alpha_hat(Element const& x) {
  return 2 * x.n + shadow_count_except(x, Alpha);
}

std::int64_t length_beta_hat(Element const& x) {
  return 2 * x.m + shadow_count_except(x, Beta);
}

Word to_word(Element const& x) {
  Word w;
  for (Letter l : x.shadow) w.push_back(gen(l));
  w *= Word::power(Alpha, 2 * x.m);
  w *= Word::power(Beta, 2 * x.n);
  return w;
}

bool generalized_torsion_witness(Word const& g,
                                 std::vector<Word> const& conjugators) {
  if (conjugators.empty()) {
    throw std::invalid_argument("generalized_torsion_witness needs conjugators");
  }
  if (is_identity(to_normal_form(g))) return false;
  Word product;
  for (auto const& h : conjugators) product *= conjugate(g, h);
  return is_identity(to_normal_form(product));
}

std::string to_string(Element const& x) {
  static char const* const names[] = {"ᾱ", "β̄", "γ̄"};
  std::string s = "(" + std::to_string(x.m) + "," + std::to_string(x.n) + ",";
  if (x.shadow.empty()) s += "ε";
  for (Letter l : x.shadow) s += names[l];
  return s + ")";
}

}  // namespace braidlcs::b2t2
