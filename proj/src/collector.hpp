#pragma once

// Collection from the left in a weighted nilpotent presentation whose
// relations may carry central tails. Used by the engine while it builds the
// next class (tails are the unknowns) and, with no tails, for finished tables.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace braidlcs::detail {

using Exp = std::int64_t;
using Sparse = std::vector<std::pair<std::size_t, Exp>>;

/// A relation right-hand side: a normal word followed by a central tail.
struct Rule {
  Sparse word;
  Sparse tail;
};

/// An element in collected form: exponents on pc generators, plus the
/// accumulated central tail vector.
struct Element {
  std::vector<Exp> exp;
  std::vector<Exp> tail;

  Sparse word() const;
};

class Collector {
 public:
  /// orders[i] == 0 marks an infinite generator.
  Collector(std::vector<Exp> orders, std::size_t tail_dim);

  std::size_t size() const { return orders_.size(); }
  std::size_t tail_dim() const { return tail_dim_; }
  Exp order(std::size_t i) const { return orders_[i]; }

  /// g_i^{order(i)} = rhs, rhs over generators > i.
  void set_power(std::size_t i, Rule rhs);
  /// g_j^{g_i} = g_j * rest for i < j, rest over generators > j.
  void set_conjugate(std::size_t j, std::size_t i, Rule rest);

  /// Derives g_j^{g_i^-1} for all i < j. Call after all relations are set.
  void compute_inverse_conjugates();

  Element identity() const;
  Element unit(std::size_t i, Exp e = 1) const;

  void mul_gen(Element& x, std::size_t i, int sign) const;
  void mul_gen_pow(Element& x, std::size_t i, Exp e) const;
  /// x *= rule^e
  void mul_rule(Element& x, Rule const& r, Exp e) const;
  void mul_element(Element& x, Element const& y) const;

  Rule const& power(std::size_t i) const { return powers_[i]; }
  Rule conjugate(std::size_t j, std::size_t i, int sign) const;

  static Rule to_rule(Element const& x);

 private:
  bool commutes(std::size_t j, std::size_t i) const {
    return commute_[j][i];
  }
  void tick() const;

  std::vector<Exp> orders_;
  std::size_t tail_dim_;
  std::vector<Rule> powers_;
  // [j][i] for i < j: the part of g_j^{g_i^{+-1}} after the leading g_j.
  std::vector<std::vector<Rule>> conj_pos_;
  std::vector<std::vector<Rule>> conj_neg_;
  std::vector<std::vector<char>> commute_;
  mutable std::uint64_t steps_ = 0;
};

}  // namespace braidlcs::detail
