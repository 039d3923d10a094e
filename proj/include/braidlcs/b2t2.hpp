#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlcs/word.hpp"

namespace braidlcs::b2t2 {

/// Letters of the shadow in Z2 * Z2 * Z2, and generator indices of words over
/// alpha, beta, gamma.
enum Letter : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

/// lift(shadow) * alpha^{2m} beta^{2n}, where lift replaces each barred
/// letter by its unbarred generator. Shadows never repeat a letter twice in
/// a row, so the pair is a unique normal form.
struct Element {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<Letter> shadow;

  friend bool operator==(Element const&, Element const&) = default;
};

/// Normal form of a word in alpha, beta, gamma (generator indices 0, 1, 2).
Element to_normal_form(Word const& w);

Element multiply(Element const& x, Element const& y);
Element inverse(Element const& x);
bool is_identity(Element const& x);
/// The centre is generated by alpha^2 and beta^2: exactly the empty shadows.
bool is_central(Element const& x);

/// Length functions: alpha -> 0, beta -> 1, gamma -> 1 and symmetrically.
std::int64_t length_alpha_hat(Word const& w);
std::int64_t length_beta_hat(Word const& w);
std::int64_t length_alpha_hat(Element const& x);
std::int64_t length_beta_hat(Element const& x);

/// Word spelling out a normal form.
Word to_word(Element const& x);

/// True iff g != 1 and (h_1^-1 g h_1)(h_2^-1 g h_2)...(h_k^-1 g h_k) = 1.
bool generalized_torsion_witness(Word const& g,
                                 std::vector<Word> const& conjugators);

/// "(m,n,shadow)"; the shadow is spelled with barred Greek letters, or
/// epsilon when empty.
std::string to_string(Element const& x);

}  // namespace braidlcs::b2t2
