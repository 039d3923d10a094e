#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace braidlcs {

/// A signed reference to a generator of some presentation.
struct GeneratorRef {
  std::size_t index = 0;
  int sign = 1;  // +1 or -1

  GeneratorRef inverse() const { return {index, -sign}; }
  friend bool operator==(GeneratorRef const&, GeneratorRef const&) = default;
  friend auto operator<=>(GeneratorRef const&, GeneratorRef const&) = default;
};

/// A word in the free group: a flat sequence of signed generator references.
///
/// Words are not implicitly reduced. Use free_reduce() when a canonical
/// representative is needed.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<GeneratorRef> letters) : letters_(letters) {}
  explicit Word(std::vector<GeneratorRef> letters)
      : letters_(std::move(letters)) {}

  /// The word g^e (|e| copies of g or its inverse).
  static Word power(std::size_t gen, std::int64_t exponent);

  std::vector<GeneratorRef> const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  GeneratorRef const& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(GeneratorRef g) { letters_.push_back(g); }
  Word& operator*=(Word const& other);

  /// Largest generator index referenced plus one (0 for the empty word).
  std::size_t generator_bound() const;

  friend Word operator*(Word lhs, Word const& rhs) { return lhs *= rhs; }
  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<GeneratorRef> letters_;
};

/// Convenience constructors for single letters.
inline GeneratorRef gen(std::size_t i) { return {i, 1}; }
inline GeneratorRef inv(std::size_t i) { return {i, -1}; }

Word free_reduce(Word const& w);
Word inverse(Word const& w);
Word pow(Word const& w, std::int64_t exponent);

/// [u, v] = u v u^-1 v^-1, freely reduced.
///
/// This is the convention under which the surface relation
/// prod [a_i^-1, b_i] = sigma_1 ... sigma_{n-1}^2 ... sigma_1 yields
/// [b_i, a_i] = sigma^-2 in the class-2 quotient. The opposite convention
/// silently changes every relator built from commutators.
Word commutator(Word const& u, Word const& v);

/// Conjugate u^-1 w u, freely reduced.
Word conjugate(Word const& w, Word const& u);

/// Exponent sum of generator `index` in w.
std::int64_t exponent_sum(Word const& w, std::size_t index);

/// Renders w using the given generator symbols, e.g. "a b^-1 a^2".
/// The empty word renders as "1".
std::string to_string(Word const& w, std::vector<std::string> const& symbols);

}  // namespace braidlcs
