#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidlcs/word.hpp"

namespace braidlcs {

/// A finite presentation <generators | relators>. Each relator r asserts r = 1.
///
/// Generator symbols are pairwise distinct and every relator references only
/// valid generator indices; both are checked on construction. Relators are
/// stored freely reduced.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generators,
               std::vector<Word> relators = {});

  std::string const& name() const { return name_; }
  std::vector<std::string> const& generators() const { return generators_; }
  std::vector<Word> const& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<std::size_t> find(std::string_view symbol) const;

  /// Adds r (reduced); relations u = v are added as u v^-1.
  void add_relator(Word const& r);
  void add_relation(Word const& lhs, Word const& rhs);

  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  void check_word(Word const& w) const;

  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Raised by parse_presentation and parse_word with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the text format:
///
///     gens: a b c          # whitespace separated ASCII identifiers
///     rels: [a,b]; a^2 = c
///     b c B C
///
/// A relator is a product of terms; a term is `sym`, `sym^k`, `[u,v]`,
/// `(u)` or `(u)^k`, and `1` is the identity. `u = v` is stored as u v^-1.
/// When every generator is a single lowercase letter, the uppercase letter
/// denotes the inverse, and runs such as `abAB` split into letters.
Presentation parse_presentation(std::string_view text);

/// Parses a single word over the generators of p, using the relator syntax.
Word parse_word(std::string_view text, Presentation const& p);

/// Emits p in the text format; parse_presentation(to_text(p)) == p up to name.
std::string to_text(Presentation const& p);

/// A homomorphism from a presentation to Z or to another presented group.
class Homomorphism {
 public:
  /// Integer-valued homomorphism. Throws std::invalid_argument when a source
  /// relator does not map to 0.
  Homomorphism(Presentation source, std::vector<std::int64_t> images);

  /// Homomorphism into a presented group. Relator images that do not freely
  /// reduce to the identity are kept as obligations.
  Homomorphism(Presentation source, Presentation target,
               std::vector<Word> images);

  Presentation const& source() const { return source_; }
  bool targets_integers() const { return !target_.has_value(); }
  Presentation const& target() const { return target_.value(); }

  /// Images of source relators that are not freely trivial in the target.
  std::vector<Word> const& obligations() const { return obligations_; }

  std::variant<std::int64_t, Word> evaluate(Word const& w) const;

 private:
  Presentation source_;
  std::optional<Presentation> target_;
  std::vector<std::int64_t> int_images_;
  std::vector<Word> word_images_;
  std::vector<Word> obligations_;
};

std::variant<std::int64_t, Word> evaluate_hom(Homomorphism const& h,
                                              Word const& w);

}  // namespace braidlcs
