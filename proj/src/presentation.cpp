#include "braidlcs/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace braidlcs {

Presentation::Presentation(std::string name, std::vector<std::string> generators,
                           std::vector<Word> relators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (auto const& s : generators_) {
    if (s.empty()) throw std::invalid_argument("empty generator symbol");
    if (!seen.insert(s).second) {
      throw std::invalid_argument("duplicate generator symbol '" + s + "'");
    }
  }
  for (auto const& r : relators) add_relator(r);
}

std::optional<std::size_t> Presentation::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == symbol) return i;
  }
  return std::nullopt;
}

void Presentation::check_word(Word const& w) const {
  if (w.generator_bound() > generators_.size()) {
    throw std::out_of_range("relator references a generator index beyond " +
                            std::to_string(generators_.size()));
  }
}

void Presentation::add_relator(Word const& r) {
  check_word(r);
  relators_.push_back(free_reduce(r));
}

void Presentation::add_relation(Word const& lhs, Word const& rhs) {
  add_relator(lhs * inverse(rhs));
}

ParseError::ParseError(std::string const& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    skip_blank_lines();
    expect_keyword("gens:");
    std::vector<std::string> symbols;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    skip_spaces();
    while (!at_end() && peek() != '\n') {
      if (!ident_start(peek())) fail("expected generator symbol");
      where.emplace_back(line_, col_);
      symbols.push_back(identifier());
      skip_spaces();
    }
    if (symbols.empty()) fail("empty generator list");
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols[i] == symbols[j]) {
          throw ParseError("duplicate generator symbol '" + symbols[i] + "'",
                           where[i].first, where[i].second);
        }
      }
    }
    Presentation p("", symbols);
    gens_ = &p;
    single_letter_ = std::all_of(symbols.begin(), symbols.end(), [](auto& s) {
      return s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]));
    });

    skip_blank_lines();
    if (at_end()) return p;
    expect_keyword("rels:");
    while (true) {
      skip_spaces();
      if (at_end()) break;
      char c = peek();
      if (c == '\n' || c == ';') {
        advance();
        continue;
      }
      p.add_relator(relation());
      skip_spaces();
      if (!at_end() && peek() != '\n' && peek() != ';') {
        fail("unexpected character '" + std::string(1, peek()) + "'");
      }
    }
    return p;
  }

  Word single_word(Presentation const& p) {
    gens_ = &p;
    single_letter_ = std::all_of(
        p.generators().begin(), p.generators().end(), [](auto& s) {
          return s.size() == 1 &&
                 std::islower(static_cast<unsigned char>(s[0]));
        });
    skip_spaces();
    Word w = relation();
    skip_spaces();
    if (!at_end()) fail("trailing input");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what, line_, col_);
  }

  // Skips spaces, tabs, carriage returns and comments, stopping at newline.
  void skip_spaces() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_blank_lines() {
    while (true) {
      skip_spaces();
      if (!at_end() && peek() == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  void expect_keyword(std::string_view kw) {
    if (text_.substr(pos_, kw.size()) != kw) {
      fail("expected '" + std::string(kw) + "'");
    }
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
  }

  std::string identifier() {
    std::string s;
    while (!at_end() && ident_char(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  std::int64_t integer() {
    skip_spaces();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
      skip_spaces();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected integer exponent");
    }
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large");
      advance();
    }
    return negative ? -v : v;
  }

  Word maybe_power(Word base) {
    skip_spaces();
    if (peek() != '^') return base;
    advance();
    return pow(base, integer());
  }

  Word symbol_term() {
    std::size_t line = line_, col = col_;
    std::string s = identifier();
    if (auto idx = gens_->find(s)) {
      return maybe_power(Word{gen(*idx)});
    }
    if (!single_letter_) {
      throw ParseError("unknown generator symbol '" + s + "'", line, col);
    }
    // Single-letter mode: split into letters, uppercase meaning inverse.
    Word w;
    for (std::size_t k = 0; k < s.size(); ++k) {
      char c = s[k];
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto idx = gens_->find(std::string(1, lower));
      if (!idx) {
        throw ParseError("unknown generator symbol '" + std::string(1, c) + "'",
                         line, col + k);
      }
      w.push_back(std::isupper(static_cast<unsigned char>(c)) ? inv(*idx)
                                                              : gen(*idx));
    }
    // An exponent binds to the last letter only.
    skip_spaces();
    if (peek() == '^') {
      Word last{w[w.size() - 1]};
      Word head(std::vector<GeneratorRef>(w.begin(), w.end() - 1));
      return head * maybe_power(last);
    }
    return w;
  }

  Word term() {
    char c = peek();
    if (c == '[') {
      advance();
      Word u = word();
      skip_spaces();
      if (peek() != ',') fail("expected ',' in commutator");
      advance();
      Word v = word();
      skip_spaces();
      if (peek() != ']') fail("expected ']'");
      advance();
      return maybe_power(commutator(u, v));
    }
    if (c == '(') {
      advance();
      Word u = word();
      skip_spaces();
      if (peek() != ')') fail("expected ')'");
      advance();
      return maybe_power(u);
    }
    if (c == '1') {
      advance();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("unexpected number");
      }
      return maybe_power(Word{});
    }
    if (ident_start(c)) return symbol_term();
    fail(c == '\0' ? "unexpected end of input"
                   : "unexpected character '" + std::string(1, c) + "'");
  }

  Word word() {
    Word w;
    while (true) {
      skip_spaces();
      char c = peek();
      if (c == '[' || c == '(' || c == '1' || ident_start(c)) {
        w *= term();
      } else {
        return free_reduce(w);
      }
    }
  }

  Word relation() {
    Word lhs = word();
    skip_spaces();
    if (peek() == '=') {
      advance();
      Word rhs = word();
      return free_reduce(lhs * inverse(rhs));
    }
    return lhs;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Presentation const* gens_ = nullptr;
  bool single_letter_ = false;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(std::string_view text, Presentation const& p) {
  return Parser(text).single_word(p);
}

std::string to_text(Presentation const& p) {
  std::ostringstream out;
  if (!p.name().empty()) out << "# " << p.name() << "\n";
  out << "gens:";
  for (auto const& s : p.generators()) out << ' ' << s;
  out << "\nrels:\n";
  for (auto const& r : p.relators()) {
    out << to_string(r, p.generators()) << "\n";
  }
  return out.str();
}

Homomorphism::Homomorphism(Presentation source, std::vector<std::int64_t> images)
    : source_(std::move(source)), int_images_(std::move(images)) {
  if (int_images_.size() != source_.generator_count()) {
    throw std::invalid_argument("one image per source generator required");
  }
  for (auto const& r : source_.relators()) {
    if (std::get<std::int64_t>(evaluate(r)) != 0) {
      throw std::invalid_argument(
          "relator " + to_string(r, source_.generators()) +
          " does not map to 0");
    }
  }
}

Homomorphism::Homomorphism(Presentation source, Presentation target,
                           std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      word_images_(std::move(images)) {
  if (word_images_.size() != source_.generator_count()) {
    throw std::invalid_argument("one image per source generator required");
  }
  for (auto const& w : word_images_) {
    if (w.generator_bound() > target_->generator_count()) {
      throw std::out_of_range("image references a missing target generator");
    }
  }
  for (auto const& r : source_.relators()) {
    Word image = std::get<Word>(evaluate(r));
    if (!image.empty()) obligations_.push_back(image);
  }
}

std::variant<std::int64_t, Word> Homomorphism::evaluate(Word const& w) const {
  if (w.generator_bound() > source_.generator_count()) {
    throw std::out_of_range("word references a generator outside the source");
  }
  if (!target_) {
    std::int64_t sum = 0;
    for (auto const& g : w) sum += g.sign * int_images_[g.index];
    return sum;
  }
  Word out;
  for (auto const& g : w) {
    out *= g.sign > 0 ? word_images_[g.index] : inverse(word_images_[g.index]);
  }
  return free_reduce(out);
}

std::variant<std::int64_t, Word> evaluate_hom(Homomorphism const& h,
                                              Word const& w) {
  return h.evaluate(w);
}

}  // namespace braidlcs
