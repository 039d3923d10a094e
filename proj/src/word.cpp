#include "braidlcs/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace braidlcs {

Word Word::power(std::size_t gen, std::int64_t exponent) {
  Word w;
  int sign = exponent < 0 ? -1 : 1;
  for (std::int64_t k = 0; k < std::abs(exponent); ++k) {
    w.letters_.push_back({gen, sign});
  }
  return w;
}

Word& Word::operator*=(Word const& other) {
  letters_.insert(letters_.end(), other.letters_.begin(),
                  other.letters_.end());
  return *this;
}

std::size_t Word::generator_bound() const {
  std::size_t bound = 0;
  for (auto const& g : letters_) {
    bound = std::max(bound, g.index + 1);
  }
  return bound;
}

Word free_reduce(Word const& w) {
  std::vector<GeneratorRef> out;
  out.reserve(w.size());
  for (auto const& g : w) {
    if (!out.empty() && out.back().index == g.index &&
        out.back().sign == -g.sign) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return Word(std::move(out));
}

Word inverse(Word const& w) {
  std::vector<GeneratorRef> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word pow(Word const& w, std::int64_t exponent) {
  Word base = exponent < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t k = 0; k < std::abs(exponent); ++k) {
    out *= base;
  }
  return free_reduce(out);
}

Word commutator(Word const& u, Word const& v) {
  return free_reduce(u * v * inverse(u) * inverse(v));
}

Word conjugate(Word const& w, Word const& u) {
  return free_reduce(inverse(u) * w * u);
}

std::int64_t exponent_sum(Word const& w, std::size_t index) {
  std::int64_t sum = 0;
  for (auto const& g : w) {
    if (g.index == index) sum += g.sign;
  }
  return sum;
}

std::string to_string(Word const& w, std::vector<std::string> const& symbols) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += symbols.at(w[i].index);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace braidlcs
