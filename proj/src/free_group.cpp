#include "loopstab/free_group.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace loopstab {

Word::Word(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const Syllable& s : syllables) push_back(s);
}

Word Word::generator(int gen, Integer exponent) {
  if (gen < 1) throw std::invalid_argument("generator index must be >= 1");
  Word w;
  w.push_back({gen, exponent});
  return w;
}

Integer Word::length() const {
  Integer total = 0;
  for (const Syllable& s : syllables_) total += std::llabs(s.exponent);
  return total;
}

int Word::max_generator() const {
  int best = 0;
  for (const Syllable& s : syllables_) best = std::max(best, s.gen);
  return best;
}

bool Word::contains_generator(int gen) const {
  return std::any_of(syllables_.begin(), syllables_.end(),
                     [gen](const Syllable& s) { return s.gen == gen; });
}

void Word::push_back(Syllable s) {
  if (s.gen < 1) throw std::invalid_argument("generator index must be >= 1");
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == s.gen) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

Word& Word::operator*=(const Word& other) {
  if (this == &other) {
    Word copy = other;
    return *this *= copy;
  }
  // Cancellation only happens at the seam; push_back handles the cascade
  // because a fully cancelled syllable exposes the next one to merging.
  for (const Syllable& s : other.syllables_) push_back(s);
  return *this;
}

Word multiply(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    out.push_back({it->gen, -it->exponent});
  return Word(std::move(out));
}

Word power(const Word& w, Integer exponent) {
  if (w.syllable_count() == 1) {
    const Syllable& s = w.syllables().front();
    return Word::generator(s.gen, s.exponent * exponent);
  }
  const Word base = exponent < 0 ? invert(w) : w;
  Word out;
  for (Integer t = 0; t < std::llabs(exponent); ++t) out *= base;
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * invert(a) * invert(b);
}

Integer exponent_sum(const Word& w, int gen) {
  Integer total = 0;
  for (const Syllable& s : w.syllables())
    if (s.gen == gen) total += s.exponent;
  return total;
}

AbelianVector abelianize(const Word& w, int rank) {
  if (w.max_generator() > rank)
    throw std::invalid_argument("word uses a generator beyond the rank");
  AbelianVector v = AbelianVector::Zero(rank);
  for (const Syllable& s : w.syllables()) v(s.gen - 1) += s.exponent;
  return v;
}

bool in_derived_subgroup(const Word& w) {
  const int rank = std::max(1, w.max_generator());
  return abelianize(w, rank).isZero();
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << 'g' << s.gen;
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

namespace {

bool is_separator(std::string_view text, std::size_t& pos) {
  const char c = text[pos];
  if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
    ++pos;
    return true;
  }
  // U+00B7 middle dot
  if (static_cast<unsigned char>(c) == 0xC2 && pos + 1 < text.size() &&
      static_cast<unsigned char>(text[pos + 1]) == 0xB7) {
    pos += 2;
    return true;
  }
  return false;
}

Integer parse_integer(std::string_view text, std::size_t& pos) {
  bool braced = false;
  if (pos < text.size() && text[pos] == '{') {
    braced = true;
    ++pos;
  }
  Integer sign = 1;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  const std::size_t start = pos;
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == start) throw std::invalid_argument("expected an integer in word");
  if (braced) {
    if (pos >= text.size() || text[pos] != '}')
      throw std::invalid_argument("unbalanced brace in word exponent");
    ++pos;
  }
  return sign * value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text, pos)) continue;
    const char c = text[pos];
    int gen = 0;
    Integer sign = 1;
    if (c == 'g') {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        gen = gen * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == start || gen < 1)
        throw std::invalid_argument("expected generator index after 'g'");
    } else if (c >= 'x' && c <= 'z') {
      gen = c - 'x' + 1;
      ++pos;
    } else if (c >= 'X' && c <= 'Z') {
      gen = c - 'X' + 1;
      sign = -1;
      ++pos;
    } else if (c == '1' && w.empty() && pos + 1 == text.size()) {
      ++pos;  // lone "1" is the identity
      continue;
    } else {
      throw std::invalid_argument(std::string("unexpected character in word: '") + c + "'");
    }
    Integer exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_integer(text, pos);
    }
    w.push_back({gen, sign * exponent});
  }
  return w;
}

Endo::Endo(int rank, std::vector<Word> images) : images_(std::move(images)) {
  if (rank < 1 || static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("endomorphism needs exactly one image per generator");
  for (const Word& w : images_)
    if (w.max_generator() > rank)
      throw std::invalid_argument("endomorphism image uses a generator beyond the rank");
}

Endo Endo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int j = 1; j <= rank; ++j) images.push_back(Word::generator(j));
  return Endo(rank, std::move(images));
}

Word apply(const Endo& e, const Word& w) {
  if (w.max_generator() > e.rank())
    throw std::invalid_argument("word uses a generator beyond the endomorphism rank");
  Word out;
  for (const Syllable& s : w.syllables()) {
    const Word& image = e.image(s.gen);
    if (image.syllable_count() == 1) {
      const Syllable& t = image.syllables().front();
      out.push_back({t.gen, t.exponent * s.exponent});
      continue;
    }
    const Word step = s.exponent < 0 ? invert(image) : image;
    for (Integer k = 0; k < std::llabs(s.exponent); ++k) out *= step;
  }
  return out;
}

Endo compose(const Endo& e, const Endo& f) {
  if (e.rank() != f.rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<Word> images;
  images.reserve(f.rank());
  for (const Word& fj : f.images()) images.push_back(apply(e, fj));
  return Endo(e.rank(), std::move(images));
}

IntMatrix b_matrix(const Endo& e) {
  const int r = e.rank();
  IntMatrix m(r, r);
  for (int j = 0; j < r; ++j) m.col(j) = abelianize(e.images()[j], r);
  return m;
}

Endo tau(int j, int rank) {
  if (j < 1 || j > rank) throw std::invalid_argument("tau: generator index out of range");
  std::vector<Word> images = Endo::identity(rank).images();
  images[j - 1] = Word::generator(j, -1);
  return Endo(rank, std::move(images));
}

Endo transvection(int j, const Word& prefix, int rank) {
  if (j < 1 || j > rank) throw std::invalid_argument("transvection: index out of range");
  std::vector<Word> images = Endo::identity(rank).images();
  images[j - 1] = prefix * Word::generator(j);
  return Endo(rank, std::move(images));
}

Endo transvection_inverse(int j, const Word& prefix, int rank) {
  if (prefix.contains_generator(j))
    throw PreconditionError("transvection prefix must not contain the moved generator");
  return transvection(j, invert(prefix), rank);
}

std::string to_string(const Endo& e) {
  std::ostringstream out;
  out << '(';
  for (int j = 0; j < e.rank(); ++j) {
    if (j) out << ", ";
    out << to_string(e.images()[j]);
  }
  out << ')';
  return out.str();
}

}  // namespace loopstab
