#pragma once

// Words over a finite ordered alphabet and noncommutative polynomials with
// exact scalar coefficients: the free associative algebra with its
// concatenation product, shuffle product and canonical inner product.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chenlie/scalar.hpp"

namespace chenlie {

using Letter = std::uint8_t;

class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(Letter l) const { return names_->at(l); }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter index(std::string_view name) const;  // throws if absent

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Byte-packed sequence of letter indices; the empty word is 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator+(const Word& o) const;  // concatenation
  Word reversed() const;
  Word sub(std::size_t pos, std::size_t len) const;
  void push_back(Letter l) { letters_.push_back(l); }

  friend bool operator==(const Word&, const Word&) = default;
  // Length-lexicographic.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::string to_string(const Alphabet& alphabet, const Word& w);

// All words of length k over an m-letter alphabet in lexicographic order.
std::vector<Word> all_words(std::size_t m, std::size_t k);

class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit NcPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  static NcPoly word(const Alphabet& alphabet, const Word& w, const Scalar& c = Scalar(1));
  static NcPoly letter(const Alphabet& alphabet, Letter l) { return word(alphabet, Word{l}); }
  static NcPoly constant(const Alphabet& alphabet, const Scalar& c) {
    return word(alphabet, Word(), c);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  // -1 for the zero polynomial.
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  NcPoly operator-() const;

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  // Canonical text: terms in length-lexicographic word order, rational
  // coefficients as "p/q*", other scalars wrapped in braces, e.g.
  // "xy - yx", "1/2*xx + {w2 - w1}*xy".
  std::string str() const;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b);

NcPoly concat_mul(const NcPoly& p, const NcPoly& q);
inline NcPoly operator*(const NcPoly& p, const NcPoly& q) { return concat_mul(p, q); }

// Shuffle of two words as a multiset of words with multiplicities.
std::map<Word, long> shuffle_words(const Word& u, const Word& v);
NcPoly shuffle(const NcPoly& p, const NcPoly& q);

// Canonical bilinear form: words are orthonormal.
Scalar inner(const NcPoly& p, const NcPoly& q);

NcPoly homogeneous_part(const NcPoly& p, int k);
NcPoly lie_bracket(const NcPoly& a, const NcPoly& b);

// Applies `f` to every coefficient, dropping zeros.
template <typename F>
NcPoly map_coefficients(const NcPoly& p, F&& f) {
  NcPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add_term(w, f(c));
  return r;
}

}  // namespace chenlie
