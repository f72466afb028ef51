#include "chenlie/ncpoly.hpp"

#include <algorithm>
#include <set>

#include "chenlie/error.hpp"

namespace chenlie {

Alphabet::Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  if (names.size() > 256) throw DomainError("alphabet larger than 256 letters");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("empty letter name");
    if (!seen.insert(n).second) throw DomainError("duplicate letter name: " + n);
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::index(std::string_view name) const {
  auto l = find(name);
  if (!l) throw DomainError("unknown letter: " + std::string(name));
  return *l;
}

Word Word::operator+(const Word& o) const {
  Word r = *this;
  r.letters_.insert(r.letters_.end(), o.letters_.begin(), o.letters_.end());
  return r;
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos),
                                  letters_.begin() + static_cast<long>(pos + len)));
}

std::string to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) s += alphabet.name(l);
  return s;
}

std::vector<Word> all_words(std::size_t m, std::size_t k) {
  std::vector<Word> out;
  std::vector<Letter> cur(k, 0);
  if (m == 0) return k == 0 ? std::vector<Word>{Word()} : out;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] + 1u == m) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch();
}

NcPoly NcPoly::word(const Alphabet& alphabet, const Word& w, const Scalar& c) {
  for (Letter l : w)
    if (l >= alphabet.size()) throw DomainError("letter index out of range");
  NcPoly p(alphabet);
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NcPoly::max_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int NcPoly::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

bool NcPoly::is_homogeneous() const { return max_degree() == min_degree(); }

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.rational() < 0;
      const Rational mag = abs(c.rational());
      if (w.empty())
        coeff = to_string(mag);
      else if (mag != 1)
        coeff = to_string(mag) + "*";
    } else {
      coeff = "{" + c.str() + "}" + (w.empty() ? "" : "*");
    }
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    s += coeff;
    if (!w.empty()) s += to_string(alphabet_, w);
  }
  return s;
}

NcPoly concat_mul(const NcPoly& p, const NcPoly& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  NcPoly r(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add_term(u + v, a * b);
  return r;
}

std::map<Word, long> shuffle_words(const Word& u, const Word& v) {
  // row[j] holds the shuffles of the current prefix of u with v[0, j).
  const std::size_t r = u.size(), s = v.size();
  std::vector<std::map<Word, long>> row(s + 1);
  row[0][Word()] = 1;
  for (std::size_t j = 1; j <= s; ++j)
    for (const auto& [w, n] : row[j - 1]) {
      Word x = w;
      x.push_back(v[j - 1]);
      row[j][x] += n;
    }
  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<std::map<Word, long>> next(s + 1);
    for (std::size_t j = 0; j <= s; ++j) {
      for (const auto& [w, n] : row[j]) {
        Word x = w;
        x.push_back(u[i - 1]);
        next[j][x] += n;
      }
      if (j > 0)
        for (const auto& [w, n] : next[j - 1]) {
          Word x = w;
          x.push_back(v[j - 1]);
          next[j][x] += n;
        }
    }
    row = std::move(next);
  }
  return row[s];
}

NcPoly shuffle(const NcPoly& p, const NcPoly& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  NcPoly r(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) {
      const Scalar ab = a * b;
      for (const auto& [w, n] : shuffle_words(u, v)) r.add_term(w, ab * Scalar(n));
    }
  return r;
}

Scalar inner(const NcPoly& p, const NcPoly& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  const NcPoly& small = p.terms().size() <= q.terms().size() ? p : q;
  const NcPoly& large = &small == &p ? q : p;
  Scalar s;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

NcPoly homogeneous_part(const NcPoly& p, int k) {
  NcPoly r(p.alphabet());
  if (k < 0) return r;
  for (const auto& [w, c] : p.terms())
    if (static_cast<int>(w.size()) == k) r.add_term(w, c);
  return r;
}

NcPoly lie_bracket(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

}  // namespace chenlie
