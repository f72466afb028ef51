#include "chenlie/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "chenlie/error.hpp"

namespace chenlie {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Raw lookahead without skipping whitespace.
  char raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n = 1) { pos_ += n; }

  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  // [A-Za-z][0-9]*
  std::string letter_token() {
    skip_space();
    if (!is_alpha(raw())) fail("expected a letter" + found());
    std::size_t start = pos_++;
    while (is_digit(raw())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    skip_space();
    if (!is_digit(raw())) fail("expected a number" + found());
    std::size_t start = pos_;
    while (is_digit(raw())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    if (!is_alpha(raw()) && raw() != '_') fail("expected an identifier" + found());
    std::size_t start = pos_;
    while (is_alpha(raw()) || is_digit(raw()) || raw() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void finish() {
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- scalar expressions ----------------------------------------------------

Scalar scalar_sum(Cursor& c);

Scalar scalar_atom(Cursor& c) {
  const char ch = c.peek();
  if (is_digit(ch)) return Scalar(Rational(mpz_class(c.digits())));
  if (is_alpha(ch) || ch == '_') return Scalar::var(c.identifier());
  if (c.accept('(')) {
    Scalar s = scalar_sum(c);
    c.expect(')');
    return s;
  }
  c.fail("expected a scalar" + c.found());
}

Scalar scalar_power(Cursor& c) {
  Scalar base = scalar_atom(c);
  if (c.accept('^')) {
    const std::size_t at = c.pos();
    const std::string e = c.digits();
    if (e.size() > 6) c.fail_at(at, "exponent too large");
    base = base.pow(static_cast<unsigned>(std::stoul(e)));
  }
  return base;
}

Scalar scalar_product(Cursor& c) {
  Scalar s = scalar_power(c);
  for (;;) {
    if (c.accept('*')) {
      s *= scalar_power(c);
    } else if (c.peek() == '/') {
      const std::size_t at = c.pos();
      c.advance();
      const Scalar d = scalar_power(c);
      try {
        s /= d;
      } catch (const DomainError& e) {
        c.fail_at(at, e.what());
      }
    } else {
      return s;
    }
  }
}

Scalar scalar_sum(Cursor& c) {
  Scalar s;
  if (c.accept('-'))
    s = -scalar_product(c);
  else {
    c.accept('+');
    s = scalar_product(c);
  }
  for (;;) {
    if (c.accept('+'))
      s += scalar_product(c);
    else if (c.accept('-'))
      s -= scalar_product(c);
    else
      return s;
  }
}

// --- polynomials -----------------------------------------------------------

class PolyParser {
 public:
  PolyParser(Cursor& c, const Alphabet& a) : c_(c), a_(a) {}

  NcPoly sum() {
    NcPoly p(a_);
    if (c_.accept('-'))
      p -= shuf();
    else {
      c_.accept('+');
      p += shuf();
    }
    for (;;) {
      if (c_.accept('+'))
        p += shuf();
      else if (c_.accept('-'))
        p -= shuf();
      else
        return p;
    }
  }

 private:
  NcPoly shuf() {
    NcPoly p = prod();
    while (c_.accept('#')) p = shuffle(p, prod());
    return p;
  }

  static bool starts_factor(char ch) {
    return is_digit(ch) || is_alpha(ch) || ch == '{' || ch == '[' || ch == '(';
  }

  NcPoly prod() {
    NcPoly p = factor();
    for (;;) {
      if (c_.accept('*'))
        p = p * factor();
      else if (starts_factor(c_.peek()))
        p = p * factor();
      else
        return p;
    }
  }

  NcPoly factor() {
    const char ch = c_.peek();
    if (is_digit(ch)) {
      Rational q(mpz_class(c_.digits()));
      if (c_.peek() == '/') {
        c_.advance();
        const std::size_t at = c_.pos();
        const mpz_class d(c_.digits());
        if (d == 0) c_.fail_at(at, "division by zero");
        q /= d;
      }
      return NcPoly::constant(a_, Scalar(q));
    }
    if (c_.accept('{')) {
      const Scalar s = scalar_sum(c_);
      c_.expect('}');
      return NcPoly::constant(a_, s);
    }
    if (is_alpha(ch)) {
      const std::size_t at = c_.pos();
      const std::string name = c_.letter_token();
      const auto l = a_.find(name);
      if (!l) c_.fail_at(at, "unknown letter '" + name + "'");
      return NcPoly::letter(a_, *l);
    }
    if (c_.accept('[')) {
      const NcPoly u = sum();
      c_.expect(',');
      const NcPoly v = sum();
      c_.expect(']');
      return lie_bracket(u, v);
    }
    if (c_.accept('(')) {
      NcPoly p = sum();
      c_.expect(')');
      return p;
    }
    c_.fail("expected a term" + c_.found());
  }

  Cursor& c_;
  const Alphabet& a_;
};

// --- Lie trees and group words ---------------------------------------------

Letter letter_in(Cursor& c, const Alphabet& a) {
  c.skip_space();
  const std::size_t at = c.pos();
  const std::string name = c.letter_token();
  const auto l = a.find(name);
  if (!l) c.fail_at(at, "unknown letter '" + name + "'");
  return *l;
}

LieTree lie(Cursor& c, const Alphabet& a) {
  if (c.accept('[')) {
    LieTree u = lie(c, a);
    c.expect(',');
    LieTree v = lie(c, a);
    c.expect(']');
    return LieTree::bracket(u, v);
  }
  return LieTree::leaf(letter_in(c, a));
}

GroupWord group_word(Cursor& c, const Alphabet& a);

GroupWord group_atom(Cursor& c, const Alphabet& a) {
  const char ch = c.peek();
  if (ch == '1' && !is_digit(c.raw(1))) {
    c.advance();
    return GroupWord(a);
  }
  if (c.accept('(')) {
    GroupWord u = group_word(c, a);
    if (c.accept(',')) {
      GroupWord v = group_word(c, a);
      c.expect(')');
      return commutator(u, v);
    }
    c.expect(')');
    return u;
  }
  if (!is_alpha(ch)) c.fail("expected a group element" + c.found());
  return GroupWord::generator(a, letter_in(c, a));
}

// atom ['^-1']
GroupWord group_item(Cursor& c, const Alphabet& a) {
  GroupWord g = group_atom(c, a);
  if (c.accept('^')) {
    c.expect('-');
    if (c.peek() != '1' || is_digit(c.raw(1))) c.fail("expected exponent -1" + c.found());
    c.advance();
    g = gw_inv(g);
  }
  return g;
}

GroupWord group_word(Cursor& c, const Alphabet& a) {
  GroupWord g = group_item(c, a);
  for (;;) {
    const char ch = c.peek();
    if (!(is_alpha(ch) || ch == '(' || ch == '1')) return g;
    g = g * group_item(c, a);
  }
}

// Sort key for inferred alphabets.
struct NameKey {
  std::string prefix;
  mpz_class suffix;
  bool has_suffix;
  friend bool operator<(const NameKey& a, const NameKey& b) {
    if (a.prefix != b.prefix) return a.prefix < b.prefix;
    if (a.has_suffix != b.has_suffix) return !a.has_suffix;
    return a.suffix < b.suffix;
  }
};

NameKey key_of(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && is_alpha(name[i])) ++i;
  NameKey k{name.substr(0, i), 0, i < name.size()};
  if (k.has_suffix) k.suffix = mpz_class(name.substr(i));
  return k;
}

}  // namespace

bool is_letter_name(std::string_view name) {
  if (name.empty() || !is_alpha(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), is_digit);
}

Alphabet parse_alphabet(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!part.empty() && is_space(part.front())) part.remove_prefix(1);
    while (!part.empty() && is_space(part.back())) part.remove_suffix(1);
    if (!is_letter_name(part))
      throw ParseError("invalid letter name '" + std::string(part) + "'", 1, start + 1);
    names.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return Alphabet(std::move(names));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

Alphabet infer_alphabet(const std::vector<std::string_view>& texts) {
  std::set<std::string> found;
  for (auto text : texts) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '{') {
        const std::size_t close = text.find('}', i);
        i = close == text.npos ? text.size() : close + 1;
      } else if (is_alpha(ch)) {
        std::size_t j = i + 1;
        while (j < text.size() && is_digit(text[j])) ++j;
        found.emplace(text.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  if (found.empty()) throw ParseError("cannot infer an alphabet: no letters in input", 1, 1);
  std::vector<std::string> names(found.begin(), found.end());
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return key_of(a) < key_of(b); });
  return Alphabet(std::move(names));
}

Scalar parse_scalar(std::string_view text) {
  Cursor c(text);
  Scalar s = scalar_sum(c);
  c.finish();
  return s;
}

NcPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text);
  NcPoly p = PolyParser(c, alphabet).sum();
  c.finish();
  return p;
}

LieTree parse_lie(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text);
  LieTree t = lie(c, alphabet);
  c.finish();
  return t;
}

GroupWord parse_group_word(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text);
  GroupWord g = group_word(c, alphabet);
  c.finish();
  return g;
}

Expression parse_expression(std::string_view text, const Alphabet& alphabet) {
  std::vector<ParseError> errors;
  try {
    return parse_lie(text, alphabet);
  } catch (const ParseError& e) {
    errors.push_back(e);
  }
  try {
    return parse_poly(text, alphabet);
  } catch (const ParseError& e) {
    errors.push_back(e);
  }
  try {
    return parse_group_word(text, alphabet);
  } catch (const ParseError& e) {
    errors.push_back(e);
  }
  const auto furthest = std::max_element(errors.begin(), errors.end(), [](const auto& a, const auto& b) {
    return std::pair(a.line(), a.column()) < std::pair(b.line(), b.column());
  });
  throw *furthest;
}

std::string print(const Alphabet& alphabet, const Expression& e) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NcPoly>)
          return v.str();
        else if constexpr (std::is_same_v<T, LieTree>)
          return to_string(alphabet, v);
        else
          return to_string(v);
      },
      e);
}

}  // namespace chenlie
