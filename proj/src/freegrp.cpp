#include "chenlie/freegrp.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "chenlie/error.hpp"

namespace chenlie {

GroupWord::GroupWord(Alphabet alphabet, const std::vector<GroupLetter>& letters)
    : alphabet_(std::move(alphabet)) {
  for (const auto& g : letters) push(g);
}

GroupWord GroupWord::generator(const Alphabet& alphabet, Letter l, int exponent) {
  return GroupWord(alphabet, {GroupLetter{l, exponent}});
}

void GroupWord::push(GroupLetter g) {
  if (g.letter >= alphabet_.size()) throw DomainError("letter index out of range");
  if (g.exponent != 1 && g.exponent != -1) throw DomainError("group letter exponent must be +-1");
  if (!letters_.empty() && letters_.back().letter == g.letter &&
      letters_.back().exponent == -g.exponent)
    letters_.pop_back();
  else
    letters_.push_back(g);
}

std::string to_string(const GroupWord& g) {
  if (g.is_identity()) return "1";
  std::string s;
  for (const auto& x : g.letters()) {
    s += g.alphabet().name(x.letter);
    if (x.exponent < 0) s += "^-1";
  }
  return s;
}

GroupWord gw_mul(const GroupWord& a, const GroupWord& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  std::vector<GroupLetter> all = a.letters();
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return GroupWord(a.alphabet(), all);
}

GroupWord gw_inv(const GroupWord& a) {
  std::vector<GroupLetter> inv;
  inv.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    inv.push_back({it->letter, -it->exponent});
  return GroupWord(a.alphabet(), inv);
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return a * b * gw_inv(a) * gw_inv(b);
}

GroupWord commutator_word(const Alphabet& alphabet, const LieTree& t) {
  if (t.is_leaf()) return GroupWord::generator(alphabet, t.letter());
  return commutator(commutator_word(alphabet, t.left()), commutator_word(alphabet, t.right()));
}

TruncSeries magnus(const GroupWord& g, int N) {
  if (N < 1) throw DomainError("magnus: truncation degree must be >= 1");
  const Alphabet& alphabet = g.alphabet();
  std::vector<TruncSeries> plus, minus;
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    const NcPoly x = NcPoly::letter(alphabet, static_cast<Letter>(l));
    plus.push_back(ts_exp(TruncSeries(x, N)));
    minus.push_back(ts_exp(TruncSeries(-x, N)));
  }
  TruncSeries s = TruncSeries::one(alphabet, N);
  for (const auto& x : g.letters()) s = s * (x.exponent > 0 ? plus : minus)[x.letter];
  return s;
}

namespace {

// Lowest n <= n_max with a nonzero degree-n term in the Magnus expansion,
// found by raising the truncation one degree at a time so that the cost is
// governed by the answer rather than by the bound.
std::optional<std::pair<int, TruncSeries>> leading_degree(const GroupWord& g, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    TruncSeries s = magnus(g, n);
    for (const auto& [w, c] : s.poly().terms())
      if (static_cast<int>(w.size()) == n) return std::pair{n, std::move(s)};
  }
  return std::nullopt;
}

}  // namespace

LcsDegree lcs_degree(const GroupWord& g, int n_max) {
  if (n_max < 1) throw DomainError("lcs_degree: n_max must be >= 1");
  if (g.is_identity()) return {LcsDegree::Kind::identity, 0};
  if (const auto found = leading_degree(g, n_max)) return {LcsDegree::Kind::degree, found->first};
  return {LcsDegree::Kind::exceeds, 0};
}

NcPoly phi_inverse(const GroupWord& g, int max_degree) {
  if (g.is_identity()) throw DomainError("phi_inverse: identity has no leading term");
  const int bound = max_degree > 0 ? max_degree : std::max<int>(1, static_cast<int>(g.length()));
  if (const auto found = leading_degree(g, bound))
    return homogeneous_part(found->second.poly(), found->first);
  throw DomainError("phi_inverse: no nonzero term up to degree " + std::to_string(bound));
}

}  // namespace chenlie
