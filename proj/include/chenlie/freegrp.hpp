#pragma once

// Free-group words, their Magnus expansion in the truncated tensor algebra,
// lower-central-series degree detection, and the graded isomorphism from
// gr^k F to the degree-k Lie elements.

#include <string>
#include <vector>

#include "chenlie/liealg.hpp"
#include "chenlie/ncpoly.hpp"
#include "chenlie/truncseries.hpp"

namespace chenlie {

struct GroupLetter {
  Letter letter;
  int exponent;  // +1 or -1
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

// Freely reduced word in the generators and their inverses.
class GroupWord {
 public:
  explicit GroupWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  // Reduces the given sequence.
  GroupWord(Alphabet alphabet, const std::vector<GroupLetter>& letters);
  static GroupWord generator(const Alphabet& alphabet, Letter l, int exponent = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<GroupLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  void push(GroupLetter g);
  Alphabet alphabet_;
  std::vector<GroupLetter> letters_;
};

// "xyx^-1y^-1"; "1" for the identity.
std::string to_string(const GroupWord& g);

GroupWord gw_mul(const GroupWord& a, const GroupWord& b);
GroupWord gw_inv(const GroupWord& a);
inline GroupWord operator*(const GroupWord& a, const GroupWord& b) { return gw_mul(a, b); }

// (a,b) = a b a^-1 b^-1
GroupWord commutator(const GroupWord& a, const GroupWord& b);

// Replaces each bracket of the tree by a group commutator.
GroupWord commutator_word(const Alphabet& alphabet, const LieTree& t);

// Image under x -> exp(x), x^-1 -> exp(-x), truncated above degree N.
TruncSeries magnus(const GroupWord& g, int N);

struct LcsDegree {
  enum class Kind { degree, identity, exceeds };
  Kind kind;
  int degree;  // valid when kind == degree

  bool has_degree() const { return kind == Kind::degree; }
  friend bool operator==(const LcsDegree&, const LcsDegree&) = default;
};

// Smallest k <= n_max such that g lies in F^k but not F^(k+1), detected as
// the lowest nonzero positive degree of magnus(g, n_max).
LcsDegree lcs_degree(const GroupWord& g, int n_max);

// Degree-k leading term of the Magnus expansion, k = lcs degree; this is the
// Lie element representing g in gr^k F. Searches degrees up to max_degree
// (default: the word length, which bounds the degree of any nontrivial word).
NcPoly phi_inverse(const GroupWord& g, int max_degree = 0);

}  // namespace chenlie
