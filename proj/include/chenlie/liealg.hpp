#pragma once

// Free Lie algebra inside the free associative algebra: bracket trees, a Hall
// basis, Ree's shuffle-orthogonality test and the orthogonal splitting of a
// homogeneous component into its Lie part and its shuffle part.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chenlie/ncpoly.hpp"

namespace chenlie {

// Either a letter or a bracket [left, right].
class LieTree {
 public:
  static LieTree leaf(Letter l);
  static LieTree bracket(const LieTree& left, const LieTree& right);

  bool is_leaf() const;
  Letter letter() const;  // leaf only
  const LieTree& left() const;
  const LieTree& right() const;
  int degree() const;

  friend bool operator==(const LieTree& a, const LieTree& b);

 private:
  struct Node;
  explicit LieTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// "[x,[x,y]]"
std::string to_string(const Alphabet& alphabet, const LieTree& t);

// Expansion with [a,b] = ab - ba; homogeneous of degree t.degree().
NcPoly expand(const Alphabet& alphabet, const LieTree& t);

// Hall set used throughout: letters ordered as in the alphabet, then
// elements ordered by degree and, within a degree, by the positions of their
// two children. [u,v] belongs to the set iff u < v and either v is a letter
// or v = [v1,v2] with v1 <= u. This is Marshall Hall's basic-commutator
// construction written with brackets reversed, so elements read
// [x,[x,y]], [y,[x,y]], [[x,y],[x,[x,y]]], ...
struct HallBasis {
  Alphabet alphabet;
  int degree = 0;
  std::vector<LieTree> elements;
};

// Hall elements of every degree 1..max_degree, grouped by degree
// (result[d-1] holds degree d).
std::vector<std::vector<LieTree>> hall_set(const Alphabet& alphabet, int max_degree);
HallBasis hall_basis(const Alphabet& alphabet, int k);

// Dimension of the degree-k part of the free Lie algebra on m generators.
std::int64_t witt_dimension(std::int64_t m, int k);

// Ree's criterion: every homogeneous part of degree d >= 1 is orthogonal to
// all shuffles u*v of nonempty words with |u|+|v| = d, and the constant term
// vanishes.
bool is_lie(const NcPoly& p);

// Spanning family {u*v : u,v nonempty, |u|+|v| = k, |u| <= |v|} of the
// degree-k shuffle subspace (u*v = v*u, so the restriction loses nothing).
std::vector<NcPoly> shuffle_spanning_set(const Alphabet& alphabet, int k);

struct Decomposition {
  NcPoly lie;
  NcPoly shuffle;
};

// p = lie + shuffle with lie in the span of the Hall expansions and shuffle
// orthogonal to it. Solves the Gram system of the degree-k Hall basis, so the
// cost is cubic in the Witt dimension. p must be homogeneous of degree >= 1
// (the zero polynomial splits as (0, 0)).
Decomposition decompose(const NcPoly& p);

// Reusable projector for one (alphabet, degree).
class LieProjector {
 public:
  LieProjector(const Alphabet& alphabet, int k);
  Decomposition operator()(const NcPoly& p) const;
  const std::vector<NcPoly>& basis() const { return expansions_; }

 private:
  Alphabet alphabet_;
  int degree_;
  std::vector<NcPoly> expansions_;
  std::vector<std::vector<Rational>> gram_inverse_;
};

}  // namespace chenlie
