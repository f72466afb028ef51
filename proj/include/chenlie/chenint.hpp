#pragma once

// Iterated-integral models. A model assigns to every free generator a
// group-like truncated series over the form alphabet; the integral of a word
// of forms along a group word is the matching coefficient of the product of
// those series. Chen's axioms (unit, path splitting, inversion, shuffle) then
// hold by construction.

#include <string>
#include <vector>

#include "chenlie/freegrp.hpp"
#include "chenlie/ncpoly.hpp"
#include "chenlie/truncseries.hpp"

namespace chenlie {

// <s,u><s,v> = <s,u*v> for all words with |u|+|v| <= N. Requires constant
// term 1.
bool is_grouplike(const TruncSeries& s);

class IntegralModel {
 public:
  // Throws DomainError unless every series is group-like over `forms`, one
  // per generator, with truncation >= N.
  IntegralModel(Alphabet generators, Alphabet forms, int N, std::vector<TruncSeries> series);

  const Alphabet& generators() const { return generators_; }
  const Alphabet& forms() const { return forms_; }
  int truncation() const { return N_; }
  const TruncSeries& series(Letter generator) const { return series_.at(generator); }

  // Product of the generator series (inverted for inverse letters).
  TruncSeries path_series(const GroupWord& g) const;

 private:
  Alphabet generators_;
  Alphabet forms_;
  int N_;
  std::vector<TruncSeries> series_;
  std::vector<TruncSeries> inverse_series_;
};

// Generator j -> exp(x_j): the integral of x_j^n along delta_j is 1/n! and any
// word containing another letter integrates to 0.
IntegralModel canonical_model(const Alphabet& alphabet, int N);

// <path_series(g), omega>; throws DomainError when deg omega > N.
Scalar evaluate(const IntegralModel& model, const GroupWord& g, const NcPoly& omega);

// Values v[i][j] of the integral of form j along generator i.
struct PairingTable {
  Alphabet generators;
  Alphabet forms;
  std::vector<std::vector<Scalar>> values;

  // Same alphabet on both sides, v = identity.
  static PairingTable identity(const Alphabet& alphabet);
  // Independent indeterminates named "<prefix>_<generator>_<form>".
  static PairingTable symbolic(const Alphabet& generators, const Alphabet& forms,
                               const std::string& prefix = "v");
};

// Sum over the words i of phi_inverse(g) at degree k of
// a(i) * v[i_1][j_1] * ... * v[i_k][j_k], extended linearly over the words j
// of omega. omega must be homogeneous of degree k and g must lie in F^k
// (if g is in F^(k+1) the result is 0).
Scalar pair_graded(const PairingTable& table, const GroupWord& g, const NcPoly& omega);

}  // namespace chenlie
