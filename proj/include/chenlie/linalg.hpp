#pragma once

// Exact linear algebra over Q used by the Lie-algebra routines. Costs are
// cubic in the dimension; the intended scale is a few hundred unknowns.

#include <cstddef>
#include <map>
#include <vector>

#include "chenlie/ncpoly.hpp"
#include "chenlie/scalar.hpp"

namespace chenlie {

using SparseRow = std::map<std::size_t, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

// Incremental row echelon form on sparse rows.
class RowReducer {
 public:
  // Reduces `row` against the stored pivots; keeps it and returns true when
  // it is independent of them.
  bool add(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row, lead = 1
};

// Rank of a family of polynomials with rational coefficients.
std::size_t rank(const std::vector<NcPoly>& family);

Rational determinant(Matrix m);

// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(Matrix m);

}  // namespace chenlie
