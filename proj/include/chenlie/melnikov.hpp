#pragma once

// Gauss-Manin derivation on the free algebra of form classes, the nested
// Melnikov integrand, the closed-form coefficient polynomials of the
// quasi-homogeneous case, the vanishing degree-5 example, and the D4
// Picard-Lefschetz reduction on degree-2 brackets.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chenlie/chenint.hpp"
#include "chenlie/ncpoly.hpp"

namespace chenlie {

// omega_i' = (1/delta) * sum_j matrix[i][j] * omega_j.
class Connection {
 public:
  Connection(Alphabet forms, Poly delta, std::vector<std::vector<Poly>> matrix);
  // delta = t, matrix = diag(weights): t omega_i' = w_i omega_i.
  static Connection diagonal(const Alphabet& forms, const std::vector<Poly>& weights);

  const Alphabet& forms() const { return forms_; }
  const Poly& delta() const { return delta_; }
  const std::vector<std::vector<Poly>>& matrix() const { return matrix_; }
  // Image of a single letter.
  const NcPoly& image(Letter i) const { return images_.at(i); }

 private:
  Alphabet forms_;
  Poly delta_;
  std::vector<std::vector<Poly>> matrix_;
  std::vector<NcPoly> images_;
};

// Extends the connection to words by the Leibniz rule and differentiates the
// coefficients in t. Degree preserving.
NcPoly derive(const Connection& conn, const NcPoly& p);

// R_1 = omega, R_{j+1} = omega * derive(R_j); returns R_k.
NcPoly melnikov_integrand(const Connection& conn, const NcPoly& omega, int k);

struct WeightPair {
  Poly w1 = Poly::var("w1");
  Poly w2 = Poly::var("w2");
};

// Two-letter form alphabet used by the closed-form routines.
Alphabet default_form_pair();

// Coefficient of alpha1^i alpha2^(k-i) in t^(k-1) * P_k: the sum over all
// words with i letters omega_1 and k-i letters omega_2 of
// w_{i_k} (w_{i_k} + w_{i_{k-1}} - 1) ... (w_{i_k} + ... + w_{i_2} - k + 2)
// times the word.
NcPoly pk_closed_form(const WeightPair& weights, int k, int i,
                      const Alphabet& forms = default_form_pair());

// Diagonal connection with the two weights, over `forms`.
Connection weight_connection(const WeightPair& weights, const Alphabet& forms = default_form_pair());

// [[...[[omega_1, omega_2], omega_2], ...], omega_2] with k-1 copies of omega_2.
NcPoly lk1(int k, const Alphabet& forms = default_form_pair());

// <pk_closed_form(k, 1), lk1(k)>.
Scalar ck(const WeightPair& weights, int k);
// (w2 - w1) * prod_{i=1}^{k-2} (i - w1 - (i-1) w2).
Scalar ck_closed_form(const WeightPair& weights, int k);

// Integrand omega omega' omega' omega' omega' paired along
// (((a1,a2),a1),(a1,a2)) with a symbolic table over forms o0..o4 (the
// successive derivatives of omega) and generators a1, a2. Identically zero.
Scalar example_ex_m5();

// --- D4 monodromy ---------------------------------------------------------

// Coordinates in the vanishing-cycle basis (d1, d2, d3, d4).
using H1Vector = std::array<std::int64_t, 4>;
// Coordinates in the basis [d1,d2], [d1,a1], [d1,a2], [d2,a1], [d2,a2],
// [a1,a2] where a1 = d1 + d3 and a2 = d1 + d4 span the radical of the
// intersection form (so every h_i fixes them).
using Grade2Element = std::array<std::int64_t, 6>;
using Grade2Matrix = std::array<std::array<std::int64_t, 6>, 6>;

// (d_i . d_j), 0-based.
extern const std::array<std::array<int, 4>, 4> kD4Intersection;

std::int64_t intersection(const H1Vector& u, const H1Vector& v);
H1Vector alpha_cycle(int j);  // j = 1, 2
// h_i(v) = v - (v . d_i) d_i, i = 1..4.
H1Vector picard_lefschetz(int i, const H1Vector& v);
Grade2Element cycle_bracket(const H1Vector& u, const H1Vector& v);
Grade2Element pl_grade2(int i, const Grade2Element& g);
// Matrix of pl_grade2(i, .) acting on column vectors.
Grade2Matrix pl_grade2_matrix(int i);

// Operator polynomial alphabet {h1, h2, h3, h4}; a word h_a h_b acts as
// h_a(h_b(.)) and the empty word is the identity.
Alphabet monodromy_alphabet();
Grade2Element apply_operator(const NcPoly& op, const Grade2Element& g);

struct AlphaReduction {
  NcPoly op;        // integer operator polynomial over monodromy_alphabet()
  std::int64_t k;   // op(g) = k [a1, a2], k != 0
};

// Follows the case analysis of the monodromy argument: (h1 - id) extracts
// [d1, b], (h2 - id) extracts -[d2, a], (h3 - h4) turns m[d1,d2] into
// m[d1, a2 - a1], and h1 - h3 (resp. h1 - h4) sends [d2, b] to a multiple of
// [a1, a2]. Throws DomainError for g = 0.
AlphaReduction reduce_to_alpha(const Grade2Element& g);

}  // namespace chenlie
