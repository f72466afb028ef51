#include "chenlie/melnikov.hpp"

#include "chenlie/error.hpp"
#include "chenlie/freegrp.hpp"
#include "chenlie/liealg.hpp"

namespace chenlie {

Connection::Connection(Alphabet forms, Poly delta, std::vector<std::vector<Poly>> matrix)
    : forms_(std::move(forms)), delta_(std::move(delta)), matrix_(std::move(matrix)) {
  if (delta_.is_zero()) throw DomainError("connection denominator is zero");
  if (!delta_.depends_only_on(kT))
    throw DomainError("connection denominator must be a polynomial in t: " + delta_.str());
  const std::size_t m = forms_.size();
  if (matrix_.size() != m) throw DomainError("connection matrix must be square of alphabet size");
  for (const auto& row : matrix_)
    if (row.size() != m) throw DomainError("connection matrix must be square of alphabet size");
  const Scalar inv_delta = Scalar(1) / Scalar(delta_);
  for (std::size_t i = 0; i < m; ++i) {
    NcPoly img(forms_);
    for (std::size_t j = 0; j < m; ++j)
      img.add_term(Word{static_cast<Letter>(j)}, Scalar(matrix_[i][j]) * inv_delta);
    images_.push_back(std::move(img));
  }
}

Connection Connection::diagonal(const Alphabet& forms, const std::vector<Poly>& weights) {
  if (weights.size() != forms.size()) throw DomainError("one weight per form required");
  std::vector<std::vector<Poly>> a(forms.size(), std::vector<Poly>(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) a[i][i] = weights[i];
  return Connection(forms, Poly::var(kT), std::move(a));
}

NcPoly derive(const Connection& conn, const NcPoly& p) {
  require_same_alphabet(conn.forms(), p.alphabet());
  NcPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    r.add_term(w, c.derivative_t());
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const Word prefix = w.sub(0, pos);
      const Word suffix = w.sub(pos + 1, w.size() - pos - 1);
      for (const auto& [x, a] : conn.image(w[pos]).terms()) r.add_term(prefix + x + suffix, c * a);
    }
  }
  return r;
}

NcPoly melnikov_integrand(const Connection& conn, const NcPoly& omega, int k) {
  if (k < 1) throw DomainError("melnikov_integrand: k must be >= 1");
  NcPoly r = omega;
  for (int j = 1; j < k; ++j) r = omega * derive(conn, r);
  return r;
}

Alphabet default_form_pair() {
  static const Alphabet forms{"o1", "o2"};
  return forms;
}

Connection weight_connection(const WeightPair& weights, const Alphabet& forms) {
  if (forms.size() != 2) throw DomainError("weight connection needs a two-letter alphabet");
  return Connection::diagonal(forms, {weights.w1, weights.w2});
}

NcPoly pk_closed_form(const WeightPair& weights, int k, int i, const Alphabet& forms) {
  if (forms.size() != 2) throw DomainError("pk_closed_form needs a two-letter alphabet");
  if (k < 1 || i < 0 || i > k) throw DomainError("pk_closed_form: invalid partition");
  const Poly w[2] = {weights.w1, weights.w2};
  NcPoly r(forms);
  for (const auto& word : all_words(2, static_cast<std::size_t>(k))) {
    int ones = 0;
    for (Letter l : word) ones += l == 0;
    if (ones != i) continue;
    // Factor j uses the last j letters: w_{i_k} + ... + w_{i_{k-j+1}} - (j - 1).
    Poly c(1), running;
    for (int j = 1; j < k; ++j) {
      running += w[word[static_cast<std::size_t>(k - j)]];
      c *= running - Poly(j - 1);
    }
    r.add_term(word, Scalar(c));
  }
  return r;
}

NcPoly lk1(int k, const Alphabet& forms) {
  if (k < 2) throw DomainError("lk1: k must be >= 2");
  LieTree t = LieTree::leaf(0);
  for (int j = 1; j < k; ++j) t = LieTree::bracket(t, LieTree::leaf(1));
  return expand(forms, t);
}

Scalar ck(const WeightPair& weights, int k) {
  if (k < 2) throw DomainError("ck: k must be >= 2");
  return inner(pk_closed_form(weights, k, 1), lk1(k));
}

Scalar ck_closed_form(const WeightPair& weights, int k) {
  if (k < 2) throw DomainError("ck: k must be >= 2");
  Poly r = weights.w2 - weights.w1;
  for (int i = 1; i <= k - 2; ++i) r *= Poly(i) - weights.w1 - Poly(i - 1) * weights.w2;
  return Scalar(r);
}

Scalar example_ex_m5() {
  const Alphabet gens{"a1", "a2"};
  const Alphabet forms{"o0", "o1", "o2", "o3", "o4"};
  const GroupWord a1 = GroupWord::generator(gens, 0);
  const GroupWord a2 = GroupWord::generator(gens, 1);
  const GroupWord c12 = commutator(a1, a2);
  const GroupWord gamma = commutator(commutator(c12, a1), c12);
  const NcPoly word = NcPoly::word(forms, Word{0, 1, 1, 1, 1});
  return pair_graded(PairingTable::symbolic(gens, forms), gamma, word);
}

// ---------------------------------------------------------------------------
// D4 monodromy

const std::array<std::array<int, 4>, 4> kD4Intersection = {{
    {0, 1, 0, 0},
    {-1, 0, 1, 1},
    {0, -1, 0, 0},
    {0, -1, 0, 0},
}};

namespace {

void check_index(int i) {
  if (i < 1 || i > 4) throw DomainError("monodromy index must be in 1..4");
}

// Basis e = (d1, d2, a1, a2) of H1 written in d-coordinates.
const std::array<H1Vector, 4> kBasis = {{
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {1, 0, 1, 0},
    {1, 0, 0, 1},
}};

// Pairs (p, q) of basis positions in Grade2Element order.
constexpr std::array<std::pair<int, int>, 6> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

// d-coordinates to e-coordinates.
std::array<std::int64_t, 4> to_e(const H1Vector& v) {
  return {v[0] - v[2] - v[3], v[1], v[2], v[3]};
}

}  // namespace

std::int64_t intersection(const H1Vector& u, const H1Vector& v) {
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += u[i] * kD4Intersection[i][j] * v[j];
  return s;
}

H1Vector alpha_cycle(int j) {
  if (j != 1 && j != 2) throw DomainError("alpha index must be 1 or 2");
  return kBasis[static_cast<std::size_t>(j + 1)];
}

H1Vector picard_lefschetz(int i, const H1Vector& v) {
  check_index(i);
  H1Vector di{};
  di[static_cast<std::size_t>(i - 1)] = 1;
  const std::int64_t c = intersection(v, di);
  H1Vector r = v;
  r[static_cast<std::size_t>(i - 1)] -= c;
  return r;
}

Grade2Element cycle_bracket(const H1Vector& u, const H1Vector& v) {
  const auto a = to_e(u), b = to_e(v);
  Grade2Element g{};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const auto [p, q] = kPairs[k];
    g[k] = a[p] * b[q] - a[q] * b[p];
  }
  return g;
}

Grade2Element pl_grade2(int i, const Grade2Element& g) {
  check_index(i);
  Grade2Element r{};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    if (g[k] == 0) continue;
    const auto [p, q] = kPairs[k];
    const Grade2Element b =
        cycle_bracket(picard_lefschetz(i, kBasis[p]), picard_lefschetz(i, kBasis[q]));
    for (std::size_t j = 0; j < 6; ++j) r[j] += g[k] * b[j];
  }
  return r;
}

Grade2Matrix pl_grade2_matrix(int i) {
  Grade2Matrix m{};
  for (std::size_t col = 0; col < 6; ++col) {
    Grade2Element e{};
    e[col] = 1;
    const Grade2Element img = pl_grade2(i, e);
    for (std::size_t row = 0; row < 6; ++row) m[row][col] = img[row];
  }
  return m;
}

Alphabet monodromy_alphabet() {
  static const Alphabet ops{"h1", "h2", "h3", "h4"};
  return ops;
}

Grade2Element apply_operator(const NcPoly& op, const Grade2Element& g) {
  require_same_alphabet(op.alphabet(), monodromy_alphabet());
  Grade2Element r{};
  for (const auto& [w, c] : op.terms()) {
    const Rational& q = c.rational();
    if (q.get_den() != 1) throw DomainError("operator coefficients must be integers");
    const std::int64_t n = q.get_num().get_si();
    Grade2Element v = g;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) v = pl_grade2(*it + 1, v);
    for (std::size_t j = 0; j < 6; ++j) r[j] += n * v[j];
  }
  return r;
}

AlphaReduction reduce_to_alpha(const Grade2Element& g) {
  const Alphabet ops = monodromy_alphabet();
  auto h = [&](Letter l) { return NcPoly::letter(ops, l); };
  const NcPoly id = NcPoly::constant(ops, 1);

  bool zero = true;
  for (auto c : g) zero = zero && c == 0;
  if (zero) throw DomainError("reduce_to_alpha: zero element");

  NcPoly total = id;
  Grade2Element cur = g;
  for (int step = 0; step < 8; ++step) {
    const std::int64_t m = cur[0], a1 = cur[1], a2 = cur[2], b1 = cur[3], b2 = cur[4];
    const bool a_zero = a1 == 0 && a2 == 0;
    const bool b_zero = b1 == 0 && b2 == 0;
    if (m == 0 && a_zero && b_zero) return {total, cur[5]};
    NcPoly q(ops);
    if (!b_zero && m == 0)
      q = b2 != 0 ? h(0) - h(2) : h(0) - h(3);  // [a1, b] or [a2, b]
    else if (!b_zero)
      q = h(0) - id;  // [d1, b]
    else if (!a_zero)
      q = h(1) - id;  // -[d2, a]
    else
      q = h(2) - h(3);  // m [d1, a2 - a1]
    cur = apply_operator(q, cur);
    total = q * total;
  }
  throw DomainError("reduce_to_alpha: reduction did not terminate");
}

}  // namespace chenlie
