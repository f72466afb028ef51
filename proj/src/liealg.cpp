#include "chenlie/liealg.hpp"

#include <algorithm>
#include <tuple>

#include "chenlie/error.hpp"
#include "chenlie/linalg.hpp"

namespace chenlie {

struct LieTree::Node {
  Letter letter = 0;
  int degree = 1;
  std::vector<LieTree> children;  // empty for a leaf, else {left, right}
};

LieTree LieTree::leaf(Letter l) {
  auto n = std::make_shared<Node>();
  n->letter = l;
  return LieTree(std::move(n));
}

LieTree LieTree::bracket(const LieTree& left, const LieTree& right) {
  auto n = std::make_shared<Node>();
  n->degree = left.degree() + right.degree();
  n->children = {left, right};
  return LieTree(std::move(n));
}

bool LieTree::is_leaf() const { return node_->children.empty(); }

Letter LieTree::letter() const {
  if (!is_leaf()) throw DomainError("bracket has no letter");
  return node_->letter;
}

const LieTree& LieTree::left() const {
  if (is_leaf()) throw DomainError("leaf has no children");
  return node_->children[0];
}

const LieTree& LieTree::right() const {
  if (is_leaf()) throw DomainError("leaf has no children");
  return node_->children[1];
}

int LieTree::degree() const { return node_->degree; }

bool operator==(const LieTree& a, const LieTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.letter() == b.letter();
  return a.degree() == b.degree() && a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const Alphabet& alphabet, const LieTree& t) {
  if (t.is_leaf()) return alphabet.name(t.letter());
  return "[" + to_string(alphabet, t.left()) + "," + to_string(alphabet, t.right()) + "]";
}

NcPoly expand(const Alphabet& alphabet, const LieTree& t) {
  if (t.is_leaf()) {
    if (t.letter() >= alphabet.size()) throw DomainError("letter index out of range");
    return NcPoly::letter(alphabet, t.letter());
  }
  return lie_bracket(expand(alphabet, t.left()), expand(alphabet, t.right()));
}

std::vector<std::vector<LieTree>> hall_set(const Alphabet& alphabet, int max_degree) {
  struct Entry {
    LieTree tree;
    int degree;
    std::size_t left;  // npos for letters
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Entry> all;
  std::vector<std::vector<LieTree>> by_degree;
  if (max_degree < 1) return by_degree;
  by_degree.emplace_back();
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    all.push_back({LieTree::leaf(static_cast<Letter>(l)), 1, npos});
    by_degree.back().push_back(all.back().tree);
  }
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<std::tuple<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (all[i].degree + all[j].degree != n) continue;
        if (all[j].left != npos && all[j].left > i) continue;
        pairs.emplace_back(i, j);
      }
    // Already sorted by (i, j).
    by_degree.emplace_back();
    for (auto [i, j] : pairs) {
      LieTree t = LieTree::bracket(all[i].tree, all[j].tree);
      by_degree.back().push_back(t);
      all.push_back({t, n, i});
    }
  }
  return by_degree;
}

HallBasis hall_basis(const Alphabet& alphabet, int k) {
  if (k < 1) throw DomainError("Hall basis degree must be >= 1");
  auto set = hall_set(alphabet, k);
  return HallBasis{alphabet, k, std::move(set.back())};
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::int64_t witt_dimension(std::int64_t m, int k) {
  if (k < 1) return 0;
  std::int64_t sum = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) sum += mobius(d) * ipow(m, k / d);
  return sum / k;
}

bool is_lie(const NcPoly& p) {
  // Accumulate <p, u*v> over every split of every word of p into two
  // complementary nonempty subsequences u, v.
  std::map<std::pair<Word, Word>, Scalar> pairing;
  for (const auto& [w, c] : p.terms()) {
    const std::size_t k = w.size();
    if (k == 0) return false;
    if (k == 1) continue;
    if (k > 24) throw DomainError("is_lie: degree too large");
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Word u, v;
      for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? u : v).push_back(w[i]);
      pairing[{u, v}] += c;
    }
  }
  return std::all_of(pairing.begin(), pairing.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

std::vector<NcPoly> shuffle_spanning_set(const Alphabet& alphabet, int k) {
  std::vector<NcPoly> out;
  const std::size_t m = alphabet.size();
  for (int r = 1; 2 * r <= k; ++r) {
    const auto us = all_words(m, static_cast<std::size_t>(r));
    const auto vs = all_words(m, static_cast<std::size_t>(k - r));
    for (const auto& u : us)
      for (const auto& v : vs) {
        if (2 * r == k && v < u) continue;
        NcPoly s(alphabet);
        for (const auto& [w, n] : shuffle_words(u, v)) s.add_term(w, Scalar(n));
        out.push_back(std::move(s));
      }
  }
  return out;
}

LieProjector::LieProjector(const Alphabet& alphabet, int k) : alphabet_(alphabet), degree_(k) {
  if (k < 1) throw DomainError("decompose: degree must be >= 1");
  for (const auto& t : hall_basis(alphabet, k).elements) expansions_.push_back(expand(alphabet, t));
  const std::size_t n = expansions_.size();
  Matrix gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram[i][j] = inner(expansions_[i], expansions_[j]).rational();
      gram[j][i] = gram[i][j];
    }
  gram_inverse_ = inverse(std::move(gram));
}

Decomposition LieProjector::operator()(const NcPoly& p) const {
  require_same_alphabet(alphabet_, p.alphabet());
  if (p.is_zero()) return {NcPoly(alphabet_), NcPoly(alphabet_)};
  if (!p.is_homogeneous() || p.max_degree() != degree_)
    throw DomainError("decompose: polynomial is not homogeneous of degree " +
                      std::to_string(degree_));
  const std::size_t n = expansions_.size();
  std::vector<Scalar> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = inner(expansions_[i], p);
  NcPoly lie(alphabet_);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar c;
    for (std::size_t j = 0; j < n; ++j)
      if (gram_inverse_[i][j] != 0 && !rhs[j].is_zero()) c += Scalar(gram_inverse_[i][j]) * rhs[j];
    if (!c.is_zero()) lie += expansions_[i] * c;
  }
  NcPoly shf = p - lie;
  return {std::move(lie), std::move(shf)};
}

Decomposition decompose(const NcPoly& p) {
  if (p.is_zero()) return {p, p};
  if (!p.is_homogeneous()) throw DomainError("decompose: polynomial is not homogeneous");
  return LieProjector(p.alphabet(), p.max_degree())(p);
}

}  // namespace chenlie
