#include <doctest.h>

#include "chenlie/linalg.hpp"
#include "chenlie/liealg.hpp"
#include "chenlie/parse.hpp"
#include "oracle.hpp"

using namespace chenlie;

namespace {
const Alphabet xy{"x", "y"};
const Alphabet xyz{"x", "y", "z"};
NcPoly E(const char* s, const Alphabet& a = xy) { return expand(a, parse_lie(s, a)); }
NcPoly P(const char* s, const Alphabet& a = xy) { return parse_poly(s, a); }
}  // namespace

TEST_CASE("bracket expansion") {
  CHECK(E("[x,y]") == P("xy - yx"));
  CHECK(E("[[x,y],x]") == P("xyx - yxx - xxy + xyx"));
  CHECK(E("[x,[x,y]]").is_homogeneous());
  CHECK(E("[x,[x,y]]").max_degree() == 3);
}

TEST_CASE("inner products of degree-5 brackets") {
  CHECK(inner(E("[y,[x,[x,[x,y]]]]"), E("[[x,y],[x,[x,y]]]")) == Scalar(-28));
  CHECK(inner(E("[y,[y,[x,[x,y]]]]"), E("[[x,y],[y,[x,y]]]")) == Scalar(-14));
}

TEST_CASE("antisymmetry and Jacobi on random trees") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const LieTree a = oracle::random_tree(rng, 3, 1 + static_cast<int>(rng() % 3));
    const LieTree b = oracle::random_tree(rng, 3, 1 + static_cast<int>(rng() % 3));
    const LieTree c = oracle::random_tree(rng, 3, 1 + static_cast<int>(rng() % 2));
    CHECK(expand(xyz, LieTree::bracket(a, b)) == -expand(xyz, LieTree::bracket(b, a)));
    const NcPoly j = expand(xyz, LieTree::bracket(a, LieTree::bracket(b, c))) +
                     expand(xyz, LieTree::bracket(b, LieTree::bracket(c, a))) +
                     expand(xyz, LieTree::bracket(c, LieTree::bracket(a, b)));
    CHECK(j.is_zero());
  }
}

TEST_CASE("Hall basis sizes, examples and independence") {
  CHECK(hall_basis(xy, 1).elements.size() == 2);
  const auto b2 = hall_basis(xy, 2).elements;
  REQUIRE(b2.size() == 1);
  CHECK(to_string(xy, b2[0]) == "[x,y]");
  CHECK(hall_basis(xy, 5).elements.size() == 6);
  for (std::int64_t m = 1; m <= 3; ++m)
    for (int k = 1; k <= 5; ++k) {
      std::vector<std::string> names;
      for (std::int64_t i = 0; i < m; ++i) names.push_back(xyz.names()[static_cast<std::size_t>(i)]);
      const Alphabet a(names);
      const HallBasis b = hall_basis(a, k);
      CHECK(static_cast<std::int64_t>(b.elements.size()) == oracle::witt(m, k));
      CHECK(witt_dimension(m, k) == oracle::witt(m, k));
      std::vector<NcPoly> ex;
      for (const auto& t : b.elements) {
        CHECK(t.degree() == k);
        ex.push_back(expand(a, t));
      }
      CHECK(rank(ex) == b.elements.size());
    }
}

TEST_CASE("degree-3 and degree-4 Hall elements are pairwise orthogonal") {
  for (int k : {3, 4}) {
    const auto els = hall_basis(xy, k).elements;
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i + 1; j < els.size(); ++j)
        CHECK(inner(expand(xy, els[i]), expand(xy, els[j])).is_zero());
  }
}

TEST_CASE("Ree criterion") {
  CHECK(is_lie(P("xy - yx")));
  CHECK_FALSE(is_lie(P("xy + yx")));
  CHECK_FALSE(is_lie(P("1")));
  CHECK(is_lie(NcPoly(xy)));
  CHECK(is_lie(P("x") + E("[x,[x,y]]")));  // mixed degrees, per part
  oracle::Rng rng(22);
  for (int k = 1; k <= 4; ++k)
    for (int trial = 0; trial < 15; ++trial) {
      const NcPoly p = oracle::random_homogeneous(rng, xyz, k, 3);
      CHECK(is_lie(p) == oracle::is_lie_dsw(p));
      const LieTree t = oracle::random_tree(rng, 3, k);
      const NcPoly q = expand(xyz, t) * Scalar(3) + p * Scalar(0);
      CHECK(is_lie(q));
      CHECK(oracle::is_lie_dsw(q));
    }
}

TEST_CASE("decomposition") {
  const Decomposition d = decompose(P("xy"));
  CHECK(d.lie == P("1/2xy - 1/2yx"));
  CHECK(d.shuffle == P("1/2xy + 1/2yx"));
  const NcPoly l = E("[x,[x,y]]");
  CHECK(decompose(l).lie == l);
  CHECK(decompose(l).shuffle.is_zero());
  const NcPoly s = shuffle(shuffle(P("x"), P("y")), P("x"));
  CHECK(decompose(s).lie.is_zero());
  CHECK(decompose(s).shuffle == s);
  CHECK_FALSE(is_lie(s));

  oracle::Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const NcPoly p = oracle::random_homogeneous(rng, xyz, 3, 5);
    const Decomposition parts = decompose(p);
    CHECK(parts.lie + parts.shuffle == p);
    CHECK(oracle::is_lie_dsw(parts.lie));
    for (const auto& t : hall_basis(xyz, 3).elements) CHECK(inner(parts.shuffle, expand(xyz, t)).is_zero());
    CHECK(decompose(parts.lie).shuffle.is_zero());
    CHECK(decompose(parts.shuffle).lie.is_zero());
  }
}

TEST_CASE("Lie and shuffle parts have complementary dimensions") {
  for (int k = 2; k <= 4; ++k) {
    const std::size_t lie = rank(LieProjector(xy, k).basis());
    const std::size_t shf = rank(shuffle_spanning_set(xy, k));
    CHECK(lie + shf == (std::size_t{1} << k));
  }
}
