#include <doctest.h>

#include "chenlie/error.hpp"
#include "chenlie/freegrp.hpp"
#include "chenlie/parse.hpp"
#include "oracle.hpp"

using namespace chenlie;

namespace {
const Alphabet xy{"x", "y"};
const Alphabet ab{"a", "b"};
GroupWord G(const char* s, const Alphabet& a = xy) { return parse_group_word(s, a); }
NcPoly P(const char* s, const Alphabet& a = xy) { return parse_poly(s, a); }

// Random nested commutator of generators with its bracket tree.
std::pair<GroupWord, LieTree> random_nested(oracle::Rng& rng, const Alphabet& a, int degree) {
  const LieTree t = oracle::random_tree(rng, a.size(), degree);
  return {commutator_word(a, t), t};
}
}  // namespace

TEST_CASE("products and inverses reduce") {
  CHECK(G("x") * G("x^-1") == GroupWord(xy));
  CHECK(gw_inv(G("xy")) == G("y^-1x^-1"));
  CHECK(G("xy") * G("y^-1") == G("x"));
  CHECK(to_string(gw_inv(G("xy"))) == "y^-1x^-1");
  CHECK(to_string(GroupWord(xy)) == "1");
  oracle::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupWord g = oracle::random_group_word(rng, xy, 8);
    CHECK((g * gw_inv(g)).is_identity());
    for (std::size_t i = 1; i < g.length(); ++i) {
      const auto& p = g.letters()[i - 1];
      const auto& q = g.letters()[i];
      CHECK_FALSE((p.letter == q.letter && p.exponent == -q.exponent));
    }
  }
}

TEST_CASE("commutators") {
  CHECK(to_string(commutator(G("x"), G("y"))) == "xyx^-1y^-1");
  CHECK(commutator(G("x"), G("x")).is_identity());
  CHECK(commutator(G("x"), GroupWord(xy)).is_identity());
  CHECK(G("(x,y)") == commutator(G("x"), G("y")));
}

TEST_CASE("Magnus expansion") {
  CHECK(magnus(GroupWord(xy), 3).poly() == P("1"));
  CHECK(magnus(G("x"), 2).poly() == P("1 + x + 1/2xx"));
  CHECK(homogeneous_part(magnus(G("(x,y)"), 2).poly(), 2) == P("xy - yx"));
  oracle::Rng rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const GroupWord g = oracle::random_group_word(rng, xy, 6);
    const GroupWord h = oracle::random_group_word(rng, xy, 5);
    CHECK(magnus(g, 4).poly() == oracle::magnus(g, 4).to_poly(xy));
    CHECK(magnus(g * h, 4) == magnus(g, 4) * magnus(h, 4));
  }
}

TEST_CASE("lower central series degree") {
  CHECK(lcs_degree(G("x"), 5) == LcsDegree{LcsDegree::Kind::degree, 1});
  CHECK(lcs_degree(G("(x,y)"), 5) == LcsDegree{LcsDegree::Kind::degree, 2});
  const Alphabet a12{"a1", "a2"};
  const GroupWord gamma = parse_group_word("(((a1,a2),a1),(a1,a2))", a12);
  CHECK(lcs_degree(gamma, 6) == LcsDegree{LcsDegree::Kind::degree, 5});
  CHECK(lcs_degree(gamma, 4).kind == LcsDegree::Kind::exceeds);
  CHECK(lcs_degree(GroupWord(xy), 3).kind == LcsDegree::Kind::identity);
  CHECK(lcs_degree(GroupWord(xy), 100).kind == LcsDegree::Kind::identity);

  oracle::Rng rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto [g, t] = random_nested(rng, xy, k);
    const bool lie_nonzero = !expand(xy, t).is_zero();
    const LcsDegree d = lcs_degree(g, 6);
    if (lie_nonzero) CHECK(d == LcsDegree{LcsDegree::Kind::degree, k});
    if (d.has_degree()) CHECK(d.degree >= k);
  }
}

TEST_CASE("graded inverse of the Magnus map") {
  CHECK(phi_inverse(G("x")) == P("x"));
  CHECK(phi_inverse(G("(x,y)")) == P("xy - yx"));
  CHECK(phi_inverse(parse_group_word("((a,b),a)", ab)) == parse_poly("2aba - baa - aab", ab));
  CHECK_THROWS_AS(phi_inverse(GroupWord(xy)), DomainError);

  oracle::Rng rng(34);
  for (int trial = 0; trial < 25; ++trial) {
    const int ka = 1 + static_cast<int>(rng() % 2), kb = 1 + static_cast<int>(rng() % 2);
    const auto [a, ta] = random_nested(rng, xy, ka);
    const auto [b, tb] = random_nested(rng, xy, kb);
    if (a.is_identity() || b.is_identity()) continue;
    const NcPoly pa = phi_inverse(a), pb = phi_inverse(b);
    const NcPoly bracket = pa * pb - pb * pa;
    const GroupWord c = commutator(a, b);
    if (bracket.is_zero()) continue;
    const NcPoly pc = phi_inverse(c);
    CHECK(pc == bracket);
    CHECK(oracle::is_lie_dsw(pc));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const GroupWord g = oracle::random_group_word(rng, xy, 7);
    if (g.is_identity()) continue;
    const NcPoly p = phi_inverse(g);
    CHECK(is_lie(p));
    // Leading term from the dense oracle.
    const int k = p.max_degree();
    CHECK(p == homogeneous_part(oracle::magnus(g, k).to_poly(xy), k));
  }
}
