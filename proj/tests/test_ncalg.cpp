#include <doctest.h>

#include "chenlie/error.hpp"
#include "chenlie/liealg.hpp"
#include "chenlie/ncpoly.hpp"
#include "chenlie/parse.hpp"
#include "oracle.hpp"

using namespace chenlie;

namespace {
const Alphabet xyz{"x", "y", "z"};
NcPoly P(const char* s) { return parse_poly(s, xyz); }
}  // namespace

TEST_CASE("concatenation") {
  CHECK(P("x") * P("y") == P("xy"));
  const NcPoly p = P("2xy - 1/3 z");
  CHECK(NcPoly::constant(xyz, 1) * p == p);
  CHECK(P("xy - yx") * P("x") == P("xyx - yxx"));
  CHECK((P("x") * P("y")).max_degree() == 2);
}

TEST_CASE("shuffle: worked example and unit") {
  const Alphabet o{"o1", "o2", "o3"};
  const NcPoly lhs = shuffle(parse_poly("o1o2", o), parse_poly("o3", o));
  CHECK(lhs == parse_poly("o1o2o3 + o1o3o2 + o3o1o2", o));
  CHECK(shuffle(NcPoly::constant(xyz, 1), P("xyz")) == P("xyz"));
  CHECK(shuffle(P("x"), P("x")) == P("2xx"));
}

TEST_CASE("shuffle agrees with subset enumeration and has binomial mass") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng() % 5, s = rng() % 5;
    const Word u = oracle::random_word(rng, 3, r), v = oracle::random_word(rng, 3, s);
    const auto lib = shuffle_words(u, v);
    CHECK(lib == oracle::shuffle_words(u, v));
    long mass = 0;
    for (const auto& [w, n] : lib) mass += n;
    CHECK(mass == oracle::binomial(static_cast<int>(r + s), static_cast<int>(r)));
  }
}

TEST_CASE("shuffle pairing counts interleavings") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = oracle::random_word(rng, 2, 2), v = oracle::random_word(rng, 2, 2);
    const Word w = oracle::random_word(rng, 2, 4);
    long count = 0;
    const auto sh = oracle::shuffle_words(u, v);
    if (auto it = sh.find(w); it != sh.end()) count = it->second;
    CHECK(inner(shuffle(NcPoly::word(xyz, u), NcPoly::word(xyz, v)), NcPoly::word(xyz, w)) == Scalar(count));
  }
}

TEST_CASE("algebraic laws on random polynomials") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const NcPoly a = oracle::random_poly(rng, xyz, 2, 3);
    const NcPoly b = oracle::random_poly(rng, xyz, 2, 3);
    const NcPoly c = oracle::random_poly(rng, xyz, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(shuffle(a, b) == shuffle(b, a));
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
    CHECK(shuffle(a, b + c) == shuffle(a, b) + shuffle(a, c));
    CHECK(shuffle(a, b) == oracle::shuffle(a, b));
  }
}

TEST_CASE("inner product") {
  CHECK(inner(P("xy"), P("xy")) == Scalar(1));
  CHECK(inner(P("xy"), P("yx")) == Scalar(0));
  CHECK(inner(P("x"), P("xx")) == Scalar(0));
  const NcPoly a = expand(xyz, parse_lie("[y,[x,z]]", xyz));
  const NcPoly b = expand(xyz, parse_lie("[z,[x,y]]", xyz));
  CHECK(inner(a, b) == Scalar(2));

  oracle::Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const NcPoly p = oracle::random_poly(rng, xyz, 3, 4), q = oracle::random_poly(rng, xyz, 3, 4);
    CHECK(inner(p, q) == inner(q, p));
    const Scalar n = inner(p, p);
    CHECK(n.is_zero() == p.is_zero());
    if (!p.is_zero()) CHECK(n.rational() > 0);
  }
}

TEST_CASE("homogeneous parts") {
  CHECK(homogeneous_part(P("1 + x + xy"), 2) == P("xy"));
  CHECK(homogeneous_part(P("1 + x + xy"), 7).is_zero());
  const NcPoly l = expand(xyz, parse_lie("[x,[x,y]]", xyz));
  CHECK(homogeneous_part(l, 3) == l);
  oracle::Rng rng(15);
  const NcPoly p = oracle::random_poly(rng, xyz, 4, 8);
  NcPoly sum(xyz);
  for (int k = 0; k <= 4; ++k) sum += homogeneous_part(p, k);
  CHECK(sum == p);
}

TEST_CASE("alphabet mismatch is an error") {
  const Alphabet other{"x", "y"};
  CHECK_THROWS_AS(concat_mul(P("x"), parse_poly("x", other)), AlphabetMismatch);
  CHECK_THROWS_AS(shuffle(P("x"), parse_poly("x", other)), AlphabetMismatch);
  CHECK_THROWS_AS(inner(P("x"), parse_poly("x", other)), AlphabetMismatch);
  // Same names built separately compare equal.
  CHECK_NOTHROW(inner(P("x"), parse_poly("x", Alphabet{"x", "y", "z"})));
}

TEST_CASE("canonical printing is length-lexicographic") {
  CHECK(P("yx + xy + x + 3").str() == "3 + x + xy + yx");
  CHECK(P("-xy").str() == "-xy");
  CHECK(P("1/2xx - 2/3yz").str() == "1/2*xx - 2/3*yz");
  CHECK(NcPoly(xyz).str() == "0");
  CHECK(P("{w2 - w1}xy").str() == "{w2 - w1}*xy");
}
