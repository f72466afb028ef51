#pragma once

// Elements of the tensor algebra truncated above a fixed degree N.

#include "chenlie/ncpoly.hpp"

namespace chenlie {

class TruncSeries {
 public:
  // Drops every term of degree > N.
  TruncSeries(NcPoly poly, int N);
  static TruncSeries one(const Alphabet& alphabet, int N);

  int truncation() const { return N_; }
  const NcPoly& poly() const { return poly_; }
  const Alphabet& alphabet() const { return poly_.alphabet(); }
  Scalar constant_term() const { return poly_.coefficient(Word()); }
  Scalar coefficient(const Word& w) const { return poly_.coefficient(w); }

  // Set when the value came from operands with different truncation degrees;
  // the result then carries the smaller one.
  bool mixed_truncation() const { return mixed_; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.N_ == b.N_ && a.poly_ == b.poly_;
  }

  std::string str() const;

 private:
  friend TruncSeries ts_mul(const TruncSeries&, const TruncSeries&);
  friend TruncSeries ts_add(const TruncSeries&, const TruncSeries&);
  NcPoly poly_;
  int N_;
  bool mixed_ = false;
};

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return ts_mul(a, b); }

// exp of a series with zero constant term.
TruncSeries ts_exp(const TruncSeries& p);
// log and inverse of a series with constant term 1.
TruncSeries ts_log(const TruncSeries& s);
TruncSeries ts_inv(const TruncSeries& s);

}  // namespace chenlie
