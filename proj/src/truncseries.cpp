#include "chenlie/truncseries.hpp"

#include <algorithm>

#include "chenlie/error.hpp"

namespace chenlie {

TruncSeries::TruncSeries(NcPoly poly, int N) : poly_(poly.alphabet()), N_(N) {
  if (N < 0) throw DomainError("negative truncation degree");
  for (const auto& [w, c] : poly.terms())
    if (static_cast<int>(w.size()) <= N) poly_.add_term(w, c);
}

TruncSeries TruncSeries::one(const Alphabet& alphabet, int N) {
  return TruncSeries(NcPoly::constant(alphabet, 1), N);
}

std::string TruncSeries::str() const {
  return poly_.str() + " + O(" + std::to_string(N_ + 1) + ")";
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(a.poly_ + b.poly_, std::min(a.N_, b.N_));
  r.mixed_ = a.mixed_ || b.mixed_ || a.N_ != b.N_;
  return r;
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b) {
  return ts_add(a, TruncSeries(-b.poly(), b.truncation()));
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const int N = std::min(a.N_, b.N_);
  NcPoly prod(a.alphabet());
  for (const auto& [u, x] : a.poly_.terms()) {
    if (static_cast<int>(u.size()) > N) break;
    for (const auto& [v, y] : b.poly_.terms()) {
      if (static_cast<int>(u.size() + v.size()) > N) break;
      prod.add_term(u + v, x * y);
    }
  }
  TruncSeries r(std::move(prod), N);
  r.mixed_ = a.mixed_ || b.mixed_ || a.N_ != b.N_;
  return r;
}

TruncSeries ts_exp(const TruncSeries& p) {
  if (!p.constant_term().is_zero()) throw DomainError("ts_exp: constant term must be zero");
  const int N = p.truncation();
  TruncSeries sum = TruncSeries::one(p.alphabet(), N);
  TruncSeries power = sum;
  for (int n = 1; n <= N; ++n) {
    power = ts_mul(power, p);
    power = TruncSeries(power.poly() * Scalar::fraction(1, n), N);
    if (power.poly().is_zero()) break;
    sum = ts_add(sum, power);
  }
  return sum;
}

namespace {

TruncSeries augmentation(const TruncSeries& s, const char* op) {
  if (!s.constant_term().is_one())
    throw DomainError(std::string(op) + ": constant term must be 1");
  return ts_sub(s, TruncSeries::one(s.alphabet(), s.truncation()));
}

}  // namespace

TruncSeries ts_log(const TruncSeries& s) {
  const TruncSeries x = augmentation(s, "ts_log");
  const int N = s.truncation();
  TruncSeries sum(NcPoly(s.alphabet()), N);
  TruncSeries power = TruncSeries::one(s.alphabet(), N);
  for (int n = 1; n <= N; ++n) {
    power = ts_mul(power, x);
    if (power.poly().is_zero()) break;
    const Scalar c = Scalar::fraction(n % 2 ? 1 : -1, n);
    sum = ts_add(sum, TruncSeries(power.poly() * c, N));
  }
  return sum;
}

TruncSeries ts_inv(const TruncSeries& s) {
  const TruncSeries x = augmentation(s, "ts_inv");
  const int N = s.truncation();
  const TruncSeries minus_x(-x.poly(), N);
  TruncSeries sum = TruncSeries::one(s.alphabet(), N);
  TruncSeries power = sum;
  for (int n = 1; n <= N; ++n) {
    power = ts_mul(power, minus_x);
    if (power.poly().is_zero()) break;
    sum = ts_add(sum, power);
  }
  return sum;
}

}  // namespace chenlie
