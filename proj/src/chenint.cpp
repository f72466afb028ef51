#include "chenlie/chenint.hpp"

#include "chenlie/error.hpp"

namespace chenlie {

bool is_grouplike(const TruncSeries& s) {
  if (!s.constant_term().is_one()) throw DomainError("is_grouplike: constant term must be 1");
  const int N = s.truncation();
  const std::size_t m = s.alphabet().size();
  for (int total = 2; total <= N; ++total)
    for (int r = 1; 2 * r <= total; ++r) {
      const auto us = all_words(m, static_cast<std::size_t>(r));
      const auto vs = all_words(m, static_cast<std::size_t>(total - r));
      for (const auto& u : us) {
        const Scalar su = s.coefficient(u);
        for (const auto& v : vs) {
          if (2 * r == total && v < u) continue;
          Scalar rhs;
          for (const auto& [w, n] : shuffle_words(u, v)) {
            const Scalar c = s.coefficient(w);
            if (!c.is_zero()) rhs += c * Scalar(n);
          }
          if (!(su * s.coefficient(v) == rhs)) return false;
        }
      }
    }
  return true;
}

IntegralModel::IntegralModel(Alphabet generators, Alphabet forms, int N,
                             std::vector<TruncSeries> series)
    : generators_(std::move(generators)), forms_(std::move(forms)), N_(N) {
  if (N < 0) throw DomainError("negative truncation degree");
  if (series.size() != generators_.size())
    throw DomainError("integral model needs one series per generator");
  for (auto& s : series) {
    require_same_alphabet(s.alphabet(), forms_);
    if (s.truncation() < N) throw DomainError("generator series truncated below model degree");
    TruncSeries t(s.poly(), N);
    if (!t.constant_term().is_one() || !is_grouplike(t))
      throw DomainError("generator series is not group-like");
    inverse_series_.push_back(ts_inv(t));
    series_.push_back(std::move(t));
  }
}

TruncSeries IntegralModel::path_series(const GroupWord& g) const {
  require_same_alphabet(g.alphabet(), generators_);
  TruncSeries s = TruncSeries::one(forms_, N_);
  for (const auto& x : g.letters())
    s = s * (x.exponent > 0 ? series_ : inverse_series_)[x.letter];
  return s;
}

IntegralModel canonical_model(const Alphabet& alphabet, int N) {
  std::vector<TruncSeries> series;
  for (std::size_t l = 0; l < alphabet.size(); ++l)
    series.push_back(ts_exp(TruncSeries(NcPoly::letter(alphabet, static_cast<Letter>(l)), N)));
  return IntegralModel(alphabet, alphabet, N, std::move(series));
}

Scalar evaluate(const IntegralModel& model, const GroupWord& g, const NcPoly& omega) {
  require_same_alphabet(omega.alphabet(), model.forms());
  if (omega.max_degree() > model.truncation())
    throw DomainError("evaluate: form degree " + std::to_string(omega.max_degree()) +
                      " exceeds model truncation " + std::to_string(model.truncation()));
  if (omega.is_zero()) return Scalar(0);
  return inner(model.path_series(g).poly(), omega);
}

PairingTable PairingTable::identity(const Alphabet& alphabet) {
  PairingTable t{alphabet, alphabet, {}};
  t.values.assign(alphabet.size(), std::vector<Scalar>(alphabet.size()));
  for (std::size_t i = 0; i < alphabet.size(); ++i) t.values[i][i] = 1;
  return t;
}

PairingTable PairingTable::symbolic(const Alphabet& generators, const Alphabet& forms,
                                    const std::string& prefix) {
  PairingTable t{generators, forms, {}};
  t.values.resize(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < forms.size(); ++j)
      t.values[i].push_back(Scalar::var(prefix + "_" + generators.name(static_cast<Letter>(i)) +
                                        "_" + forms.name(static_cast<Letter>(j))));
  return t;
}

Scalar pair_graded(const PairingTable& table, const GroupWord& g, const NcPoly& omega) {
  require_same_alphabet(g.alphabet(), table.generators);
  require_same_alphabet(omega.alphabet(), table.forms);
  if (table.values.size() != table.generators.size())
    throw DomainError("pairing table has the wrong number of rows");
  for (const auto& row : table.values)
    if (row.size() != table.forms.size())
      throw DomainError("pairing table has the wrong number of columns");
  if (omega.is_zero()) return Scalar(0);
  if (!omega.is_homogeneous()) throw DomainError("pair_graded: form is not homogeneous");
  const int k = omega.max_degree();
  if (k == 0) throw DomainError("pair_graded: degree mismatch (form of degree 0)");
  if (g.is_identity()) return Scalar(0);
  const TruncSeries s = magnus(g, k);
  const int lowest = s.poly().terms().size() > 1
                         ? static_cast<int>(std::next(s.poly().terms().begin())->first.size())
                         : k + 1;
  if (lowest < k)
    throw DomainError("pair_graded: degree mismatch (group word has lower central degree " +
                      std::to_string(lowest) + " < " + std::to_string(k) + ")");
  const NcPoly leading = homogeneous_part(s.poly(), k);
  Scalar total;
  for (const auto& [i, a] : leading.terms())
    for (const auto& [j, b] : omega.terms()) {
      Scalar prod = a * b;
      for (int pos = 0; pos < k && !prod.is_zero(); ++pos) prod *= table.values[i[pos]][j[pos]];
      total += prod;
    }
  return total;
}

}  // namespace chenlie
