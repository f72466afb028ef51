#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "chenlie/chenint.hpp"
#include "chenlie/cli.hpp"
#include "chenlie/error.hpp"
#include "chenlie/freegrp.hpp"
#include "chenlie/liealg.hpp"
#include "chenlie/melnikov.hpp"
#include "chenlie/parse.hpp"

namespace py = pybind11;
using namespace chenlie;

namespace {

// LieTree does not know its alphabet; the Python object carries both.
struct PyLie {
  Alphabet alphabet;
  LieTree tree;
};

Alphabet resolve(const std::optional<Alphabet>& a, const std::vector<std::string>& texts) {
  if (a) return *a;
  std::vector<std::string_view> views(texts.begin(), texts.end());
  return infer_alphabet(views);
}

Poly poly_arg(const std::string& text) {
  const Scalar s = parse_scalar(text);
  if (s.denominator() != Poly(1)) throw DomainError("expected a polynomial, got " + s.str());
  return s.numerator();
}

py::object lcs_result(const LcsDegree& d) {
  switch (d.kind) {
    case LcsDegree::Kind::degree:
      return py::int_(d.degree);
    case LcsDegree::Kind::identity:
      return py::str("identity");
    case LcsDegree::Kind::exceeds:
      break;
  }
  return py::str("exceeds");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact free Lie algebra, shuffle algebra and iterated-integral computations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>(), py::arg("names"))
      .def_property_readonly("names", &Alphabet::names)
      .def("__len__", &Alphabet::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Alphabet& a) {
        std::string s = "Alphabet([";
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", '" : "'") + a.names()[i] + "'";
        return s + "])";
      });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return parse_scalar(text); }), py::arg("text"))
      .def(py::init<long>())
      .def("is_zero", &Scalar::is_zero)
      .def("is_rational", &Scalar::is_rational)
      .def("derivative_t", &Scalar::derivative_t)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; });

  py::class_<NcPoly>(m, "NcPoly")
      .def(py::init([](const std::string& text, std::optional<Alphabet> a) {
             return parse_poly(text, resolve(a, {text}));
           }),
           py::arg("text"), py::arg("alphabet") = py::none())
      .def_property_readonly("alphabet", &NcPoly::alphabet)
      .def("is_zero", &NcPoly::is_zero)
      .def("max_degree", &NcPoly::max_degree)
      .def("min_degree", &NcPoly::min_degree)
      .def("is_homogeneous", &NcPoly::is_homogeneous)
      .def("terms",
           [](const NcPoly& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [w, c] : p.terms()) out.emplace_back(to_string(p.alphabet(), w), c.str());
             return out;
           })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Scalar())
      .def(Scalar() * py::self)
      .def(-py::self)
      .def("__str__", &NcPoly::str)
      .def("__repr__", [](const NcPoly& p) { return "NcPoly('" + p.str() + "')"; });

  py::class_<PyLie>(m, "LieTree")
      .def(py::init([](const std::string& text, std::optional<Alphabet> a) {
             const Alphabet al = resolve(a, {text});
             return PyLie{al, parse_lie(text, al)};
           }),
           py::arg("text"), py::arg("alphabet") = py::none())
      .def_property_readonly("alphabet", [](const PyLie& t) { return t.alphabet; })
      .def_property_readonly("degree", [](const PyLie& t) { return t.tree.degree(); })
      .def("expand", [](const PyLie& t) { return expand(t.alphabet, t.tree); })
      .def("__eq__", [](const PyLie& a, const PyLie& b) { return a.alphabet == b.alphabet && a.tree == b.tree; })
      .def("__str__", [](const PyLie& t) { return to_string(t.alphabet, t.tree); })
      .def("__repr__", [](const PyLie& t) { return "LieTree('" + to_string(t.alphabet, t.tree) + "')"; });

  py::class_<GroupWord>(m, "GroupWord")
      .def(py::init([](const std::string& text, std::optional<Alphabet> a) {
             return parse_group_word(text, resolve(a, {text}));
           }),
           py::arg("text"), py::arg("alphabet") = py::none())
      .def_property_readonly("alphabet", &GroupWord::alphabet)
      .def("__len__", &GroupWord::length)
      .def("is_identity", &GroupWord::is_identity)
      .def("inverse", &gw_inv)
      .def(py::self == py::self)
      .def(py::self * py::self)
      .def("__str__", [](const GroupWord& g) { return to_string(g); })
      .def("__repr__", [](const GroupWord& g) { return "GroupWord('" + to_string(g) + "')"; });

  py::class_<TruncSeries>(m, "TruncSeries")
      .def(py::init<NcPoly, int>(), py::arg("poly"), py::arg("N"))
      .def_property_readonly("truncation", &TruncSeries::truncation)
      .def_property_readonly("poly", &TruncSeries::poly)
      .def_property_readonly("mixed_truncation", &TruncSeries::mixed_truncation)
      .def(py::self == py::self)
      .def("__mul__", &ts_mul)
      .def("__str__", &TruncSeries::str);

  m.def("infer_alphabet", [](const std::vector<std::string>& texts) { return resolve(std::nullopt, texts); });
  m.def("parse_alphabet", &parse_alphabet);

  // ncalg / liealg
  m.def("concat_mul", &concat_mul);
  m.def("shuffle", &shuffle);
  m.def("inner", &inner);
  m.def("homogeneous_part", &homogeneous_part);
  m.def("lie_bracket", &lie_bracket);
  m.def("is_lie", &is_lie);
  m.def("decompose", [](const NcPoly& p) {
    const Decomposition d = decompose(p);
    return py::make_tuple(d.lie, d.shuffle);
  });
  m.def("hall_basis", [](const Alphabet& a, int k) {
    std::vector<PyLie> out;
    for (const auto& t : hall_basis(a, k).elements) out.push_back({a, t});
    return out;
  });
  m.def("witt_dimension", &witt_dimension);

  // freegrp
  m.def("commutator", &commutator);
  m.def("magnus", &magnus, py::arg("g"), py::arg("N"));
  m.def("lcs_degree", [](const GroupWord& g, int n_max) { return lcs_result(lcs_degree(g, n_max)); },
        py::arg("g"), py::arg("n_max"));
  m.def("phi_inverse", &phi_inverse, py::arg("g"), py::arg("max_degree") = 0);

  // chenint
  m.def("ts_exp", &ts_exp);
  m.def("ts_log", &ts_log);
  m.def("ts_inv", &ts_inv);
  m.def("is_grouplike", &is_grouplike);
  m.def(
      "evaluate_canonical",
      [](const GroupWord& g, const NcPoly& omega, int N) {
        require_same_alphabet(g.alphabet(), omega.alphabet());
        const int n = N > 0 ? N : std::max(1, omega.max_degree());
        return evaluate(canonical_model(g.alphabet(), n), g, omega);
      },
      py::arg("g"), py::arg("omega"), py::arg("N") = 0);
  m.def(
      "pair_graded",
      [](const GroupWord& g, const NcPoly& omega, std::optional<std::vector<std::vector<std::string>>> table) {
        PairingTable t = PairingTable::symbolic(g.alphabet(), omega.alphabet());
        if (table) {
          t.values.clear();
          for (const auto& row : *table) {
            t.values.emplace_back();
            for (const auto& v : row) t.values.back().push_back(parse_scalar(v));
          }
        }
        return pair_graded(t, g, omega);
      },
      py::arg("g"), py::arg("omega"), py::arg("table") = py::none());

  // melnikov
  py::class_<Connection>(m, "Connection")
      .def(py::init([](const Alphabet& forms, const std::string& delta,
                       const std::vector<std::vector<std::string>>& matrix) {
             std::vector<std::vector<Poly>> a;
             for (const auto& row : matrix) {
               a.emplace_back();
               for (const auto& v : row) a.back().push_back(poly_arg(v));
             }
             return Connection(forms, poly_arg(delta), std::move(a));
           }),
           py::arg("forms"), py::arg("delta"), py::arg("matrix"))
      .def_static(
          "diagonal",
          [](const Alphabet& forms, const std::vector<std::string>& weights) {
            std::vector<Poly> w;
            for (const auto& s : weights) w.push_back(poly_arg(s));
            return Connection::diagonal(forms, w);
          },
          py::arg("forms"), py::arg("weights"))
      .def_property_readonly("forms", &Connection::forms);
  m.def("derive", &derive);
  m.def("melnikov_integrand", &melnikov_integrand, py::arg("conn"), py::arg("omega"), py::arg("k"));
  m.def(
      "pk_closed_form",
      [](int k, int i, const std::string& w1, const std::string& w2) {
        return pk_closed_form(WeightPair{poly_arg(w1), poly_arg(w2)}, k, i);
      },
      py::arg("k"), py::arg("i"), py::arg("w1") = "w1", py::arg("w2") = "w2");
  m.def(
      "ck", [](int k, const std::string& w1, const std::string& w2) { return ck({poly_arg(w1), poly_arg(w2)}, k); },
      py::arg("k"), py::arg("w1") = "w1", py::arg("w2") = "w2");
  m.def(
      "ck_closed_form",
      [](int k, const std::string& w1, const std::string& w2) {
        return ck_closed_form({poly_arg(w1), poly_arg(w2)}, k);
      },
      py::arg("k"), py::arg("w1") = "w1", py::arg("w2") = "w2");
  m.def("example_ex_m5", &example_ex_m5);
  m.def("intersection", &intersection);
  m.def("picard_lefschetz", &picard_lefschetz);
  m.def("pl_grade2", &pl_grade2);
  m.def("pl_grade2_matrix", &pl_grade2_matrix);
  m.def("monodromy_alphabet", &monodromy_alphabet);
  m.def("apply_operator", &apply_operator);
  m.def("reduce_to_alpha", [](const Grade2Element& g) {
    const AlphaReduction r = reduce_to_alpha(g);
    return py::make_tuple(r.op, r.k);
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::ostringstream out, err;
        std::istringstream in(stdin_text);
        const int code = cli::run(args, out, err, in);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
