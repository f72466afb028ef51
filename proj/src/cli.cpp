#include "chenlie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "chenlie/error.hpp"
#include "chenlie/freegrp.hpp"
#include "chenlie/liealg.hpp"
#include "chenlie/parse.hpp"

namespace chenlie::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  Json json;
  std::string text;
  int code = kExitOk;
};

struct Context {
  std::istream& in;
  std::string alphabet;  // --alphabet, may be empty
  std::string stdin_cache;
  bool stdin_read = false;

  std::string arg(const std::string& s) {
    if (s != "-") return s;
    if (!stdin_read) {
      stdin_cache.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      while (!stdin_cache.empty() && (stdin_cache.back() == '\n' || stdin_cache.back() == '\r'))
        stdin_cache.pop_back();
      stdin_read = true;
    }
    return stdin_cache;
  }

  Alphabet letters(const std::vector<std::string>& texts) const {
    if (!alphabet.empty()) return parse_alphabet(alphabet);
    std::vector<std::string_view> views(texts.begin(), texts.end());
    return infer_alphabet(views);
  }
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Json names_of(const Alphabet& a) { return Json(a.names()); }

Json terms_of(const NcPoly& p) {
  Json arr = Json::array();
  for (const auto& [w, c] : p.terms())
    arr.push_back(Json{{"word", to_string(p.alphabet(), w)}, {"coefficient", c.str()}});
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

Alphabet alphabet_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw Error(std::string("missing \"") + key + "\" array");
  std::vector<std::string> names;
  for (const auto& n : doc[key]) {
    if (!n.is_string() || !is_letter_name(n.get<std::string>()))
      throw Error(std::string("invalid letter name in \"") + key + "\"");
    names.push_back(n.get<std::string>());
  }
  return Alphabet(std::move(names));
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error("scalars must be given as strings or integers");
}

Poly poly_of(const Scalar& s, const std::string& what) {
  if (!s.denominator().is_constant() || s.denominator() != Poly(1))
    throw Error(what + " must be a polynomial");
  return s.numerator();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

WeightPair weights_of(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 2) throw Error("--weights expects two comma-separated scalars");
  return {poly_of(parse_scalar(parts[0]), "weight"), poly_of(parse_scalar(parts[1]), "weight")};
}

std::vector<std::int64_t> integers_of(const std::vector<std::string>& args) {
  std::vector<std::int64_t> v;
  for (const auto& a : args)
    for (const auto& part : split_commas(a)) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != part.size()) throw Error("not an integer: '" + part + "'");
      v.push_back(x);
    }
  return v;
}

Json vector_json(const auto& v) {
  Json arr = Json::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

std::string vector_text(const auto& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

Connection connection_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  const Alphabet forms = alphabet_field(doc, "alphabet");
  if (doc.contains("weights")) {
    std::vector<Poly> w;
    for (const auto& v : doc["weights"]) w.push_back(poly_of(parse_scalar(scalar_text(v)), "weight"));
    return Connection::diagonal(forms, w);
  }
  if (!doc.contains("matrix")) throw Error("connection needs \"matrix\" or \"weights\"");
  const Poly delta =
      doc.contains("delta_poly") ? poly_of(parse_scalar(scalar_text(doc["delta_poly"])), "delta_poly") : Poly(1);
  std::vector<std::vector<Poly>> a;
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array()) throw Error("\"matrix\" must be an array of rows");
    a.emplace_back();
    for (const auto& v : row) a.back().push_back(poly_of(parse_scalar(scalar_text(v)), "matrix entry"));
  }
  return Connection(forms, delta, std::move(a));
}

PairingTable table_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  const Alphabet gens = alphabet_field(doc, "generators");
  const Alphabet forms = alphabet_field(doc, "alphabet");
  if (!doc.contains("table")) return PairingTable::symbolic(gens, forms);
  PairingTable t{gens, forms, {}};
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) throw Error("\"table\" must be an array of rows");
    t.values.emplace_back();
    for (const auto& v : row) t.values.back().push_back(parse_scalar(scalar_text(v)));
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact computations in free Lie algebras, shuffle algebras, iterated integrals "
               "and Melnikov functions.",
               "chenlie"};
  app.require_subcommand(1);
  bool json = false;
  Context ctx{in, {}, {}, false};
  app.add_flag("--json", json, "Emit a JSON document instead of text");
  app.add_option("--alphabet", ctx.alphabet,
                 "Comma-separated letters, in order (default: inferred from the input)");
  app.fallthrough();

  std::map<CLI::App*, std::function<Result()>> actions;
  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    return sub;
  };

  // hall
  int hall_m = 2, hall_k = 0;
  {
    auto* sub = command("hall", "Hall basis of the degree-k free Lie algebra");
    sub->add_option("-m", hall_m, "Number of letters (x, y, z, or x1..xm beyond 3)")
        ->check(CLI::Range(1, 256));
    sub->add_option("-k", hall_k, "Degree")->required()->check(CLI::PositiveNumber);
    actions[sub] = [&]() {
      Alphabet a;
      if (!ctx.alphabet.empty()) {
        a = parse_alphabet(ctx.alphabet);
      } else {
        std::vector<std::string> names;
        static const char* small[] = {"x", "y", "z"};
        for (int i = 0; i < hall_m; ++i)
          names.push_back(hall_m <= 3 ? small[i] : "x" + std::to_string(i + 1));
        a = Alphabet(names);
      }
      const HallBasis b = hall_basis(a, hall_k);
      Result r{header("hall"), {}};
      r.json["alphabet"] = names_of(a);
      r.json["degree"] = hall_k;
      r.json["count"] = b.elements.size();
      r.json["witt"] = witt_dimension(static_cast<std::int64_t>(a.size()), hall_k);
      Json els = Json::array();
      for (const auto& t : b.elements) {
        const std::string s = to_string(a, t);
        const std::string e = expand(a, t).str();
        els.push_back(Json{{"bracket", s}, {"expansion", e}});
        r.text += s + " = " + e + "\n";
      }
      r.json["elements"] = els;
      return r;
    };
  }

  // expand / islie / project: single polynomial argument
  std::string poly_arg;
  {
    auto* sub = command("expand", "Expand brackets into a noncommutative polynomial");
    sub->add_option("EXPR", poly_arg, "Polynomial or bracket expression ('-' reads stdin)")->required();
    actions[sub] = [&]() {
      const std::string e = ctx.arg(poly_arg);
      const Alphabet a = ctx.letters({e});
      const NcPoly p = parse_poly(e, a);
      Result r{header("expand"), p.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["input"] = e;
      r.json["result"] = p.str();
      r.json["terms"] = terms_of(p);
      return r;
    };
  }
  {
    auto* sub = command("islie", "Ree's criterion: is the polynomial a Lie element?");
    sub->add_option("EXPR", poly_arg, "Polynomial ('-' reads stdin)")->required();
    actions[sub] = [&]() {
      const std::string e = ctx.arg(poly_arg);
      const Alphabet a = ctx.letters({e});
      const bool lie = is_lie(parse_poly(e, a));
      Result r{header("islie"), lie ? "true\n" : "false\n"};
      r.json["alphabet"] = names_of(a);
      r.json["input"] = e;
      r.json["result"] = lie;
      return r;
    };
  }
  {
    auto* sub = command("project", "Split a polynomial into its Lie part and its shuffle part");
    sub->add_option("EXPR", poly_arg, "Polynomial without constant term ('-' reads stdin)")->required();
    actions[sub] = [&]() {
      const std::string e = ctx.arg(poly_arg);
      const Alphabet a = ctx.letters({e});
      const NcPoly p = parse_poly(e, a);
      if (!p.coefficient(Word()).is_zero()) throw DomainError("project: constant term is not allowed");
      NcPoly lie(a), shf(a);
      for (int d = 1; d <= p.max_degree(); ++d) {
        const Decomposition part = decompose(homogeneous_part(p, d));
        lie += part.lie;
        shf += part.shuffle;
      }
      Result r{header("project"), "lie: " + lie.str() + "\nshuffle: " + shf.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["input"] = e;
      r.json["lie"] = lie.str();
      r.json["shuffle"] = shf.str();
      return r;
    };
  }

  // shuffle / pair: two polynomials
  std::string lhs, rhs;
  {
    auto* sub = command("shuffle", "Shuffle product of two polynomials");
    sub->add_option("A", lhs, "First polynomial")->required();
    sub->add_option("B", rhs, "Second polynomial")->required();
    actions[sub] = [&]() {
      const std::string a_text = ctx.arg(lhs), b_text = ctx.arg(rhs);
      const Alphabet a = ctx.letters({a_text, b_text});
      const NcPoly p = shuffle(parse_poly(a_text, a), parse_poly(b_text, a));
      Result r{header("shuffle"), p.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["inputs"] = Json::array({a_text, b_text});
      r.json["result"] = p.str();
      r.json["terms"] = terms_of(p);
      return r;
    };
  }
  {
    auto* sub = command("pair", "Canonical inner product <A, B> (words orthonormal)");
    sub->add_option("A", lhs, "First polynomial")->required();
    sub->add_option("B", rhs, "Second polynomial")->required();
    actions[sub] = [&]() {
      const std::string a_text = ctx.arg(lhs), b_text = ctx.arg(rhs);
      const Alphabet a = ctx.letters({a_text, b_text});
      const Scalar s = inner(parse_poly(a_text, a), parse_poly(b_text, a));
      Result r{header("pair"), s.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["inputs"] = Json::array({a_text, b_text});
      r.json["result"] = s.str();
      return r;
    };
  }

  // group-word commands
  std::string gw_arg;
  int trunc = 0;
  {
    auto* sub = command("magnus", "Magnus expansion x -> exp(x) of a group word, truncated");
    sub->add_option("GW", gw_arg, "Group word, e.g. \"(x,y)\" or \"xy^-1\"")->required();
    sub->add_option("-N", trunc, "Truncation degree")->required()->check(CLI::PositiveNumber);
    actions[sub] = [&]() {
      const std::string g_text = ctx.arg(gw_arg);
      const Alphabet a = ctx.letters({g_text});
      const GroupWord g = parse_group_word(g_text, a);
      const TruncSeries s = magnus(g, trunc);
      Result r{header("magnus"), s.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["input"] = to_string(g);
      r.json["truncation"] = trunc;
      r.json["result"] = s.poly().str();
      r.json["terms"] = terms_of(s.poly());
      return r;
    };
  }
  {
    auto* sub = command("lcs", "Lower central series degree of a group word");
    sub->add_option("GW", gw_arg, "Group word")->required();
    sub->add_option("-N", trunc, "Largest degree examined (default: word length)")
        ->check(CLI::PositiveNumber);
    actions[sub] = [&]() {
      const std::string g_text = ctx.arg(gw_arg);
      const Alphabet a = ctx.letters({g_text});
      const GroupWord g = parse_group_word(g_text, a);
      const int n = trunc > 0 ? trunc : std::max<int>(1, static_cast<int>(g.length()));
      const LcsDegree d = lcs_degree(g, n);
      Result r{header("lcs"), {}};
      r.json["alphabet"] = names_of(a);
      r.json["input"] = to_string(g);
      r.json["max_degree"] = n;
      switch (d.kind) {
        case LcsDegree::Kind::degree:
          r.json["kind"] = "degree";
          r.json["degree"] = d.degree;
          r.text = std::to_string(d.degree) + "\n";
          break;
        case LcsDegree::Kind::identity:
          r.json["kind"] = "identity";
          r.text = "identity\n";
          break;
        case LcsDegree::Kind::exceeds:
          r.json["kind"] = "exceeds";
          r.text = "exceeds " + std::to_string(n) + "\n";
          break;
      }
      return r;
    };
  }
  std::string model = "canonical";
  {
    auto* sub = command("eval", "Iterated integral of a form polynomial along a group word");
    sub->add_option("--model", model, "Integral model")->check(CLI::IsMember({"canonical"}));
    sub->add_option("GW", gw_arg, "Group word")->required();
    sub->add_option("POLY", rhs, "Polynomial in the forms (one form per generator)")->required();
    sub->add_option("-N", trunc, "Model truncation (default: degree of POLY)")->check(CLI::PositiveNumber);
    actions[sub] = [&]() {
      const std::string g_text = ctx.arg(gw_arg), p_text = ctx.arg(rhs);
      const Alphabet a = ctx.letters({g_text, p_text});
      const GroupWord g = parse_group_word(g_text, a);
      const NcPoly omega = parse_poly(p_text, a);
      const int n = trunc > 0 ? trunc : std::max(1, omega.max_degree());
      const Scalar s = evaluate(canonical_model(a, n), g, omega);
      Result r{header("eval"), s.str() + "\n"};
      r.json["alphabet"] = names_of(a);
      r.json["model"] = model;
      r.json["truncation"] = n;
      r.json["path"] = to_string(g);
      r.json["form"] = omega.str();
      r.json["result"] = s.str();
      return r;
    };
  }

  // Melnikov layer
  int k = 0, part = -1;
  std::string weights = "w1,w2";
  {
    auto* sub = command("pk", "Coefficient polynomials of alpha1^i alpha2^(k-i) in t^(k-1) P_k");
    sub->add_option("-k", k, "Degree")->required()->check(CLI::PositiveNumber);
    sub->add_option("--weights", weights, "w1,w2 (scalars; default symbolic)");
    sub->add_option("-i", part, "Only this power of alpha1 (default: all)")->check(CLI::NonNegativeNumber);
    actions[sub] = [&]() {
      const WeightPair w = weights_of(weights);
      if (part > k) throw DomainError("-i must not exceed -k");
      Result r{header("pk"), {}};
      r.json["k"] = k;
      r.json["weights"] = Json::array({w.w1.str(), w.w2.str()});
      r.json["alphabet"] = names_of(default_form_pair());
      Json comps = Json::array();
      for (int i = part < 0 ? 0 : part; i <= (part < 0 ? k : part); ++i) {
        const NcPoly p = pk_closed_form(w, k, i);
        comps.push_back(Json{{"i", i}, {"poly", p.str()}});
        r.text += "i=" + std::to_string(i) + ": " + p.str() + "\n";
      }
      r.json["components"] = comps;
      return r;
    };
  }
  {
    auto* sub = command("ck", "C_k = <P_k^1, L_k^1>");
    sub->add_option("-k", k, "Degree (>= 2)")->required()->check(CLI::Range(2, 64));
    sub->add_option("--weights", weights, "w1,w2 (scalars; default symbolic)");
    actions[sub] = [&]() {
      const WeightPair w = weights_of(weights);
      const Scalar c = ck(w, k);
      Result r{header("ck"), c.str() + "\n"};
      r.json["k"] = k;
      r.json["weights"] = Json::array({w.w1.str(), w.w2.str()});
      r.json["result"] = c.str();
      r.json["closed_form"] = ck_closed_form(w, k).str();
      return r;
    };
  }
  {
    auto* sub = command("m5check", "Degree-5 vanishing example along (((a1,a2),a1),(a1,a2))");
    actions[sub] = [&]() {
      const Scalar v = example_ex_m5();
      const bool holds = v.is_zero();
      Result r{header("m5check"), v.str() + (holds ? " (identity holds)\n" : " (identity fails)\n")};
      r.json["path"] = "(((a1,a2),a1),(a1,a2))";
      r.json["form"] = "o0o1o1o1o1";
      r.json["result"] = v.str();
      r.json["identity_holds"] = holds;
      r.code = holds ? kExitOk : kExitError;
      return r;
    };
  }
  std::string conn_file;
  {
    auto* sub = command("derive", "Apply the connection derivation to a form polynomial");
    sub->add_option("--connection", conn_file, "Connection JSON document")->required();
    sub->add_option("POLY", poly_arg, "Polynomial in the connection's forms")->required();
    actions[sub] = [&]() {
      const Connection c = connection_from_json(read_file(conn_file));
      const NcPoly p = derive(c, parse_poly(ctx.arg(poly_arg), c.forms()));
      Result r{header("derive"), p.str() + "\n"};
      r.json["alphabet"] = names_of(c.forms());
      r.json["result"] = p.str();
      r.json["terms"] = terms_of(p);
      return r;
    };
  }
  {
    auto* sub = command("integrand", "Nested integrand R_k with R_1 = w, R_(j+1) = w R_j'");
    sub->add_option("--connection", conn_file, "Connection JSON document")->required();
    sub->add_option("-k", k, "Nesting depth")->required()->check(CLI::PositiveNumber);
    sub->add_option("OMEGA", poly_arg, "Degree-1 form")->required();
    actions[sub] = [&]() {
      const Connection c = connection_from_json(read_file(conn_file));
      const NcPoly p = melnikov_integrand(c, parse_poly(ctx.arg(poly_arg), c.forms()), k);
      Result r{header("integrand"), p.str() + "\n"};
      r.json["alphabet"] = names_of(c.forms());
      r.json["k"] = k;
      r.json["result"] = p.str();
      r.json["terms"] = terms_of(p);
      return r;
    };
  }
  std::string table_file;
  {
    auto* sub = command("pairgraded", "Leading-term pairing of a group word with a form word");
    sub->add_option("--table", table_file, "Pairing table JSON document")->required();
    sub->add_option("GW", gw_arg, "Group word over the generators")->required();
    sub->add_option("POLY", poly_arg, "Homogeneous polynomial over the forms")->required();
    actions[sub] = [&]() {
      const PairingTable t = table_from_json(read_file(table_file));
      const GroupWord g = parse_group_word(ctx.arg(gw_arg), t.generators);
      const NcPoly omega = parse_poly(ctx.arg(poly_arg), t.forms);
      const Scalar s = pair_graded(t, g, omega);
      Result r{header("pairgraded"), s.str() + "\n"};
      r.json["path"] = to_string(g);
      r.json["form"] = omega.str();
      r.json["result"] = s.str();
      return r;
    };
  }

  // monodromy
  std::vector<std::string> vec_args;
  int pl_index = 0;
  {
    auto* mono = command("monodromy", "D4 Picard-Lefschetz action on degree-2 brackets");
    mono->require_subcommand(1);
    auto* reduce = mono->add_subcommand(
        "reduce", "Find an operator P(h1..h4) with P(g) = k[a1,a2], k != 0");
    reduce->add_option("VEC6", vec_args,
                       "Six integers (comma or space separated) in the basis [d1,d2], [d1,a1], "
                       "[d1,a2], [d2,a1], [d2,a2], [a1,a2]")
        ->required()
        ->allow_extra_args();
    actions[reduce] = [&]() {
      const auto v = integers_of(vec_args);
      if (v.size() != 6) throw Error("VEC6 needs exactly 6 integers");
      Grade2Element g{};
      std::copy(v.begin(), v.end(), g.begin());
      const AlphaReduction red = reduce_to_alpha(g);
      const Grade2Element img = apply_operator(red.op, g);
      Result r{header("monodromy reduce"), {}};
      r.json["input"] = vector_json(g);
      r.json["operator"] = red.op.str();
      r.json["operator_terms"] = terms_of(red.op);
      r.json["k"] = red.k;
      r.json["image"] = vector_json(img);
      r.text = "operator: " + red.op.str() + "\nk: " + std::to_string(red.k) + "\n";
      return r;
    };
    auto* act = mono->add_subcommand("act", "Apply h_i to a cycle (4 entries) or a bracket (6 entries)");
    act->add_option("-i", pl_index, "Index 1..4")->required()->check(CLI::Range(1, 4));
    act->add_option("VEC", vec_args, "Coordinates")->required()->allow_extra_args();
    actions[act] = [&]() {
      const auto v = integers_of(vec_args);
      Result r{header("monodromy act"), {}};
      r.json["index"] = pl_index;
      r.json["input"] = vector_json(v);
      if (v.size() == 4) {
        H1Vector x{};
        std::copy(v.begin(), v.end(), x.begin());
        const H1Vector y = picard_lefschetz(pl_index, x);
        r.json["result"] = vector_json(y);
        r.text = vector_text(y) + "\n";
      } else if (v.size() == 6) {
        Grade2Element x{};
        std::copy(v.begin(), v.end(), x.begin());
        const Grade2Element y = pl_grade2(pl_index, x);
        r.json["result"] = vector_json(y);
        r.text = vector_text(y) + "\n";
      } else {
        throw Error("VEC needs 4 or 6 integers");
      }
      return r;
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  // Deepest selected subcommand.
  CLI::App* chosen = &app;
  while (!chosen->get_subcommands().empty()) chosen = chosen->get_subcommands().front();
  const auto action = actions.find(chosen);
  if (action == actions.end()) {
    err << "error: missing subcommand\n";
    return kExitUsage;
  }
  try {
    const Result r = action->second();
    if (json)
      out << r.json.dump(2) << "\n";
    else
      out << r.text;
    return r.code;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: malformed input document: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace chenlie::cli
