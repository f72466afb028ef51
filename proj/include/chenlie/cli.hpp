#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "chenlie/melnikov.hpp"

namespace chenlie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;  // parse or validation failure
inline constexpr int kExitUsage = 2;  // bad flags / arguments

// `args` excludes the program name. An expression argument "-" is read from
// `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

// Loaders for the JSON input documents. `text` is the document itself.
//   connection: {"alphabet": [...], "delta_poly": "t", "matrix": [[...]]}
//            or {"alphabet": [...], "weights": ["w1", "w2"]}
//   table:      {"generators": [...], "alphabet": [...], "table": [[...]]}
//               ("table" omitted: independent indeterminates v_<gen>_<form>)
Connection connection_from_json(const std::string& text);
PairingTable table_from_json(const std::string& text);

}  // namespace chenlie::cli
