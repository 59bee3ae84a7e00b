#pragma once
// JSON and CSV rendering for the command line tool. Rationals are "p/q"
// strings, normalized entries "sqrt(r)" / "-sqrt(r)" (or "p/q" when rational).

#include <string>
#include <vector>

#include <json.hpp>

#include "orthopoly/qsqrt.hpp"
#include "orthopoly/report.hpp"
#include "orthopoly/sparse_poly.hpp"

namespace orthopoly::cli {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const std::vector<Rational>& v);
json to_json(const MultiIndex& m);
json to_json(const SparsePoly& p);
json to_json(const VerificationReport& rep);
std::string hat_str(const QSqrt& q);
std::string hat_str(const QSqrtSum& q);
json matrix_json(const std::vector<std::vector<Rational>>& m);
json matrix_json(const std::vector<std::vector<QSqrt>>& m);

// Known shapes: "entries" (matrix), "checks" (report), "basis" (polynomials or
// lattice values), "rows" (generic table). Anything else is flattened to
// key,value lines.
std::string to_csv(const json& doc);

}  // namespace orthopoly::cli
