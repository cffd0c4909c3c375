#pragma once

#include <string>

#include <json.hpp>

#include "laurentbi/caratheodory.hpp"
#include "laurentbi/series.hpp"
#include "laurentbi/verifier.hpp"

namespace laurentbi {

// Canonical JSON text: keys sorted, floating values printed with 17 significant
// digits, no insignificant whitespace beyond one space after ':' and ','.
// parse(canonical_dump(x)) reproduces x bit-exactly for the types we emit.
std::string canonical_dump(const nlohmann::json& j, int indent = 0);

// Series schema:
//   {"top": int, "depth": int, "domain": "exact"|"float",
//    "coeffs": [[degree, re, im], ...]}   (degrees descending, dense)
// EXACT parts are "num/den" strings; FLOAT parts are JSON numbers. valid_to is
// not part of the schema; a parsed series counts as exact to its stored depth.
nlohmann::json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const nlohmann::json& j);

// {"atoms": [{"weight": w, "u": [re, im]}, ...]} (always FLOAT).
nlohmann::json atoms_to_json(const CaratheodoryAtoms& p);
CaratheodoryAtoms atoms_from_json(const nlohmann::json& j);

nlohmann::json class_spec_to_json(const ClassSpec& spec);
nlohmann::json membership_to_json(const MembershipReport& m);
nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json springer_rows_to_json(const std::vector<SpringerRow>& rows);

// One CSV line per report, for bound-vs-observed grids over alpha or beta.
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);

}  // namespace laurentbi
