// SPDX-License-Identifier: Apache-2.0
//
// JSON / CSV serialization of the library objects. All emitters use ordered
// JSON objects so that identical inputs produce byte-identical output.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaborlab/gabor.hpp"
#include "gaborlab/qup.hpp"

namespace gaborlab {

using ordered_json = nlohmann::ordered_json;

ordered_json group_to_json(const FiniteGroup& g);
/// Accepts { "name": ..., "order": n, "mult": [[...]] }.
FiniteGroup group_from_json(const ordered_json& j);
/// Catalog string or (when the argument names a readable file / starts with
/// '@') a group-spec JSON file.
FiniteGroup group_from_spec(const std::string& spec, int order_cap = 256);

ordered_json matrix_to_json(const CMat& m);  // row-major [re, im] pairs
ordered_json dual_to_json(const UnitaryDual& d, const DualReport& report);
ordered_json operator_field_to_json(const OperatorField& f, double threshold);
ordered_json gabor_field_to_json(const GaborField& f, double threshold);
ordered_json rational_to_json(const Rational& r, const std::string& provenance);

ordered_json qup_report_to_json(const QupReport& r);
std::string qup_reports_to_csv(const std::vector<QupReport>& reports);

}  // namespace gaborlab
