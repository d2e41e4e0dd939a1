#pragma once

#include <string>

#include <json.hpp>

#include "singlet/labels.hpp"
#include "singlet/ops.hpp"
#include "singlet/sqrt_rational.hpp"
#include "singlet/validate.hpp"

// JSON/CSV wire formats.  All emitters use ordered_json with fixed key order
// so identical invocations produce byte-identical files.
namespace singlet::io {

using json = nlohmann::ordered_json;

json to_json(const Su2Label& label);
json to_json(const Su3Label& label);
Su2Label su2_label_from_json(const json& j);
Su3Label su3_label_from_json(const json& j);

// {"sign": -1|0|1, "radicand": "num/den"}; with_float adds a lossy decimal.
json to_json(const SqrtRational& value, bool with_float = false);

// Basis listing with exact norms and per-leg irreps.
json basis_listing_su2(int n_max);
json basis_listing_su3(int w_max);
std::string basis_csv_su2(int n_max);
std::string basis_csv_su3(int w_max);

// Transition list of one operator application.
json act_result_su2(const std::string& op_text, const Su2Label& label, bool via_oracle,
                    bool with_float);
json act_result_su3(const std::string& op_text, const Su3Label& label, bool via_oracle,
                    bool with_float);

// Sparse operator matrix over the weight-truncated basis; entries hold full
// row/column labels and are sorted by canonical (row, column) index.  Targets
// above the cutoff are dropped (documented truncation).
json matrix_export_su2(const std::string& op_text, int n_max, bool via_oracle, bool with_float);
json matrix_export_su3(const std::string& op_text, int w_max, bool via_oracle, bool with_float);

json ledger_json(const std::vector<validate::DiscrepancyRecord>& records, const std::string& group);

// Serialize with a trailing newline, 2-space indent.
std::string dump(const json& j);

}  // namespace singlet::io
