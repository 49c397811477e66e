#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sublin/pipelines.hpp"

namespace sublin {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const EstimateReport& r);

// mode,n,m,eps,gamma,scale,seed,alpha,lower,upper,mu_exact,q_matrix,q_list,ops,ms
std::string csv_header();
// m and mu_exact come from the harness; mu_exact is left empty when unknown.
std::string csv_row(const EstimateReport& r, std::size_t m, std::optional<std::size_t> mu_exact);

}  // namespace sublin
