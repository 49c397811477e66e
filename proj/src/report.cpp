#include "sublin/report.hpp"

#include <iomanip>
#include <sstream>

namespace sublin {

nlohmann::json to_json(const EstimateReport& r) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"name", s.name}, {"matrix_queries", s.queries.matrix}, {"list_queries", s.queries.list},
                         {"ms", s.ms}});
    return {
        {"schema", kReportSchema},
        {"mode", to_string(r.mode)},
        {"n", r.n},
        {"config",
         {{"epsilon", r.epsilon},
          {"gamma", r.gamma},
          {"scale", r.scale},
          {"estimator_scale", r.estimator_scale},
          {"beta", r.beta},
          {"seed", r.seed}}},
        {"alpha", r.alpha},
        {"bounds", {{"lower", r.lower}, {"upper", r.upper}}},
        {"early_exit", r.early_exit},
        {"queries", {{"matrix", r.queries.matrix}, {"list", r.queries.list}}},
        {"steps", steps},
        {"edbs", {{"ops", r.ops}, {"rounds", r.rounds}, {"size", r.edbs_size}}},
        {"m_estimate", r.m_estimate},
        {"lambda", r.lambda},
        {"avg_degree", r.avg_degree},
        {"small_vertices", r.small_vertices},
        {"estimator", {{"samples", r.estimator_samples}, {"levels", r.oracle_levels}}},
        {"notes", r.notes},
        {"ms", r.ms},
    };
}

std::string csv_header() { return "mode,n,m,eps,gamma,scale,seed,alpha,lower,upper,mu_exact,q_matrix,q_list,ops,ms"; }

std::string csv_row(const EstimateReport& r, std::size_t m, std::optional<std::size_t> mu_exact) {
    std::ostringstream out;
    out << std::setprecision(10);
    out << to_string(r.mode) << ',' << r.n << ',' << m << ',' << r.epsilon << ',' << r.gamma << ',' << r.scale << ','
        << r.seed << ',' << r.alpha << ',' << r.lower << ',' << r.upper << ',';
    if (mu_exact) out << *mu_exact;
    out << ',' << r.queries.matrix << ',' << r.queries.list << ',' << r.ops << ',' << std::setprecision(6) << r.ms;
    return out.str();
}

}  // namespace sublin
