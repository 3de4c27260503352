#include "htl/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace htl {

namespace {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// JSON cannot carry infinities; the diverging constants serialize as strings.
nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

nlohmann::json to_json(const VerifyConfig& config) {
  return nlohmann::json{{"radial_order", config.radial_order},
                        {"n_theta", config.n_theta},
                        {"quad_order", config.quad_order},
                        {"quad_levels", config.quad_levels},
                        {"tail_tol", config.tail_tol}};
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j{{"kind", report.kind},
                   {"p", report.p},
                   {"m", report.m},
                   {"input", report.input_desc},
                   {"config", to_json(report.config)},
                   {"regime", regime_name(report.regime)},
                   {"trunc_K", report.trunc_K},
                   {"lhs", json_number(report.lhs)},
                   {"rhs", json_number(report.rhs)},
                   {"ratio", json_number(report.ratio())},
                   {"margin", json_number(report.margin())},
                   {"holds", report.holds()},
                   {"branch_warnings", report.branch_warnings},
                   {"certifying", report.certifying()}};
  if (report.t) j["t"] = *report.t;
  return j;
}

nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json traj = nlohmann::json::array();
  for (const auto& [eval, ratio] : result.trajectory)
    traj.push_back(nlohmann::json::array({eval, ratio}));
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t k = 0; k < result.best_coeffs.size(); ++k)
    coeffs.push_back(nlohmann::json::array(
        {result.best_coeffs[k].real(), result.best_coeffs[k].imag()}));
  return nlohmann::json{{"best_coeffs", coeffs},
                        {"best_ratio", result.best_ratio},
                        {"evaluations", result.evaluations},
                        {"seed", result.seed},
                        {"bound", json_number(result.bound)},
                        {"gap", json_number(result.bound - result.best_ratio)},
                        {"trajectory", traj}};
}

std::string bound_report_csv_header() {
  return "kind,p,m,regime,t,trunc_K,lhs,rhs,ratio,margin,holds,branch_warnings";
}

std::string bound_report_csv_row(const BoundReport& report) {
  std::ostringstream row;
  row << report.kind << ',' << format_double(report.p) << ',' << report.m << ','
      << regime_name(report.regime) << ',' << (report.t ? format_double(*report.t) : "") << ','
      << report.trunc_K << ',' << format_double(report.lhs) << ',' << format_double(report.rhs)
      << ',' << format_double(report.ratio()) << ',' << format_double(report.margin()) << ','
      << (report.holds() ? 1 : 0) << ',' << report.branch_warnings;
  return row.str();
}

std::string trajectory_csv(const SearchResult& result) {
  std::ostringstream out;
  out << "evaluation,best_ratio\n";
  for (const auto& [eval, ratio] : result.trajectory)
    out << eval << ',' << format_double(ratio) << '\n';
  return out.str();
}

}  // namespace htl
