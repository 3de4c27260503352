#ifndef HTL_REPORT_IO_HPP
#define HTL_REPORT_IO_HPP

#include <string>

#include "json.hpp"

#include "htl/experiments.hpp"

namespace htl {

nlohmann::json to_json(const VerifyConfig& config);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const SearchResult& result);

// Flat CSV forms; headers are versioned in the README.
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);
std::string trajectory_csv(const SearchResult& result);

}  // namespace htl

#endif
