#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zdl/meansquare.hpp"

namespace zdl::report {

inline constexpr const char* kCsvHeader = "T,a,H,theta,X,k1,k2,numeric,main_term,ratio,err_scale,panels";

// one row, full parameter tuple, 17 significant digits
std::string csv_row(const ms::MeanSquareReport& r);
void write_csv(std::ostream& os, const std::vector<ms::MeanSquareReport>& rows);
void write_csv_file(const std::string& path, const std::vector<ms::MeanSquareReport>& rows);

// JSON array of objects with the CSV field names
std::string to_json(const std::vector<ms::MeanSquareReport>& rows, int indent = 2);

}  // namespace zdl::report
