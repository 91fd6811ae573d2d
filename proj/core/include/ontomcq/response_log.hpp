#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ontomcq/irt.hpp"

namespace ontomcq {

/// CSV schema: header "learner_id,trait_level,item_id,choice";
/// trait_level in {low, medium, high}; choice a letter, SKIP or INVALID.
/// Violations throw DataError naming the row.
std::vector<ResponseRecord> read_response_csv(std::istream& in);
std::vector<ResponseRecord> read_response_csv_file(const std::string& path);

std::string response_csv(const std::vector<ResponseRecord>& records);
void write_response_csv(const std::vector<ResponseRecord>& records, const std::string& path);

/// Alpha file schema: header "item_id,alpha"; alpha a decimal or +inf/-inf.
std::map<std::string, double> read_alpha_csv_file(const std::string& path);
void write_alpha_csv(const std::map<std::string, double>& alphas, const std::string& path);

}  // namespace ontomcq
