#include "ontomcq/response_log.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ontomcq/bank.hpp"
#include "ontomcq/errors.hpp"

namespace ontomcq {

namespace {

constexpr const char* kResponseHeader = "learner_id,trait_level,item_id,choice";
constexpr const char* kAlphaHeader = "item_id,alpha";

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

bool valid_choice(const std::string& c) {
    if (c == "SKIP" || c == "INVALID") return true;
    return c.size() == 1 && c[0] >= 'A' && c[0] <= 'Z';
}

}  // namespace

std::vector<ResponseRecord> read_response_csv(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) throw DataError("response log: empty file");
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kResponseHeader)
        throw DataError(std::string("response log row 1: expected header '") + kResponseHeader +
                        "', got '" + line + "'");

    std::vector<ResponseRecord> records;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_row(line);
        const std::string where = "response log row " + std::to_string(row);
        if (fields.size() != 4)
            throw DataError(where + ": expected 4 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty()) throw DataError(where + ": empty learner_id");
        if (fields[2].empty()) throw DataError(where + ": empty item_id");
        Level trait;
        try {
            trait = level_from_string(fields[1]);
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
        if (!valid_choice(fields[3]))
            throw DataError(where + ": choice must be a letter A-Z, SKIP or INVALID, got '" +
                            fields[3] + "'");
        records.push_back({fields[0], trait, fields[2], fields[3]});
    }
    return records;
}

std::vector<ResponseRecord> read_response_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open response log: " + path);
    return read_response_csv(in);
}

std::string response_csv(const std::vector<ResponseRecord>& records) {
    std::string out = kResponseHeader;
    out += "\n";
    for (const auto& r : records) {
        out += r.learnerId;
        out += ",";
        out += to_string(r.trait);
        out += ",";
        out += r.itemId;
        out += ",";
        out += r.choice;
        out += "\n";
    }
    return out;
}

void write_response_csv(const std::vector<ResponseRecord>& records, const std::string& path) {
    write_file_atomic(path, response_csv(records));
}

std::map<std::string, double> read_alpha_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open alpha file: " + path);
    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) throw DataError("alpha file: empty file");
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kAlphaHeader)
        throw DataError(std::string("alpha file row 1: expected header '") + kAlphaHeader +
                        "', got '" + line + "'");
    std::map<std::string, double> alphas;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_row(line);
        const std::string where = "alpha file row " + std::to_string(row);
        if (fields.size() != 2)
            throw DataError(where + ": expected 2 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty()) throw DataError(where + ": empty item_id");
        double value;
        try {
            value = parse_score(fields[1]);
        } catch (const Error& e) {
            throw DataError(where + ": " + e.what());
        }
        if (!alphas.emplace(fields[0], value).second)
            throw DataError(where + ": duplicate item_id '" + fields[0] + "'");
    }
    return alphas;
}

void write_alpha_csv(const std::map<std::string, double>& alphas, const std::string& path) {
    std::string out = kAlphaHeader;
    out += "\n";
    for (const auto& [id, alpha] : alphas) {
        out += id;
        out += ",";
        out += format_score(alpha);
        out += "\n";
    }
    write_file_atomic(path, out);
}

}  // namespace ontomcq
