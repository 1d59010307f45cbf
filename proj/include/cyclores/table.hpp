#pragma once

#include "cyclores/differential.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclores {

/// One classification row as emitted by the CLI. ind_class is -1 when the
/// context's l has S == 0 and the class is unrecoverable from the symbol.
struct OutputRecord {
    std::int64_t p = 0;
    std::int64_t l = 0;
    std::int64_t gamma = 0;
    std::int64_t D = 0;
    int t = 0;
    int S = 0;
    int ind_class = 0;
    int oracle_class = 0;
    bool match = false;

    bool operator==(const OutputRecord&) const = default;
};

inline OutputRecord make_record(const PrimeContext& ctx, const CycInt& phi, std::int64_t D, std::uint64_t seed = 0) {
    const Classification c = classify_with(ctx, phi, D, seed);
    OutputRecord rec;
    rec.p = ctx.p;
    rec.l = ctx.l;
    rec.gamma = ctx.gamma;
    rec.D = D;
    rec.t = c.t;
    rec.S = c.S;
    rec.ind_class = c.ind_class_available ? c.ind_class : -1;
    rec.oracle_class = ind_class_oracle(ctx, D);
    rec.match = c.ind_class_available && c.ind_class == rec.oracle_class;
    return rec;
}

inline OutputRecord make_record(const PrimeContext& ctx, std::int64_t D, std::uint64_t seed = 0) {
    return make_record(ctx, normalized_jacobi(ctx), D, seed);
}

inline constexpr const char* kCsvHeader = "p,l,gamma,D,t,S,ind_class,oracle_class,match";

inline std::string records_to_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : records)
        out << r.p << ',' << r.l << ',' << r.gamma << ',' << r.D << ',' << r.t << ',' << r.S << ',' << r.ind_class
            << ',' << r.oracle_class << ',' << (r.match ? "true" : "false") << '\n';
    return out.str();
}

inline std::vector<OutputRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("records_from_csv: bad header");
    std::vector<OutputRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 9) throw std::invalid_argument("records_from_csv: bad row");
        OutputRecord r;
        r.p = std::stoll(fields[0]);
        r.l = std::stoll(fields[1]);
        r.gamma = std::stoll(fields[2]);
        r.D = std::stoll(fields[3]);
        r.t = std::stoi(fields[4]);
        r.S = std::stoi(fields[5]);
        r.ind_class = std::stoi(fields[6]);
        r.oracle_class = std::stoi(fields[7]);
        if (fields[8] != "true" && fields[8] != "false") throw std::invalid_argument("records_from_csv: bad flag");
        r.match = fields[8] == "true";
        out.push_back(r);
    }
    return out;
}

inline std::string records_to_json(const std::vector<OutputRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["p"] = r.p;
        obj["l"] = r.l;
        obj["gamma"] = r.gamma;
        obj["D"] = r.D;
        obj["t"] = r.t;
        obj["S"] = r.S;
        obj["ind_class"] = r.ind_class;
        obj["oracle_class"] = r.oracle_class;
        obj["match"] = r.match;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

inline std::vector<OutputRecord> records_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("records_from_json: expected an array");
    std::vector<OutputRecord> out;
    for (const auto& obj : arr) {
        OutputRecord r;
        r.p = obj.at("p").get<std::int64_t>();
        r.l = obj.at("l").get<std::int64_t>();
        r.gamma = obj.at("gamma").get<std::int64_t>();
        r.D = obj.at("D").get<std::int64_t>();
        r.t = obj.at("t").get<int>();
        r.S = obj.at("S").get<int>();
        r.ind_class = obj.at("ind_class").get<int>();
        r.oracle_class = obj.at("oracle_class").get<int>();
        r.match = obj.at("match").get<bool>();
        out.push_back(r);
    }
    return out;
}

}  // namespace cyclores
