#include "qelm/results.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace qelm {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string rows_to_csv(const std::vector<MetricRow>& rows) {
    std::ostringstream out;
    out << "sweep_axis,sweep_value,tm_seed,alpha,rep,metric,value\n";
    for (const auto& r : rows) {
        out << r.sweep_axis << ',' << format_double(r.sweep_value) << ',' << r.tm_seed << ','
            << r.alpha << ',' << r.rep << ',' << r.metric << ',' << format_double(r.value)
            << '\n';
    }
    return out.str();
}

namespace {

json row_to_json(const MetricRow& r) {
    return json{{"sweep_axis", r.sweep_axis}, {"sweep_value", r.sweep_value},
                {"tm_seed", r.tm_seed},       {"alpha", r.alpha},
                {"rep", r.rep},               {"metric", r.metric},
                {"value", r.value}};
}

MetricRow row_from_json(const json& j) {
    MetricRow r;
    r.sweep_axis = j.at("sweep_axis").get<std::string>();
    r.sweep_value = j.at("sweep_value").get<double>();
    r.tm_seed = j.at("tm_seed").get<long long>();
    r.alpha = j.at("alpha").get<std::string>();
    r.rep = j.at("rep").get<long long>();
    r.metric = j.at("metric").get<std::string>();
    r.value = j.at("value").get<double>();
    return r;
}

}  // namespace

void write_results(const ResultRecord& record, const std::string& dir) {
    std::filesystem::create_directories(dir);

    json root;
    root["experiment"] = record.experiment;
    root["version"] = record.version;
    root["master_seed"] = record.master_seed;
    root["seed_rule"] = record.seed_rule;
    root["wall_clock_sec"] = record.wall_clock_sec;
    root["config"] = json::parse(record.config_json);
    root["rows"] = json::array();
    for (const auto& r : record.rows) root["rows"].push_back(row_to_json(r));

    std::ofstream jf(dir + "/record.json");
    if (!jf) throw std::runtime_error("write_results: cannot write to " + dir);
    jf << root.dump(2) << '\n';

    std::ofstream cf(dir + "/table.csv", std::ios::binary);
    cf << rows_to_csv(record.rows);
}

ResultRecord read_results(const std::string& dir) {
    std::ifstream jf(dir + "/record.json");
    if (!jf) throw std::runtime_error("read_results: cannot open " + dir + "/record.json");
    json root = json::parse(jf);

    ResultRecord record;
    record.experiment = root.at("experiment").get<std::string>();
    record.version = root.at("version").get<std::string>();
    record.master_seed = root.at("master_seed").get<std::uint64_t>();
    record.seed_rule = root.at("seed_rule").get<std::string>();
    record.wall_clock_sec = root.at("wall_clock_sec").get<double>();
    record.config_json = root.at("config").dump(2);
    for (const auto& j : root.at("rows")) record.rows.push_back(row_from_json(j));
    return record;
}

}  // namespace qelm
