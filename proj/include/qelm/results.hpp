#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qelm/config.hpp"

namespace qelm {

/// One measurement: a metric value at a sweep point for one seed/repeat.
/// `alpha` holds the photon model ("0", "1", "0.73", "intensity", or "" when
/// not applicable); `rep` indexes folds, noise seeds, or baseline draws (-1
/// when not applicable); `tm_seed` is the TM stream index (-1 for rows that
/// aggregate over seeds).
struct MetricRow {
    std::string sweep_axis;
    double sweep_value = 0.0;
    long long tm_seed = -1;
    std::string alpha;
    long long rep = -1;
    std::string metric;
    double value = 0.0;
};

struct ResultRecord {
    std::string experiment;
    std::string config_json;      // canonical echo of the run configuration
    std::string version;
    std::uint64_t master_seed = 0;
    std::string seed_rule;        // how per-job streams derive from the master seed
    double wall_clock_sec = 0.0;  // excluded from the tabular output
    std::vector<MetricRow> rows;
};

/// Stable text form of a double (%.17g): parses back to the same bits.
std::string format_double(double v);

/// Renders rows as CSV; byte-stable for identical inputs.
std::string rows_to_csv(const std::vector<MetricRow>& rows);

/// Writes <dir>/record.json and <dir>/table.csv, creating the directory.
void write_results(const ResultRecord& record, const std::string& dir);

/// Reads a record back from <dir>/record.json (round-trip of write_results).
ResultRecord read_results(const std::string& dir);

}  // namespace qelm
