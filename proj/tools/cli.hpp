#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace arcwalk::cli {

enum class Format { csv, json };

struct RunSpec {
    std::string command;
    int n_steps = 2;
    double max_angle = 0.5;
    bool extended = false;
    int points = 500;
    int joint_points = 101;
    int grid_r = 400;
    int grid_theta = 400;
    int phi_nodes = 64;
    int threads = 0;
    std::int64_t count = 1'000'000;
    std::uint64_t seed = 1;
    int bins = 200;
    int checkpoints = 2000;
    bool raw = false;
    bool truncate = false;
    std::string regime = "exact2";
    // genchi2
    std::vector<double> weights;
    std::vector<int> dofs;
    std::vector<double> noncentralities;
    double gaussian_sd = 0;
    double offset = 0;
    std::vector<double> xs;

    std::optional<std::string> output;
    Format format = Format::csv;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Everything a run produces, independent of the output format.
struct Report {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<Table> tables;
};

/// Runs the computation behind `spec.command`. Library exceptions pass
/// through.
Report build_report(const RunSpec& spec);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);

/// Builds and writes the report. Returns the process exit status: 0 on
/// success, 2 for invalid input, 3 when a numerical method fails.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Parses arguments (including --config) and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arcwalk::cli
