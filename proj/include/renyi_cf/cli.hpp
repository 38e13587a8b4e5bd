#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/gauss_kuzmin.hpp"
#include "renyi_cf/report.hpp"

namespace renyi {

struct RunConfig {
    std::string command;
    std::vector<Digit> N{2};
    std::vector<double> t{1.0};
    std::vector<std::size_t> n{5};
    std::string x = "1/3";  // "p/q" is exact; decimals go through double
    std::string y = "0";
    std::vector<Digit> digits;
    Method method = Method::exact;
    std::optional<std::size_t> resolution;  // gk/rate: 513 per axis; pfo: 1025 output points
    std::optional<Digit> cutoff;            // gk/rate: 60; pfo: max(1000, 50N); measure: 10^4
    std::uint64_t samples = 1000000;
    std::optional<std::uint64_t> seed;
    std::string output;  // empty: stdout
    std::string format = "csv";
    unsigned threads = 0;  // 0: hardware concurrency
    double budget = 1e8;
    std::string input;  // pfo: CSV of breakpoint,value rows
};

Json config_to_json(const RunConfig& config);

// Builds the report for one command; throws on invalid input or module errors.
Report run(const RunConfig& config, std::ostream& warnings);

// Full front end: parses argv, runs, writes the artifact. Returns the exit
// status; module errors give 1 and a {"error": {"type", "message"}} object.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace renyi
