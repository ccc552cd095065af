#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "memesim/app/run_config.hpp"
#include "memesim/logio.hpp"
#include "memesim/stats.hpp"

namespace memesim::app {

/// Process exit status contract of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitIo = 3,
    kExitAnalysis = 4,
};

struct SimulateOptions {
    std::filesystem::path config_path;
    std::optional<std::uint64_t> seed;
    /// Falls back to the config's output_dir when empty.
    std::filesystem::path out_dir;
    /// Optional access log drawn as the left panel of timeseries.svg.
    std::optional<std::filesystem::path> reference_log;
    std::uint64_t reference_bin = 1;
};

int cmd_simulate(const SimulateOptions& options, std::ostream& err);

/// `threads == 0` uses the hardware concurrency.
int cmd_sweep(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
              std::ostream& err, unsigned threads = 0);

enum class FitModel { ols, logistic };

int cmd_fit(const std::filesystem::path& data_path, FitModel model,
            const std::filesystem::path& out_path, std::ostream& err);

int cmd_analyze(const std::filesystem::path& log_path, std::uint64_t bin_width,
                const std::filesystem::path& out_dir, std::ostream& err);

// Building blocks shared by the commands and their tests.

/// Reads a header-first CSV; the column named `y` is the response.
stats::DesignMatrix read_design_csv(std::istream& in);

nlohmann::json fit_to_json(const stats::FitResult& fit, FitModel model,
                           const std::vector<std::string>& feature_names);
nlohmann::json summary_to_json(const logio::HitSummary& summary);

void write_timeseries_csv(std::ostream& out, const std::vector<TickSample>& series);
void write_hits_csv(std::ostream& out, const std::vector<std::uint64_t>& meme_hits);
void write_hits_csv(std::ostream& out, const std::map<MemeId, std::uint64_t>& per_meme);
/// Dense series from bin 0 through the last non-empty bin.
void write_bins_csv(std::ostream& out, const logio::HitSummary& summary);

/// Shortest decimal text that round-trips the double.
std::string format_number(double value);

}  // namespace memesim::app
