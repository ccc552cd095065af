#include "memesim/app/commands.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "memesim/app/svg.hpp"
#include "memesim/error.hpp"

namespace memesim::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    }
    body(out);
    out.flush();
    if (!out) {
        throw std::ios_base::failure("write failed for " + path.string());
    }
}

void report(std::ostream& err, const Error& e) {
    err << "error: " << e.reason() << ": " << e.what() << '\n';
}

void report_config(std::ostream& err, const ConfigError& e) {
    err << "error: invalid-config:";
    for (const auto& f : e.fields()) {
        err << ' ' << f;
    }
    err << '\n';
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::ios_base::failure("cannot create output directory " + dir.string());
    }
}

// Loads the run config, mapping failures onto the exit-code contract.
std::optional<RunConfig> load_or_report(const fs::path& path, std::ostream& err, int& code) {
    try {
        return load_run_config(path);
    } catch (const ConfigError& e) {
        report_config(err, e);
        code = kExitConfig;
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << '\n';
        code = kExitIo;
    }
    return std::nullopt;
}

SeriesPanel cumulative_panel(const logio::HitSummary& summary, std::string title) {
    SeriesPanel panel{std::move(title), "tick", "cumulative requests", {}, {}};
    if (summary.bins.empty()) {
        return panel;
    }
    const Tick last = summary.bins.rbegin()->first;
    double running = 0.0;
    for (Tick start = 0; start <= last; start += summary.bin_width_ticks) {
        const auto it = summary.bins.find(start);
        running += it == summary.bins.end() ? 0.0 : static_cast<double>(it->second);
        panel.x.push_back(static_cast<double>(start));
        panel.y.push_back(running);
    }
    return panel;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

void write_timeseries_csv(std::ostream& out, const std::vector<TickSample>& series) {
    out << "tick,currently_infected,cumulative_exposures\n";
    for (const auto& s : series) {
        out << s.tick << ',' << s.currently_infected << ',' << s.cumulative_exposures << '\n';
    }
}

void write_hits_csv(std::ostream& out, const std::vector<std::uint64_t>& meme_hits) {
    out << "meme_id,hits\n";
    for (std::size_t m = 0; m < meme_hits.size(); ++m) {
        out << m << ',' << meme_hits[m] << '\n';
    }
}

void write_hits_csv(std::ostream& out, const std::map<MemeId, std::uint64_t>& per_meme) {
    out << "meme_id,hits\n";
    for (const auto& [meme, hits] : per_meme) {
        out << meme << ',' << hits << '\n';
    }
}

void write_bins_csv(std::ostream& out, const logio::HitSummary& summary) {
    out << "bin_start_tick,hits\n";
    if (summary.bins.empty()) {
        return;
    }
    const Tick last = summary.bins.rbegin()->first;
    for (Tick start = 0; start <= last; start += summary.bin_width_ticks) {
        const auto it = summary.bins.find(start);
        out << start << ',' << (it == summary.bins.end() ? 0 : it->second) << '\n';
    }
}

json summary_to_json(const logio::HitSummary& s) {
    return {
        {"total_hits", s.total_hits},
        {"meme_count", s.meme_count},
        {"max_hits", s.max_hits},
        {"median_hits", s.median_hits},
        {"fraction_below_2", s.fraction_below_2},
        {"bin_width_ticks", s.bin_width_ticks},
    };
}

json fit_to_json(const stats::FitResult& fit, FitModel model,
                 const std::vector<std::string>& feature_names) {
    json doc = {
        {"model", model == FitModel::ols ? "ols" : "logistic"},
        {"coefficients", fit.coefficients},
        {"feature_names", feature_names},
        {"converged", fit.converged},
        {"iterations", fit.iterations},
    };
    doc["r_squared"] = fit.r_squared ? json(*fit.r_squared) : json(nullptr);
    if (model == FitModel::logistic) {
        doc["mcfadden_pseudo_r2"] = fit.mcfadden_pseudo_r2 ? json(*fit.mcfadden_pseudo_r2) : json(nullptr);
        doc["log_likelihood"] = fit.log_likelihood ? json(*fit.log_likelihood) : json(nullptr);
    }
    return doc;
}

stats::DesignMatrix read_design_csv(std::istream& in) {
    auto split = [](std::string line) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        return cells;
    };

    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("CSV is empty");
    }
    const auto header = split(line);
    const auto y_it = std::find(header.begin(), header.end(), "y");
    if (y_it == header.end()) {
        throw InputError("CSV header has no response column 'y'");
    }
    const auto y_col = static_cast<std::size_t>(y_it - header.begin());

    stats::DesignMatrix data;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != y_col) data.feature_names.push_back(header[c]);
    }
    std::vector<std::vector<double>> rows;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "\r") continue;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw InputError("CSV line " + std::to_string(line_number) + ": expected " +
                             std::to_string(header.size()) + " fields");
        }
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto& cell = cells[c];
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), row[c]);
            if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
                throw InputError("CSV line " + std::to_string(line_number) + ": bad number '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }

    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto k = static_cast<Eigen::Index>(header.size() - 1);
    data.features.resize(n, k);
    data.response.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index j = 0;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c == y_col) {
                data.response[i] = rows[static_cast<std::size_t>(i)][c];
            } else {
                data.features(i, j++) = rows[static_cast<std::size_t>(i)][c];
            }
        }
    }
    return data;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& err) {
    int code = kExitOk;
    auto rc = load_or_report(options.config_path, err, code);
    if (!rc) {
        return code;
    }
    if (options.seed) {
        rc->sim.seed = *options.seed;
    }
    const fs::path out_dir = options.out_dir.empty() ? rc->output_dir : options.out_dir;
    if (out_dir.empty()) {
        err << "error: invalid-config: output_dir\n";
        return kExitConfig;
    }

    std::optional<logio::HitSummary> reference;
    if (options.reference_log) {
        std::ifstream in(*options.reference_log);
        if (!in) {
            err << "error: io: cannot open " << options.reference_log->string() << '\n';
            return kExitIo;
        }
        try {
            logio::HitAggregator agg(options.reference_bin);
            logio::for_each_record(in, [&](const EventRecord& r) { agg.add(r); });
            reference = agg.summary();
        } catch (const Error& e) {
            report(err, e);
            return kExitAnalysis;
        }
    }

    SimOutput output;
    try {
        output = run(rc->sim);
    } catch (const ConfigError& e) {
        report_config(err, e);
        return kExitConfig;
    }

    try {
        ensure_directory(out_dir);
        write_file(out_dir / "events.log", [&](std::ostream& o) { logio::write_log(o, output.events); });
        write_file(out_dir / "timeseries.csv", [&](std::ostream& o) { write_timeseries_csv(o, output.series); });
        write_file(out_dir / "hits.csv", [&](std::ostream& o) { write_hits_csv(o, output.meme_hits); });
        const auto summary = logio::aggregate_hits(output.events);
        write_file(out_dir / "summary.json",
                   [&](std::ostream& o) { o << summary_to_json(summary).dump(2) << '\n'; });

        std::vector<SeriesPanel> panels;
        if (reference) {
            panels.push_back(cumulative_panel(*reference, "Access log"));
        }
        SeriesPanel sim{"Simulation", "tick", "cumulative exposures", {}, {}};
        for (const auto& s : output.series) {
            sim.x.push_back(static_cast<double>(s.tick));
            sim.y.push_back(static_cast<double>(s.cumulative_exposures));
        }
        panels.push_back(std::move(sim));
        write_file(out_dir / "timeseries.svg", [&](std::ostream& o) { o << render_series_svg(panels); });
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_sweep(const fs::path& config_path, const fs::path& out_dir, std::ostream& err, unsigned threads) {
    int code = kExitOk;
    auto rc = load_or_report(config_path, err, code);
    if (!rc) {
        return code;
    }
    const fs::path dir = out_dir.empty() ? rc->output_dir : out_dir;
    if (dir.empty()) {
        err << "error: invalid-config: output_dir\n";
        return kExitConfig;
    }

    struct Job {
        std::vector<double> point;
        std::uint32_t replicate;
        SimConfig config;
    };
    std::size_t point_count = 1;
    for (const auto& axis : rc->axes) {
        point_count *= axis.values.size();
    }
    std::vector<Job> jobs;
    jobs.reserve(point_count * rc->replicates);
    std::vector<std::string> bad;
    for (std::size_t p = 0; p < point_count; ++p) {
        // Mixed-radix decode; the first (alphabetically smallest) axis varies slowest.
        std::vector<double> point(rc->axes.size());
        std::size_t rem = p;
        for (std::size_t a = rc->axes.size(); a-- > 0;) {
            const auto& values = rc->axes[a].values;
            point[a] = values[rem % values.size()];
            rem /= values.size();
        }
        SimConfig base = rc->sim;
        for (std::size_t a = 0; a < point.size(); ++a) {
            apply_parameter(base, rc->axes[a].name, point[a]);
        }
        try {
            validate(base);
        } catch (const ConfigError& e) {
            for (const auto& f : e.fields()) {
                if (std::find(bad.begin(), bad.end(), f) == bad.end()) bad.push_back(f);
            }
            continue;
        }
        for (std::uint32_t r = 0; r < rc->replicates; ++r) {
            Job job{point, r, base};
            job.config.seed = rc->sim.seed + r;
            jobs.push_back(std::move(job));
        }
    }
    if (!bad.empty()) {
        report_config(err, ConfigError(bad));
        return kExitConfig;
    }

    struct RowResult {
        std::uint64_t final_exposures = 0;
        std::uint64_t max_hits = 0;
        double median_hits = 0.0;
    };
    std::vector<RowResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const SimOutput out = run(jobs[i].config, RunOptions{false});
            RowResult r;
            r.final_exposures = out.series.empty() ? 0 : out.series.back().cumulative_exposures;
            for (auto h : out.meme_hits) r.max_hits = std::max(r.max_hits, h);
            r.median_hits = logio::median(out.meme_hits);
            results[i] = r;
        }
    };
    unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, std::max<std::size_t>(1, jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
    }

    try {
        ensure_directory(dir);
        write_file(dir / "sweep.csv", [&](std::ostream& o) {
            for (const auto& axis : rc->axes) o << axis.name << ',';
            o << "replicate,seed,final_cumulative_exposures,max_hits,median_hits\n";
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                for (double v : jobs[i].point) o << format_number(v) << ',';
                o << jobs[i].replicate << ',' << jobs[i].config.seed << ',' << results[i].final_exposures
                  << ',' << results[i].max_hits << ',' << format_number(results[i].median_hits) << '\n';
            }
        });
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_fit(const fs::path& data_path, FitModel model, const fs::path& out_path, std::ostream& err) {
    std::ifstream in(data_path);
    if (!in) {
        err << "error: io: cannot open " << data_path.string() << '\n';
        return kExitIo;
    }
    json doc;
    try {
        const auto data = read_design_csv(in);
        const auto fit = model == FitModel::ols ? stats::ols_fit(data) : stats::logistic_fit(data);
        doc = fit_to_json(fit, model, data.feature_names);
    } catch (const Error& e) {
        report(err, e);
        return kExitAnalysis;
    }
    try {
        if (out_path.has_parent_path()) ensure_directory(out_path.parent_path());
        write_file(out_path, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_analyze(const fs::path& log_path, std::uint64_t bin_width, const fs::path& out_dir, std::ostream& err) {
    std::ifstream in(log_path);
    if (!in) {
        err << "error: io: cannot open " << log_path.string() << '\n';
        return kExitIo;
    }
    logio::HitSummary summary;
    try {
        logio::HitAggregator agg(bin_width);
        logio::for_each_record(in, [&](const EventRecord& r) { agg.add(r); });
        summary = agg.summary();
    } catch (const Error& e) {
        report(err, e);
        return kExitAnalysis;
    }
    try {
        ensure_directory(out_dir);
        write_file(out_dir / "summary.json", [&](std::ostream& o) { o << summary_to_json(summary).dump(2) << '\n'; });
        write_file(out_dir / "hits.csv", [&](std::ostream& o) { write_hits_csv(o, summary.per_meme); });
        write_file(out_dir / "bins.csv", [&](std::ostream& o) { write_bins_csv(o, summary); });
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace memesim::app
