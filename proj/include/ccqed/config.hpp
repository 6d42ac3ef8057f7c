// config.hpp: key = value sweep configuration, result tables and run manifests

#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccqed/sweep.hpp"

namespace ccqed {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Where each resolved key came from: "default", "config" or "flag".
using SourceMap = std::map<std::string, std::string>;

struct ResolvedConfig {
    SweepSpec spec;
    SourceMap sources;
};

// Every accepted key, in emission order.
const std::vector<std::string>& config_keys();

// Sets one key from its textual value; `where` prefixes error messages.
void apply_setting(SweepSpec& spec, const std::string& key, const std::string& value,
                   const std::string& where = "");

std::string get_setting(const SweepSpec& spec, const std::string& key);

// Defaults overlaid with the file; unknown keys and malformed values throw ConfigError.
ResolvedConfig parse_config(std::istream& in, const std::string& origin = "<input>");
ResolvedConfig load_config(const std::string& path);

// One `key = value` line per key; doubles at round-trip precision.
std::string emit_config(const SweepSpec& spec);

// %.17g, with "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double x);

const std::vector<std::string>& result_columns();

// Tab-separated, header row first. Throws std::runtime_error on an unwritable path.
void emit_results(const std::vector<SweepRow>& rows, const std::string& path);
void emit_plateaus(const ScanResult& result, const std::string& path);
void emit_phase_diagram(const std::vector<PhaseBoundaryRow>& rows, const std::string& path);
void emit_kappa_scan(const std::vector<KappaRow>& rows, const std::string& path);

// Plot-ready x/y files `<prefix>.<quantity>.tsv`; returns the paths written.
std::vector<std::string> emit_scan_plot_data(const ScanResult& result, const std::string& prefix);
std::vector<std::string> emit_phase_plot_data(const std::vector<PhaseBoundaryRow>& rows, const ModelParams& base,
                                              const std::string& prefix);
std::vector<std::string> emit_kappa_plot_data(const std::vector<KappaRow>& rows, const std::string& prefix);

struct RunSummary {
    std::size_t rows = 0;
    std::size_t unconverged = 0;
    std::vector<std::string> files;
};

// Writes `<output>.manifest.json`: resolved settings, their sources, tolerances and code version.
std::string write_manifest(const ResolvedConfig& cfg, const RunSummary& summary, const std::string& output);

const char* code_version();

} // namespace ccqed
