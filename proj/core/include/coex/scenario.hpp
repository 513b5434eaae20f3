#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coex/antenna.hpp"
#include "coex/geometry.hpp"
#include "coex/linkbudget.hpp"
#include "coex/propagation.hpp"

namespace coex {

// Full description of one co-existence study. Defaults reproduce the
// reference S-band scenario.
struct ScenarioConfig {
    EarthModel earth;
    AntennaPattern pattern;
    PropagationConfig propagation;
    TxConfig tx;
    NoiseModel noise;
    double snr_db = 5.25;
    double separation_km = 100.0;
    std::vector<double> alpha_list_deg{0.0, 45.0, 90.0, 135.0, 180.0};
    double slant_min_km = 600.0;
    double slant_max_km = 1075.19;
    int n_points = 100;
    std::uint64_t shadow_seed = 1;
    // Scenario metadata; not used by any computation.
    std::array<double, 2> latitude_band_deg{-20.0, 20.0};
    double ntn_cell_diameter_km = 45.0;

    // Throws ConfigError naming the offending key.
    void validate() const;
};

// Parse or constraint failure. line() is 0 when the problem is not tied to a
// specific line of the document (e.g. a cross-key constraint).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& message);

    const std::string& key() const { return key_; }
    int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

// Parses a flat `key = value` document. `#` starts a comment; list values use
// `[a, b, ...]`. Keys not present keep their defaults; unknown or repeated
// keys are errors. The result is validated.
ScenarioConfig load_config(std::string_view text);
ScenarioConfig load_config_file(const std::filesystem::path& path);

// Sets a single key from its textual value (same syntax as in a document).
// Does not re-validate.
void apply_override(ScenarioConfig& config, std::string_view key, std::string_view value);

// Every recognised key, in documentation order.
const std::vector<std::string_view>& config_keys();

// Emits a document that load_config() maps back to `config`.
std::string to_config_text(const ScenarioConfig& config);

}  // namespace coex
