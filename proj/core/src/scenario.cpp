#include "coex/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <system_error>

namespace coex {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(std::string(key), 0, "expected a number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw ConfigError(std::string(key), 0, "value must be finite");
    }
    return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ConfigError(std::string(key), 0, "expected a list like [a, b, ...]");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<double> out;
    if (text.empty()) {
        return out;
    }
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number(key, text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_list(const auto& values) {
    std::string s = "[";
    bool first = true;
    for (double v : values) {
        if (!first) {
            s += ", ";
        }
        s += shortest(v);
        first = false;
    }
    return s + "]";
}

struct KeySpec {
    std::string_view name;
    std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

// Scalar double member accessed through a projection.
template <typename Proj>
KeySpec scalar(std::string_view name, Proj proj) {
    return {name,
            [proj](ScenarioConfig& c, std::string_view key, std::string_view value) {
                proj(c) = parse_number(key, value);
            },
            [proj](const ScenarioConfig& c) { return shortest(proj(c)); }};
}

const std::vector<KeySpec>& key_table() {
    static const std::vector<KeySpec> table = [] {
        std::vector<KeySpec> t;
        t.push_back(scalar("earth_radius_km", [](auto& c) -> auto& { return c.earth.earth_radius_km; }));
        t.push_back(scalar("altitude_km", [](auto& c) -> auto& { return c.earth.altitude_km; }));
        t.push_back({"frequency_hz",
                     [](ScenarioConfig& c, std::string_view key, std::string_view value) {
                         const double f = parse_number(key, value);
                         c.pattern.frequency_hz = f;
                         c.propagation.frequency_hz = f;
                     },
                     [](const ScenarioConfig& c) { return shortest(c.pattern.frequency_hz); }});
        t.push_back(scalar("aperture_radius_m", [](auto& c) -> auto& { return c.pattern.aperture_radius_m; }));
        t.push_back(scalar("max_gain_dbi", [](auto& c) -> auto& { return c.pattern.max_gain_dbi; }));
        t.push_back(scalar("eirp_peak_dbw_per_prb", [](auto& c) -> auto& { return c.tx.eirp_peak_dbw_per_prb; }));
        t.push_back(scalar("channel_gain_db", [](auto& c) -> auto& { return c.tx.channel_gain_db; }));
        t.push_back(scalar("ue_rx_gain_dbi", [](auto& c) -> auto& { return c.tx.ue_rx_gain_dbi; }));
        t.push_back(scalar("zenith_gas_att_db", [](auto& c) -> auto& { return c.propagation.zenith_gas_att_db; }));
        t.push_back(scalar("rain_cloud_att_db", [](auto& c) -> auto& { return c.propagation.rain_cloud_att_db; }));
        t.push_back(scalar("scintillation_att_db", [](auto& c) -> auto& { return c.propagation.scintillation_att_db; }));
        t.push_back(scalar("entry_loss_db", [](auto& c) -> auto& { return c.propagation.entry_loss_db; }));
        t.push_back(scalar("shadow_sigma_db", [](auto& c) -> auto& { return c.propagation.shadow_sigma_db; }));
        t.push_back(scalar("min_elevation_deg", [](auto& c) -> auto& { return c.propagation.min_elevation_deg; }));
        t.push_back(scalar("prb_bandwidth_hz", [](auto& c) -> auto& { return c.noise.prb_bandwidth_hz; }));
        t.push_back(scalar("noise_figure_db", [](auto& c) -> auto& { return c.noise.noise_figure_db; }));
        t.push_back(scalar("reference_temp_k", [](auto& c) -> auto& { return c.noise.reference_temp_k; }));
        t.push_back(scalar("snr_db", [](auto& c) -> auto& { return c.snr_db; }));
        t.push_back(scalar("separation_km", [](auto& c) -> auto& { return c.separation_km; }));
        t.push_back({"alpha_list_deg",
                     [](ScenarioConfig& c, std::string_view key, std::string_view value) {
                         c.alpha_list_deg = parse_list(key, value);
                     },
                     [](const ScenarioConfig& c) { return format_list(c.alpha_list_deg); }});
        t.push_back(scalar("slant_min_km", [](auto& c) -> auto& { return c.slant_min_km; }));
        t.push_back(scalar("slant_max_km", [](auto& c) -> auto& { return c.slant_max_km; }));
        t.push_back({"n_points",
                     [](ScenarioConfig& c, std::string_view key, std::string_view value) {
                         const double v = parse_number(key, value);
                         if (v != std::floor(v) || v < 0.0 || v > 1e7) {
                             throw ConfigError(std::string(key), 0, "expected a non-negative integer");
                         }
                         c.n_points = static_cast<int>(v);
                     },
                     [](const ScenarioConfig& c) { return std::to_string(c.n_points); }});
        t.push_back({"shadow_seed",
                     [](ScenarioConfig& c, std::string_view key, std::string_view value) {
                         value = trim(value);
                         std::uint64_t v = 0;
                         const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
                         if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || value.empty()) {
                             throw ConfigError(std::string(key), 0, "expected an unsigned integer");
                         }
                         c.shadow_seed = v;
                     },
                     [](const ScenarioConfig& c) { return std::to_string(c.shadow_seed); }});
        t.push_back({"latitude_band_deg",
                     [](ScenarioConfig& c, std::string_view key, std::string_view value) {
                         const auto v = parse_list(key, value);
                         if (v.size() != 2) {
                             throw ConfigError(std::string(key), 0, "expected [min, max]");
                         }
                         c.latitude_band_deg = {v[0], v[1]};
                     },
                     [](const ScenarioConfig& c) { return format_list(c.latitude_band_deg); }});
        t.push_back(scalar("ntn_cell_diameter_km", [](auto& c) -> auto& { return c.ntn_cell_diameter_km; }));
        return t;
    }();
    return table;
}

const KeySpec* find_key(std::string_view name) {
    const auto& t = key_table();
    const auto it = std::find_if(t.begin(), t.end(), [&](const KeySpec& k) { return k.name == name; });
    return it == t.end() ? nullptr : &*it;
}

// Re-throws sub-struct validation failures as ConfigError. The key is the
// leading identifier of the message, which every validate() puts first.
template <typename F>
void validate_part(F&& f) {
    try {
        f();
    } catch (const std::invalid_argument& e) {
        std::string_view msg = e.what();
        throw ConfigError(std::string(msg.substr(0, msg.find(' '))), 0, std::string(msg));
    }
}

}  // namespace

ConfigError::ConfigError(std::string key, int line, const std::string& message)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
          (key.empty() || message.rfind(key, 0) == 0 ? message : key + ": " + message)),
      key_(std::move(key)),
      line_(line) {}

void ScenarioConfig::validate() const {
    validate_part([&] { earth.validate(); });
    validate_part([&] { pattern.validate(); });
    validate_part([&] { propagation.validate(); });
    validate_part([&] { tx.validate(); });
    validate_part([&] { noise.validate(); });
    if (pattern.frequency_hz != propagation.frequency_hz) {
        throw ConfigError("frequency_hz", 0, "antenna and propagation frequencies differ");
    }
    if (!(separation_km >= 0.0)) {
        throw ConfigError("separation_km", 0, "must be >= 0");
    }
    if (alpha_list_deg.empty()) {
        throw ConfigError("alpha_list_deg", 0, "must contain at least one angle");
    }
    for (double a : alpha_list_deg) {
        if (!(a >= 0.0 && a < 360.0)) {
            throw ConfigError("alpha_list_deg", 0, "angle " + shortest(a) + " outside [0, 360)");
        }
    }
    if (slant_min_km < earth.altitude_km) {
        throw ConfigError("slant_min_km", 0,
                          "slant_min_km " + shortest(slant_min_km) + " is below altitude_km " + shortest(earth.altitude_km));
    }
    if (!(slant_max_km >= slant_min_km)) {
        throw ConfigError("slant_max_km", 0, "slant_max_km must be >= slant_min_km");
    }
    if (slant_max_km > earth.horizon_slant_km()) {
        throw ConfigError("slant_max_km", 0,
                          "slant_max_km " + shortest(slant_max_km) + " is beyond the horizon slant range " +
                              shortest(earth.horizon_slant_km()));
    }
    if (n_points < 2) {
        throw ConfigError("n_points", 0, "n_points must be >= 2");
    }
    if (!std::isfinite(snr_db)) {
        throw ConfigError("snr_db", 0, "must be finite");
    }
}

void apply_override(ScenarioConfig& config, std::string_view key, std::string_view value) {
    const KeySpec* spec = find_key(trim(key));
    if (spec == nullptr) {
        throw ConfigError(std::string(trim(key)), 0, "unknown key '" + std::string(trim(key)) + "'");
    }
    spec->set(config, spec->name, value);
}

ScenarioConfig load_config(std::string_view text) {
    ScenarioConfig config;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    for (std::size_t pos = 0; pos < text.size();) {
        ++line_no;
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;

        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", line_no, "expected 'key = value', got '" + std::string(line) + "'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("", line_no, "missing key before '='");
        }
        if (!seen.insert(std::string(key)).second) {
            throw ConfigError(std::string(key), line_no, "duplicate key '" + std::string(key) + "'");
        }
        try {
            apply_override(config, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(e.key(), line_no, e.what());
        }
    }
    config.validate();
    return config;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", 0, "cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> k;
        for (const auto& spec : key_table()) {
            k.push_back(spec.name);
        }
        return k;
    }();
    return keys;
}

std::string to_config_text(const ScenarioConfig& config) {
    std::string out;
    for (const auto& spec : key_table()) {
        out += std::string(spec.name) + " = " + spec.get(config) + "\n";
    }
    return out;
}

}  // namespace coex
