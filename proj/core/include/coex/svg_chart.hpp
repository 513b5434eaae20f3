#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "coex/sweep.hpp"

namespace coex {

// Quantities that can be charted against slant range.
enum class ChartMetric { TxEirp, PathLoss, RxPower, Sinr, Degradation };

// SweepRow column name of the metric, e.g. "rx_power_dbw".
std::string_view chart_metric_name(ChartMetric metric);
std::optional<ChartMetric> parse_chart_metric(std::string_view name);
std::span<const ChartMetric> all_chart_metrics();

struct ChartSpec {
    ChartMetric metric = ChartMetric::RxPower;
    std::string title;
    std::string x_label = "slant range (km)";
    std::string y_label;
    // Optional horizontal line, e.g. the interference-free SNR on SINR charts.
    std::optional<double> reference_y;
    std::string reference_label;
    int width = 800;
    int height = 500;
};

// Title and axis labels for the metric. SINR charts get a reference line at snr_db.
ChartSpec default_chart_spec(ChartMetric metric, double snr_db);

// Self-contained SVG line chart: one polyline per alpha (in order of first
// appearance) with a legend entry "α = N°". Throws std::invalid_argument on
// empty input.
std::string render_svg(std::span<const SweepRow> rows, const ChartSpec& spec);

}  // namespace coex
