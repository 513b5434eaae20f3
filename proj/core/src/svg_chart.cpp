#include "coex/svg_chart.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coex {
namespace {

struct MetricInfo {
    ChartMetric metric;
    std::string_view name;
    std::string_view title;
    std::string_view axis;
};

constexpr std::array<MetricInfo, 5> kMetrics{{
    {ChartMetric::TxEirp, "tx_eirp_dbw", "TX interference EIRP toward the UE", "tx_eirp_dbw: EIRP per PRB (dBW)"},
    {ChartMetric::PathLoss, "pl_total_db", "Path loss to the UE", "pl_total_db: path loss (dB)"},
    {ChartMetric::RxPower, "rx_power_dbw", "Received interference power per PRB",
     "rx_power_dbw: interference power per PRB (dBW)"},
    {ChartMetric::Sinr, "sinr_db", "TN SINR", "sinr_db: SINR (dB)"},
    {ChartMetric::Degradation, "degradation_db", "TN SINR degradation", "degradation_db: SNR - SINR (dB)"},
}};

constexpr std::array<ChartMetric, 5> kMetricList{ChartMetric::TxEirp, ChartMetric::PathLoss, ChartMetric::RxPower,
                                                 ChartMetric::Sinr, ChartMetric::Degradation};

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                   "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const MetricInfo& info(ChartMetric m) {
    return *std::find_if(kMetrics.begin(), kMetrics.end(), [m](const MetricInfo& i) { return i.metric == m; });
}

double SweepRow::*member_for(ChartMetric m) {
    const std::string_view name = info(m).name;
    for (const auto& f : kSweepFields) {
        if (f.name == name) {
            return f.member;
        }
    }
    throw std::logic_error("chart metric without a sweep column");
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v, int precision = 6) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string coord(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

struct Axis {
    double lo;
    double hi;
    double step;
};

Axis nice_axis(double lo, double hi, int target_ticks) {
    if (!(hi > lo)) {
        const double pad = std::max(1.0, std::abs(lo) * 0.01);
        lo -= pad;
        hi += pad;
    }
    const double raw = (hi - lo) / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    const double step = (r < 1.5 ? 1.0 : r < 3.0 ? 2.0 : r < 7.0 ? 5.0 : 10.0) * mag;
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

}  // namespace

std::string_view chart_metric_name(ChartMetric metric) { return info(metric).name; }

std::optional<ChartMetric> parse_chart_metric(std::string_view name) {
    for (const auto& m : kMetrics) {
        if (m.name == name) {
            return m.metric;
        }
    }
    return std::nullopt;
}

std::span<const ChartMetric> all_chart_metrics() { return kMetricList; }

ChartSpec default_chart_spec(ChartMetric metric, double snr_db) {
    ChartSpec spec;
    spec.metric = metric;
    spec.title = std::string(info(metric).title) + " on varying slant ranges";
    spec.y_label = info(metric).axis;
    if (metric == ChartMetric::Sinr) {
        spec.reference_y = snr_db;
        spec.reference_label = "SNR = " + num(snr_db) + " dB";
    }
    return spec;
}

std::string render_svg(std::span<const SweepRow> rows, const ChartSpec& spec) {
    if (rows.empty()) {
        throw std::invalid_argument("render_svg: no rows");
    }
    const auto member = member_for(spec.metric);

    struct Series {
        double alpha;
        std::vector<std::pair<double, double>> points;
    };
    std::vector<Series> series;
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const SweepRow& r : rows) {
        auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) { return s.alpha == r.alpha_deg; });
        if (it == series.end()) {
            series.push_back({r.alpha_deg, {}});
            it = series.end() - 1;
        }
        const double y = r.*member;
        it->points.emplace_back(r.slant_km, y);
        x_min = std::min(x_min, r.slant_km);
        x_max = std::max(x_max, r.slant_km);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (spec.reference_y) {
        y_min = std::min(y_min, *spec.reference_y);
        y_max = std::max(y_max, *spec.reference_y);
    }
    if (!(x_max > x_min)) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    const Axis ya = nice_axis(y_min, y_max, 6);

    const double left = 90.0;
    const double right = 150.0;
    const double top = 50.0;
    const double bottom = 60.0;
    const double plot_w = spec.width - left - right;
    const double plot_h = spec.height - top - bottom;
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + (ya.hi - y) / (ya.hi - ya.lo) * plot_h; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" fill=\"white\"/>\n";
    s += "<text x=\"" + coord(left + plot_w / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(spec.title) + "</text>\n";

    // Grid and tick labels.
    s += "<g class=\"y-axis\" stroke=\"#dddddd\">\n";
    const int n_yticks = static_cast<int>(std::lround((ya.hi - ya.lo) / ya.step));
    for (int i = 0; i <= n_yticks; ++i) {
        const double v = ya.lo + i * ya.step;
        const double y = py(v);
        s += "<line x1=\"" + coord(left) + "\" y1=\"" + coord(y) + "\" x2=\"" + coord(left + plot_w) + "\" y2=\"" +
             coord(y) + "\"/>\n";
        s += "<text x=\"" + coord(left - 6) + "\" y=\"" + coord(y + 4) +
             "\" text-anchor=\"end\" stroke=\"none\" fill=\"black\">" + num(v) + "</text>\n";
    }
    s += "</g>\n";
    const Axis xa = nice_axis(x_min, x_max, 8);
    s += "<g class=\"x-axis\" stroke=\"#dddddd\">\n";
    for (double v = xa.lo; v <= x_max + 1e-9 * xa.step; v += xa.step) {
        if (v < x_min - 1e-9 * xa.step) {
            continue;
        }
        const double x = px(v);
        s += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(top) + "\" x2=\"" + coord(x) + "\" y2=\"" +
             coord(top + plot_h) + "\"/>\n";
        s += "<text x=\"" + coord(x) + "\" y=\"" + coord(top + plot_h + 18) +
             "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">" + num(v) + "</text>\n";
    }
    s += "</g>\n";
    s += "<rect x=\"" + coord(left) + "\" y=\"" + coord(top) + "\" width=\"" + coord(plot_w) + "\" height=\"" +
         coord(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text class=\"x-label\" x=\"" + coord(left + plot_w / 2) + "\" y=\"" + coord(spec.height - 15.0) +
         "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
    s += "<text class=\"y-label\" x=\"18\" y=\"" + coord(top + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + coord(top + plot_h / 2) + ")\">" +
         escape(spec.y_label) + "</text>\n";

    if (spec.reference_y) {
        const double y = py(*spec.reference_y);
        s += "<line class=\"reference\" x1=\"" + coord(left) + "\" y1=\"" + coord(y) + "\" x2=\"" +
             coord(left + plot_w) + "\" y2=\"" + coord(y) +
             "\" stroke=\"black\" stroke-dasharray=\"6 4\" data-value=\"" + num(*spec.reference_y, 17) + "\"/>\n";
        s += "<text x=\"" + coord(left + plot_w - 4) + "\" y=\"" + coord(y - 5) + "\" text-anchor=\"end\">" +
             escape(spec.reference_label) + "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const Series& ser = series[i];
        const std::string_view color = kPalette[i % kPalette.size()];
        s += "<polyline class=\"series\" data-alpha=\"" + num(ser.alpha) + "\" fill=\"none\" stroke=\"" +
             std::string(color) + "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t k = 0; k < ser.points.size(); ++k) {
            if (k > 0) {
                s += ' ';
            }
            s += coord(px(ser.points[k].first)) + "," + coord(py(ser.points[k].second));
        }
        s += "\"/>\n";
        const double ly = top + 10.0 + 20.0 * static_cast<double>(i);
        const double lx = left + plot_w + 15.0;
        s += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly) + "\" x2=\"" + coord(lx + 25) + "\" y2=\"" +
             coord(ly) + "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
        s += "<text class=\"legend\" x=\"" + coord(lx + 30) + "\" y=\"" + coord(ly + 4) + "\">α = " +
             num(ser.alpha) + "°</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace coex
