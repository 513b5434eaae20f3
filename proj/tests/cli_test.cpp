#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "coex/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "coexsim");
    std::ostringstream out;
    std::ostringstream err;
    const int code = coex::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// name -> value text from a `point` report.
std::map<std::string, std::string> report_values(const std::string& report) {
    std::map<std::string, std::string> values;
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string name;
        std::string value;
        fields >> name >> value;
        values[name] = value;
    }
    return values;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("coexsim_cli_test_" + std::to_string(::getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("point: zenith beam report") {
    const Result r = run({"point", "--slant-km", "600", "--alpha-deg", "0"});
    REQUIRE(r.code == 0);
    const auto v = report_values(r.out);
    CHECK(v.at("theta_deg") == "9.44982");
    CHECK(v.at("d_u_km") == "609.049");
    CHECK(v.at("gain_db") == "-3.11618");
    CHECK(v.at("rx_power_dbw") == "-139.184");
    CHECK(v.at("noise_dbw") == "-144.422");
    CHECK(v.at("sinr_db") == "-1.12567");
    for (const char* key : {"elevation_ue_deg", "pl_fspl_db", "pl_gas_db", "pl_rain_cloud_db", "pl_scint_db",
                            "pl_entry_db", "pl_total_db", "inr_db", "degradation_db", "tx_eirp_dbw"}) {
        CHECK(v.count(key) == 1);
    }
    CHECK(r.out.find("dBW") != std::string::npos);
}

TEST_CASE("point: errors and folding") {
    const Result low = run({"point", "--slant-km", "599", "--alpha-deg", "0"});
    CHECK(low.code == 1);
    CHECK(low.err.find("slant below altitude") != std::string::npos);

    const Result folded = run({"point", "--slant-km", "800", "--alpha-deg", "270"});
    CHECK(folded.code == 0);
    CHECK(folded.err.find("folded to 90") != std::string::npos);
    const Result ninety = run({"point", "--slant-km", "800", "--alpha-deg", "90"});
    CHECK(folded.out == ninety.out);

    CHECK(run({}).code == 2);
    CHECK(run({"point", "--alpha-deg", "0"}).code == 2);
    CHECK(run({"point", "--slant-km", "abc", "--alpha-deg", "0"}).code == 2);
    CHECK(run({"point", "--slant-km", "700", "--alpha-deg", "0", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"point", "--slant-km", "700", "--alpha-deg", "0", "--set", "nope=1"}).code == 1);
    CHECK(run({"point", "--slant-km", "700", "--alpha-deg", "0", "--config", "/no/such/file"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("point: config file and overrides") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "s.cfg";
    std::ofstream(cfg) << "noise_figure_db = 9\n";
    const auto base = report_values(run({"point", "--slant-km", "700", "--alpha-deg", "45"}).out);
    const auto nf9 = report_values(run({"point", "--slant-km", "700", "--alpha-deg", "45", "--config", cfg.string()}).out);
    CHECK(std::stod(nf9.at("noise_dbw")) == doctest::Approx(std::stod(base.at("noise_dbw")) + 2.0).epsilon(1e-5));
    const auto both = report_values(run({"point", "--slant-km", "700", "--alpha-deg", "45", "--config", cfg.string(),
                                         "--set", "scintillation_att_db=1.5"})
                                        .out);
    CHECK(both.at("pl_scint_db") == "1.5");
    CHECK(both.at("noise_dbw") == nf9.at("noise_dbw"));
}

TEST_CASE("sweep: CSV file, determinism and agreement with point") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.csv";
    const fs::path b = tmp.path / "b.csv";
    REQUIRE(run({"sweep", "--out", a.string()}).code == 0);
    REQUIRE(run({"sweep", "--out", b.string(), "--threads", "3"}).code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(std::count(text.begin(), text.end(), '\n') == 501);

    std::istringstream in(text);
    const auto rows = coex::read_sweep_csv(in);
    REQUIRE(rows.size() == 500);
    const auto v = report_values(run({"point", "--slant-km", "600", "--alpha-deg", "0"}).out);
    for (const auto& f : coex::kSweepFields) {
        CHECK(coex::format_sig6(rows[0].*f.member) == v.at(std::string(f.name)));
    }

    const Result bad = run({"sweep", "--out", (tmp.path / "missing_dir" / "x.csv").string()});
    CHECK(bad.code == 1);
    CHECK(run({"sweep"}).code == 2);
    CHECK(run({"sweep", "--out", a.string(), "--set", "slant_min_km=500"}).code == 1);
}

TEST_CASE("plot: SVG output and failure modes") {
    TempDir tmp;
    const fs::path csv = tmp.path / "s.csv";
    const fs::path svg = tmp.path / "s.svg";
    REQUIRE(run({"sweep", "--out", csv.string()}).code == 0);

    REQUIRE(run({"plot", "--csv", csv.string(), "--metric", "sinr_db", "--out", svg.string()}).code == 0);
    const std::string doc = slurp(svg);
    CHECK(doc.rfind("<?xml", 0) == 0);
    CHECK(doc.find("class=\"reference\"") != std::string::npos);

    const Result unknown = run({"plot", "--csv", csv.string(), "--metric", "theta", "--out", svg.string()});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("rx_power_dbw") != std::string::npos);

    const fs::path empty = tmp.path / "empty.csv";
    std::ofstream(empty) << slurp(csv).substr(0, slurp(csv).find('\n') + 1);
    const Result e = run({"plot", "--csv", empty.string(), "--metric", "rx_power_dbw", "--out", svg.string()});
    CHECK(e.code == 1);

    const fs::path broken = tmp.path / "broken.csv";
    std::string body = slurp(csv);
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        pos = body.find('\n', pos) + 1;
    }
    body.insert(pos, "1,2,oops\n");
    std::ofstream(broken) << body;
    const Result m = run({"plot", "--csv", broken.string(), "--metric", "rx_power_dbw", "--out", svg.string()});
    CHECK(m.code == 1);
    CHECK(m.err.find("row 4") != std::string::npos);

    CHECK(run({"plot", "--csv", (tmp.path / "nope.csv").string(), "--metric", "sinr_db", "--out", svg.string()}).code ==
          1);
}
