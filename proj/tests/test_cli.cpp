// Integration tests that drive the built CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NLCS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CmdResult r;
    r.out = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

struct Csv {
    std::string config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    const auto lines = split(text, '\n');
    REQUIRE(lines.size() >= 2);
    REQUIRE(lines[0].rfind("# config:", 0) == 0);
    csv.config = lines[0];
    csv.columns = split(lines[1], ',');
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto cells = split(lines[i], ',');
        REQUIRE(cells.size() <= csv.columns.size());
        cells.resize(csv.columns.size());  // restore trailing empty cells
        csv.rows.push_back(cells);
    }
    return csv;
}

int column_index(const Csv& csv, const std::string& name) {
    for (std::size_t i = 0; i < csv.columns.size(); ++i)
        if (csv.columns[i] == name) return int(i);
    return -1;
}

}  // namespace

TEST_CASE("dispersion emits labeled CSV with the coherent benchmark") {
    auto r = run_cli("dispersion --steps 5 --z-max 2");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.config.find("command=dispersion") != std::string::npos);
    CHECK(csv.config.find("levels=40") != std::string::npos);
    CHECK(csv.config.find("convention=sqrt2") != std::string::npos);
    const int ix = column_index(csv, "var_x_sqrt2");
    const int ip = column_index(csv, "var_p_sqrt2");
    REQUIRE(ix >= 0);
    REQUIRE(ip >= 0);
    REQUIRE(csv.rows.size() == 10);
    for (const auto& row : csv.rows) {
        if (row[0] != "harmonic") continue;
        CHECK(std::abs(std::stod(row[ix]) - 0.5) <= 1e-8);
        CHECK(std::abs(std::stod(row[ip]) - 0.5) <= 1e-8);
    }
    // At z = 0 both models hold the vacuum, so the rows must agree.
    const int iz = column_index(csv, "z");
    for (const auto& row : csv.rows) {
        if (row[iz] != "0") continue;
        CHECK(std::abs(std::stod(row[ix]) - 0.5) <= 1e-12);
        CHECK(std::abs(std::stod(row[ip]) - 0.5) <= 1e-12);
    }
}

TEST_CASE("density rows at z = 0 agree across models") {
    auto r = run_cli("density --steps 1 --z-max 0 --x-steps 9");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 18);
    const int id = column_index(csv, "density");
    for (std::size_t i = 0; i < 9; ++i) CHECK(csv.rows[i][id] == csv.rows[i + 9][id]);
}

TEST_CASE("CSV output is byte-stable across runs and output targets") {
    const std::string args = "entropy-sweep -m quadratic --gamma 0.3 --steps 7 --levels 25";
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    auto to_file = run_cli(args + " -o cli_test_tmp.csv");
    REQUIRE(to_file.exit_code == 0);
    std::ifstream in("cli_test_tmp.csv", std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == first.out);
    std::remove("cli_test_tmp.csv");
}

TEST_CASE("state-dump matches the Poisson distribution at z = 1") {
    auto r = run_cli("state-dump --z 1 --levels 40");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.config.find("tail_weight=") != std::string::npos);
    const int iprob = column_index(csv, "prob");
    REQUIRE(iprob >= 0);
    REQUIRE(csv.rows.size() == 41);
    double pmf = std::exp(-1.0);
    for (std::size_t n = 0; n < csv.rows.size(); ++n) {
        CHECK(std::abs(std::stod(csv.rows[n][iprob]) - pmf) <= 1e-8);
        pmf /= double(n + 1);
    }
}

TEST_CASE("a gamma = 0 squeezed dump equals the coherent dump") {
    auto a = run_cli("state-dump -m quadratic --z 1.2 --gamma 0 --levels 25");
    auto b = run_cli("state-dump -m quadratic --z 1.2 --levels 25");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("a squeezed quadratic dump is normalized and converged") {
    auto r = run_cli("state-dump -m quadratic --z 1 --gamma 0.5 --levels 40");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.config.find("converged=true") != std::string::npos);
    const int iprob = column_index(csv, "prob");
    double mass = 0.0;
    for (const auto& row : csv.rows) mass += std::stod(row[iprob]);
    CHECK(std::abs(mass - 1.0) <= 1e-10);
}

TEST_CASE("entropy-sweep flags and zeros for coherent harmonic input") {
    auto r = run_cli("entropy-sweep -m harmonic --gamma 0 --steps 4 --z-max 3");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    const int is = column_index(csv, "S");
    const int ic = column_index(csv, "converged");
    REQUIRE(is >= 0);
    REQUIRE(csv.rows.size() == 4);
    for (const auto& row : csv.rows) {
        CHECK(std::stod(row[is]) <= 1e-8);
        CHECK(row[ic] == "true");
    }
}

TEST_CASE("JSON output carries the config object and typed rows") {
    auto r = run_cli("state-dump --z 0.5 --levels 12 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["config"]["command"] == "state-dump");
    CHECK(doc["config"]["levels"] == "12");
    REQUIRE(doc["rows"].size() == 13);
    CHECK(doc["rows"][0][0] == 0);
    CHECK(doc["rows"][0][3].get<double>() > 0.7);  // vacuum weight of a weak state
}

TEST_CASE("verify passes by default and fails under fault injection") {
    auto ok = run_cli("verify");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);
    CHECK(ok.out.find("verify: 5/5 suites passed") != std::string::npos);

    auto bad = run_cli("verify --inject-fault");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("[FAIL] closed-form-vs-recurrence") != std::string::npos);
}

TEST_CASE("verify reports truncation drift for shallow levels") {
    auto r = run_cli("verify --levels 10");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("[FAIL] truncation-drift") != std::string::npos);
    CHECK(r.out.find("S(N=10)") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 1") {
    CHECK(run_cli("dispersion --steps 0").exit_code == 1);
    CHECK(run_cli("dispersion --z-min 2 --z-max 1").exit_code == 1);
    CHECK(run_cli("entropy-sweep --gamma 1.5").exit_code == 1);
    CHECK(run_cli("entropy-sweep -m linquad:1,0").exit_code == 1);
    CHECK(run_cli("entropy-sweep -m nosuchmodel").exit_code == 1);
    CHECK(run_cli("state-dump -m harmonic -m quadratic").exit_code == 1);
    CHECK(run_cli("entropy-sweep --preset fig4a").exit_code == 1);
    CHECK(run_cli("dispersion --no-such-flag").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("linquad rows keep the model name and parameters in separate cells") {
    auto r = run_cli("entropy-sweep -m linquad:1.5,2 --gamma 0 --steps 2 --levels 15");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 2);
    for (const auto& row : csv.rows) {
        CHECK(row[column_index(csv, "model")] == "linquad");
        CHECK(row[column_index(csv, "A")] == "1.5");
        CHECK(row[column_index(csv, "B")] == "2");
    }
}

TEST_CASE("fig presets fill documented defaults") {
    auto r = run_cli("entropy-sweep --preset fig3 --steps 3");
    REQUIRE(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.config.find("gamma=0.5") != std::string::npos);
    CHECK(csv.config.find("models=harmonic+quadratic") != std::string::npos);

    auto f4 = run_cli("entropy-sweep --preset fig4a -m linquad:1,2 --steps 2");
    REQUIRE(f4.exit_code == 0);
    auto csv4 = parse_csv(f4.out);
    CHECK(csv4.config.find("levels=30") != std::string::npos);
    CHECK(csv4.config.find("gamma=0") != std::string::npos);
    CHECK(csv4.config.find("models=harmonic+quadratic+linquad:1,2") != std::string::npos);
}
