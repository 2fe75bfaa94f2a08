#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("HARTREE_LAB_BIN");
    REQUIRE_MESSAGE(b != nullptr, "HARTREE_LAB_BIN must point at the hartree_lab binary");
    return std::string(b);
}

int run(const std::string& args) {
    const std::string cmd = "\"" + bin() + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("gate exit codes track the verdict") {
    CHECK(run("gate --n 3 --s 0 --alpha 2 --b 1/2") == 0);
    CHECK(run("gate --n 3 --s 1 --alpha 6/5 --b 1") == 0);
    CHECK(run("gate --n 3 --s 1 --alpha 2 --b 1") == 1);   // empty admissible window
    CHECK(run("gate --n 3 --s 0 --alpha 2") == 2);          // missing --b
    CHECK(run("frobnicate") == 2);                          // unknown subcommand
}

TEST_CASE("gate json report carries the condition keys") {
    const fs::path dir = fresh_dir("hartree_cli_gate");
    const fs::path out = dir / "gate.json";
    CHECK(run("gate --n 3 --s 0 --alpha 2 --b 1/2 --json " + out.string()) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["pass"] == true);
    CHECK(j["checks"].contains("as-1"));
    CHECK(j["checks"].contains("as-2"));
    CHECK(j["checks"].contains("as-r"));
    CHECK(j["checks"].contains("cb"));
    fs::remove_all(dir);
}

TEST_CASE("scan output is byte-identical across thread counts and replays") {
    const fs::path dir = fresh_dir("hartree_cli_scan");
    const fs::path a = dir / "a.csv", b = dir / "b.csv";
    const std::string base = "scan --n 3 --s 0 --alpha-min 1 --alpha-max 2 --alpha-steps 5 "
                             "--b-min 0 --b-max 1 --b-steps 5 --out ";
    {
        const std::string cmd = "HARTREE_LAB_THREADS=1 \"" + bin() + "\" " + base + a.string() +
                                " > /dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    }
    {
        const std::string cmd = "HARTREE_LAB_THREADS=7 \"" + bin() + "\" " + base + b.string() +
                                " > /dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    }
    const std::string ca = slurp(a);
    CHECK(ca == slurp(b));
    // 5 x 5 grid plus header
    CHECK(std::count(ca.begin(), ca.end(), '\n') == 26);

    // Replay one passing and one failing row through gate.
    CHECK(run("gate --n 3 --s 0 --alpha 3/2 --b 1/4") == 0);
    CHECK(run("gate --n 3 --s 0 --alpha 2 --b 1") == 1);
    fs::remove_all(dir);
}

TEST_CASE("verify identities suite passes on a reduced grid") {
    const fs::path dir = fresh_dir("hartree_cli_verify");
    const fs::path json = dir / "report.json";
    CHECK(run("verify --suite identities --grid 64 --box 4 --json " + json.string()) == 0);
    auto j = nlohmann::json::parse(slurp(json));
    CHECK(j["pass"] == true);
    CHECK(j["checks"].contains("weak-power-norm"));
    fs::remove_all(dir);
}

TEST_CASE("simulate runs from a config and writes its artifacts") {
    const fs::path dir = fresh_dir("hartree_cli_sim");
    write_file(dir / "run.cfg",
               "n = 3\ns = 0\nalpha = 2\nb = 1/2\nlambda = 1\n"
               "grid_points = 16\nbox = 8\ninit = gaussian\ninit_sigma = 3/2\n"
               "dt = 1/100\nsteps = 20\nseed = 5\n");
    CHECK(run("simulate --config " + (dir / "run.cfg").string() + " --out " +
              (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "report.json"));
    CHECK(fs::exists(dir / "out" / "report.csv"));
    CHECK(fs::exists(dir / "out" / "trajectory.csv"));
    CHECK(fs::exists(dir / "out" / "final.bin"));
    const std::string traj = slurp(dir / "out" / "trajectory.csv");
    CHECK(traj.rfind("t,mass,energy,hs,hs_dot,lorentz_r2,wsr2\n", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("config mistakes exit with the usage code") {
    const fs::path dir = fresh_dir("hartree_cli_bad");
    write_file(dir / "bad.cfg",
               "n = 3\ns = 0\nalpha = 2\nb = 1/2\nlambda = 1\nno_such_key = 1\n");
    CHECK(run("simulate --config " + (dir / "bad.cfg").string() + " --out " +
              (dir / "out").string()) == 2);
    write_file(dir / "malformed.cfg", "n = 3\ns = 0.1/3\n");
    CHECK(run("simulate --config " + (dir / "malformed.cfg").string() + " --out " +
              (dir / "out").string()) == 2);
    CHECK(run("simulate --config " + (dir / "missing.cfg").string() + " --out " +
              (dir / "out").string()) == 2);
    fs::remove_all(dir);
}

TEST_CASE("picard runs from a config on a coarse grid") {
    const fs::path dir = fresh_dir("hartree_cli_picard");
    write_file(dir / "run.cfg",
               "n = 3\ns = 0\nalpha = 2\nb = 1/2\nlambda = 1\n"
               "grid_points = 16\nbox = 8\ninit = gaussian\ninit_sigma = 3/2\n"
               "init_amp = 1\ninit_hs = 1/100\n"
               "T = 1/4\nnodes = 6\nmax_iter = 5\nq = 4\nr = 3\nsim_dt = 1/50\nseed = 5\n");
    CHECK(run("picard --config " + (dir / "run.cfg").string() + " --out " +
              (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "iterations.csv"));
    auto j = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    CHECK(j["checks"].contains("contraction-by-3"));
    fs::remove_all(dir);
}
