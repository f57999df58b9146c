// End-to-end exercise of the command-line tool: spawns the binary given as
// argv[1] and checks exit codes and outputs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "suebk/io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
}

std::string g_cli;

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args) {
    const std::string path = "/tmp/suebk_cli_e2e_capture.txt";
    const std::string cmd = g_cli + " " + args + " >" + path + " 2>&1";
    std::system(cmd.c_str());
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_e2e <path-to-suebk-binary>\n";
        return 2;
    }
    g_cli = argv[1];
    const fs::path work = fs::temp_directory_path() / "suebk_cli_e2e";
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string set_path = (work / "n47.json").string();

    expect(run("generate -d 7 -p 7 -k 3 -N 47 --split 9,5 -o " + set_path) == 0,
           "generate 7x7 k=3 N=47");
    expect(run("verify " + set_path) == 0, "verify returns 0 on the certified set");

    // tampering: scaling one state breaks orthonormality -> exit 1
    {
        suebk::SuebkSet set = suebk::read_state_set(set_path);
        for (auto& z : set.matrices[0].entries()) z *= 0.9;
        suebk::write_state_set((work / "scaled.json").string(), set);
        expect(run("verify " + (work / "scaled.json").string()) == 1,
               "verify flags a scaled state with exit 1");
    }

    // dropping one state: no longer certified (exit 1 or 3, never 0)
    {
        suebk::SuebkSet set = suebk::read_state_set(set_path);
        set.matrices.pop_back();
        suebk::write_state_set((work / "dropped.json").string(), set);
        const int code = run("verify " + (work / "dropped.json").string());
        expect(code != 0, "verify refuses the certificate after dropping a state");
    }

    // malformed file -> exit 2
    {
        std::ofstream bad(work / "bad.json");
        bad << "{ not json";
        bad.close();
        expect(run("verify " + (work / "bad.json").string()) == 2,
               "verify exits 2 on a malformed file");
    }

    // range generation: one file per N
    const std::string sweep_dir = (work / "sweep").string();
    expect(run("generate -d 7 -p 7 -k 3 -N 35..48 -o " + sweep_dir) == 0,
           "generate accepts an N range");
    int count = 0;
    for (const auto& entry : fs::directory_iterator(sweep_dir)) (void)entry, ++count;
    expect(count == 14, "range generation wrote 14 files");

    expect(run("generate -d 4 -p 5 -k 3 -N 15 -o " + (work / "no.json").string()) == 2,
           "generate exits 2 outside both recipes");

    // plan-driven generation
    const std::string plan = std::string(SUEBK_DATA_DIR) + "/plans/c8x9_k4_n54_manual.json";
    const std::string manual_path = (work / "manual54.json").string();
    expect(run("generate --plan " + plan + " -o " + manual_path) == 0,
           "generate --plan builds the shipped layout");
    expect(run("verify " + manual_path) == 0, "the shipped layout verifies");

    // weighing subcommands
    const std::string found = run_capture("weighing search 2 3 4");
    expect(found.find("2 3 4") != std::string::npos, "search prints a catalog record");
    expect(run("weighing search 2 3 4") == 0, "search exit 0 on a hit");
    const std::string missing = run_capture("weighing search 2 3 5 --exhaustive");
    expect(missing.find("nonexistent") != std::string::npos, "exhaustive miss says nonexistent");
    expect(run("weighing search 2 3 5 --exhaustive") == 1, "exhaustive miss exits 1");
    expect(run("weighing search 2 3 4 --budget 1") == 3, "budget cut exits 3");
    expect(run(std::string("weighing validate ") + SUEBK_DATA_DIR + "/weighing_catalog.txt") == 0,
           "catalog file validates");
    expect(run("weighing catalog list") == 0, "catalog list runs");

    // order diagrams
    const std::string grid = run_capture("order 5 9 --format csv");
    std::istringstream in(grid);
    std::string line;
    for (int i = 0; i < 3; ++i) std::getline(in, line);
    expect(line.find(",28,") != std::string::npos, "order 5 9 row 3 holds index 28");
    expect(run("order 1 9") == 2, "order rejects degenerate grids with exit 2");
    const std::string marked = run_capture("order 7 7 --delete 7,1 --delete 7,2 --format csv");
    expect(marked.find("·") != std::string::npos, "deleted cells are marked");

    std::cout << (failures ? "FAILED" : "PASSED") << " cli_e2e\n";
    return failures ? 1 : 0;
}
