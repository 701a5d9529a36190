#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "regspan/bipartite_graph.hpp"
#include "regspan/edge_list_io.hpp"
#include "regspan/extremal.hpp"

namespace fs = std::filesystem;
using namespace regspan;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const fs::path& tmp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_test_tmp";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CmdResult run_cli(const std::string& args) {
    const fs::path out_file = tmp_dir() / "stdout.txt";
    const fs::path err_file = tmp_dir() / "stderr.txt";
    const std::string cmd = std::string(REGSPAN_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    return {status >= 0 ? (status >> 8) & 0xff : -1, slurp(out_file), slurp(err_file)};
}

}  // namespace

TEST_CASE("gen extremal writes the expected edge count") {
    const fs::path path = tmp_dir() / "extremal_16_10.el";
    CmdResult r = run_cli("gen extremal 16 10 --out " + path.string());
    CHECK(r.exit_code == 0);
    BipartiteGraph g = read_edge_list_file(path.string());
    CHECK(g.size() == 16);
    CHECK(g.edge_count() == 168);
    CHECK(min_degree(g) == 10);
    CHECK(g == build_extremal(16, 10));
}

TEST_CASE("gen circulant writes the expected edge count") {
    const fs::path path = tmp_dir() / "circ_4_2.el";
    CmdResult r = run_cli("gen circulant 4 2 --out " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(read_edge_list_file(path.string()).edge_count() == 8);
}

TEST_CASE("gen random is byte-identical for a fixed seed") {
    const fs::path p1 = tmp_dir() / "rnd_1.el";
    const fs::path p2 = tmp_dir() / "rnd_2.el";
    CHECK(run_cli("gen random 6 3 --seed 1 --out " + p1.string()).exit_code == 0);
    CHECK(run_cli("gen random 6 3 --seed 1 --out " + p2.string()).exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(min_degree(read_edge_list_file(p1.string())) >= 3);
}

TEST_CASE("gen refuses infeasible extremal parameters") {
    CmdResult r = run_cli("gen extremal 6 4 --out " + (tmp_dir() / "never.el").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("infeasible") != std::string::npos);
}

TEST_CASE("gen output survives a parse+write round trip byte for byte") {
    const fs::path path = tmp_dir() / "round.el";
    REQUIRE(run_cli("gen random 9 4 --seed 11 --out " + path.string()).exit_code == 0);
    const std::string original = slurp(path);
    BipartiteGraph g = read_edge_list_file(path.string());
    std::ostringstream rewritten;
    write_edge_list(rewritten, g);
    CHECK(rewritten.str() == original);
}

TEST_CASE("maxreg reports r_max for generated graphs") {
    const fs::path k33 = tmp_dir() / "k33.el";
    REQUIRE(run_cli("gen circulant 3 3 --out " + k33.string()).exit_code == 0);
    CmdResult r = run_cli("maxreg " + k33.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,d,source,seed,rho_floor,rho_ceil,upper_bound,r_max,cert,elapsed_ms") !=
          std::string::npos);
    CHECK(r.out.find("3,3,file,,3,3,,3,pass,0") != std::string::npos);

    const fs::path ext = tmp_dir() / "ext_16_10.el";
    REQUIRE(run_cli("gen extremal 16 10 --out " + ext.string()).exit_code == 0);
    r = run_cli("maxreg " + ext.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("16,10,file,,9,9,,9,pass,0") != std::string::npos);
}

TEST_CASE("maxreg handles the edgeless graph") {
    const fs::path path = tmp_dir() / "edgeless.el";
    std::ofstream(path) << "2\n";
    CmdResult r = run_cli("maxreg " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2,0,file,,,,,0,,0") != std::string::npos);  // no bounds below d = n/2
}

TEST_CASE("maxreg emits a verified regular subgraph") {
    const fs::path ext = tmp_dir() / "ext_sub.el";
    const fs::path sub = tmp_dir() / "sub.el";
    REQUIRE(run_cli("gen extremal 16 10 --out " + ext.string()).exit_code == 0);
    CmdResult r = run_cli("maxreg " + ext.string() + " --emit-subgraph " + sub.string());
    CHECK(r.exit_code == 0);
    BipartiteGraph g = read_edge_list_file(ext.string());
    BipartiteGraph h = read_edge_list_file(sub.string());
    REQUIRE(h.size() == 16);
    for (int v = 0; v < 16; ++v) {
        CHECK(h.degree_a(v) == 9);
        CHECK(h.degree_b(v) == 9);
        for (int b : h.neighbors_a(v)) CHECK(g.has_edge(v, b));
    }
}

TEST_CASE("maxreg jsonlike output") {
    const fs::path k33 = tmp_dir() / "k33_json.el";
    REQUIRE(run_cli("gen circulant 3 3 --out " + k33.string()).exit_code == 0);
    CmdResult r = run_cli("maxreg " + k33.string() + " --format jsonlike");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"r_max\":3") != std::string::npos);
    CHECK(r.out.find("\"source\":\"file\"") != std::string::npos);
}

TEST_CASE("maxreg rejects malformed input") {
    const fs::path bad = tmp_dir() / "bad.el";
    std::ofstream(bad) << "3\n0 9\n";
    CHECK(run_cli("maxreg " + bad.string()).exit_code == 2);
    CHECK(run_cli("maxreg " + (tmp_dir() / "missing.el").string()).exit_code == 2);
}

TEST_CASE("check grid verdicts and exit codes") {
    CmdResult fail = run_cli("check grid 4 2 2");
    CHECK(fail.exit_code == 1);
    CHECK(fail.err.find("(3,3)") != std::string::npos);
    CHECK(fail.out.find("fail") != std::string::npos);

    CmdResult pass = run_cli("check grid 6 3 1");
    CHECK(pass.exit_code == 0);
    CHECK(pass.err.find("PASS") != std::string::npos);
}

TEST_CASE("check cert verdict") {
    CmdResult r = run_cli("check cert 16 10");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("PASS") != std::string::npos);
    CHECK(r.err.find("r=9") != std::string::npos);

    // the grid sometimes certifies more than the guaranteed floor at small n
    CmdResult small = run_cli("check cert 6 3");
    CHECK(small.exit_code == 0);
    CHECK(small.err.find("r=1") != std::string::npos);
    CHECK(small.err.find("grid-certifiable up to r=2") != std::string::npos);
}

TEST_CASE("check gale-ryser prints the witness") {
    const fs::path path = tmp_dir() / "path2.el";
    std::ofstream(path) << "2\n0 0\n0 1\n1 1\n";
    CmdResult r = run_cli("check gale-ryser " + path.string() + " 2");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("X={1}") != std::string::npos);

    CmdResult ok = run_cli("check gale-ryser " + path.string() + " 1");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("check gale-ryser refuses oversized instances") {
    const fs::path path = tmp_dir() / "big.el";
    std::ofstream(path) << "21\n";
    CmdResult r = run_cli("check gale-ryser " + path.string() + " 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("refusing") != std::string::npos);
}

TEST_CASE("sweep reproduces the extremal bound rows") {
    const fs::path csv = tmp_dir() / "sweep.csv";
    CmdResult r = run_cli("sweep --delta 5/8 --n 16,32 --source extremal --out " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string table = slurp(csv);
    CHECK(table.find("16,10,extremal,,9,9,9,9,pass,0") != std::string::npos);
    CHECK(table.find("32,20,extremal,,18,18,18,18,pass,0") != std::string::npos);
}

TEST_CASE("sweep over seeded random graphs keeps the floor") {
    CmdResult r = run_cli("sweep --delta 1/2 --n 8 --source random --seeds 1..20");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("0 below the guaranteed floor") != std::string::npos);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.find(",random,") != std::string::npos) {
            ++rows;
            CHECK(line.find("8,4,random,") == 0);
        }
    }
    CHECK(rows == 20);
}

TEST_CASE("sweep is byte-identical across runs") {
    const fs::path c1 = tmp_dir() / "s1.csv";
    const fs::path c2 = tmp_dir() / "s2.csv";
    const std::string args = "sweep --delta 5/8 --n 8,16 --source extremal,random,circulant --seeds 1..5 --out ";
    CHECK(run_cli(args + c1.string()).exit_code == 0);
    CHECK(run_cli(args + c2.string()).exit_code == 0);
    CHECK(slurp(c1) == slurp(c2));
    CHECK(!slurp(c1).empty());
}

TEST_CASE("sweep rejects non-integer degree products") {
    CmdResult r = run_cli("sweep --delta 5/8 --n 12 --source extremal");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("not an integer") != std::string::npos);
}
