#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "cdiag/diagram.hpp"
#include "cdiag/dynkin.hpp"
#include "cdiag/mutation.hpp"
#include "cdiag/textio.hpp"

using namespace cdiag;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLUSTERDIAG_BIN) + " " + args + " 2>&1";
    std::FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// Files shared by the cases below, written once.
const fs::path& dir() {
    static const fs::path d = [] {
        fs::path p = fs::temp_directory_path() / "cdiag_cli_test";
        fs::create_directories(p);
        write_diagram_file((p / "i24.diag").string(), new_diagram(2, {{0, 1, 4}}));
        write_diagram_file((p / "a2.diag").string(), new_diagram(2, {{0, 1, 1}}));
        write_diagram_file((p / "a3.diag").string(), dynkin('A', 3));
        write_diagram_file((p / "a8.diag").string(), dynkin('A', 8));
        write_diagram_file((p / "d5.diag").string(), dynkin('D', 5));
        write_diagram_file((p / "e8.diag").string(), dynkin('E', 8));
        write_diagram_file((p / "c51.diag").string(), affine_diagram('C', 5));
        write_diagram_file((p / "d41.diag").string(), affine_diagram('D', 4));
        write_diagram_file((p / "e61.diag").string(), affine_diagram('E', 6));
        write_diagram_file((p / "one.diag").string(), new_diagram(1, {}));
        write_diagram_file((p / "tri.diag").string(), mutate(dynkin('A', 3), 1));
        write_diagram_file((p / "path4.diag").string(), new_diagram(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}));
        write_diagram_file((p / "path4b.diag").string(), new_diagram(4, {{2, 0, 1}, {0, 3, 1}, {3, 1, 1}}));
        write_diagram_file((p / "star4.diag").string(), new_diagram(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
        write_diagram_file((p / "sqpend.diag").string(),
                           new_diagram(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 4, 1}}));
        std::ofstream bad(p / "bad.diag");
        bad << "vertices 3\nedge 0 1 1\nedge 1 2 2\nedge 2 0 1\n";
        std::ofstream mal(p / "malformed.diag");
        mal << "vertices 3\nedge 0\n";
        return p;
    }();
    return d;
}

std::string file(const char* name) { return (dir() / name).string(); }

} // namespace

TEST_CASE("cli validate") {
    RunResult r = run_cli("validate " + file("a3.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"valid\": true"));

    r = run_cli("validate " + file("bad.diag"));
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "\"valid\": false"));
    CHECK(contains(r.out, "cycle")); // names the offending cycle condition

    r = run_cli("validate " + file("malformed.diag"));
    CHECK(r.rc == 3);
    CHECK(contains(r.out, "line 2"));

    r = run_cli("validate " + (dir() / "absent.diag").string());
    CHECK(r.rc == 3);
}

TEST_CASE("cli mutate") {
    SUBCASE("a weight-4 pair flips") {
        RunResult r = run_cli("mutate " + file("i24.diag") + " --at 0");
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "edge 1 0 4"));
    }

    SUBCASE("mutating twice at the same vertex round-trips") {
        RunResult plain = run_cli("mutate " + file("a3.diag"));
        RunResult twice = run_cli("mutate " + file("a3.diag") + " --at 1 --at 1");
        CHECK(plain.rc == 0);
        CHECK(twice.rc == 0);
        CHECK(plain.out == twice.out);
        RunResult seq = run_cli("mutate " + file("a3.diag") + " --seq 1,1");
        CHECK(seq.out == plain.out);
    }

    SUBCASE("the middle of a path makes a triangle") {
        RunResult r = run_cli("mutate " + file("a3.diag") + " --at 1");
        CHECK(r.rc == 0);
        int edges = 0;
        for (std::size_t pos = 0; (pos = r.out.find("edge ", pos)) != std::string::npos; ++pos) ++edges;
        CHECK(edges == 3);
    }

    SUBCASE("print and parse are inverse") {
        fs::path out = dir() / "roundtrip.diag";
        RunResult first = run_cli("mutate " + file("d5.diag") + " --out " + out.string());
        CHECK(first.rc == 0);
        RunResult second = run_cli("mutate " + out.string());
        CHECK(second.out == slurp(out));
    }

    SUBCASE("a bad vertex index is an input error") {
        CHECK(run_cli("mutate " + file("a3.diag") + " --at 9").rc == 3);
    }

    SUBCASE("malformed --seq tokens are rejected") {
        RunResult gap = run_cli("mutate " + file("a3.diag") + " --seq 1,,2");
        CHECK(gap.rc == 3);
        CHECK(contains(gap.out, "not a vertex index"));
        CHECK(run_cli("mutate " + file("a3.diag") + " --seq 1x").rc == 3);
        CHECK(run_cli("mutate " + file("a3.diag") + " --seq 1,2,").rc == 3);
    }
}

TEST_CASE("cli recognize") {
    RunResult r = run_cli("recognize " + file("d5.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"verdict\": \"2-finite\""));

    r = run_cli("recognize " + file("c51.diag") + " --witness --label");
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "\"verdict\": \"2-infinite\""));
    CHECK(contains(r.out, "\"witness_label\": \"C5(1)\""));

    r = run_cli("recognize " + file("sqpend.diag") + " --witness --label");
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "\"witness_label\": \"A3(1)\""));
    // The witness is the square, not the pendant vertex 4.
    CHECK(contains(r.out, "\"witness\": [\n    0,\n    1,\n    2,\n    3\n  ]"));

    r = run_cli("recognize " + file("tri.diag") + " --reduce");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"reduction\""));
    CHECK(contains(r.out, "\"label\": \"A3\""));

    SUBCASE("limits from the environment surface as inconclusive") {
        setenv("CLUSTER_RECOG_LIMITS", "members=2", 1);
        RunResult lim = run_cli("recognize " + file("c51.diag"));
        unsetenv("CLUSTER_RECOG_LIMITS");
        CHECK(lim.rc == 2);
        CHECK(contains(lim.out, "inconclusive"));

        setenv("CLUSTER_RECOG_LIMITS", "bogus", 1);
        RunResult bad = run_cli("recognize " + file("c51.diag"));
        unsetenv("CLUSTER_RECOG_LIMITS");
        CHECK(bad.rc == 3);
    }

    SUBCASE("identical output for any worker count") {
        RunResult one = run_cli("recognize " + file("sqpend.diag") + " --witness --label");
        RunResult four = run_cli("--threads 4 recognize " + file("sqpend.diag") + " --witness --label");
        CHECK(one.out == four.out);
        RunResult trailing = run_cli("recognize " + file("sqpend.diag") + " --witness --label --threads 4");
        CHECK(one.out == trailing.out);
    }

    SUBCASE("human output is prose") {
        RunResult h = run_cli("recognize " + file("c51.diag") + " --label --human");
        CHECK(h.rc == 1);
        CHECK(contains(h.out, "2-infinite"));
        CHECK(contains(h.out, "witness label: C5(1)"));
        CHECK(!contains(h.out, "{"));
    }
}

TEST_CASE("cli class") {
    RunResult r = run_cli("class " + file("a2.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"size\": 1"));

    r = run_cli("class " + file("a3.diag") + " --stats");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"size\": 4"));
    CHECK(contains(r.out, "members_by_max_weight"));

    r = run_cli("class " + file("e8.diag") + " --limit 1");
    CHECK(r.rc == 2);
    CHECK(contains(r.out, "\"truncated\": true"));
}

TEST_CASE("cli bm") {
    RunResult r = run_cli("bm " + file("e61.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"arf\": 1"));

    r = run_cli("bm " + file("one.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"arf\": null"));

    r = run_cli("bm " + file("a8.diag"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "\"dim_v0\": 0"));
    CHECK(contains(r.out, "\"dim_v00\": 0"));
    CHECK(contains(r.out, "\"arf\": 0"));

    CHECK(run_cli("bm " + file("path4.diag") + " --equiv " + file("path4b.diag")).rc == 0);
    CHECK(run_cli("bm " + file("path4.diag") + " --equiv " + file("star4.diag")).rc == 1);
}

TEST_CASE("cli catalog") {
    SUBCASE("generate reproduces the checked-in base-6 file byte for byte") {
        fs::path out = dir() / "gen6.txt";
        RunResult r = run_cli("catalog generate --base 6 --out " + out.string());
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "\"entries\": 56"));
        CHECK(contains(r.out, "\"skeleton_groups\": 8"));
        CHECK(slurp(out) == slurp(fs::path(CLUSTERDIAG_DATA_DIR) / "catalog-base6.txt"));
    }

    SUBCASE("list names the built-in entries") {
        RunResult r = run_cli("catalog list");
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "\"F4(1)\""));
        CHECK(contains(r.out, "\"NO4(2,1,2,1)_1\""));
    }

    SUBCASE("match finds series, rejects 2-finite shapes, reads extra files") {
        RunResult r = run_cli("catalog match " + file("d41.diag"));
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "\"match\": \"D4(1)\""));

        r = run_cli("catalog match " + file("tri.diag"));
        CHECK(r.rc == 1);
        CHECK(contains(r.out, "\"match\": null"));

        std::string base6 = (fs::path(CLUSTERDIAG_DATA_DIR) / "catalog-base6.txt").string();
        r = run_cli("catalog match " + file("e61.diag") + " --file " + base6);
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "\"match\": \"E6(1)/"));
    }
}

TEST_CASE("cli export-dot") {
    RunResult r = run_cli("export-dot " + file("i24.diag"));
    CHECK(r.rc == 0);
    CHECK(r.out == "digraph diagram {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n"
                   "  v0 -> v1 [label=\"4\"];\n}\n");
    CHECK(run_cli("export-dot " + file("i24.diag")).out == r.out);

    // Weight-1 edges carry no label.
    RunResult a2 = run_cli("export-dot " + file("a2.diag"));
    CHECK(a2.rc == 0);
    CHECK(contains(a2.out, "  v0 -> v1;\n"));
}
