#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SNO_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("sno_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::string kGolden = SNO_GOLDEN_DIR;

}  // namespace

TEST_CASE("gen is deterministic") {
    TempDir tmp;
    for (const char* cls : {"circle", "permutation", "interval", "circulararc", "kpolygon", "circletrapezoid",
                            "trapezoid", "polygon"}) {
        CAPTURE(cls);
        const std::string base = std::string("gen --class ") + cls + " --n 40 --k 4 --seed 11 --out ";
        REQUIRE(run(base + (tmp / "a.txt")).code == 0);
        REQUIRE(run(base + (tmp / "b.txt")).code == 0);
        const auto a = slurp(tmp / "a.txt");
        CHECK(!a.empty());
        CHECK(a == slurp(tmp / "b.txt"));
    }
}

TEST_CASE("build and query the golden diagrams") {
    TempDir tmp;
    REQUIRE(run("build --class polygon --input " + kGolden + "/three_chords.txt --out " + (tmp / "p.sno")).code == 0);
    CHECK(run("query --oracle " + (tmp / "p.sno") + " --op degree --args 2").out == "2\n");
    CHECK(run("query --oracle " + (tmp / "p.sno") + " --op neighborhood --args 2").out == "1 3\n");
    CHECK(run("query --oracle " + (tmp / "p.sno") + " --op adjacent --args 1 3").out == "false\n");
    CHECK(run("query --oracle " + (tmp / "p.sno") + " --op adjacent --args 1 2").out == "true\n");

    for (const char* impl : {"unified", "wavelet"}) {
        CAPTURE(impl);
        const std::string o = tmp / "c.sno";
        REQUIRE(run(std::string("build --class circle --impl ") + impl + " --input " + kGolden +
                    "/circle3.txt --out " + o).code == 0);
        CHECK(run("query --oracle " + o + " --op degree --args 2").out == "2\n");
        CHECK(run("query --oracle " + o + " --op neighborhood --args 3").out == "2\n");
        CHECK(run("query --oracle " + o + " --op adjacent --args 1 3").out == "false\n");

        const std::string t = tmp / "t.sno";
        REQUIRE(run(std::string("build --class trapezoid --impl ") + impl + " --input " + kGolden +
                    "/trapezoid2.txt --out " + t).code == 0);
        CHECK(run("query --oracle " + t + " --op neighborhood --args 1").out == "2\n");
    }
    const auto sp = run("space --oracle " + (tmp / "c.sno"));
    CHECK(sp.code == 0);
    CHECK(sp.out.rfind("class circle\nimpl wavelet\n", 0) == 0);
}

TEST_CASE("build output is byte-identical across runs") {
    TempDir tmp;
    REQUIRE(run("gen --class polygon --n 300 --k 5 --seed 3 --out " + (tmp / "d.txt")).code == 0);
    REQUIRE(run("build --class polygon --input " + (tmp / "d.txt") + " --out " + (tmp / "1.sno")).code == 0);
    REQUIRE(run("build --class polygon --input " + (tmp / "d.txt") + " --out " + (tmp / "2.sno")).code == 0);
    CHECK(slurp(tmp / "1.sno") == slurp(tmp / "2.sno"));
}

TEST_CASE("check and exit codes") {
    TempDir tmp;
    const auto ok = run("check --class circle --input " + kGolden + "/circle3.txt");
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("match n=3", 0) == 0);
    CHECK(run("check --class circle --impl wavelet --input " + kGolden + "/circle3.txt").code == 0);
    CHECK(run("check --class trapezoid --impl wavelet --input " + kGolden + "/trapezoid2.txt").code == 0);
    CHECK(run("check --class circle --input " + kGolden + "/circle3.txt --inject-mismatch").code == 3);

    CHECK(run("").code == 1);
    CHECK(run("check --class square --input " + kGolden + "/circle3.txt").code == 1);
    CHECK(run("build --class polygon --impl wavelet --input " + kGolden + "/three_chords.txt --out " +
              (tmp / "x")).code == 1);
    CHECK(run("check --class circle --input " + kGolden + "/bad_circle.txt").code == 2);
    CHECK(run("check --class circle --input " + kGolden + "/three_chords.txt").code == 2);
    CHECK(run("check --class circle --input " + (tmp / "missing.txt")).code == 4);
    CHECK(run("query --oracle " + (tmp / "missing.sno") + " --op degree --args 1").code == 4);

    REQUIRE(run("build --class circle --input " + kGolden + "/circle3.txt --out " + (tmp / "c.sno")).code == 0);
    CHECK(run("query --oracle " + (tmp / "c.sno") + " --op degree --args 9").code == 1);
    CHECK(run("query --oracle " + (tmp / "c.sno") + " --op adjacent --args 1").code == 1);
    {
        std::ofstream junk(tmp / "junk.sno", std::ios::binary);
        junk << "not an oracle";
    }
    CHECK(run("query --oracle " + (tmp / "junk.sno") + " --op degree --args 1").code == 2);
}

TEST_CASE("bench prints one csv row") {
    const auto b = run("bench --class circle --n 200 --queries 50 --seed 1");
    CHECK(b.code == 0);
    CHECK(b.out.rfind("class,impl,n,N,build_ms", 0) == 0);
    CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
}
