#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include "qchart/cli.hpp"

using namespace qchart;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::vector<std::string> kSmall{"--nmax", "6", "--kmax", "6", "--lmax", "2"};

std::vector<std::string> with_small(std::vector<std::string> head) {
    head.insert(head.end(), kSmall.begin(), kSmall.end());
    return head;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("audit passes at the default tolerance and reports every identity") {
    const Run r = call(with_small({"audit"}));
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("params: q=0.5 alpha=1") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("residual=") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("audit exits 1 when an identity misses the requested bar") {
    // A threshold below rounding error cannot hold for the inexact checks;
    // the audit must say so rather than pass.
    const Run r = call(with_small({"audit", "--tol", "1e-300"}));
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("export emits a stable, self-describing table") {
    const Run r = call(with_small({"export", "z"}));
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# operator: z\n", 0) == 0);
    CHECK(r.out.find("# q=0.5 alpha=1 n_max=6 k_max=6 l_max=2") != std::string::npos);
    CHECK(r.out.find("# columns: row,col,re,im") != std::string::npos);
    // First data entry: column 0 sends e(0,0) to sqrt(1-q^2) e(0,1).
    CHECK(r.out.find("1,0,0.8660254037844386,0\n") != std::string::npos);

    const Run again = call(with_small({"export", "z"}));
    CHECK(again.out == r.out);  // byte-identical on repeat

    const Run diag = call(with_small({"export", "y_op"}));
    REQUIRE(diag.code == 0);
    CHECK(diag.out.find("0,0,1,0\n") != std::string::npos);  // q^0 on the diagonal
}

TEST_CASE("export rejects names outside the catalog") {
    const Run r = call(with_small({"export", "hamiltonian"}));
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("unknown operator") != std::string::npos);
    CHECK(r.err.find("zeta_op") != std::string::npos);  // catalog is listed
}

TEST_CASE("integral evaluates grammar elements") {
    const Run r = call(with_small({"integral", "one"}));
    REQUIRE(r.code == 0);
    double re = 0.0, im = 0.0, tail = 0.0;
    int used = 0;
    REQUIRE(std::sscanf(r.out.c_str(), "value: %lf %lf\ntail_bound: %lf\nterms_used: %d",
                        &re, &im, &tail, &used) == 4);
    // 16 spectral samples at q = 1/2, alpha = 1: partial sum 1 - 2^-16.
    CHECK(re == doctest::Approx(1.0 - 1.0 / 65536.0).epsilon(1e-15));
    CHECK(im == 0.0);
    CHECK(tail == doctest::Approx(1.0 / 65536.0).epsilon(1e-12));
    CHECK(used == 16);

    // A pure shifted band integrates to zero exactly.
    const Run z = call(with_small({"integral", "z^2 * zstar"}));
    REQUIRE(z.code == 0);
    CHECK(z.out.find("value: 0 0\n") != std::string::npos);

    const Run bad = call(with_small({"integral", "z +"}));
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("usage errors exit 2, help exits 0") {
    const Run none = call({});
    CHECK(none.code == 2);

    const Run badq = call({"audit", "--q", "1.5"});
    CHECK(badq.code == 2);
    CHECK_FALSE(badq.err.empty());

    const Run badflag = call({"audit", "--frobnicate"});
    CHECK(badflag.code == 2);

    const Run help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("audit") != std::string::npos);
    CHECK(help.out.find("integral") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "cli_out_probe.csv";
    std::remove(path.c_str());
    const Run direct = call(with_small({"export", "zstar_op"}));
    const Run filed = call(with_small({"export", "zstar_op", "--out", path}));
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());

    const Run blocked =
        call(with_small({"export", "z", "--out", "no-such-dir/probe.csv"}));
    CHECK(blocked.code == 2);
    CHECK_FALSE(blocked.err.empty());
}

#ifdef __unix__
TEST_CASE("the installed binary behaves like the library entry point") {
    const char* bin = std::getenv("QCHART_BIN");
    if (bin == nullptr || bin[0] == '\0') {
        MESSAGE("QCHART_BIN not set; skipping subprocess check");
        return;
    }
    const std::string base = std::string{bin} + " audit --nmax 6 --kmax 6 --lmax 2";

    const std::string ok_log = "cli_subprocess_ok.log";
    int status = std::system((base + " > " + ok_log + " 2>&1").c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(slurp(ok_log).find("result: PASS") != std::string::npos);
    std::remove(ok_log.c_str());

    const std::string fail_log = "cli_subprocess_fail.log";
    status = std::system((base + " --tol 1e-300 > " + fail_log + " 2>&1").c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 1);
    std::remove(fail_log.c_str());
}
#endif
