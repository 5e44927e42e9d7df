#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

const char* kCli = ZZI_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd =
        std::string(kCli) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("closed-form table subcommand") {
    CHECK(run("exact-critical --n-max 3 --out /tmp/zzit-exact") == 0);
    const std::string csv = slurp("/tmp/zzit-exact.csv");
    CHECK(csv.rfind("n,D,M,M_minus_half\n", 0) == 0);
    CHECK(csv.find("0.63661977236758138") != std::string::npos); // 2/pi
    CHECK(csv.find("0.84882636315677518") != std::string::npos); // 8/(3 pi)
    const std::string json = slurp("/tmp/zzit-exact.json");
    CHECK(json.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("magnetization with angle input and the keystone value") {
    CHECK(run("magnetization --theta-const 0.7853981633974483 --m-max 2 "
              "--out /tmp/zzit-mag") == 0);
    const std::string csv = slurp("/tmp/zzit-mag.csv");
    CHECK(csv.rfind("m,value,method,truncation,est_error\n", 0) == 0);
    CHECK(csv.find("0.848826") != std::string::npos);
}

TEST_CASE("weight parametrization gives the same numbers as angles") {
    CHECK(run("magnetization --theta-const 0.7853981633974483 --m 1 "
              "--out /tmp/zzit-a") == 0);
    CHECK(run("magnetization --x-const 0.41421356237309503 --m 1 "
              "--out /tmp/zzit-b") == 0);
    CHECK(slurp("/tmp/zzit-a.csv") == slurp("/tmp/zzit-b.csv"));
}

TEST_CASE("byte-identical reruns") {
    CHECK(run("homogeneous --th 0.5 --tv 0.4 --m-max 20 "
              "--out /tmp/zzit-h1") == 0);
    CHECK(run("homogeneous --th 0.5 --tv 0.4 --m-max 20 "
              "--out /tmp/zzit-h2") == 0);
    CHECK(slurp("/tmp/zzit-h1.csv") == slurp("/tmp/zzit-h2.csv"));
    const std::string j1 = slurp("/tmp/zzit-h1.json");
    std::string j2 = slurp("/tmp/zzit-h2.json");
    CHECK(j1 == j2);
}

TEST_CASE("embedding emits an SVG next to the CSV") {
    CHECK(run("sembedding --block "
              "0.5235987755982988,1.0471975511965976 --out /tmp/zzit-s") == 0);
    CHECK(slurp("/tmp/zzit-s.svg").find("<svg") != std::string::npos);
    CHECK(slurp("/tmp/zzit-s.csv").rfind("k,kind,x,phi\n", 0) == 0);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("no-such-subcommand") == 1);
    CHECK(run("magnetization --no-such-flag 3") == 1);
    CHECK(run("") == 1);
    CHECK(run("--help") == 0);
}

TEST_CASE("domain errors exit with code 2") {
    CHECK(run("magnetization --theta-const 2.0 --m 1 --out /tmp/zzit-e") == 2);
    CHECK(run("wetting --q 1.5 --r 0.1 --out /tmp/zzit-e") == 2);
    CHECK(run("ids --block 0.5235987755982988,0.5235987755982988 "
              "--out /tmp/zzit-e") == 2);
    CHECK(run("homogeneous --th 0.7853981633974483 "
              "--tv 0.7853981633974483 --out /tmp/zzit-e") == 2);
}

TEST_CASE("numeric non-convergence exits with code 3") {
    // At the disorder point the truncation error decays only algebraically
    // in the operator size, so a 1e-14 certificate is unreachable within
    // the doubling ladder's node cap and the engine must give up.
    CHECK(run("magnetization --theta-const 0.7853981633974483 --m 6 "
              "--method sqrt --tol 1e-14 --out /tmp/zzit-e") == 3);
}

TEST_CASE("failed consistency suites exit with code 4") {
    CHECK(run("crosscheck --suite keystone --m-max 2 --tol 1e-14 "
              "--out /tmp/zzit-c") == 4);
    CHECK(run("crosscheck --suite keystone --m-max 2 "
              "--out /tmp/zzit-c") == 0);
}

TEST_CASE("thread cap environment variable is validated") {
    const std::string base =
        std::string(kCli) + " exact-critical --n-max 1 --out /tmp/zzit-t";
    int status = std::system(
        ("ZZI_THREADS=2 " + base + " > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 0);
    status = std::system(
        ("ZZI_THREADS=abc " + base + " > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 1);
}

} // TEST_SUITE
