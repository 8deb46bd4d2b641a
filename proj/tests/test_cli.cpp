#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(YTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("expect subcommand") {
    auto r = run_cli("expect --shape 4,2 --shifted");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"E_X\":\"6/5\",\"E_Y\":\"6/5\",\"cde\":true}\n");
}

TEST_CASE("count subcommand") {
    auto r = run_cli("count --shape 4,3,1 --what syt --method formula");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":\"70\"") != std::string::npos);
    auto r2 = run_cli("count --shape 2,1 --what sbt --method enumerate");
    CHECK(r2.out.find("\"count\":\"8\"") != std::string::npos);
}

TEST_CASE("aq subcommand checks the product formula") {
    auto r = run_cli("aq --shape 4,2 --check-conjecture");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
    // non-balanced shape: mismatch reported through the exit code
    auto r2 = run_cli("aq --shape 3,1 --check-conjecture");
    CHECK(r2.code == 1);
}

TEST_CASE("verify subcommand") {
    auto r = run_cli("verify --identity eq9 --params N=3,n=2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"lhs\":\"3/2\"") != std::string::npos);
    auto r2 = run_cli("verify --bijection k1 --shape 4,2");
    CHECK(r2.code == 0);
    auto r3 = run_cli("verify --integrals --shape 3,1");
    CHECK(r3.code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("expect --shape 1,3").code == 2);       // not a partition
    CHECK(run_cli("expect --shape 2,2 --shifted").code == 2);  // not strict
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("expect").code == 2);                   // missing --shape
    CHECK(run_cli("verify --identity nosuch --params x=1").code == 2);
}

TEST_CASE("scan output is byte-stable and independent of --jobs") {
    auto a = run_cli("scan --max-size 7 --shifted --jobs 1");
    auto b = run_cli("scan --max-size 7 --shifted --jobs 4");
    auto c = run_cli("scan --max-size 7 --shifted --jobs 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(a.out.rfind("size,shape,ex_num,ex_den,ey_num,ey_den,cde,classification,conjecture_ok\n",
                      0) == 0);
    // one row per strict partition of size 1..7
    long rows = static_cast<long>(std::count(a.out.begin(), a.out.end(), '\n')) - 1;
    CHECK(rows == 1 + 1 + 2 + 2 + 3 + 4 + 5);
    CHECK(a.out.find("1,\"1\",1,2,1,2,true,balanced+trapezoidal,true\n") != std::string::npos);
}

TEST_CASE("scan json format") {
    auto r = run_cli("scan --max-size 3 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"shape\":\"2,1\"") != std::string::npos);
}

TEST_CASE("empty scan emits the header only") {
    auto r = run_cli("scan --max-size 0");
    CHECK(r.code == 0);
    CHECK(r.out == "size,shape,ex_num,ex_den,ey_num,ey_den,cde,classification,conjecture_ok\n");
}

TEST_CASE("aq json carries coefficient arrays") {
    auto r = run_cli("aq --shape 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"num\":[[") != std::string::npos);
    CHECK(r.out.find("\"display\":") != std::string::npos);
}
