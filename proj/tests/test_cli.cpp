#include "catch_amalgamated.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

const std::string data = MONCOH_DATA;

Run run(const std::string &args) {
    std::string cmd = std::string(MONCOH_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string fx(const std::string &name) { return data + "/" + name; }

nlohmann::json parse(const Run &r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("cohomology of the trivial monoid is the module in degree 0") {
    Run r = run("cohomology --monoid " + fx("trivial.json") + " --module " + fx("z3_trivial.json"));
    REQUIRE(r.status == 0);
    auto j = parse(r);
    CHECK(j["pass"] == true);
    REQUIRE(j["degrees"].size() == 4);
    CHECK(j["degrees"][0]["full"]["text"] == "Z/3");
    for (size_t n = 1; n < 4; ++n)
        CHECK(j["degrees"][n]["normalised"]["text"] == "0");
}

TEST_CASE("cohomology of S3 with the sign module") {
    Run r = run("cohomology --monoid " + fx("s3.json") + " --module " + fx("s3_sign.json"));
    REQUIRE(r.status == 0);
    auto j = parse(r);
    CHECK(j["degrees"][0]["full"]["text"] == "0");
    CHECK(j["degrees"][1]["full"]["text"] == "Z/2");
    CHECK(j["degrees"][2]["full"]["text"] == "Z/3");
}

TEST_CASE("spectral pages for S3 over A3") {
    Run r = run("spectral --monoid " + fx("s3.json") + " --module " + fx("z3_trivial.json") +
                " --normal 0,3,4 --section 0,2 --max-degree 2");
    REQUIRE(r.status == 0);
    auto j = parse(r);
    CHECK(j["pass"] == true);
    CHECK(j["quotient_size"] == 2);
    REQUIRE(j["pages"].size() == 3);
    CHECK(j["pages"][2]["r"] == "inf");
    for (auto &c : j["checks"])
        CHECK(c["pass"] == true);
    // E2^{0,1} = H^1(A3, Z/3)^{C2} = 0 since conjugation inverts the generator
    auto &e2 = j["pages"][1]["entries"];
    REQUIRE(e2.contains("0,1"));
    CHECK(e2["0,1"]["text"] == "0");
    CHECK(e2["0,0"]["text"] == "Z/3");
}

TEST_CASE("shapiro, torsor and double commands") {
    Run s = run("shapiro --monoid " + fx("s3.json") + " --subgroup 0,3,4 --module " + fx("z3_trivial.json"));
    CHECK(s.status == 0);
    CHECK(parse(s)["index"] == 2);
    Run t = run("torsor --monoid " + fx("c2.json") + " --module " + fx("c2_z3_inversion.json"));
    REQUIRE(t.status == 0);
    CHECK(parse(t)["torsor_classes"] == 1);
    Run d = run("double --monoid " + fx("z2mul.json") + " --monoid " + fx("c2.json") + " --module " +
                fx("z2_trivial.json") + " --max-degree 2");
    REQUIRE(d.status == 0);
    auto j = parse(d);
    CHECK(j["alpha_class_iso"] == true);
    CHECK(j["residual_cancellation"] == true);
    Run m = run("cohomology --monoid " + fx("c2_z2mul.json") + " --module " + fx("z2_trivial.json") +
                " --max-degree 2");
    CHECK(m.status == 0);
    CHECK(parse(m)["monoid_size"] == 4);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run("cohomology --monoid " + fx("missing.json") + " --module " + fx("z3_trivial.json")).status == 2);
    CHECK(run("cohomology --monoid " + fx("s3.json") + " --module " + fx("malformed.json")).status == 2);
    CHECK(run("cohomology --monoid " + fx("s3.json") + " --module " + fx("bad_element.json")).status == 2);
    CHECK(run("cohomology --monoid " + fx("s3.json")).status == 2);
    CHECK(run("spectral --monoid " + fx("s3.json") + " --module " + fx("z3_trivial.json") + " --normal 0,2").status ==
          2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("verify --suite nonsense").status == 2);
    CHECK(run("verify --suite shapiro --inject-fault nowhere:1").status == 2);
}

TEST_CASE("verify suites and injected faults") {
    Run ok = run("verify --suite shuffle");
    REQUIRE(ok.status == 0);
    CHECK(parse(ok)["pass"] == true);
    Run bad = run("verify --suite shapiro --inject-fault kappa:0");
    REQUIRE(bad.status == 1);
    auto j = parse(bad);
    CHECK(j["pass"] == false);
    bool witnessed = false;
    for (auto &i : j["items"])
        if (i["pass"] == false)
            witnessed = witnessed || !i["witness"].get<std::string>().empty();
    CHECK(witnessed);
}

TEST_CASE("output is deterministic for a fixed seed") {
    const std::string args = "verify --suite spectral --seed 42 --max-degree 2";
    Run a = run(args), b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(parse(a)["seed"] == 42);
}

TEST_CASE("csv output and report files") {
    Run c = run("cohomology --monoid " + fx("c2.json") + " --module " + fx("z_trivial.json") + " --format csv");
    REQUIRE(c.status == 0);
    std::istringstream in(c.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,full,normalised,agree");
    std::getline(in, line);
    CHECK(line == "0,Z,Z,true");
    std::getline(in, line);
    CHECK(line == "1,0,0,true");
    std::getline(in, line);
    CHECK(line == "2,Z/2,Z/2,true");
    const std::string path = "moncoh_cli_test_report.json";
    Run f = run("cohomology --monoid " + fx("c2.json") + " --module " + fx("z_trivial.json") + " --out " + path);
    REQUIRE(f.status == 0);
    CHECK(f.out.empty());
    std::ifstream rep(path);
    CHECK(nlohmann::json::parse(rep)["pass"] == true);
    std::remove(path.c_str());
}
