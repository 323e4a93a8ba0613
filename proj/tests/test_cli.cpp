#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
};

fs::path workdir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "ctc_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run ctc(const std::string & args)
{
    const auto cmd = "cd '" + workdir().string() + "' && '" CTC_CLI_PATH "' " + args + " 2>&1";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe))
        out += buf;
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path & p)
{
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("gen, construct and check G_{3,2}")
{
    CHECK(ctc("gen --family gkn -k 3 -n 2 -o g.heg").code == 0);
    CHECK(ctc("construct --method thm-k3 -n 2 --graph g.heg -o c.pqc").code == 0);
    const auto r = ctc("check g.heg c.pqc");
    CHECK(r.code == 0);
    CHECK(r.out == "valid (13,3)\n");
}

TEST_CASE("a perturbed certificate is rejected with the violating pair")
{
    REQUIRE(ctc("gen --family gkn -k 3 -n 2 -o g.heg").code == 0);
    REQUIRE(ctc("construct --method thm-k3 -n 2 -o c.pqc").code == 0);
    auto text = slurp(workdir() / "c.pqc");
    // Give u the colour of its incident edge e0.
    const auto e0 = text.find("\ne0 ");
    REQUIRE(e0 != std::string::npos);
    const auto e0_colour = text.substr(e0 + 4, text.find('\n', e0 + 1) - e0 - 4);
    const auto at = text.find("\nu ");
    REQUIRE(at != std::string::npos);
    text.replace(at + 3, text.find('\n', at + 1) - at - 3, e0_colour);
    std::ofstream(workdir() / "broken.pqc") << text;
    const auto r = ctc("check g.heg broken.pqc");
    CHECK(r.code == 1);
    CHECK(r.out.rfind("invalid (13,3):", 0) == 0);
    CHECK(r.out.find("u=") != std::string::npos);
}

TEST_CASE("certificate with foreign labels")
{
    REQUIRE(ctc("gen --family cycle -m 5 -o c5.heg").code == 0);
    REQUIRE(ctc("construct --method all0 -k 3 -o h3.pqc").code == 0);
    const auto r = ctc("check c5.heg h3.pqc");
    CHECK(r.code == 1);
    CHECK(r.out.find("label sets differ") != std::string::npos);
}

TEST_CASE("chi on G_{3,1}")
{
    REQUIRE(ctc("gen --family gkn -k 3 -n 1 -o g31.heg").code == 0);
    auto r = ctc("chi g31.heg");
    CHECK(r.code == 0);
    CHECK(r.out == "exact 9/2\n");
    r = ctc("chi g31.heg --decimal");
    CHECK(r.out.find("~4.5") != std::string::npos);
    r = ctc("chi g31.heg --record");
    CHECK(r.out.find("value 9/2\n") != std::string::npos);
}

TEST_CASE("feasible exit codes")
{
    REQUIRE(ctc("gen --family gkn -k 3 -n 1 -o g31.heg").code == 0);
    auto r = ctc("feasible g31.heg -p 9 -q 2 -o w.pqc");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("feasible (9,2)", 0) == 0);
    CHECK(ctc("check g31.heg w.pqc").code == 0);
    r = ctc("feasible g31.heg -p 4 -q 1 --no-symmetry");
    CHECK(r.code == 1);
    CHECK(r.out.rfind("infeasible (4,1)", 0) == 0);
}

TEST_CASE("verify-lemma")
{
    const auto r = ctc("verify-lemma all0 -k 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("48 colourings") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and name the problem")
{
    auto r = ctc("");
    CHECK(r.code == 2);
    r = ctc("gen --family gkn -k 3 -o x.heg");
    CHECK(r.code == 2);
    CHECK(r.out.find("-n") != std::string::npos);
    r = ctc("gen --family petersen -o x.heg");
    CHECK(r.code == 2);
    CHECK(r.out.find("--family") != std::string::npos);
    r = ctc("feasible missing.heg -p 3 -q 1");
    CHECK(r.code == 2);
    r = ctc("chi g31.heg --qmax 0");
    CHECK(r.code == 2);
    CHECK(r.out.find("--qmax") != std::string::npos);
    r = ctc("construct --method thm-k3 -k 4 -n 2 -o z.pqc");
    CHECK(r.code == 2);
}

TEST_CASE("file errors report path and line")
{
    std::ofstream(workdir() / "bad.heg") << "heg 1\nvertex a\nedge e a b\n";
    const auto r = ctc("chi bad.heg");
    CHECK(r.code == 2);
    CHECK(r.out.find("bad.heg:3:") != std::string::npos);
}
