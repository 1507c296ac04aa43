#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <hvf/report.hpp>

#include "cli.hpp"

using hvf::cli::run;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &contents)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << contents;
    return p;
}

const std::string data_dir = HVF_DATA_DIR;

} // namespace

TEST_CASE("verify-formal exit codes")
{
    const auto small = call({"verify-formal", "--w-max", "2"});
    CHECK(small.code == 0);
    CHECK(small.out.find(" 0 failed") != std::string::npos);

    const auto eight = call({"verify-formal", "--w-max", "8"});
    CHECK(eight.code == 0);

    const auto odd = call({"verify-formal", "--w-max", "3"});
    CHECK(odd.code == 2);
    CHECK_FALSE(odd.err.empty());
}

TEST_CASE("verify-numeric exit codes")
{
    CHECK(call({"verify-numeric", "--builtin", "--tol", "1e-8", "--terms", "64"}).code == 0);
    CHECK(call({"verify-numeric", "--builtin", "--tol", "1e-15"}).code == 1);
    CHECK(call({"verify-numeric", "--builtin", "--point", "0.1,0.2"}).code == 2);
    CHECK(call({"verify-numeric"}).code == 2);
    CHECK(call({"verify-numeric", "--builtin", "--terms", "4"}).code == 2);
    CHECK(call({"verify-numeric", "--spec", data_dir + "/de4.json"}).code == 0);
    CHECK(call({"verify-numeric", "--spec", data_dir + "/e2_squared.json"}).code == 0);

    const auto bad = temp_file("hvf_bad.json", R"({"mu": 3, "weight": 4, "depth": 0})");
    const auto r = call({"verify-numeric", "--spec", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("coefficients") != std::string::npos);

    const auto broken = temp_file("hvf_broken.json", "{ not json");
    CHECK(call({"verify-numeric", "--spec", broken.string()}).code == 2);
    CHECK(call({"verify-numeric", "--spec", "/nonexistent/x.json"}).code == 2);
}

TEST_CASE("reports are deterministic and round-trip through JSON")
{
    const auto a = call({"verify-numeric", "--builtin", "--seed", "9", "--format", "json"});
    const auto b = call({"verify-numeric", "--builtin", "--seed", "9", "--format", "json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto rep = nlohmann::json::parse(a.out).get<hvf::Report>();
    CHECK(rep.all_passed());
    CHECK(nlohmann::json(rep).dump(2) + "\n" == a.out);

    const auto path = std::filesystem::temp_directory_path() / "hvf_report.json";
    const auto f = call({"verify-formal", "--w-max", "4", "--format", "json", "--out", path.string()});
    CHECK(f.code == 0);
    std::ifstream in(path);
    const auto formal = nlohmann::json::parse(in).get<hvf::Report>();
    CHECK(formal.failures() == 0);
    CHECK_FALSE(formal.checks.empty());
}

TEST_CASE("show")
{
    CHECK(call({"show", "pascal", "--r", "2"}).out == "1\nz    1\nz^2  2*z  1\n");
    CHECK(call({"show", "pascal", "--r", "0"}).out == "1\n");
    CHECK(call({"show", "dry", "--r", "2"}).out == "       1\n   -1\n1\n");
    CHECK(call({"show", "pascal", "--r", "40"}).code == 2);
    CHECK(call({"show", "nonsense"}).code == 2);
    CHECK(call({"show", "transfer", "--r", "1", "--w", "2", "--present", "1"}).code == 0);
    CHECK(call({"show", "transfer", "--r", "1", "--w", "3", "--present", "1"}).code == 2);
}

TEST_CASE("qexp and eval")
{
    const auto q = call({"qexp", "E2", "--terms", "8"});
    CHECK(q.code == 0);
    CHECK(q.out.rfind("0 1\n1 -24\n2 -72\n3 -96\n", 0) == 0);
    CHECK(call({"qexp", "E10"}).code == 2);

    const auto e = call({"eval", "--builtin", "E2", "--z", "0,1"});
    CHECK(e.code == 0);
    CHECK(e.out.find("f_0 = 0.95492965855") != std::string::npos);
    CHECK(call({"eval", "--builtin", "E2", "--z", "0,-1"}).code == 2);
    CHECK(call({"eval", "--builtin", "nope", "--z", "0,1"}).code == 2);
    CHECK(call({"eval", "--spec", data_dir + "/de4.json", "--z", "0.3,1.1", "--format", "json"}).code == 0);
}
