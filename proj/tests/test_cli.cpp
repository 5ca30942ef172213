#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "fptk/json_io.hpp"
#include "fptk/scan.hpp"

using namespace fptk;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("FPTK_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "FPTK_CLI must point at the CLI binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.stdout_text.append(buf, got);
    int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

}  // namespace

TEST_CASE("ft subcommand matches the library JSON byte for byte") {
    auto field = gf::make_field(7);
    poly::BiForm f = fpt::family_form(1, 1, gf::FieldElement::from_int(field, 2));
    auto cls = fpt::classify_form(f);
    auto ft = fpt::ft_formula(cls, field);
    auto lct = fpt::lct_value(cls);
    std::string expect =
        json_io::ft_result_to_json(cls, ft, {}, lct).dump(2) + "\n";

    auto r = run_cli("ft --p 7 --b 1 --c 1 --a 2");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == expect);
    // the value itself is the known 3/7 supersingular case
    auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed["ft"]["num"] == "3");
    CHECK(parsed["ft"]["den"] == "7");
    CHECK(parsed["ft"]["provenance"] == "MainThm-supersingular");
}

TEST_CASE("ft with explicit coefficients and oracle brackets") {
    auto r = run_cli("ft --p 3 --coeffs 0,1,0,2,0 --oracle 2");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed["ft"]["num"] == "1");
    CHECK(parsed["ft"]["den"] == "3");
    REQUIRE(parsed["brackets"].size() == 2);
    CHECK(parsed["brackets"][1]["e"] == 2);
    CHECK(parsed["brackets"][1]["nu"] == "2");

    auto field = gf::make_field(3);
    poly::BiForm f = poly::BiForm::from_ints(field, {0, 1, 0, 2, 0});
    auto cls = fpt::classify_form(f);
    std::string expect =
        json_io::ft_result_to_json(cls, fpt::ft_formula(cls, field),
                                   fpt::ft_bracket(f, 2).records, fpt::lct_value(cls))
            .dump(2) +
        "\n";
    CHECK(r.stdout_text == expect);
}

TEST_CASE("uncovered hypotheses exit with the sentinel code") {
    auto r = run_cli("ft --p 5 --b 2 --c 3 --a 4");
    CHECK(r.exit_code == 2);
    auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed["ft"].is_null());
    CHECK(parsed["pattern"] == nlohmann::json::array({2, 2, 3, 3}));

    // with an oracle fallback the exit code is 0 and brackets appear
    auto r2 = run_cli("ft --p 5 --b 2 --c 3 --a 4 --oracle 2");
    CHECK(r2.exit_code == 0);
    CHECK(nlohmann::json::parse(r2.stdout_text)["brackets"].size() == 2);
}

TEST_CASE("deuring subcommand") {
    auto r = run_cli("deuring --p 5 --n 4 --print");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.stdout_text);
    // (lambda - 1)^4 = 1 + lambda + ... + lambda^4 mod 5
    REQUIRE(parsed["coeffs"].size() == 5);
    for (const auto& c : parsed["coeffs"]) CHECK(c == nlohmann::json::array({1}));

    auto roots = run_cli("deuring --p 7 --n 3 --roots");
    CHECK(roots.exit_code == 0);
    auto rp = nlohmann::json::parse(roots.stdout_text);
    REQUIRE(rp["roots"].size() == 3);
    CHECK(rp["roots"][0]["rep"] == nlohmann::json::array({2}));
    CHECK(rp["roots"][1]["rep"] == nlohmann::json::array({4}));
    CHECK(rp["roots"][2]["rep"] == nlohmann::json::array({6}));

    // huge n goes through the digit path only
    auto big = run_cli("deuring --p 13 --n 1000000007 --at 5");
    CHECK(big.exit_code == 0);
    auto bp = nlohmann::json::parse(big.stdout_text);
    auto f13 = gf::make_field(13);
    auto expect = deuring::deuring_eval(1000000007ULL, gf::FieldElement::from_int(f13, 5));
    CHECK(bp["value"] == nlohmann::json(expect.rep()));
}

TEST_CASE("scan subcommand streams the library report") {
    scan::ScanQuery q{1, 1, 2, 1, 50, true};
    std::string expect = scan::report(scan::scan_primes(q), scan::ReportFormat::Csv);
    auto r = run_cli("scan --b 1 --c 1 --a 2 --max-prime 50 --ss-check");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == expect);

    auto rational = run_cli("scan --b 1 --c 1 --a 1/3 --max-prime 10");
    CHECK(rational.exit_code == 0);
    // p = 3 is the denominator row: inadmissible with every flag column empty
    CHECK(rational.stdout_text.find("\n3,false,,,false,") != std::string::npos);

    auto json = run_cli("scan --b 1 --c 2 --a 5 --max-prime 20 --format json");
    CHECK(json.exit_code == 0);
    auto recs = scan::parse_json_report(json.stdout_text);
    std::vector<int64_t> adm;
    for (const auto& rec : recs)
        if (rec.admissible) adm.push_back(rec.p);
    CHECK(adm == std::vector<int64_t>{7, 13, 19});
}

TEST_CASE("orbit subcommand") {
    auto r = run_cli("orbit --p 7 --a 2 --n 3");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.stdout_text);
    REQUIRE(parsed["orbit"].size() == 3);
    for (const auto& v : parsed["values"]) CHECK(v == nlohmann::json::array({0}));

    auto generic = run_cli("orbit --p 11 --a 3");
    CHECK(nlohmann::json::parse(generic.stdout_text)["orbit"].size() == 6);

    CHECK(run_cli("orbit --p 7 --a 1").exit_code == 1);
}

TEST_CASE("input errors exit 1") {
    CHECK(run_cli("ft --p 4 --b 1 --c 1 --a 2").exit_code == 1);
    CHECK(run_cli("ft --p 7 --b 1 --c 1 --a 0").exit_code == 1);
    CHECK(run_cli("scan --b 1 --c 2 --a 5 --max-prime 20 --ss-check").exit_code == 1);
}
