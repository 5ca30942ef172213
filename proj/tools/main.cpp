#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fptk/deuring.hpp"
#include "fptk/fpt.hpp"
#include "fptk/json_io.hpp"
#include "fptk/scan.hpp"

namespace {

using namespace fptk;

// "7" means the constant 7; "[c0,c1,...]" an extension element in the
// deterministic modulus basis.
gf::FieldElement parse_element(const std::string& text, const gf::FieldPtr& field) {
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw DomainError("unterminated element vector: " + text);
        std::vector<int64_t> rep;
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) rep.push_back(std::stoll(item));
        return gf::FieldElement(field, std::move(rep));
    }
    return gf::FieldElement::from_int(field, std::stoll(text));
}

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    if (out.empty()) throw DomainError("empty coefficient list");
    return out;
}

int run_ft(int64_t p, int k, const std::string& coeffs, int b, int c, const std::string& a_text,
           int oracle_emax) {
    auto field = gf::make_field(p, k);
    std::optional<poly::BiForm> f;
    if (!coeffs.empty()) {
        f = poly::BiForm::from_ints(field, parse_int_list(coeffs));
    } else {
        if (a_text.empty()) throw DomainError("either --coeffs or --b/--c/--a is required");
        gf::FieldElement a = parse_element(a_text, field);
        if (a.is_zero() || a.is_one()) throw DomainError("degenerate cross-ratio a in {0, 1}");
        f = fpt::family_form(b, c, a);
    }
    fpt::FormClass cls = fpt::classify_form(*f);
    std::optional<fpt::FptValue> ft = fpt::ft_formula(cls, field);
    std::optional<mpq_class> lct = fpt::lct_value(cls);
    std::vector<fpt::NuRecord> brackets;
    if (oracle_emax > 0) brackets = fpt::ft_bracket(*f, oracle_emax).records;
    std::cout << json_io::ft_result_to_json(cls, ft, brackets, lct).dump(2) << "\n";
    if (!ft && oracle_emax <= 0) return 2;
    return 0;
}

int run_deuring(int64_t p, uint64_t n, bool print, const std::string& at_text, bool roots,
                int ext, int k) {
    auto field = gf::make_field(p, k);
    nlohmann::json out;
    if (print) {
        if (n > 1000000) throw CapacityError("--print needs n <= 10^6");
        out = json_io::unipoly_to_json(deuring::deuring_direct(static_cast<int64_t>(n), field));
    } else if (!at_text.empty()) {
        gf::FieldElement a = parse_element(at_text, field);
        gf::FieldElement value = deuring::deuring_eval(n, a);
        if (n < 10000) {
            auto direct = deuring::deuring_direct(static_cast<int64_t>(n), field).eval(a);
            if (direct != value)
                throw std::runtime_error("internal mismatch between digit and direct evaluation");
        }
        out = {{"p", p}, {"k", k}, {"n", std::to_string(n)}, {"value", value.rep()}};
    } else if (roots) {
        if (n > 1000000) throw CapacityError("--roots needs n <= 10^6");
        auto search = gf::make_field(p, ext);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r :
             deuring::deuring_root_set(static_cast<int64_t>(n), field, search))
            arr.push_back(json_io::element_to_json(r));
        out = {{"p", p}, {"n", std::to_string(n)}, {"ext", ext}, {"roots", std::move(arr)}};
    } else {
        throw DomainError("one of --print, --at, --roots is required");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_scan(int b, int c, const std::string& a_text, int64_t max_prime,
             const std::string& format, bool ss_check) {
    scan::ScanQuery q;
    q.b = b;
    q.c = c;
    auto slash = a_text.find('/');
    if (slash == std::string::npos) {
        q.a_num = std::stoll(a_text);
        q.a_den = 1;
    } else {
        q.a_num = std::stoll(a_text.substr(0, slash));
        q.a_den = std::stoll(a_text.substr(slash + 1));
    }
    q.prime_bound = max_prime;
    q.ss_check = ss_check;
    auto records = scan::scan_primes(q);
    std::cout << scan::report(records,
                              format == "json" ? scan::ReportFormat::Json
                                               : scan::ReportFormat::Csv);
    return 0;
}

int run_orbit(int64_t p, int k, const std::string& a_text, bool legendre,
              std::optional<uint64_t> n) {
    auto field = gf::make_field(p, k);
    gf::FieldElement a = parse_element(a_text, field);
    std::vector<gf::FieldElement> orbit =
        legendre ? deuring::legendre_root_orbit(a) : deuring::mobius_orbit(a);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : orbit) arr.push_back(json_io::element_to_json(x));
    nlohmann::json out = {{"p", p}, {"k", k}, {"orbit", std::move(arr)}};
    if (n) {
        poly::UniPoly h = legendre ? deuring::legendre_poly(static_cast<int64_t>(*n), field)
                                   : deuring::deuring_direct(static_cast<int64_t>(*n), field);
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& x : orbit) vals.push_back(h.lift(x.desc()).eval(x).rep());
        out["n"] = std::to_string(*n);
        out["values"] = std::move(vals);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-pure thresholds of bivariate forms over finite fields"};
    app.require_subcommand(1);

    // ft
    auto* ft = app.add_subcommand("ft", "F-pure threshold of a homogeneous form");
    int64_t ft_p = 0;
    int ft_k = 1, ft_b = 1, ft_c = 1, ft_oracle = 0;
    std::string ft_coeffs, ft_a;
    ft->add_option("--p", ft_p, "prime characteristic")->required();
    ft->add_option("--k", ft_k, "extension degree of the coefficient field");
    ft->add_option("--coeffs", ft_coeffs, "form as c0,...,cd (c_i multiplies x^{d-i} y^i)");
    ft->add_option("--b", ft_b, "family exponent b");
    ft->add_option("--c", ft_c, "family exponent c");
    ft->add_option("--a", ft_a, "family cross-ratio (int or [c0,c1,...])");
    ft->add_option("--oracle", ft_oracle, "append nu brackets up to e_max");

    // deuring
    auto* de = app.add_subcommand("deuring", "Deuring polynomial H{n} mod p");
    int64_t de_p = 0;
    uint64_t de_n = 0;
    int de_ext = 1, de_k = 1;
    bool de_print = false, de_roots = false;
    std::string de_at;
    de->add_option("--p", de_p, "prime")->required();
    de->add_option("--n", de_n, "index n")->required();
    de->add_option("--k", de_k, "extension degree for --at");
    de->add_flag("--print", de_print, "emit the coefficient vector");
    de->add_option("--at", de_at, "evaluate at a field element");
    de->add_flag("--roots", de_roots, "emit the root set");
    de->add_option("--ext", de_ext, "extension degree of the root search field");

    // scan
    auto* sc = app.add_subcommand("scan", "prime scan for the conjecture set P");
    int sc_b = 1, sc_c = 1;
    int64_t sc_max = 0;
    std::string sc_a, sc_format = "csv";
    bool sc_ss = false;
    sc->add_option("--b", sc_b, "family exponent b")->required();
    sc->add_option("--c", sc_c, "family exponent c")->required();
    sc->add_option("--a", sc_a, "cross-ratio as int or num/den")->required();
    sc->add_option("--max-prime", sc_max, "scan primes up to this bound")->required();
    sc->add_option("--format", sc_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_flag("--ss-check", sc_ss, "add the point-counting column (b = c = 1)");

    // orbit
    auto* orb = app.add_subcommand("orbit", "cross-ratio orbit of a field element");
    int64_t orb_p = 0;
    int orb_k = 1;
    std::string orb_a;
    bool orb_legendre = false;
    std::optional<uint64_t> orb_n;
    orb->add_option("--p", orb_p, "prime")->required();
    orb->add_option("--k", orb_k, "extension degree");
    orb->add_option("--a", orb_a, "orbit seed element")->required();
    orb->add_flag("--legendre", orb_legendre, "use the Legendre-root orbit");
    orb->add_option("--n", orb_n, "also evaluate H{n} (or P_n) on the orbit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ft->parsed()) return run_ft(ft_p, ft_k, ft_coeffs, ft_b, ft_c, ft_a, ft_oracle);
        if (de->parsed()) return run_deuring(de_p, de_n, de_print, de_at, de_roots, de_ext, de_k);
        if (sc->parsed()) return run_scan(sc_b, sc_c, sc_a, sc_max, sc_format, sc_ss);
        if (orb->parsed()) return run_orbit(orb_p, orb_k, orb_a, orb_legendre, orb_n);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
