#include "fptk/scan.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "fptk/deuring.hpp"

namespace fptk::scan {

std::vector<int64_t> sieve_primes(int64_t bound) {
    std::vector<int64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<ScanRecord> scan_primes(const ScanQuery& q) {
    if (q.b < 1 || q.c < 1) throw RangeError("b and c must be positive");
    if (q.a_den == 0) throw DomainError("cross-ratio denominator is zero");
    if (q.prime_bound > 1000000) throw CapacityError("prime bound exceeds 10^6");
    if (q.ss_check && !(q.b == 1 && q.c == 1))
        throw DomainError("supersingularity cross-check applies to b = c = 1 only");
    bool degenerate_global = q.a_num == 0 || q.a_num == q.a_den;
    int64_t bc = q.b + q.c;
    std::vector<ScanRecord> out;
    for (int64_t p : sieve_primes(q.prime_bound)) {
        ScanRecord rec;
        rec.p = p;
        if (degenerate_global) {
            rec.reason = "CrossRatioDegenerate";
        } else if (p % bc != 1 % bc) {
            rec.reason = "NotCongruent";
        } else if (q.a_den % p == 0) {
            rec.reason = "DenominatorVanishes";
        } else {
            int64_t num = q.a_num % p;
            if (num < 0) num += p;
            int64_t den = q.a_den % p;
            if (den < 0) den += p;
            int64_t a = gf::mod_mul(num, gf::mod_inv(den, p), p);
            if (a == 0 || a == 1) {
                rec.reason = "CrossRatioDegenerate";
            } else {
                rec.admissible = true;
                int64_t n = static_cast<int64_t>(q.c) * (p - 1) / bc;
                rec.n = n;
                auto field = gf::make_field(p, 1);
                auto value = deuring::deuring_eval(static_cast<uint64_t>(n),
                                                   gf::FieldElement::from_int(field, a));
                rec.h_zero = value.is_zero();
                rec.in_p = !*rec.h_zero;
                if (q.ss_check && p >= 5) rec.ss_check = is_supersingular(a, p);
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

int64_t count_points_legendre_curve(int64_t lambda, int64_t p) {
    if (p < 5) throw DomainError("point counting requires p >= 5");
    if (p > 1000000) throw CapacityError("point counting cap is p <= 10^6");
    lambda %= p;
    if (lambda < 0) lambda += p;
    if (lambda == 0 || lambda == 1) throw DomainError("singular curve: lambda in {0, 1}");
    // quadratic-residue table; deliberately plain integer arithmetic
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (int64_t z = 1; z < p; ++z) {
        int64_t sq = static_cast<int64_t>(static_cast<__int128>(z) * z % p);
        chi[sq] = 1;
    }
    int64_t count = p + 1;  // affine grid plus the point at infinity
    for (int64_t x = 0; x < p; ++x) {
        int64_t v = static_cast<int64_t>(static_cast<__int128>(x) * (x - 1 + p) % p);
        v = static_cast<int64_t>(static_cast<__int128>(v) * ((x - lambda + p) % p) % p);
        count += chi[v];
    }
    return count;
}

bool is_supersingular(int64_t lambda, int64_t p) {
    return count_points_legendre_curve(lambda, p) == p + 1;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report(const std::vector<ScanRecord>& records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "p,admissible,n,h_zero,in_p,ss_check\n";
        for (const auto& r : records) {
            os << r.p << ',' << bool_str(r.admissible) << ',';
            if (r.n) os << *r.n;
            os << ',';
            if (r.h_zero) os << bool_str(*r.h_zero);
            os << ',' << bool_str(r.in_p) << ',';
            if (r.ss_check) os << bool_str(*r.ss_check);
            os << '\n';
        }
        return os.str();
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["p"] = r.p;
        obj["admissible"] = r.admissible;
        obj["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
        obj["h_zero"] = r.h_zero ? nlohmann::json(*r.h_zero) : nlohmann::json(nullptr);
        obj["in_p"] = r.in_p;
        obj["ss_check"] = r.ss_check ? nlohmann::json(*r.ss_check) : nlohmann::json(nullptr);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<ScanRecord> parse_json_report(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<ScanRecord> out;
    for (const auto& obj : arr) {
        ScanRecord r;
        r.p = obj.at("p").get<int64_t>();
        r.admissible = obj.at("admissible").get<bool>();
        if (!obj.at("n").is_null()) r.n = obj.at("n").get<int64_t>();
        if (!obj.at("h_zero").is_null()) r.h_zero = obj.at("h_zero").get<bool>();
        r.in_p = obj.at("in_p").get<bool>();
        if (!obj.at("ss_check").is_null()) r.ss_check = obj.at("ss_check").get<bool>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fptk::scan
