#ifndef FPTK_SCAN_HPP
#define FPTK_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fptk/gf.hpp"

namespace fptk::scan {

enum class ReportFormat { Csv, Json };

struct ScanQuery {
    int b = 1;
    int c = 1;
    int64_t a_num = 0;  // the integer cross-ratio datum, as a rational
    int64_t a_den = 1;
    int64_t prime_bound = 0;
    bool ss_check = false;  // point-counting cross-check, b = c = 1 only
};

struct ScanRecord {
    int64_t p = 0;
    bool admissible = false;
    std::optional<int64_t> n;  // c(p-1)/(b+c), admissible rows only
    std::optional<bool> h_zero;
    bool in_p = false;
    std::optional<bool> ss_check;
    std::string reason;  // why a row is inadmissible (empty otherwise)
};

/// Primes up to bound (inclusive), ascending.
std::vector<int64_t> sieve_primes(int64_t bound);

/// One record per prime p <= primeBound, ascending.
std::vector<ScanRecord> scan_primes(const ScanQuery& q);

/// #E(F_p) for the curve y^2 = x(x-1)(x-lambda), including the point at
/// infinity, by full enumeration with a quadratic-residue table. Kept
/// independent of the Deuring machinery it cross-checks.
int64_t count_points_legendre_curve(int64_t lambda, int64_t p);

/// Trace zero, i.e. #E(F_p) = p + 1; characterizes supersingularity for p >= 5.
bool is_supersingular(int64_t lambda, int64_t p);

/// CSV (header p,admissible,n,h_zero,in_p,ss_check; LF line endings) or a
/// JSON array with the same field names.
std::string report(const std::vector<ScanRecord>& records, ReportFormat format);

/// Inverse of report for the JSON format.
std::vector<ScanRecord> parse_json_report(const std::string& text);

}  // namespace fptk::scan

#endif
