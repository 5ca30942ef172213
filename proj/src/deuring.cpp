#include "fptk/deuring.hpp"

#include <algorithm>
#include <map>

namespace fptk::deuring {

std::vector<int64_t> p_digits(uint64_t n, int64_t p) {
    std::vector<int64_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<int64_t>(n % static_cast<uint64_t>(p)));
        n /= static_cast<uint64_t>(p);
    }
    return digits;
}

namespace {

// Row r of Pascal's triangle mod p for r < p, via the multiplicative
// recurrence C(r, i+1) = C(r, i) (r-i) / (i+1); every divisor is a unit.
std::vector<int64_t> small_row(int64_t r, int64_t p) {
    std::vector<int64_t> row(r + 1);
    row[0] = 1 % p;
    for (int64_t i = 0; i + 1 <= r; ++i) {
        int64_t c = gf::mod_mul(row[i], (r - i) % p, p);
        row[i + 1] = gf::mod_mul(c, gf::mod_inv(i + 1, p), p);
    }
    return row;
}

}  // namespace

std::vector<int64_t> binomial_row(int64_t n, int64_t p) {
    if (n < 0) throw RangeError("binomial_row needs n >= 0");
    if (n < p) return small_row(n, p);
    // Lucas: C(n, i) = prod_j C(n_j, i_j) over base-p digits.
    std::vector<int64_t> ndig = p_digits(static_cast<uint64_t>(n), p);
    std::map<int64_t, std::vector<int64_t>> digit_rows;
    for (int64_t d : ndig)
        if (!digit_rows.count(d)) digit_rows[d] = small_row(d, p);
    std::vector<int64_t> row(n + 1, 0);
    for (int64_t i = 0; i <= n; ++i) {
        int64_t c = 1 % p;
        int64_t rest = i;
        for (int64_t d : ndig) {
            int64_t idig = rest % p;
            rest /= p;
            if (idig > d) {
                c = 0;
                break;
            }
            c = gf::mod_mul(c, digit_rows[d][idig], p);
        }
        row[i] = c;
    }
    return row;
}

UniPoly deuring_direct(int64_t n, const FieldPtr& desc) {
    std::vector<int64_t> row = binomial_row(n, desc->p);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(row.size());
    for (int64_t c : row)
        coeffs.push_back(FieldElement::from_int(desc, gf::mod_mul(c, c, desc->p)));
    return UniPoly(desc, std::move(coeffs));
}

FieldElement deuring_eval(uint64_t n, const FieldElement& a) {
    const FieldPtr& desc = a.desc();
    int64_t p = desc->p;
    FieldElement result = FieldElement::one(desc);
    std::vector<int64_t> digits = p_digits(n, p);
    std::map<int64_t, FieldElement> digit_values;
    for (size_t i = 0; i < digits.size(); ++i) {
        int64_t d = digits[i];
        auto it = digit_values.find(d);
        if (it == digit_values.end()) {
            std::vector<int64_t> row = small_row(d, p);
            FieldElement acc = FieldElement::zero(desc);
            for (auto c = row.rbegin(); c != row.rend(); ++c)
                acc = acc * a + FieldElement::from_int(desc, gf::mod_mul(*c, *c, p));
            it = digit_values.emplace(d, acc).first;
        }
        // raise H{d}(a) to p^i by i Frobenius applications
        FieldElement v = it->second;
        for (size_t j = 0; j < i; ++j) v = v.frobenius();
        result = result * v;
    }
    return result;
}

UniPoly antiderivative_F(int64_t n, const FieldPtr& desc) {
    if (n < 0 || 2 * n >= desc->p)
        throw RangeError("antiderivative needs n < p/2");
    UniPoly h = deuring_direct(n, desc);
    std::vector<FieldElement> coeffs(h.coeffs().size() + 1, FieldElement::zero(desc));
    for (size_t i = 0; i < h.coeffs().size(); ++i) {
        FieldElement inv = FieldElement::from_int(desc, static_cast<int64_t>(i) + 1).inv();
        coeffs[i + 1] = h.coeffs()[i] * inv;
    }
    return UniPoly(desc, std::move(coeffs));
}

UniPoly legendre_poly(int64_t n, const FieldPtr& desc) {
    if (desc->p == 2) throw RangeError("Legendre polynomial undefined mod 2");
    if (n < 0 || n >= desc->p) throw RangeError("legendre_poly needs 0 <= n < p");
    std::vector<int64_t> row = binomial_row(n, desc->p);
    UniPoly x_minus_1 = UniPoly::from_ints(desc, {-1, 1});
    UniPoly x_plus_1 = UniPoly::from_ints(desc, {1, 1});
    // (x-1)^{n-i} descending, (x+1)^i ascending
    std::vector<UniPoly> minus_pows, plus_pows;
    UniPoly acc = UniPoly::from_ints(desc, {1});
    for (int64_t i = 0; i <= n; ++i) {
        minus_pows.push_back(acc);
        acc = acc * x_minus_1;
    }
    acc = UniPoly::from_ints(desc, {1});
    for (int64_t i = 0; i <= n; ++i) {
        plus_pows.push_back(acc);
        acc = acc * x_plus_1;
    }
    UniPoly sum(desc);
    for (int64_t i = 0; i <= n; ++i) {
        FieldElement c = FieldElement::from_int(desc, gf::mod_mul(row[i], row[i], desc->p));
        sum = sum + (minus_pows[n - i] * plus_pows[i]).scaled(c);
    }
    FieldElement half_pow = FieldElement::from_int(desc, 2).inv().pow(static_cast<uint64_t>(n));
    return sum.scaled(half_pow);
}

std::vector<FieldElement> deuring_root_set(int64_t n, const FieldPtr& desc,
                                           const FieldPtr& search) {
    UniPoly h = deuring_direct(n, desc);
    std::vector<FieldElement> out;
    for (const auto& [root, mult] : poly::uni_roots(h, search)) out.push_back(root);
    return out;
}

namespace {

std::vector<FieldElement> dedup_sorted(std::vector<FieldElement> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

std::vector<FieldElement> mobius_orbit(const FieldElement& a) {
    const FieldPtr& desc = a.desc();
    FieldElement one = FieldElement::one(desc);
    if (a.is_zero() || a.is_one()) throw DomainError("cross-ratio orbit needs a outside {0, 1}");
    FieldElement one_minus_a = one - a;
    return dedup_sorted({a, a.inv(), one_minus_a, one_minus_a.inv(),
                         a / (a - one), (a - one) / a});
}

std::vector<FieldElement> legendre_root_orbit(const FieldElement& b) {
    const FieldPtr& desc = b.desc();
    FieldElement one = FieldElement::one(desc);
    if (b == one || b == -one) throw DomainError("Legendre orbit needs b outside {1, -1}");
    FieldElement three = FieldElement::from_int(desc, 3);
    FieldElement u = (three + b) / (b - one);
    FieldElement v = (three - b) / (one + b);
    return dedup_sorted({b, -b, u, -u, v, -v});
}

}  // namespace fptk::deuring
