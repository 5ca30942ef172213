#include "fptk/poly.hpp"

#include <algorithm>
#include <cassert>

namespace fptk::poly {

namespace {

constexpr int64_t kScanBound = 1000000;       // exhaustive root scan cap
constexpr int64_t kIdealBound = 1000000;      // p^e cap for ideal membership
constexpr int64_t kFormVectorCap = 2000000;   // dN cap for materialized forms

int64_t checked_prime_power(int64_t p, int e, int64_t bound) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > bound / p) throw CapacityError("p^e exceeds the desk-scale cap");
        q *= p;
    }
    return q;
}

}  // namespace

UniPoly::UniPoly(FieldPtr desc, std::vector<FieldElement> coeffs)
    : desc_(std::move(desc)), coeffs_(std::move(coeffs)) {
    normalize();
}

UniPoly UniPoly::from_ints(const FieldPtr& desc, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(FieldElement::from_int(desc, v));
    return UniPoly(desc, std::move(c));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement::zero(desc_);
    return coeffs_[i];
}

FieldElement UniPoly::lead() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<FieldElement> c(std::max(coeffs_.size(), other.coeffs_.size()),
                                FieldElement::zero(desc_));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] = c[i] + other.coeffs_[i];
    return UniPoly(desc_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<FieldElement> c(std::max(coeffs_.size(), other.coeffs_.size()),
                                FieldElement::zero(desc_));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] = c[i] - other.coeffs_[i];
    return UniPoly(desc_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly(desc_);
    std::vector<FieldElement> c(coeffs_.size() + other.coeffs_.size() - 1,
                                FieldElement::zero(desc_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * other.coeffs_[j];
    }
    return UniPoly(desc_, std::move(c));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return UniPoly(desc_, std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(desc_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * FieldElement::from_int(desc_, static_cast<int64_t>(i)));
    return UniPoly(desc_, std::move(out));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(x.desc());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (degree() < divisor.degree()) return {UniPoly(desc_), *this};
    FieldElement lead_inv = divisor.lead().inv();
    std::vector<FieldElement> rem = coeffs_;
    std::vector<FieldElement> quot(coeffs_.size() - divisor.coeffs_.size() + 1,
                                   FieldElement::zero(desc_));
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(divisor.coeffs_.size()) - 1; --i) {
        if (rem[i].is_zero()) continue;
        FieldElement c = rem[i] * lead_inv;
        int shift = i - (static_cast<int>(divisor.coeffs_.size()) - 1);
        quot[shift] = c;
        for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[shift + j] = rem[shift + j] - c * divisor.coeffs_[j];
    }
    return {UniPoly(desc_, std::move(quot)), UniPoly(desc_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

bool UniPoly::operator==(const UniPoly& other) const {
    return coeffs_ == other.coeffs_;
}

UniPoly UniPoly::lift(const FieldPtr& target) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(gf::embed_ext(x, target));
    return UniPoly(target, std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

std::vector<std::pair<FieldElement, int>> uni_roots(const UniPoly& f, const FieldPtr& search) {
    if (f.is_zero()) throw DomainError("root search on the zero polynomial");
    int64_t n = search->size();
    if (n > kScanBound) throw CapacityError("search field larger than the scan bound");
    UniPoly g = f.lift(search);
    std::vector<std::pair<FieldElement, int>> out;
    for (int64_t idx = 0; idx < n; ++idx) {
        FieldElement x = gf::element_at(search, idx);
        if (!g.eval(x).is_zero()) continue;
        // multiplicity by repeated exact division (robust when mult >= p)
        std::vector<FieldElement> lin = {-x, FieldElement::one(search)};
        UniPoly factor(search, std::move(lin));
        int mult = 0;
        UniPoly h = g;
        for (;;) {
            auto [q, r] = h.divmod(factor);
            if (!r.is_zero()) break;
            ++mult;
            h = std::move(q);
        }
        out.emplace_back(x, mult);
    }
    return out;
}

ProjPoint::ProjPoint(const FieldElement& u, const FieldElement& v) : u_(u), v_(v) {
    if (u.is_zero() && v.is_zero()) throw DomainError("(0 : 0) is not a projective point");
    if (!v_.is_zero()) {
        u_ = u_ / v_;
        v_ = FieldElement::one(v_.desc());
    } else {
        u_ = FieldElement::one(u_.desc());
    }
}

ProjPoint ProjPoint::infinity(const FieldPtr& desc) {
    return ProjPoint(FieldElement::one(desc), FieldElement::zero(desc));
}

ProjPoint ProjPoint::affine(const FieldElement& u) {
    return ProjPoint(u, FieldElement::one(u.desc()));
}

bool ProjPoint::operator<(const ProjPoint& other) const {
    if (is_infinity() != other.is_infinity()) return is_infinity();
    if (is_infinity()) return false;
    return u_ < other.u_;
}

BiForm::BiForm(FieldPtr desc, int degree, std::vector<FieldElement> coeffs)
    : desc_(std::move(desc)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != degree_ + 1)
        throw DomainError("degree-d form needs exactly d+1 coefficients");
}

BiForm BiForm::from_ints(const FieldPtr& desc, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(FieldElement::from_int(desc, v));
    return BiForm(desc, static_cast<int>(coeffs.size()) - 1, std::move(c));
}

BiForm BiForm::constant_one(const FieldPtr& desc) {
    return BiForm(desc, 0, {FieldElement::one(desc)});
}

BiForm BiForm::linear(const FieldElement& a, const FieldElement& b) {
    return BiForm(a.desc(), 1, {a, b});
}

bool BiForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

BiForm BiForm::operator*(const BiForm& other) const {
    int d = degree_ + other.degree_;
    std::vector<FieldElement> c(d + 1, FieldElement::zero(desc_));
    for (int i = 0; i <= degree_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; j <= other.degree_; ++j)
            c[i + j] = c[i + j] + coeffs_[i] * other.coeffs_[j];
    }
    return BiForm(desc_, d, std::move(c));
}

BiForm BiForm::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return BiForm(desc_, degree_, std::move(out));
}

BiForm BiForm::pow(int n) const {
    BiForm r = constant_one(desc_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

BiForm BiForm::swapped_vars() const {
    std::vector<FieldElement> c(coeffs_.rbegin(), coeffs_.rend());
    return BiForm(desc_, degree_, std::move(c));
}

UniPoly BiForm::dehomogenize() const {
    // f(t, 1): the coefficient of t^j is the coefficient of x^j y^{d-j}
    std::vector<FieldElement> c(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(desc_, std::move(c));
}

bool BiForm::operator==(const BiForm& other) const {
    return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

namespace {

// Dense truncated power u = g^N mod t^K over F_{p^k}, computed from the
// base-p digits of N: g^N = prod_i (g^{p^i})^{n_i}, and g^{p^i} is sparse
// (coefficients Frobenius-twisted, exponents scaled by p^i). Each multiply
// by a sparse factor costs O(K * deg g). Works entirely on flattened
// residue-vector limbs to stay off the FieldElement heap path.
std::vector<int64_t> dense_pow_truncated(const UniPoly& g, int64_t N, int64_t K) {
    const FieldPtr& desc = g.desc();
    const int k = desc->k;
    const int64_t p = desc->p;
    std::vector<int64_t> acc(static_cast<size_t>(K) * k, 0);
    acc[0] = 1 % p;
    if (N == 0 || g.is_zero()) {
        if (g.is_zero() && N > 0) acc[0] = 0;
        return acc;
    }
    int64_t cur_len = 1;  // coefficient slots of acc in use
    const int dg = g.degree();
    // Frobenius-twisted copies of g's coefficients, updated per digit level.
    std::vector<FieldElement> twisted(g.coeffs());
    std::vector<int64_t> tmp(static_cast<size_t>(K) * k);
    int64_t stride = 1;  // p^i, stays <= N <= cap while digits remain
    int64_t n = N;
    bool first_level = true;
    while (n > 0) {
        if (!first_level) {
            for (auto& c : twisted) c = c.frobenius();
            stride *= p;
        }
        first_level = false;
        int digit = static_cast<int>(n % p);
        n /= p;
        if (stride >= K && digit > 0) {
            // every term of g^{p^i} except the constant one is truncated away
            if (!twisted[0].is_zero()) {
                FieldElement scale = twisted[0].pow(static_cast<uint64_t>(digit));
                // scale acc by a constant
                std::vector<int64_t> srep = scale.rep();
                for (int64_t m = 0; m < cur_len; ++m) {
                    int64_t out[8];
                    gf::rep_mul(*desc, &acc[m * k], srep.data(), out);
                    std::copy(out, out + k, &acc[m * k]);
                }
            } else {
                std::fill(acc.begin(), acc.end(), 0);
                return acc;
            }
            continue;
        }
        for (int rep = 0; rep < digit; ++rep) {
            int64_t new_len = std::min<int64_t>(K, cur_len + static_cast<int64_t>(dg) * stride);
            std::fill(tmp.begin(), tmp.begin() + new_len * k, 0);
            for (int j = 0; j <= dg; ++j) {
                const FieldElement& cj = twisted[j];
                if (cj.is_zero()) continue;
                int64_t off = static_cast<int64_t>(j) * stride;
                if (off >= new_len) break;
                const int64_t* crep = cj.rep().data();
                int64_t limit = std::min<int64_t>(cur_len, new_len - off);
                for (int64_t m = 0; m < limit; ++m) {
                    int64_t out[8];
                    gf::rep_mul(*desc, &acc[m * k], crep, out);
                    gf::rep_add_inplace(*desc, &tmp[(m + off) * k], out);
                }
            }
            std::swap(acc, tmp);
            cur_len = new_len;
        }
    }
    return acc;
}

bool limb_slot_zero(const std::vector<int64_t>& limbs, int k, int64_t slot) {
    for (int m = 0; m < k; ++m)
        if (limbs[slot * k + m] != 0) return false;
    return true;
}

}  // namespace

BiForm form_pow_reduced(const BiForm& f, int64_t N, int e) {
    if (e < 1) throw RangeError("Frobenius exponent e must be >= 1");
    if (N < 0) throw RangeError("N must be nonnegative");
    const FieldPtr& desc = f.desc();
    int64_t q = checked_prime_power(desc->p, e, kIdealBound);
    int64_t dN = static_cast<int64_t>(f.degree()) * N;
    if (dN + 1 > kFormVectorCap) throw CapacityError("dN exceeds the form vector capacity");
    if (N == 0) return BiForm::constant_one(desc);
    UniPoly g = f.dehomogenize();
    std::vector<FieldElement> coeffs(dN + 1, FieldElement::zero(desc));
    if (!g.is_zero()) {
        int64_t dgN = static_cast<int64_t>(g.degree()) * N;
        int64_t K = std::min<int64_t>(dgN + 1, q);
        std::vector<int64_t> u = dense_pow_truncated(g, N, K);
        int k = desc->k;
        for (int64_t j = std::max<int64_t>(0, dN - q + 1); j < K; ++j) {
            if (dN - j >= q) continue;
            std::vector<int64_t> rep(u.begin() + j * k, u.begin() + (j + 1) * k);
            coeffs[dN - j] = FieldElement(desc, std::move(rep));
        }
    }
    return BiForm(desc, static_cast<int>(dN), std::move(coeffs));
}

bool in_frobenius_ideal(const BiForm& f, int64_t N, int e) {
    if (e < 1) throw RangeError("Frobenius exponent e must be >= 1");
    if (N < 0) throw RangeError("N must be nonnegative");
    const FieldPtr& desc = f.desc();
    int64_t q = checked_prime_power(desc->p, e, kIdealBound);
    if (N == 0) return false;  // f^0 = 1 survives
    UniPoly g = f.dehomogenize();
    if (g.is_zero()) return true;
    int64_t dN = static_cast<int64_t>(f.degree()) * N;
    int64_t lo = std::max<int64_t>(0, dN - q + 1);
    int64_t hi = std::min<int64_t>(static_cast<int64_t>(g.degree()) * N, q - 1);
    if (lo > hi) return true;
    std::vector<int64_t> u = dense_pow_truncated(g, N, hi + 1);
    for (int64_t j = lo; j <= hi; ++j)
        if (!limb_slot_zero(u, desc->k, j)) return false;
    return true;
}

FieldElement central_coeff(const BiForm& f, int64_t N) {
    const FieldPtr& desc = f.desc();
    int64_t dN = static_cast<int64_t>(f.degree()) * N;
    if (dN % 2 != 0) throw ParityError("dN is odd; no central monomial");
    if (N == 0) return FieldElement::one(desc);
    UniPoly g = f.dehomogenize();
    if (g.is_zero()) return FieldElement::zero(desc);
    int64_t target = dN / 2;
    if (target > static_cast<int64_t>(g.degree()) * N) return FieldElement::zero(desc);
    if (target + 1 > kFormVectorCap) throw CapacityError("central index beyond capacity");
    std::vector<int64_t> u = dense_pow_truncated(g, N, target + 1);
    int k = desc->k;
    std::vector<int64_t> rep(u.begin() + target * k, u.begin() + (target + 1) * k);
    return FieldElement(desc, std::move(rep));
}

RootsOnP1 roots_on_p1(const BiForm& f) {
    if (f.is_zero()) throw DomainError("roots of the zero form");
    int d = f.degree();
    if (d < 1 || d > 12) throw CapacityError("roots_on_p1 handles degrees 1..12");
    const FieldPtr& base = f.desc();
    UniPoly g = f.dehomogenize();
    int inf_mult = d - (g.is_zero() ? 0 : g.degree());
    if (g.is_zero()) throw DomainError("roots of the zero form");
    for (int m = 1; base->k * m <= 8; ++m) {
        int k = base->k * m;
        gf::FieldPtr search;
        try {
            search = gf::make_field(base->p, k);
        } catch (const RangeError&) {
            break;
        }
        if (search->size() > kScanBound) break;
        auto affine = uni_roots(g, search);
        int total = inf_mult;
        for (const auto& [root, mult] : affine) total += mult;
        if (total == d) {
            RootsOnP1 out;
            out.field = search;
            if (inf_mult > 0) out.roots.emplace_back(ProjPoint::infinity(search), inf_mult);
            for (const auto& [root, mult] : affine)
                out.roots.emplace_back(ProjPoint::affine(root), mult);
            std::sort(out.roots.begin(), out.roots.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return out;
        }
    }
    throw CapacityError("splitting field exceeds the supported extension range");
}

}  // namespace fptk::poly
