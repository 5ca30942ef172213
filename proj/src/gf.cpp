#include "fptk/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace fptk::gf {

int64_t mod_add(int64_t a, int64_t b, int64_t p) {
    int64_t s = a + b;
    return s >= p ? s - p : s;
}

int64_t mod_sub(int64_t a, int64_t b, int64_t p) {
    int64_t s = a - b;
    return s < 0 ? s + p : s;
}

int64_t mod_mul(int64_t a, int64_t b, int64_t p) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % p);
}

int64_t mod_pow(int64_t a, uint64_t n, int64_t p) {
    int64_t r = 1 % p;
    int64_t base = a % p;
    while (n) {
        if (n & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        n >>= 1;
    }
    return r;
}

int64_t mod_inv(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero("inverse of zero mod " + std::to_string(p));
    // extended Euclid
    int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    assert(r0 == 1);
    return s0 < 0 ? s0 + p : s0;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int64_t FieldDesc::size() const {
    int64_t s = 1;
    for (int i = 0; i < k; ++i) {
        if (s > (int64_t{1} << 62) / p) throw CapacityError("field size overflows");
        s *= p;
    }
    return s;
}

namespace {

// Multiplication in F_p[t]/(modulus) on raw length-k residue vectors.
void raw_mul(int64_t p, int k, const std::vector<int64_t>& modulus,
             const int64_t* a, const int64_t* b, int64_t* out) {
    if (k == 1) {
        out[0] = mod_mul(a[0], b[0], p);
        return;
    }
    int64_t prod[15] = {0};  // k <= 8
    for (int i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] = mod_add(prod[i + j], mod_mul(a[i], b[j], p), p);
    }
    // reduce by the monic modulus
    for (int d = 2 * k - 2; d >= k; --d) {
        int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < k; ++j)
            prod[d - k + j] = mod_sub(prod[d - k + j], mod_mul(c, modulus[j], p), p);
    }
    std::copy(prod, prod + k, out);
}

// x^p^i mod f for monic f of degree deg, used by the irreducibility test.
std::vector<int64_t> poly_mulmod(int64_t p, const std::vector<int64_t>& a,
                                 const std::vector<int64_t>& b,
                                 const std::vector<int64_t>& f) {
    int deg = static_cast<int>(f.size()) - 1;
    std::vector<int64_t> prod(2 * deg - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = mod_add(prod[i + j], mod_mul(a[i], b[j], p), p);
    }
    for (int d = static_cast<int>(prod.size()) - 1; d >= deg; --d) {
        int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < deg; ++j)
            prod[d - deg + j] = mod_sub(prod[d - deg + j], mod_mul(c, f[j], p), p);
    }
    prod.resize(deg);
    return prod;
}

std::vector<int64_t> poly_powmod_p(int64_t p, std::vector<int64_t> base,
                                   const std::vector<int64_t>& f) {
    // base^p mod f by square-and-multiply
    int deg = static_cast<int>(f.size()) - 1;
    std::vector<int64_t> result(deg, 0);
    result[0] = 1;
    uint64_t n = static_cast<uint64_t>(p);
    while (n) {
        if (n & 1) result = poly_mulmod(p, result, base, f);
        base = poly_mulmod(p, base, base, f);
        n >>= 1;
    }
    return result;
}

std::vector<int64_t> poly_gcd_raw(int64_t p, std::vector<int64_t> a, std::vector<int64_t> b) {
    auto trim = [](std::vector<int64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        int64_t lead_inv = mod_inv(b.back(), p);
        while (a.size() >= b.size()) {
            int64_t c = mod_mul(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = mod_sub(a[shift + j], mod_mul(c, b[j], p), p);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(int64_t p, const std::vector<int64_t>& f) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return true;
    // f has no factor of degree <= deg/2 iff gcd(f, t^{p^i} - t) = 1 for all
    // i <= deg/2 (t^{p^i} - t is the product of irreducibles of degree | i).
    std::vector<int64_t> x_power(deg, 0);
    if (deg > 1) x_power[1] = 1;  // t
    for (int i = 1; i <= deg / 2; ++i) {
        x_power = poly_powmod_p(p, x_power, f);
        std::vector<int64_t> diff = x_power;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_sub(diff[1], 1, p);
        auto g = poly_gcd_raw(p, diff, f);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<int64_t> smallest_irreducible(int64_t p, int k) {
    // Enumerate monic degree-k polynomials in lexicographic order where the
    // low-degree coefficient is compared first.
    std::vector<int64_t> coeffs(k, 0);  // c0..c_{k-1}; leading 1 implied
    for (;;) {
        std::vector<int64_t> f = coeffs;
        f.push_back(1);
        if (f[0] != 0 && is_irreducible(p, f)) return f;
        // increment with c_{k-1} as the fastest digit so that c0 dominates
        int pos = k - 1;
        while (pos >= 0 && ++coeffs[pos] == p) {
            coeffs[pos] = 0;
            --pos;
        }
        if (pos < 0) throw RangeError("no irreducible found (unreachable)");
    }
}

std::map<std::pair<int64_t, int>, FieldPtr>& field_cache() {
    static std::map<std::pair<int64_t, int>, FieldPtr> cache;
    return cache;
}
std::mutex field_cache_mutex;

}  // namespace

FieldPtr make_field(int64_t p, int k) {
    if (k < 1 || k > 8) throw RangeError("extension degree k must be in [1, 8]");
    if (p < 2 || p >= (int64_t{1} << 31) || !is_prime(p))
        throw PrimalityError(std::to_string(p) + " is not a prime in [2, 2^31)");
    std::lock_guard<std::mutex> lock(field_cache_mutex);
    auto key = std::make_pair(p, k);
    auto it = field_cache().find(key);
    if (it != field_cache().end()) return it->second;
    auto desc = std::make_shared<FieldDesc>();
    desc->p = p;
    desc->k = k;
    if (k > 1) desc->modulus = smallest_irreducible(p, k);
    field_cache()[key] = desc;
    return desc;
}

FieldElement::FieldElement(FieldPtr desc, std::vector<int64_t> rep) : desc_(std::move(desc)) {
    rep.resize(desc_->k, 0);
    for (auto& c : rep) {
        c %= desc_->p;
        if (c < 0) c += desc_->p;
    }
    rep_ = std::move(rep);
}

FieldElement FieldElement::zero(const FieldPtr& desc) {
    return FieldElement(desc, std::vector<int64_t>(desc->k, 0));
}

FieldElement FieldElement::one(const FieldPtr& desc) {
    std::vector<int64_t> rep(desc->k, 0);
    rep[0] = 1 % desc->p;
    return FieldElement(desc, std::move(rep));
}

FieldElement FieldElement::from_int(const FieldPtr& desc, int64_t value) {
    std::vector<int64_t> rep(desc->k, 0);
    rep[0] = value;
    return FieldElement(desc, std::move(rep));
}

bool FieldElement::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (rep_[0] != 1 % desc_->p) return false;
    return std::all_of(rep_.begin() + 1, rep_.end(), [](int64_t c) { return c == 0; });
}

void FieldElement::check_same_field(const FieldElement& other) const {
    if (desc_ == other.desc_) return;
    if (!desc_ || !other.desc_ || !(*desc_ == *other.desc_))
        throw FieldMismatch("operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    check_same_field(other);
    std::vector<int64_t> rep(desc_->k);
    for (int i = 0; i < desc_->k; ++i) rep[i] = mod_add(rep_[i], other.rep_[i], desc_->p);
    FieldElement r;
    r.desc_ = desc_;
    r.rep_ = std::move(rep);
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    check_same_field(other);
    std::vector<int64_t> rep(desc_->k);
    for (int i = 0; i < desc_->k; ++i) rep[i] = mod_sub(rep_[i], other.rep_[i], desc_->p);
    FieldElement r;
    r.desc_ = desc_;
    r.rep_ = std::move(rep);
    return r;
}

FieldElement FieldElement::operator-() const {
    std::vector<int64_t> rep(desc_->k);
    for (int i = 0; i < desc_->k; ++i) rep[i] = rep_[i] == 0 ? 0 : desc_->p - rep_[i];
    FieldElement r;
    r.desc_ = desc_;
    r.rep_ = std::move(rep);
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    check_same_field(other);
    std::vector<int64_t> rep(desc_->k);
    raw_mul(desc_->p, desc_->k, desc_->modulus, rep_.data(), other.rep_.data(), rep.data());
    FieldElement r;
    r.desc_ = desc_;
    r.rep_ = std::move(rep);
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    return *this * other.inv();
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (desc_->k == 1) {
        FieldElement r;
        r.desc_ = desc_;
        r.rep_ = {mod_inv(rep_[0], desc_->p)};
        return r;
    }
    // extended Euclid in F_p[t] against the modulus
    int64_t p = desc_->p;
    std::vector<int64_t> r0 = desc_->modulus;
    std::vector<int64_t> r1 = rep_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<int64_t> s0, s1 = {1};
    auto trim = [](std::vector<int64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (!r1.empty()) {
        // (q, rem) = divmod(r0, r1)
        std::vector<int64_t> rem = r0;
        std::vector<int64_t> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        int64_t lead_inv = mod_inv(r1.back(), p);
        while (rem.size() >= r1.size()) {
            int64_t c = mod_mul(rem.back(), lead_inv, p);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = mod_sub(rem[shift + j], mod_mul(c, r1[j], p), p);
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<int64_t> qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = mod_add(qs[i + j], mod_mul(q[i], s1[j], p), p);
        std::vector<int64_t> s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_sub(s2[i], qs[i], p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd; scale s0 by its inverse
    assert(r0.size() == 1);
    int64_t scale = mod_inv(r0[0], p);
    std::vector<int64_t> rep(desc_->k, 0);
    for (size_t i = 0; i < s0.size(); ++i) rep[i] = mod_mul(s0[i], scale, p);
    FieldElement r;
    r.desc_ = desc_;
    r.rep_ = std::move(rep);
    return r;
}

FieldElement FieldElement::pow(uint64_t n) const {
    FieldElement result = one(desc_);
    FieldElement base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

FieldElement FieldElement::frobenius() const {
    return pow(static_cast<uint64_t>(desc_->p));
}

bool FieldElement::operator==(const FieldElement& other) const {
    check_same_field(other);
    return rep_ == other.rep_;
}

bool FieldElement::operator<(const FieldElement& other) const {
    check_same_field(other);
    return std::lexicographical_compare(rep_.rbegin(), rep_.rend(),
                                        other.rep_.rbegin(), other.rep_.rend());
}

std::string FieldElement::to_string() const {
    if (desc_->k == 1) return std::to_string(rep_[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < desc_->k; ++i) {
        if (i) os << ",";
        os << rep_[i];
    }
    os << "]";
    return os.str();
}

FieldElement embed(const FieldElement& x, const FieldPtr& target) {
    if (x.desc()->k != 1) throw FieldMismatch("embed expects a prime-field element");
    if (x.desc()->p != target->p) throw FieldMismatch("embed across different characteristics");
    return FieldElement::from_int(target, x.rep()[0]);
}

namespace {

std::map<std::pair<const FieldDesc*, const FieldDesc*>, FieldElement> embed_root_cache;
std::mutex embed_root_mutex;

// Smallest root of the source modulus inside the target field.
FieldElement source_generator_image(const FieldPtr& source, const FieldPtr& target) {
    std::lock_guard<std::mutex> lock(embed_root_mutex);
    auto key = std::make_pair(source.get(), target.get());
    auto it = embed_root_cache.find(key);
    if (it != embed_root_cache.end()) return it->second;
    int64_t n = target->size();
    if (n > 1000000) throw CapacityError("target field too large for embedding scan");
    for (int64_t idx = 0; idx < n; ++idx) {
        FieldElement cand = element_at(target, idx);
        // evaluate the source modulus at cand
        FieldElement acc = FieldElement::zero(target);
        for (auto c = source->modulus.rbegin(); c != source->modulus.rend(); ++c)
            acc = acc * cand + FieldElement::from_int(target, *c);
        if (acc.is_zero()) {
            embed_root_cache.emplace(key, cand);
            return cand;
        }
    }
    throw FieldMismatch("source modulus has no root in target field");
}

}  // namespace

FieldElement embed_ext(const FieldElement& x, const FieldPtr& target) {
    const FieldPtr& src = x.desc();
    if (src->p != target->p) throw FieldMismatch("embed_ext across different characteristics");
    if (src->k == 1) return embed(x, target);
    if (*src == *target) return FieldElement(target, x.rep());
    if (target->k % src->k != 0)
        throw FieldMismatch("source field is not a subfield of target");
    FieldElement root = source_generator_image(src, target);
    FieldElement acc = FieldElement::zero(target);
    const auto& rep = x.rep();
    for (int i = src->k - 1; i >= 0; --i)
        acc = acc * root + FieldElement::from_int(target, rep[i]);
    return acc;
}

FieldElement element_at(const FieldPtr& desc, int64_t index) {
    std::vector<int64_t> rep(desc->k, 0);
    for (int i = 0; i < desc->k && index > 0; ++i) {
        rep[i] = index % desc->p;
        index /= desc->p;
    }
    return FieldElement(desc, std::move(rep));
}

void rep_mul(const FieldDesc& d, const int64_t* a, const int64_t* b, int64_t* out) {
    raw_mul(d.p, d.k, d.modulus, a, b, out);
}

void rep_add_inplace(const FieldDesc& d, int64_t* acc, const int64_t* x) {
    for (int i = 0; i < d.k; ++i) acc[i] = mod_add(acc[i], x[i], d.p);
}

}  // namespace fptk::gf
