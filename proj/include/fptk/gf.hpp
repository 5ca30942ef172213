#ifndef FPTK_GF_HPP
#define FPTK_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fptk/errors.hpp"

namespace fptk::gf {

/// Descriptor of F_{p^k}. For k > 1 the field is F_p[t]/(modulus) where
/// modulus is the lexicographically smallest monic irreducible of degree k
/// (coefficients compared low-degree-first). Immutable once built.
struct FieldDesc {
    int64_t p = 0;
    int k = 1;
    // Monic, length k+1, low degree first. Empty for k == 1.
    std::vector<int64_t> modulus;

    int64_t size() const;  // p^k, guarded against overflow
    bool operator==(const FieldDesc& other) const {
        return p == other.p && k == other.k && modulus == other.modulus;
    }
};

using FieldPtr = std::shared_ptr<FieldDesc>;

/// Builds F_{p^k}. Memoized: repeated calls return the identical descriptor.
/// Throws PrimalityError for composite p, RangeError for k outside [1, 8].
FieldPtr make_field(int64_t p, int k = 1);

bool is_prime(int64_t n);

class FieldElement {
public:
    FieldElement() = default;
    // rep is reduced mod p and padded/trimmed to length k.
    FieldElement(FieldPtr desc, std::vector<int64_t> rep);

    static FieldElement zero(const FieldPtr& desc);
    static FieldElement one(const FieldPtr& desc);
    // Constant embedding of an integer (reduced mod p).
    static FieldElement from_int(const FieldPtr& desc, int64_t value);

    const FieldPtr& desc() const { return desc_; }
    const std::vector<int64_t>& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t n) const;
    FieldElement frobenius() const;  // x -> x^p

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }
    // Canonical ordering by coefficient vector, high limb last.
    bool operator<(const FieldElement& other) const;

    std::string to_string() const;

private:
    void check_same_field(const FieldElement& other) const;

    FieldPtr desc_;
    std::vector<int64_t> rep_;
};

/// Constant-polynomial embedding F_p -> F_{p^k}; a ring homomorphism.
FieldElement embed(const FieldElement& x, const FieldPtr& target);

/// Embedding F_{p^m} -> F_{p^k} for m | k, determined by mapping the
/// generator of the source to the canonically smallest root of the source
/// modulus in the target. Deterministic for a given pair of descriptors.
FieldElement embed_ext(const FieldElement& x, const FieldPtr& target);

/// Element with index i in the canonical enumeration (base-p digits of i).
FieldElement element_at(const FieldPtr& desc, int64_t index);

// --- scalar helpers (mod-p arithmetic on int64 with 128-bit products) ---
int64_t mod_add(int64_t a, int64_t b, int64_t p);
int64_t mod_sub(int64_t a, int64_t b, int64_t p);
int64_t mod_mul(int64_t a, int64_t b, int64_t p);
int64_t mod_pow(int64_t a, uint64_t n, int64_t p);
int64_t mod_inv(int64_t a, int64_t p);

// Low-level residue-vector arithmetic in F_p[t]/(modulus); rep vectors of
// length k. Used by the dense kernels in the poly module.
void rep_mul(const FieldDesc& d, const int64_t* a, const int64_t* b, int64_t* out);
void rep_add_inplace(const FieldDesc& d, int64_t* acc, const int64_t* x);

}  // namespace fptk::gf

#endif
