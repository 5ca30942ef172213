#ifndef FPTK_POLY_HPP
#define FPTK_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fptk/gf.hpp"

namespace fptk::poly {

using gf::FieldElement;
using gf::FieldPtr;

/// Dense univariate polynomial over a field, low degree first, canonical
/// (no trailing zero coefficients; the zero polynomial has no coefficients).
class UniPoly {
public:
    // degree() of the zero polynomial
    static constexpr int kNegInfinity = -0x7fffffff;

    explicit UniPoly(FieldPtr desc) : desc_(std::move(desc)) {}
    UniPoly(FieldPtr desc, std::vector<FieldElement> coeffs);
    // Convenience: integer coefficients reduced into the field.
    static UniPoly from_ints(const FieldPtr& desc, const std::vector<int64_t>& coeffs);

    const FieldPtr& desc() const { return desc_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1; }
    FieldElement coeff(int i) const;  // zero beyond the stored range
    FieldElement lead() const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly scaled(const FieldElement& c) const;
    UniPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    UniPoly monic() const;

    bool operator==(const UniPoly& other) const;
    bool operator!=(const UniPoly& other) const { return !(*this == other); }

    // Coefficients embedded into an extension of the base field.
    UniPoly lift(const FieldPtr& target) const;

private:
    void normalize();

    FieldPtr desc_;
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd via the Euclidean algorithm.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// All roots of f in the search field (an extension of f's field), with exact
/// multiplicities from repeated division. Exhaustive scan; the search field
/// must have at most 10^6 elements.
std::vector<std::pair<FieldElement, int>> uni_roots(const UniPoly& f, const FieldPtr& search);

/// Point of P^1 stored in canonical form: (u : 1), or (1 : 0) at infinity.
class ProjPoint {
public:
    ProjPoint(const FieldElement& u, const FieldElement& v);
    static ProjPoint infinity(const FieldPtr& desc);
    static ProjPoint affine(const FieldElement& u);

    const FieldElement& u() const { return u_; }
    const FieldElement& v() const { return v_; }
    bool is_infinity() const { return v_.is_zero(); }
    const FieldPtr& desc() const { return u_.desc(); }

    bool operator==(const ProjPoint& other) const { return u_ == other.u_ && v_ == other.v_; }
    bool operator!=(const ProjPoint& other) const { return !(*this == other); }
    // Infinity sorts first, then by the affine coordinate.
    bool operator<(const ProjPoint& other) const;

private:
    FieldElement u_, v_;
};

/// Homogeneous bivariate form of degree d: coeffs[i] multiplies x^{d-i} y^i.
class BiForm {
public:
    BiForm(FieldPtr desc, int degree, std::vector<FieldElement> coeffs);
    static BiForm from_ints(const FieldPtr& desc, const std::vector<int64_t>& coeffs);
    static BiForm constant_one(const FieldPtr& desc);
    // a*x + b*y
    static BiForm linear(const FieldElement& a, const FieldElement& b);

    const FieldPtr& desc() const { return desc_; }
    int degree() const { return degree_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    // Coefficient of x^{xdeg} y^{degree - xdeg}.
    FieldElement coeff_x(int xdeg) const { return coeffs_[degree_ - xdeg]; }
    bool is_zero() const;

    BiForm operator*(const BiForm& other) const;
    BiForm scaled(const FieldElement& c) const;
    BiForm pow(int n) const;
    // Substitution x <-> y.
    BiForm swapped_vars() const;

    // f(t, 1) as a univariate polynomial in t.
    UniPoly dehomogenize() const;

    bool operator==(const BiForm& other) const;

private:
    FieldPtr desc_;
    int degree_;
    std::vector<FieldElement> coeffs_;
};

/// f^N with every monomial lying in the ideal (x^{p^e}, y^{p^e}) discarded.
/// Throws CapacityError when the result vector would exceed 2*10^6 entries.
BiForm form_pow_reduced(const BiForm& f, int64_t N, int e);

/// f^N in (x^{p^e}, y^{p^e})?
bool in_frobenius_ideal(const BiForm& f, int64_t N, int e);

/// Coefficient of x^{dN/2} y^{dN/2} in f^N. Throws ParityError when dN is odd.
FieldElement central_coeff(const BiForm& f, int64_t N);

struct RootsOnP1 {
    FieldPtr field;  // minimal extension containing every root
    std::vector<std::pair<ProjPoint, int>> roots;  // with multiplicities
};

/// All d roots of a nonzero degree-d form on P^1 over the minimal extension,
/// counted with multiplicity; the point at infinity has multiplicity
/// d - deg f(x, 1). Requires d <= 12.
RootsOnP1 roots_on_p1(const BiForm& f);

}  // namespace fptk::poly

#endif
