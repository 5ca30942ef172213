#ifndef FPTK_DEURING_HPP
#define FPTK_DEURING_HPP

#include <cstdint>
#include <vector>

#include "fptk/poly.hpp"

namespace fptk::deuring {

using gf::FieldElement;
using gf::FieldPtr;
using poly::UniPoly;

/// Base-p digits of n, low digit first; empty for n = 0.
std::vector<int64_t> p_digits(uint64_t n, int64_t p);

/// Row n of Pascal's triangle reduced mod p, entries C(n, i) for i = 0..n.
std::vector<int64_t> binomial_row(int64_t n, int64_t p);

/// The polynomial with coefficient C(n, i)^2 mod p at lambda^i, degree n.
UniPoly deuring_direct(int64_t n, const FieldPtr& desc);

/// Value of the degree-n polynomial at a, computed through the base-p digit
/// factorization so n may be far larger than any constructible polynomial.
FieldElement deuring_eval(uint64_t n, const FieldElement& a);

/// Formal antiderivative of deuring_direct(n) with constant coefficient 0.
/// Requires n < p/2 so every divisor i+1 <= n+1 is invertible mod p.
UniPoly antiderivative_F(int64_t n, const FieldPtr& desc);

/// Legendre polynomial P_n mod p from the finite sum
/// 2^{-n} sum_i C(n,i)^2 (x-1)^{n-i} (x+1)^i. Requires p != 2 and n < p.
UniPoly legendre_poly(int64_t n, const FieldPtr& desc);

/// Roots of deuring_direct(n) lying in the search field.
std::vector<FieldElement> deuring_root_set(int64_t n, const FieldPtr& desc,
                                           const FieldPtr& search);

/// {a, 1/a, 1-a, 1/(1-a), a/(a-1), (a-1)/a}, deduplicated and sorted by the
/// canonical element encoding. Requires a outside {0, 1}.
std::vector<FieldElement> mobius_orbit(const FieldElement& a);

/// {b, -b, (3+b)/(-1+b), -(3+b)/(-1+b), (3-b)/(1+b), -(3-b)/(1+b)},
/// deduplicated and sorted. Requires b outside {1, -1}.
std::vector<FieldElement> legendre_root_orbit(const FieldElement& b);

}  // namespace fptk::deuring

#endif
