#ifndef FPTK_FPT_HPP
#define FPTK_FPT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fptk/deuring.hpp"
#include "fptk/poly.hpp"

namespace fptk::fpt {

using gf::FieldElement;
using gf::FieldPtr;
using poly::BiForm;
using poly::ProjPoint;

enum class Provenance {
    MainThmGeneric,
    MainThmSupersingular,
    ThmTwoGeneric,
    ThmTwoRoot,
    P2Case,
    Monomial,
    BinomialX2yXy,
    OracleBracket,
};

std::string to_string(Provenance p);

struct FptValue {
    mpq_class value;
    Provenance provenance;
};

struct FormClass {
    // Multiplicity pattern of the roots. For four distinct roots paired as
    // (b, b, c, c) the pattern is [b, b, c, c] with b <= c; otherwise sorted
    // in decreasing multiplicity.
    std::vector<int> pattern;
    std::optional<FieldElement> cross_ratio;  // four-distinct-support patterns only
    std::optional<int> b, c;                  // the [b,b,c,c] family
};

struct NuRecord {
    int e = 0;
    int64_t nu = 0;
    mpq_class ratio;  // nu / p^e
};

struct FtBracket {
    std::vector<NuRecord> records;
    mpq_class lower;  // nu_{e_max} / p^{e_max}
    mpq_class upper;  // (nu_{e_max} + 1) / p^{e_max}
};

/// Cross-ratio of four pairwise distinct points of P^1, via 2x2 determinants
/// so points at infinity need no special casing. Never 0 or 1.
FieldElement cross_ratio(const ProjPoint& z1, const ProjPoint& z2,
                         const ProjPoint& z3, const ProjPoint& z4);

/// Root-multiplicity classification; for the four-distinct-support patterns
/// the cross-ratio is recorded in the minimal field containing it, with the
/// canonical root order (the multiplicity-b pair maps to (0, infinity)).
FormClass classify_form(const BiForm& f);

/// Closed-form F-pure threshold where the covering theorems apply;
/// std::nullopt when the hypotheses fail (caller falls back to the oracle).
std::optional<FptValue> ft_formula(const FormClass& cls, const FieldPtr& desc);

/// Largest N with f^N outside (x^{p^e}, y^{p^e}), by binary search on the
/// monotone membership predicate.
NuRecord nu(const BiForm& f, int e);

/// nu records for e = 1..e_max plus the final bracketing interval
/// (nu/p^e, (nu+1)/p^e] around FT(f).
FtBracket ft_bracket(const BiForm& f, int e_max);

/// Log canonical threshold 1/(b+c) for the [b,b,c,c] family; std::nullopt
/// for every other pattern.
std::optional<mpq_class> lct_value(const FormClass& cls);

/// x^b y^b (x+y)^c (x+a*y) ^c over the field of a.
BiForm family_form(int b, int c, const FieldElement& a);

}  // namespace fptk::fpt

#endif
