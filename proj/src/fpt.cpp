#include "fptk/fpt.hpp"

#include <algorithm>
#include <cassert>

namespace fptk::fpt {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::MainThmGeneric: return "MainThm-generic";
        case Provenance::MainThmSupersingular: return "MainThm-supersingular";
        case Provenance::ThmTwoGeneric: return "ThmTwo-generic";
        case Provenance::ThmTwoRoot: return "ThmTwo-root";
        case Provenance::P2Case: return "P2-case";
        case Provenance::Monomial: return "Monomial";
        case Provenance::BinomialX2yXy: return "Binomial-x2yxy";
        case Provenance::OracleBracket: return "Oracle-bracket";
    }
    return "?";
}

namespace {

FieldElement det2(const ProjPoint& a, const ProjPoint& b) {
    return a.u() * b.v() - b.u() * a.v();
}

// Smallest subfield representative of a, found by Frobenius period and an
// exhaustive match scan (desk-scale fields only; falls back to a itself).
FieldElement minimal_field_value(const FieldElement& a) {
    const FieldPtr& desc = a.desc();
    if (desc->k == 1) return a;
    int period = 1;
    FieldElement x = a.frobenius();
    while (x != a) {
        x = x.frobenius();
        ++period;
    }
    if (period == desc->k) return a;
    FieldPtr sub = gf::make_field(desc->p, period);
    int64_t n = sub->size();
    for (int64_t idx = 0; idx < n; ++idx) {
        FieldElement cand = gf::element_at(sub, idx);
        if (gf::embed_ext(cand, desc) == a) return cand;
    }
    return a;  // unreachable for consistent towers
}

}  // namespace

FieldElement cross_ratio(const ProjPoint& z1, const ProjPoint& z2,
                         const ProjPoint& z3, const ProjPoint& z4) {
    const ProjPoint* pts[4] = {&z1, &z2, &z3, &z4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw DomainError("cross-ratio of repeated points");
    FieldElement num = det2(z4, z1) * det2(z3, z2);
    FieldElement den = det2(z4, z2) * det2(z3, z1);
    return num / den;
}

FormClass classify_form(const BiForm& f) {
    if (f.is_zero() || f.degree() < 1) throw DomainError("classify needs a nonzero form of degree >= 1");
    poly::RootsOnP1 rts = poly::roots_on_p1(f);
    FormClass cls;
    std::vector<int> mults;
    for (const auto& [pt, m] : rts.roots) mults.push_back(m);
    std::sort(mults.begin(), mults.end());
    bool paired = mults.size() == 4 && mults[0] == mults[1] && mults[2] == mults[3];
    if (paired) {
        int b = mults[0], c = mults[3];
        cls.pattern = {b, b, c, c};
        cls.b = b;
        cls.c = c;
        // canonical order: the multiplicity-b pair first, each pair sorted
        std::vector<ProjPoint> bpts, cpts;
        for (const auto& [pt, m] : rts.roots)
            (m == b ? bpts : cpts).push_back(pt);
        if (b == c) {
            // all four have equal multiplicity; one flat canonical sort
            bpts.insert(bpts.end(), cpts.begin(), cpts.end());
            cpts.clear();
            std::sort(bpts.begin(), bpts.end());
            cpts.assign(bpts.begin() + 2, bpts.end());
            bpts.erase(bpts.begin() + 2, bpts.end());
        } else {
            std::sort(bpts.begin(), bpts.end());
            std::sort(cpts.begin(), cpts.end());
        }
        FieldElement a = cross_ratio(bpts[0], bpts[1], cpts[0], cpts[1]);
        cls.cross_ratio = minimal_field_value(a);
    } else {
        std::sort(mults.rbegin(), mults.rend());
        cls.pattern = mults;
    }
    return cls;
}

std::optional<FptValue> ft_formula(const FormClass& cls, const FieldPtr& desc) {
    const auto& pat = cls.pattern;
    // one or two distinct roots: the form is a monomial after a change of
    // variables, and FT is the reciprocal of the largest exponent
    if (pat.size() == 1 || pat.size() == 2)
        return FptValue{mpq_class(1, pat[0]), Provenance::Monomial};
    if (pat == std::vector<int>{2, 1, 1}) return FptValue{mpq_class(1, 2), Provenance::BinomialX2yXy};
    if (cls.b && cls.c && cls.cross_ratio) {
        int64_t p = desc->p;
        int b = *cls.b, c = *cls.c;
        int64_t bc = b + c;
        if (b == 1 && c == 1) {
            if (p == 2) return FptValue{mpq_class(1, 2), Provenance::P2Case};
            FieldElement h = deuring::deuring_eval(static_cast<uint64_t>((p - 1) / 2),
                                                   *cls.cross_ratio);
            if (!h.is_zero()) return FptValue{mpq_class(1, 2), Provenance::MainThmGeneric};
            mpq_class v(p - 1, 2 * p);
            v.canonicalize();
            return FptValue{v, Provenance::MainThmSupersingular};
        }
        if (p % bc != 1) return std::nullopt;  // theorem hypothesis fails
        uint64_t n = static_cast<uint64_t>(c) * static_cast<uint64_t>(p - 1) /
                     static_cast<uint64_t>(bc);
        FieldElement h = deuring::deuring_eval(n, *cls.cross_ratio);
        if (!h.is_zero()) {
            mpq_class v(1, bc);
            return FptValue{v, Provenance::ThmTwoGeneric};
        }
        mpq_class v(p - 1, bc * p);
        v.canonicalize();
        return FptValue{v, Provenance::ThmTwoRoot};
    }
    return std::nullopt;
}

NuRecord nu(const BiForm& f, int e) {
    if (f.is_zero()) throw DomainError("nu of the zero form");
    if (e < 1) throw RangeError("e must be >= 1");
    int64_t q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > 1000000 / f.desc()->p) throw CapacityError("p^e exceeds the oracle cap");
        q *= f.desc()->p;
    }
    // membership is monotone in N, member(0) = false, member(q) = true
    int64_t lo = 0, hi = q;
    while (hi - lo > 1) {
        int64_t mid = lo + (hi - lo) / 2;
        if (poly::in_frobenius_ideal(f, mid, e))
            hi = mid;
        else
            lo = mid;
    }
    NuRecord rec;
    rec.e = e;
    rec.nu = lo;
    rec.ratio = mpq_class(lo, q);
    rec.ratio.canonicalize();
    return rec;
}

FtBracket ft_bracket(const BiForm& f, int e_max) {
    if (e_max < 1) throw RangeError("e_max must be >= 1");
    FtBracket out;
    for (int e = 1; e <= e_max; ++e) out.records.push_back(nu(f, e));
    const NuRecord& last = out.records.back();
    mpz_class q = 1;
    for (int i = 0; i < last.e; ++i) q *= f.desc()->p;
    out.lower = mpq_class(last.nu) / q;
    out.upper = mpq_class(last.nu + 1) / q;
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

std::optional<mpq_class> lct_value(const FormClass& cls) {
    if (!(cls.b && cls.c)) return std::nullopt;
    mpq_class v(1, *cls.b + *cls.c);
    return v;
}

BiForm family_form(int b, int c, const FieldElement& a) {
    if (b < 1 || c < 1) throw RangeError("family exponents must be positive");
    const FieldPtr& desc = a.desc();
    FieldElement one = FieldElement::one(desc);
    FieldElement zero = FieldElement::zero(desc);
    BiForm x = BiForm::linear(one, zero);
    BiForm y = BiForm::linear(zero, one);
    BiForm x_plus_y = BiForm::linear(one, one);
    BiForm x_plus_ay = BiForm::linear(one, a);
    return x.pow(b) * y.pow(b) * x_plus_y.pow(c) * x_plus_ay.pow(c);
}

}  // namespace fptk::fpt
