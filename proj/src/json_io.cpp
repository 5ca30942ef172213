#include "fptk/json_io.hpp"

namespace fptk::json_io {

nlohmann::json element_to_json(const gf::FieldElement& x) {
    return {{"p", x.desc()->p}, {"k", x.desc()->k}, {"rep", x.rep()}};
}

nlohmann::json unipoly_to_json(const poly::UniPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.rep());
    return {{"p", f.desc()->p}, {"k", f.desc()->k}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json rational_to_json(const mpq_class& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

nlohmann::json ft_result_to_json(const fpt::FormClass& cls,
                                 const std::optional<fpt::FptValue>& ft,
                                 const std::vector<fpt::NuRecord>& brackets,
                                 const std::optional<mpq_class>& lct) {
    nlohmann::json out;
    out["pattern"] = cls.pattern;
    out["crossRatio"] =
        cls.cross_ratio ? element_to_json(*cls.cross_ratio) : nlohmann::json(nullptr);
    if (ft) {
        nlohmann::json v = rational_to_json(ft->value);
        v["provenance"] = fpt::to_string(ft->provenance);
        out["ft"] = std::move(v);
    } else {
        out["ft"] = nullptr;
    }
    nlohmann::json bs = nlohmann::json::array();
    for (const auto& rec : brackets) {
        bs.push_back({{"e", rec.e},
                      {"nu", std::to_string(rec.nu)},
                      {"ratio", {rec.ratio.get_num().get_str(), rec.ratio.get_den().get_str()}}});
    }
    out["brackets"] = std::move(bs);
    out["lct"] = lct ? rational_to_json(*lct) : nlohmann::json(nullptr);
    return out;
}

}  // namespace fptk::json_io
