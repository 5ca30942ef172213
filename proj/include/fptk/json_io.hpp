#ifndef FPTK_JSON_IO_HPP
#define FPTK_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

#include "fptk/fpt.hpp"

namespace fptk::json_io {

nlohmann::json element_to_json(const gf::FieldElement& x);
nlohmann::json unipoly_to_json(const poly::UniPoly& f);

nlohmann::json rational_to_json(const mpq_class& q);

/// The CLI-facing result object: {"pattern", "crossRatio", "ft", "brackets", "lct"}.
nlohmann::json ft_result_to_json(const fpt::FormClass& cls,
                                 const std::optional<fpt::FptValue>& ft,
                                 const std::vector<fpt::NuRecord>& brackets,
                                 const std::optional<mpq_class>& lct);

}  // namespace fptk::json_io

#endif
