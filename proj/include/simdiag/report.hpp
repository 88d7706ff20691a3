#pragma once

#include <string>

#include <json.hpp>

#include "simdiag/characters.hpp"
#include "simdiag/constructions.hpp"
#include "simdiag/diagonal.hpp"
#include "simdiag/widths.hpp"

namespace simdiag {

using Json = nlohmann::ordered_json;

Json info_json(const ConstructedGroup& cg);
Json widths_json(const EnumeratedGroup& g, const WidthReport& report);
std::string widths_csv(const EnumeratedGroup& g, const WidthReport& report);
Json covering_json(const EnumeratedGroup& g, const WidthReport& report);

Json orbdiam_json(const DiagonalGeometry& geom, const std::string& group_name,
                  const OrbdiamReport& report, const std::vector<BoundCertificate>& certs);
Json certificate_json(const EnumeratedGroup& g, const BoundCertificate& cert);

Json chartable_json(const std::string& group_name, const CharacterTable& table);
CharacterTable chartable_from_json(const EnumeratedGroup& g, const Json& j);

std::string render_table(const Json& j);  // plain-text fallback for the CLI

}  // namespace simdiag
