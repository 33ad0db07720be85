#pragma once

#include <string>

#include <json.hpp>

#include "qsc/classical.hpp"
#include "qsc/grassmannian.hpp"
#include "qsc/quantum.hpp"

namespace qsc {

using nlohmann::json;

json index_to_json(const SchubertIndex& I);
SchubertIndex index_from_json(const json& j);

json coh_to_json(const CohClass& x);
CohClass coh_from_json(const json& j);

json qclass_to_json(const QClass& x);
QClass qclass_from_json(const json& j);

// Canonical text form "n=4,r=2:{1,3}".
std::string index_to_text(const SchubertIndex& I);
SchubertIndex index_from_text(const std::string& text);

// Human-readable class rendering: partitions with zeros suppressed, terms in
// (q-degree, lex) order, e.g. "σ[2,2] + q·σ[]".
std::string render(const QClass& x);
std::string render(const CohClass& x);

}  // namespace qsc
