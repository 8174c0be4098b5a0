#pragma once

#include <nlohmann/json.hpp>

#include "mrsc/broadcast.hpp"

namespace mrsc {

// All loaders throw InputError on malformed or inconsistent documents, never
// nlohmann exceptions. Element values travel as plain integers.

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const nlohmann::json& j);

// A code is its generator matrix plus an explicit length field.
nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const MrscCertificate& c);
MrscCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json p2p_scheme_to_json(const P2PScheme& s);
P2PScheme p2p_scheme_from_json(const nlohmann::json& j);

nlohmann::json broadcast_scheme_to_json(const BroadcastScheme& s);
BroadcastScheme broadcast_scheme_from_json(const nlohmann::json& j);

} // namespace mrsc
