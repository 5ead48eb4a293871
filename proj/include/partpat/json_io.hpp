#ifndef PARTPAT_JSON_IO_HPP
#define PARTPAT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "partpat/patterns.hpp"
#include "partpat/precursive.hpp"
#include "partpat/set_partition.hpp"

namespace partpat::io {

using nlohmann::json;

// Counts and coefficients travel as decimal strings so no reader is forced
// into machine-word arithmetic.

json partition_to_json(const SetPartition& pi);
SetPartition partition_from_json(const json& j);

json profile_to_json(const AvoidanceProfile& profile);
AvoidanceProfile profile_from_json(const json& j);

json recurrence_to_json(const PRecurrence& rec);
PRecurrence recurrence_from_json(const json& j);

json sequence_to_json(const std::vector<mpz_class>& values);
std::vector<mpz_class> sequence_from_json(const json& j);

// The fixed output envelope of the command-line tool.
json envelope(const std::string& command, json params, json result);

} // namespace partpat::io

#endif
