#pragma once

// JSON forms of the library's value types (nlohmann::json ADL hooks).

#include <json.hpp>

#include "b3img/grouporacle.hpp"
#include "b3img/qgallery.hpp"
#include "b3img/verdict.hpp"

namespace b3img {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const RootOfUnity& z);
void from_json(const Json& j, RootOfUnity& z);

/// {"conductor": N, "coords": ["p/q", ...]}
Json cyc_number_to_json(const CycNumber& c);
CycNumber cyc_number_from_json(const Json& j);

/// {"conductor": N, "dim": d, "entries": [[coords...] ...]} with coordinate strings per entry.
Json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

void to_json(Json& j, const EigenSpec& spec);
void from_json(const Json& j, EigenSpec& spec);

void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);

void to_json(Json& j, const ClosureResult& r);
void from_json(const Json& j, ClosureResult& r);

void to_json(Json& j, const RecordedExpectation& e);
void to_json(Json& j, const ReproductionReport& r);

}  // namespace b3img
