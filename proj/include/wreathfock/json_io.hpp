#pragma once

#include "wreathfock/characters.hpp"
#include "wreathfock/correlators.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/series.hpp"
#include "wreathfock/wreath.hpp"

#include "json.hpp"

#include <string>

namespace wreathfock {

// Canonical JSON forms. Rationals are "p" / "p/q" strings, cyclotomics carry
// an explicit order, collections follow the canonical class order, so equal
// values always serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const Json& j);

Json to_json(const RatSeries& s);
RatSeries series_from_json(const Json& j);

Json to_json(const RatMultiSeries& s);
RatMultiSeries multiseries_from_json(const Json& j);

Json to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j);

Json to_json(const FockVector<Rational>& v);
FockVector<Rational> fock_vector_from_json(const Json& j);

Json to_json(const CharacterTable& t);
CharacterTable char_table_from_json(const Json& j);

Json to_json(const GradedStructureConstants& gc);

extern const int kCharTableCacheVersion;

}  // namespace wreathfock
