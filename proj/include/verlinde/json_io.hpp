#pragma once

// JSON encodings for every value the CLI prints. Each to_json has a matching
// parser; parsers throw InvalidArgument on malformed input.

#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/dimensions.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/modrep.hpp"
#include "verlinde/partitions.hpp"

namespace verlinde {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);

Json to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);

Json to_json(const VerObject& x);
VerObject ver_object_from_json(const Json& j);

Json to_json(const VerPair& x);
VerPair ver_pair_from_json(const Json& j);

/// {"p", "terms": [{"i", "j", "character", "mult"}]}
Json to_json(const EnhancedObject& x);
EnhancedObject enhanced_from_json(const Json& j);

Json to_json(const JordanType& t);
JordanType jordan_type_from_json(const Json& j);

Json to_json(const CyclicRep& v);
CyclicRep cyclic_rep_from_json(const Json& j);

/// {"p", "vertices", "edges": [{"from", "to", "weight"}]}
Json to_json(const McKayGraph& g);
McKayGraph mckay_from_json(const Json& j);

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);
Json to_json(const std::vector<Partition>& chain);
std::vector<Partition> chain_from_json(const Json& j);
Json to_json(const BoxPos& b);

Json to_json(const PadicDim& d);
PadicDim padic_from_json(const Json& j);
Json to_json(const JordanContent& c);
JordanContent content_from_json(const Json& j);

/// Parses text, mapping parse errors to InvalidArgument.
Json parse_json_text(const std::string& text);

}  // namespace verlinde
