#pragma once

// Text forms accepted on the command line:
//   objects       "L2 + 2*L3", "0", or {"p": 5, "mult": [...]}
//   Jordan types  "J2 + J5", "3*J1", or {"p": 5, "blocks": [...]}
//   partitions    "3,2,1", "(3,2,1)", "[3,2,1]"

#include <string>

#include "verlinde/fusion.hpp"
#include "verlinde/modrep.hpp"
#include "verlinde/partitions.hpp"

namespace verlinde {

/// JSON input must agree with p.
VerObject parse_ver_object(int p, const std::string& text);
JordanType parse_jordan_type(int p, const std::string& text);
Partition parse_partition(const std::string& text);

}  // namespace verlinde
