#pragma once
#include <optional>
#include <string>
#include <vector>

#include "tensorsq/abelian.hpp"

namespace tensorsq {

// Stored expected values for named groups. A record carries only the
// invariants whose values are pinned for that group; absent fields are not
// checked against computed results. Records with computable=false describe
// groups whose tensor presentation exceeds the desk caps; they can be looked
// up but not recomputed here.
struct ExpectedRecord {
  std::string name;
  std::optional<AbelianInvariants> pi3;
  std::optional<AbelianInvariants> pi2s;
  std::optional<AbelianInvariants> h2;
  bool computable = true;
  std::string note;
};

const std::vector<ExpectedRecord>& catalog_entries();

// nullptr when the name has no entry
const ExpectedRecord* catalog_find(const std::string& name);

// throws group_error when the name has no entry
ExpectedRecord catalog_lookup(const std::string& name);

}  // namespace tensorsq
