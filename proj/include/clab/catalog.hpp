#pragma once

// Built-in knot catalog with a load-time self-test.

#include <string>
#include <vector>

#include "clab/infection.hpp"

namespace clab {

struct CatalogEntry {
    std::string name;
    KnotDescriptor descriptor;
    std::string note;
};

// Entries in a fixed order; the first call verifies every entry's
// expected invariant table and throws on any mismatch.
const std::vector<CatalogEntry>& catalog();

// nullptr when the name is unknown
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace clab
