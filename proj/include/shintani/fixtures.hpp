// Built-in fields: real quadratic fields of discriminant 5, 8, 12, 13, 17 and the cubic of conductor 7.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shintani/numfield.hpp"

namespace shintani {

struct Fixture {
    std::string name;
    TotallyRealField field;
    // totally positive generators of the totally positive units
    UnitSystem units;
    std::optional<long> discriminant;
};

// "D5", "D8", "D12", "D13", "D17", "cubic7"
const std::vector<std::string>& fixture_names();
// Throws InvalidInput for an unknown name.
Fixture fixture(std::string_view name);

}  // namespace shintani
