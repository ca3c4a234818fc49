#include "shintani/fixtures.hpp"

#include "shintani/error.hpp"

namespace shintani {

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names{"D5", "D8", "D12", "D13", "D17", "cubic7"};
    return names;
}

Fixture fixture(std::string_view name)
{
    struct Quad {
        std::string_view name;
        long disc;
        IntVector minpoly;
    };
    // O = Z[theta] in every case
    static const std::vector<Quad> quads{
        {"D5", 5, {-1, -1, 1}}, {"D8", 8, {-2, 0, 1}}, {"D12", 12, {-3, 0, 1}},
        {"D13", 13, {-3, -1, 1}}, {"D17", 17, {-4, -1, 1}},
    };
    for (const auto& q : quads)
        if (q.name == name) {
            TotallyRealField f(q.minpoly);
            return {std::string(name), f, UnitSystem{{fundamental_unit_quadratic(f)}}, q.disc};
        }
    if (name == "cubic7") {
        TotallyRealField f(IntVector{-1, -2, 1, 1});
        const FieldElem t = f.gen(), s = f.gen() + f.one();
        // theta and 1 + theta generate the units up to sign and all sign patterns occur
        return {"cubic7", f, UnitSystem{{t * t, s * s}}, std::nullopt};
    }
    fail(Errc::InvalidInput, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace shintani
