#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shintani {

enum class Errc {
    SingularMatrix,
    DegenerateQ,
    NotDense,
    InsufficientTruncation,
    AmbiguousB1,
    NotSmoothable,
    ScalingHitsEll,
    SearchExhausted,
    PrecisionCap,
    PoleHit,
    MissingClassData,
    InvalidInput,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace shintani
