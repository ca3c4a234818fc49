#include "shintani/error.hpp"

namespace shintani {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegenerateQ: return "DegenerateQ";
    case Errc::NotDense: return "NotDense";
    case Errc::InsufficientTruncation: return "InsufficientTruncation";
    case Errc::AmbiguousB1: return "AmbiguousB1";
    case Errc::NotSmoothable: return "NotSmoothable";
    case Errc::ScalingHitsEll: return "ScalingHitsEll";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::PrecisionCap: return "PrecisionCap";
    case Errc::PoleHit: return "PoleHit";
    case Errc::MissingClassData: return "MissingClassData";
    case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace shintani
