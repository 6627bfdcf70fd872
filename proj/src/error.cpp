#include "rcft/error.hpp"

namespace rcft {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::precondition: return "precondition";
        case Errc::division_by_zero: return "division-by-zero";
        case Errc::order_limit: return "order-limit";
        case Errc::not_coprime: return "not-coprime";
        case Errc::non_integral_fusion: return "non-integral-fusion";
        case Errc::zero_vacuum_row: return "zero-vacuum-row";
        case Errc::no_match: return "no-match";
        case Errc::ambiguous_match: return "ambiguous-match";
        case Errc::galois_closure: return "galois-closure-failure";
        case Errc::data_integrity: return "data-integrity";
        case Errc::cap_exceeded: return "cap-exceeded";
        case Errc::parse: return "parse";
    }
    return "unknown";
}

}  // namespace rcft
