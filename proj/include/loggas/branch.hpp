#pragma once

#include "loggas/common.hpp"

namespace loggas {

// sqrt((x-lo)(x-hi)) with branch cut exactly on [lo,hi]; behaves like +x at
// +infinity and is continuous elsewhere (product of principal square roots).
inline cplx cut_sqrt(const Segment& s, cplx x) {
    return std::sqrt(x - cplx(s.lo)) * std::sqrt(x - cplx(s.hi));
}

// Boundary value of cut_sqrt approached from the upper half plane at a point
// inside (lo,hi): +i sqrt((x-lo)(hi-x)).
inline cplx cut_sqrt_upper(const Segment& s, real x) {
    return cplx(0.0, std::sqrt((x - s.lo) * (s.hi - x)));
}

}  // namespace loggas
