#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace loggas {

using real = double;
using cplx = std::complex<double>;

inline constexpr real PI = 3.14159265358979323846264338327950288;
inline const cplx I_UNIT{0.0, 1.0};

// ---------------------------------------------------------------- errors

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct SingularityError : Error {
    using Error::Error;
};
struct SolverError : Error {
    using Error::Error;
};
struct CriticalityError : Error {
    using Error::Error;
};
struct PhaseError : Error {
    using Error::Error;
};
struct AccuracyError : Error {
    using Error::Error;
};
struct ContourError : Error {
    using Error::Error;
};
struct DependencyError : Error {
    using Error::Error;
};
struct TuningError : Error {
    using Error::Error;
};
struct AmbiguityError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------- domain

struct Segment {
    real lo = 0.0;
    real hi = 0.0;

    Segment() = default;
    Segment(real lo_, real hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw DomainError("segment endpoints must be finite with lo < hi");
    }
    real length() const { return hi - lo; }
    real mid() const { return 0.5 * (lo + hi); }
    bool contains(real x) const { return x >= lo && x <= hi; }
};

struct Domain {
    std::vector<Segment> segments;

    Domain() = default;
    explicit Domain(std::vector<Segment> segs) : segments(std::move(segs)) {
        if (segments.empty()) throw DomainError("domain needs at least one segment");
        for (std::size_t i = 1; i < segments.size(); ++i)
            if (!(segments[i - 1].hi < segments[i].lo))
                throw DomainError("domain segments must be disjoint and increasing");
    }
    std::size_t count() const { return segments.size(); }
    int genus() const { return static_cast<int>(segments.size()) - 1; }
    real lo() const { return segments.front().lo; }
    real hi() const { return segments.back().hi; }
    bool contains(real x) const {
        for (const auto& s : segments)
            if (s.contains(x)) return true;
        return false;
    }
    real distance(cplx z) const {
        real d = std::numeric_limits<real>::infinity();
        for (const auto& s : segments) {
            real xr = std::clamp(z.real(), s.lo, s.hi);
            d = std::min(d, std::abs(z - cplx(xr, 0.0)));
        }
        return d;
    }
};

// Compensated (Kahan-Neumaier) accumulator; keeps long log-domain sums
// accurate to a couple of ulps.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace loggas
