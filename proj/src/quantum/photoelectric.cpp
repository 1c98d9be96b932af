#include "openph/quantum/photoelectric.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace openph::quantum {

namespace {

std::string threshold_message(double f, double f0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "no electrons are emitted below the threshold frequency (f = %.6g Hz < f0 = "
                  "%.6g Hz)",
                  f, f0);
    return buf;
}

}  // namespace

BelowThreshold::BelowThreshold(double f, double f0)
    : std::domain_error(threshold_message(f, f0)) {}

namespace {

void check(const PhotoelectricInput& inp, const PhysicalConstants& consts) {
    inp.validate();
    consts.validate();
    if (inp.f < inp.f0) throw BelowThreshold(inp.f, inp.f0);
}

}  // namespace

double max_kinetic_energy(const PhotoelectricInput& inp, const PhysicalConstants& consts) {
    check(inp, consts);
    return consts.h * (inp.f - inp.f0);
}

double max_speed(const PhotoelectricInput& inp, const PhysicalConstants& consts) {
    return std::sqrt(2.0 * max_kinetic_energy(inp, consts) / consts.m_e);
}

double stopping_voltage(const PhotoelectricInput& inp, const PhysicalConstants& consts) {
    return max_kinetic_energy(inp, consts) / consts.e;
}

}  // namespace openph::quantum
