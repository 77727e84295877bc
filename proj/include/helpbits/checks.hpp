#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace helpbits {

// One verified inequality or identity: the bound value, the measured value,
// and the slack left. `asserted` marks checks whose preconditions held, as
// opposed to checks reported for information only.
struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double measured = 0.0;
    bool pass = false;
    bool asserted = true;
    double margin = 0.0;  // slack toward the bound; negative means violated
};

inline BoundCheck check_upper(std::string name, double measured, double bound,
                              double tol = 1e-9, bool asserted = true) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = bound;
    c.measured = measured;
    c.margin = bound - measured;
    c.pass = measured <= bound + tol;
    c.asserted = asserted;
    return c;
}

inline BoundCheck check_lower(std::string name, double measured, double bound,
                              double tol = 1e-9, bool asserted = true) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = bound;
    c.measured = measured;
    c.margin = measured - bound;
    c.pass = measured >= bound - tol;
    c.asserted = asserted;
    return c;
}

inline BoundCheck check_equal(std::string name, double measured, double expected,
                              double tol = 1e-9, bool asserted = true) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = expected;
    c.measured = measured;
    c.margin = tol - std::abs(measured - expected);
    c.pass = std::abs(measured - expected) <= tol;
    c.asserted = asserted;
    return c;
}

inline bool all_pass(const std::vector<BoundCheck>& checks) {
    for (const auto& c : checks)
        if (c.asserted && !c.pass) return false;
    return true;
}

}  // namespace helpbits
