#pragma once

namespace anofol {

// A value together with a rigorous error radius: the true quantity lies in
// [value - error_radius, value + error_radius].
struct certified_value {
    double value = 0.0;
    double error_radius = 0.0;

    double upper_bound() const { return value + error_radius; }
    double lower_bound() const { return value - error_radius; }
};

}  // namespace anofol
