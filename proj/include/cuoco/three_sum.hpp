#pragma once

// x + y = L, x + z = M, y + z = N.
//
// Component convention: x is the unknown absent from the N equation, y the one
// absent from M, z the one absent from L. Each interpretation below records
// which geometric quantity each component stands for.

#include "cuoco/geometry.hpp"

#include <array>
#include <string>

namespace cuoco {

struct ThreeSum {
    double L{0}, M{0}, N{0};
};

struct Solution {
    double x{0}, y{0}, z{0};

    double min() const;
    bool operator==(const Solution&) const = default;
};

Solution solve(const ThreeSum& s);

/// Largest |equation residual| relative to max(|L|, |M|, |N|, 1).
double reconstruction_error(const ThreeSum& s, const Solution& sol);

/// Each of L, M, N strictly below the sum of the other two.
bool all_positive(const ThreeSum& s);

enum class Interpretation { squares, sides, angles };

const char* name(Interpretation i);

struct InterpretationReport {
    Interpretation kind{Interpretation::squares};
    ThreeSum system;
    Solution solution;
    /// Geometric quantities that should equal (x, y, z), measured independently.
    std::array<double, 3> geometric{};
    /// What x, y, z stand for in this interpretation.
    std::array<std::string, 3> mapping;
    double max_deviation{0};
    double tolerance{0};
    bool matches{false};
    bool all_positive{false};
    bool acute{false};
    /// squares / angles: all_positive == acute. sides: all_positive.
    bool positivity_consistent{false};
};

/// (L, M, N) = (a^2, b^2, c^2); solution = (R, T, S) rectangle areas.
InterpretationReport interpret_squares(const Triangle& t, double tol = 1e-9,
                                       double right_eps = kDefaultRightEps);

/// (L, M, N) = (a, b, c); solution = incircle tangent lengths at (C, B, A).
InterpretationReport interpret_sides(const Triangle& t, double tol = 1e-9);

/// (L, M, N) = (alpha, beta, gamma); solution = circumcenter angle splits
/// (pi/2 - gamma, pi/2 - beta, pi/2 - alpha).
InterpretationReport interpret_angles(const Triangle& t, double tol = 1e-9,
                                      double right_eps = kDefaultRightEps);

}  // namespace cuoco
