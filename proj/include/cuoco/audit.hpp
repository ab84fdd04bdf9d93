#pragma once

// Randomized verification of every identity the library constructs. Shared by
// the `fuzz` subcommand and the acceptance suite.

#include "cuoco/geometry.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cuoco {

/// Uniform coordinates in [-range, range], rejecting triangles whose
/// twice-area falls below `min_shape` times the longest side squared.
/// The stream depends only on the seed (raw mt19937_64 words, no std
/// distributions).
class TriangleSampler {
public:
    explicit TriangleSampler(std::uint64_t seed, double range = 10.0, double min_shape = 1e-3);

    Triangle next();
    double uniform(double lo, double hi);
    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
    double range_;
    double min_shape_;
};

struct AuditOptions {
    double tol{1e-9};
    /// Triangles with |cos| of some angle within this band are treated as
    /// right and left out of the acute-iff checks.
    double right_band{1e-9};
};

struct CheckValue {
    std::string name;
    double value{0};
    double threshold{0};
    bool pass{true};
};

/// One entry per named check, in a fixed order.
std::vector<CheckValue> audit_triangle(const Triangle& t, const AuditOptions& opt = {});

struct CheckSummary {
    std::string name;
    double max_value{0};
    double threshold{0};
    std::size_t failures{0};
};

struct FuzzSummary {
    std::size_t count{0};
    std::uint64_t seed{0};
    std::size_t obtuse{0};
    std::size_t acute{0};
    std::size_t right{0};
    std::vector<CheckSummary> checks;
    /// Lowest failing index, if any.
    std::optional<std::size_t> first_failure;
    std::optional<Triangle> counterexample;
    std::vector<std::string> counterexample_checks;

    bool pass() const { return !first_failure.has_value(); }
};

/// Samples `count` triangles from `seed` and audits them on `threads` workers
/// (0 = hardware concurrency). Result is independent of the thread count.
FuzzSummary run_fuzz(std::size_t count, std::uint64_t seed, const AuditOptions& opt = {}, unsigned threads = 0);

}  // namespace cuoco
