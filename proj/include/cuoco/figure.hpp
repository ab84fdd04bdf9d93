#pragma once

#include "cuoco/circles.hpp"
#include "cuoco/configuration.hpp"
#include "cuoco/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cuoco {

enum class FigureKind {
    euclid_defect,  // triangle, altitude and the BC x BD rectangle
    cuoco,          // squares split by extended altitudes, R pair highlighted
    cuoco_pairs,    // all three equal-area classes colored
    cuoco_obtuse,   // panels overrunning their square highlighted
    incircle,
    circumcircle,
};

const char* name(FigureKind k);
std::optional<FigureKind> parse_figure_kind(std::string_view s);

struct FigureSpec {
    FigureKind kind{FigureKind::cuoco};
    int stroke_palette{0};
    int fill_palette{0};
    bool labels{true};
    /// Digits after the decimal point, 1..12.
    int precision{6};
    bool omit_degenerate{false};
};

using FigureData = std::variant<Triangle, CuocoDecomposition, IncircleData, CircumcircleData>;

/// The data alternative each kind renders from.
FigureData figure_data_for(FigureKind kind, const Triangle& t);

enum class FigureErrc { kind_mismatch, invalid_precision };

class FigureError : public std::runtime_error {
public:
    FigureError(FigureErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    FigureErrc code() const noexcept { return code_; }

private:
    FigureErrc code_;
};

/// Standalone SVG 1.1 document. Output depends only on the arguments.
std::string render(const FigureData& data, const FigureSpec& spec);

}  // namespace cuoco
