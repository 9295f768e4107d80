// Domain files, built-in domain flags, and table/SVG serialization.
#pragma once

#include "toric/capacities.hpp"
#include "toric/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Malformed domain input. The message names the line or field at fault.
class DomainParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DomainSpec {
    enum class Kind { polygon, ball, ellipsoid, polydisk };

    Kind kind = Kind::polygon;
    std::vector<Point> vertices;  // polygon only
    Scalar a;                     // radius for ball
    Scalar b = Scalar(1);
    std::optional<Scalar> scale;
    std::string label;
};

/// JSON forms:
///   {"vertices": [["0","0"], ["0","1"], ...]}
///   {"polydisk": {"a": "11/10", "b": "1"}}
///   {"ball": {"r": "1"}}
///   {"ellipsoid": {"a": "2"}} or {"ellipsoid": {"quad": {"a": "1/2", "b": "1/2", "d": 5}}}
/// plus optional "scale" and "label". Scalars are JSON integers or strings
/// such as "p/q", "1.1" or "1/2+1/2*sqrt(5)".
DomainSpec parse_domain_file(std::string_view bytes, const std::string& default_label = "domain");

DomainSpec load_domain_file(const std::string& path);

/// "a" or "a,b" as given to --polydisk / --ellipsoid; "r" for --ball.
DomainSpec builtin_domain(DomainSpec::Kind kind, std::string_view args);

/// Builds and validates the polygon, applying the scale.
MomentPolygon resolve(const DomainSpec& spec);

struct TableRow {
    std::string domain;
    EllBound ell = EllBound::infinite();
    std::vector<CapacityResult> cells;  // k = 1..k_max
};

enum class TableFormat { csv, markdown, json };

TableFormat parse_table_format(std::string_view name);

std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

std::string csv_quote(std::string_view field);

/// SVG outline of the polygon with axes and exact vertex labels; an optional
/// second polygon is drawn dashed on the same axes.
std::string render_svg(const MomentPolygon& omega, const std::string& label, const MomentPolygon* overlay = nullptr,
                       const std::string& overlay_label = {});

}  // namespace toric
