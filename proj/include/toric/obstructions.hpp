// Embedding obstructions from capacity comparisons and area.
#pragma once

#include "toric/capacities.hpp"

#include <optional>
#include <vector>

namespace toric {

/// A grid cell where the source capacity exceeds the target capacity.
struct Witness {
    int k = 1;
    EllBound ell = EllBound::infinite();
    Scalar source_value;
    Scalar target_value;
};

/// Every (k, l) with k <= k_max and l in ells where capacity(source) >
/// capacity(target), ordered by k, then by position in `ells`. An empty list
/// only means no obstruction was found at this resolution.
std::vector<Witness> find_witnesses(const MomentPolygon& source, const MomentPolygon& target, int k_max,
                                    const std::vector<EllBound>& ells);

struct VolumeVerdict {
    bool obstructed = false;
    Scalar source_area;
    Scalar target_area;
};

VolumeVerdict volume_obstruction(const MomentPolygon& source, const MomentPolygon& target);

struct ObstructionReport {
    std::vector<Witness> witnesses;
    VolumeVerdict volume;
    /// Capacity witnesses survive stabilization by a large ball factor;
    /// the volume verdict does not.
    bool stabilizes = false;
    int k_max = 1;
    std::vector<EllBound> ells;
};

ObstructionReport obstruct(const MomentPolygon& source, const MomentPolygon& target, int k_max, const std::vector<EllBound>& ells);

struct CriticalScale {
    /// min over the grid of capacity(target) / capacity(source)
    Scalar capacity_bound;
    int k = 1;
    EllBound ell = EllBound::infinite();
    /// area(target) / area(source), an upper bound for the squared scale
    Scalar volume_bound_squared;

    double volume_bound_decimal() const;
};

CriticalScale critical_scale(const MomentPolygon& source, const MomentPolygon& target, int k_max, const std::vector<EllBound>& ells);

struct SharpVerdict {
    /// first a' on the ladder a + 1/10, a + 1/100 for which P(a',1) is obstructed
    std::optional<Scalar> obstructed_at;

    bool obstructed() const { return obstructed_at.has_value(); }
};

/// Probes P(a', 1) -> target for a' slightly above a. Target must be long.
SharpVerdict sharp_family_check(const Scalar& a, const MomentPolygon& target, EllBound ell, int k_max);

}  // namespace toric
