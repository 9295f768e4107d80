#include "toric/obstructions.hpp"

#include <cmath>

namespace toric {

std::vector<Witness> find_witnesses(const MomentPolygon& source, const MomentPolygon& target, int k_max,
                                    const std::vector<EllBound>& ells)
{
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    const auto src = capacity_grid(source, k_max, ells);
    const auto tgt = capacity_grid(target, k_max, ells);
    std::vector<Witness> out;
    for (int k = 1; k <= k_max; ++k) {
        for (std::size_t e = 0; e < ells.size(); ++e) {
            const std::size_t c = e * static_cast<std::size_t>(k_max) + static_cast<std::size_t>(k - 1);
            if (tgt[c].value < src[c].value) out.push_back({k, ells[e], src[c].value, tgt[c].value});
        }
    }
    return out;
}

VolumeVerdict volume_obstruction(const MomentPolygon& source, const MomentPolygon& target)
{
    VolumeVerdict v{false, area(source), area(target)};
    v.obstructed = v.target_area < v.source_area;
    return v;
}

ObstructionReport obstruct(const MomentPolygon& source, const MomentPolygon& target, int k_max, const std::vector<EllBound>& ells)
{
    ObstructionReport r;
    r.witnesses = find_witnesses(source, target, k_max, ells);
    r.volume = volume_obstruction(source, target);
    r.stabilizes = !r.witnesses.empty();
    r.k_max = k_max;
    r.ells = ells;
    return r;
}

double CriticalScale::volume_bound_decimal() const { return std::sqrt(volume_bound_squared.to_double()); }

CriticalScale critical_scale(const MomentPolygon& source, const MomentPolygon& target, int k_max, const std::vector<EllBound>& ells)
{
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    if (ells.empty()) throw std::invalid_argument("the l set is empty");
    const auto src = capacity_grid(source, k_max, ells);
    const auto tgt = capacity_grid(target, k_max, ells);
    std::optional<CriticalScale> best;
    for (int k = 1; k <= k_max; ++k) {
        for (std::size_t e = 0; e < ells.size(); ++e) {
            const std::size_t c = e * static_cast<std::size_t>(k_max) + static_cast<std::size_t>(k - 1);
            Scalar ratio = tgt[c].value / src[c].value;
            if (!best || ratio < best->capacity_bound) best = CriticalScale{ratio, k, ells[e], Scalar(0)};
        }
    }
    best->volume_bound_squared = area(target) / area(source);
    return *best;
}

SharpVerdict sharp_family_check(const Scalar& a, const MomentPolygon& target, EllBound ell, int k_max)
{
    if (!is_long_domain(target)) throw NotLongDomain();
    for (long step : {10L, 100L}) {
        Scalar rung = a + Scalar::fraction(1, step);
        if (!find_witnesses(MomentPolygon::polydisk(rung, Scalar(1)), target, k_max, {ell}).empty()) return SharpVerdict{rung};
    }
    return SharpVerdict{};
}

}  // namespace toric
