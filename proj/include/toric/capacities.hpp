// The capacity engine: a pruned minimizer search for general moment polygons,
// closed forms for balls, polydisks, ellipsoids and long domains, and an
// experimental genus-refined variant.
#pragma once

#include "toric/geometry.hpp"
#include "toric/numeric.hpp"
#include "toric/words.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace toric {

enum class Method {
    oracle,
    pruned,
    ball_formula,
    polydisk_formula,
    long_domain_formula,
    ellipsoid_gh,
    ellipsoid_ms,
    e21_formula,
    conjectural_genus,
};

std::string_view to_string(Method m);

struct CapacityResult {
    Scalar value;
    std::optional<OrbitWord> witness;
    Method method = Method::pruned;
    int k = 1;
    EllBound ell = EllBound::infinite();
};

class NotLongDomain : public std::invalid_argument {
public:
    NotLongDomain() : std::invalid_argument("domain is not a long domain (needs max y = 1, (0,1) and (1,1) inside)") {}
};

/// Dispatches to a closed form when one applies, otherwise runs the pruned
/// search. Every path agrees with oracle_capacity.
CapacityResult capacity(const MomentPolygon& omega, int k, EllBound ell);

/// Minimizer search over nondecreasing degree partitions. Each part is served
/// by its per-index minimizer; when no choice of minimizers is weakly
/// permissible, one part is traded for (1, m-1) or (m-1, 1).
CapacityResult capacity_pruned(const MomentPolygon& omega, int k, EllBound ell);

/// Smallest j >= 0 with |(0,1)| + |(1,j)| < |(1,j+2)|.
struct JParameter {
    int value = 0;
};

JParameter compute_J(const MomentPolygon& omega);

CapacityResult capacity_long_domain(const MomentPolygon& omega, int k, EllBound ell);

/// Unit ball B^4(1).
Scalar capacity_ball(int k, EllBound ell);

/// P(a, 1) for a >= 1.
Scalar capacity_polydisk(const Scalar& a, int k, EllBound ell);

/// k-th smallest element, with repetition, of the positive multiples of a and b.
Scalar mk_sequence(const Scalar& a, const Scalar& b, int k);

/// E(a, 1) with l = 1.
Scalar capacity_ellipsoid_gh(const Scalar& a, int k);

/// E(a, 1) with l = infinity, a >= 1.
Scalar capacity_ellipsoid_ms(const Scalar& a, int k);

/// E(2, 1). Outside the solved ranges 2(l-1) < k <= 4(l-1) the pruned
/// search runs on the triangle and the result is tagged Method::pruned.
CapacityResult capacity_e21(int k, EllBound ell);

/// Opt-in token for experimental computations.
struct ExperimentalOptIn {
    bool enabled = false;
};

class ExperimentalRefused : public std::logic_error {
public:
    ExperimentalRefused() : std::logic_error("conjectural genus capacity requires an explicit experimental opt-in") {}
};

/// Minimum action over words whose index satisfies
/// sum(i+j) + q + g - 1 = k for some genus 0 <= g <= h.
/// Conjectural: no correctness claim beyond h = 0.
CapacityResult conjectural_genus_capacity(const MomentPolygon& omega, int k, EllBound ell, int h, ExperimentalOptIn opt_in);

/// Outward normals (1, alpha) of the boundary where the line y = 1/2 meets
/// the right-hand chain. A crossing through a vertex yields the two adjacent
/// edge slopes; an edge-interior crossing yields a single alpha.
struct HalfHeightNormal {
    bool edge_interior = true;
    Scalar alpha_low;
    Scalar alpha_high;
};

std::optional<HalfHeightNormal> half_height_normal(const MomentPolygon& omega);

/// Worker count for grid fills: TORIC_CAP_THREADS if set (0 = serial),
/// otherwise the hardware concurrency.
unsigned grid_workers();

/// capacity() over every (k, l) with 1 <= k <= k_max, l in ells. Results are
/// ordered l-major in the order of `ells`, then by k.
std::vector<CapacityResult> capacity_grid(const MomentPolygon& omega, int k_max, const std::vector<EllBound>& ells);

}  // namespace toric
