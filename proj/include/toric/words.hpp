// Orbit words: multisets of lattice vectors, (k, l)-admissibility, streaming
// enumeration of admissible words and the exhaustive capacity oracle.
#pragma once

#include "toric/geometry.hpp"
#include "toric/numeric.hpp"

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Bound l on the number of positive ends: a positive integer or infinity.
class EllBound {
public:
    static EllBound finite(int value);
    static EllBound infinite() { return EllBound(); }
    /// "inf" or a positive integer.
    static EllBound parse(std::string_view text);

    bool is_infinite() const { return value_ == 0; }
    /// Requires !is_infinite().
    int value() const;
    /// Number of ends actually usable by a word of half-index k.
    int effective(int k) const;
    bool admits(int q) const { return is_infinite() || q <= value_; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

    friend bool operator==(const EllBound&, const EllBound&) = default;

private:
    EllBound() = default;
    explicit EllBound(int v) : value_(v) {}
    int value_ = 0;  // 0 encodes infinity
};

/// Canonical order on tuples inside a word: by (i + j, i, j).
bool canonical_less(LatticeVector a, LatticeVector b);

/// Multiset of nonzero lattice vectors kept in canonical nondecreasing order.
class OrbitWord {
public:
    OrbitWord() = default;
    OrbitWord(std::initializer_list<LatticeVector> tuples);
    explicit OrbitWord(std::vector<LatticeVector> tuples);

    const std::vector<LatticeVector>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    auto begin() const { return tuples_.begin(); }
    auto end() const { return tuples_.end(); }

    /// "{(0,1),(1,2)}"
    std::string to_string() const;

    friend bool operator==(const OrbitWord&, const OrbitWord&) = default;

private:
    std::vector<LatticeVector> tuples_;
};

/// Sum of (i + j) over the word plus the number of tuples minus one.
int half_index(const OrbitWord& w);

bool is_weakly_permissible(const OrbitWord& w);

bool is_admissible(const OrbitWord& w, int k, EllBound ell);

/// Total action: the sum of dual norms of the tuples.
Scalar action(const MomentPolygon& omega, const OrbitWord& w);

/// Index window for enumeration: exactly k, or every index in k..k+overshoot.
struct IndexWindow {
    int overshoot = 0;

    static IndexWindow exact() { return {}; }
    static IndexWindow at_least(int delta) { return {delta}; }
};

/// Streams every admissible word once, ordered by half-index, then by number
/// of tuples, then lexicographically in canonical tuple order. The word
/// passed to `visit` is only valid during the call.
void for_each_admissible(int k, EllBound ell, IndexWindow window, const std::function<void(const OrbitWord&)>& visit);

std::size_t count_admissible(int k, EllBound ell, IndexWindow window = IndexWindow::exact());

struct OracleResult {
    Scalar value;
    OrbitWord witness;
};

/// Exhaustive minimum of the action over admissible words. The witness is the
/// first minimizer in enumeration order.
OracleResult oracle_capacity(const MomentPolygon& omega, int k, EllBound ell, IndexWindow window = IndexWindow::exact());

}  // namespace toric
