#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/quantum.hpp"

namespace qsc {

// Per-slot cyclic shifts n_1..n_s, each in 0..n, with sum a multiple of n
// (the composed center elements multiply to the identity).  The all-zero
// vector is the identity transformation.
struct ShiftVector {
    GrContext ctx;
    std::vector<int> shifts;

    ShiftVector(GrContext c, std::vector<int> sh);

    int total() const;

    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

// The center-shift operator: sigma(I) |-> q^{count} sigma(I-1), q-linear.
QClass T(const QClass& x);

// k-fold composition.  For k <= n this is q^{d_k} sigma(I-k); beyond that
// each full cycle contributes q^r.
QClass T_pow(const QClass& x, int k);

struct TransformResult {
    // Empty exactly when the shifted degree is negative, in which case the
    // source invariant (and the would-be target) vanish.
    std::optional<GWInstance> instance;
    long long raw_degree;  // d + (sum/n)*r - sum of counts, before the sign test
};

// Shift every slot: J_i = I_i - n_i, d' = d + (sum n_i / n) * r - sum d_i.
TransformResult transform_instance(const GWInstance& inst, const ShiftVector& sv);

enum class ReductionStatus { reduced, irreducible };

struct ReductionResult {
    ReductionStatus status;
    std::vector<ShiftVector> history;  // the shift vectors applied, in order
    GWInstance terminal;               // d == 0 on success, the stuck state otherwise
};

// Drive the degree to zero by repeated shifts with per-step total n, greedily
// maximizing the count sum (ties: lexicographically smallest vector).  When
// no single step strictly decreases the degree, a bounded breadth-first
// search over shift sequences runs before declaring the instance irreducible.
ReductionResult reduce_to_classical(const GWInstance& inst);

// s-point invariant through reduction to a classical intersection number.
// nullopt = "unreachable": an s > 3 instance this method cannot decide.
std::optional<std::int64_t> spoint_invariant(const GWInstance& inst);

}  // namespace qsc
