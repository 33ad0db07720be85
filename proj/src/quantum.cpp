#include "qsc/quantum.hpp"

#include <algorithm>
#include <functional>

#include "qsc/checked.hpp"

namespace qsc {

void QClass::add(int d, const std::vector<int>& elements, std::int64_t coeff) {
    if (coeff == 0) return;
    Key key{d, elements};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
}

std::int64_t QClass::coefficient(int d, const std::vector<int>& elements) const {
    auto it = terms.find(Key{d, elements});
    return it == terms.end() ? 0 : it->second;
}

QClass q_basis(const SchubertIndex& I) {
    QClass out(I.ctx);
    out.add(0, I.elements, 1);
    return out;
}

QClass q_from_coh(const CohClass& x, int d) {
    QClass out(x.ctx);
    for (const auto& [k, c] : x.terms) out.add(d, k, c);
    return out;
}

QClass q_add(const QClass& x, const QClass& y) {
    require_same_context(x.ctx, y.ctx);
    QClass out = x;
    for (const auto& [k, c] : y.terms) out.add(k.first, k.second, c);
    return out;
}

QClass q_scale(const QClass& x, std::int64_t c, int d_shift) {
    QClass out(x.ctx);
    for (const auto& [k, v] : x.terms) out.add(k.first + d_shift, k.second, checked_mul(v, c));
    return out;
}

CohClass classical_part(const QClass& x) {
    CohClass out(x.ctx);
    for (const auto& [k, c] : x.terms)
        if (k.first == 0) out.add(k.second, c);
    return out;
}

GWInstance::GWInstance(GrContext c, std::vector<SchubertIndex> idxs, int degree)
    : ctx(c), indices(std::move(idxs)), d(degree) {
    if (indices.size() < 3) throw std::invalid_argument("GWInstance: need s >= 3 classes");
    if (d < 0) throw std::invalid_argument("GWInstance: degree must be nonnegative");
    for (const auto& I : indices) require_same_context(ctx, I.ctx);
}

bool dimension_check(const GWInstance& inst) {
    long long total = 0;
    for (const auto& I : inst.indices) total += codim(I);
    return total == static_cast<long long>(inst.ctx.n) * inst.d + inst.ctx.dimension();
}

namespace {

// Partitions b with bounds lo_k <= b_k <= hi_k, weakly decreasing by
// construction of the bounds, and sum(b) = target.
void bounded_chains(const std::vector<int>& lo, const std::vector<int>& hi, int target,
                    const std::function<void(const std::vector<int>&)>& emit) {
    const int r = static_cast<int>(lo.size());
    std::vector<int> b(r);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == r) {
            if (remaining == 0) emit(b);
            return;
        }
        int top = std::min(hi[k], remaining);
        for (int v = lo[k]; v <= top; ++v) {
            b[k] = v;
            rec(k + 1, remaining - v);
        }
    };
    if (target < 0) return;
    rec(0, target);
}

}  // namespace

QClass qpieri(int a, const SchubertIndex& I) {
    const GrContext& ctx = I.ctx;
    if (a < 0 || a > ctx.box_width())
        throw std::invalid_argument("qpieri: need 0 <= a <= n-r");
    QClass out(ctx);

    // Classical terms.
    CohClass k_part = classical_pieri(a, I);
    for (const auto& [k, c] : k_part.terms) out.add(0, k, c);

    // q terms: a(I,1)-1 >= b_1 >= a(I,2)-1 >= ... >= a(I,r)-1 >= b_r >= 0 with
    // codim(b) = codim(I) + a - n.  Empty when the last row of I is empty.
    Partition lam = to_partition(I);
    const int r = ctx.r;
    std::vector<int> lo(r), hi(r);
    bool feasible = true;
    for (int k = 0; k < r; ++k) {
        hi[k] = lam.parts[k] - 1;
        lo[k] = (k + 1 < r) ? std::max(lam.parts[k + 1] - 1, 0) : 0;
        if (hi[k] < lo[k]) feasible = false;
    }
    if (feasible) {
        bounded_chains(lo, hi, codim(I) + a - ctx.n, [&](const std::vector<int>& b) {
            auto L = from_partition(ctx, Partition(b));
            if (L) out.add(1, L->elements, 1);
        });
    }
    return out;
}

QClass qpieri_apply(int a, const QClass& x) {
    QClass out(x.ctx);
    for (const auto& [key, c] : x.terms) {
        QClass p = qpieri(a, SchubertIndex(x.ctx, key.second));
        for (const auto& [pk, pc] : p.terms)
            out.add(pk.first + key.first, pk.second, checked_mul(pc, c));
    }
    return out;
}

QClass star_basis(const SchubertIndex& I, const SchubertIndex& J, int expand_left) {
    require_same_context(I.ctx, J.ctx);
    const GrContext& ctx = I.ctx;
    Partition li = to_partition(I), lj = to_partition(J);
    bool left;
    if (expand_left < 0)
        left = li.nonzero_count() < lj.nonzero_count() ||
               (li.nonzero_count() == lj.nonzero_count() && li.parts <= lj.parts);
    else
        left = expand_left != 0;
    const Partition& lam = left ? li : lj;
    const SchubertIndex& other = left ? J : I;

    QClass out(ctx);
    for (const auto& [word, c] : giambelli_expansion(ctx, lam)) {
        QClass acc = q_basis(other);
        for (int a : word) acc = qpieri_apply(a, acc);
        for (const auto& [k, v] : acc.terms)
            out.add(k.first, k.second, checked_mul(c, v));
    }
    return out;
}

QClass qmul(const QClass& x, const QClass& y) {
    require_same_context(x.ctx, y.ctx);
    QClass out(x.ctx);
    for (const auto& [xk, xc] : x.terms) {
        for (const auto& [yk, yc] : y.terms) {
            QClass p = star_basis(SchubertIndex(x.ctx, xk.second), SchubertIndex(y.ctx, yk.second));
            std::int64_t scale = checked_mul(xc, yc);
            for (const auto& [pk, pc] : p.terms)
                out.add(pk.first + xk.first + yk.first, pk.second, checked_mul(pc, scale));
        }
    }
    return out;
}

std::int64_t gw3(const SchubertIndex& I, const SchubertIndex& J, const SchubertIndex& K, int d) {
    require_same_context(I.ctx, J.ctx);
    require_same_context(I.ctx, K.ctx);
    if (d < 0) return 0;
    GWInstance inst(I.ctx, {I, J, K}, d);
    if (!dimension_check(inst)) return 0;
    QClass prod = star_basis(I, J);
    return prod.coefficient(d, dual(K).elements);
}

}  // namespace qsc
