#include "qsc/grassmannian.hpp"

#include <algorithm>

namespace qsc {

void require_same_context(const GrContext& a, const GrContext& b) {
    if (!(a == b))
        throw std::invalid_argument("context mismatch: operands from different Gr(r,n)");
}

int codim(const SchubertIndex& I) {
    int count = 0;
    std::vector<bool> in(I.ctx.n + 1, false);
    for (int i : I.elements) in[i] = true;
    for (int j = 1; j <= I.ctx.n; ++j) {
        if (in[j]) continue;
        for (int i : I.elements)
            if (j > i) ++count;
    }
    return count;
}

Partition to_partition(const SchubertIndex& I) {
    const int n = I.ctx.n, r = I.ctx.r;
    std::vector<int> parts(r);
    for (int k = 1; k <= r; ++k) parts[k - 1] = n - r + k - I.elements[k - 1];
    return Partition(std::move(parts));
}

std::optional<SchubertIndex> from_partition(const GrContext& ctx, const Partition& lambda) {
    const int n = ctx.n, r = ctx.r;
    // More than r nonzero rows never fits the box.
    for (std::size_t k = r; k < lambda.parts.size(); ++k)
        if (lambda.parts[k] != 0) return std::nullopt;
    std::vector<int> elems(r);
    for (int k = 1; k <= r; ++k) {
        int a = (k <= static_cast<int>(lambda.parts.size())) ? lambda.parts[k - 1] : 0;
        int i = n - r + k - a;
        if (i < 1 || i > n) return std::nullopt;
        elems[k - 1] = i;
    }
    for (int k = 1; k < r; ++k)
        if (elems[k - 1] >= elems[k]) return std::nullopt;
    return SchubertIndex(ctx, std::move(elems));
}

ShiftResult shift(const SchubertIndex& I, int k) {
    const int n = I.ctx.n;
    if (k < 0 || k > n) throw std::invalid_argument("shift: need 0 <= k <= n");
    std::vector<int> moved;
    moved.reserve(I.elements.size());
    int count = 0;
    for (int i : I.elements) {
        moved.push_back((i - k - 1 + 2 * n) % n + 1);
        if (i <= k) ++count;
    }
    std::sort(moved.begin(), moved.end());
    return ShiftResult{SchubertIndex(I.ctx, std::move(moved)), count};
}

SchubertIndex dual(const SchubertIndex& I) {
    std::vector<int> elems;
    elems.reserve(I.elements.size());
    for (int i : I.elements) elems.push_back(I.ctx.n + 1 - i);
    std::sort(elems.begin(), elems.end());
    return SchubertIndex(I.ctx, std::move(elems));
}

SchubertIndex special_index(const GrContext& ctx, int a) {
    if (a < 0 || a > ctx.box_width())
        throw std::invalid_argument("special_index: need 0 <= a <= n-r");
    std::vector<int> parts(ctx.r, 0);
    parts[0] = a;
    auto idx = from_partition(ctx, Partition(std::move(parts)));
    return *idx;  // one-row partitions within the box always fit
}

SchubertIndex fundamental_index(const GrContext& ctx) {
    std::vector<int> elems(ctx.r);
    for (int k = 0; k < ctx.r; ++k) elems[k] = ctx.n - ctx.r + k + 1;
    return SchubertIndex(ctx, std::move(elems));
}

SchubertIndex point_index(const GrContext& ctx) {
    std::vector<int> elems(ctx.r);
    for (int k = 0; k < ctx.r; ++k) elems[k] = k + 1;
    return SchubertIndex(ctx, std::move(elems));
}

std::vector<SchubertIndex> all_indices(const GrContext& ctx) {
    std::vector<SchubertIndex> out;
    std::vector<int> cur(ctx.r);
    for (int k = 0; k < ctx.r; ++k) cur[k] = k + 1;
    for (;;) {
        out.emplace_back(ctx, cur);
        int k = ctx.r - 1;
        while (k >= 0 && cur[k] == ctx.n - (ctx.r - 1 - k)) --k;
        if (k < 0) break;
        ++cur[k];
        for (int m = k + 1; m < ctx.r; ++m) cur[m] = cur[m - 1] + 1;
    }
    return out;
}

}  // namespace qsc
