#include "qsc/fulton_woodward.hpp"

#include <limits>

#include "qsc/quantum.hpp"

namespace qsc {

namespace {

int count_le(const SchubertIndex& I, int k) {
    int c = 0;
    for (int i : I.elements)
        if (i <= k) ++c;
    return c;
}

}  // namespace

MinDegree min_q_degree(const SchubertIndex& I, const SchubertIndex& J) {
    require_same_context(I.ctx, J.ctx);
    const int n = I.ctx.n, r = I.ctx.r;
    int best = std::numeric_limits<int>::min();
    std::pair<int, int> arg{0, n};
    for (int i = 0; i <= n; ++i) {
        int v = count_le(I, i) + count_le(J, n - i) - r;
        if (v > best) {
            best = v;
            arg = {i, n - i};
        }
    }
    return MinDegree{best, arg};
}

std::vector<std::pair<int, int>> all_maximizers(const SchubertIndex& I, const SchubertIndex& J) {
    MinDegree m = min_q_degree(I, J);
    const int n = I.ctx.n, r = I.ctx.r;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= n; ++i)
        if (count_le(I, i) + count_le(J, n - i) - r == m.d) out.emplace_back(i, n - i);
    return out;
}

LowestTerm lowest_term(const SchubertIndex& I, const SchubertIndex& J) {
    MinDegree m = min_q_degree(I, J);
    auto [i, j] = m.maximizer;
    CohClass c = cup(coh_basis(shift(I, i).index), coh_basis(shift(J, j).index));
    return LowestTerm{m.d, m.maximizer, std::move(c)};
}

bool verify_fw(const SchubertIndex& I, const SchubertIndex& J) {
    require_same_context(I.ctx, J.ctx);
    QClass prod = star_basis(I, J);
    if (prod.is_zero()) return false;  // products of basis classes never vanish
    int min_observed = prod.terms.begin()->first.first;  // terms sorted by (d, index)
    MinDegree m = min_q_degree(I, J);
    if (min_observed != m.d) return false;

    CohClass qd_part(I.ctx);
    for (const auto& [k, c] : prod.terms)
        if (k.first == m.d) qd_part.add(k.second, c);

    for (auto [i, j] : all_maximizers(I, J)) {
        CohClass c = cup(coh_basis(shift(I, i).index), coh_basis(shift(J, j).index));
        if (c.is_zero()) return false;
        if (!(c == qd_part)) return false;
    }
    return true;
}

}  // namespace qsc
