#include "qsc/classical.hpp"

#include <algorithm>
#include <functional>

#include "qsc/checked.hpp"

namespace qsc {

void CohClass::add(const std::vector<int>& elements, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms.find(elements);
    if (it == terms.end()) {
        terms.emplace(elements, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
}

CohClass coh_basis(const SchubertIndex& I) {
    CohClass out(I.ctx);
    out.add(I.elements, 1);
    return out;
}

CohClass coh_add(const CohClass& x, const CohClass& y) {
    require_same_context(x.ctx, y.ctx);
    CohClass out = x;
    for (const auto& [k, c] : y.terms) out.add(k, c);
    return out;
}

CohClass coh_scale(const CohClass& x, std::int64_t c) {
    CohClass out(x.ctx);
    for (const auto& [k, v] : x.terms) out.add(k, checked_mul(v, c));
    return out;
}

namespace {

// Partitions b interlacing below a: w >= b_1 >= a_1 >= b_2 >= ... >= b_r >= a_r
// with sum(b) = sum(a) + p.  The horizontal-strip condition of the Pieri rule.
void k_chains(const std::vector<int>& a, int w, int p,
              const std::function<void(const std::vector<int>&)>& emit) {
    const int r = static_cast<int>(a.size());
    std::vector<int> b(r);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == r) {
            if (remaining == 0) emit(b);
            return;
        }
        int lo = a[k];
        int hi = std::min((k == 0) ? w : a[k - 1], lo + remaining);
        for (int v = lo; v <= hi; ++v) {
            b[k] = v;
            rec(k + 1, remaining - (v - lo));
        }
    };
    rec(0, p);
}

}  // namespace

CohClass classical_pieri(int a, const SchubertIndex& I) {
    const GrContext& ctx = I.ctx;
    if (a < 0 || a > ctx.box_width())
        throw std::invalid_argument("classical_pieri: need 0 <= a <= n-r");
    CohClass out(ctx);
    Partition lam = to_partition(I);
    k_chains(lam.parts, ctx.box_width(), a, [&](const std::vector<int>& b) {
        auto K = from_partition(ctx, Partition(b));
        if (K) out.add(K->elements, 1);
    });
    return out;
}

std::vector<std::pair<SpecialWord, std::int64_t>> giambelli_expansion(const GrContext& ctx,
                                                                      const Partition& lambda) {
    using Expansion = std::map<SpecialWord, std::int64_t>;
    std::map<std::vector<int>, Expansion> memo;

    std::function<const Expansion&(const std::vector<int>&)> expand =
        [&](const std::vector<int>& parts) -> const Expansion& {
        auto it = memo.find(parts);
        if (it != memo.end()) return it->second;
        Expansion exp;
        const int d = static_cast<int>(parts.size());
        if (d == 0) {
            exp[{}] = 1;
        } else if (d == 1) {
            if (parts[0] <= ctx.box_width()) exp[{parts[0]}] = 1;
        } else {
            // Column expansion of the Giambelli determinant:
            //   sigma(a_1..a_d) = sum_j (-1)^(d-j)
            //       sigma(a_1,..,a_{j-1},a_{j+1}-1,..,a_d-1) * sigma_{a_j+d-j}
            // Special parameters past the box kill the term.
            for (int j = 1; j <= d; ++j) {
                int m = parts[j - 1] + d - j;
                if (m > ctx.box_width()) continue;
                std::vector<int> rest;
                rest.reserve(d - 1);
                for (int k = 1; k <= d; ++k) {
                    if (k == j) continue;
                    rest.push_back(k < j ? parts[k - 1] : parts[k - 1] - 1);
                }
                while (!rest.empty() && rest.back() == 0) rest.pop_back();
                std::int64_t sign = ((d - j) % 2 == 0) ? 1 : -1;
                for (const auto& [word, c] : expand(rest)) {
                    SpecialWord w = word;
                    w.insert(std::upper_bound(w.begin(), w.end(), m, std::greater<int>()), m);
                    std::int64_t& slot = exp[w];
                    slot = checked_add(slot, checked_mul(sign, c));
                    if (slot == 0) exp.erase(w);
                }
            }
        }
        return memo.emplace(parts, std::move(exp)).first->second;
    };

    const Expansion& top = expand(lambda.stripped());
    return {top.begin(), top.end()};
}

CohClass cup(const CohClass& x, const CohClass& y) {
    require_same_context(x.ctx, y.ctx);
    const GrContext& ctx = x.ctx;
    CohClass out(ctx);
    for (const auto& [xi, xc] : x.terms) {
        for (const auto& [yi, yc] : y.terms) {
            SchubertIndex I(ctx, xi), J(ctx, yi);
            Partition li = to_partition(I), lj = to_partition(J);
            // Expand the factor with fewer rows; ties go to the
            // lexicographically smaller partition.
            bool expand_left = li.nonzero_count() < lj.nonzero_count() ||
                               (li.nonzero_count() == lj.nonzero_count() && li.parts <= lj.parts);
            const Partition& lam = expand_left ? li : lj;
            const SchubertIndex& other = expand_left ? J : I;
            std::int64_t scale = checked_mul(xc, yc);
            for (const auto& [word, c] : giambelli_expansion(ctx, lam)) {
                CohClass acc = coh_basis(other);
                for (int a : word) {
                    CohClass next(ctx);
                    for (const auto& [k, v] : acc.terms) {
                        CohClass p = classical_pieri(a, SchubertIndex(ctx, k));
                        for (const auto& [pk, pv] : p.terms) next.add(pk, checked_mul(pv, v));
                    }
                    acc = std::move(next);
                }
                for (const auto& [k, v] : acc.terms)
                    out.add(k, checked_mul(checked_mul(c, scale), v));
            }
        }
    }
    return out;
}

std::int64_t integral(const CohClass& x) {
    std::vector<int> point(x.ctx.r);
    for (int k = 0; k < x.ctx.r; ++k) point[k] = k + 1;
    auto it = x.terms.find(point);
    return it == x.terms.end() ? 0 : it->second;
}

namespace {

struct SkewCell {
    int row;
    int col;
};

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    std::vector<int> lam = lambda.stripped(), m = mu.stripped(), n = nu.stripped();
    if (lam.size() > n.size()) return 0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] > n[i]) return 0;
    int lam_sum = 0, mu_sum = 0, nu_sum = 0;
    for (int v : lam) lam_sum += v;
    for (int v : m) mu_sum += v;
    for (int v : n) nu_sum += v;
    if (lam_sum + mu_sum != nu_sum) return 0;
    if (mu_sum == 0) return 1;  // nu == lambda forced by the sum check

    const int rows = static_cast<int>(n.size());
    const int values = static_cast<int>(m.size());
    // Cells of nu/lambda in reading order: rows top to bottom, right to left.
    std::vector<SkewCell> cells;
    for (int i = 0; i < rows; ++i) {
        int lo = (i < static_cast<int>(lam.size())) ? lam[i] : 0;
        for (int j = n[i] - 1; j >= lo; --j) cells.push_back({i, j});
    }
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(n[i], 0);
    std::vector<int> used(values + 1, 0);
    std::int64_t count = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == cells.size()) {
            count = checked_add(count, 1);
            return;
        }
        auto [i, j] = cells[pos];
        int lo = 1, hi = values;
        if (i > 0 && j < static_cast<int>(fill[i - 1].size()) && fill[i - 1][j] > 0)
            lo = std::max(lo, fill[i - 1][j] + 1);  // column strict
        if (j + 1 < n[i] && fill[i][j + 1] > 0)
            hi = std::min(hi, fill[i][j + 1]);  // row weakly increasing, filled right first
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= m[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word prefix
            fill[i][j] = v;
            ++used[v];
            rec(pos + 1);
            --used[v];
            fill[i][j] = 0;
        }
    };
    rec(0);
    return count;
}

}  // namespace qsc
