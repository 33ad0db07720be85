#include "qsc/typea_bridge.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsc {

namespace {

void require_type_a(const RootSystem& rs) {
    if (rs.type_label != "A")
        throw std::invalid_argument("bridge: root system must have type A");
}

// Simple-root coordinates to coordinate-weight differences: the vector in
// Z^n (summing to zero) with v_j = c_j - c_{j-1}.
std::vector<int> coords_to_weight_vector(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size()) + 1;
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) {
        int cj = (j < n - 1) ? c[j] : 0;
        int cjm = (j > 0) ? c[j - 1] : 0;
        v[j] = cj - cjm;
    }
    return v;
}

}  // namespace

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i] - 1];
    return out;
}

Perm perm_inverse(const Perm& f) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[f[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

Perm subtract_perm(int n, int k) {
    Perm p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = (i - k - 1 + 2 * n) % n + 1;
    return p;
}

Perm subset_to_perm(const SchubertIndex& I) {
    const int n = I.ctx.n, r = I.ctx.r;
    std::vector<bool> in(n + 1, false);
    for (int i : I.elements) in[i] = true;
    Perm p;
    p.reserve(n);
    for (int i = 1; i <= n; ++i)
        if (!in[i]) p.push_back(i);
    for (int i : I.elements) p.push_back(i);
    if (static_cast<int>(p.size()) != n) throw std::logic_error("subset_to_perm: size mismatch");
    (void)r;
    return p;
}

SchubertIndex perm_to_subset(const GrContext& ctx, const Perm& p) {
    std::vector<int> elems(p.begin() + (ctx.n - ctx.r), p.end());
    std::sort(elems.begin(), elems.end());
    return SchubertIndex(ctx, std::move(elems));
}

WeylElement perm_to_weyl(const RootSystem& rs, const Perm& p) {
    require_type_a(rs);
    const int n = rs.rank + 1;
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("perm_to_weyl: permutation size must be rank+1");
    WeylElement w = WeylElement::identity(rs.rank);
    Perm cur = p;
    Perm id = perm_identity(n);
    while (!(cur == id)) {
        int i = 0;
        while (cur[i] < cur[i + 1]) ++i;
        std::swap(cur[i], cur[i + 1]);  // right-multiply by the transposition
        w = rs.simple_reflection[i] * w;
    }
    if (!(weyl_to_perm(rs, w) == p)) throw std::logic_error("perm_to_weyl: roundtrip failed");
    return w;
}

Perm weyl_to_perm(const RootSystem& rs, const WeylElement& w) {
    require_type_a(rs);
    const int n = rs.rank + 1;
    Perm p(n, 0);
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> e(rs.rank, 0);
        e[i] = 1;
        std::vector<int> v = coords_to_weight_vector(w.root_act.apply(e));
        int plus = -1, minus = -1;
        for (int j = 0; j < n; ++j) {
            if (v[j] == 1) plus = j + 1;
            else if (v[j] == -1) minus = j + 1;
            else if (v[j] != 0) throw std::logic_error("weyl_to_perm: image not a weight difference");
        }
        if (plus < 0 || minus < 0) throw std::logic_error("weyl_to_perm: malformed image");
        if (p[i] == 0) p[i] = plus;
        else if (p[i] != plus) throw std::logic_error("weyl_to_perm: inconsistent chain");
        p[i + 1] = minus;
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) throw std::logic_error("weyl_to_perm: not a permutation");
        seen[v] = true;
    }
    return p;
}

ParabolicChoice grassmann_parabolic(const RootSystem& rs, int r) {
    require_type_a(rs);
    if (r < 1 || r > rs.rank) throw std::invalid_argument("grassmann_parabolic: bad r");
    // Representatives carry the complement of I on the first n-r positions and
    // I on the last r, so the crossing node is n-r (0-based: rank - r).
    return ParabolicChoice::maximal(rs.rank, rs.rank - r);
}

CentralElement cyclic_center_element(const RootSystem& rs, int k) {
    require_type_a(rs);
    const int n = rs.rank + 1;
    int km = ((k % n) + n) % n;
    auto elems = center_elements(rs);
    if (km == 0) return elems[0];
    int node = n - km - 1;  // 0-based index of node n-k
    for (const auto& c : elems)
        if (c.node == node) return c;
    throw std::logic_error("cyclic_center_element: node not found");
}

}  // namespace qsc
