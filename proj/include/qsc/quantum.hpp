#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/grassmannian.hpp"

namespace qsc {

// Element of QH(Gr(r,n)): integer combination of q^d * sigma(I).  Keys are
// (d, index elements); map order is the canonical (q-degree, lex) term order.
struct QClass {
    using Key = std::pair<int, std::vector<int>>;

    GrContext ctx;
    std::map<Key, std::int64_t> terms;

    explicit QClass(GrContext c) : ctx(c) {}

    bool is_zero() const { return terms.empty(); }
    void add(int d, const std::vector<int>& elements, std::int64_t coeff);
    std::int64_t coefficient(int d, const std::vector<int>& elements) const;

    friend bool operator==(const QClass&, const QClass&) = default;
};

QClass q_basis(const SchubertIndex& I);
QClass q_from_coh(const CohClass& x, int d = 0);
QClass q_add(const QClass& x, const QClass& y);
QClass q_scale(const QClass& x, std::int64_t c, int d_shift = 0);

// Drop all q-degree >= 1 terms (the classical limit).
CohClass classical_part(const QClass& x);

// The data of an s-point invariant <sigma(I_1),...,sigma(I_s)>_d.
struct GWInstance {
    GrContext ctx;
    std::vector<SchubertIndex> indices;
    int d;

    GWInstance(GrContext c, std::vector<SchubertIndex> idxs, int degree);

    friend bool operator==(const GWInstance&, const GWInstance&) = default;
};

// sum of codimensions == n*d + r*(n-r)
bool dimension_check(const GWInstance& inst);

// sigma_a * sigma(I): classical interlacing terms plus q-linear terms.
QClass qpieri(int a, const SchubertIndex& I);

// qpieri extended q-linearly over a whole class.
QClass qpieri_apply(int a, const QClass& x);

// Product of two basis classes; exposed for tests of the evaluation order.
// expand_left: -1 = pick by the fewer-rows rule, 0/1 force a side.
QClass star_basis(const SchubertIndex& I, const SchubertIndex& J, int expand_left = -1);

// The star product, bilinear and q-linear.
QClass qmul(const QClass& x, const QClass& y);

// 3-point invariant: coefficient of (d, dual(K)) in sigma(I)*sigma(J);
// zero whenever the dimension condition fails.
std::int64_t gw3(const SchubertIndex& I, const SchubertIndex& J, const SchubertIndex& K, int d);

}  // namespace qsc
