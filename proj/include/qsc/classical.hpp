#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qsc/grassmannian.hpp"

namespace qsc {

// Integer combination of Schubert classes of one Gr(r,n).  Keys are the
// index elements (all terms share ctx); zero coefficients are never stored,
// so map order doubles as the canonical lexicographic term order.
struct CohClass {
    GrContext ctx;
    std::map<std::vector<int>, std::int64_t> terms;

    explicit CohClass(GrContext c) : ctx(c) {}

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& elements, std::int64_t coeff);

    friend bool operator==(const CohClass&, const CohClass&) = default;
};

CohClass coh_basis(const SchubertIndex& I);
CohClass coh_add(const CohClass& x, const CohClass& y);
CohClass coh_scale(const CohClass& x, std::int64_t c);

// sigma_a * sigma(I) expanded by horizontal-strip interlacing; classes past
// the box vanish, so the result can be empty.
CohClass classical_pieri(int a, const SchubertIndex& I);

// Cup product, computed by expanding one factor through the Giambelli
// determinant recursion into special classes and folding classical_pieri.
CohClass cup(const CohClass& x, const CohClass& y);

// Coefficient of the point class.
std::int64_t integral(const CohClass& x);

// Littlewood-Richardson coefficient c^nu_{lambda,mu} by direct enumeration of
// LR skew tableaux (shape nu/lambda, content mu, lattice word).  Deliberately
// naive; production products never call it.  Oracle only.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// The Giambelli recursion, flattened: sigma(lambda) as an integer combination
// of products of special classes.  Each term is a weakly decreasing multiset
// of special parameters in 1..n-r.  Shared by the classical and quantum rings;
// both fold their own Pieri rule over it.
using SpecialWord = std::vector<int>;
std::vector<std::pair<SpecialWord, std::int64_t>> giambelli_expansion(const GrContext& ctx,
                                                                      const Partition& lambda);

}  // namespace qsc
