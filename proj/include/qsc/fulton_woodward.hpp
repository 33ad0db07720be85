#pragma once

#include <utility>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/grassmannian.hpp"

namespace qsc {

struct MinDegree {
    int d;
    std::pair<int, int> maximizer;  // the (i,j) with smallest i achieving d
};

// Smallest power of q in sigma(I)*sigma(J):
//   d = max{ count(I,i) + count(J,j) - r : i+j = n, 0 <= i,j <= n }.
// Including (0,n) and (n,0) makes d >= 0 automatic.
MinDegree min_q_degree(const SchubertIndex& I, const SchubertIndex& J);

// All (i,j) with i+j = n achieving the max, ascending in i.
std::vector<std::pair<int, int>> all_maximizers(const SchubertIndex& I, const SchubertIndex& J);

struct LowestTerm {
    int d;
    std::pair<int, int> maximizer;
    CohClass cls;  // cup of the two shifted classes; never zero
};

// q^d coefficient of the product: the ordinary cup product of the shifted
// classes at any maximizing pair.
LowestTerm lowest_term(const SchubertIndex& I, const SchubertIndex& J);

// Cross-check harness: the minimal degree formula against the actual star
// product, the lowest-order class against the product's q^d part, and
// independence of the maximizer choice.
bool verify_fw(const SchubertIndex& I, const SchubertIndex& J);

}  // namespace qsc
