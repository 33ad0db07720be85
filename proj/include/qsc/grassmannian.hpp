#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsc {

// Gr(r,n): rank-r subspaces of an n-dimensional space.
struct GrContext {
    int n;
    int r;

    GrContext(int n_, int r_) : n(n_), r(r_) {
        if (!(0 < r && r < n))
            throw std::invalid_argument("GrContext: need 0 < r < n");
    }

    int box_width() const { return n - r; }      // columns of the r x (n-r) box
    int dimension() const { return r * (n - r); }

    friend bool operator==(const GrContext&, const GrContext&) = default;
};

// Weakly decreasing nonnegative parts.  Validity relative to the r x (n-r)
// box is contextual and checked where it matters.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
            if (parts[k] < parts[k + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        if (!parts.empty() && parts.back() < 0)
            throw std::invalid_argument("Partition: parts must be nonnegative");
    }

    int sum() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int nonzero_count() const {
        int c = 0;
        for (int p : parts) c += (p > 0);
        return c;
    }
    // Trailing zeros stripped; canonical key for memo tables.
    std::vector<int> stripped() const {
        std::vector<int> s(parts.begin(), parts.begin() + nonzero_count());
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

// An r-element subset I = {i_1 < ... < i_r} of {1..n}, indexing the Schubert
// class sigma(I).  1-based throughout.
struct SchubertIndex {
    GrContext ctx;
    std::vector<int> elements;

    SchubertIndex(GrContext c, std::vector<int> elems) : ctx(c), elements(std::move(elems)) {
        if (static_cast<int>(elements.size()) != ctx.r)
            throw std::invalid_argument("SchubertIndex: need exactly r elements");
        for (std::size_t k = 0; k < elements.size(); ++k) {
            if (elements[k] < 1 || elements[k] > ctx.n)
                throw std::invalid_argument("SchubertIndex: elements must lie in 1..n");
            if (k > 0 && elements[k - 1] >= elements[k])
                throw std::invalid_argument("SchubertIndex: elements must be strictly increasing");
        }
    }

    friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
    friend bool operator<(const SchubertIndex& a, const SchubertIndex& b) {
        return a.elements < b.elements;
    }
};

struct ShiftResult {
    SchubertIndex index;
    int count;  // elements of the original index that were <= k
};

void require_same_context(const GrContext& a, const GrContext& b);

// Number of pairs (j,i) with j not in I, i in I, j > i.
int codim(const SchubertIndex& I);

// parts[k] = n - r + (k+1) - i_{k+1}; always a valid box partition.
Partition to_partition(const SchubertIndex& I);

// Inverse of to_partition via i_k = n - r + k - a_k.  A partition that does
// not fit the box means the class is zero and yields an empty result rather
// than an error.
std::optional<SchubertIndex> from_partition(const GrContext& ctx, const Partition& lambda);

// Subtract k mod n, replacing 0 by n; count = #{i in I : i <= k}.  0 <= k <= n.
ShiftResult shift(const SchubertIndex& I, int k);

// Poincare dual: {n+1-i : i in I}.
SchubertIndex dual(const SchubertIndex& I);

// Index of the one-row partition (a): the special class.  0 <= a <= n-r.
SchubertIndex special_index(const GrContext& ctx, int a);

// Index of the unit (empty partition) and of the point class.
SchubertIndex fundamental_index(const GrContext& ctx);
SchubertIndex point_index(const GrContext& ctx);

// All r-subsets of {1..n} in lexicographic order.
std::vector<SchubertIndex> all_indices(const GrContext& ctx);

}  // namespace qsc
