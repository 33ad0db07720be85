#include "qsc/transform.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "qsc/checked.hpp"

namespace qsc {

ShiftVector::ShiftVector(GrContext c, std::vector<int> sh) : ctx(c), shifts(std::move(sh)) {
    for (int v : shifts)
        if (v < 0 || v > ctx.n)
            throw std::invalid_argument("ShiftVector: entries must lie in 0..n");
    if (total() % ctx.n != 0)
        throw std::invalid_argument("ShiftVector: entries must sum to a multiple of n");
}

int ShiftVector::total() const {
    int t = 0;
    for (int v : shifts) t += v;
    return t;
}

QClass T(const QClass& x) {
    QClass out(x.ctx);
    for (const auto& [key, c] : x.terms) {
        ShiftResult s = shift(SchubertIndex(x.ctx, key.second), 1);
        out.add(key.first + s.count, s.index.elements, c);
    }
    return out;
}

QClass T_pow(const QClass& x, int k) {
    if (k < 0) throw std::invalid_argument("T_pow: negative power");
    const int n = x.ctx.n, r = x.ctx.r;
    int cycles = k / n, rem = k % n;
    QClass out(x.ctx);
    for (const auto& [key, c] : x.terms) {
        ShiftResult s = shift(SchubertIndex(x.ctx, key.second), rem);
        out.add(key.first + cycles * r + s.count, s.index.elements, c);
    }
    return out;
}

TransformResult transform_instance(const GWInstance& inst, const ShiftVector& sv) {
    require_same_context(inst.ctx, sv.ctx);
    if (sv.shifts.size() != inst.indices.size())
        throw std::invalid_argument("transform_instance: shift count must match class count");
    const int n = inst.ctx.n, r = inst.ctx.r;
    std::vector<SchubertIndex> shifted;
    shifted.reserve(inst.indices.size());
    long long count_sum = 0;
    for (std::size_t i = 0; i < inst.indices.size(); ++i) {
        ShiftResult s = shift(inst.indices[i], sv.shifts[i]);
        count_sum += s.count;
        shifted.push_back(std::move(s.index));
    }
    long long dprime = inst.d + static_cast<long long>(sv.total() / n) * r - count_sum;
    TransformResult out{std::nullopt, dprime};
    if (dprime >= 0)
        out.instance = GWInstance(inst.ctx, std::move(shifted), static_cast<int>(dprime));
    return out;
}

namespace {

// All ways to write n as an ordered sum of s entries in 0..n, lexicographic.
std::vector<std::vector<int>> compositions_of_n(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s, 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == s - 1) {
            cur[k] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[k] = v;
            rec(k + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

long long count_sum_for(const GWInstance& inst, const std::vector<int>& shifts) {
    long long total = 0;
    for (std::size_t i = 0; i < shifts.size(); ++i)
        total += shift(inst.indices[i], shifts[i]).count;
    return total;
}

std::vector<std::vector<int>> state_key(const GWInstance& inst) {
    std::vector<std::vector<int>> key;
    key.reserve(inst.indices.size() + 1);
    for (const auto& I : inst.indices) key.push_back(I.elements);
    key.push_back({inst.d});
    return key;
}

}  // namespace

ReductionResult reduce_to_classical(const GWInstance& inst) {
    if (!dimension_check(inst))
        throw std::invalid_argument("reduce_to_classical: dimension condition must hold");
    const int n = inst.ctx.n, r = inst.ctx.r;
    const int s = static_cast<int>(inst.indices.size());
    const auto comps = compositions_of_n(n, s);

    // Greedy phase: per step, the composition with the largest count sum that
    // keeps the shifted degree nonnegative (count sums move in unit steps, so
    // the cap d + r is attainable whenever any composition reaches it).
    GWInstance cur = inst;
    std::vector<ShiftVector> history;
    while (cur.d > 0) {
        const long long cap = cur.d + r;
        long long best = -1;
        const std::vector<int>* best_comp = nullptr;
        for (const auto& comp : comps) {
            long long cs = count_sum_for(cur, comp);
            if (cs <= cap && cs > best) {
                best = cs;
                best_comp = &comp;
            }
        }
        if (best <= r) break;  // no composition strictly decreases d
        ShiftVector sv(inst.ctx, *best_comp);
        TransformResult t = transform_instance(cur, sv);
        history.push_back(std::move(sv));
        cur = *t.instance;  // count sum was capped, so the degree stays >= 0
    }
    if (cur.d == 0) return ReductionResult{ReductionStatus::reduced, std::move(history), cur};

    // Fallback: bounded breadth-first search over shift sequences, allowing
    // neutral or worsening steps within a small degree slack.
    struct Node {
        GWInstance state;
        std::vector<ShiftVector> path;
    };
    const int max_d = cur.d + r;
    const std::size_t node_budget = 20000;
    std::set<std::vector<std::vector<int>>> seen;
    std::deque<Node> queue;
    queue.push_back({cur, {}});
    seen.insert(state_key(cur));
    std::size_t expanded = 0;
    while (!queue.empty() && expanded < node_budget) {
        Node node = std::move(queue.front());
        queue.pop_front();
        ++expanded;
        for (const auto& comp : comps) {
            ShiftVector sv(inst.ctx, comp);
            TransformResult t = transform_instance(node.state, sv);
            if (!t.instance || t.instance->d > max_d) continue;
            auto key = state_key(*t.instance);
            if (!seen.insert(key).second) continue;
            std::vector<ShiftVector> path = node.path;
            path.push_back(sv);
            if (t.instance->d == 0) {
                for (auto& h : path) history.push_back(std::move(h));
                return ReductionResult{ReductionStatus::reduced, std::move(history),
                                       *t.instance};
            }
            queue.push_back({*t.instance, std::move(path)});
        }
    }
    return ReductionResult{ReductionStatus::irreducible, std::move(history), cur};
}

std::optional<std::int64_t> spoint_invariant(const GWInstance& inst) {
    if (!dimension_check(inst)) return 0;
    const bool three_point = inst.indices.size() == 3;
    ReductionResult red = reduce_to_classical(inst);
    std::optional<std::int64_t> value;
    if (red.status == ReductionStatus::reduced) {
        CohClass acc = coh_basis(red.terminal.indices[0]);
        for (std::size_t i = 1; i < red.terminal.indices.size(); ++i)
            acc = cup(acc, coh_basis(red.terminal.indices[i]));
        value = integral(acc);
    } else if (!three_point) {
        return std::nullopt;  // unreachable by this method
    }
    if (three_point) {
        std::int64_t direct =
            gw3(inst.indices[0], inst.indices[1], inst.indices[2], inst.d);
        if (value && *value != direct)
            throw std::logic_error("spoint_invariant: reduction disagrees with direct value");
        value = direct;
    }
    return value;
}

}  // namespace qsc
