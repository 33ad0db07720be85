#include "qsc/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qsc/fulton_woodward.hpp"
#include "qsc/parallel.hpp"
#include "qsc/rootsys.hpp"
#include "qsc/transform.hpp"
#include "qsc/typea_bridge.hpp"

namespace qsc {

namespace {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::vector<GrContext> contexts_up_to(int max_n) {
    std::vector<GrContext> out;
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r < n; ++r) out.emplace_back(n, r);
    return out;
}

// Gathers failure strings from parallel sweeps; keeps only a few for the report.
struct FailureLog {
    explicit FailureLog(std::size_t slots) : slots_(slots) {}
    std::vector<std::string> slots_;

    std::string& at(std::size_t i) { return slots_[i]; }
    std::string summary(std::size_t cap = 5) const {
        std::string out;
        std::size_t count = 0;
        for (const auto& s : slots_) {
            if (s.empty()) continue;
            ++count;
            if (count <= cap) {
                if (!out.empty()) out += "; ";
                out += s;
            }
        }
        if (count > cap) out += "; ... (" + std::to_string(count) + " failures total)";
        return out;
    }
    bool clean() const {
        for (const auto& s : slots_)
            if (!s.empty()) return false;
        return true;
    }
};

CheckResult finish(const std::string& name, const Timer& t, const FailureLog& log,
                   const std::string& stats = "") {
    bool ok = log.clean();
    std::string details = ok ? stats : log.summary();
    return CheckResult{name, ok, details, t.seconds()};
}

int count_le(const SchubertIndex& I, int k) {
    int c = 0;
    for (int i : I.elements)
        if (i <= k) ++c;
    return c;
}

std::vector<std::vector<int>> compositions(int total, int parts, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == parts - 1) {
            if (remaining <= cap) {
                cur[k] = remaining;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 0; v <= std::min(cap, remaining); ++v) {
            cur[k] = v;
            rec(k + 1, remaining - v);
        }
    };
    rec(0, total);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Product tables

ProductTable::ProductTable(GrContext ctx) : ctx_(ctx), basis_(all_indices(ctx)) {
    const int N = static_cast<int>(basis_.size());
    for (int i = 0; i < N; ++i) positions_[basis_[i].elements] = i;
    products_.resize(static_cast<std::size_t>(N) * (N + 1) / 2);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(products_.size());
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) pairs.emplace_back(i, j);
    parallel_for(pairs.size(), [&](std::size_t k) {
        auto [i, j] = pairs[k];
        products_[k] = star_basis(basis_[i], basis_[j]);
    });
}

int ProductTable::position(const std::vector<int>& elements) const {
    auto it = positions_.find(elements);
    if (it == positions_.end()) throw std::invalid_argument("ProductTable: unknown index");
    return it->second;
}

const QClass& ProductTable::product(int i, int j) const {
    const int N = static_cast<int>(basis_.size());
    if (i > j) std::swap(i, j);
    std::size_t flat = static_cast<std::size_t>(i) * N - static_cast<std::size_t>(i) * (i - 1) / 2 +
                       (j - i);
    return *products_[flat];
}

const QClass& ProductTable::product(const SchubertIndex& I, const SchubertIndex& J) const {
    return product(position(I.elements), position(J.elements));
}

QClass ProductTable::mul(const QClass& x, const QClass& y) const {
    QClass out(ctx_);
    for (const auto& [xk, xc] : x.terms)
        for (const auto& [yk, yc] : y.terms) {
            const QClass& p = product(position(xk.second), position(yk.second));
            std::int64_t scale = checked_mul(xc, yc);
            for (const auto& [pk, pc] : p.terms)
                out.add(pk.first + xk.first + yk.first, pk.second, checked_mul(pc, scale));
        }
    return out;
}

std::int64_t ProductTable::gw(const SchubertIndex& I, const SchubertIndex& J,
                              const SchubertIndex& K, int d) const {
    if (d < 0) return 0;
    return product(position(I.elements), position(J.elements))
        .coefficient(d, dual(K).elements);
}

CupTable::CupTable(GrContext ctx) : ctx_(ctx), basis_(all_indices(ctx)) {
    const int N = static_cast<int>(basis_.size());
    for (int i = 0; i < N; ++i) positions_[basis_[i].elements] = i;
    products_.resize(static_cast<std::size_t>(N) * (N + 1) / 2);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(products_.size());
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) pairs.emplace_back(i, j);
    parallel_for(pairs.size(), [&](std::size_t k) {
        auto [i, j] = pairs[k];
        products_[k] = cup(coh_basis(basis_[i]), coh_basis(basis_[j]));
    });
}

int CupTable::position(const std::vector<int>& elements) const {
    auto it = positions_.find(elements);
    if (it == positions_.end()) throw std::invalid_argument("CupTable: unknown index");
    return it->second;
}

const CohClass& CupTable::product(int i, int j) const {
    const int N = static_cast<int>(basis_.size());
    if (i > j) std::swap(i, j);
    std::size_t flat = static_cast<std::size_t>(i) * N - static_cast<std::size_t>(i) * (i - 1) / 2 +
                       (j - i);
    return *products_[flat];
}

CohClass CupTable::mul(const CohClass& x, const CohClass& y) const {
    CohClass out(ctx_);
    for (const auto& [xk, xc] : x.terms)
        for (const auto& [yk, yc] : y.terms) {
            const CohClass& p = product(position(xk), position(yk));
            std::int64_t scale = checked_mul(xc, yc);
            for (const auto& [pk, pc] : p.terms) out.add(pk, checked_mul(pc, scale));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Acceptance checks

CheckResult check_gr24_multiplication_table() {
    Timer t;
    GrContext ctx(4, 2);
    ProductTable tab(ctx);
    auto ix = [&](std::vector<int> e) { return SchubertIndex(ctx, std::move(e)); };
    auto expect = [&](const GrContext& c,
                      std::vector<std::tuple<int, std::vector<int>, std::int64_t>> terms) {
        QClass q(c);
        for (auto& [d, e, v] : terms) q.add(d, e, v);
        return q;
    };
    FailureLog log(5);
    // sigma_1 = {2,4}, sigma_2 = {1,4}, sigma_11 = {2,3}, sigma_21 = {1,3},
    // sigma_22 = {1,2}, unit = {3,4}.
    if (!(tab.product(ix({2, 4}), ix({2, 4})) ==
          expect(ctx, {{0, {1, 4}, 1}, {0, {2, 3}, 1}})))
        log.at(0) = "sigma_1 * sigma_1 != sigma_2 + sigma_11";
    if (!(tab.product(ix({2, 4}), ix({1, 3})) ==
          expect(ctx, {{0, {1, 2}, 1}, {1, {3, 4}, 1}})))
        log.at(1) = "sigma_1 * sigma_21 != sigma_22 + q";
    if (!(tab.product(ix({1, 2}), ix({2, 4})) == expect(ctx, {{1, {2, 4}, 1}})))
        log.at(2) = "sigma_22 * sigma_1 != q sigma_1";
    if (!(tab.product(ix({1, 2}), ix({1, 2})) == expect(ctx, {{2, {3, 4}, 1}})))
        log.at(3) = "sigma_22 * sigma_22 != q^2";

    // Every structure constant against the shift-reduction oracle.
    std::string oracle_fail;
    int checked = 0;
    for (const auto& I : tab.basis())
        for (const auto& J : tab.basis())
            for (const auto& K : tab.basis())
                for (int d = 0; d <= 2; ++d) {
                    GWInstance inst(ctx, {I, J, K}, d);
                    if (!dimension_check(inst)) continue;
                    ++checked;
                    ReductionResult red = reduce_to_classical(inst);
                    if (red.status != ReductionStatus::reduced) {
                        oracle_fail = "oracle could not reduce an instance";
                        continue;
                    }
                    CohClass acc = coh_basis(red.terminal.indices[0]);
                    for (std::size_t m = 1; m < red.terminal.indices.size(); ++m)
                        acc = cup(acc, coh_basis(red.terminal.indices[m]));
                    if (integral(acc) != tab.gw(I, J, K, d)) {
                        std::ostringstream os;
                        os << "oracle mismatch at d=" << d;
                        oracle_fail = os.str();
                    }
                }
    if (!oracle_fail.empty()) log.at(4) = oracle_fail;
    return finish("gr24 multiplication table vs shift-reduction oracle", t, log,
                  std::to_string(checked) + " structure constants cross-checked");
}

CheckResult check_transformation_formula(const std::vector<GrContext>& ctxs, int max_d) {
    Timer t;
    long long instances = 0, comparisons = 0;
    std::vector<std::string> ctx_failures;
    for (const auto& ctx : ctxs) {
        ProductTable tab(ctx);
        const auto& basis = tab.basis();
        const auto comps = compositions(ctx.n, 3, ctx.n);
        struct Item {
            int i, j, k, d;
        };
        std::vector<Item> items;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (std::size_t k = 0; k < basis.size(); ++k)
                    for (int d = 0; d <= max_d; ++d) {
                        GWInstance inst(ctx, {basis[i], basis[j], basis[k]}, d);
                        if (dimension_check(inst))
                            items.push_back({static_cast<int>(i), static_cast<int>(j),
                                             static_cast<int>(k), d});
                    }
        instances += static_cast<long long>(items.size());
        comparisons += static_cast<long long>(items.size()) * comps.size();
        FailureLog log(items.size());
        parallel_for(items.size(), [&](std::size_t m) {
            const Item& it = items[m];
            GWInstance inst(ctx, {basis[it.i], basis[it.j], basis[it.k]}, it.d);
            std::int64_t lhs = tab.gw(basis[it.i], basis[it.j], basis[it.k], it.d);
            for (const auto& comp : comps) {
                ShiftVector sv(ctx, comp);
                TransformResult tr = transform_instance(inst, sv);
                std::int64_t rhs = 0;
                if (tr.instance) {
                    if (dimension_check(*tr.instance) != dimension_check(inst)) {
                        log.at(m) = "dimension condition not preserved by the shift";
                        return;
                    }
                    rhs = tab.gw(tr.instance->indices[0], tr.instance->indices[1],
                                 tr.instance->indices[2], tr.instance->d);
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "Gr(" << ctx.r << "," << ctx.n << ") instance d=" << it.d
                       << " shift (" << comp[0] << "," << comp[1] << "," << comp[2]
                       << "): " << lhs << " != " << rhs;
                    log.at(m) = os.str();
                    return;
                }
            }
        });
        if (!log.clean()) ctx_failures.push_back(log.summary(3));
    }
    FailureLog all(ctx_failures.size() + 1);
    for (std::size_t i = 0; i < ctx_failures.size(); ++i) all.at(i) = ctx_failures[i];
    std::ostringstream stats;
    stats << instances << " instances, " << comparisons << " shifted comparisons";
    return finish("transformation formula, exhaustive", t, all, stats.str());
}

CheckResult check_operator_identities(int max_n) {
    Timer t;
    long long pairs = 0;
    std::vector<std::string> failures;
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable tab(ctx);
        const auto& basis = tab.basis();
        for (std::size_t i = 0; i < basis.size() && failures.size() < 5; ++i) {
            QClass ti = T(q_basis(basis[i]));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                ++pairs;
                QClass lhs = T(tab.product(static_cast<int>(i), static_cast<int>(j)));
                QClass rhs = tab.mul(ti, q_basis(basis[j]));
                if (!(lhs == rhs)) {
                    failures.push_back("T(x*y) != T(x)*y in Gr(" + std::to_string(ctx.r) + "," +
                                       std::to_string(ctx.n) + ")");
                    break;
                }
            }
            QClass tn = T_pow(q_basis(basis[i]), ctx.n);
            if (!(tn == q_scale(q_basis(basis[i]), 1, ctx.r)))
                failures.push_back("T^n != q^r id in Gr(" + std::to_string(ctx.r) + "," +
                                   std::to_string(ctx.n) + ")");
        }
    }
    FailureLog log(failures.size() + 1);
    for (std::size_t i = 0; i < failures.size(); ++i) log.at(i) = failures[i];
    return finish("center-shift operator identities", t, log,
                  std::to_string(pairs) + " basis pairs");
}

CheckResult check_fw_sweep(int max_n) {
    Timer t;
    long long pairs = 0;
    std::vector<std::string> ctx_failures;
    for (const auto& ctx : contexts_up_to(max_n)) {
        const auto basis = all_indices(ctx);
        std::vector<std::pair<int, int>> idx_pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j)
                idx_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        pairs += static_cast<long long>(idx_pairs.size());
        FailureLog log(idx_pairs.size());
        parallel_for(idx_pairs.size(), [&](std::size_t m) {
            const auto& [i, j] = idx_pairs[m];
            const SchubertIndex &I = basis[i], &J = basis[j];
            if (!verify_fw(I, J)) {
                log.at(m) = "verify_fw failed in Gr(" + std::to_string(ctx.r) + "," +
                            std::to_string(ctx.n) + ")";
                return;
            }
            if (min_q_degree(I, J).d != min_q_degree(J, I).d) {
                log.at(m) = "min_q_degree asymmetric";
                return;
            }
            for (auto [a, b] : all_maximizers(I, J)) {
                SchubertIndex Is = shift(I, a).index, Js = shift(J, b).index;
                for (int k = 0; k <= ctx.n; ++k)
                    if (count_le(Is, k) + count_le(Js, ctx.n - k) > ctx.r) {
                        log.at(m) = "maximizer count bound violated";
                        return;
                    }
            }
        });
        if (!log.clean()) ctx_failures.push_back(log.summary(3));
    }
    FailureLog all(ctx_failures.size() + 1);
    for (std::size_t i = 0; i < ctx_failures.size(); ++i) all.at(i) = ctx_failures[i];
    return finish("minimal q-degree and lowest term, all pairs", t, all,
                  std::to_string(pairs) + " unordered pairs");
}

CheckResult check_pieri_degree_reduction(int max_n) {
    Timer t;
    long long terms_checked = 0;
    std::vector<std::string> failures;
    for (const auto& ctx : contexts_up_to(max_n)) {
        const auto basis = all_indices(ctx);
        for (int a = 0; a <= ctx.box_width() && failures.size() < 5; ++a) {
            // qpieri(a, J) for every J, then shifted lookups.
            std::map<std::vector<int>, QClass> row;
            for (const auto& J : basis) row.emplace(J.elements, qpieri(a, J));
            for (const auto& J : basis) {
                const QClass& p = row.at(J.elements);
                for (const auto& [key, c] : p.terms) {
                    if (key.first == 0) continue;
                    ++terms_checked;
                    SchubertIndex K(ctx, key.second);
                    bool found = false;
                    for (int k = 1; k < ctx.n && !found; ++k) {
                        SchubertIndex Jk = shift(J, k).index, Kk = shift(K, k).index;
                        found = row.at(Jk.elements).coefficient(0, Kk.elements) != 0;
                    }
                    if (!found)
                        failures.push_back("q-term with no degree-zero shift in Gr(" +
                                           std::to_string(ctx.r) + "," + std::to_string(ctx.n) +
                                           ")");
                }
            }
        }
    }
    FailureLog log(failures.size() + 1);
    for (std::size_t i = 0; i < failures.size(); ++i) log.at(i) = failures[i];
    return finish("every Pieri q-term reducible to degree zero by a shift", t, log,
                  std::to_string(terms_checked) + " q-terms");
}

CheckResult check_lr_equivalence(int max_n) {
    Timer t;
    long long triples = 0;
    std::vector<std::string> ctx_failures;
    for (const auto& ctx : contexts_up_to(max_n)) {
        CupTable tab(ctx);
        const auto& basis = tab.basis();
        std::vector<std::pair<int, int>> idx_pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j)
                idx_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        triples += static_cast<long long>(idx_pairs.size()) * basis.size();
        FailureLog log(idx_pairs.size());
        parallel_for(idx_pairs.size(), [&](std::size_t m) {
            const auto& [i, j] = idx_pairs[m];
            Partition li = to_partition(basis[i]), lj = to_partition(basis[j]);
            const CohClass& prod = tab.product(i, j);
            for (const auto& K : basis) {
                auto it = prod.terms.find(K.elements);
                std::int64_t coeff = it == prod.terms.end() ? 0 : it->second;
                if (coeff != lr_coefficient(li, lj, to_partition(K))) {
                    log.at(m) = "structure constant disagrees with tableau count in Gr(" +
                                std::to_string(ctx.r) + "," + std::to_string(ctx.n) + ")";
                    return;
                }
            }
        });
        if (!log.clean()) ctx_failures.push_back(log.summary(3));
    }
    FailureLog all(ctx_failures.size() + 1);
    for (std::size_t i = 0; i < ctx_failures.size(); ++i) all.at(i) = ctx_failures[i];
    return finish("cup structure constants vs LR tableau enumeration", t, all,
                  std::to_string(triples) + " triples");
}

// ---------------------------------------------------------------------------
// Module invariant sweeps

CheckResult check_cup_ring_axioms(int max_n) {
    Timer t;
    FailureLog log(8);
    for (const auto& ctx : contexts_up_to(max_n)) {
        CupTable tab(ctx);
        const auto& basis = tab.basis();
        const int N = static_cast<int>(basis.size());
        for (int i = 0; i < N; ++i) {
            if (!(cup(coh_basis(basis[i]), coh_basis(tab.basis().back())) ==
                  coh_basis(basis[i])))
                log.at(0) = "unit law failed";
            for (int j = 0; j < N; ++j) {
                if (!(cup(coh_basis(basis[i]), coh_basis(basis[j])) ==
                      cup(coh_basis(basis[j]), coh_basis(basis[i]))))
                    log.at(1) = "cup not commutative";
            }
        }
        std::vector<std::pair<int, int>> ij;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) ij.emplace_back(i, j);
        FailureLog assoc(ij.size());
        parallel_for(ij.size(), [&](std::size_t m) {
            auto [i, j] = ij[m];
            for (int k = 0; k < N; ++k) {
                CohClass lhs = tab.mul(tab.product(i, j), coh_basis(basis[k]));
                CohClass rhs = tab.mul(coh_basis(basis[i]), tab.product(j, k));
                if (!(lhs == rhs)) {
                    assoc.at(m) = "cup not associative in Gr(" + std::to_string(ctx.r) + "," +
                                  std::to_string(ctx.n) + ")";
                    return;
                }
            }
        });
        if (!assoc.clean()) log.at(2) = assoc.summary(2);
    }
    return finish("cup ring axioms (unit, commutative, associative)", t, log);
}

CheckResult check_duality_pairing(int max_n) {
    Timer t;
    FailureLog log(4);
    long long pairs = 0;
    for (const auto& ctx : contexts_up_to(max_n)) {
        const auto basis = all_indices(ctx);
        for (const auto& I : basis) {
            SchubertIndex dI = dual(I);
            if (!(dual(dI) == I)) log.at(0) = "dual not involutive";
            if (codim(I) + codim(dI) != ctx.dimension()) log.at(1) = "dual codim mismatch";
            for (const auto& J : basis) {
                if (codim(I) + codim(J) != ctx.dimension()) continue;
                ++pairs;
                std::int64_t v = integral(cup(coh_basis(I), coh_basis(J)));
                std::int64_t want = (J == dI) ? 1 : 0;
                if (v != want) log.at(2) = "Poincare pairing not diagonal";
            }
        }
    }
    return finish("Poincare duality pairing", t, log, std::to_string(pairs) + " pairings");
}

CheckResult check_classical_limit(int max_n) {
    Timer t;
    FailureLog log(2);
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable qt(ctx);
        CupTable ct(ctx);
        const int N = static_cast<int>(qt.basis().size());
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j)
                if (!(classical_part(qt.product(i, j)) == ct.product(i, j)))
                    log.at(0) = "q->0 limit of star differs from cup in Gr(" +
                                std::to_string(ctx.r) + "," + std::to_string(ctx.n) + ")";
    }
    return finish("classical limit of the star product", t, log);
}

CheckResult check_q_homogeneity(int max_n) {
    Timer t;
    FailureLog log(2);
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable tab(ctx);
        const auto& basis = tab.basis();
        const int N = static_cast<int>(basis.size());
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) {
                int target = codim(basis[i]) + codim(basis[j]);
                for (const auto& [key, c] : tab.product(i, j).terms) {
                    if (codim(SchubertIndex(ctx, key.second)) !=
                        target - ctx.n * key.first)
                        log.at(0) = "term violates codim grading";
                    if (ctx.n * key.first > 2 * ctx.dimension())
                        log.at(1) = "q-degree beyond the dimension bound";
                }
            }
    }
    return finish("q-degree grading of star products", t, log);
}

CheckResult check_qmul_commutativity(int max_n) {
    Timer t;
    FailureLog log(2);
    for (const auto& ctx : contexts_up_to(max_n)) {
        const auto basis = all_indices(ctx);
        for (const auto& I : basis)
            for (const auto& J : basis) {
                if (!(star_basis(I, J) == star_basis(J, I)))
                    log.at(0) = "star not commutative";
                if (!(star_basis(I, J, 0) == star_basis(I, J, 1)))
                    log.at(1) = "Giambelli evaluation order changes the product";
            }
    }
    return finish("star commutativity and evaluation-order independence", t, log);
}

CheckResult check_qmul_associativity(int max_n, int triples_per_ctx) {
    Timer t;
    FailureLog log(2);
    std::mt19937_64 rng(0x5eed);
    long long checked = 0;
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable tab(ctx);
        const int N = static_cast<int>(tab.basis().size());
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int m = 0; m < triples_per_ctx; ++m) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            QClass lhs = tab.mul(tab.product(a, b), q_basis(tab.basis()[c]));
            QClass rhs = tab.mul(q_basis(tab.basis()[a]), tab.product(b, c));
            ++checked;
            if (!(lhs == rhs))
                log.at(0) = "star not associative in Gr(" + std::to_string(ctx.r) + "," +
                            std::to_string(ctx.n) + ")";
        }
    }
    return finish("star associativity on random triples", t, log,
                  std::to_string(checked) + " triples");
}

CheckResult check_giambelli_unit(int max_n) {
    Timer t;
    FailureLog log(1);
    for (const auto& ctx : contexts_up_to(max_n)) {
        SchubertIndex unit = fundamental_index(ctx);
        for (const auto& I : all_indices(ctx)) {
            if (!(star_basis(I, unit, 1) == q_basis(I)))
                log.at(0) = "Giambelli expansion does not rebuild the class";
        }
    }
    return finish("Giambelli expansion rebuilds each basis class", t, log);
}

CheckResult check_gw3_symmetry(int max_n) {
    Timer t;
    FailureLog log(1);
    long long checked = 0;
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable tab(ctx);
        const auto& basis = tab.basis();
        for (const auto& I : basis)
            for (const auto& J : basis)
                for (const auto& K : basis)
                    for (int d = 0; d <= 2 * ctx.dimension() / ctx.n; ++d) {
                        GWInstance inst(ctx, {I, J, K}, d);
                        if (!dimension_check(inst)) continue;
                        ++checked;
                        std::int64_t v = tab.gw(I, J, K, d);
                        if (v != tab.gw(J, I, K, d) || v != tab.gw(I, K, J, d) ||
                            v != tab.gw(K, J, I, d))
                            log.at(0) = "3-point invariant not symmetric";
                    }
    }
    return finish("3-point invariant symmetry", t, log, std::to_string(checked) + " instances");
}

CheckResult check_transform_roundtrip(int max_n) {
    Timer t;
    FailureLog log(2);
    long long checked = 0;
    for (const auto& ctx : contexts_up_to(max_n)) {
        const auto basis = all_indices(ctx);
        const auto comps = compositions(ctx.n, 3, ctx.n);
        const int d0 = 2 * ctx.r;  // large enough that no step goes negative
        for (const auto& I : basis)
            for (const auto& J : basis)
                for (const auto& K : basis) {
                    GWInstance inst(ctx, {I, J, K}, d0);
                    for (const auto& comp : comps) {
                        ShiftVector sv(ctx, comp);
                        TransformResult fwd = transform_instance(inst, sv);
                        if (!fwd.instance) continue;
                        std::vector<int> back(3);
                        for (int m = 0; m < 3; ++m) back[m] = ctx.n - comp[m];
                        TransformResult rt =
                            transform_instance(*fwd.instance, ShiftVector(ctx, back));
                        ++checked;
                        if (!rt.instance || !(*rt.instance == inst))
                            log.at(0) = "shift round trip failed";
                    }
                }
    }
    return finish("shift round trips return the original instance", t, log,
                  std::to_string(checked) + " round trips");
}

CheckResult check_reduction_statistics(int max_n, int max_d) {
    Timer t;
    FailureLog log(2);
    long long reduced = 0, irreducible = 0;
    for (const auto& ctx : contexts_up_to(max_n)) {
        ProductTable tab(ctx);
        const auto& basis = tab.basis();
        for (const auto& I : basis)
            for (const auto& J : basis)
                for (const auto& K : basis)
                    for (int d = 0; d <= max_d; ++d) {
                        GWInstance inst(ctx, {I, J, K}, d);
                        if (!dimension_check(inst)) continue;
                        ReductionResult red = reduce_to_classical(inst);
                        if (red.status == ReductionStatus::reduced) {
                            ++reduced;
                            CohClass acc = coh_basis(red.terminal.indices[0]);
                            for (std::size_t m = 1; m < red.terminal.indices.size(); ++m)
                                acc = cup(acc, coh_basis(red.terminal.indices[m]));
                            if (integral(acc) != tab.gw(I, J, K, d))
                                log.at(0) = "reduced value disagrees with star product";
                        } else {
                            ++irreducible;
                        }
                    }
    }
    std::ostringstream os;
    os << reduced << " reduced to degree zero, " << irreducible << " irreducible";
    return finish("degree reduction statistics and cross-check", t, log, os.str());
}

CheckResult check_shift_composition(int max_n) {
    Timer t;
    FailureLog log(3);
    for (const auto& ctx : contexts_up_to(max_n)) {
        for (const auto& I : all_indices(ctx)) {
            int cd = codim(I);
            for (int k = 0; k <= ctx.n; ++k) {
                ShiftResult s = shift(I, k);
                if (codim(s.index) != cd + (k - s.count) * ctx.r - ctx.box_width() * s.count)
                    log.at(0) = "codim shift law failed";
            }
            for (int k1 = 0; k1 <= ctx.n; ++k1)
                for (int k2 = 0; k1 + k2 <= 2 * ctx.n && k2 <= ctx.n; ++k2) {
                    ShiftResult s1 = shift(I, k1);
                    ShiftResult s2 = shift(s1.index, k2);
                    ShiftResult direct = shift(I, (k1 + k2) % ctx.n);
                    if (!(s2.index == direct.index)) log.at(1) = "shift composition mismatch";
                    int wraps = (k1 + k2) / ctx.n;
                    if (s1.count + s2.count !=
                        count_le(I, (k1 + k2) % ctx.n) + ctx.r * wraps)
                        log.at(2) = "shift count composition mismatch";
                }
        }
    }
    return finish("shift composition laws", t, log);
}

// ---------------------------------------------------------------------------
// Root system suite

namespace {

struct TypeSpec {
    std::string label;
    int rank;
    int mark1;      // expected mark-1 node count
    int root_count; // expected |R|
};

std::vector<TypeSpec> root_suite_types(int max_rank) {
    std::vector<TypeSpec> all;
    for (int r = 1; r <= 6; ++r) all.push_back({"A", r, r, r * (r + 1)});
    for (int r = 2; r <= 6; ++r) all.push_back({"B", r, 1, 2 * r * r});
    for (int r = 2; r <= 6; ++r) all.push_back({"C", r, 1, 2 * r * r});
    for (int r = 4; r <= 6; ++r) all.push_back({"D", r, 3, 2 * r * (r - 1)});
    all.push_back({"E", 6, 2, 72});
    all.push_back({"E", 7, 1, 126});
    all.push_back({"E", 8, 0, 240});
    all.push_back({"F", 4, 0, 48});
    all.push_back({"G", 2, 0, 12});
    std::vector<TypeSpec> out;
    for (auto& ts : all)
        if (ts.rank <= max_rank) out.push_back(ts);
    return out;
}

std::vector<ParabolicChoice> all_parabolics(int rank) {
    std::vector<ParabolicChoice> out;
    for (int mask = 0; mask < (1 << rank); ++mask) {
        ParabolicChoice p(rank);
        for (int i = 0; i < rank; ++i) p.in_levi[i] = (mask >> i) & 1;
        out.push_back(p);
    }
    return out;
}

}  // namespace

CheckResult check_root_suite(int max_rank) {
    Timer t;
    std::vector<std::string> failures;
    auto fail = [&](const TypeSpec& ts, const std::string& what) {
        if (failures.size() < 8)
            failures.push_back(ts.label + std::to_string(ts.rank) + ": " + what);
    };
    for (const auto& ts : root_suite_types(max_rank)) {
        RootSystem rs = RootSystem::build(ts.label, ts.rank);
        if (static_cast<int>(rs.roots.size()) != ts.root_count) fail(ts, "root count");
        int mark1 = 0;
        for (int m : rs.marks) mark1 += (m == 1);
        if (mark1 != ts.mark1) fail(ts, "mark-1 node count");
        auto elems = center_elements(rs);
        if (static_cast<int>(elems.size()) != 1 + ts.mark1) fail(ts, "center size");

        // Highest root from the marks.
        std::vector<int> theta(rs.rank, 0);
        for (int i = 0; i < rs.rank; ++i) theta[i] = rs.marks[i];
        if (!rs.is_root(theta)) fail(ts, "highest root not a root");

        for (const auto& c : elems) {
            if (c.is_identity()) continue;
            try {
                center_to_weyl(rs, c);  // asserts zero translation
            } catch (const std::logic_error&) {
                fail(ts, "alcove walk translation nonzero");
                continue;
            }
            if (!sign_check(rs, c)) fail(ts, "sign rule");
        }
        if (!phi_homomorphism_check(rs)) fail(ts, "center homomorphism/injectivity");

        if (ts.label == "A") {
            const int n = ts.rank + 1;
            for (int k = 1; k < n; ++k) {
                WeylElement w = center_to_weyl(rs, cyclic_center_element(rs, k));
                if (!(weyl_to_perm(rs, w) == subtract_perm(n, k)))
                    fail(ts, "cyclic-shift permutation");
            }
        }

        // Inverse center pairs: Levi conjugation and transversality counts.
        for (const auto& c1 : elems)
            for (const auto& c2 : elems) {
                if (!center_compose(rs, c1, c2).is_identity()) continue;
                if (!levi_conjugation_check(rs, c1, c2)) fail(ts, "Levi conjugation");
            }

        if (ts.rank <= 4 && ts.mark1 > 0) {
            // codim_shift against the direct Bruhat difference, all parabolics.
            for (const auto& P : all_parabolics(ts.rank)) {
                auto reps = min_coset_reps(rs, P);
                for (const auto& c : elems) {
                    if (c.is_identity()) continue;
                    WeylElement wc = center_to_weyl(rs, c);
                    for (const auto& w : reps) {
                        std::int64_t lhs = codim_shift(rs, P, c, w);
                        std::int64_t rhs = bruhat_codim(rs, P, wc * w) - bruhat_codim(rs, P, w);
                        if (lhs != rhs) {
                            fail(ts, "codim shift formula");
                            break;
                        }
                    }
                }
            }
        }

        // Operator-exponent composition identity, bounded sweep: the defect
        // e(c2,w) + e(c1, w_{c2} w) - e(c1 c2, w) is one fixed q-monomial,
        // independent of the class w.
        if (ts.mark1 > 0 && (ts.rank <= 3 || (ts.label == "D" && ts.rank == 4))) {
            std::vector<ParabolicChoice> ps;
            if (ts.rank <= 3)
                ps = all_parabolics(ts.rank);
            else
                for (int s = 0; s < ts.rank; ++s) ps.push_back(ParabolicChoice::maximal(ts.rank, s));
            for (const auto& P : ps) {
                auto sigma = P.sigma();
                if (sigma.empty()) continue;
                auto reps = min_coset_reps(rs, P);
                for (const auto& c1 : elems)
                    for (const auto& c2 : elems) {
                        if (c1.is_identity() && c2.is_identity()) continue;
                        WeylElement w2 = center_to_weyl(rs, c2);
                        CentralElement c12 = center_compose(rs, c1, c2);
                        std::vector<std::int64_t> constant;
                        for (const auto& w : reps) {
                            auto e2 = tc_exponent(rs, P, c2, w);
                            auto e1 = tc_exponent(rs, P, c1, w2 * w);
                            auto e12 = tc_exponent(rs, P, c12, w);
                            std::vector<std::int64_t> defect(sigma.size());
                            for (std::size_t s = 0; s < sigma.size(); ++s)
                                defect[s] = e2[s] + e1[s] - e12[s];
                            if (constant.empty()) {
                                constant = defect;
                            } else if (defect != constant) {
                                fail(ts, "operator exponent composition not constant");
                                break;
                            }
                        }
                    }
            }
        }

        // Dimension condition preserved by the combined shift, small sweep.
        bool do_dim_sweep = (ts.label == "A" && ts.rank <= 3) ||
                            ((ts.label == "B" || ts.label == "C") && ts.rank == 3);
        if (do_dim_sweep && ts.mark1 > 0) {
            for (int s = 0; s < ts.rank; ++s) {
                ParabolicChoice P = ParabolicChoice::maximal(ts.rank, s);
                auto reps = min_coset_reps(rs, P);
                if (reps.size() > 12) continue;
                for (const auto& c1 : elems)
                    for (const auto& c2 : elems) {
                        CentralElement c3 = center_inverse(rs, center_compose(rs, c1, c2));
                        std::vector<CentralElement> cs{c1, c2, c3};
                        std::vector<WeylElement> wcs;
                        for (const auto& c : cs) wcs.push_back(center_to_weyl(rs, c));
                        for (const auto& wa : reps)
                            for (const auto& wb : reps)
                                for (const auto& wd : reps)
                                    for (std::int64_t z = 0; z <= 2; ++z) {
                                        std::vector<WeylElement> ws{wa, wb, wd};
                                        DegreeVector Z{z};
                                        bool before = dim_condition_check(rs, P, ws, Z);
                                        DegreeVector Zp = degree_shift(rs, P, Z, ws, cs);
                                        std::vector<WeylElement> wsp;
                                        for (int m = 0; m < 3; ++m)
                                            wsp.push_back(canonicalize(rs, P, wcs[m] * ws[m]));
                                        bool after = dim_condition_check(rs, P, wsp, Zp);
                                        if (before != after)
                                            fail(ts, "dimension condition not preserved");
                                    }
                    }
            }
        }
    }
    FailureLog log(failures.size() + 1);
    for (std::size_t i = 0; i < failures.size(); ++i) log.at(i) = failures[i];
    return finish("root system suite (marks, walks, signs, homomorphism, codim)", t, log);
}

CheckResult check_bridge_consistency(const std::vector<GrContext>& ctxs) {
    Timer t;
    std::vector<std::string> failures;
    auto fail = [&](const GrContext& ctx, const std::string& what) {
        if (failures.size() < 8)
            failures.push_back("Gr(" + std::to_string(ctx.r) + "," + std::to_string(ctx.n) +
                               "): " + what);
    };
    for (const auto& ctx : ctxs) {
        RootSystem rs = RootSystem::build("A", ctx.n - 1);
        ParabolicChoice P = grassmann_parabolic(rs, ctx.r);
        const auto basis = all_indices(ctx);
        std::map<std::vector<int>, WeylElement> reps;
        for (const auto& I : basis) {
            WeylElement w = perm_to_weyl(rs, subset_to_perm(I));
            if (!(canonicalize(rs, P, w) == w)) fail(ctx, "subset rep not minimal");
            reps.emplace(I.elements, std::move(w));
        }

        // Bruhat codimension matches the index codimension.
        for (const auto& I : basis)
            if (bruhat_codim(rs, P, reps.at(I.elements)) != codim(I))
                fail(ctx, "bruhat codim mismatch");

        // Exponents of the shift operator match the shift counts (up to the
        // fixed q-monomial that separates the k-th power of T from the single
        // operator of the k-th center element: its exponent at the unit
        // class, count(unit, k)), and the shifted coset matches the shifted
        // subset.
        const SchubertIndex unit = fundamental_index(ctx);
        for (const auto& I : basis)
            for (int k = 0; k < ctx.n; ++k) {
                CentralElement c = cyclic_center_element(rs, k);
                auto e = tc_exponent(rs, P, c, reps.at(I.elements));
                ShiftResult s = shift(I, k);
                int wrap = shift(unit, k).count;
                if (e.size() != 1 || e[0] != s.count - wrap) fail(ctx, "shift exponent mismatch");
                if (k > 0) {
                    WeylElement wc = center_to_weyl(rs, c);
                    WeylElement moved = canonicalize(rs, P, wc * reps.at(I.elements));
                    if (!(moved == reps.at(s.index.elements))) fail(ctx, "shifted coset mismatch");
                    if (codim_shift(rs, P, c, reps.at(I.elements)) !=
                        codim(s.index) - codim(I))
                        fail(ctx, "codim shift bridge mismatch");
                }
            }

        // Degree shifts match the instance transformation, for every triple
        // and every composition of n (and of 2n at the smallest context).
        std::vector<std::vector<int>> comps = compositions(ctx.n, 3, ctx.n);
        if (ctx.n == 4) {
            auto extra = compositions(2 * ctx.n, 3, ctx.n);
            comps.insert(comps.end(), extra.begin(), extra.end());
        }
        const int d0 = 2;
        for (const auto& I1 : basis)
            for (const auto& I2 : basis)
                for (const auto& I3 : basis) {
                    GWInstance inst(ctx, {I1, I2, I3}, d0);
                    std::vector<WeylElement> us{reps.at(I1.elements), reps.at(I2.elements),
                                                reps.at(I3.elements)};
                    for (const auto& comp : comps) {
                        std::vector<CentralElement> cs;
                        for (int m = 0; m < 3; ++m)
                            cs.push_back(cyclic_center_element(rs, comp[m]));
                        DegreeVector Zp = degree_shift(rs, P, DegreeVector{d0}, us, cs);
                        TransformResult tr = transform_instance(inst, ShiftVector(ctx, comp));
                        if (Zp.size() != 1 || Zp[0] != tr.raw_degree)
                            fail(ctx, "degree shift disagrees with instance transform");
                    }
                    // Dimension condition bridge at degrees up to 3.
                    for (int d = 0; d <= 3; ++d) {
                        bool lie = dim_condition_check(rs, P, us, DegreeVector{d});
                        bool gr = (codim(I1) + codim(I2) + codim(I3) ==
                                   ctx.n * d + ctx.dimension());
                        if (lie != gr) fail(ctx, "dimension condition bridge mismatch");
                    }
                }
    }
    FailureLog log(failures.size() + 1);
    for (std::size_t i = 0; i < failures.size(); ++i) log.at(i) = failures[i];
    return finish("type A bridge: codims, exponents, degree shifts", t, log);
}

// ---------------------------------------------------------------------------
// Suites

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
    const int n6 = std::min(opts.max_n, 6);
    const int n5 = std::min(opts.max_n, 5);

    if (suite == "rings" || suite == "all") {
        add(check_shift_composition(n5));
        add(check_lr_equivalence(n6));
        add(check_cup_ring_axioms(n6));
        add(check_duality_pairing(n6));
        add(check_classical_limit(n6));
        add(check_q_homogeneity(n6));
        add(check_qmul_commutativity(n5));
        add(check_qmul_associativity(std::min(opts.max_n, 7), 200));
        add(check_giambelli_unit(n6));
        add(check_pieri_degree_reduction(opts.max_n));
    }
    if (suite == "transform" || suite == "all") {
        add(check_gr24_multiplication_table());
        std::vector<GrContext> ctxs = contexts_up_to(n5);
        if (opts.max_n >= 6) ctxs.emplace_back(6, 3);
        add(check_transformation_formula(ctxs, 3));
        add(check_operator_identities(n6));
        add(check_gw3_symmetry(n5));
        add(check_transform_roundtrip(n5));
        add(check_reduction_statistics(n5, 3));
    }
    if (suite == "fw" || suite == "all") {
        add(check_fw_sweep(opts.max_n));
    }
    if (suite == "roots" || suite == "all") {
        add(check_root_suite(opts.max_rank));
        std::vector<GrContext> ctxs;
        for (const auto& c : {GrContext(4, 2), GrContext(5, 2)})
            if (c.n - 1 <= opts.max_rank) ctxs.push_back(c);
        if (!ctxs.empty()) add(check_bridge_consistency(ctxs));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace qsc
