#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/fulton_woodward.hpp"
#include "qsc/json_io.hpp"
#include "qsc/quantum.hpp"
#include "qsc/rootsys.hpp"
#include "qsc/transform.hpp"
#include "qsc/typea_bridge.hpp"
#include "qsc/verify.hpp"

namespace {

using qsc::json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) out.push_back(std::stoi(piece));
    return out;
}

std::vector<std::vector<int>> parse_class_lists(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, '/')) out.push_back(parse_int_list(piece));
    return out;
}

struct ProductArgs {
    int n = 0, r = 0;
    std::string i, j;
    bool as_json = false;
};

struct GwArgs {
    int n = 0, r = 0;
    std::string classes;
    int d = 0;
    bool trace = false;
    bool as_json = false;
};

struct TransformArgs {
    int n = 0, r = 0;
    std::string classes, shifts;
    int d = 0;
    bool as_json = false;
};

struct FwArgs {
    int n = 0, r = 0;
    std::string i, j;
    bool as_json = false;
};

struct RootsArgs {
    std::string type = "A";
    int rank = 3;
    std::string report = "center";
    int sigma = 1;
};

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 6;
    int max_rank = 8;
    bool as_json = false;
};

int run_product(const ProductArgs& a) {
    qsc::GrContext ctx(a.n, a.r);
    qsc::SchubertIndex I(ctx, parse_int_list(a.i)), J(ctx, parse_int_list(a.j));
    qsc::QClass p = qsc::qmul(qsc::q_basis(I), qsc::q_basis(J));
    std::cout << qsc::render(p) << "\n";
    if (a.as_json) std::cout << qsc::qclass_to_json(p).dump(2) << "\n";
    return 0;
}

int run_gw(const GwArgs& a) {
    qsc::GrContext ctx(a.n, a.r);
    std::vector<qsc::SchubertIndex> indices;
    for (const auto& lst : parse_class_lists(a.classes)) indices.emplace_back(ctx, lst);
    qsc::GWInstance inst(ctx, indices, a.d);
    std::optional<std::int64_t> value = qsc::spoint_invariant(inst);
    json trace = json::array();
    if (a.trace && qsc::dimension_check(inst)) {
        qsc::ReductionResult red = qsc::reduce_to_classical(inst);
        for (const auto& sv : red.history) trace.push_back(sv.shifts);
        if (a.trace && !a.as_json)
            for (const auto& sv : red.history) {
                std::cout << "# shift";
                for (int v : sv.shifts) std::cout << " " << v;
                std::cout << "\n";
            }
    }
    if (a.as_json) {
        json out;
        if (value) {
            out["status"] = "ok";
            out["value"] = *value;
        } else {
            out["status"] = "unreachable";
        }
        if (a.trace) out["trace"] = trace;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (value)
        std::cout << *value << "\n";
    else
        std::cout << "unreachable\n";
    return 0;
}

int run_transform(const TransformArgs& a) {
    qsc::GrContext ctx(a.n, a.r);
    std::vector<qsc::SchubertIndex> indices;
    for (const auto& lst : parse_class_lists(a.classes)) indices.emplace_back(ctx, lst);
    qsc::GWInstance inst(ctx, indices, a.d);
    qsc::ShiftVector sv(ctx, parse_int_list(a.shifts));
    qsc::TransformResult res = qsc::transform_instance(inst, sv);
    if (a.as_json) {
        json out;
        out["raw_degree"] = res.raw_degree;
        if (res.instance) {
            json classes = json::array();
            for (const auto& I : res.instance->indices) classes.push_back(I.elements);
            out["classes"] = classes;
            out["d"] = res.instance->d;
        } else {
            out["vanishes"] = true;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (!res.instance) {
        std::cout << "vanishes (negative degree " << res.raw_degree << ")\n";
        return 0;
    }
    std::cout << "n=" << ctx.n << ",r=" << ctx.r << ": ";
    for (std::size_t k = 0; k < res.instance->indices.size(); ++k) {
        if (k) std::cout << "/";
        const auto& e = res.instance->indices[k].elements;
        std::cout << "{";
        for (std::size_t m = 0; m < e.size(); ++m) {
            if (m) std::cout << ",";
            std::cout << e[m];
        }
        std::cout << "}";
    }
    std::cout << " d=" << res.instance->d << "\n";
    return 0;
}

int run_fw(const FwArgs& a) {
    qsc::GrContext ctx(a.n, a.r);
    qsc::SchubertIndex I(ctx, parse_int_list(a.i)), J(ctx, parse_int_list(a.j));
    qsc::LowestTerm lt = qsc::lowest_term(I, J);
    json out;
    out["d"] = lt.d;
    out["maximizer"] = {lt.maximizer.first, lt.maximizer.second};
    out["lowest"] = qsc::coh_to_json(lt.cls);
    std::cout << out.dump(2) << "\n";
    if (!a.as_json)
        std::cout << "# q^" << lt.d << " term: " << qsc::render(lt.cls) << "\n";
    return 0;
}

json weyl_as_json(const qsc::RootSystem& rs, const qsc::WeylElement& w) {
    json images = json::array();
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> e(rs.rank, 0);
        e[i] = 1;
        images.push_back(w.root_act.apply(e));
    }
    return images;
}

int run_roots(const RootsArgs& a) {
    qsc::RootSystem rs = qsc::RootSystem::build(a.type, a.rank);
    json out;
    out["type"] = a.type;
    out["rank"] = a.rank;
    if (a.report == "center") {
        auto elems = qsc::center_elements(rs);
        out["elements"] = elems.size();
        out["marks"] = rs.marks;
        json list = json::array();
        for (const auto& c : elems) {
            json e;
            e["node"] = c.is_identity() ? -1 : c.node + 1;
            json cw = json::array();
            for (const auto& q : c.coweight) cw.push_back(q.str());
            e["coweight"] = cw;
            if (!c.is_identity()) {
                e["sign_check"] = qsc::sign_check(rs, c);
                e["weyl_simple_root_images"] = weyl_as_json(rs, qsc::center_to_weyl(rs, c));
                if (a.type == "A")
                    e["permutation"] = qsc::weyl_to_perm(rs, qsc::center_to_weyl(rs, c));
            }
            list.push_back(e);
        }
        out["center"] = list;
    } else if (a.report == "phi") {
        auto elems = qsc::center_elements(rs);
        out["homomorphism_and_injective"] = qsc::phi_homomorphism_check(rs);
        json table = json::array();
        for (const auto& c1 : elems)
            for (const auto& c2 : elems) {
                json row;
                row["c1"] = c1.node + 1;
                row["c2"] = c2.node + 1;
                row["compose"] = qsc::center_compose(rs, c1, c2).node + 1;
                table.push_back(row);
            }
        out["composition"] = table;
    } else if (a.report == "codim") {
        if (a.rank > 5) throw CLI::ValidationError("codim report limited to rank <= 5");
        qsc::ParabolicChoice P = qsc::ParabolicChoice::maximal(rs.rank, a.sigma - 1);
        auto reps = qsc::min_coset_reps(rs, P);
        auto elems = qsc::center_elements(rs);
        json rows = json::array();
        for (const auto& w : reps) {
            json row;
            row["codim"] = qsc::bruhat_codim(rs, P, w);
            if (a.type == "A") row["permutation"] = qsc::weyl_to_perm(rs, w);
            json shifts = json::array();
            for (const auto& c : elems) {
                if (c.is_identity()) continue;
                json srow;
                srow["node"] = c.node + 1;
                srow["codim_shift"] = qsc::codim_shift(rs, P, c, w);
                shifts.push_back(srow);
            }
            row["shifts"] = shifts;
            rows.push_back(row);
        }
        out["cosets"] = rows;
    } else {
        throw CLI::ValidationError("unknown report: " + a.report);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const VerifyArgs& a) {
    qsc::VerifyOptions opts;
    opts.max_n = a.max_n;
    opts.max_rank = a.max_rank;
    std::vector<qsc::CheckResult> results = qsc::run_suite(a.suite, opts);
    bool all_ok = true;
    json failures = json::array();
    for (const auto& res : results) {
        all_ok = all_ok && res.pass;
        std::ostringstream line;
        line << (res.pass ? "PASS" : "FAIL") << "  " << res.name;
        if (!res.details.empty()) line << "  [" << res.details << "]";
        line << "  (" << std::fixed << res.seconds << "s)";
        std::cout << line.str() << "\n";
        if (!res.pass)
            failures.push_back(json{{"check", res.name}, {"details", res.details}});
    }
    if (a.as_json || !all_ok) {
        json out;
        out["suite"] = a.suite;
        out["pass"] = all_ok;
        out["failures"] = failures;
        std::cout << out.dump(2) << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quantum Schubert calculus for Grassmannians"};
    app.require_subcommand(1);

    ProductArgs pa;
    auto* product = app.add_subcommand("product", "Star product of two Schubert classes");
    product->add_option("--n", pa.n)->required();
    product->add_option("--r", pa.r)->required();
    product->add_option("--i", pa.i, "first index, e.g. 1,3")->required();
    product->add_option("--j", pa.j, "second index")->required();
    product->add_flag("--json", pa.as_json);

    GwArgs ga;
    auto* gw = app.add_subcommand("gw", "s-point Gromov-Witten invariant");
    gw->add_option("--n", ga.n)->required();
    gw->add_option("--r", ga.r)->required();
    gw->add_option("--classes", ga.classes, "slash-separated indices, e.g. 1,2/1,2/1,2")
        ->required();
    gw->add_option("--d", ga.d)->required();
    gw->add_flag("--trace", ga.trace);
    gw->add_flag("--json", ga.as_json);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Shift an invariant instance");
    transform->add_option("--n", ta.n)->required();
    transform->add_option("--r", ta.r)->required();
    transform->add_option("--classes", ta.classes)->required();
    transform->add_option("--d", ta.d)->required();
    transform->add_option("--shifts", ta.shifts, "per-slot shifts, e.g. 2,1,1")->required();
    transform->add_flag("--json", ta.as_json);

    FwArgs fa;
    auto* fw = app.add_subcommand("fw", "Minimal q-degree and lowest term of a product");
    fw->add_option("--n", fa.n)->required();
    fw->add_option("--r", fa.r)->required();
    fw->add_option("--i", fa.i)->required();
    fw->add_option("--j", fa.j)->required();
    fw->add_flag("--json", fa.as_json);

    RootsArgs ra;
    auto* roots = app.add_subcommand("roots", "Root system reports");
    roots->add_option("--type", ra.type, "A,B,C,D,E,F,G")->required();
    roots->add_option("--rank", ra.rank)->required();
    roots->add_option("--report", ra.report, "center|phi|codim");
    roots->add_option("--sigma", ra.sigma, "excluded node for the codim report (1-based)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->add_option("--suite", va.suite, "transform|fw|rings|roots|all");
    verify->add_option("--max-n", va.max_n);
    verify->add_option("--max-rank", va.max_rank);
    verify->add_flag("--json", va.as_json);

    try {
        app.parse(argc, argv);
        if (product->parsed()) return run_product(pa);
        if (gw->parsed()) return run_gw(ga);
        if (transform->parsed()) return run_transform(ta);
        if (fw->parsed()) return run_fw(fa);
        if (roots->parsed()) return run_roots(ra);
        if (verify->parsed()) return run_verify(va);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
