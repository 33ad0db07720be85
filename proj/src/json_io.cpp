#include "qsc/json_io.hpp"

#include <sstream>

namespace qsc {

json index_to_json(const SchubertIndex& I) {
    return json{{"n", I.ctx.n}, {"r", I.ctx.r}, {"elements", I.elements}};
}

SchubertIndex index_from_json(const json& j) {
    GrContext ctx(j.at("n").get<int>(), j.at("r").get<int>());
    return SchubertIndex(ctx, j.at("elements").get<std::vector<int>>());
}

json coh_to_json(const CohClass& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms) terms.push_back(json{{"index", k}, {"coeff", c}});
    return json{{"n", x.ctx.n}, {"r", x.ctx.r}, {"terms", terms}};
}

CohClass coh_from_json(const json& j) {
    GrContext ctx(j.at("n").get<int>(), j.at("r").get<int>());
    CohClass out(ctx);
    for (const auto& t : j.at("terms")) {
        SchubertIndex I(ctx, t.at("index").get<std::vector<int>>());
        out.add(I.elements, t.at("coeff").get<std::int64_t>());
    }
    return out;
}

json qclass_to_json(const QClass& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back(json{{"q", k.first}, {"index", k.second}, {"coeff", c}});
    return json{{"n", x.ctx.n}, {"r", x.ctx.r}, {"terms", terms}};
}

QClass qclass_from_json(const json& j) {
    GrContext ctx(j.at("n").get<int>(), j.at("r").get<int>());
    QClass out(ctx);
    for (const auto& t : j.at("terms")) {
        SchubertIndex I(ctx, t.at("index").get<std::vector<int>>());
        out.add(t.at("q").get<int>(), I.elements, t.at("coeff").get<std::int64_t>());
    }
    return out;
}

std::string index_to_text(const SchubertIndex& I) {
    std::ostringstream os;
    os << "n=" << I.ctx.n << ",r=" << I.ctx.r << ":{";
    for (std::size_t k = 0; k < I.elements.size(); ++k) {
        if (k) os << ",";
        os << I.elements[k];
    }
    os << "}";
    return os.str();
}

SchubertIndex index_from_text(const std::string& text) {
    int n = 0, r = 0;
    std::size_t brace = text.find(":{");
    if (text.rfind("n=", 0) != 0 || brace == std::string::npos || text.back() != '}')
        throw std::invalid_argument("index_from_text: expected n=..,r=..:{..}");
    std::size_t comma = text.find(",r=");
    if (comma == std::string::npos || comma > brace)
        throw std::invalid_argument("index_from_text: expected n=..,r=..:{..}");
    n = std::stoi(text.substr(2, comma - 2));
    r = std::stoi(text.substr(comma + 3, brace - comma - 3));
    std::vector<int> elems;
    std::string body = text.substr(brace + 2, text.size() - brace - 3);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) elems.push_back(std::stoi(piece));
    return SchubertIndex(GrContext(n, r), std::move(elems));
}

namespace {

const char* kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int d) {
    std::string digits = std::to_string(d);
    std::string out;
    for (char ch : digits) out += kSuperscripts[ch - '0'];
    return out;
}

std::string sigma_bracket(const GrContext& ctx, const std::vector<int>& elements) {
    Partition lam = to_partition(SchubertIndex(ctx, elements));
    std::string out = "σ[";
    bool first = true;
    for (int p : lam.parts) {
        if (p == 0) break;
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    out += "]";
    return out;
}

std::string term_string(const GrContext& ctx, int d, const std::vector<int>& elements,
                        std::int64_t coeff) {
    std::string out;
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag) + "·";
    if (d == 1) out += "q·";
    else if (d >= 2) out += "q" + superscript(d) + "·";
    out += sigma_bracket(ctx, elements);
    return out;
}

}  // namespace

std::string render(const QClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += term_string(x.ctx, k.first, k.second, c);
        first = false;
    }
    return out;
}

std::string render(const CohClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += term_string(x.ctx, 0, k, c);
        first = false;
    }
    return out;
}

}  // namespace qsc
