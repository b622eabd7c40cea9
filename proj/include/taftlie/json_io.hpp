#pragma once

// JSON (de)serialization for all exchange formats.  CycNum values are
// arrays of phi(m) rational strings in lowest terms, lowest power first;
// matrices are nested arrays; Lie algebras use sparse [i, j, k, value]
// structure-constant triples.  ordered_json keeps reports byte-stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "taftlie/classify.hpp"
#include "taftlie/codim.hpp"
#include "taftlie/construct.hpp"

namespace taftlie {

using Json = nlohmann::ordered_json;

inline Json to_json(const CycNum& x) {
    Json a = Json::array();
    for (const auto& s : x.to_strings()) a.push_back(s);
    return a;
}

inline CycNum cyc_from_json(long m, const Json& j) {
    std::vector<std::string> ss;
    for (const auto& e : j) ss.push_back(e.get<std::string>());
    return CycNum::from_strings(m, ss);
}

inline Json to_json(const Mat& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(long m, const Json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    Mat a(m, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) a.at(i, c) = cyc_from_json(m, j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c)));
    return a;
}

inline Json to_json(const SubspaceBasis& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    return Json{{"ambient_dim", s.ambient}, {"dim", s.dim()}, {"vectors", std::move(rows)}};
}

inline Json to_json(const LieAlgebra& L) {
    Json sc = Json::array();
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j)
            for (int k = 0; k < L.dim; ++k) {
                const CycNum& c = L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (!c.is_zero()) sc.push_back(Json::array({i, j, k, to_json(c)}));
            }
    Json out{{"m", L.m}, {"dim", L.dim}, {"sc", std::move(sc)}};
    if (!L.labels.empty()) out["labels"] = L.labels;
    return out;
}

inline LieAlgebra lie_from_json(const Json& j) {
    long m = j.at("m").get<long>();
    int dim = j.at("dim").get<int>();
    LieAlgebra L(m, dim);
    for (const auto& t : j.at("sc")) {
        int i = t.at(0).get<int>(), jj = t.at(1).get<int>(), k = t.at(2).get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw Error("LieAlgebra JSON: structure constant index out of range");
        L.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)][static_cast<std::size_t>(k)] =
            cyc_from_json(m, t.at(3));
    }
    if (j.contains("labels")) L.labels = j.at("labels").get<std::vector<std::string>>();
    return L;
}

inline Json to_json(const HopfAlgebraTable& H) {
    Json mult = Json::array();
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (int k = 0; k < H.dim; ++k) {
                const CycNum& c = H.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (!c.is_zero()) mult.push_back(Json::array({i, j, k, to_json(c)}));
            }
    Json cop = Json::array();
    for (int i = 0; i < H.dim; ++i)
        for (const auto& t : H.coproduct[static_cast<std::size_t>(i)])
            cop.push_back(Json::array({i, t.left, t.right, to_json(t.coeff)}));
    Json unit = Json::array(), counit = Json::array();
    for (int i = 0; i < H.dim; ++i) {
        unit.push_back(to_json(H.unit[static_cast<std::size_t>(i)]));
        counit.push_back(to_json(H.counit[static_cast<std::size_t>(i)]));
    }
    return Json{{"m", H.m},           {"dim", H.dim},     {"labels", H.labels},
                {"mult", std::move(mult)}, {"unit", std::move(unit)}, {"coproduct", std::move(cop)},
                {"counit", std::move(counit)}, {"antipode", to_json(H.antipode)},
                {"is_taft", H.is_taft}};
}

inline HopfAlgebraTable hopf_from_json(const Json& j) {
    HopfAlgebraTable H;
    H.m = j.at("m").get<long>();
    H.dim = j.at("dim").get<int>();
    H.labels = j.at("labels").get<std::vector<std::string>>();
    H.mult.assign(static_cast<std::size_t>(H.dim),
                  std::vector<Vec>(static_cast<std::size_t>(H.dim), zero_vec(H.m, H.dim)));
    for (const auto& t : j.at("mult"))
        H.mult[t.at(0).get<std::size_t>()][t.at(1).get<std::size_t>()][t.at(2).get<std::size_t>()] =
            cyc_from_json(H.m, t.at(3));
    H.unit = zero_vec(H.m, H.dim);
    H.counit = zero_vec(H.m, H.dim);
    for (int i = 0; i < H.dim; ++i) {
        H.unit[static_cast<std::size_t>(i)] = cyc_from_json(H.m, j.at("unit").at(static_cast<std::size_t>(i)));
        H.counit[static_cast<std::size_t>(i)] = cyc_from_json(H.m, j.at("counit").at(static_cast<std::size_t>(i)));
    }
    H.coproduct.resize(static_cast<std::size_t>(H.dim));
    for (const auto& t : j.at("coproduct"))
        H.coproduct[t.at(0).get<std::size_t>()].push_back(
            {cyc_from_json(H.m, t.at(3)), t.at(1).get<int>(), t.at(2).get<int>()});
    H.antipode = mat_from_json(H.m, j.at("antipode"));
    H.is_taft = j.value("is_taft", false);
    if (H.is_taft) {
        // basis order is fixed as c^i v^k sorted by (k, i)
        H.index_one = 0;
        H.index_c = 1;
        H.index_v = static_cast<int>(H.m);
    }
    return H;
}

inline Json to_json(const HModuleLie& M) {
    Json out{{"L", to_json(M.L)}, {"H", M.taft ? "taft" : "custom"}, {"m", M.H.m}};
    if (M.taft) {
        out["C"] = to_json(M.C);
        out["V"] = to_json(M.V);
    } else {
        out["hopf"] = to_json(M.H);
        Json acts = Json::array();
        for (const auto& a : M.action) acts.push_back(to_json(a));
        out["action"] = std::move(acts);
    }
    return out;
}

/// Rebuilds (and therefore re-verifies) the module from its JSON form.
inline HModuleLie hmodule_from_json(const Json& j) {
    LieAlgebra L = lie_from_json(j.at("L"));
    std::string kind = j.at("H").get<std::string>();
    if (kind == "taft") {
        long m = j.at("m").get<long>();
        return make_hmodule(std::move(L), make_taft(m), mat_from_json(L.m, j.at("C")),
                            mat_from_json(L.m, j.at("V")));
    }
    HopfAlgebraTable H = hopf_from_json(j.at("hopf"));
    std::vector<Mat> action;
    for (const auto& a : j.at("action")) action.push_back(mat_from_json(L.m, a));
    return make_hmodule_custom(std::move(L), std::move(H), std::move(action));
}

inline Json to_json(const Report& rep) {
    Json arr = Json::array();
    for (const auto& c : rep.checks) {
        Json e{{"check", c.check}, {"status", to_string(c.status)}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline Json to_json(const BaseProfile& p) {
    return Json{{"dim", p.dim},
                {"radical_dim", p.radical_dim},
                {"killing_rank", p.killing_rank},
                {"simplicity", to_string(p.simplicity)}};
}

inline Json to_json(const ClassificationResult& r) {
    Json out{{"case", to_string(r.kind)}};
    if (r.gamma) out["gamma"] = to_json(*r.gamma);
    if (r.t) out["t"] = *r.t;
    if (r.base_profile) out["B_profile"] = to_json(*r.base_profile);
    out["certificates"] = to_json(r.certificates);
    return out;
}

inline Json to_json(const BoundReport& b) {
    return Json{{"n", b.n},
                {"c_n", b.c_n},
                {"bound", b.bound.get_str()},
                {"ratio", rat_to_string(b.ratio)},
                {"within_bound", b.within_bound}};
}

}  // namespace taftlie
