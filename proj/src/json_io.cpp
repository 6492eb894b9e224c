#include "lexrank/json_io.hpp"

#include "lexrank/polynomial.hpp"

namespace lexrank {

Json monomial_to_json(const SquarefreeMonomial& m) { return Json(m.vars()); }

SquarefreeMonomial monomial_from_json(const Json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("monomial JSON must be an array of indices");
    std::vector<int> vars;
    for (const auto& x : j) vars.push_back(x.get<int>());
    return SquarefreeMonomial(n, vars);
}

Json ideal_to_json(const MonomialIdeal& I) {
    Json j;
    j["n"] = I.n();
    Json gens = Json::array();
    for (const auto& g : I.gens()) gens.push_back(monomial_to_json(g));
    j["gens"] = std::move(gens);
    return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<SquarefreeMonomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(monomial_from_json(g, n));
    return MonomialIdeal(n, std::move(gens));
}

Json invariant_report_json(int ambient_n, const SquarefreeMonomial& u,
                           const SquarefreeMonomial& v, const InvariantReport& rep,
                           WitnessCase witness_case, int shift) {
    Json j;
    j["n"] = ambient_n;
    j["u"] = monomial_to_json(u);
    j["v"] = monomial_to_json(v);
    j["dim"] = rep.dim;
    j["depth"] = rep.depth;
    j["projdim"] = rep.projdim;
    j["reg"] = rep.reg;
    j["ara"] = rep.ara;
    j["height"] = rep.height;
    j["cm"] = rep.cm;
    j["stci"] = rep.stci;
    j["linear_resolution"] = rep.linear_resolution;
    j["class"] = witness_case_name(witness_case);
    if (shift != 0) j["shift"] = shift;
    return j;
}

Json betti_table_json(const BettiTable& T) {
    Json j;
    j["field"] = T.field;
    Json entries = Json::array();
    for (const auto& [id, b] : T.entries) {
        Json e;
        e["i"] = id.first;
        e["d"] = id.second;
        e["beta"] = b;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["projdim"] = T.projdim();
    j["reg"] = T.reg_ideal();
    return j;
}

Json certificate_to_json(const SvCertificate& cert) {
    Json j;
    j["target"] = ideal_to_json(cert.target);
    Json sets = Json::array();
    for (const auto& set : cert.family.sets) {
        Json s = Json::array();
        for (const auto& m : set) s.push_back(monomial_to_json(m));
        sets.push_back(std::move(s));
    }
    j["sets"] = std::move(sets);
    j["sums"] = cert.sum_texts();
    j["verdict"] = cert.verdict;
    return j;
}

SvCertificate certificate_from_json(const Json& j) {
    SvCertificate cert;
    cert.target = ideal_from_json(j.at("target"));
    for (const auto& s : j.at("sets")) {
        std::vector<SquarefreeMonomial> set;
        for (const auto& m : s) set.push_back(monomial_from_json(m, cert.target.n()));
        cert.family.sets.push_back(std::move(set));
    }
    cert.verdict = j.value("verdict", "");
    return cert;
}

Json polynomial_to_json(const RatPoly& p) {
    RationalField Q;
    Json terms = Json::array();
    // emit in decreasing order (leading term first)
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Json t;
        t["coeff"] = Q.to_string(it->second);
        t["exps"] = it->first;
        terms.push_back(std::move(t));
    }
    return terms;
}

RatPoly polynomial_from_json(const Json& j) {
    RationalField Q;
    RatPoly p;
    for (const auto& t : j) {
        Expv e;
        for (const auto& x : t.at("exps")) e.push_back(x.get<std::uint32_t>());
        Rational c(t.at("coeff").get<std::string>());
        add_term(Q, p, e, c);
    }
    return p;
}

Json dual_witness_to_json(const DualWitness& w, int dual_pd) {
    RationalField Q;
    Json j;
    j["method"] = dual_method_name(w.method);
    j["dual_projdim"] = dual_pd;
    Json polys = Json::array();
    Json texts = Json::array();
    for (const auto& p : w.polys) {
        polys.push_back(polynomial_to_json(p));
        texts.push_back(poly_to_text(Q, p));
    }
    j["polys"] = std::move(polys);
    j["poly_texts"] = std::move(texts);
    if (w.method == DualMethod::ThreeElement) {
        j["f1"] = polynomial_to_json(*w.f1);
        j["f2"] = polynomial_to_json(*w.f2);
        j["pi"] = monomial_to_json(*w.pi);
        j["xj"] = w.xj;
    }
    return j;
}

}  // namespace lexrank
