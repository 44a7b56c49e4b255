#include "fql/json_io.hpp"

namespace fql {

nlohmann::json json_field(const Field* F) {
    return {{"p", F->p()}, {"e", F->deg()}, {"modulus", F->modulus()}};
}

nlohmann::json json_series(const TruncLaurent& x) {
    nlohmann::json j;
    j["field"] = json_field(x.field());
    j["ram"] = x.ram();
    j["lead"] = x.lead() >= kPrecInf ? nlohmann::json() : nlohmann::json(x.lead());
    j["prec"] = x.exact() ? nlohmann::json() : nlohmann::json(x.prec());
    j["coeffs"] = x.raw();
    return j;
}

nlohmann::json json_tseries(const TSeries& x) {
    nlohmann::json j;
    j["Nt"] = x.Nt();
    // a certificate with a negative offset is not a plain slope statement;
    // only the unshifted form is published
    if (x.has_growth() && x.growth_b() >= 0)
        j["growth"] = x.growth_g();
    else
        j["growth"] = nlohmann::json();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= x.Nt(); ++k) coeffs.push_back(json_series(x.coeff(k)));
    j["coeffs"] = coeffs;
    return j;
}

nlohmann::json json_ttpoly(const TTPoly& x) {
    nlohmann::json rows = nlohmann::json::array();
    for (int jdeg = 0; jdeg <= x.theta_degree(); ++jdeg) {
        const FqPoly ct = x.coeff(jdeg);
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i <= ct.degree(); ++i) row.push_back(ct.coeff(i).val());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json json_ratfunc(const RatFunc& x) {
    return {{"num", json_ttpoly(x.num())}, {"den", json_ttpoly(x.den())}};
}

nlohmann::json json_useries(const USeries& x) {
    nlohmann::json j;
    j["Nu"] = x.order();
    j["weight"] = x.weight();
    j["type"] = x.type();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= x.order(); ++i) coeffs.push_back(json_ratfunc(x.coeff(i)));
    j["coeffs"] = coeffs;
    return j;
}

nlohmann::json json_lambda(const LambdaResult& r) {
    const Field* F = r.lambda.field();
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["lambda"] = json_ratfunc(r.lambda);
    j["phi"] = json_useries(r.phi);
    j["psi"] = json_useries(r.psi);
    j["residual_order"] = r.residual_order;
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (auto [x, y] : v) a.push_back(nlohmann::json::array({x, y}));
        return a;
    };
    j["basis"] = {{"phi", pairs(mform_basis(F, r.alpha + 1, 1))},
                  {"psi", pairs(mform_basis(F, r.alpha + F->q(), 1))}};
    return j;
}

std::string json_dump(const nlohmann::json& j) { return j.dump(1) + "\n"; }

}  // namespace fql
