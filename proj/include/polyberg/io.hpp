#pragma once

#include <nlohmann/json.hpp>

#include "polyberg/spaces.hpp"

namespace polyberg {

using json = nlohmann::json;

/// CoeffTable wire format:
/// {"gamma": g, "M": M, "J": J, "coeffs": [[re, im], ...]} row-major.
inline json coeff_table_to_json(const CoeffTable& t) {
    json coeffs = json::array();
    for (int m = 0; m <= t.M; ++m)
        for (int j = 0; j <= t.J; ++j)
            coeffs.push_back({t.a(m, j).real(), t.a(m, j).imag()});
    return json{{"gamma", t.gamma}, {"M", t.M}, {"J", t.J}, {"coeffs", coeffs}};
}

inline CoeffTable coeff_table_from_json(const json& j) {
    CoeffTable t{j.at("gamma").get<double>(), j.at("M").get<int>(),
                 j.at("J").get<int>(), {}};
    check_gamma(t.gamma);
    const auto& coeffs = j.at("coeffs");
    if (int(coeffs.size()) != (t.M + 1) * (t.J + 1))
        throw std::invalid_argument("coeff table: size mismatch");
    t.a.resize(t.M + 1, t.J + 1);
    int idx = 0;
    for (int m = 0; m <= t.M; ++m)
        for (int jj = 0; jj <= t.J; ++jj, ++idx)
            t.a(m, jj) = cplx(coeffs[idx][0].get<double>(),
                              coeffs[idx][1].get<double>());
    return t;
}

}  // namespace polyberg
