#pragma once

#include <string>

#include <json.hpp>

#include "fql/lambda.hpp"
#include "fql/series.hpp"
#include "fql/uexp.hpp"

namespace fql {

// JSON forms of the arithmetic objects. Layouts are stable: consumers key on
// "schema" at the document root (emitted by the CLI, currently 1).

nlohmann::json json_field(const Field* F);            // {"p","e","modulus"}
nlohmann::json json_series(const TruncLaurent& x);    // {"field","ram","lead","prec","coeffs"}
nlohmann::json json_tseries(const TSeries& x);        // {"Nt","growth","coeffs"}
nlohmann::json json_ttpoly(const TTPoly& x);          // theta-major coefficient matrix
nlohmann::json json_ratfunc(const RatFunc& x);        // {"num","den"}
nlohmann::json json_useries(const USeries& x);        // {"Nu","weight","type","coeffs"}
nlohmann::json json_lambda(const LambdaResult& r);    // adds basis and residual metadata

// canonical text form: sorted keys, fixed indentation, trailing newline
std::string json_dump(const nlohmann::json& j);

}  // namespace fql
