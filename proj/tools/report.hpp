#pragma once
// JSON forms shared by the command-line tool and the acceptance suite.

#include "json.hpp"
#include "mtasep/markov.hpp"
#include "mtasep/multiline.hpp"
#include "mtasep/quantum_r.hpp"

#include <string>

namespace mtasep::report {

using nlohmann::ordered_json;

/// {"sector": [...], "method": ..., "weights": {"012": 2, ...}} with keys sorted.
ordered_json steady_json(const SteadyVector& v, const std::string& method);

/// Divides by the gcd of all weights.
SteadyVector coprime(const SteadyVector& v);

ordered_json conjecture_json(const ConjectureReport& r);

/// Conjecture check on every basic sector with n <= max_n, L <= max_L and every 1 <= r < L.
ordered_json conjecture_sweep(int max_L, int max_n);

/// {"a,b,i,j": "poly", ...}; with q0, the q = 0, z = 1 values.
ordered_json rmatrix_json(const RMatrixTable& t, bool q0);

/// Checks every example in the golden file; returns {"checks": n, "failures": [...]}.
ordered_json verify_golden(const nlohmann::json& golden);

}  // namespace mtasep::report
