#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "semigf/channel_statistics.hpp"
#include "semigf/quadrature.hpp"
#include "semigf/special_functions.hpp"

namespace semigf {

enum class Method { Exact, ClosedForm, Asymptotic };

const char* to_string(Method m);
const char* to_string(User u);
const char* to_string(Scenario s);
const char* to_string(ProtocolKind p);

// Thrown when a branch parameter (a sigma denominator) leaves its validity
// domain; the message names the violated inequality.
class BranchDomainError : public std::domain_error {
public:
    explicit BranchDomainError(const std::string& what) : std::domain_error(what) {}
};

struct AnalyticOptions {
    int cheb_order = 400;            // node count for the quadrature closed forms
    AdaptiveQuadOptions quad{};      // exact-mode integrator
    SeriesControl series{};          // hypergeometric / binomial series policy
};

struct Diagnostics {
    int series_terms = 0;
    int quad_order = 0;
    std::vector<std::string> warnings;
};

// A probability with provenance. Exact and ClosedForm values live in [0, 1];
// Asymptotic values may leave the interval at low SNR and are never clamped.
struct OutageEstimate {
    double value = 0.0;
    Method method = Method::Exact;
    std::string branch;
    Diagnostics diag;
};

} // namespace semigf
