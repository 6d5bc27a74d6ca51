#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

namespace spherloc {

/// Outcome of a numeric inequality or agreement check, with the parameters
/// that produced it. For `lower_bound` reports the verdict is
/// margin >= -tolerance; for `agreement` reports it is |margin| <= tolerance.
struct InequalityReport {
    enum class Kind { lower_bound, agreement };

    Kind kind = Kind::lower_bound;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // lhs - rhs
    bool holds = false;
    double tolerance = 0.0;
    nlohmann::json params;

    static InequalityReport lower_bound(double lhs, double rhs, double tolerance,
                                        nlohmann::json params = {});
    static InequalityReport agreement(double lhs, double rhs, double tolerance,
                                      nlohmann::json params = {});
};

/// A concrete parameter assignment violating an inequality (ratio < 1).
struct Witness {
    nlohmann::json params;
    double ratio = 0.0;
    double margin = 0.0; // lhs - rhs at the witness
};

void to_json(nlohmann::json& j, const InequalityReport& r);
void to_json(nlohmann::json& j, const Witness& w);

} // namespace spherloc
