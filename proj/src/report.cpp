#include "spherloc/report.hpp"

namespace spherloc {

InequalityReport InequalityReport::lower_bound(double lhs, double rhs, double tolerance,
                                               nlohmann::json params) {
    InequalityReport r;
    r.kind = Kind::lower_bound;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.tolerance = tolerance;
    r.holds = r.margin >= -tolerance;
    r.params = std::move(params);
    return r;
}

InequalityReport InequalityReport::agreement(double lhs, double rhs, double tolerance,
                                             nlohmann::json params) {
    InequalityReport r;
    r.kind = Kind::agreement;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.tolerance = tolerance;
    r.holds = std::abs(r.margin) <= tolerance;
    r.params = std::move(params);
    return r;
}

void to_json(nlohmann::json& j, const InequalityReport& r) {
    j = nlohmann::json{
        {"kind", r.kind == InequalityReport::Kind::lower_bound ? "lower_bound" : "agreement"},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"margin", r.margin},
        {"holds", r.holds},
        {"tolerance", r.tolerance},
        {"params", r.params}};
}

void to_json(nlohmann::json& j, const Witness& w) {
    j = nlohmann::json{{"params", w.params}, {"ratio", w.ratio}, {"margin", w.margin}};
}

} // namespace spherloc
