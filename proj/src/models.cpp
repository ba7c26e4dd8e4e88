#include "hcplab/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "degree_product.hpp"
#include "hcplab/error.hpp"

namespace hcplab {

double class_degree(DegreeClass c, double n) {
    switch (c) {
        case DegreeClass::dmax: return n - 1;
        case DegreeClass::d20: return n / 5;
        case DegreeClass::dlog: return std::log(n);
        case DegreeClass::dlog10: return std::log10(n);
    }
    return n - 1;
}

int class_degree_cap(DegreeClass c, int n) {
    const int d = static_cast<int>(std::ceil(class_degree(c, n) - 1e-12));
    return std::clamp(d, 2, std::max(2, n - 1));
}

std::string_view to_string(DegreeClass c) {
    switch (c) {
        case DegreeClass::dmax: return "dmax";
        case DegreeClass::d20: return "d20";
        case DegreeClass::dlog: return "dlog";
        case DegreeClass::dlog10: return "dlog10";
    }
    return "dmax";
}

std::optional<DegreeClass> parse_degree_class(std::string_view name) {
    for (auto c : {DegreeClass::dmax, DegreeClass::d20, DegreeClass::dlog, DegreeClass::dlog10}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

namespace {
const double kLog10E = std::log10(std::numbers::e);

double factor_count(FactorCount f, double n) { return f == FactorCount::n ? n : n - 1; }

ComplexityModel baseline(std::string name, std::function<double(double)> log10_steps) {
    ComplexityModel m;
    m.name = std::move(name);
    m.log10_steps = std::move(log10_steps);
    return m;
}
}  // namespace

ComplexityModel brute_force_classic() {
    return baseline("b_f_classic", [](double n) { return 0.5 * std::log10(n) + n * (std::log10(n) - kLog10E); });
}

ComplexityModel brute_force_quantum() {
    return baseline("b_f_quantum",
                    [](double n) { return std::log10(n) + (n - 1) / 2 * (std::log10(n) - kLog10E); });
}

ComplexityModel best_classical() {
    return baseline("best_cl", [](double n) { return n * std::log10(2.0); });
}

ComplexityModel best_quantum() {
    return baseline("best_q", [](double n) { return n * std::log10(1.728); });
}

ComplexityModel probabilistic_walk(DegreeClass c, FactorCount factors) {
    ComplexityModel m;
    m.name = "our_" + std::string(to_string(c));
    m.log10_steps = [c, factors](double n) {
        return std::log10(n) + factor_count(factors, n) * std::log10(class_degree(c, n));
    };
    m.degree_class = c;
    m.factors = factors;
    m.domain_min = c == DegreeClass::dlog10 ? 11 : 3;
    return m;
}

ComplexityModel interference_walk(DegreeClass c, FactorCount factors) {
    ComplexityModel m = probabilistic_walk(c, factors);
    m.name = "q_" + m.name;
    m.log10_steps = [c, factors](double n) {
        return std::log10(n) + factor_count(factors, n) / 2 * std::log10(class_degree(c, n));
    };
    return m;
}

std::vector<ComplexityModel> builtin_models() {
    using enum DegreeClass;
    return {
        probabilistic_walk(dmax),    brute_force_classic(),      probabilistic_walk(d20),
        probabilistic_walk(dlog),    brute_force_quantum(),      probabilistic_walk(dlog10),
        best_classical(),            best_quantum(),             interference_walk(dmax),
        interference_walk(d20),      interference_walk(dlog),    interference_walk(dlog10),
    };
}

std::vector<ComplexityModel> model_set(std::string_view name) {
    auto all = builtin_models();
    if (name == "all") return all;
    if (name == "fig2") {
        std::erase_if(all, [](const ComplexityModel& m) { return m.name == "best_cl" || m.name == "best_q"; });
        return all;
    }
    if (name == "fig3") {
        std::erase_if(all, [](const ComplexityModel& m) {
            return !(m.name.starts_with("q_our_") || m.name == "best_cl" || m.name == "best_q");
        });
        return all;
    }
    throw DomainMismatch("unknown model set '" + std::string(name) + "' (expected fig2, fig3 or all)");
}

ComplexityModel find_model(std::string_view name) {
    for (auto& m : builtin_models()) {
        if (m.name == name) return m;
    }
    throw DomainMismatch("unknown model '" + std::string(name) + "'");
}

GrowthConditions check_growth_conditions(std::span<const int> degrees) {
    const auto n = static_cast<double>(degrees.size());
    GrowthConditions out;
    out.log10_product = detail::log10_product(degrees);
    const double log_base = std::log10(std::log10(n));
    out.below_log_n_power = std::isfinite(log_base) && out.log10_product < n * log_base;
    // 1.728^(2n) = (1728/1000)^(2n) and 2.985984^n = (2985984/10^6)^n are the same
    // number reached by two integer routes.
    using boost::multiprecision::cpp_int;
    const auto k = static_cast<unsigned>(degrees.size());
    cpp_int product = 1;
    for (int d : degrees) product *= d;
    out.below_1728_2n = product * boost::multiprecision::pow(cpp_int(1000), 2 * k) <
                        boost::multiprecision::pow(cpp_int(1728), 2 * k);
    out.below_2986_n = detail::product_below_power(degrees, 2985984, 1000000);
    return out;
}

GrowthConditions check_growth_conditions(double degree, int n) {
    GrowthConditions out;
    const double log_d = std::log10(degree);
    out.log10_product = n * log_d;
    const double log_base = std::log10(std::log10(static_cast<double>(n)));
    out.below_log_n_power = std::isfinite(log_base) && log_d < log_base;
    out.below_1728_2n = log_d < 2 * std::log10(1.728);
    out.below_2986_n = log_d < std::log10(1.728 * 1.728);
    return out;
}

std::optional<int> crossover(const ComplexityModel& a, const ComplexityModel& b, int n_min, int n_max) {
    if (n_min > n_max) {
        throw DomainMismatch("empty range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    if (!a.in_domain(n_min) || !b.in_domain(n_min)) {
        throw DomainMismatch("range starts at " + std::to_string(n_min) + ", outside the domain of " +
                             (a.in_domain(n_min) ? b.name : a.name));
    }
    std::optional<int> first;
    for (int n = n_max; n >= n_min; --n) {
        if (!(a.eval(n) < b.eval(n))) break;
        first = n;
    }
    return first;
}

namespace {

void check_range(int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max) {
        throw DomainMismatch("invalid range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
}

}  // namespace

std::string emit_curves_csv(std::span<const ComplexityModel> models, int n_min, int n_max) {
    check_range(n_min, n_max);
    std::string out = "n";
    for (const auto& m : models) out += "," + m.name;
    out += '\n';
    char cell[64];
    for (int n = n_min; n <= n_max; ++n) {
        out += std::to_string(n);
        for (const auto& m : models) {
            out += ',';
            if (!m.in_domain(n)) continue;
            std::snprintf(cell, sizeof cell, "%.6f", m.eval(n));
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string emit_curves_json(std::span<const ComplexityModel> models, int n_min, int n_max) {
    check_range(n_min, n_max);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const auto& m : models) {
            values[m.name] = m.in_domain(n) ? nlohmann::ordered_json(std::round(m.eval(n) * 1e6) / 1e6)
                                            : nlohmann::ordered_json(nullptr);
        }
        rows.push_back({{"n", n}, {"values", std::move(values)}});
    }
    return rows.dump() + '\n';
}

}  // namespace hcplab
