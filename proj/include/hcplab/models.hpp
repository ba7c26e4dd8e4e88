#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcplab {

/// Maximum-degree classes of the probabilistic families.
enum class DegreeClass { dmax, d20, dlog, dlog10 };

/// Real-valued d(n): n-1, n/5, ln n, log10 n.
double class_degree(DegreeClass c, double n);

/// d(n) rounded up and clamped to [2, n-1], for graph generation.
int class_degree_cap(DegreeClass c, int n);

std::string_view to_string(DegreeClass c);
std::optional<DegreeClass> parse_degree_class(std::string_view name);

/// Number of degree factors in the product: all n, or n-1 as in the per-cycle frequency.
enum class FactorCount { n, n_minus_1 };

/// Named step-count curve evaluated in log space.
struct ComplexityModel {
    std::string name;
    std::function<double(double)> log10_steps;
    std::optional<DegreeClass> degree_class;
    FactorCount factors = FactorCount::n;
    int domain_min = 3;

    bool in_domain(int n) const { return n >= domain_min; }
    double eval(int n) const { return log10_steps(static_cast<double>(n)); }
};

ComplexityModel brute_force_classic();   ///< sqrt(n) (n/e)^n
ComplexityModel brute_force_quantum();   ///< n (n/e)^((n-1)/2)
ComplexityModel best_classical();        ///< 2^n
ComplexityModel best_quantum();          ///< 1.728^n
/// n prod d_i with d_i = d(n).
ComplexityModel probabilistic_walk(DegreeClass c, FactorCount factors = FactorCount::n);
/// n sqrt(prod d_i) with d_i = d(n).
ComplexityModel interference_walk(DegreeClass c, FactorCount factors = FactorCount::n);

/// The twelve built-in models in a fixed order.
std::vector<ComplexityModel> builtin_models();

/// "fig2", "fig3" or "all". Throws DomainMismatch for other names.
std::vector<ComplexityModel> model_set(std::string_view name);

/// Throws DomainMismatch when unknown.
ComplexityModel find_model(std::string_view name);

/// prod d_i < (log10 n)^n, prod d_i < 1.728^(2n), prod d_i < 2.985984^n.
struct GrowthConditions {
    bool below_log_n_power = false;
    bool below_1728_2n = false;
    bool below_2986_n = false;
    double log10_product = 0;
};

/// Exact for the two power bounds (big-integer comparison); log space for (log10 n)^n.
GrowthConditions check_growth_conditions(std::span<const int> degrees);
/// Uniform real degree d on n vertices, all in log space.
GrowthConditions check_growth_conditions(double degree, int n);

/// Smallest n in [n_min, n_max] from which a.eval < b.eval holds through n_max.
/// Throws DomainMismatch when the range leaves either model's domain.
std::optional<int> crossover(const ComplexityModel& a, const ComplexityModel& b, int n_min, int n_max);

/// "n,<names>" header then one row per n with 6-decimal log10 values;
/// cells outside a model's domain are empty.
std::string emit_curves_csv(std::span<const ComplexityModel> models, int n_min, int n_max);

/// [{"n": n, "values": {name: value|null}}] with values rounded to 6 decimals.
std::string emit_curves_json(std::span<const ComplexityModel> models, int n_min, int n_max);

}  // namespace hcplab
