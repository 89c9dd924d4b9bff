#include "marsnet/feasibility.hpp"

#include <cmath>
#include <stdexcept>

namespace marsnet {

void LinkReference::validate() const {
    if (!(power_w > 0.0)) throw std::invalid_argument("link reference power_w must be > 0");
    if (!(data_rate_bps > 0.0))
        throw std::invalid_argument("link reference data_rate_bps must be > 0");
    if (!(distance_km > 0.0))
        throw std::invalid_argument("link reference distance_km must be > 0");
}

double scale_power_w(const LinkReference& reference, double new_distance_km) {
    reference.validate();
    if (!(new_distance_km > 0.0))
        throw std::invalid_argument("scale_power_w new_distance_km must be > 0");
    const double ratio = new_distance_km / reference.distance_km;
    return reference.power_w * ratio * ratio;
}

double attenuation_factor(double attenuation_db) {
    if (!(attenuation_db >= 0.0))
        throw std::invalid_argument("attenuation_db must be >= 0");
    return std::pow(10.0, -attenuation_db / 10.0);
}

double expected_soft_errors(double rate_per_processor_day, double processors, double days) {
    if (rate_per_processor_day < 0.0 || processors < 0.0 || days < 0.0)
        throw std::invalid_argument("expected_soft_errors arguments must be >= 0");
    return rate_per_processor_day * processors * days;
}

MassOverhead mass_overhead(const MassBudget& budget) {
    if (!(budget.payload_kg > 0.0))
        throw std::domain_error("mass overhead needs payload_kg > 0");
    double total = 0.0;
    for (const auto& [name, kg] : budget.edl_components_kg) {
        if (kg < 0.0)
            throw std::domain_error("EDL component '" + name + "' has negative mass");
        total += kg;
    }
    return {total, total / budget.payload_kg};
}

MassBudget mars2020_mass_budget() {
    MassBudget budget;
    budget.payload_kg = 1025.0;
    budget.edl_components_kg = {{"backshell", 575.0},
                                {"heat_shield", 440.0},
                                {"descent_stage", 670.0},
                                {"propellant", 400.0}};
    return budget;
}

}  // namespace marsnet
