// Transmit-power scaling between orbits, dust-storm attenuation, soft-error
// expectation, and entry/descent/landing mass overhead.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace marsnet {

/// Reference radio link: the power needed for a given data rate at a given
/// distance, from which other distances are scaled.
struct LinkReference {
    double power_w;
    double data_rate_bps;
    double distance_km;

    void validate() const;
};

// Free-space inverse-square scaling at fixed rate and margin:
// power * (new_distance / reference_distance)^2.
double scale_power_w(const LinkReference& reference, double new_distance_km);

// Multiplicative received-power factor for a dB attenuation: 10^(-db/10).
double attenuation_factor(double attenuation_db);

// Mean of the independent-Poisson soft-error count: rate * processors * days.
double expected_soft_errors(double rate_per_processor_day, double processors, double days);

/// Landed payload plus the named landing-equipment masses it drags along.
struct MassBudget {
    double payload_kg{};
    std::vector<std::pair<std::string, double>> edl_components_kg;
};

struct MassOverhead {
    double edl_total_kg{};
    double overhead_ratio{};  // edl_total / payload
};

// Throws std::domain_error for payload <= 0 or any negative component mass.
MassOverhead mass_overhead(const MassBudget& budget);

// The Mars 2020 entry/descent/landing budget: 1,025 kg rover landed by
// 2,085 kg of equipment.
MassBudget mars2020_mass_budget();

}  // namespace marsnet
