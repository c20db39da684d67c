#pragma once

#include <optional>

namespace emaware::em {

/// Boltzmann constant in eV/K.
inline constexpr double kBoltzmannEv = 8.617333262e-5;

inline constexpr double celsius_to_kelvin(double celsius) { return celsius + 273.15; }

/**
 * Process/temperature parameters of Black's law.
 *
 * scale_a is an arbitrary scale: absolute MTF values are only meaningful as
 * ratios between two evaluations that share the same TechParams.
 */
struct TechParams {
    double scale_a = 1.0;
    double exponent_n = 2.0;
    double activation_energy_ev = 0.0;
    double temperature_k = celsius_to_kelvin(125.0);

    void validate() const;
};

/// Metal cross-section, meters.
struct WireGeometry {
    double width_m = 1.0;
    double height_m = 1.0;

    void validate() const;
};

/// Switching characteristics of one net. frequency_hz doubles as Fmax in the RMS model.
struct SignalElectricals {
    double capacitance_f = 0.0;
    double supply_v = 1.0;
    double frequency_hz = 1.0;
    double toggle_p = 1.0;
    double rise_s = 1.0;
    double fall_s = 1.0;

    void validate() const;
};

/// Foundry RMS sign-off limit: I_RMS-max (A) guaranteed for mtf_technology (years).
struct RmsLimit {
    double i_rms_max_a = 1.0;
    double mtf_technology_years = 10.0;

    void validate() const;
};

/// A / J^n * exp(Ea / (kB T)). Throws DomainError for J <= 0.
double black_mtf(const TechParams& tech, double current_density);

/// (C VDD / (W H)) * p * f, in A/m^2.
double current_density(const SignalElectricals& sig, const WireGeometry& geom);

/// I_RMS-max * sqrt(MTF_technology / MTF_reduced).
double reduced_rms_current(const RmsLimit& limit, double mtf_reduced_years);

/// Lifetime multiplier (1 / ratio)^2 for a reduced-to-max RMS current ratio in (0, 1].
double lifetime_extension_from_current_ratio(double current_ratio);

double k1(const TechParams& tech, const WireGeometry& geom);
double k2(const SignalElectricals& sig);

/**
 * RMS-EM median time to failure:
 *   ((K1/K2)^2 / (C^2 VDD^2) / (Fmax p))^(n/2)
 * with the n/2 exponent applied to the whole bracket.
 *
 * Returns std::nullopt when toggle_p == 0: a net that never switches has no
 * finite RMS-EM lifetime.
 */
std::optional<double> rms_em_mtf(const TechParams& tech, const WireGeometry& geom,
                                 const SignalElectricals& sig);

/// p_max_original / p_max_aware - 1. Raw maximum counts from equal-length runs are accepted.
double mtf_improvement(double p_max_original, double p_max_aware);

} // namespace emaware::em
