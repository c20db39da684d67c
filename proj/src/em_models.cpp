#include "emaware/em_models.hpp"

#include <cmath>
#include <string>

#include "emaware/errors.hpp"

namespace emaware::em {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

double arrhenius(const TechParams& tech)
{
    return std::exp(tech.activation_energy_ev / (kBoltzmannEv * tech.temperature_k));
}

} // namespace

void TechParams::validate() const
{
    require(scale_a > 0, "scale_a must be > 0");
    require(exponent_n > 0, "exponent_n must be > 0");
    require(activation_energy_ev >= 0, "activation energy must be >= 0 eV");
    require(temperature_k > 0, "temperature must be > 0 K");
}

void WireGeometry::validate() const
{
    require(width_m > 0, "wire width must be > 0");
    require(height_m > 0, "wire height must be > 0");
}

void SignalElectricals::validate() const
{
    require(capacitance_f >= 0, "capacitance must be >= 0");
    require(supply_v > 0, "supply voltage must be > 0");
    require(frequency_hz > 0, "frequency must be > 0");
    require(toggle_p >= 0 && toggle_p <= 1, "toggle rate p must lie in [0, 1]");
    require(rise_s > 0, "rise time must be > 0");
    require(fall_s > 0, "fall time must be > 0");
}

void RmsLimit::validate() const
{
    require(i_rms_max_a > 0, "I_RMS-max must be > 0");
    require(mtf_technology_years > 0, "technology MTF must be > 0");
}

double black_mtf(const TechParams& tech, double current_density)
{
    tech.validate();
    require(current_density > 0, "current density J must be > 0");
    return tech.scale_a / std::pow(current_density, tech.exponent_n) * arrhenius(tech);
}

double current_density(const SignalElectricals& sig, const WireGeometry& geom)
{
    sig.validate();
    geom.validate();
    return sig.capacitance_f * sig.supply_v / (geom.width_m * geom.height_m) * sig.toggle_p *
           sig.frequency_hz;
}

double reduced_rms_current(const RmsLimit& limit, double mtf_reduced_years)
{
    limit.validate();
    require(mtf_reduced_years > 0, "reduced MTF must be > 0");
    return limit.i_rms_max_a * std::sqrt(limit.mtf_technology_years / mtf_reduced_years);
}

double lifetime_extension_from_current_ratio(double current_ratio)
{
    require(current_ratio > 0 && current_ratio <= 1, "current ratio must lie in (0, 1]");
    const double inv = 1.0 / current_ratio;
    return inv * inv;
}

double k1(const TechParams& tech, const WireGeometry& geom)
{
    tech.validate();
    geom.validate();
    return tech.scale_a * std::pow(geom.width_m * geom.height_m, tech.exponent_n) * arrhenius(tech);
}

double k2(const SignalElectricals& sig)
{
    require(sig.rise_s > 0, "rise time must be > 0");
    require(sig.fall_s > 0, "fall time must be > 0");
    return std::sqrt(1.0 / sig.rise_s + 1.0 / sig.fall_s);
}

std::optional<double> rms_em_mtf(const TechParams& tech, const WireGeometry& geom,
                                 const SignalElectricals& sig)
{
    sig.validate();
    require(sig.capacitance_f > 0, "capacitance must be > 0 for the RMS model");
    if (sig.toggle_p == 0)
        return std::nullopt;

    const double ratio = k1(tech, geom) / k2(sig);
    const double cv = sig.capacitance_f * sig.supply_v;
    const double bracket = ratio * ratio / (cv * cv) / (sig.frequency_hz * sig.toggle_p);
    return std::pow(bracket, tech.exponent_n / 2.0);
}

double mtf_improvement(double p_max_original, double p_max_aware)
{
    require(p_max_original > 0, "original maximum toggle rate must be > 0");
    require(p_max_aware > 0, "aware maximum toggle rate must be > 0 (improvement unbounded)");
    return p_max_original / p_max_aware - 1.0;
}

} // namespace emaware::em
