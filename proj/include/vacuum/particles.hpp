#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vacuum {

enum class Spin { half, zero };

std::string_view to_string(Spin s);

struct ChargedParticle {
    std::string name;
    double charge_e;       ///< q / e
    double mass_ev;        ///< rest energy m c^2
    Spin spin = Spin::half;
    int multiplicity = 1;  ///< colour count for quarks

    /// multiplicity * (q/e)^2
    double charge_weight() const { return multiplicity * charge_e * charge_e; }
};

/// Ordered, validated species table. Construct through make_particle_set,
/// load_particle_set or builtin_particle_set.
class ParticleSet {
public:
    const std::string& label() const { return label_; }
    const std::vector<ChargedParticle>& particles() const { return particles_; }
    auto begin() const { return particles_.begin(); }
    auto end() const { return particles_.end(); }
    std::size_t size() const { return particles_.size(); }
    const ChargedParticle& lightest() const;
    const ChargedParticle& heaviest() const;

    /// Disjoint union; throws ValidationError on a repeated name.
    ParticleSet merged_with(const ParticleSet& other, std::string label) const;

    friend ParticleSet make_particle_set(std::string label, std::vector<ChargedParticle> particles);

private:
    ParticleSet(std::string label, std::vector<ChargedParticle> particles)
        : label_(std::move(label)), particles_(std::move(particles)) {}

    std::string label_;
    std::vector<ChargedParticle> particles_;
};

/// Validates and builds a set. Throws ValidationError naming the offending entry.
ParticleSet make_particle_set(std::string label, std::vector<ChargedParticle> particles);

/// Parses the JSON particle document
/// {"label": ..., "particles": [{"name", "charge_e", "mass_ev", "spin", "multiplicity"}]}.
/// "spin" defaults to "half" and "multiplicity" to 1 when absent.
ParticleSet load_particle_set(std::string_view config_document);

/// Names accepted by builtin_particle_set.
const std::vector<std::string>& builtin_set_names();
/// JSON document of a built-in table; throws ValidationError for an unknown name.
std::string builtin_document(std::string_view name);
ParticleSet builtin_particle_set(std::string_view name);

/// Sum over species of multiplicity * (q/e)^2.
double charge_square_sum(const ParticleSet& set);

/// Uncertainty-principle scales of a virtual pair.
struct PairScales {
    double compton_wavelength;  ///< hbar / (m c), m
    double lifetime;            ///< hbar / (2 m c^2), s
    double range;               ///< hbar / (2 m c), m
};

PairScales pair_scales(const ChargedParticle& p);

}  // namespace vacuum
