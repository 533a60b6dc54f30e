#include "vacuum/particles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"

namespace vacuum {

namespace {

// Rest energies in eV (PDG 2022 central values). Only the charge content of
// the standard-model table is load-bearing: leptons contribute 3, the six
// colour-counted quarks 3*3*(4/9) + 3*3*(1/9) = 5 and the W boson 1, for a
// total sum of squared charges of 9. The W has no spin-1 weight here and is
// entered with the spin-1/2 weight.
constexpr std::string_view electron_doc = R"({
  "label": "electron",
  "particles": [
    {"name": "e", "charge_e": -1, "mass_ev": 510998.95, "spin": "half", "multiplicity": 1}
  ]
})";

constexpr std::string_view leptons_doc = R"({
  "label": "leptons",
  "particles": [
    {"name": "e",   "charge_e": -1, "mass_ev": 510998.95,   "spin": "half", "multiplicity": 1},
    {"name": "mu",  "charge_e": -1, "mass_ev": 105658375.5, "spin": "half", "multiplicity": 1},
    {"name": "tau", "charge_e": -1, "mass_ev": 1776860000,  "spin": "half", "multiplicity": 1}
  ]
})";

constexpr std::string_view standard_model_doc = R"({
  "label": "standard-model",
  "particles": [
    {"name": "e",   "charge_e": -1,       "mass_ev": 510998.95,    "spin": "half", "multiplicity": 1},
    {"name": "mu",  "charge_e": -1,       "mass_ev": 105658375.5,  "spin": "half", "multiplicity": 1},
    {"name": "tau", "charge_e": -1,       "mass_ev": 1776860000,   "spin": "half", "multiplicity": 1},
    {"name": "u",   "charge_e": 0.6666666666666666, "mass_ev": 2160000,      "spin": "half", "multiplicity": 3},
    {"name": "c",   "charge_e": 0.6666666666666666, "mass_ev": 1270000000,   "spin": "half", "multiplicity": 3},
    {"name": "t",   "charge_e": 0.6666666666666666, "mass_ev": 172690000000, "spin": "half", "multiplicity": 3},
    {"name": "d",   "charge_e": -0.3333333333333333, "mass_ev": 4670000,     "spin": "half", "multiplicity": 3},
    {"name": "s",   "charge_e": -0.3333333333333333, "mass_ev": 93400000,    "spin": "half", "multiplicity": 3},
    {"name": "b",   "charge_e": -0.3333333333333333, "mass_ev": 4180000000,  "spin": "half", "multiplicity": 3},
    {"name": "W",   "charge_e": 1,        "mass_ev": 80377000000,  "spin": "half", "multiplicity": 1}
  ]
})";

constexpr std::string_view higgs_doc = R"({
  "label": "charged-higgs",
  "particles": [
    {"name": "H+", "charge_e": 1,  "mass_ev": 5e11, "spin": "zero", "multiplicity": 1},
    {"name": "H-", "charge_e": -1, "mass_ev": 5e11, "spin": "zero", "multiplicity": 1}
  ]
})";

Spin parse_spin(const std::string& s, const std::string& who) {
    if (s == "half") return Spin::half;
    if (s == "zero") return Spin::zero;
    throw ValidationError("particle '" + who + "': spin must be \"half\" or \"zero\", got \"" + s + "\"");
}

}  // namespace

std::string_view to_string(Spin s) { return s == Spin::half ? "half" : "zero"; }

const ChargedParticle& ParticleSet::lightest() const {
    return *std::min_element(particles_.begin(), particles_.end(),
                             [](const auto& a, const auto& b) { return a.mass_ev < b.mass_ev; });
}

const ChargedParticle& ParticleSet::heaviest() const {
    return *std::max_element(particles_.begin(), particles_.end(),
                             [](const auto& a, const auto& b) { return a.mass_ev < b.mass_ev; });
}

ParticleSet ParticleSet::merged_with(const ParticleSet& other, std::string label) const {
    auto all = particles_;
    all.insert(all.end(), other.particles_.begin(), other.particles_.end());
    return make_particle_set(std::move(label), std::move(all));
}

ParticleSet make_particle_set(std::string label, std::vector<ChargedParticle> particles) {
    if (particles.empty()) throw ValidationError("particle set '" + label + "' is empty");
    std::set<std::string> seen;
    for (const auto& p : particles) {
        if (p.name.empty()) throw ValidationError("particle set '" + label + "': particle with empty name");
        if (!seen.insert(p.name).second)
            throw ValidationError("particle '" + p.name + "': duplicate name in set '" + label + "'");
        if (!(p.mass_ev > 0.0)) throw ValidationError("particle '" + p.name + "': mass_ev must be positive");
        if (p.charge_e == 0.0 || !std::isfinite(p.charge_e))
            throw ValidationError("particle '" + p.name + "': charge_e must be non-zero");
        if (p.multiplicity < 1) throw ValidationError("particle '" + p.name + "': multiplicity must be >= 1");
    }
    return ParticleSet(std::move(label), std::move(particles));
}

ParticleSet load_particle_set(std::string_view config_document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(config_document);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ValidationError(std::string("particle document is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ValidationError("particle document must be a JSON object");
    if (!doc.contains("label") || !doc["label"].is_string())
        throw ValidationError("particle document: \"label\" must be a string");
    if (!doc.contains("particles") || !doc["particles"].is_array())
        throw ValidationError("particle document: \"particles\" must be an array");

    const std::string label = doc["label"].get<std::string>();
    std::vector<ChargedParticle> out;
    std::size_t index = 0;
    for (const auto& entry : doc["particles"]) {
        const std::string where = "entry " + std::to_string(index++);
        if (!entry.is_object()) throw ValidationError("particle " + where + " is not an object");
        if (!entry.contains("name") || !entry["name"].is_string())
            throw ValidationError("particle " + where + ": \"name\" must be a string");
        ChargedParticle p;
        p.name = entry["name"].get<std::string>();
        for (const char* key : {"charge_e", "mass_ev"}) {
            if (!entry.contains(key) || !entry[key].is_number())
                throw ValidationError("particle '" + p.name + "': \"" + key + "\" must be a number");
        }
        p.charge_e = entry["charge_e"].get<double>();
        p.mass_ev = entry["mass_ev"].get<double>();
        if (entry.contains("spin")) {
            if (!entry["spin"].is_string()) throw ValidationError("particle '" + p.name + "': \"spin\" must be a string");
            p.spin = parse_spin(entry["spin"].get<std::string>(), p.name);
        }
        if (entry.contains("multiplicity")) {
            if (!entry["multiplicity"].is_number_integer())
                throw ValidationError("particle '" + p.name + "': \"multiplicity\" must be an integer");
            p.multiplicity = entry["multiplicity"].get<int>();
        }
        out.push_back(std::move(p));
    }
    return make_particle_set(label, std::move(out));
}

const std::vector<std::string>& builtin_set_names() {
    static const std::vector<std::string> names{"electron", "leptons", "standard-model", "standard-model+higgs"};
    return names;
}

std::string builtin_document(std::string_view name) {
    if (name == "electron") return std::string(electron_doc);
    if (name == "leptons") return std::string(leptons_doc);
    if (name == "standard-model") return std::string(standard_model_doc);
    if (name == "standard-model+higgs") {
        auto doc = nlohmann::json::parse(standard_model_doc);
        const auto extra = nlohmann::json::parse(higgs_doc);
        for (const auto& p : extra["particles"]) doc["particles"].push_back(p);
        doc["label"] = "standard-model+higgs";
        return doc.dump(2);
    }
    throw ValidationError("unknown built-in particle set '" + std::string(name) + "'");
}

ParticleSet builtin_particle_set(std::string_view name) { return load_particle_set(builtin_document(name)); }

double charge_square_sum(const ParticleSet& set) {
    double sum = 0.0;
    for (const auto& p : set) sum += p.charge_weight();
    return sum;
}

PairScales pair_scales(const ChargedParticle& p) {
    const auto& pc = constants();
    const double lambda_c = pc.compton_wavelength(p.mass_ev);
    const double range = 0.5 * lambda_c;
    return {lambda_c, range / pc.c, range};
}

}  // namespace vacuum
