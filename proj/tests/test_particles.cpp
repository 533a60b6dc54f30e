#include <cmath>

#include <gtest/gtest.h>

#include "vacuum/constants.hpp"
#include "vacuum/errors.hpp"
#include "vacuum/particles.hpp"

using namespace vacuum;

TEST(ParticleSets, BuiltinChargeSums) {
    EXPECT_NEAR(charge_square_sum(builtin_particle_set("electron")), 1.0, 1e-15);
    EXPECT_NEAR(charge_square_sum(builtin_particle_set("leptons")), 3.0, 1e-15);
    EXPECT_NEAR(charge_square_sum(builtin_particle_set("standard-model")), 9.0, 1e-12);
    EXPECT_NEAR(charge_square_sum(builtin_particle_set("standard-model+higgs")), 11.0, 1e-12);
}

TEST(ParticleSets, BuiltinsPreserveOrderAndLabel) {
    const auto leptons = builtin_particle_set("leptons");
    EXPECT_EQ(leptons.label(), "leptons");
    ASSERT_EQ(leptons.size(), 3u);
    EXPECT_EQ(leptons.particles()[0].name, "e");
    EXPECT_EQ(leptons.particles()[1].name, "mu");
    EXPECT_EQ(leptons.particles()[2].name, "tau");
    for (const auto& p : leptons) EXPECT_EQ(p.charge_e, -1.0);
    EXPECT_EQ(leptons.lightest().name, "e");
    EXPECT_EQ(leptons.heaviest().name, "tau");
    for (const auto& name : builtin_set_names()) EXPECT_NO_THROW(builtin_particle_set(name));
}

TEST(ParticleSets, HiggsAreSpinZero) {
    const auto set = builtin_particle_set("standard-model+higgs");
    int higgs = 0;
    for (const auto& p : set)
        if (p.name.starts_with("H")) {
            ++higgs;
            EXPECT_EQ(p.spin, Spin::zero);
            EXPECT_EQ(p.mass_ev, 5e11);
        }
    EXPECT_EQ(higgs, 2);
}

TEST(ParticleSets, LoadsDefaults) {
    const auto set = load_particle_set(R"({"label": "x", "particles": [{"name": "a", "charge_e": 2, "mass_ev": 1e6}]})");
    ASSERT_EQ(set.size(), 1u);
    EXPECT_EQ(set.particles()[0].spin, Spin::half);
    EXPECT_EQ(set.particles()[0].multiplicity, 1);
    EXPECT_DOUBLE_EQ(charge_square_sum(set), 4.0);
}

TEST(ParticleSets, ValidationErrors) {
    auto expect_error = [](const char* doc, const char* needle) {
        try {
            load_particle_set(doc);
            ADD_FAILURE() << "no error for " << doc;
        } catch (const ValidationError& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_error(R"({"label": "x", "particles": []})", "empty");
    expect_error(R"({"label": "x", "particles": [{"name": "a", "charge_e": 1, "mass_ev": 1},
                                                  {"name": "a", "charge_e": 1, "mass_ev": 2}]})", "'a'");
    expect_error(R"({"label": "x", "particles": [{"name": "m", "charge_e": 1, "mass_ev": 0}]})", "'m'");
    expect_error(R"({"label": "x", "particles": [{"name": "m", "charge_e": 1, "mass_ev": -5}]})", "mass_ev");
    expect_error(R"({"label": "x", "particles": [{"name": "q", "charge_e": 0, "mass_ev": 1}]})", "'q'");
    expect_error(R"({"label": "x", "particles": [{"name": "s", "charge_e": 1, "mass_ev": 1, "spin": "one"}]})", "spin");
    expect_error(R"({"label": "x", "particles": [{"name": "k", "charge_e": 1, "mass_ev": 1, "multiplicity": 0}]})",
                 "multiplicity");
    expect_error(R"({"label": "x", "particles": [{"name": "n", "mass_ev": 1}]})", "charge_e");
    expect_error(R"({"particles": []})", "label");
    expect_error(R"(not json)", "JSON");
    EXPECT_THROW(builtin_particle_set("quarks"), ValidationError);
}

TEST(ParticleSets, ChargeSumAdditiveUnderDisjointUnion) {
    const auto leptons = builtin_particle_set("leptons");
    const auto extra = load_particle_set(
        R"({"label": "extra", "particles": [{"name": "X", "charge_e": 0.5, "mass_ev": 1e9, "multiplicity": 3}]})");
    const auto both = leptons.merged_with(extra, "both");
    EXPECT_DOUBLE_EQ(charge_square_sum(both), charge_square_sum(leptons) + charge_square_sum(extra));
    EXPECT_THROW(leptons.merged_with(leptons, "dup"), ValidationError);
}

TEST(PairScales, Electron) {
    const auto& pc = constants();
    const auto s = pair_scales(builtin_particle_set("electron").particles()[0]);
    EXPECT_NEAR(s.compton_wavelength, pc.hbar / (pc.m_e * pc.c), 1e-10 * s.compton_wavelength);
    EXPECT_NEAR(s.compton_wavelength, 3.8616e-13, 1e-17);
    const double lifetime = pc.hbar / (2.0 * 510998.95 * pc.e);
    EXPECT_NEAR(s.lifetime / lifetime, 1.0, 1e-14);
    EXPECT_NEAR(s.lifetime, 6.44e-22, 0.005e-22);
}

TEST(PairScales, Identities) {
    for (const auto& p : builtin_particle_set("standard-model+higgs")) {
        const auto s = pair_scales(p);
        EXPECT_EQ(s.range, 0.5 * s.compton_wavelength);
        EXPECT_NEAR(s.lifetime * constants().c / s.range, 1.0, 2e-16);
    }
}

TEST(PairScales, Homogeneity) {
    ChargedParticle light{"a", 1.0, 1e6};
    ChargedParticle heavy{"b", 1.0, 2e6};
    const auto a = pair_scales(light), b = pair_scales(heavy);
    EXPECT_NEAR(b.compton_wavelength / a.compton_wavelength, 0.5, 1e-15);
    EXPECT_NEAR(b.lifetime / a.lifetime, 0.5, 1e-15);
    EXPECT_NEAR(b.range / a.range, 0.5, 1e-15);
}
