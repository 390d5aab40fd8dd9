#pragma once

// Physical constants in CGS-Gaussian units. Everything downstream reads from
// here; eV and Angstrom appear only at I/O boundaries.

namespace bohmrad {

struct PhysicalConstants {
    double hbar;         // reduced Planck constant [erg s]
    double m_e;          // electron mass [g]
    double e_charge;     // elementary charge [statC]
    double c_light;      // speed of light [cm/s]
    double r_e;          // classical electron radius e^2/(m c^2) [cm]
    double lambdabar_c;  // reduced Compton wavelength hbar/(m c) [cm]
    double erg_per_eV;   // conversion factor [erg/eV]

    constexpr double mc2() const { return m_e * c_light * c_light; }            // [erg]
    constexpr double fine_structure() const {
        return e_charge * e_charge / (hbar * c_light);
    }
    constexpr double erg_to_eV(double erg) const { return erg / erg_per_eV; }
    constexpr double eV_to_erg(double eV) const { return eV * erg_per_eV; }
};

// Builds a constant set from the four primaries; r_e and lambdabar_c are
// derived so the definitional identities hold to machine precision.
constexpr PhysicalConstants make_constants(double hbar, double m_e, double e_charge,
                                           double c_light) {
    return PhysicalConstants{
        hbar,
        m_e,
        e_charge,
        c_light,
        e_charge * e_charge / (m_e * c_light * c_light),
        hbar / (m_e * c_light),
        1.602176634e-12,
    };
}

// CODATA-style inputs.
constexpr PhysicalConstants constants() {
    return make_constants(1.054571817e-27, 9.1093837015e-28, 4.80320471257e-10,
                          2.99792458e10);
}

}  // namespace bohmrad
