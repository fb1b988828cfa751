#pragma once

#include <Eigen/Dense>

namespace gfm {

/// Per-unit electrical parameters of the power stage, LC filter, grid line,
/// DC link and modulation delay.
struct PlantParams {
    double L_f = 0.0326;             ///< filter inductance [p.u.]
    double C_f = 0.0454;             ///< filter capacitance [p.u.]
    double L_g = 0.087;              ///< line inductance [p.u.]
    double R_g = 0.01;               ///< line resistance [p.u.]
    double C_dc = 15.3938;           ///< DC-link capacitance [p.u.]
    double T_sw = 1e-4;              ///< switching cycle [s]
    double omega_b = 100.0 * M_PI;   ///< base angular frequency [rad/s]
    double V_g = 1.0;                ///< grid voltage magnitude [p.u.]
    double omega_g = 1.0;            ///< grid frequency [p.u.]
};

/// Throws std::domain_error if a parameter is out of range.
void validate(const PlantParams& prm);

/// Power-stage states in the controller dq frame. The ordering below is the
/// canonical one used by every vector, Jacobian and CSV layout.
struct PlantState {
    double e_d = 0.0;    ///< converter voltage behind the modulation delay, d axis [p.u.]
    double e_q = 0.0;    ///< converter voltage behind the modulation delay, q axis [p.u.]
    double i_d = 0.0;    ///< filter inductor current, d axis [p.u.]
    double i_q = 0.0;    ///< filter inductor current, q axis [p.u.]
    double v_d = 0.0;    ///< filter capacitor voltage, d axis [p.u.]
    double v_q = 0.0;    ///< filter capacitor voltage, q axis [p.u.]
    double i_od = 0.0;   ///< line current, d axis [p.u.]
    double i_oq = 0.0;   ///< line current, q axis [p.u.]
    double v_dc = 0.0;   ///< DC-link voltage [p.u.]
    double delta = 0.0;  ///< controller frame angle relative to the grid frame [rad]

    static constexpr int dim = 10;
    Eigen::Matrix<double, dim, 1> to_vector() const;
    static PlantState from_vector(const Eigen::Ref<const Eigen::VectorXd>& v);
};

/// The three commands a grid-forming controller provides.
struct ControlInput {
    double i_u = 0.0;      ///< DC-source current command [p.u.]
    double omega_u = 1.0;  ///< frequency command [p.u.]
    double E_u = 1.0;      ///< voltage-magnitude reference for the cascade [p.u.]
};

/// The five measured quantities fed back to the outer controller.
struct PlantOutputs {
    double v_dc = 0.0;
    double p = 0.0;
    double omega_u = 0.0;
    double q = 0.0;
    double V = 0.0;

    static constexpr int dim = 5;
    Eigen::Matrix<double, dim, 1> to_vector() const;
};

/// Time derivative of the power-stage states (per second). e_dref/e_qref are
/// the converter-voltage references entering the modulation delay.
PlantState plant_deriv(const PlantState& x, double e_dref, double e_qref,
                       const ControlInput& u, const PlantParams& prm);

/// Output map: active/reactive power, voltage magnitude, DC voltage and the
/// commanded frequency passed through.
PlantOutputs plant_outputs(const PlantState& x, const ControlInput& u);

/// Component values as installed (SI units).
struct SiParams {
    double L_f = 3e-3;    ///< [H]
    double C_f = 5e-6;    ///< [F]
    double L_g = 8e-3;    ///< [H]
    double C_dc = 500e-6; ///< [F]
    double f_sw = 10e3;   ///< [Hz]
    double V_g = 380.0;   ///< line-to-line RMS [V]
    double omega_g = 100.0 * M_PI;  ///< [rad/s]
    double R_g_pu = 0.01; ///< line resistance, already per-unit
};

/// Per-unit bases. The DC side uses its own voltage base with the common
/// power base, so the DC equation keeps the same omega_b scaling as the AC ones.
struct PuBases {
    double S_n = 5e3;          ///< [VA]
    double V_n = 380.0;        ///< line-to-line RMS [V]
    double omega_n = 100.0 * M_PI;  ///< [rad/s]
    double V_dc_base = 700.0;  ///< [V]
};

/// Per-unitize an SI record on the given bases.
PlantParams params_from_si(const SiParams& si, const PuBases& bases);

}  // namespace gfm
