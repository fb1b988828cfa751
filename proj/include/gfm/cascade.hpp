#pragma once

#include "gfm/plant.hpp"

namespace gfm {

/// Gains of the cascaded voltage/current PI controllers and the two
/// feedforward terms. All dimensionless (p.u. on p.u.).
struct CascadeGains {
    double k_pv = 0.0;   ///< voltage-loop proportional gain
    double k_iv = 0.0;   ///< voltage-loop integral gain
    double k_pi = 0.0;   ///< current-loop proportional gain
    double k_ii = 0.0;   ///< current-loop integral gain
    double k_ffi = 0.0;  ///< output-current feedforward into the current references
    double k_ffv = 0.0;  ///< capacitor-voltage feedforward into the voltage references
};

/// Integrator states of the two PI pairs.
struct CascadeState {
    double xi_vd = 0.0;
    double xi_vq = 0.0;
    double xi_id = 0.0;
    double xi_iq = 0.0;

    static constexpr int dim = 4;
    Eigen::Matrix<double, dim, 1> to_vector() const;
    static CascadeState from_vector(const Eigen::Ref<const Eigen::VectorXd>& v);
};

struct CascadeCommands {
    double e_dref = 0.0;
    double e_qref = 0.0;
    double i_dref = 0.0;
    double i_qref = 0.0;
};

/// Voltage and current references produced by the cascade. The q-axis voltage
/// reference is zero, so the voltage loop regulates (E_u, 0).
CascadeCommands cascade_commands(const CascadeState& xs, const PlantState& x, double E_u,
                                 const CascadeGains& g, const PlantParams& prm);

/// Integrator derivatives; the current-loop errors use the references from
/// cascade_commands.
CascadeState cascade_deriv(const CascadeState& xs, const PlantState& x, double E_u,
                           const CascadeGains& g, const PlantParams& prm);

}  // namespace gfm
