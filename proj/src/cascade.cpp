#include "gfm/cascade.hpp"

namespace gfm {

Eigen::Matrix<double, CascadeState::dim, 1> CascadeState::to_vector() const {
    Eigen::Matrix<double, dim, 1> v;
    v << xi_vd, xi_vq, xi_id, xi_iq;
    return v;
}

CascadeState CascadeState::from_vector(const Eigen::Ref<const Eigen::VectorXd>& v) {
    CascadeState xs;
    xs.xi_vd = v(0);
    xs.xi_vq = v(1);
    xs.xi_id = v(2);
    xs.xi_iq = v(3);
    return xs;
}

CascadeCommands cascade_commands(const CascadeState& xs, const PlantState& x, double E_u,
                                 const CascadeGains& g, const PlantParams& prm) {
    CascadeCommands c;
    c.i_dref = g.k_pv * (E_u - x.v_d) + g.k_iv * xs.xi_vd - prm.C_f * x.v_q + g.k_ffi * x.i_od;
    c.i_qref = g.k_pv * (-x.v_q) + g.k_iv * xs.xi_vq + prm.C_f * x.v_d + g.k_ffi * x.i_oq;
    c.e_dref = g.k_pi * (c.i_dref - x.i_d) + g.k_ii * xs.xi_id - prm.L_f * x.i_q + g.k_ffv * x.v_d;
    c.e_qref = g.k_pi * (c.i_qref - x.i_q) + g.k_ii * xs.xi_iq + prm.L_f * x.i_d + g.k_ffv * x.v_q;
    return c;
}

CascadeState cascade_deriv(const CascadeState& xs, const PlantState& x, double E_u,
                           const CascadeGains& g, const PlantParams& prm) {
    const CascadeCommands c = cascade_commands(xs, x, E_u, g, prm);
    CascadeState d;
    d.xi_vd = E_u - x.v_d;
    d.xi_vq = -x.v_q;
    d.xi_id = c.i_dref - x.i_d;
    d.xi_iq = c.i_qref - x.i_q;
    return d;
}

}  // namespace gfm
