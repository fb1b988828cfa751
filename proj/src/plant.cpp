#include "gfm/plant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gfm {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(name) + " must be a positive finite value");
}

bool finite(const PlantState& x) {
    return std::isfinite(x.e_d) && std::isfinite(x.e_q) && std::isfinite(x.i_d) &&
           std::isfinite(x.i_q) && std::isfinite(x.v_d) && std::isfinite(x.v_q) &&
           std::isfinite(x.i_od) && std::isfinite(x.i_oq) && std::isfinite(x.v_dc) &&
           std::isfinite(x.delta);
}

}  // namespace

void validate(const PlantParams& prm) {
    require_positive(prm.L_f, "L_f");
    require_positive(prm.C_f, "C_f");
    require_positive(prm.L_g, "L_g");
    require_positive(prm.C_dc, "C_dc");
    require_positive(prm.T_sw, "T_sw");
    require_positive(prm.omega_b, "omega_b");
    require_positive(prm.V_g, "V_g");
    require_positive(prm.omega_g, "omega_g");
    if (!std::isfinite(prm.R_g) || prm.R_g < 0.0)
        throw std::domain_error("R_g must be non-negative");
}

Eigen::Matrix<double, PlantState::dim, 1> PlantState::to_vector() const {
    Eigen::Matrix<double, dim, 1> v;
    v << e_d, e_q, i_d, i_q, v_d, v_q, i_od, i_oq, v_dc, delta;
    return v;
}

PlantState PlantState::from_vector(const Eigen::Ref<const Eigen::VectorXd>& v) {
    PlantState x;
    x.e_d = v(0);
    x.e_q = v(1);
    x.i_d = v(2);
    x.i_q = v(3);
    x.v_d = v(4);
    x.v_q = v(5);
    x.i_od = v(6);
    x.i_oq = v(7);
    x.v_dc = v(8);
    x.delta = v(9);
    return x;
}

Eigen::Matrix<double, PlantOutputs::dim, 1> PlantOutputs::to_vector() const {
    Eigen::Matrix<double, dim, 1> v;
    v << v_dc, p, omega_u, q, V;
    return v;
}

PlantState plant_deriv(const PlantState& x, double e_dref, double e_qref,
                       const ControlInput& u, const PlantParams& prm) {
    if (x.v_dc <= 0.0)
        throw std::domain_error("plant_deriv: DC-link voltage collapsed (v_dc <= 0)");
    if (!finite(x) || !std::isfinite(e_dref) || !std::isfinite(e_qref) ||
        !std::isfinite(u.i_u) || !std::isfinite(u.omega_u) || !std::isfinite(u.E_u))
        throw std::domain_error("plant_deriv: non-finite input");

    const double wb = prm.omega_b;
    const double wu = u.omega_u;
    const double tau = 1.5 * prm.T_sw;

    PlantState d;
    d.e_d = (e_dref - x.e_d) / tau;
    d.e_q = (e_qref - x.e_q) / tau;
    d.i_d = wb / prm.L_f * (x.e_d - x.v_d) + wb * wu * x.i_q;
    d.i_q = wb / prm.L_f * (x.e_q - x.v_q) - wb * wu * x.i_d;
    d.v_d = wb / prm.C_f * (x.i_d - x.i_od) + wb * wu * x.v_q;
    d.v_q = wb / prm.C_f * (x.i_q - x.i_oq) - wb * wu * x.v_d;
    // grid voltage seen from the controller frame, which leads the grid by delta
    d.i_od = wb / prm.L_g * (x.v_d - prm.V_g * std::cos(x.delta)) -
             wb * prm.R_g / prm.L_g * x.i_od + wb * wu * x.i_oq;
    d.i_oq = wb / prm.L_g * (x.v_q + prm.V_g * std::sin(x.delta)) -
             wb * prm.R_g / prm.L_g * x.i_oq - wb * wu * x.i_od;
    d.v_dc = wb / prm.C_dc * u.i_u -
             wb * (x.e_d * x.i_d + x.e_q * x.i_q) / (prm.C_dc * x.v_dc);
    d.delta = wb * (wu - prm.omega_g);
    return d;
}

PlantOutputs plant_outputs(const PlantState& x, const ControlInput& u) {
    PlantOutputs y;
    y.v_dc = x.v_dc;
    y.p = x.v_d * x.i_od + x.v_q * x.i_oq;
    y.q = -x.v_d * x.i_oq + x.v_q * x.i_od;
    y.V = std::sqrt(x.v_d * x.v_d + x.v_q * x.v_q);
    y.omega_u = u.omega_u;
    return y;
}

PlantParams params_from_si(const SiParams& si, const PuBases& bases) {
    require_positive(bases.S_n, "S_n");
    require_positive(bases.V_n, "V_n");
    require_positive(bases.omega_n, "omega_n");
    require_positive(bases.V_dc_base, "V_dc_base");

    const double Z_base = bases.V_n * bases.V_n / bases.S_n;

    PlantParams prm;
    prm.L_f = bases.omega_n * si.L_f / Z_base;
    prm.C_f = bases.omega_n * si.C_f * Z_base;
    prm.L_g = bases.omega_n * si.L_g / Z_base;
    prm.R_g = si.R_g_pu;
    prm.C_dc = bases.omega_n * si.C_dc * bases.V_dc_base * bases.V_dc_base / bases.S_n;
    prm.T_sw = 1.0 / si.f_sw;
    prm.omega_b = bases.omega_n;
    prm.V_g = si.V_g / bases.V_n;
    prm.omega_g = si.omega_g / bases.omega_n;
    validate(prm);
    return prm;
}

}  // namespace gfm
