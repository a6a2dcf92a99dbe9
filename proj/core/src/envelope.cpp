#include "bps/envelope.hpp"

#include <cmath>
#include <string>

#include "bps/common.hpp"
#include "bps/solar.hpp"

namespace bps {

namespace {

constexpr double pi = 3.14159265358979323846;

// Coefficients of the algebraic elimination shared by stepping and
// steady-state: with P = phi_ia + phi_hc,
//   t_air = (h_ve t_sup + h_the t_sur + P) / A
//   t_sur = s0 + s1 t_mas
// and the mass balance reduces to c_m dT/dt = -K T + F.
struct Reduced {
  double a;   // h_ve + h_the
  double d;   // surface-node denominator
  double s0;  // t_sur offset
  double s1;  // t_sur slope in t_mas
  double k;   // reduced conductance
  double f;   // reduced forcing
};

Reduced reduce(const FiveR1CNetwork& net, double t_ext, double t_sup, const GainSplit& g,
               double phi_hc) {
  Reduced r;
  r.a = net.h_ve + net.h_the;
  r.d = net.h_win + net.h_mas + net.h_the * net.h_ve / r.a;
  const double p = g.phi_ia + phi_hc;
  r.s0 = (net.h_win * t_ext + g.phi_st + net.h_the / r.a * (net.h_ve * t_sup + p)) / r.d;
  r.s1 = net.h_mas / r.d;
  r.k = net.h_mas * (1.0 - r.s1) + net.h_tra;
  r.f = net.h_mas * r.s0 + net.h_tra * t_ext + g.phi_m;
  return r;
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ConfigError(std::string{"fabric parameter must be positive: "} + name);
}

}  // namespace

FiveR1CNetwork build_network(const BuildingFabric& fabric) {
  check_positive(fabric.a_f, "a_f");
  check_positive(fabric.u_op, "u_op");
  check_positive(fabric.a_op, "a_op");
  check_positive(fabric.f_ms, "f_ms");
  check_positive(fabric.rat_sur, "rat_sur");
  check_positive(fabric.c_m_spec, "c_m_spec");
  check_positive(fabric.ach, "ach");
  check_positive(fabric.volume, "volume");
  if (fabric.windows.empty()) throw ConfigError("fabric needs at least one window");
  for (const auto& w : fabric.windows) {
    check_positive(w.area, "window area");
    check_positive(w.u, "window u");
    if (!(w.g > 0.0 && w.g <= 1.0)) throw ConfigError("window g-value must be in (0,1]");
  }

  FiveR1CNetwork net;
  net.a_m = fabric.f_ms * fabric.a_f;
  net.a_tot = fabric.rat_sur * fabric.a_f;
  net.h_mas = constants::h_mass_surface * net.a_m;
  net.h_op = fabric.u_op * fabric.a_op;
  net.h_win = 0.0;
  for (const auto& w : fabric.windows) net.h_win += w.u * w.area;
  if (net.h_op >= net.h_mas)
    throw ConfigError("opaque conductance " + format_double(net.h_op) +
                      " W/K must stay below the mass-surface conductance " +
                      format_double(net.h_mas) + " W/K");
  net.h_tra = 1.0 / (1.0 / net.h_op - 1.0 / net.h_mas);
  net.h_the = constants::h_air_surface * net.a_tot;
  net.h_ve = constants::air_volumetric_cp * fabric.ach * fabric.volume /
             constants::seconds_per_hour;
  net.c_m = fabric.c_m_spec * fabric.a_f;
  return net;
}

GainSplit split_gains(double phi_int, double phi_sol, const FiveR1CNetwork& net) {
  if (!std::isfinite(phi_int) || !std::isfinite(phi_sol))
    throw ArgumentError("non-finite gain");
  const double mass_share = net.a_m / net.a_tot;
  const double glazing_share = net.h_win / (constants::h_mass_surface * net.a_tot);
  const double distributed = 0.5 * phi_int + phi_sol;
  GainSplit g;
  g.phi_ia = 0.5 * phi_int;
  g.phi_m = mass_share * distributed;
  g.phi_st = (1.0 - mass_share - glazing_share) * distributed;
  return g;
}

double solar_gains(const WeatherSample& sample, const BuildingFabric& fabric) {
  if (sample.h_glo_hor <= 0.0 && sample.h_dif_hor <= 0.0 && sample.h_dir_nor <= 0.0) return 0.0;
  const int doy = static_cast<int>(sample.clo_tim / constants::seconds_per_day) + 1;
  const double decl = solar::declination(doy);
  const double omega = solar::hour_angle(sample.sol_tim);
  const double sun_azimuth = solar::azimuth(sample.lat, decl, omega);
  // Below the horizon only diffuse light remains.
  const double dir_nor = sample.sol_zen < 0.5 * pi ? sample.h_dir_nor : 0.0;

  double total = 0.0;
  for (const auto& w : fabric.windows) {
    double irradiance;
    if (w.tilt_deg == 0.0) {
      irradiance = sample.h_glo_hor;
    } else {
      irradiance = solar::plane_irradiance(dir_nor, sample.h_dif_hor, sample.sol_zen,
                                           sun_azimuth, w.tilt_deg * pi / 180.0,
                                           w.azimuth_deg * pi / 180.0);
    }
    total += w.g * w.area * irradiance;
  }
  return total;
}

ZoneState step_zone(const FiveR1CNetwork& net, const ZoneState& state, double t_ext,
                    double t_sup, double phi_int, double phi_sol, double phi_hc, double dt) {
  if (!(dt > 0.0)) throw ArgumentError("step length must be positive");
  const GainSplit g = split_gains(phi_int, phi_sol, net);
  const Reduced r = reduce(net, t_ext, t_sup, g, phi_hc);
  const double c_dt = net.c_m / dt;
  ZoneState next;
  next.t_mas = (state.t_mas * (c_dt - 0.5 * r.k) + r.f) / (c_dt + 0.5 * r.k);
  next.t_sur = r.s0 + r.s1 * next.t_mas;
  next.t_air =
      (net.h_ve * t_sup + net.h_the * next.t_sur + g.phi_ia + phi_hc) / r.a;
  return next;
}

NodeTemperatures steady_state(const FiveR1CNetwork& net, double t_ext, double t_sup,
                              double phi_int, double phi_sol, double phi_hc) {
  const GainSplit g = split_gains(phi_int, phi_sol, net);
  const Reduced r = reduce(net, t_ext, t_sup, g, phi_hc);
  NodeTemperatures out;
  out.t_mas = r.f / r.k;
  out.t_sur = r.s0 + r.s1 * out.t_mas;
  out.t_air = (net.h_ve * t_sup + net.h_the * out.t_sur + g.phi_ia + phi_hc) / r.a;
  return out;
}

double mass_node_conductance(const FiveR1CNetwork& net) {
  const double a = net.h_ve + net.h_the;
  const double d = net.h_win + net.h_mas + net.h_the * net.h_ve / a;
  return net.h_mas * (1.0 - net.h_mas / d) + net.h_tra;
}

}  // namespace bps
