#include "locodyn/springs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace locodyn::springs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

void PneumaticSpringParams::validate() const {
  require(area_upper > 0 && area_rear > 0, "pneumatic: piston areas must be positive");
  require(p_upper0 > 0 && p_rear0 > 0, "pneumatic: initial pressures must be positive");
  require(v_total > 0, "pneumatic: total volume must be positive");
  require(v_upper0 >= 0 && v_rear0 >= 0, "pneumatic: chamber volumes must be non-negative");
  require(v_upper0 <= v_total, "pneumatic: upper volume exceeds total volume");
  require(dead_upper >= 0 && dead_rear >= 0, "pneumatic: dead volumes must be non-negative");
  require(max_compression > 0, "pneumatic: max_compression must be positive");
  require(area_upper * max_compression < dead_upper + v_total,
          "pneumatic: stroke would empty the upper chamber");
}

void MagneticSpringParams::validate() const {
  require(repulsion_coeff > 0, "magnetic: repulsion coefficient must be positive");
  require(max_current >= 0, "magnetic: max_current must be non-negative");
  require(std::abs(current) <= max_current, "magnetic: operating current exceeds rating");
  require(min_gap > 0, "magnetic: min_gap must be positive");
  require(rest_gap > min_gap, "magnetic: rest_gap must exceed min_gap");
  // repulsion must never reverse within the current rating
  require(repulsion_coeff - std::abs(coil_coeff) * max_current > 0,
          "magnetic: coil could reverse the repulsion within rated current");
}

void JackSpringParams::validate() const {
  require(k_full > 0, "jack: k_full must be positive");
  require(free_length > 0, "jack: free_length must be positive");
  require(tap > 0 && tap <= 1.0, "jack: tap must lie in (0, 1]");
}

void LinearSpringParams::validate() const {
  require(k > 0, "linear: stiffness must be positive");
  require(rest_length >= 0, "linear: rest_length must be non-negative");
}

// --- pneumatic -------------------------------------------------------------

namespace detail {
double pneumatic_force_raw(const PneumaticSpringParams& p, double x) {
  const double alpha = p.area_upper * p.p_upper0 * (p.v_upper0 + p.dead_upper);
  const double beta = p.dead_upper + p.v_total;
  const double gamma = p.area_rear * p.p_rear0 * (p.v_rear0 + p.dead_rear);
  const double upper_vol = beta - p.area_upper * x;
  if (upper_vol <= 0.0) throw std::domain_error("pneumatic: upper chamber volume vanished");
  double force = alpha / upper_vol;
  if (gamma != 0.0) {
    const double rear_vol = p.area_upper * x + p.dead_rear;
    if (rear_vol <= 0.0) throw std::domain_error("pneumatic: rear chamber volume vanished");
    force -= gamma / rear_vol;
  }
  return force;
}
}  // namespace detail

double pneumatic_force(const PneumaticSpringParams& p, double x) {
  if (x < 0.0 || x > p.max_compression)
    throw std::domain_error("pneumatic: compression outside [0, max_compression]");
  return detail::pneumatic_force_raw(p, x);
}

namespace {
double pneumatic_stiffness_raw(const PneumaticSpringParams& p, double x) {
  const double alpha = p.area_upper * p.p_upper0 * (p.v_upper0 + p.dead_upper);
  const double beta = p.dead_upper + p.v_total;
  const double gamma = p.area_rear * p.p_rear0 * (p.v_rear0 + p.dead_rear);
  const double upper_vol = beta - p.area_upper * x;
  if (upper_vol <= 0.0) throw std::domain_error("pneumatic: chamber volume vanished");
  double k = alpha / (upper_vol * upper_vol);
  if (gamma != 0.0) {
    const double rear_vol = p.area_upper * x + p.dead_rear;
    if (rear_vol <= 0.0) throw std::domain_error("pneumatic: chamber volume vanished");
    k += gamma / (rear_vol * rear_vol);
  }
  return p.area_upper * k;
}
}  // namespace

double pneumatic_force_curvature(const PneumaticSpringParams& p, double x) {
  const double alpha = p.area_upper * p.p_upper0 * (p.v_upper0 + p.dead_upper);
  const double beta = p.dead_upper + p.v_total;
  const double gamma = p.area_rear * p.p_rear0 * (p.v_rear0 + p.dead_rear);
  const double upper_vol = beta - p.area_upper * x;
  if (upper_vol <= 0.0) throw std::domain_error("pneumatic: chamber volume vanished");
  double c = alpha / (upper_vol * upper_vol * upper_vol);
  if (gamma != 0.0) {
    const double rear_vol = p.area_upper * x + p.dead_rear;
    if (rear_vol <= 0.0) throw std::domain_error("pneumatic: chamber volume vanished");
    c -= gamma / (rear_vol * rear_vol * rear_vol);
  }
  return 2.0 * p.area_upper * p.area_upper * c;
}

// --- magnetic --------------------------------------------------------------

double magnetic_force(const MagneticSpringParams& p, double d, double current) {
  if (d < p.min_gap) throw std::domain_error("magnetic: gap below min_gap");
  if (std::abs(current) > p.max_current)
    throw std::domain_error("magnetic: current outside rating");
  const double coeff = p.repulsion_coeff + p.coil_coeff * current;
  const double d2 = d * d;
  return coeff / (d2 * d2);
}

double magnetic_equilibrium_gap(const MagneticSpringParams& p, double load, double current) {
  if (load <= 0.0) throw std::domain_error("magnetic: load must be positive");
  const double coeff = p.repulsion_coeff + p.coil_coeff * current;
  if (coeff <= 0.0) throw std::domain_error("magnetic: repulsion reversed");
  return std::pow(coeff / load, 0.25);
}

double magnetic_displacement_change(const MagneticSpringParams& p, double load) {
  const double d_plus = magnetic_equilibrium_gap(p, load, p.max_current);
  const double d_minus = magnetic_equilibrium_gap(p, load, -p.max_current);
  const double d_zero = magnetic_equilibrium_gap(p, load, 0.0);
  return (d_plus - d_minus) / d_zero;
}

double calibrate_magnetic(const MagneticSpringParams& p, double load, double target_change) {
  if (target_change < 0.0) throw std::invalid_argument("calibrate_magnetic: negative target");
  if (target_change == 0.0) return 0.0;
  if (p.max_current <= 0.0)
    throw std::runtime_error("calibrate_magnetic: zero current rating cannot modulate");

  // keep a safety margin so the repulsion-sign invariant cannot break
  const double c_hi_limit = 0.999 * p.repulsion_coeff / p.max_current;

  auto change_at = [&](double c) {
    MagneticSpringParams q = p;
    q.coil_coeff = c;
    const double d_lo = magnetic_equilibrium_gap(q, load, -q.max_current);
    if (d_lo < q.min_gap)
      throw std::runtime_error("calibrate_magnetic: equilibrium gap below min_gap");
    return magnetic_displacement_change(q, load);
  };

  if (change_at(c_hi_limit) < target_change)
    throw std::runtime_error("calibrate_magnetic: target unreachable within rated current");

  double lo = 0.0, hi = c_hi_limit;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double change = change_at(mid);
    if (std::abs(change - target_change) <= 1e-4) return mid;
    (change < target_change ? lo : hi) = mid;
  }
  throw std::runtime_error("calibrate_magnetic: bisection failed to converge");
}

// --- jack ------------------------------------------------------------------

JackEffective jack_effective(const JackSpringParams& p) {
  if (!(p.tap > 0.0 && p.tap <= 1.0))
    throw std::domain_error("jack: tap outside (0, 1]");
  JackEffective out;
  out.k_eff = p.k_full / p.tap;
  // standard variant shortens as it stiffens; linear convention
  out.external_length = p.fixed_length ? p.free_length : p.free_length * (1.0 + p.tap) / 2.0;
  return out;
}

// --- generic surface ---------------------------------------------------------

double spring_force(const SpringModel& model, double x) {
  return std::visit(
      [x](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearSpringParams>) {
          return m.k * x;
        } else if constexpr (std::is_same_v<T, PneumaticSpringParams>) {
          if (x > m.max_compression)
            throw std::domain_error("pneumatic: over-compression");
          return detail::pneumatic_force_raw(m, x);
        } else if constexpr (std::is_same_v<T, MagneticSpringParams>) {
          return magnetic_force(m, m.rest_gap - x, m.current);
        } else {
          return jack_effective(m).k_eff * x;
        }
      },
      model);
}

double tangent_stiffness(const SpringModel& model, double x) {
  return std::visit(
      [x](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearSpringParams>) {
          return m.k;
        } else if constexpr (std::is_same_v<T, PneumaticSpringParams>) {
          if (x > m.max_compression)
            throw std::domain_error("pneumatic: over-compression");
          return pneumatic_stiffness_raw(m, x);
        } else if constexpr (std::is_same_v<T, MagneticSpringParams>) {
          const double d = m.rest_gap - x;
          if (d < m.min_gap) throw std::domain_error("magnetic: gap below min_gap");
          const double coeff = m.repulsion_coeff + m.coil_coeff * m.current;
          return 4.0 * coeff / (d * d * d * d * d);
        } else {
          return jack_effective(m).k_eff;
        }
      },
      model);
}

double spring_potential(const SpringModel& model, double x) {
  return std::visit(
      [x](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearSpringParams>) {
          return 0.5 * m.k * x * x;
        } else if constexpr (std::is_same_v<T, PneumaticSpringParams>) {
          const double alpha = m.area_upper * m.p_upper0 * (m.v_upper0 + m.dead_upper);
          const double beta = m.dead_upper + m.v_total;
          const double gamma = m.area_rear * m.p_rear0 * (m.v_rear0 + m.dead_rear);
          const double a = m.area_upper;
          const double upper_vol = beta - a * x;
          if (upper_vol <= 0.0)
            throw std::domain_error("pneumatic: chamber volume vanished");
          // int_0^x F ds, isothermal gas work
          double w = (alpha / a) * std::log(beta / upper_vol);
          if (gamma != 0.0) {
            const double rear_vol = a * x + m.dead_rear;
            if (rear_vol <= 0.0)
              throw std::domain_error("pneumatic: chamber volume vanished");
            w -= (gamma / a) * std::log(rear_vol / m.dead_rear);
          }
          return w;
        } else if constexpr (std::is_same_v<T, MagneticSpringParams>) {
          const double coeff = m.repulsion_coeff + m.coil_coeff * m.current;
          const double d = m.rest_gap - x;
          if (d < m.min_gap) throw std::domain_error("magnetic: gap below min_gap");
          const double d0 = m.rest_gap;
          return coeff / 3.0 * (1.0 / (d * d * d) - 1.0 / (d0 * d0 * d0));
        } else {
          return 0.5 * jack_effective(m).k_eff * x * x;
        }
      },
      model);
}

double max_compression(const SpringModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PneumaticSpringParams>)
          return m.max_compression;
        else if constexpr (std::is_same_v<T, MagneticSpringParams>)
          return m.rest_gap - m.min_gap;
        else
          return kInf;
      },
      model);
}

double min_compression(const SpringModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PneumaticSpringParams>)
          // keep at least half the rear dead volume filled
          return -0.5 * m.dead_rear / m.area_upper;
        else
          return -kInf;
      },
      model);
}

std::string spring_kind(const SpringModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearSpringParams>)
          return "linear";
        else if constexpr (std::is_same_v<T, PneumaticSpringParams>)
          return "pneumatic";
        else if constexpr (std::is_same_v<T, MagneticSpringParams>)
          return "magnetic";
        else
          return "jack";
      },
      model);
}

}  // namespace locodyn::springs
