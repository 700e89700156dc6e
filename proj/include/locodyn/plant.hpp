// Hybrid two-mass hopper on a compliant unilateral ground, plus the free-decay
// bench used for identification. The drive is the inertial reaction of a
// yoke-driven mass moving sinusoidally against the body.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "locodyn/springs.hpp"
#include "locodyn/timeseries.hpp"

namespace locodyn::plant {

// Bending-beam ground: tip stiffness c_b / L^3, unilateral contact with light
// damping. Two grounds with equal stiffness behave identically.
struct GroundModel {
  double beam_coeff = 4.0;        // N*m^2
  double support_distance = 0.1;  // m between supports
  double contact_damping = 12.0;  // N*s/m
  double surface_height = 0.0;    // m

  double stiffness() const;
  // Adjusts the support distance to realize a requested tip stiffness.
  void set_stiffness(double k_g);
  void validate() const;
};

double ground_stiffness(const GroundModel& g);

enum class Mode { Stance, Flight };

struct HybridState {
  Mode mode = Mode::Stance;
  double y_body = 0.0;            // m
  double y_foot = 0.0;            // m
  double v_body = 0.0;            // m/s
  double v_foot = 0.0;            // m/s
  double ground_deflection = 0.0; // m, zero in flight
  double t = 0.0;                 // s
};

struct HopperPlant {
  double m_body = 0.35;           // kg, body incl. actuator frame
  double m_foot = 0.05;           // kg
  double m_drive = 0.10;          // kg, yoke-driven mass
  double drive_amplitude = 0.006; // m, yoke stroke amplitude
  springs::SpringModel spring = springs::PneumaticSpringParams{};
  double c_spring = 2.5;          // N*s/m across the spring
  GroundModel ground;
  double gravity = 9.81;          // m/s^2
  double leg_rest_length = 0.20;  // body-foot separation at zero compression (m)

  void validate() const;
};

// Raised when integration hits a non-finite state or a spring domain
// violation; carries the simulation time of the failure.
struct SimulationError : std::runtime_error {
  SimulationError(const std::string& what, double t_fail)
      : std::runtime_error(what + " at t=" + std::to_string(t_fail)), t(t_fail) {}
  double t;
};

struct StaticEquilibrium {
  double compression;   // spring compression balancing the suspended weight (m)
  double y_body;        // m
  double y_foot;        // m
  double deflection;    // ground deflection under total weight (m)
};

StaticEquilibrium static_equilibrium(const HopperPlant& plant);

// Incremental hopper simulator; carries hybrid state and drive phase across
// frequency changes so swept experiments can follow a response branch.
class HopperSim {
 public:
  HopperSim(HopperPlant plant, double drive_freq, double dt);

  // Keeps state and drive phase; only the instantaneous frequency changes.
  void set_drive_frequency(double f);
  double drive_frequency() const { return freq_; }
  double dt() const { return dt_; }

  const HybridState& state() const { return state_; }
  double time() const { return state_.t; }

  // Advances by `duration`, optionally appending every grid sample and all
  // mode-transition events to `rec`.
  void run(double duration, TimeSeries* rec = nullptr);

  int flight_count() const { return flight_count_; }

  // Energy ledger since construction.
  double drive_work() const { return work_drive_; }
  double dissipated() const { return dissipated_; }
  double contact_energy_adjust() const { return contact_adjust_; }
  double mechanical_energy() const;

  static TimeSeries make_recorder(double dt);

 private:
  struct Derivs;
  std::array<double, 6> pack() const;
  void unpack(const std::array<double, 6>& s);
  std::array<double, 6> deriv(Mode mode, double t, const std::array<double, 6>& s) const;
  std::array<double, 6> rk4(Mode mode, double t, const std::array<double, 6>& s,
                            double h) const;
  bool guard_triggered(Mode mode, const std::array<double, 6>& s) const;
  double contact_force_formula(const std::array<double, 6>& s) const;
  double compression_of(const std::array<double, 6>& s) const;
  void record(TimeSeries& rec) const;
  void check_finite(const std::array<double, 6>& s) const;

  HopperPlant plant_;
  double freq_;
  double dt_;
  double drive_phase_ = 0.0;   // radians, advances at 2*pi*f
  HybridState state_;
  double x_min_, x_max_;       // admissible compression window
  double work_drive_ = 0.0;
  double dissipated_ = 0.0;
  double contact_adjust_ = 0.0;
  int flight_count_ = 0;
};

// Runs a full simulation from static equilibrium and returns the recorded
// trace. dt must resolve at least 200 steps per drive period.
TimeSeries simulate_hopper(const HopperPlant& plant, double drive_freq, double duration,
                           double dt);

// Single equivalent leg for bench identification: effective mass on a spring
// with viscous damping, released from compression x0 at rest.
struct LegBench {
  double m_eff = 1.0;   // kg
  springs::SpringModel spring = springs::LinearSpringParams{};
  double damping = 0.0; // N*s/m
};

TimeSeries step_response(const LegBench& leg, double x0, double duration, double dt);

}  // namespace locodyn::plant
