// Tunable spring models: sealed double-chamber pneumatic cylinder, repelling
// magnet pair with a field coil, jack spring with movable tap, and a plain
// linear spring. All models are immutable value types; evaluation is pure.
#pragma once

#include <string>
#include <variant>

namespace locodyn::springs {

// Sealed pneumatic cylinder. The piston separates an upper and a rear gas
// chamber; each chamber connects to a fixed "dead volume" the piston cannot
// displace. Compression x raises the upper pressure and lowers the rear one
// isothermally.
struct PneumaticSpringParams {
  double area_upper = 7.9e-5;     // piston area facing the upper chamber (m^2)
  double area_rear = 6.6e-5;      // piston area facing the rear chamber (m^2)
  double p_upper0 = 2.5e5;        // upper chamber pressure at rest (Pa)
  double p_rear0 = 3.0e5;         // rear chamber pressure at rest (Pa)
  double v_upper0 = 6.3e-6;       // upper chamber volume at rest (m^3)
  double v_rear0 = 0.0;           // rear chamber volume at rest (m^3)
  double v_total = 6.3e-6;        // total cylinder volume (m^3)
  double dead_upper = 0.0;        // dead volume on the upper chamber, C_v (m^3)
  double dead_rear = 4.0e-6;      // dead volume on the rear chamber, C_r (m^3)
  double max_compression = 0.04;  // working stroke (m)

  void validate() const;  // throws std::invalid_argument
};

// Two magnets in repulsion plus a coil that strengthens or weakens the field.
// Force falls with the fourth power of the gap.
struct MagneticSpringParams {
  double repulsion_coeff = 1.25e-9;  // magnet pair coefficient k_m (N*m^4)
  double coil_coeff = 0.0;           // coil coupling c_I (N*m^4/A)
  double current = 0.0;              // operating coil current (A)
  double max_current = 0.4;          // rated |current| bound (A)
  double min_gap = 1e-3;             // smallest usable gap (m)
  double rest_gap = 5e-3;            // unloaded gap when used as a leg spring (m)

  void validate() const;
};

// Helical spring blocked part-way by a movable jack: only `tap` of the coils
// deform, so stiffness scales as 1/tap. The fixed-length variant screws the
// blocked length out the other side, keeping the outer dimension constant.
struct JackSpringParams {
  double k_full = 400.0;     // stiffness with every coil active (N/m)
  double free_length = 0.1;  // unloaded outer length (m)
  double tap = 1.0;          // active fraction, (0, 1]
  bool fixed_length = false;

  void validate() const;
};

struct LinearSpringParams {
  double k = 500.0;          // N/m
  double rest_length = 0.1;  // m

  void validate() const;
};

using SpringModel =
    std::variant<LinearSpringParams, PneumaticSpringParams, MagneticSpringParams,
                 JackSpringParams>;

// --- pneumatic -------------------------------------------------------------

// Piston force at compression x in [0, max_compression]. Positive force
// pushes the piston back out. Throws std::domain_error off range.
double pneumatic_force(const PneumaticSpringParams& p, double x);

// Second spatial derivative of the pneumatic force, closed form.
double pneumatic_force_curvature(const PneumaticSpringParams& p, double x);

// --- magnetic --------------------------------------------------------------

// Repulsion at gap d with coil current I: (k_m + c_I * I) / d^4.
double magnetic_force(const MagneticSpringParams& p, double d, double current);

// Gap at which the repulsion balances a compressive load, for current I.
double magnetic_equilibrium_gap(const MagneticSpringParams& p, double load, double current);

// Relative peak-to-peak change of the equilibrium gap under `load` between
// current extremes +/-max_current, normalized by the zero-current gap.
double magnetic_displacement_change(const MagneticSpringParams& p, double load);

// Finds the coil coefficient c_I that makes magnetic_displacement_change
// equal target_change (within 1e-4), by bisection. Throws std::runtime_error
// when no admissible c_I reaches the target.
double calibrate_magnetic(const MagneticSpringParams& p, double load, double target_change);

// --- jack ------------------------------------------------------------------

struct JackEffective {
  double k_eff;            // N/m
  double external_length;  // m
};

JackEffective jack_effective(const JackSpringParams& p);

// --- generic spring surface ------------------------------------------------

// Force at compression x from rest. For the magnetic model, compression is
// measured from rest_gap (the gap shrinks as the leg compresses).
double spring_force(const SpringModel& model, double x);

// dF/dx at compression x. Analytic for every model; agrees with central
// finite differences of spring_force.
double tangent_stiffness(const SpringModel& model, double x);

// Elastic energy stored between compression 0 and x (closed form integrals).
double spring_potential(const SpringModel& model, double x);

// Largest admissible compression for the model (used by plant guards).
double max_compression(const SpringModel& model);

// Most negative admissible compression (extension). The sealed pneumatic
// cylinder keeps a valid closed form for moderate extension; other models
// are unbounded below.
double min_compression(const SpringModel& model);

std::string spring_kind(const SpringModel& model);

namespace detail {
// Pneumatic closed form without the [0, max_compression] working-range gate;
// still rejects states where a chamber volume would vanish. The hopper plant
// uses this to evaluate flight-phase extension.
double pneumatic_force_raw(const PneumaticSpringParams& p, double x);
}  // namespace detail

}  // namespace locodyn::springs
