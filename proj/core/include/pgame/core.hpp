#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgame {

inline constexpr double kPi = 3.14159265358979323846;

enum class PerceptionMode { Constrained, Unconstrained };

// When the attacker, mid full-information play, concedes the game:
// at the moment the defender achieves alignment (default), or as soon
// as the state is classified as a defender win.
enum class EscapePolicy { EscapeAtThetaZero, SurrenderOnClassification };

enum class StageLabel { PreGame, PartialInfo, FullInfo, Escape };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct SolverSettings {
  double step_size = 1e-3;   // integration step, nondimensional time
  double capture_tol = 1e-3; // angular tolerance for capture/alignment
  double event_tol = 1e-9;   // bisection tolerance for event localization
};

// All game parameters in nondimensional units (lengths in target radii,
// time scaled by the defender's maximum angular rate).
struct ScenarioConfig {
  double nu = 0.5;           // speed ratio, (0, 1]
  double tsr_radius = 1.2;   // outer radius of the target sensing region
  double asr_radius = 0.15;  // attacker sensing radius
  Vec2 attacker_start{1.5, 1.5};
  double defender_start_angle = 0.0; // inertial angle on the unit circle
  PerceptionMode perception_mode = PerceptionMode::Constrained;
  EscapePolicy escape_policy = EscapePolicy::EscapeAtThetaZero;
  SolverSettings solver;
};

// Evolving nondimensional state. theta is the signed separation angle,
// positive when the attacker is counterclockwise of the defender.
// phi_a (the attacker's inertial angle) is redundant with beta + theta but
// tracked explicitly so Cartesian output does not accumulate wrap artifacts.
struct GameState {
  double t = 0.0;
  double R = 0.0;     // attacker distance to target center, >= 1 during play
  double theta = 0.0; // wrapped to (-pi, pi]
  double beta = 0.0;  // defender's accumulated inertial angle, unwrapped
  double phi_a = 0.0; // attacker's inertial angle
};

struct ControlPair {
  double alpha = 0.0; // attacker heading relative to the inward radial, [-pi, pi]
  double u = 0.0;     // defender angular speed command, [-1, 1]
};

// sign with sign(0) == 0; at exact alignment the defender holds position.
inline double sign(double x) { return (x > 0.0) - (x < 0.0); }

// Reduce an angle to (-pi, pi].
double wrap_angle(double x);

// Attacker-defender distance p = sqrt(R^2 + 1 - 2 R cos theta).
double separation_distance(double R, double theta);

// Separation angle at which p == r_a, defined for R in [1, 1+r_a].
// Returns nullopt when the defender is undetectable at this radius.
std::optional<double> theta_p(double R, double r_a);

// {attacker, defender} positions in the inertial plane.
std::pair<Vec2, Vec2> to_cartesian(const GameState& state);

// Returns the (possibly empty) list of violated scenario assumptions.
std::vector<std::string> validate(const ScenarioConfig& config);

// Initial state at t = 0 from the configured poses.
GameState initial_state(const ScenarioConfig& config);

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

}  // namespace pgame
