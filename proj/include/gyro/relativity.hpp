#pragma once

#include <string>
#include <vector>

#include "gyro/ball.hpp"

namespace gyro {

struct Particle {
    double mass;
    BallVector velocity;
};

/// An isolated system of noninteracting particles in the c-ball (s = c).
struct ParticleSystem {
    std::vector<Particle> particles;
    BallParams params;
};

/// Validating constructor: N ≥ 1, masses positive, shared params.
ParticleSystem make_particle_system(std::vector<Particle> particles, const BallParams& params);

/// Parses {"s": number, "particles": [{"m": number, "v": [..]}]}.
ParticleSystem particle_system_from_json(const std::string& text);

enum class AberrationMode { classical, relativistic };

/// Apparent velocity of a particle (velocity u in frame S) seen from a frame
/// moving with v_obs relative to S. Classical composition is the triangle law
/// u − v_obs and may leave the ball (flagged, not thrown); relativistic
/// composition is ⊖v_obs ⊕ₑ u and never does.
struct AberrationResult {
    vec::Vec direction; // unit vector; zero when the apparent velocity vanishes
    double speed = 0.0;
    bool exceeds_light = false; // classical mode only
};

AberrationResult aberrate(const BallVector& u, const BallVector& v_obs, AberrationMode mode);

/// Mass of the single fictitious particle equivalent to the system:
///   m₀ = √( (Σmₖ)² + 2·Σ_{j<k} mⱼmₖ(γ_{⊖vⱼ⊕vₖ} − 1) ) ≥ Σmₖ
/// with the relative-velocity gamma taken from the Einstein gamma identity.
double invariant_mass(const ParticleSystem& system);

/// m₀ − Σmₖ; vanishes exactly for rigid systems (all velocities equal).
double fictitious_mass(const ParticleSystem& system);

} // namespace gyro
