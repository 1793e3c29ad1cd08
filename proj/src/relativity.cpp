#include "gyro/relativity.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"

#include "gyro/einstein.hpp"

namespace gyro {

ParticleSystem make_particle_system(std::vector<Particle> particles, const BallParams& params) {
    if (particles.empty()) {
        throw GyroError(errc::dimension_mismatch, "particle system must contain at least one particle");
    }
    for (const Particle& p : particles) {
        if (!(p.mass > 0.0)) throw GyroError(errc::out_of_ball, "particle mass must be positive");
        if (!(p.velocity.params() == params)) {
            throw ParamsMismatch("particle velocity does not live in the system ball");
        }
    }
    return ParticleSystem{std::move(particles), params};
}

ParticleSystem particle_system_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed particle-system JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("s") || !j.contains("particles") ||
        !j["particles"].is_array() || j["particles"].empty()) {
        throw ParseError("particle-system JSON must be {\"s\": number, \"particles\": [...]}");
    }
    try {
        const double s = j["s"].get<double>();
        const auto& arr = j["particles"];
        const int dim = static_cast<int>(arr[0]["v"].size());
        BallParams params(s, dim);
        std::vector<Particle> particles;
        particles.reserve(arr.size());
        for (const auto& p : arr) {
            particles.push_back(Particle{p["m"].get<double>(),
                                         make_ball_vector(p["v"].get<vec::Vec>(), params)});
        }
        return make_particle_system(std::move(particles), params);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed particle-system JSON: ") + e.what());
    }
}

AberrationResult aberrate(const BallVector& u, const BallVector& v_obs, AberrationMode mode) {
    require_same_params(u, v_obs);
    AberrationResult out;
    vec::Vec w;
    if (mode == AberrationMode::classical) {
        w = vec::sub(u.coords(), v_obs.coords());
        out.exceeds_light = !(vec::norm(w) < u.s());
    } else {
        w = ein_add(v_obs.negated(), u).coords();
    }
    out.speed = vec::norm(w);
    out.direction = out.speed > 0.0 ? vec::scaled(w, 1.0 / out.speed)
                                    : vec::Vec(w.size(), 0.0);
    return out;
}

double invariant_mass(const ParticleSystem& system) {
    const auto& ps = system.particles;

    double total = 0.0, total_c = 0.0; // Kahan
    for (const Particle& p : ps) {
        const double y = p.mass - total_c;
        const double t = total + y;
        total_c = (t - total) - y;
        total = t;
    }

    // Fixed lexicographic (j,k) order with compensated summation keeps the
    // result reproducible regardless of evaluation strategy.
    double pair_sum = 0.0, pair_c = 0.0;
    for (std::size_t j = 0; j + 1 < ps.size(); ++j) {
        for (std::size_t k = j + 1; k < ps.size(); ++k) {
            const double grel = ein_gamma_of_sum(ps[j].velocity.negated(), ps[k].velocity);
            const double term = ps[j].mass * ps[k].mass * (grel - 1.0);
            const double y = term - pair_c;
            const double t = pair_sum + y;
            pair_c = (t - pair_sum) - y;
            pair_sum = t;
        }
    }
    return std::sqrt(total * total + 2.0 * pair_sum);
}

double fictitious_mass(const ParticleSystem& system) {
    double total = 0.0;
    for (const Particle& p : system.particles) total += p.mass;
    return std::max(0.0, invariant_mass(system) - total);
}

} // namespace gyro
