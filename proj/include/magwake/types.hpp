#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "magwake/errors.hpp"

namespace magwake {

using Complex = std::complex<double>;
using Vec3c = std::array<Complex, 3>;
using Vec3 = std::array<double, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMu0 = 4.0e-7 * kPi;           // N/A^2
inline constexpr double kEps0 = 8.8541878128e-12;      // F/m
inline constexpr double kDefaultGravity = 9.81;        // m/s^2
inline constexpr double kDefaultDraftRatio = 0.05;     // draft / length

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Vessel unknowns: length, draft, hull amplitude, speed, sensor-track angle.
struct VesselParams {
    double length = 150.0;     // L_s, m
    double draft = 7.5;        // h_s, m
    double hull_amplitude = 2000.0;  // S_0, positive scalar
    double speed = 8.0;        // V_s, m/s
    double track_angle = 0.0;  // alpha, rad, |alpha| < pi/2

    void validate() const {
        if (!(length > 0.0)) throw DomainError("VesselParams: length must be > 0");
        if (!(draft > 0.0)) throw DomainError("VesselParams: draft must be > 0");
        if (!(hull_amplitude > 0.0)) throw DomainError("VesselParams: hull amplitude must be > 0");
        if (!(speed > 0.0)) throw DomainError("VesselParams: speed must be > 0");
        if (!(std::abs(track_angle) < kPi / 2.0))
            throw DomainError("VesselParams: |track angle| must be < pi/2");
    }

    // Table-style constructor with draft tied to length: h_s = ratio * L_s.
    static VesselParams with_draft_ratio(double length, double hull_amplitude, double speed,
                                         double track_angle, double ratio = kDefaultDraftRatio) {
        VesselParams p;
        p.length = length;
        p.draft = ratio * length;
        p.hull_amplitude = hull_amplitude;
        p.speed = speed;
        p.track_angle = track_angle;
        p.validate();
        return p;
    }
};

enum class HullModel : std::uint8_t { Wigley = 0, Parabolic = 1, ProlateSpheroid = 2 };

// (permittivity, permeability, conductivity) of one layer.
struct LayerEm {
    double eps;    // F/m
    double mu;     // N/A^2
    double sigma;  // S/m
};

// Sea depth, three-layer electromagnetic constants, geomagnetic field, gravity.
struct EnvParams {
    double depth = 500.0;  // d, m
    LayerEm air{kEps0, kMu0, 0.0};
    LayerEm water{81.0 * kEps0, kMu0, 5.0};
    LayerEm seabed{10.0 * kEps0, kMu0, 0.025};
    Vec3 geomagnetic{2.5e-5, 0.0, -4.330127018922193e-5};  // B_E, T (50 uT, dip 60 deg)
    double gravity = kDefaultGravity;

    void validate() const {
        if (!(depth > 0.0)) throw DomainError("EnvParams: depth must be > 0");
        for (const LayerEm* l : {&air, &water, &seabed}) {
            if (!(l->eps > 0.0) || !(l->mu > 0.0) || !(l->sigma >= 0.0))
                throw DomainError("EnvParams: layer constants must satisfy eps,mu > 0 and sigma >= 0");
        }
        const double bn = std::sqrt(geomagnetic[0] * geomagnetic[0] +
                                    geomagnetic[1] * geomagnetic[1] +
                                    geomagnetic[2] * geomagnetic[2]);
        if (!(bn > 0.0)) throw DomainError("EnvParams: geomagnetic field must be nonzero");
        if (!(gravity > 0.0)) throw DomainError("EnvParams: gravity must be > 0");
    }

    static Vec3 geomagnetic_from_angles(double magnitude, double dip_rad, double declination_rad) {
        return {magnitude * std::cos(dip_rad) * std::cos(declination_rad),
                magnitude * std::cos(dip_rad) * std::sin(declination_rad),
                -magnitude * std::sin(dip_rad)};
    }
};

// Airborne scan kinematics.
struct SensorParams {
    double speed = 20.0;      // V_0, m/s
    double sample_rate = 10.0;  // f_0, Hz
    double altitude = 50.0;   // h_0, m
    double x0 = 1000.0;       // m
    double y0 = 200.0;        // m
    int n_samples = 15;       // K

    void validate() const {
        if (!(speed > 0.0)) throw DomainError("SensorParams: speed must be > 0");
        if (!(sample_rate > 0.0)) throw DomainError("SensorParams: sample rate must be > 0");
        if (!(altitude > 0.0)) throw DomainError("SensorParams: altitude must be > 0");
        if (n_samples < 2) throw DomainError("SensorParams: need at least 2 samples");
    }
};

// theta-integration settings shared by the deterministic and Monte Carlo engines.
struct QuadratureConfig {
    int n_nodes = 2048;       // total Gauss-Legendre nodes (composite rule)
    double eps_theta = 1e-3;  // endpoint clip, rad
    int n_mc = 128;           // Monte Carlo sample count
    std::uint64_t seed = 0;   // RNG seed for the Monte Carlo engine
    int hull_nodes_x = 64;    // hull-integral nodes along x'
    int hull_nodes_z = 32;    // hull-integral nodes along z'
    bool prefer_closed_kochin = true;  // use analytic hull integrals where available

    void validate() const {
        if (n_nodes < 8) throw ConfigError("QuadratureConfig: n_nodes must be >= 8");
        if (!(eps_theta > 0.0 && eps_theta < 0.1))
            throw ConfigError("QuadratureConfig: eps_theta must be in (0, 0.1)");
        if (n_mc < 1) throw ConfigError("QuadratureConfig: n_mc must be >= 1");
        if (hull_nodes_x < 2 || hull_nodes_z < 2)
            throw ConfigError("QuadratureConfig: hull node counts must be >= 2");
    }
};

} // namespace magwake
