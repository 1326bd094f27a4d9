#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "plim/errors.hpp"
#include "plim/vec3.hpp"

namespace plim {

// External potential V. The shipped families (constant, harmonic) satisfy
// the Lipschitz-gradient and linear-growth hypotheses by construction; a
// custom V must declare its growth constant and is range-checked when the
// gradient is evaluated.
struct Potential {
    enum class Kind { constant, harmonic, custom };

    Kind kind = Kind::constant;
    double v0 = 0.0;     // constant offset
    double omega = 0.0;  // harmonic frequency, V = 0.5 omega^2 |q|^2
    std::function<double(const Vec3&)> custom_value;
    std::function<Vec3(const Vec3&)> custom_gradient;
    double growth_bound = 0.0;  // K with |grad V(q)| <= K (1 + |q|)

    static Potential constant(double v0 = 0.0) {
        Potential p;
        p.kind = Kind::constant;
        p.v0 = v0;
        return p;
    }
    static Potential harmonic(double omega) {
        if (omega < 0.0) fail(Error::Code::domain, "harmonic potential needs omega >= 0");
        Potential p;
        p.kind = Kind::harmonic;
        p.omega = omega;
        return p;
    }
    static Potential custom(std::function<double(const Vec3&)> value,
                            std::function<Vec3(const Vec3&)> gradient, double growth_bound) {
        if (growth_bound <= 0.0)
            fail(Error::Code::domain, "custom potential must declare a gradient growth bound K");
        Potential p;
        p.kind = Kind::custom;
        p.custom_value = std::move(value);
        p.custom_gradient = std::move(gradient);
        p.growth_bound = growth_bound;
        return p;
    }

    double value(const Vec3& q) const {
        switch (kind) {
            case Kind::constant: return v0;
            case Kind::harmonic: return 0.5 * omega * omega * norm2(q);
            case Kind::custom: return custom_value(q);
        }
        return 0.0;
    }

    Vec3 gradient(const Vec3& q) const {
        switch (kind) {
            case Kind::constant: return {};
            case Kind::harmonic: return (omega * omega) * q;
            case Kind::custom: {
                Vec3 g = custom_gradient(q);
                if (norm(g) > growth_bound * (1.0 + norm(q)) * (1.0 + 1e-12))
                    fail(Error::Code::domain,
                         "custom potential gradient exceeds its declared bound K(1+|q|)");
                return g;
            }
        }
        return {};
    }

    bool is_constant() const { return kind == Kind::constant; }
};

// Phenomenological mass, charge, light speed, external potential.
// Default units m = e = c = 1, which puts the point eigenvalue at
// lambda0 = 2.25 and the runaway rate at c sqrt(lambda0) = 1.5.
struct PhysParams {
    double m = 1.0;
    double e = 1.0;
    double c = 1.0;
    Potential potential = Potential::constant();

    // Basic sanity: needed by every module. e = 0 is tolerated here because
    // the regularized simulator supports decoupled (free) control runs; the
    // operations that genuinely need the charge call require_charged().
    void validate() const {
        if (!(m > 0.0)) fail(Error::Code::domain, "mass must be positive");
        if (!(c > 0.0)) fail(Error::Code::domain, "light speed must be positive");
        if (!std::isfinite(e)) fail(Error::Code::domain, "charge must be finite");
    }

    void require_charged() const {
        validate();
        if (e == 0.0) fail(Error::Code::domain, "operation undefined for e = 0");
    }
};

}  // namespace plim
