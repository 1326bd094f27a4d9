#include "plim/sector_field.hpp"

#include <cmath>
#include <functional>

namespace plim {

namespace {

constexpr double k2pi2 = 2.0 * kPi * kPi;

void require_same_grid(const HybridSectorField& A, const HybridSectorField& B) {
    if (!A.grid() || !B.grid()) fail(Error::Code::domain, "field without a grid");
    if (A.grid() != B.grid() && !A.g().compatible(B.g()))
        fail(Error::Code::domain, "sector fields live on different grids");
}

double singular_prefactor(const PhysParams& p) {
    p.require_charged();
    return 4.0 * kPi * p.e / p.c;
}

}  // namespace

HybridSectorField::HybridSectorField(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) fail(Error::Code::domain, "null grid");
    for (auto& prof : regular_) prof = RadialProfile(grid_->size());
}

HybridSectorField HybridSectorField::from_profiles(
    GridPtr grid, const std::array<std::function<double(double)>, 3>& fhat) {
    HybridSectorField A(std::move(grid));
    for (int j = 0; j < 3; ++j) {
        if (!fhat[j]) continue;
        for (std::size_t i = 0; i < A.g().size(); ++i) A.regular_[j][i] = fhat[j](A.g().node(i));
    }
    return A;
}

HybridSectorField HybridSectorField::axis_profile(GridPtr grid, int axis,
                                                  const std::function<double(double)>& fhat) {
    if (axis < 0 || axis > 2) fail(Error::Code::domain, "axis out of range");
    HybridSectorField A(std::move(grid));
    for (std::size_t i = 0; i < A.g().size(); ++i) A.regular_[axis][i] = fhat(A.g().node(i));
    return A;
}

HybridSectorField HybridSectorField::singular_field(GridPtr grid, const Vec3& q, double lambda) {
    HybridSectorField A(std::move(grid));
    A.singular_.emplace_back(q, lambda);
    return A;
}

Vec3 HybridSectorField::singular_coefficient_sum() const {
    Vec3 s;
    for (const auto& term : singular_) s += term.q;
    return s;
}

double HybridSectorField::profile_at_node(int axis, std::size_t i, const PhysParams& p) const {
    double v = regular_[axis][i];
    if (!singular_.empty()) {
        const double k2 = g().node(i) * g().node(i);
        const double pref = singular_prefactor(p);
        for (const auto& term : singular_) v += pref * term.q[axis] / (k2 + term.lambda);
    }
    return v;
}

HybridSectorField HybridSectorField::with_singular_scale(double lambda_target,
                                                         const PhysParams& p) const {
    if (!(lambda_target > 0.0)) fail(Error::Code::domain, "target scale must be positive");
    if (singular_.empty()) return *this;
    if (singular_.size() == 1 && singular_[0].lambda == lambda_target) return *this;

    HybridSectorField out = *this;
    out.singular_.clear();
    const double pref = singular_prefactor(p);
    for (const auto& term : singular_) {
        if (term.lambda == lambda_target) continue;
        // G_lambda - G_mu is H^2-regular; its profile joins the samples.
        for (int j = 0; j < 3; ++j) {
            const double cj = pref * term.q[j];
            if (cj == 0.0) continue;
            for (std::size_t i = 0; i < g().size(); ++i) {
                const double k2 = g().node(i) * g().node(i);
                out.regular_[j][i] += cj * (1.0 / (k2 + term.lambda) - 1.0 / (k2 + lambda_target));
            }
        }
    }
    const Vec3 total = singular_coefficient_sum();
    if (max_abs(total) > 0.0) out.singular_.emplace_back(total, lambda_target);
    return out;
}

HybridSectorField& HybridSectorField::operator+=(const HybridSectorField& o) {
    require_same_grid(*this, o);
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < regular_[j].size(); ++i) regular_[j][i] += o.regular_[j][i];
    singular_.insert(singular_.end(), o.singular_.begin(), o.singular_.end());
    return *this;
}

HybridSectorField& HybridSectorField::operator-=(const HybridSectorField& o) {
    require_same_grid(*this, o);
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < regular_[j].size(); ++i) regular_[j][i] -= o.regular_[j][i];
    for (const auto& term : o.singular_) singular_.emplace_back(-term.q, term.lambda);
    return *this;
}

HybridSectorField& HybridSectorField::operator*=(double s) {
    for (int j = 0; j < 3; ++j)
        for (auto& v : regular_[j].fhat) v *= s;
    for (auto& term : singular_) term.q *= s;
    return *this;
}

double sector_inner(const HybridSectorField& A, const HybridSectorField& B, const PhysParams& p) {
    require_same_grid(A, B);
    const SpectralGrid& g = A.g();
    const bool sa = !A.singular().empty(), sb = !B.singular().empty();
    const double pref = (sa || sb) ? singular_prefactor(p) : 0.0;

    double acc = 0.0;
    // regular x regular and regular x singular in one pass over the nodes
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = g.node(i), w = g.weight(i), k2 = k * k;
        double term = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double fa = A.regular()[j][i], fb = B.regular()[j][i];
            term += fa * fb;
            if (sb)
                for (const auto& s : B.singular()) term += fa * pref * s.q[j] / (k2 + s.lambda);
            if (sa)
                for (const auto& s : A.singular()) term += fb * pref * s.q[j] / (k2 + s.lambda);
        }
        acc += w * k2 * term;
    }
    acc /= k2pi2;
    // singular x singular closed form
    if (sa && sb)
        for (const auto& s : A.singular())
            for (const auto& t : B.singular())
                acc += pref * pref * dot(s.q, t.q) * green_inner(s.lambda, t.lambda);
    return (2.0 / 3.0) * acc;
}

double sector_norm(const HybridSectorField& A, const PhysParams& p) {
    return std::sqrt(std::max(0.0, sector_inner(A, A, p)));
}

Vec3 pair_with_green(double lambda, const HybridSectorField& A, const PhysParams& p) {
    if (!(lambda > 0.0)) fail(Error::Code::domain, "pair_with_green needs lambda > 0");
    const SpectralGrid& g = A.g();
    Vec3 out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = g.node(i), w = g.weight(i);
        const double kk = w * k * k / (k * k + lambda);
        out.x += kk * A.regular()[0][i];
        out.y += kk * A.regular()[1][i];
        out.z += kk * A.regular()[2][i];
    }
    out *= 1.0 / k2pi2;
    if (!A.singular().empty()) {
        const double pref = singular_prefactor(p);
        for (const auto& s : A.singular()) out += pref * green_inner(lambda, s.lambda) * s.q;
    }
    return (2.0 / 3.0) * out;
}

Vec3 eval_at_origin(const HybridSectorField& A) {
    if (!A.purely_regular())
        fail(Error::Code::singular_point, "field with singular terms has no origin value");
    const SpectralGrid& g = A.g();
    Vec3 out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double kk = g.weight(i) * g.node(i) * g.node(i);
        out.x += kk * A.regular()[0][i];
        out.y += kk * A.regular()[1][i];
        out.z += kk * A.regular()[2][i];
    }
    return (2.0 / 3.0 / k2pi2) * out;
}

Vec3 sphere_average(const HybridSectorField& A, double rho, const PhysParams& p) {
    if (!(rho > 0.0)) fail(Error::Code::domain, "sphere_average needs radius > 0");
    const SpectralGrid& g = A.g();
    Vec3 out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = g.node(i);
        const double kk = g.weight(i) * k * k * sinc(k * rho);
        out.x += kk * A.regular()[0][i];
        out.y += kk * A.regular()[1][i];
        out.z += kk * A.regular()[2][i];
    }
    out *= 1.0 / k2pi2;
    if (!A.singular().empty()) {
        p.require_charged();
        for (const auto& s : A.singular())
            out += (p.e / p.c) * std::exp(-std::sqrt(s.lambda) * rho) / rho * s.q;
    }
    return (2.0 / 3.0) * out;
}

namespace {

// Vector Richardson ladder shared by extract_Q and boundary_residual.
Vec3 richardson_vec(const std::function<Vec3(double)>& h, const ExtrapolationOptions& opt,
                    const char* what) {
    std::vector<std::vector<Vec3>> T;
    Vec3 prev;
    const int max_levels = std::max(opt.levels, 3) + 2;
    for (int i = 0; i < max_levels; ++i) {
        const double rho = opt.rho0 * std::pow(0.5, i);
        std::vector<Vec3> row(1, h(rho));
        for (int j = 1; j <= i; ++j) {
            const double f = std::pow(2.0, j);
            row.push_back((f * row[j - 1] - T[i - 1][j - 1]) * (1.0 / (f - 1.0)));
        }
        T.push_back(row);
        if (i >= opt.levels - 1 && max_abs(row.back() - prev) < opt.tol) return row.back();
        prev = row.back();
    }
    fail(Error::Code::extrapolation, std::string(what) + ": Richardson ladder did not settle");
}

}  // namespace

Vec3 extract_Q(const HybridSectorField& A, const PhysParams& p, const ExtrapolationOptions& opt) {
    p.require_charged();
    const double scale = 3.0 * p.c / (2.0 * p.e);
    return richardson_vec(
        [&](double rho) { return scale * rho * sphere_average(A, rho, p); }, opt, "extract_Q");
}

Vec3 boundary_residual(const HybridSectorField& A, const Vec3& p_momentum, const PhysParams& p,
                       const ExtrapolationOptions& opt) {
    p.require_charged();
    const Vec3 QA = extract_Q(A, p, opt);
    // Averages of A - (4 pi e / c) M Q_A G_0; the 1/rho poles cancel in the
    // combined formula, leaving (e/c) Q_s (exp(-sqrt(lambda) rho) - 1)/rho
    // per singular term plus the extraction mismatch.
    const Vec3 mismatch = A.singular_coefficient_sum() - QA;
    auto avg = [&](double rho) {
        const SpectralGrid& g = A.g();
        Vec3 out;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double k = g.node(i);
            const double kk = g.weight(i) * k * k * sinc(k * rho);
            out.x += kk * A.regular()[0][i];
            out.y += kk * A.regular()[1][i];
            out.z += kk * A.regular()[2][i];
        }
        out *= 1.0 / k2pi2;
        for (const auto& s : A.singular())
            out += (p.e / p.c) * std::expm1(-std::sqrt(s.lambda) * rho) / rho * s.q;
        out += (p.e / p.c) / rho * mismatch;
        return (2.0 / 3.0) * out;
    };
    const Vec3 limit = richardson_vec(avg, opt, "boundary_residual");
    const Vec3 target = -(p.m * p.c / p.e) * QA + (p.c / p.e) * p_momentum;
    return limit - target;
}

HybridSectorField apply_resolvent(double z, const HybridSectorField& X, const PhysParams& p) {
    p.require_charged();
    if (!(z > 0.0)) fail(Error::Code::domain, "apply_resolvent needs z > 0");
    const double gm = gamma_m(z, p);
    if (std::abs(gm) < 1e-13)
        fail(Error::Code::pole, "apply_resolvent at z = lambda0 (point spectrum pole)");

    const SpectralGrid& g = X.g();
    const double pref = singular_prefactor(p);
    HybridSectorField out(X.grid());

    // free resolvent on the sampled part
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double k2 = g.node(i) * g.node(i);
            out.regular()[j][i] = X.regular()[j][i] / (k2 + z);
        }
    // free resolvent on singular terms: exact lambda-shift identity, with a
    // sampled 1/(k^2+z)^2 branch when the scales collide
    Vec3 at_z_coefficient;
    for (const auto& s : X.singular()) {
        if (std::abs(z - s.lambda) < 1e-10 * std::max(1.0, z)) {
            for (int j = 0; j < 3; ++j) {
                const double cj = pref * s.q[j];
                if (cj == 0.0) continue;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const double d = g.node(i) * g.node(i) + z;
                    out.regular()[j][i] += cj / (d * d);
                }
            }
        } else {
            const double f = 1.0 / (z - s.lambda);
            out.singular().emplace_back(f * s.q, s.lambda);
            at_z_coefficient += -f * s.q;
        }
    }
    // rank-one correction Gamma_m(z)^-1 M G_z <G_z, X>
    const Vec3 pairing = pair_with_green(z, X, p);
    at_z_coefficient += (p.c / (4.0 * kPi * p.e)) / gm * pairing;
    if (max_abs(at_z_coefficient) > 0.0) out.singular().emplace_back(at_z_coefficient, z);
    (void)l0;
    return out;
}

double form_Fm(const HybridSectorField& A, double lambda, const PhysParams& p) {
    p.require_charged();
    if (!(lambda > 0.0)) fail(Error::Code::domain, "form_Fm needs an auxiliary lambda > 0");
    const HybridSectorField An = A.with_singular_scale(lambda, p);
    const SpectralGrid& g = A.g();
    const double pref = singular_prefactor(p);
    const Vec3 QA = A.singular_coefficient_sum();

    // || (-Delta + lambda)^{1/2} A_lambda ||^2 on the stripped regular part
    double h1 = 0.0;
    double last_integrand = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = g.node(i), k2 = k * k;
        double term = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double fj = An.regular()[j][i];
            term += fj * fj;
        }
        const double integrand = k2 * (k2 + lambda) * term;
        h1 += g.weight(i) * integrand;
        if (i + 1 == g.size()) last_integrand = integrand;
    }
    h1 *= (2.0 / 3.0) / k2pi2;
    if (last_integrand * g.k_max() > 1e-6 * (1.0 + std::abs(h1)) * k2pi2)
        fail(Error::Code::accuracy,
             "form_Fm: H^1 quadrature not converged at k_max (profile decays too slowly)");

    const double gm = gamma_m(lambda, p);
    const double l2 = sector_inner(A, A, p);
    return h1 + pref * pref * gm * norm2(QA) - lambda * l2;
}

Vec3 p_functional(const HybridSectorField& A, const PhysParams& p) {
    const double l0 = lambda0(p);
    return -12.0 * kPi * std::sqrt(l0) * pair_with_green(l0, A, p);
}

namespace {

// Radial transforms behind the pointwise reconstruction:
//   T0[f](r) = (1/2 pi^2) Int k^2 fhat j0(kr) dk
//   T1[f](r) = (1/2 pi^2) Int k^2 fhat j1(kr)/(kr) dk
// For fhat = 1/(k^2+a^2):  T0 = G(r) = e^{-ar}/(4 pi r),
//   T1 = (1/4 pi r) g(ar),  g(u) = (1 - e^{-u}(1+u))/u^2.
double yukawa_t1(double a, double r) {
    const double u = a * r;
    double gu;
    if (u < 1e-2) {
        gu = 0.5 + u * (-1.0 / 3.0 + u * (0.125 + u * (-1.0 / 30.0 + u / 144.0)));
    } else {
        gu = (1.0 - std::exp(-u) * (1.0 + u)) / (u * u);
    }
    return gu / (4.0 * kPi * r);
}

}  // namespace

Vec3 reconstruct_at_point(const HybridSectorField& A, const Vec3& x, const PhysParams& p) {
    const double r = norm(x);
    if (r == 0.0) {
        // consistency with eval_at_origin (errors out on singular terms)
        return eval_at_origin(A);
    }
    const Vec3 xhat = x / r;
    const SpectralGrid& g = A.g();
    Vec3 value;
    for (int j = 0; j < 3; ++j) {
        double t0 = 0.0, t1 = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double k = g.node(i), kr = k * r;
            const double kk = g.weight(i) * k * k * A.regular()[j][i];
            t0 += kk * sinc(kr);
            t1 += kk * sph_j1(kr) / kr;
        }
        t0 /= k2pi2;
        t1 /= k2pi2;
        const double alpha = t0 - t1;
        const double beta = -(t0 - 3.0 * t1);
        Vec3 ej;
        ej[j] = 1.0;
        value += alpha * ej + beta * xhat[j] * xhat;
    }
    if (!A.singular().empty()) {
        const double pref = singular_prefactor(p);
        for (const auto& s : A.singular()) {
            const double a = std::sqrt(s.lambda);
            const double t0 = green_eval(s.lambda, r);
            const double t1 = yukawa_t1(a, r);
            const double alpha = t0 - t1, beta = -(t0 - 3.0 * t1);
            value += pref * (alpha * s.q + beta * dot(xhat, s.q) * xhat);
        }
    }
    return value;
}

}  // namespace plim
