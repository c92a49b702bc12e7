#include "lorentz/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lorentz/errors.hpp"

namespace lorentz {

GroupElement boosted_rotation(double theta, double eta) {
    return boost_z(eta) * rot_y(theta) * boost_z(-eta);
}

GroupElement phased_boosted_rotation(double theta, double eta, double phi) {
    return rot_z(phi) * boosted_rotation(theta, eta) * rot_z(-phi);
}

double contraction_angle(double gamma, double eta) {
    const double arg = gamma * std::exp(-eta);
    if (!(arg <= 1.0))
        throw DomainError("contraction angle undefined: gamma * e^-eta = " +
                          std::to_string(arg) + " exceeds 1");
    return 2.0 * std::asin(arg);
}

std::vector<SweepPoint> contraction_sweep(double gamma, double phi,
                                          double eta_min, double eta_max,
                                          int steps) {
    if (steps < 2) throw DomainError("contraction sweep needs at least 2 steps");
    if (!(eta_min < eta_max))
        throw DomainError("contraction sweep needs eta_min < eta_max");
    const Mat2 target = shear(gamma, phi).undotted;
    std::vector<SweepPoint> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double eta =
            eta_min + (eta_max - eta_min) * double(k) / double(steps - 1);
        const double theta = contraction_angle(gamma, eta);
        const Mat2 g = phased_boosted_rotation(theta, eta, phi).undotted;
        out.push_back({eta, theta, max_abs(g - target)});
    }
    return out;
}

LineFit fit_log_deviation(const std::vector<SweepPoint>& points) {
    if (points.size() < 2)
        throw DomainError("log-deviation fit needs at least 2 points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        if (!(p.deviation > 0.0))
            throw DomainError("log-deviation fit needs positive deviations");
        const double y = std::log(p.deviation);
        sx += p.eta;
        sy += y;
        sxx += p.eta * p.eta;
        sxy += p.eta * y;
    }
    const double n = double(points.size());
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    return {slope, (sy - slope * sx) / n};
}

double lorentz_condition_defect(const FourPotential& p) {
    return std::abs(p.a0 - p.az);
}

FourPotential gauge_transform(const FourPotential& p, double gamma,
                              double phi) {
    const double shift =
        2.0 * gamma * (p.ax * std::cos(phi) + p.ay * std::sin(phi));
    // Shift a0 and az by the same amount; ax, ay are returned as given.
    return {p.a0 - shift / 2.0, p.az - shift / 2.0, p.ax, p.ay};
}

FourPotential gauge_transform_matrix(const FourPotential& p, double gamma,
                                     double phi, double tol) {
    const double scale = std::max(
        {1.0, std::abs(p.a0), std::abs(p.az), std::abs(p.ax), std::abs(p.ay)});
    if (lorentz_condition_defect(p) > tol * scale)
        throw LorentzConditionViolated(
            "gauge transformation by matrix conjugation requires a0 = az "
            "(defect " +
            std::to_string(lorentz_condition_defect(p)) + ")");
    return apply(shear(gamma, phi), p);
}

BoostLimitResult boost_limit(const Mat2& h, double eta, double tol) {
    const double scale = std::exp(-eta);
    const double threshold = tol * std::max(1.0, max_abs(h));
    Mat2 rescaled{h.m00, scale * h.m01, scale * h.m10,
                  scale * scale * h.m11};
    if (std::abs(rescaled.m11) > threshold)
        throw InsufficientBoost(
            "rapidity " + std::to_string(eta) +
            " leaves a lower-diagonal residue of magnitude " +
            std::to_string(std::abs(rescaled.m11)) +
            " above the threshold " + std::to_string(threshold));
    double dropped = 0.0;
    const auto truncate = [&](cplx& e) {
        if (std::abs(e) <= threshold) {
            dropped = std::max(dropped, std::abs(e));
            e = 0.0;
        }
    };
    truncate(rescaled.m00);
    truncate(rescaled.m01);
    truncate(rescaled.m10);
    truncate(rescaled.m11);
    return {potential_from_matrix(rescaled), rescaled, dropped};
}

BoostLimitResult boost_limit(const FourPotential& p, double eta, double tol) {
    return boost_limit(to_matrix(p), eta, tol);
}

}  // namespace lorentz
