#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fts/chaos.hpp"

namespace fts {

enum class ArKind {
    linear,    // x_{k+1} = theta * x_k
    quadratic, // x_{k+1} = theta * x_k^2
    combined   // x_{k+1} = theta1 * x_k^2 + theta2 * x_k
};

struct ArModel {
    ArKind kind;
    std::vector<double> theta;  // 1 coefficient, or 2 for combined

    double step(double x) const {
        switch (kind) {
            case ArKind::linear: return theta[0] * x;
            case ArKind::quadratic: return theta[0] * x * x;
            case ArKind::combined: return theta[0] * x * x + theta[1] * x;
        }
        throw std::logic_error("ArModel: unknown kind");
    }
};

/// Ordinary least squares over consecutive pairs, no intercept. The combined
/// kind solves the 2x2 normal equations in closed form.
inline ArModel fit_ar(const TimeSeries& series, ArKind kind) {
    if (series.size() < 3)
        throw std::invalid_argument("fit_ar: need at least 3 samples");
    const auto& x = series.values;
    const std::size_t m = x.size() - 1;

    if (kind == ArKind::combined) {
        // regressors x^2 and x; normal equations
        // [s4 s3; s3 s2] [theta1; theta2] = [sy2; sy1]
        double s2 = 0, s3 = 0, s4 = 0, sy1 = 0, sy2 = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double u = x[k], y = x[k + 1];
            s2 += u * u;
            s3 += u * u * u;
            s4 += u * u * u * u;
            sy1 += y * u;
            sy2 += y * u * u;
        }
        const double det = s4 * s2 - s3 * s3;
        if (std::abs(det) < 1e-14 * std::max(1.0, s4 * s2))
            throw std::runtime_error("fit_ar: singular normal equations");
        return {kind, {(sy2 * s2 - sy1 * s3) / det, (s4 * sy1 - s3 * sy2) / det}};
    }

    double num = 0, den = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const double u = (kind == ArKind::linear) ? x[k] : x[k] * x[k];
        num += x[k + 1] * u;
        den += u * u;
    }
    if (den == 0.0)
        throw std::runtime_error("fit_ar: singular normal equations");
    return {kind, {num / den}};
}

/// Iterate the fitted model h times from x. Output is not clamped to [0,1].
inline double predict_ar(const ArModel& model, double x, std::size_t h) {
    if (h < 1)
        throw std::invalid_argument("predict_ar: h must be >= 1");
    double v = x;
    for (std::size_t step = 0; step < h; ++step) v = model.step(v);
    return v;
}

}  // namespace fts
