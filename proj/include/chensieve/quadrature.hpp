#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "chensieve/errors.hpp"

namespace chensieve::quadrature {

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0; // accumulated |K15 - G7| over the final partition
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kWeightK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kWeightG[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double f0 = f(mid);
    double k = kWeightK[0] * f0;
    double g = kWeightG[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double fi = f(mid + half * kNodes[i]) + f(mid - half * kNodes[i]);
        k += kWeightK[i] * fi;
        if (i % 2 == 0) g += kWeightG[i / 2] * fi;
    }
    value = k * half;
    err = std::fabs((k - g) * half);
}

} // namespace detail

/// Adaptive bisection with G7/K15 panels. The reported error bound is the
/// sum of per-panel |K15-G7| differences over the final partition, checked
/// once more against a run with every panel halved (interval doubling).
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-10,
                     std::size_t max_panels = 4096) {
    struct Panel {
        double a, b, value, err;
    };
    std::vector<Panel> panels;
    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    panels.push_back({a, b, v0, e0});
    std::size_t evals = 15;

    auto total_err = [&] {
        double s = 0;
        for (const auto& p : panels) s += p.err;
        return s;
    };
    while (total_err() > abs_tol) {
        if (panels.size() >= max_panels)
            throw NumericalError("quadrature: panel budget exhausted before reaching tolerance");
        // split the worst panel
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        Panel left{p.a, mid, 0, 0}, right{mid, p.b, 0, 0};
        detail::gk15(f, left.a, left.b, left.value, left.err);
        detail::gk15(f, right.a, right.b, right.value, right.err);
        evals += 30;
        panels[worst] = left;
        panels.push_back(right);
    }

    // order-independent summation: sort panels by left endpoint
    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    double coarse = 0;
    for (const auto& p : panels) coarse += p.value;

    // certification pass: halve every panel and compare
    double fine = 0, fine_err = 0;
    for (const auto& p : panels) {
        double mid = 0.5 * (p.a + p.b), v1, e1, v2, e2;
        detail::gk15(f, p.a, mid, v1, e1);
        detail::gk15(f, mid, p.b, v2, e2);
        evals += 30;
        fine += v1 + v2;
        fine_err += e1 + e2;
    }

    QuadResult r;
    r.value = fine;
    r.error_bound = std::max(fine_err, std::fabs(fine - coarse));
    r.evaluations = evals;
    if (!(r.error_bound <= abs_tol))
        throw NumericalError("quadrature: certification pass disagrees with the adaptive estimate");
    return r;
}

/// Iterated 2-D integral over a box-bounded region: for each outer t1 the
/// inner integrand runs over [y_lo(t1), y_hi(t1)] (empty when reversed).
inline QuadResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                               const std::function<double(double)>& y_lo,
                               const std::function<double(double)>& y_hi, double abs_tol = 1e-8) {
    std::size_t inner_evals = 0;
    auto outer = [&](double t1) {
        double lo = y_lo(t1), hi = y_hi(t1);
        if (!(lo < hi)) return 0.0;
        auto res = integrate([&](double t2) { return f(t1, t2); }, lo, hi, abs_tol / 64.0);
        inner_evals += res.evaluations;
        return res.value;
    };
    auto res = integrate(outer, a, b, abs_tol);
    res.evaluations += inner_evals;
    return res;
}

} // namespace chensieve::quadrature
