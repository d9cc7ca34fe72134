#include "pme/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace pme::quad {
namespace {

// Kronrod nodes on [0, 1] (symmetric), abscissae from QUADPACK qk15.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment rule15(const std::function<double(double)>& f, double a, double b, int& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrod[7];
    double gauss = fc * kGauss[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double s = f(center - dx) + f(center + dx);
        kronrod += kKronrod[j] * s;
        if (j % 2 == 1) gauss += kGauss[j / 2] * s;
    }
    evals += 15;
    return Segment{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_intervals) {
    Result result;
    if (a == b) return result;
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quad::integrate: tolerance must be positive");
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Segment> heap;
    Segment first = rule15(f, a, b, result.evaluations);
    double value = first.value;
    double error = first.error;
    heap.push(first);
    int intervals = 1;
    while (error > abs_tol) {
        if (intervals >= max_intervals) {
            result.converged = false;
            break;
        }
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval at machine resolution; nothing more to gain.
            result.converged = false;
            break;
        }
        heap.pop();
        Segment left = rule15(f, worst.a, mid, result.evaluations);
        Segment right = rule15(f, mid, worst.b, result.evaluations);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }

    // Re-sum to drop the drift of the incremental updates.
    double total = 0.0;
    double total_error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_error += heap.top().error;
        heap.pop();
    }
    result.value = sign * total;
    result.error = total_error;
    return result;
}

Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> cuts, double abs_tol, int max_intervals) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    std::vector<double> points{lo};
    for (double c : cuts) {
        if (c > lo && c < hi) points.push_back(c);
    }
    std::sort(points.begin() + 1, points.end());
    points.push_back(hi);

    Result total;
    const double piece_tol = abs_tol / static_cast<double>(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] == points[i - 1]) continue;
        Result r = integrate(f, points[i - 1], points[i], piece_tol, max_intervals);
        total.value += r.value;
        total.error += r.error;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    if (b < a) total.value = -total.value;
    return total;
}

double trapezoid(std::span<const double> t, std::span<const double> values) {
    if (t.size() != values.size()) throw std::invalid_argument("quad::trapezoid: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        sum += 0.5 * (t[i] - t[i - 1]) * (values[i] + values[i - 1]);
    }
    return sum;
}

}  // namespace pme::quad
