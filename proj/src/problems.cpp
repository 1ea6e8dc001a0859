#include "moead/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moead/decomposition.hpp"

namespace moead {

namespace {

constexpr double kPi = std::numbers::pi;

double zdt_g(const DecisionVector& x) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
    return 1.0 + 9.0 * s / (static_cast<double>(x.size()) - 1.0);
}

// Distance functions shared by the DTLZ family; the position variables are
// x_1..x_{m-1}, the distance variables the remaining k = n - m + 1.
double dtlz_g_rastrigin(const DecisionVector& x, int m) {
    double s = 0.0;
    const auto k = static_cast<double>(x.size() - static_cast<std::size_t>(m) + 1);
    for (std::size_t i = static_cast<std::size_t>(m) - 1; i < x.size(); ++i) {
        const double d = x[i] - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (k + s);
}

double dtlz_g_sphere(const DecisionVector& x, int m) {
    double s = 0.0;
    for (std::size_t i = static_cast<std::size_t>(m) - 1; i < x.size(); ++i) {
        const double d = x[i] - 0.5;
        s += d * d;
    }
    return s;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

// Evenly strided subset of `pts` (already ordered along the front).
std::vector<ObjectiveVector> thin_to(std::vector<ObjectiveVector> pts, int count) {
    const std::size_t n = pts.size();
    if (n <= static_cast<std::size_t>(count)) return pts;
    std::vector<ObjectiveVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const std::size_t idx =
            static_cast<std::size_t>(j) * (n - 1) / static_cast<std::size_t>(count - 1);
        out.push_back(pts[idx]);
    }
    return out;
}

bool objective_less(const ObjectiveVector& a, const ObjectiveVector& b) {
    for (int j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return true;
        if (a[j] > b[j]) return false;
    }
    return false;
}

}  // namespace

Problem::Problem(ProblemFamily family, std::string name, int n, int m, Bounds bounds)
    : family_(family), name_(std::move(name)), n_(n), m_(m), bounds_(std::move(bounds)) {}

const std::vector<std::string>& Problem::known_names() {
    static const std::vector<std::string> names = {
        "zdt1", "zdt2", "zdt3", "zdt4", "zdt6",
        "dtlz1", "dtlz2", "dtlz3", "dtlz4", "dtlz5", "dtlz6", "dtlz7",
    };
    return names;
}

Problem Problem::by_name(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    auto box = [](int n, double lo, double hi) {
        Bounds b;
        b.low.assign(static_cast<std::size_t>(n), lo);
        b.high.assign(static_cast<std::size_t>(n), hi);
        return b;
    };

    if (key == "zdt1") return Problem(ProblemFamily::zdt1, key, 30, 2, box(30, 0.0, 1.0));
    if (key == "zdt2") return Problem(ProblemFamily::zdt2, key, 30, 2, box(30, 0.0, 1.0));
    if (key == "zdt3") return Problem(ProblemFamily::zdt3, key, 30, 2, box(30, 0.0, 1.0));
    if (key == "zdt4") {
        Bounds b = box(30, -5.0, 5.0);
        b.low[0] = 0.0;
        b.high[0] = 1.0;
        return Problem(ProblemFamily::zdt4, key, 30, 2, std::move(b));
    }
    if (key == "zdt6") return Problem(ProblemFamily::zdt6, key, 30, 2, box(30, 0.0, 1.0));
    if (key == "dtlz1") return Problem(ProblemFamily::dtlz1, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz2") return Problem(ProblemFamily::dtlz2, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz3") return Problem(ProblemFamily::dtlz3, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz4") return Problem(ProblemFamily::dtlz4, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz5") return Problem(ProblemFamily::dtlz5, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz6") return Problem(ProblemFamily::dtlz6, key, 10, 3, box(10, 0.0, 1.0));
    if (key == "dtlz7") return Problem(ProblemFamily::dtlz7, key, 10, 3, box(10, 0.0, 1.0));
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

ObjectiveVector Problem::evaluate(const DecisionVector& x) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::domain_error(name_ + ": decision vector has wrong length");
    if (!bounds_.contains(x)) throw std::domain_error(name_ + ": decision vector out of bounds");

    switch (family_) {
        case ProblemFamily::zdt1: {
            const double f1 = x[0];
            const double g = zdt_g(x);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case ProblemFamily::zdt2: {
            const double f1 = x[0];
            const double g = zdt_g(x);
            const double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        case ProblemFamily::zdt3: {
            const double f1 = x[0];
            const double g = zdt_g(x);
            const double r = f1 / g;
            return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
        }
        case ProblemFamily::zdt4: {
            const double f1 = x[0];
            double g = 1.0 + 10.0 * (static_cast<double>(n_) - 1.0);
            for (std::size_t i = 1; i < x.size(); ++i)
                g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case ProblemFamily::zdt6: {
            const double s6 = std::sin(6.0 * kPi * x[0]);
            const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s6, 6.0);
            double s = 0.0;
            for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
            const double g =
                1.0 + 9.0 * std::pow(s / (static_cast<double>(n_) - 1.0), 0.25);
            const double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        case ProblemFamily::dtlz1: {
            const double g = dtlz_g_rastrigin(x, m_);
            const double c = 0.5 * (1.0 + g);
            return {c * x[0] * x[1], c * x[0] * (1.0 - x[1]), c * (1.0 - x[0])};
        }
        case ProblemFamily::dtlz2:
        case ProblemFamily::dtlz3:
        case ProblemFamily::dtlz4: {
            const double g = family_ == ProblemFamily::dtlz3 ? dtlz_g_rastrigin(x, m_)
                                                             : dtlz_g_sphere(x, m_);
            const double alpha = family_ == ProblemFamily::dtlz4 ? 100.0 : 1.0;
            const double t1 = std::pow(x[0], alpha) * kPi / 2.0;
            const double t2 = std::pow(x[1], alpha) * kPi / 2.0;
            const double c = 1.0 + g;
            return {c * std::cos(t1) * std::cos(t2), c * std::cos(t1) * std::sin(t2),
                    c * std::sin(t1)};
        }
        case ProblemFamily::dtlz5:
        case ProblemFamily::dtlz6: {
            double g = 0.0;
            if (family_ == ProblemFamily::dtlz5) {
                g = dtlz_g_sphere(x, m_);
            } else {
                for (std::size_t i = static_cast<std::size_t>(m_) - 1; i < x.size(); ++i)
                    g += std::pow(x[i], 0.1);
            }
            const double t1 = x[0] * kPi / 2.0;
            const double t2 = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[1]);
            const double c = 1.0 + g;
            return {c * std::cos(t1) * std::cos(t2), c * std::cos(t1) * std::sin(t2),
                    c * std::sin(t1)};
        }
        case ProblemFamily::dtlz7: {
            double s = 0.0;
            const auto k = static_cast<double>(n_ - m_ + 1);
            for (std::size_t i = static_cast<std::size_t>(m_) - 1; i < x.size(); ++i) s += x[i];
            const double g = 1.0 + 9.0 * s / k;
            double h = static_cast<double>(m_);
            for (int j = 0; j < m_ - 1; ++j)
                h -= x[static_cast<std::size_t>(j)] / (1.0 + g) *
                     (1.0 + std::sin(3.0 * kPi * x[static_cast<std::size_t>(j)]));
            return {x[0], x[1], (1.0 + g) * h};
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<ObjectiveVector> Problem::true_front_sample(int count) const {
    if (count < m_) throw std::invalid_argument(name_ + ": front sample needs count >= m");

    switch (family_) {
        case ProblemFamily::zdt1:
        case ProblemFamily::zdt4: {
            std::vector<ObjectiveVector> out;
            for (const double f1 : linspace(0.0, 1.0, count))
                out.push_back({f1, 1.0 - std::sqrt(f1)});
            return out;
        }
        case ProblemFamily::zdt2: {
            std::vector<ObjectiveVector> out;
            for (const double f1 : linspace(0.0, 1.0, count))
                out.push_back({f1, 1.0 - f1 * f1});
            return out;
        }
        case ProblemFamily::zdt3: {
            std::vector<ObjectiveVector> candidates;
            for (const double f1 : linspace(0.0, 1.0, std::max(40 * count, 4000))) {
                candidates.push_back(
                    {f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1)});
            }
            auto front = nondominated_filter(candidates);
            std::sort(front.begin(), front.end(), objective_less);
            return thin_to(std::move(front), count);
        }
        case ProblemFamily::zdt6: {
            // f2 = 1 - f1^2 over the achievable f1 range, which starts at
            // min_x f1(x) (~0.28078); locate the minimum on a dense grid.
            double f1_min = 1.0;
            for (const double x1 : linspace(0.0, 1.0, 200001)) {
                const double s6 = std::sin(6.0 * kPi * x1);
                const double f1 = 1.0 - std::exp(-4.0 * x1) * std::pow(s6, 6.0);
                if (f1 < f1_min) f1_min = f1;
            }
            std::vector<ObjectiveVector> out;
            for (const double f1 : linspace(f1_min, 1.0, count))
                out.push_back({f1, 1.0 - f1 * f1});
            return out;
        }
        case ProblemFamily::dtlz1:
        case ProblemFamily::dtlz2:
        case ProblemFamily::dtlz3:
        case ProblemFamily::dtlz4: {
            int h = 1;
            while (sld_count(3, h) < static_cast<std::uint64_t>(count)) ++h;
            std::vector<ObjectiveVector> pts;
            pts.reserve(sld_count(3, h));
            const double hd = static_cast<double>(h);
            for (int i = 0; i <= h; ++i) {
                for (int j = 0; j <= h - i; ++j) {
                    const double a = static_cast<double>(i) / hd;
                    const double b = static_cast<double>(j) / hd;
                    const double c = static_cast<double>(h - i - j) / hd;
                    if (family_ == ProblemFamily::dtlz1) {
                        pts.push_back({0.5 * a, 0.5 * b, 0.5 * c});
                    } else {
                        const double norm = std::sqrt(a * a + b * b + c * c);
                        pts.push_back({a / norm, b / norm, c / norm});
                    }
                }
            }
            std::sort(pts.begin(), pts.end(), objective_less);
            return thin_to(std::move(pts), count);
        }
        case ProblemFamily::dtlz5:
        case ProblemFamily::dtlz6: {
            std::vector<ObjectiveVector> out;
            const double quarter = kPi / 4.0;
            for (const double t : linspace(0.0, kPi / 2.0, count)) {
                out.push_back({std::cos(t) * std::cos(quarter),
                               std::cos(t) * std::sin(quarter), std::sin(t)});
            }
            return out;
        }
        case ProblemFamily::dtlz7: {
            const int side = std::max(static_cast<int>(std::ceil(std::sqrt(9.0 * count))), 80);
            std::vector<ObjectiveVector> candidates;
            candidates.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
            for (const double f1 : linspace(0.0, 1.0, side)) {
                for (const double f2 : linspace(0.0, 1.0, side)) {
                    double h = 3.0;
                    for (const double fj : {f1, f2})
                        h -= fj / 2.0 * (1.0 + std::sin(3.0 * kPi * fj));
                    candidates.push_back({f1, f2, 2.0 * h});
                }
            }
            auto front = nondominated_filter(candidates);
            std::sort(front.begin(), front.end(), objective_less);
            return thin_to(std::move(front), count);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace moead
