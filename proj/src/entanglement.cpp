#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "binom.hpp"
#include "errors.hpp"
#include "kahan.hpp"
#include "transforms.hpp"

namespace hyperstate {

namespace {

const double kPi = std::acos(-1.0);
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

// Golden-section maximization on [lo, hi]; assumes the bracket localizes a
// single peak (callers seed it from a fine grid).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo, double hi,
                                     double tol) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

struct Point2 {
    double x, y, value;
};

// Downhill-simplex maximization of a smooth 2d function, used to polish the
// coordinate-descent result.
Point2 nelder_mead_max_2d(const std::function<double(double, double)>& g, double x0, double y0,
                          double step, double tol, int max_iter) {
    std::array<Point2, 3> s = {Point2{x0, y0, g(x0, y0)},
                               Point2{x0 + step, y0, g(x0 + step, y0)},
                               Point2{x0, y0 + step, g(x0, y0 + step)}};
    auto order = [&]() { std::sort(s.begin(), s.end(), [](const Point2& a, const Point2& b) {
                             return a.value > b.value;
                         }); };
    order();
    for (int it = 0; it < max_iter; ++it) {
        const double size = std::max({std::abs(s[0].x - s[1].x), std::abs(s[0].x - s[2].x),
                                      std::abs(s[0].y - s[1].y), std::abs(s[0].y - s[2].y)});
        if (size < tol) break;
        const double cx = 0.5 * (s[0].x + s[1].x), cy = 0.5 * (s[0].y + s[1].y);
        auto eval = [&](double t) {
            Point2 p{cx + t * (cx - s[2].x), cy + t * (cy - s[2].y), 0.0};
            p.value = g(p.x, p.y);
            return p;
        };
        Point2 refl = eval(1.0);
        if (refl.value > s[0].value) {
            Point2 exp = eval(2.0);
            s[2] = (exp.value > refl.value) ? exp : refl;
        } else if (refl.value > s[1].value) {
            s[2] = refl;
        } else {
            Point2 con = eval(-0.5);
            if (con.value > s[2].value) {
                s[2] = con;
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = 0.5 * (s[i].x + s[0].x);
                    s[i].y = 0.5 * (s[i].y + s[0].y);
                    s[i].value = g(s[i].x, s[i].y);
                }
            }
        }
        order();
    }
    return s[0];
}

} // namespace

const char* geo_method_name(GeoMethod m) {
    switch (m) {
        case GeoMethod::closed_form: return "closed_form";
        case GeoMethod::symmetric_numeric: return "symmetric_numeric";
        case GeoMethod::oracle: return "oracle";
    }
    return "?";
}

cplx symmetric_overlap(const SymmetricState& s, double theta, double phi) {
    const int n = s.n_qubits;
    const double c = std::cos(theta), si = std::sin(theta);
    std::vector<double> cospow(n + 1), sinpow(n + 1);
    cospow[n] = 1.0;
    for (int w = n - 1; w >= 0; --w) cospow[w] = cospow[w + 1] * c; // cos^{n-w}
    sinpow[0] = 1.0;
    for (int w = 1; w <= n; ++w) sinpow[w] = sinpow[w - 1] * si;
    const cplx step = (phi == 0.0) ? cplx(1.0) : std::polar(1.0, phi);
    cplx ph = 1.0;
    const auto binom = binomial_row_d(n);
    KahanSumC acc;
    for (int w = 0; w <= n; ++w) {
        acc.add(binom[w] * std::conj(s.amp[w]) * (cospow[w] * sinpow[w]) * ph);
        ph *= step;
    }
    return acc.value();
}

GeoMeasureResult geomeasure_symmetric_numeric(const SymmetricState& s, bool allow_phase) {
    GeoMeasureResult r;
    r.method = GeoMethod::symmetric_numeric;
    const double refine_tol = 1e-12;

    if (!allow_phase) {
        auto g = [&](double th) { return std::norm(symmetric_overlap(s, th, 0.0)); };
        const int grid = 4096;
        const double h = kPi / grid;
        double best = -1.0, best_th = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double v = g(i * h);
            if (v > best + 1e-15) {
                best = v;
                best_th = i * h;
            }
        }
        auto [th, val] = golden_max(g, best_th - h, best_th + h, refine_tol);
        if (th < 0.0) th += kPi;
        r.theta = th;
        r.phi = 0.0;
        r.value = 1.0 - val;
        return r;
    }

    auto g = [&](double th, double ph) { return std::norm(symmetric_overlap(s, th, ph)); };
    const int grid = 512;
    const double ht = kPi / grid, hp = 2.0 * kPi / grid;
    double best = -1.0, best_th = 0.0, best_ph = 0.0;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double v = g(i * ht, j * hp);
            if (v > best + 1e-15) {
                best = v;
                best_th = i * ht;
                best_ph = j * hp;
            }
        }
    // coordinate-wise golden-section localization, with brackets adapted to the
    // last move so a curved ridge does not stall the descent
    double th = best_th, ph = best_ph, val = best;
    double bt = ht, bp = hp;
    for (int round = 0; round < 400; ++round) {
        auto [th2, v1] = golden_max([&](double t) { return g(t, ph); }, th - bt, th + bt, refine_tol);
        const double move_t = std::abs(th2 - th);
        th = th2;
        auto [ph2, v2] = golden_max([&](double p) { return g(th, p); }, ph - bp, ph + bp, refine_tol);
        const double move_p = std::abs(ph2 - ph);
        ph = ph2;
        (void)v1;
        if (v2 - val < 1e-16 && move_t < 1e-11 && move_p < 1e-11) {
            val = std::max(val, v2);
            break;
        }
        val = std::max(val, v2);
        bt = std::clamp(4.0 * move_t, 1e-10, ht);
        bp = std::clamp(4.0 * move_p, 1e-10, hp);
    }
    // Nelder-Mead polish for the last digits
    auto polished = nelder_mead_max_2d(g, th, ph, 1e-6, 1e-13, 2000);
    if (polished.value > val) {
        th = polished.x;
        ph = polished.y;
        val = polished.value;
    }
    r.theta = th;
    r.phi = ph;
    r.value = 1.0 - val;
    return r;
}

ClosedGeoMeasure geomeasure_closed(int n_qubits, std::span<const int> cardinalities) {
    const int n = n_qubits;
    if (cardinalities.size() != 1)
        throw UnsupportedFamily("closed forms cover the complete 3- and 5-uniform families only");
    const int k = cardinalities[0];
    if (n < k) throw std::invalid_argument("cardinality exceeds the qubit count");
    ClosedGeoMeasure out;
    if (k == 3) {
        if (n % 4 == 2) {
            out.exact = true;
            out.stabilizer = StabilizerClass::PlusX;
            out.value = 0.75 - std::pow(2.0, -0.5 * n) - std::pow(2.0, -double(n));
            out.lower = out.upper = out.value;
            return out;
        }
        if (n % 4 == 0) {
            out.exact = false;
            out.stabilizer = StabilizerClass::PlusY;
            out.lower = 0.75 - std::pow(2.0, -double(n)) - std::pow(2.0, -0.5 * n);
            out.upper = 0.75 - std::pow(2.0, -double(n));
            return out;
        }
        throw UnsupportedFamily("three-uniform closed forms require even n");
    }
    if (k == 5) {
        const double lam =
            (ipow(std::cos(kPi / 8), n) - ipow(std::sin(kPi / 8), n)) / std::sqrt(2.0);
        if (n % 8 == 4) {
            out.exact = true;
            out.stabilizer = StabilizerClass::PlusX;
            out.value = 0.75 - lam - lam * lam;
            out.lower = out.upper = out.value;
            return out;
        }
        if (n % 8 == 0) {
            out.exact = false;
            out.stabilizer = StabilizerClass::PlusY;
            out.lower = 0.75 - lam - lam * lam;
            out.upper = 0.75;
            return out;
        }
        throw UnsupportedFamily("five-uniform closed forms require n = 0 or 4 mod 8");
    }
    throw UnsupportedFamily("no closed form for cardinality " + std::to_string(k));
}

ConjectureBound conjecture_lambda(int r, int n_qubits, bool check_class) {
    if (r < 3) throw std::invalid_argument("conjecture requires r >= 3");
    const int period = 1 << r;
    if (check_class && ((n_qubits % period) + period) % period != period / 2)
        throw std::invalid_argument("n_qubits must be = 2^{r-1} mod 2^r for the X-stabilized family");
    KahanSum acc;
    for (int j = 1; j < period; j += 2) {
        const double c2 = std::cos(2.0 * kPi * j / period);
        const double c = std::cos(kPi * j / period);
        const double sgn = (c > 0) ? 1.0 : ((c < 0) ? -1.0 : 0.0);
        acc.add(sgn * ipow(std::cos(kPi / 4 - kPi * j / period), n_qubits) / std::abs(c2));
    }
    ConjectureBound b;
    b.lambda = 2.0 / period * acc.sum;
    b.bound = 0.75 - b.lambda - b.lambda * b.lambda;
    return b;
}

GeoMeasureResult single_edge_geomeasure(int n_qubits) {
    if (n_qubits < 3) throw std::invalid_argument("single-edge family starts at n = 3");
    SymmetricState s;
    s.n_qubits = n_qubits;
    s.amp.assign(n_qubits + 1, cplx(std::pow(2.0, -0.5 * n_qubits)));
    s.amp[n_qubits] = -s.amp[n_qubits];
    GeoMeasureResult r = geomeasure_symmetric_numeric(s, false);
    r.method = GeoMethod::symmetric_numeric;
    return r;
}

CyclicMaxCheck cyclic_cos_max_check(int r, int n_qubits, long grid) {
    if (r < 1 || n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("cyclic max check requires r >= 1 and even n");
    if (grid < 16) throw std::invalid_argument("grid too coarse");
    const int terms = 1 << r;
    auto f = [&](double x) {
        KahanSum acc;
        for (int j = 0; j < terms; ++j) acc.add(ipow(std::cos(x + kPi * j / terms), n_qubits));
        return acc.sum;
    };
    const double period = kPi / terms;
    const double h = period / grid;
    double best = f(0.0), best_x = 0.0, worst = best;
    for (long i = 1; i < grid; ++i) {
        const double v = f(i * h);
        worst = std::min(worst, v);
        if (v > best + 1e-15) {
            best = v;
            best_x = i * h;
        }
    }
    CyclicMaxCheck c;
    if (best - worst <= 1e-12 * std::max(1.0, std::abs(best))) {
        // Below 2^{r+1} harmonics the shifted sum is exactly constant; the
        // maximum is attained everywhere, in particular on the lattice.
        c.argmax = 0.0;
        c.deviation = 0.0;
        c.ok = true;
        return c;
    }
    // Localize the peak as the zero crossing of the derivative; near a smooth
    // maximum that is linearly sensitive, unlike the quadratically flat values.
    auto fp = [&](double x) {
        KahanSum acc;
        for (int j = 0; j < terms; ++j) {
            const double arg = x + kPi * j / terms;
            acc.add(-double(n_qubits) * ipow(std::cos(arg), n_qubits - 1) * std::sin(arg));
        }
        return acc.sum;
    };
    double lo = best_x - h, hi = best_x + h;
    double x;
    if (fp(lo) > 0.0 && fp(hi) < 0.0) {
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            (fp(mid) > 0.0 ? lo : hi) = mid;
        }
        x = 0.5 * (lo + hi);
    } else {
        x = golden_max(f, lo, hi, 1e-13).first;
    }
    c.argmax = x;
    const double lattice = std::round(x / period) * period;
    c.deviation = std::abs(x - lattice);
    c.ok = c.deviation < 1e-9;
    return c;
}

} // namespace hyperstate
