#include "pslab/trilinear.hpp"

#include "pslab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace pslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate_spec(const TrilinearSpec& s) {
    if (s.H < 1 || s.M < 1 || s.N < 1) {
        throw std::invalid_argument("trilinear: H, M, N must be >= 1");
    }
    if (s.a.size() != static_cast<std::size_t>(s.H) ||
        s.b.size() != static_cast<std::size_t>(s.M)) {
        throw std::invalid_argument("trilinear: coefficient arrays must have sizes H and M");
    }
    constexpr double kTol = 1.0 + 1e-12;
    for (const auto& c : s.a) {
        if (std::abs(c) > kTol) {
            throw std::invalid_argument("trilinear: |a_h| must be <= 1");
        }
    }
    for (const auto& c : s.b) {
        if (std::abs(c) > kTol) {
            throw std::invalid_argument("trilinear: |b_m| must be <= 1");
        }
    }
}

// Sum over (m, n) for one h, compensated, in index order.
std::complex<double> h_slice(const TrilinearSpec& s, std::int64_t h,
                             const std::vector<double>& pm, const std::vector<double>& pn) {
    const double xh = s.X * std::pow(static_cast<double>(h) / static_cast<double>(s.H), s.alpha);
    NeumaierSum re, im;
    const std::complex<double> ah = s.a[static_cast<std::size_t>(h - s.H - 1)];
    for (std::int64_t mi = 0; mi < s.M; ++mi) {
        const std::complex<double> c = ah * s.b[static_cast<std::size_t>(mi)];
        const double xm = xh * pm[static_cast<std::size_t>(mi)];
        for (std::int64_t ni = 0; ni < s.N; ++ni) {
            const double u = xm * pn[static_cast<std::size_t>(ni)];
            const double w = u - std::floor(u);
            const double ang = kTwoPi * w;
            const double cs = std::cos(ang), sn = std::sin(ang);
            re.add(c.real() * cs - c.imag() * sn);
            im.add(c.real() * sn + c.imag() * cs);
        }
    }
    return {re.value(), im.value()};
}

}  // namespace

TrilinearSpec make_random_spec(double X, std::int64_t H, std::int64_t M, std::int64_t N,
                               double alpha, double beta, double gamma, std::uint64_t seed) {
    TrilinearSpec s;
    s.X = X;
    s.H = H;
    s.M = M;
    s.N = N;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = gamma;
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() -> std::complex<double> {
        double r = uniform_unit(rng);
        double phi = uniform_unit(rng);
        return std::polar(r, kTwoPi * phi);
    };
    s.a.reserve(static_cast<std::size_t>(H));
    for (std::int64_t i = 0; i < H; ++i) {
        s.a.push_back(draw());
    }
    s.b.reserve(static_cast<std::size_t>(M));
    for (std::int64_t i = 0; i < M; ++i) {
        s.b.push_back(draw());
    }
    return s;
}

std::complex<double> trilinear_sum(const TrilinearSpec& spec, int threads,
                                   std::uint64_t budget) {
    validate_spec(spec);
    const std::uint64_t work = static_cast<std::uint64_t>(spec.H) *
                               static_cast<std::uint64_t>(spec.M) *
                               static_cast<std::uint64_t>(spec.N);
    if (work > budget) {
        throw BudgetError("trilinear_sum", work, budget);
    }

    std::vector<double> pm(static_cast<std::size_t>(spec.M));
    std::vector<double> pn(static_cast<std::size_t>(spec.N));
    for (std::int64_t i = 0; i < spec.M; ++i) {
        pm[static_cast<std::size_t>(i)] =
            std::pow(static_cast<double>(spec.M + 1 + i) / static_cast<double>(spec.M), spec.beta);
    }
    for (std::int64_t i = 0; i < spec.N; ++i) {
        pn[static_cast<std::size_t>(i)] =
            std::pow(static_cast<double>(spec.N + 1 + i) / static_cast<double>(spec.N), spec.gamma);
    }

    std::vector<std::complex<double>> partial(static_cast<std::size_t>(spec.H));
    if (threads <= 1 || spec.H == 1) {
        for (std::int64_t h = spec.H + 1; h <= 2 * spec.H; ++h) {
            partial[static_cast<std::size_t>(h - spec.H - 1)] = h_slice(spec, h, pm, pn);
        }
    } else {
        const int workers = static_cast<int>(std::min<std::int64_t>(threads, spec.H));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::int64_t i = w; i < spec.H; i += workers) {
                    partial[static_cast<std::size_t>(i)] =
                        h_slice(spec, spec.H + 1 + i, pm, pn);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Ordered reduction over h; independent of the worker split above.
    NeumaierSum re, im;
    for (const auto& p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

EnvelopeReport envelope_ratio(const TrilinearSpec& spec, const ExponentPair& pair,
                              bool wu_compare, int wu_k, int threads, std::uint64_t budget) {
    if (!(spec.X > 0.0)) {
        throw std::invalid_argument("envelope_ratio: X must be positive");
    }
    if (spec.alpha == 0.0 || spec.beta == 0.0 || spec.gamma == 0.0 || spec.alpha == 1.0) {
        throw std::invalid_argument(
            "envelope_ratio: hypothesis alpha*beta*gamma*(1-alpha) != 0 fails");
    }
    EnvelopeReport rep;
    const double r = (spec.gamma - 1.0) / (1.0 - spec.alpha);
    const double nearest = std::round(r);
    if (nearest >= 0.0) {
        const double miss = std::fabs(r - nearest);
        if (miss <= 1e-9) {
            throw std::invalid_argument(
                "envelope_ratio: hypothesis (gamma-1)/(1-alpha) not a nonnegative integer "
                "fails (value " + std::to_string(r) + ")");
        }
        if (miss <= 1e-6) {
            rep.diagnostics = "(gamma-1)/(1-alpha) = " + std::to_string(r) +
                              " is within 1e-6 of an integer";
        }
    }

    rep.t_abs = std::abs(trilinear_sum(spec, threads, budget));

    const double X = spec.X;
    const double H = static_cast<double>(spec.H);
    const double M = static_cast<double>(spec.M);
    const double N = static_cast<double>(spec.N);
    const double L = std::log(2.0 + X * H * M * N);

    double env = 0.0;
    for (const MonomialTerm& t : trilinear_bound_terms(pair)) {
        env += term_value(t, X, H, M, N);
    }
    rep.envelope = L * env;
    rep.ratio = rep.envelope > 0.0 ? rep.t_abs / rep.envelope : 0.0;

    if (wu_compare && wu_restriction_holds(X, H, M, N)) {
        double wu = 0.0;
        for (const MonomialTerm& t : wu_bound_terms(wu_k)) {
            wu += term_value(t, X, H, M, N);
        }
        rep.wu_envelope = L * wu;
        rep.wu_ratio = *rep.wu_envelope > 0.0 ? rep.t_abs / *rep.wu_envelope : 0.0;
    }
    return rep;
}

}  // namespace pslab
