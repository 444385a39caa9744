#include "pslab/psprimes.hpp"

#include "pslab/compensated.hpp"
#include "pslab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pslab {

namespace {

using boost::multiprecision::msb;
using boost::multiprecision::pow;

constexpr std::uint64_t kSegmentWidth = std::uint64_t{1} << 20;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

BigInt iroot_floor(const BigInt& v, unsigned q) {
    if (q == 0) {
        throw std::invalid_argument("iroot_floor: zero root index");
    }
    if (v < 0) {
        throw std::invalid_argument("iroot_floor: negative radicand");
    }
    if (v == 0 || q == 1) {
        return v;
    }
    // Newton needs a seed that dominates the root, or the descend-only loop
    // below can stop far short and leave the exact correction crawling.
    // 2^(floor(bits/q)+1) always dominates; the double estimate, inflated
    // well past any libm pow error, usually dominates more tightly.
    unsigned bits = msb(v) + 1;
    BigInt x = BigInt(1) << (bits / q + 1);
    double d = v.convert_to<double>();
    if (std::isfinite(d)) {
        double est = std::pow(d, 1.0 / q) * (1.0 + 1e-9) + 16.0;
        if (std::isfinite(est)) {
            BigInt e(est);
            if (e < x) {
                x = e;
            }
        }
    }
    // Strictly decreasing while x exceeds the root; lands within a step or
    // two of the floor.
    while (true) {
        BigInt next = ((q - 1) * x + v / pow(x, q - 1)) / q;
        if (next >= x) {
            break;
        }
        x = next;
    }
    while (pow(x + 1, q) <= v) {
        ++x;
    }
    while (x > 0 && pow(x, q) > v) {
        --x;
    }
    return x;
}

BigInt floor_pow(std::uint64_t n, unsigned p, unsigned q) {
    if (n < 1 || p < 1 || q < 1) {
        throw std::invalid_argument("floor_pow: need n, p, q >= 1");
    }
    return iroot_floor(pow(BigInt(n), p), q);
}

FloorPowParts floor_pow_parts(std::uint64_t n, unsigned p, unsigned q) {
    BigInt np = pow(BigInt(n), p);
    BigInt r = iroot_floor(np, q);
    return {r, pow(r, q) == np};
}

bool is_prime(std::uint64_t n) {
    constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) {
        return false;
    }
    for (std::uint64_t b : kBases) {
        if (n % b == 0) {
            return n == b;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : kBases) {
        std::uint64_t x = powmod(b, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

RationalExponent::RationalExponent(std::uint64_t p_, std::uint64_t q_) : p(p_), q(q_) {
    if (q == 0) {
        throw std::invalid_argument("RationalExponent: zero denominator");
    }
    std::uint64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p <= q) {
        throw std::invalid_argument("RationalExponent: need c = p/q > 1, got " + str());
    }
}

RationalExponent RationalExponent::parse(std::string_view text) {
    Rational r = Rational::parse(text);
    if (!r.is_positive()) {
        throw std::invalid_argument("RationalExponent: c must be positive");
    }
    if (r.numerator() > BigInt(UINT64_MAX) || r.denominator() > BigInt(UINT64_MAX)) {
        throw std::invalid_argument("RationalExponent: p/q out of range");
    }
    return RationalExponent(r.numerator().convert_to<std::uint64_t>(),
                            r.denominator().convert_to<std::uint64_t>());
}

namespace {

// Primes in the sequence with index in [n_lo, n_hi], values capped by x.
std::uint64_t count_segment(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t x,
                            const RationalExponent& c) {
    const BigInt limit(x);
    std::uint64_t count = 0;
    BigInt prev = n_lo > 1 ? floor_pow(n_lo - 1, static_cast<unsigned>(c.p),
                                       static_cast<unsigned>(c.q))
                           : BigInt(0);
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        BigInt v = floor_pow(n, static_cast<unsigned>(c.p), static_cast<unsigned>(c.q));
        if (v <= prev) {
            throw std::logic_error("pi_c: sequence failed to increase at n = " +
                                   std::to_string(n));
        }
        prev = v;
        if (v > limit) {
            break;
        }
        if (is_prime(v.convert_to<std::uint64_t>())) {
            ++count;
        }
    }
    return count;
}

}  // namespace

PrimeCountReport pi_c(std::uint64_t x, const RationalExponent& c, const CountOptions& opts) {
    if (x < 2) {
        throw std::invalid_argument("pi_c: x must be >= 2");
    }
    PrimeCountReport rep;
    rep.x = x;
    rep.c = c;

    // Largest n with floor(n^c) <= x, i.e. n^p <= (x+1)^q - 1.
    BigInt n_max_big = iroot_floor(pow(BigInt(x) + 1, static_cast<unsigned>(c.q)) - 1,
                                   static_cast<unsigned>(c.p));
    std::uint64_t n_max = n_max_big.convert_to<std::uint64_t>();
    rep.n_max = n_max;
    if (n_max > opts.budget) {
        throw BudgetError("pi_c", n_max, opts.budget);
    }

    const std::uint64_t segments = (n_max + kSegmentWidth - 1) / kSegmentWidth;
    std::vector<std::uint64_t> per_segment(segments, 0);

    auto run_segment = [&](std::uint64_t s) {
        std::uint64_t lo = s * kSegmentWidth + 1;
        std::uint64_t hi = std::min(n_max, lo + kSegmentWidth - 1);
        per_segment[s] = count_segment(lo, hi, x, c);
    };

    int workers = opts.threads;
    if (workers <= 1 || segments <= 1) {
        for (std::uint64_t s = 0; s < segments; ++s) {
            run_segment(s);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        int n_threads = static_cast<int>(std::min<std::uint64_t>(
            static_cast<std::uint64_t>(workers), segments));
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                for (std::uint64_t s = next.fetch_add(1); s < segments;
                     s = next.fetch_add(1)) {
                    run_segment(s);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    // Aggregation in segment order (integer sum, so any order agrees anyway).
    rep.count = std::accumulate(per_segment.begin(), per_segment.end(), std::uint64_t{0});

    const double xd = static_cast<double>(x);
    rep.main_term = std::pow(xd, c.gamma()) / std::log(xd);
    rep.ratio = static_cast<double>(rep.count) / rep.main_term;
    return rep;
}

bool membership(std::uint64_t value, const RationalExponent& c) {
    if (value < 1) {
        throw std::invalid_argument("membership: value must be >= 1");
    }
    // Smallest n >= value^gamma, gamma = q/p: n0 = ceil((value^q)^(1/p)).
    const unsigned p = static_cast<unsigned>(c.p);
    const unsigned q = static_cast<unsigned>(c.q);
    BigInt vq = pow(BigInt(value), q);
    BigInt n0 = iroot_floor(vq, p);
    if (pow(n0, p) < vq) {
        ++n0;
    }
    // Member iff n0 < (value+1)^gamma, i.e. n0^p < (value+1)^q.
    return pow(n0, p) < pow(BigInt(value) + 1, q);
}

std::vector<double> von_mangoldt_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || hi < lo) {
        throw std::invalid_argument("von_mangoldt_range: need 2 <= lo <= hi");
    }
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint64_t> residual(len);
    std::vector<std::uint64_t> first_prime(len, 0);
    std::vector<std::uint8_t> distinct(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        residual[i] = lo + i;
    }

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
    while ((root + 1) * (root + 1) <= hi) {
        ++root;
    }
    std::vector<char> small_composite(root + 1, 0);
    for (std::uint64_t p = 2; p <= root; ++p) {
        if (small_composite[p]) {
            continue;
        }
        for (std::uint64_t m = p * p; m <= root; m += p) {
            small_composite[m] = 1;
        }
        std::uint64_t start = ((lo + p - 1) / p) * p;
        for (std::uint64_t m = start; m <= hi; m += p) {
            std::size_t i = static_cast<std::size_t>(m - lo);
            while (residual[i] % p == 0) {
                residual[i] /= p;
            }
            if (distinct[i] == 0) {
                first_prime[i] = p;
            }
            ++distinct[i];
        }
    }

    std::vector<double> lam(len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t n = lo + i;
        if (residual[i] == n) {
            lam[i] = std::log(static_cast<double>(n));  // prime > root
        } else if (residual[i] == 1 && distinct[i] == 1) {
            lam[i] = std::log(static_cast<double>(first_prime[i]));  // p^k
        }
    }
    return lam;
}

double psi_minus_pow(std::uint64_t n, const RationalExponent& c) {
    // Exponent is gamma = q/p.
    FloorPowParts parts = floor_pow_parts(n, static_cast<unsigned>(c.q),
                                          static_cast<unsigned>(c.p));
    if (parts.is_exact) {
        return -0.5;  // psi(-k) at an integer point
    }
    long double exact_floor = parts.ipart.convert_to<long double>();
    long double val = std::pow(static_cast<long double>(n),
                               static_cast<long double>(c.q) / static_cast<long double>(c.p));
    long double frac = val - exact_floor;
    if (frac < 0.0L) {
        frac = 0.0L;
    }
    if (frac >= 1.0L) {
        frac = std::nextafter(1.0L, 0.0L);
    }
    // {-n^gamma} = 1 - frac since n^gamma is not an integer.
    return static_cast<double>(0.5L - frac);
}

PsiSumReport psi_difference_sum_weighted(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<double>& weights,
                                         const RationalExponent& c, double norm_x) {
    if (weights.size() != static_cast<std::size_t>(hi - lo + 1)) {
        throw std::invalid_argument("psi_difference_sum_weighted: weight size mismatch");
    }
    NeumaierSum acc;
    double psi_n = psi_minus_pow(lo, c);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        double psi_next = psi_minus_pow(n + 1, c);
        double w = weights[static_cast<std::size_t>(n - lo)];
        if (w != 0.0) {
            acc.add(w * (psi_n - psi_next));
        }
        psi_n = psi_next;
    }
    PsiSumReport rep;
    rep.value = acc.value();
    rep.normalized = rep.value / std::pow(norm_x, c.gamma());
    return rep;
}

PsiSumReport psi_difference_sum(std::uint64_t x, const RationalExponent& c,
                                std::uint64_t budget) {
    if (x < 4) {
        throw std::invalid_argument("psi_difference_sum: x must be >= 4");
    }
    std::uint64_t lo = x / 2 + 1;
    std::uint64_t hi = x;
    if (hi - lo + 1 > budget) {
        throw BudgetError("psi_difference_sum", hi - lo + 1, budget);
    }
    std::vector<double> lam = von_mangoldt_range(lo, hi);
    return psi_difference_sum_weighted(lo, hi, lam, c, static_cast<double>(x));
}

}  // namespace pslab
