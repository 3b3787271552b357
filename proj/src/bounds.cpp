#include "drgkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "drgkit/clique_geometry.hpp"

namespace drgkit {

namespace {

using i128 = __int128;

long double sqrt13_hp() {
    static const long double v = static_cast<long double>(sqrt13_q56()) /
                                 static_cast<long double>(1ULL << 56);
    return v;
}

long double delta_hp() { return (sqrt13_hp() - 1.0L) / 6.0L; }

// 6/(sqrt(13)-1) = (sqrt(13)+1)/2
long double coeff_hp() { return (sqrt13_hp() + 1.0L) / 2.0L; }

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

long long sqrt13_q56() {
    static const long long value = [] {
        const i128 target = i128(13) << 112;
        i128 x = static_cast<i128>(std::sqrt(13.0) * 9007199254740992.0) << 3;  // ~sqrt13*2^56
        for (int i = 0; i < 64; ++i) {
            i128 next = (x + target / x) / 2;
            if (next >= x) break;
            x = next;
        }
        while (x * x > target) --x;
        while ((x + 1) * (x + 1) <= target) ++x;
        return static_cast<long long>(x);
    }();
    return value;
}

bool lambda_bound_verdict_exact(long long n, long long k, long long lambda, long long mu) {
    const i128 L = lambda + 1;
    if (L * L < 32 * i128(n)) return true;
    if (mu <= 1) return false;  // second term vanishes
    // L < (sqrt(13)+1)/2 * sqrt(M) with M = k(mu-1):
    // 4L^2 - 14M < 2M sqrt(13), squared when the left side is nonnegative.
    const i128 M = i128(k) * (mu - 1);
    const i128 lhs = 4 * L * L - 14 * M;
    if (lhs < 0) return true;
    return lhs * lhs < 52 * M * M;
}

int lambda_bound_case(long long k, long long lambda, long long mu) {
    if (eq_main_holds(k, lambda, mu)) return 1;
    // mu - 1 >= delta (lambda+1)  <=>  (6(mu-1) + (lambda+1))^2 >= 13 (lambda+1)^2
    const i128 L = lambda + 1;
    const i128 lhs = 6 * i128(mu - 1) + L;
    return lhs * lhs >= 13 * L * L ? 2 : 3;
}

BoundEntry lambda_bound(const AmpleParams& p) {
    if (p.lambda == p.k - 1)
        throw std::domain_error("disjoint-clique parameters (lambda = k-1) are excluded");
    BoundEntry e;
    e.name = "lambda_bound";
    e.inputs = {{"n", double(p.n)},
                {"k", double(p.k)},
                {"lambda", double(p.lambda)},
                {"mu", double(p.mu)},
                {"delta", static_cast<double>(delta_hp())}};
    const long double first = 4.0L * std::sqrt(2.0L * p.n);
    const long double second =
        p.mu >= 2 ? coeff_hp() * std::sqrt(static_cast<long double>(p.k) * (p.mu - 1)) : 0.0L;
    e.bound = static_cast<double>(std::max(first, second));
    e.observed = p.lambda + 1;
    e.margin = static_cast<double>(std::max(first, second) - (p.lambda + 1));
    e.verdict = lambda_bound_verdict_exact(p.n, p.k, p.lambda, p.mu);
    switch (lambda_bound_case(p.k, p.lambda, p.mu)) {
        case 1: e.tag = "case-1"; break;
        case 2: e.tag = "case-2a"; break;
        default: e.tag = "case-2b"; break;
    }
    return e;
}

BoundEntry hypergraph_bound(long long n, int r_min, int r_max, int ell) {
    if (r_min < 2) throw std::domain_error("hypergraph bound needs r >= 2");
    if (r_max < r_min || ell < 1 || n < 1)
        throw std::invalid_argument("hypergraph bound needs R >= r, ell >= 1, n >= 1");
    BoundEntry e;
    e.name = "hypergraph_bound";
    e.inputs = {{"n", double(n)}, {"r", double(r_min)}, {"R", double(r_max)},
                {"ell", double(ell)}};
    e.bound = r_max / std::sqrt(double(r_min) * (r_min - 1)) * std::sqrt(double(n));
    e.observed = ell;
    e.margin = e.bound - e.observed;
    // ell^2 r(r-1) <= R^2 n, exactly.
    e.verdict = i128(ell) * ell * r_min * (r_min - 1) <= i128(r_max) * r_max * n;
    return e;
}

BoundEntry claw_bound(const Spectrum& spec, int mu) {
    if (spec.s() >= 0) throw std::domain_error("claw bound needs s < 0");
    BoundEntry e;
    e.name = "claw_bound";
    e.inputs = {{"r", spec.r()}, {"s", spec.s()}, {"mu", double(mu)}};
    double branch1, branch2;
    if (spec.integral) {
        const long long s = spec.s_int;
        branch1 = static_cast<double>(2 * (-s - 1) * (mu + 1 + s) + s);
        branch2 = static_cast<double>(s * (s + 1) * (mu + 1) / 2 - 1);
        e.bound = std::max(branch1, branch2);
        e.verdict = spec.r_int <= static_cast<long long>(e.bound);
    } else {
        const double s = spec.s();
        branch1 = 2 * (-s - 1) * (mu + 1 + s) + s;
        branch2 = s * (s + 1) * (mu + 1) / 2 - 1;
        e.bound = std::max(branch1, branch2);
        e.verdict = spec.r() <= e.bound + 1e-9;
    }
    e.observed = spec.r();
    e.margin = e.bound - e.observed;
    e.tag = branch1 >= branch2 ? "branch-1" : "branch-2";
    e.inputs.emplace_back("branch1", branch1);
    e.inputs.emplace_back("branch2", branch2);
    return e;
}

std::pair<BoundEntry, BoundEntry> spielman_bounds(const SrgParams& p, const Spectrum& spec) {
    const double bound = std::pow(double(p.k), 2.0 / 3.0) * std::cbrt(double(p.mu) + 1.0);
    BoundEntry a;
    a.name = "spielman_a";
    a.inputs = {{"k", double(p.k)}, {"mu", double(p.mu)}, {"r", spec.r()}};
    a.bound = bound;
    a.observed = spec.r();
    a.margin = bound - a.observed;
    a.verdict = a.observed < bound;
    BoundEntry b = a;
    b.name = "spielman_b";
    b.observed = p.lambda;
    b.margin = bound - b.observed;
    b.verdict = b.observed < bound;
    return {a, b};
}

std::pair<BoundEntry, BoundEntry> pyber_bounds(const SrgParams& p, const Spectrum& spec) {
    if (p.lambda == p.k - 1 || p.mu == p.k)
        throw std::domain_error("trivial parameters (disjoint cliques or their complement)");
    const double base = std::pow(double(p.n), 0.25) * std::sqrt(double(p.k));
    BoundEntry a;
    a.name = "pyber_a";
    a.inputs = {{"n", double(p.n)}, {"k", double(p.k)}, {"r", spec.r()}};
    a.bound = base;
    a.observed = spec.r();
    a.margin = base - a.observed;
    a.verdict = a.observed < base;
    BoundEntry b;
    b.name = "pyber_b";
    b.inputs = {{"n", double(p.n)}, {"k", double(p.k)}, {"mu", double(p.mu)},
                {"lambda", double(p.lambda)}};
    b.bound = base + p.mu;
    b.observed = p.lambda;
    b.margin = b.bound - b.observed;
    b.verdict = b.observed < b.bound;
    return {a, b};
}

BoundEntry r_bound(const SrgParams& p, const Spectrum& spec) {
    if (p.lambda == p.k - 1 || p.mu == p.k)
        throw std::domain_error("trivial parameters (disjoint cliques or their complement)");
    BoundEntry e;
    e.name = "r_bound";
    e.inputs = {{"n", double(p.n)}, {"k", double(p.k)}, {"mu", double(p.mu)}, {"r", spec.r()}};
    const long double first = 4.0L * std::sqrt(2.0L * p.n);
    const long double second =
        p.mu >= 2 ? coeff_hp() * std::sqrt(static_cast<long double>(p.k) * (p.mu - 1)) : 0.0L;
    const long double bound = std::max(first, second) + std::sqrt(static_cast<long double>(p.k));
    e.bound = static_cast<double>(bound);
    e.observed = spec.r();
    e.margin = static_cast<double>(bound - spec.r());
    e.verdict = spec.r() < static_cast<double>(bound);
    // Proof branch: |s| >= sqrt(k) makes r < k/|s| <= sqrt(k) immediate.
    bool direct = spec.integral ? spec.s_int * spec.s_int >= p.k
                                : spec.s() * spec.s() >= double(p.k);
    e.tag = direct ? "via--rs=k-mu" : "via-r+s=lambda-mu";
    return e;
}

namespace {

struct Piece {
    double exponent;
    std::string formula;
};

EnvelopeValue envelope_from(const std::vector<Piece>& table_rows, double value_exp) {
    EnvelopeValue out;
    out.exponent = value_exp;
    out.value = std::exp2(value_exp);
    for (const auto& row : table_rows) {
        if (row.exponent == value_exp) {
            out.piece = row.formula;
            break;
        }
    }
    return out;
}

}  // namespace

EnvelopeValue g_func(long long n, long long k) {
    if (k < 1 || k > n - 1) throw std::domain_error("g(n,k) needs 1 <= k <= n-1");
    const double ln = std::log2(double(n)), lk = std::log2(double(k));
    // Exponents arranged so power-of-two inputs stay exact.
    const double p_spielman = 4.0 * (lk - ln) / 3.0;    // (k/n)^{4/3}
    const double p_invroot = -ln / 2.0;                 // n^{-1/2}
    const double p_threehalf = 3.0 * (lk - ln) / 2.0;   // (k/n)^{3/2}
    const double p_pyber = (2.0 * lk - 3.0 * ln) / 4.0;  // k^{1/2} n^{-3/4}
    const double third = std::max(p_threehalf, p_invroot);
    const double value_exp = std::min({p_spielman, p_pyber, third});
    EnvelopeValue out = envelope_from({{p_spielman, "(k/n)^{4/3}"},
                                       {p_invroot, "n^{-1/2}"},
                                       {p_threehalf, "(k/n)^{3/2}"},
                                       {p_pyber, "k^{1/2}n^{-3/4}"}},
                                      value_exp);
    out.convention = 2 * k <= n - 1 ? "k<=(n-1)/2" : "out-of-convention";
    return out;
}

EnvelopeValue h_func(long long n, long long k) {
    if (k < 1 || k > n - 1) throw std::domain_error("h(n,k) needs 1 <= k <= n-1");
    const double ln = std::log2(double(n)), lk = std::log2(double(k));
    const double p_spielman = 4.0 * (lk - ln) / 3.0;     // (k/n)^{4/3}
    const double p_invroot = -ln / 2.0;                  // n^{-1/2}
    const double p_threehalf = 3.0 * (lk - ln) / 2.0;    // (k/n)^{3/2}
    const double p_pyber = (2.0 * lk - 3.0 * ln) / 4.0;  // k^{1/2} n^{-3/4}
    const double p_square = 2.0 * (lk - ln);             // (k/n)^2
    const double second = std::max(p_pyber, p_square);
    const double third = std::max(p_threehalf, p_invroot);
    const double value_exp = std::min({p_spielman, second, third});
    EnvelopeValue out = envelope_from({{p_spielman, "(k/n)^{4/3}"},
                                       {p_invroot, "n^{-1/2}"},
                                       {p_threehalf, "(k/n)^{3/2}"},
                                       {p_pyber, "k^{1/2}n^{-3/4}"},
                                       {p_square, "(k/n)^2"}},
                                      value_exp);
    out.convention = 2 * k <= n - 1 ? "k<=(n-1)/2" : "out-of-convention";
    return out;
}

BoundEntry godsil_condition(const AmpleParams& p, double s, std::optional<int> claw_free_from) {
    if (s >= 0) throw std::domain_error("godsil condition needs s < 0");
    BoundEntry e;
    e.name = "godsil";
    e.inputs = {{"lambda", double(p.lambda)}, {"mu", double(p.mu)}, {"s", s}};
    const double as = -s;
    // Smallest forbidden claw order; the nudge absorbs eigenvalue roundoff.
    const int mstar = static_cast<int>(std::floor(as + 1e-9)) + 1;
    e.inputs.emplace_back("m", double(mstar));

    const double rhs = (2 * as - 1) * (p.mu - 1);
    e.bound = rhs;  // eq holds when lambda + 1 > rhs
    e.observed = p.lambda + 1;
    e.margin = e.observed - rhs;
    const bool eq_part = p.lambda + 1 > rhs;

    std::string structural;
    bool structural_known = claw_free_from.has_value();
    bool structural_part = structural_known && *claw_free_from <= mstar;
    if (!structural_known)
        structural = "structural-unknown";
    else
        structural = structural_part ? "claw-free" : "claw-found";
    e.tag = structural + (eq_part ? ",eq-holds" : ",eq-fails");
    e.verdict = eq_part && structural_part;
    if (!structural_known) {
        e.verdict = eq_part;
        e.note = "structural claw hypothesis not evaluated (no graph supplied)";
    }
    return e;
}

BoundEntry bang_koolen_condition(const AmpleParams& p, double s) {
    if (s >= 0) throw std::domain_error("bang-koolen condition needs s < 0");
    BoundEntry e;
    e.name = "bang_koolen";
    e.inputs = {{"lambda", double(p.lambda)}, {"mu", double(p.mu)}, {"s", s}};
    const long long fs = static_cast<long long>(std::floor(s + 1e-9));
    e.bound = static_cast<double>(fs * fs * p.mu);
    e.observed = p.lambda;
    e.margin = e.observed - e.bound;
    e.verdict = p.lambda > fs * fs * p.mu;
    e.tag = "floor(s)=" + std::to_string(fs);
    return e;
}

namespace {

long long isqrt_ll2(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(double(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

Classification classify(const SrgParams& p, const Spectrum& spec) {
    Classification c;
    const long long n = p.n, k = p.k, l = p.lambda, m = p.mu;

    if (l == k - 1) c.all_matches.push_back("trivial: disjoint cliques (lambda = k-1)");
    if (m == k) c.all_matches.push_back("trivial: complete multipartite (mu = k)");
    if (!spec.integral) c.all_matches.push_back("conference");

    std::vector<std::string> families;
    if (k % 2 == 0) {
        const long long mm = k / 2 + 2;
        if (mm >= 4 && n == mm * (mm - 1) / 2 && l == mm - 2 && m == 4)
            families.push_back("T(" + std::to_string(mm) + ")");
    }
    const long long q = isqrt_ll2(n);
    if (q * q == n && q >= 2) {
        for (long long g = 2; g <= q; ++g) {
            if (k == g * (q - 1) && l == (g - 1) * (g - 2) + q - 2 && m == g * (g - 1)) {
                std::string name = "L_" + std::to_string(g) + "(" + std::to_string(q) + ")";
                families.push_back(g == 2 ? "lattice " + name : "latin-square " + name);
            }
        }
    }
    const long long v = 2 * l - 3;
    if (v >= 9 && n == v * (v - 1) / 6 && 2 * k == 3 * (v - 3) && m == 9)
        families.push_back("STS(" + std::to_string(v) + ") block graph");
    for (const auto& f : families) c.all_matches.push_back("geometric-family-match: " + f);

    BoundEntry claw = claw_bound(spec, p.mu);
    if (claw.verdict) c.all_matches.push_back("claw-bound-regime");

    if (l == k - 1 || m == k) {
        c.tag = "trivial";
        c.detail = l == k - 1 ? "disjoint cliques (lambda = k-1)"
                              : "complete multipartite (mu = k)";
    } else if (!spec.integral) {
        c.tag = "conference";
        c.detail = "non-integral spectrum";
    } else if (!families.empty()) {
        c.tag = "geometric-family-match";
        c.detail = families.front();
    } else if (claw.verdict) {
        c.tag = "claw-bound-regime";
        c.detail = "r = " + fmt(claw.observed) + " <= " + fmt(claw.bound);
    } else {
        c.tag = "unclassified-by-parameters";
        c.detail = "claw bound fails by " + fmt(-claw.margin);
    }
    return c;
}

}  // namespace drgkit
