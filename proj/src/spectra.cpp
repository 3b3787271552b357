#include "drgkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace drgkit {

namespace {

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::optional<Spectrum> try_srg_spectrum(const SrgParams& p, std::string* why) {
    auto fail = [&](const std::string& msg) -> std::optional<Spectrum> {
        if (why) *why = msg;
        return std::nullopt;
    };
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1 || p.lambda < 0 || p.mu < 0)
        return fail("parameters out of range");
    if (!p.identity_holds())
        return fail("counting identity k(k-lambda-1) = (n-k-1)mu fails for " + p.str());

    const long long lm = p.lambda - p.mu;
    const long long disc = lm * lm + 4LL * (p.k - p.mu);
    if (disc <= 0) return fail("nonpositive discriminant");
    const long long sq = isqrt_ll(disc);

    Spectrum spec;
    if (sq * sq == disc) {
        // Integral spectrum; multiplicities must come out nonnegative integers.
        const long long r = (lm + sq) / 2;
        const long long s = (lm - sq) / 2;
        const long long num = 2LL * p.k + static_cast<long long>(p.n - 1) * lm;
        if (num % (r - s) != 0)
            return fail("non-integral multiplicities for " + p.str());
        const long long twice_f = (p.n - 1) - num / (r - s);
        if (twice_f % 2 != 0) return fail("non-integral multiplicities for " + p.str());
        const long long f = twice_f / 2;
        const long long g = (p.n - 1) - f;
        if (f < 0 || g < 0) return fail("negative multiplicity for " + p.str());
        spec.integral = true;
        spec.r_int = r;
        spec.s_int = s;
        spec.theta = {static_cast<double>(p.k), static_cast<double>(r), static_cast<double>(s)};
        spec.multiplicities = {1, f, g};
    } else {
        // Conference graphs are the only non-integral case.
        if (2LL * p.k + static_cast<long long>(p.n - 1) * lm != 0)
            return fail("irrational eigenvalues with unbalanced multiplicities for " + p.str());
        const double root = std::sqrt(static_cast<double>(disc));
        spec.integral = false;
        spec.theta = {static_cast<double>(p.k), (lm + root) / 2.0, (lm - root) / 2.0};
        spec.multiplicities = {1, (p.n - 1) / 2, (p.n - 1) / 2};
    }
    return spec;
}

Spectrum srg_spectrum(const SrgParams& p) {
    std::string why;
    auto spec = try_srg_spectrum(p, &why);
    if (!spec) throw std::domain_error(why);
    return *spec;
}

namespace {

// Eigenvalue count below x for a symmetric tridiagonal matrix, via the Sturm
// sequence of leading-principal-minor pivots.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    const double tiny = 1e-300;
    int count = 0;
    double q = diag[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        double denom = q;
        if (std::abs(denom) < tiny) denom = denom < 0 ? -tiny : tiny;
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> drg_eigenvalues(const IntersectionArray& arr) {
    std::string why;
    if (!arr.valid(&why)) throw std::invalid_argument("malformed intersection array: " + why);

    const int d = arr.diameter();
    const int m = d + 1;
    std::vector<double> diag(m), off(m - 1);
    for (int i = 0; i <= d; ++i) diag[i] = arr.a(i);
    // The intersection matrix is similar to the symmetric tridiagonal with
    // off-diagonal sqrt(b_i * c_{i+1}).
    for (int i = 0; i < d; ++i)
        off[i] = std::sqrt(static_cast<double>(arr.b[i]) * arr.c[i]);

    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < m; ++i) {
        double radius = 0;
        if (i > 0) radius += std::abs(off[i - 1]);
        if (i < m - 1) radius += std::abs(off[i]);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> evals(m);
    for (int j = 0; j < m; ++j) {
        // j-th smallest eigenvalue: bisect on count(x) <= j.
        double a = lo, b = hi;
        for (int iter = 0; iter < 200 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++iter) {
            double mid = 0.5 * (a + b);
            if (sturm_count(diag, off, mid) <= j)
                a = mid;
            else
                b = mid;
        }
        evals[j] = 0.5 * (a + b);
    }
    std::reverse(evals.begin(), evals.end());
    for (int j = 0; j + 1 < m; ++j) {
        if (evals[j] - evals[j + 1] < 1e-9)
            throw std::domain_error("intersection matrix eigenvalues not distinct at 1e-9");
    }
    // Snap eigenvalues that verify exactly against the integer
    // characteristic polynomial (theta_0 = k always does).
    for (double& ev : evals) {
        const long long rounded = std::llround(ev);
        if (std::abs(ev - rounded) < 1e-7 && is_exact_drg_eigenvalue(arr, rounded))
            ev = static_cast<double>(rounded);
    }
    return evals;
}

bool is_exact_drg_eigenvalue(const IntersectionArray& arr, long long x) {
    std::string why;
    if (!arr.valid(&why)) throw std::invalid_argument("malformed intersection array: " + why);
    const int d = arr.diameter();
    // Leading principal minors of M - xI for the tridiagonal intersection
    // matrix: D_{i+1} = (a_i - x) D_i - b_{i-1} c_i D_{i-1}.
    __int128 prev = 1;
    __int128 cur = arr.a(0) - x;
    for (int i = 1; i <= d; ++i) {
        __int128 next = (__int128)(arr.a(i) - x) * cur -
                        (__int128)arr.b[i - 1] * arr.c[i - 1] * prev;
        prev = cur;
        cur = next;
    }
    return cur == 0;
}

namespace {

template <typename Num>
std::vector<Num> run_recurrence(const IntersectionArray& arr, const Num& x) {
    const int d = arr.diameter();
    const int k = arr.degree();
    std::vector<Num> u;
    u.reserve(d + 1);
    u.push_back(Num(1));
    u.push_back(x / Num(k));
    for (int i = 1; i < d; ++i) {
        if (arr.b[i] == 0) throw std::domain_error("b_" + std::to_string(i) + " = 0 before level d");
        // u_{i+1} = ((x - a_i) u_i - c_i u_{i-1}) / b_i
        Num next = ((x - Num(arr.a(i))) * u[i] - Num(arr.c[i - 1]) * u[i - 1]) / Num(arr.b[i]);
        u.push_back(next);
    }
    return u;
}

}  // namespace

StandardSequence standard_sequence(const IntersectionArray& arr, const Rational& x) {
    std::string why;
    if (!arr.valid(&why)) throw std::invalid_argument("malformed intersection array: " + why);
    StandardSequence seq;
    seq.exact = true;
    seq.exact_values = run_recurrence<Rational>(arr, x);
    seq.values.reserve(seq.exact_values.size());
    for (const auto& r : seq.exact_values) seq.values.push_back(r.to_double());
    seq.at = x.to_double();
    return seq;
}

StandardSequence standard_sequence(const IntersectionArray& arr, double x) {
    std::string why;
    if (!arr.valid(&why)) throw std::invalid_argument("malformed intersection array: " + why);
    StandardSequence seq;
    seq.exact = false;
    seq.values = run_recurrence<double>(arr, x);
    seq.at = x;
    return seq;
}

int sign_changes(const StandardSequence& seq) {
    double scale = 0.0;
    for (double w : seq.values) scale = std::max(scale, std::abs(w));
    auto sign_at = [&](std::size_t i) -> int {
        if (seq.exact) {
            int s = seq.exact_values[i].sign();
            if (s == 0)
                throw std::domain_error("standard sequence has a zero entry at index " +
                                        std::to_string(i));
            return s;
        }
        double v = seq.values[i];
        if (std::abs(v) <= 1e-12 * std::max(1.0, scale))
            throw std::domain_error("standard sequence has a zero entry at index " +
                                    std::to_string(i));
        return v > 0 ? 1 : -1;
    };
    int changes = 0;
    int prev = sign_at(0);
    for (std::size_t i = 1; i < seq.values.size(); ++i) {
        int cur = sign_at(i);
        if (cur != prev) ++changes;
        prev = cur;
    }
    return changes;
}

LambdaSCheck check_lambda_s(int k, int lambda, double s) {
    if (lambda == 0)
        throw std::domain_error(
            "lambda = 0 is degenerate here: the bound lambda + k/lambda divides by lambda");
    if (lambda < 0 || k < 1) throw std::domain_error("need k >= 1 and lambda >= 1");
    if (s >= 0) throw std::domain_error("least eigenvalue must be negative");
    const double as = -s;
    LambdaSCheck out;
    out.margin = lambda + static_cast<double>(k) / lambda - static_cast<double>(k) / as;
    out.holds = out.margin > 0;
    out.variant_margin = lambda + as - static_cast<double>(k) / as;
    out.variant_holds = out.variant_margin > 0;
    return out;
}

}  // namespace drgkit
