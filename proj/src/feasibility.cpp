#include "drgkit/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <istream>
#include <sstream>
#include <thread>

#include "drgkit/clique_geometry.hpp"

namespace drgkit {

bool satisfies_main(const SrgParams& p) {
    return eq_main_holds(p.k, p.lambda, p.mu);
}

std::vector<std::string> FeasibilityFilters::active_names() const {
    std::vector<std::string> names{"identity", "multiplicity-integrality"};
    if (krein) names.push_back("krein");
    if (absolute) names.push_back("absolute-bound");
    return names;
}

bool krein_conditions_hold(const SrgParams& p, const Spectrum& spec) {
    if (spec.integral) {
        const long long k = p.k, r = spec.r_int, s = spec.s_int;
        return (r + 1) * (k + r + 2 * r * s) <= (k + r) * (s + 1) * (s + 1) &&
               (s + 1) * (k + s + 2 * r * s) <= (k + s) * (r + 1) * (r + 1);
    }
    const double k = p.k, r = spec.r(), s = spec.s();
    return (r + 1) * (k + r + 2 * r * s) <= (k + r) * (s + 1) * (s + 1) + 1e-9 &&
           (s + 1) * (k + s + 2 * r * s) <= (k + s) * (r + 1) * (r + 1) + 1e-9;
}

bool absolute_bound_holds(const SrgParams& p, const Spectrum& spec) {
    const long long f = spec.multiplicities[1];
    const long long g = spec.multiplicities[2];
    return p.n <= f * (f + 3) / 2 && p.n <= g * (g + 3) / 2;
}

namespace {

std::vector<FeasibleRecord> enumerate_range(int n_lo, int n_hi, const FeasibilityFilters& filters) {
    std::vector<FeasibleRecord> out;
    for (int n = n_lo; n < n_hi; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            const long long denom = n - k - 1;
            for (int lambda = 0; lambda < k; ++lambda) {
                const long long num = static_cast<long long>(k) * (k - lambda - 1);
                if (num % denom != 0) continue;
                const long long mu = num / denom;
                if (mu < 1 || mu > k) continue;
                SrgParams p{n, k, lambda, static_cast<int>(mu)};
                auto spec = try_srg_spectrum(p);
                if (!spec) continue;
                if (filters.krein && !krein_conditions_hold(p, *spec)) continue;
                if (filters.absolute && !absolute_bound_holds(p, *spec)) continue;
                FeasibleRecord rec;
                rec.params = p;
                rec.spectrum = *spec;
                rec.satisfies_main = satisfies_main(p);
                rec.classification = classify(p, *spec);
                rec.source = "enumerated";
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<FeasibleRecord> enumerate_feasible(int n_max, FeasibilityFilters filters) {
    if (n_max < 5) return {};
    const int workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    if (workers == 1 || n_max < 64) return enumerate_range(5, n_max + 1, filters);

    // Chunk the n range; later chunks carry more work, so keep them short.
    std::vector<std::pair<int, int>> chunks;
    const int step = std::max(8, (n_max - 4) / (workers * 8));
    for (int lo = 5; lo <= n_max; lo += step)
        chunks.emplace_back(lo, std::min(n_max + 1, lo + step));
    std::vector<std::future<std::vector<FeasibleRecord>>> futures;
    futures.reserve(chunks.size());
    for (auto [lo, hi] : chunks)
        futures.push_back(std::async(std::launch::async, enumerate_range, lo, hi, filters));
    std::vector<FeasibleRecord> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

TableLoad load_table(std::istream& in) {
    TableLoad out;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string body = line.substr(start);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();

        std::vector<std::string> fields;
        std::istringstream ls(body);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            std::size_t a = tok.find_first_not_of(" \t");
            std::size_t b = tok.find_last_not_of(" \t");
            fields.push_back(a == std::string::npos ? "" : tok.substr(a, b - a + 1));
        }
        auto parse_int = [](const std::string& s, int& v) {
            try {
                std::size_t pos = 0;
                v = std::stoi(s, &pos);
                return pos == s.size();
            } catch (const std::exception&) {
                return false;
            }
        };
        if (first_content) {
            first_content = false;
            int probe;
            if (!fields.empty() && !parse_int(fields[0], probe)) continue;  // header row
        }
        if (fields.size() < 4 || fields.size() > 5) {
            out.rejected.push_back({lineno, "expected n,k,lambda,mu[,status], got " +
                                                std::to_string(fields.size()) + " fields"});
            continue;
        }
        SrgParams p;
        int vals[4];
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            if (!parse_int(fields[i], vals[i])) {
                out.rejected.push_back({lineno, "field " + std::to_string(i + 1) +
                                                    " is not an integer: \"" + fields[i] + "\""});
                ok = false;
                break;
            }
        if (!ok) continue;
        p = {vals[0], vals[1], vals[2], vals[3]};
        if (!p.identity_holds()) {
            out.rejected.push_back(
                {lineno, "counting identity k(k-lambda-1) = (n-k-1)mu fails for " + p.str()});
            continue;
        }
        std::string why;
        auto spec = try_srg_spectrum(p, &why);
        if (!spec) {
            out.rejected.push_back({lineno, why});
            continue;
        }
        FeasibleRecord rec;
        rec.params = p;
        rec.spectrum = *spec;
        rec.satisfies_main = satisfies_main(p);
        rec.classification = classify(p, *spec);
        rec.source = "table";
        if (fields.size() == 5) rec.status = fields[4];
        out.records.push_back(std::move(rec));
    }
    return out;
}

ScanReport scan_main(int n_max, const std::vector<FeasibleRecord>* table,
                     FeasibilityFilters filters, bool allow_large) {
    if (n_max > 5000 && !allow_large)
        throw std::invalid_argument("scan above n = 5000 needs the allow-large flag");
    ScanReport report;
    report.n_max = n_max;
    report.filters_active = filters.active_names();

    auto records = enumerate_feasible(n_max, filters);
    if (table) {
        std::vector<SrgParams> keep;
        keep.reserve(table->size());
        for (const auto& r : *table) keep.push_back(r.params);
        std::erase_if(records, [&](const FeasibleRecord& r) {
            return std::find(keep.begin(), keep.end(), r.params) == keep.end();
        });
    }
    report.total_feasible = static_cast<long long>(records.size());

    for (auto& rec : records) {
        if (!rec.satisfies_main) continue;
        ++report.main_satisfier_count;
        if (rec.params.mu <= 1) {
            report.trivially_satisfying.push_back(rec);
        } else if (rec.classification.tag == "geometric-family-match") {
            report.matched.push_back(rec);
        } else {
            report.unmatched.push_back(rec);
        }
    }
    for (const auto& rec : report.unmatched) {
        if (!report.min_unmatched_n || rec.params.n < *report.min_unmatched_n)
            report.min_unmatched_n = rec.params.n;
    }
    return report;
}

}  // namespace drgkit
