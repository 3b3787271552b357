#include "drgkit/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "drgkit/bounds.hpp"
#include "drgkit/clique_geometry.hpp"
#include "drgkit/edgelist.hpp"
#include "drgkit/families.hpp"
#include "drgkit/feasibility.hpp"
#include "drgkit/graph.hpp"
#include "drgkit/spectra.hpp"

namespace drgkit {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string family;
    std::string graph_path;
    std::string params;
    std::string format = "human";
    std::string t_mode = "min";
    std::string table_path;
    std::string extra_filters;
    int nmax = 0;
    bool allow_large = false;
    std::string out_path;
};

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_input_graph(const CommonOpts& opt, std::string* label) {
    const bool have_family = !opt.family.empty();
    const bool have_graph = !opt.graph_path.empty();
    if (have_family == have_graph)
        throw CLI::ValidationError("input", "exactly one of --family or --graph is required");
    if (have_family) {
        auto spec = FamilySpec::parse(opt.family);
        if (label) *label = spec.str();
        return generate(spec).graph;
    }
    if (label) *label = opt.graph_path;
    return read_edge_list_file(opt.graph_path);
}

SrgParams parse_params(const std::string& text) {
    std::vector<int> vals;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--params", "expected n,k,lambda,mu integers");
        }
    }
    if (vals.size() != 4) throw CLI::ValidationError("--params", "expected n,k,lambda,mu");
    return {vals[0], vals[1], vals[2], vals[3]};
}

json params_json(const SrgParams& p) {
    return json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json ample_json(const AmpleParams& p) {
    return json{{"n", p.n}, {"k", p.k},           {"lambda", p.lambda},
                {"mu", p.mu}, {"mu_exact", p.mu_exact}};
}

json spectrum_json(const Spectrum& s) {
    json j;
    j["theta"] = s.theta;
    j["multiplicities"] = s.multiplicities;
    j["integral"] = s.integral;
    return j;
}

json entry_json(const BoundEntry& e) {
    json j;
    j["name"] = e.name;
    j["applicable"] = e.applicable;
    if (!e.applicable) {
        j["note"] = e.note;
        return j;
    }
    j["verdict"] = e.verdict;
    j["bound"] = e.bound;
    j["observed"] = e.observed;
    j["margin"] = e.margin;
    j["tag"] = e.tag;
    json in = json::object();
    for (const auto& [k, v] : e.inputs) in[k] = v;
    j["inputs"] = in;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

json classification_json(const Classification& c) {
    return json{{"tag", c.tag}, {"detail", c.detail}, {"all_matches", c.all_matches}};
}

void render_entry_human(std::ostream& os, const BoundEntry& e) {
    os << "  " << e.name << ": ";
    if (!e.applicable) {
        os << "not applicable (" << e.note << ")\n";
        return;
    }
    os << (e.verdict ? "holds" : "FAILS") << "  bound=" << e.bound << " observed=" << e.observed
       << " margin=" << e.margin;
    if (!e.tag.empty()) os << " [" << e.tag << "]";
    os << "\n";
}

void emit(const CommonOpts& opt, std::ostream& out, const json& doc,
          const std::function<void(std::ostream&)>& human) {
    if (opt.format == "structured") {
        out << doc.dump(2) << "\n";
    } else {
        human(out);
    }
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const CommonOpts& opt, std::ostream& out) {
    std::string label;
    Graph g = load_input_graph(opt, &label);
    json doc;
    doc["command"] = "analyze";
    doc["input"] = label;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    auto k = regular_degree(g);
    doc["regular_degree"] = k ? json(*k) : json(nullptr);

    auto ample = ample_parameters(g);
    bool failed = !ample.ok();
    if (ample.ok())
        doc["ample"] = ample_json(*ample);
    else
        doc["ample"] = json{{"error", ample.error}};

    auto arr = intersection_array(g);
    if (arr.ok()) {
        doc["intersection_array"] = json{{"b", arr->b}, {"c", arr->c}};
        doc["strongly_regular"] = arr->diameter() == 2 && ample.ok() && ample->mu_exact;
        auto evals = drg_eigenvalues(*arr);
        doc["eigenvalues"] = evals;
    } else {
        doc["intersection_array"] = json{{"error", arr.error}};
        doc["strongly_regular"] = false;
    }

    emit(opt, out, doc, [&](std::ostream& os) {
        os << "graph " << label << ": n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        os << "  regular degree: " << (k ? std::to_string(*k) : std::string("not regular"))
           << "\n";
        if (ample.ok()) {
            const auto& p = *ample;
            os << "  ample parameters: (" << p.n << "," << p.k << "," << p.lambda << "," << p.mu
               << ") mu_exact=" << (p.mu_exact ? "true" : "false") << "\n";
        } else {
            os << "  ample parameters: " << ample.error << "\n";
        }
        if (arr.ok()) {
            os << "  intersection array: " << arr->str() << "\n";
            os << "  strongly regular: "
               << (doc["strongly_regular"].get<bool>() ? "yes" : "no") << "\n";
            os << "  eigenvalues:";
            for (double t : doc["eigenvalues"].get<std::vector<double>>()) os << " " << t;
            os << "\n";
        } else {
            os << "  intersection array: " << arr.error << "\n";
        }
    });
    return failed ? 1 : 0;
}

// --------------------------------------------------------------- generate --

int cmd_generate(const CommonOpts& opt, std::ostream& out) {
    if (opt.family.empty()) throw CLI::ValidationError("--family", "generate needs --family");
    auto spec = FamilySpec::parse(opt.family);
    auto labeled = generate(spec);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw AnalysisError("cannot open " + opt.out_path);
        sink = &file;
    }
    if (opt.format == "structured") {
        json doc;
        doc["command"] = "generate";
        doc["family"] = spec.str();
        doc["n"] = labeled.graph.vertex_count();
        doc["m"] = labeled.graph.edge_count();
        if (labeled.expected)
            doc["expected_parameters"] = params_json(*labeled.expected);
        doc["strongly_regular_family"] = labeled.srg;
        json edges = json::array();
        for (const auto& [u, v] : labeled.graph.edges()) edges.push_back({u, v});
        doc["edges"] = edges;
        *sink << doc.dump(2) << "\n";
    } else {
        *sink << "# " << spec.str() << "\n";
        write_edge_list(*sink, labeled.graph);
    }
    return 0;
}

// --------------------------------------------------------------- geometry --

int cmd_geometry(const CommonOpts& opt, std::ostream& out) {
    std::string label;
    Graph g = load_input_graph(opt, &label);
    auto ample = ample_parameters(g);
    if (!ample.ok()) throw AnalysisError("not sub-amply regular: " + ample.error);
    const AmpleParams p = *ample;

    std::optional<MetschWitness> witness =
        opt.t_mode == "corollary" ? metsch_t_corollary(p) : metsch_t_min(p);
    if (!witness)
        throw AnalysisError("no clique-geometry witness for parameters (" +
                            std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                            std::to_string(p.lambda) + "," + std::to_string(p.mu) + ") with t-mode " +
                            opt.t_mode);

    CliqueGeometry geo = extract_geometry(g, *witness);

    // Least eigenvalue for the Delsarte section, when the graph is
    // distance-regular (or a disjoint clique union, where s = -1).
    std::optional<double> least;
    auto arr = intersection_array(g);
    if (arr.ok())
        least = drg_eigenvalues(*arr).back();
    else if (p.mu == 0 && p.k >= 1)
        least = -1.0;

    std::map<int, int> order_hist;
    for (const auto& c : geo.cliques) ++order_hist[static_cast<int>(c.size())];
    std::map<int, int> member_hist;
    for (const auto& m : geo.vertex_membership) ++member_hist[static_cast<int>(m.size())];

    json doc;
    doc["command"] = "geometry";
    doc["input"] = label;
    doc["params"] = ample_json(p);
    doc["witness"] = json{{"t", witness->t},
                          {"order_threshold", witness->order_threshold},
                          {"source", witness->source}};
    doc["mu_le_1_construction"] = p.mu <= 1;
    doc["clique_count"] = geo.cliques.size();
    json orders = json::array();
    for (auto [order, count] : order_hist) {
        json row{{"order", order}, {"count", count}};
        if (least) {
            auto d = delsarte_check(order, p.k, *least);
            row["delsarte_bound"] = d.bound;
            row["delsarte_ratio"] = d.ratio;
            row["is_delsarte"] = d.is_delsarte;
        }
        orders.push_back(row);
    }
    doc["order_histogram"] = orders;
    json members = json::array();
    for (auto [mcount, count] : member_hist)
        members.push_back(json{{"memberships", mcount}, {"count", count}});
    doc["membership_histogram"] = members;
    doc["max_membership"] = geo.max_membership();
    doc["least_eigenvalue"] = least ? json(*least) : json(nullptr);

    emit(opt, out, doc, [&](std::ostream& os) {
        os << "clique geometry of " << label << "\n";
        os << "  parameters: (" << p.n << "," << p.k << "," << p.lambda << "," << p.mu << ")"
           << (p.mu_exact ? "" : " (mu is an upper bound)") << "\n";
        os << "  witness: t=" << witness->t << " order_threshold=" << witness->order_threshold
           << " source=" << witness->source << "\n";
        if (p.mu <= 1) os << "  built by the direct mu<=1 construction\n";
        os << "  special cliques: " << geo.cliques.size() << "\n";
        for (auto [order, count] : order_hist) {
            os << "    order " << order << ": " << count;
            if (least) {
                auto d = delsarte_check(order, p.k, *least);
                os << "  (delsarte bound " << d.bound << ", ratio " << d.ratio
                   << (d.is_delsarte ? ", delsarte" : "") << ")";
            }
            os << "\n";
        }
        os << "  vertex memberships:";
        for (auto [mcount, count] : member_hist) os << " " << mcount << "x" << count;
        os << " (max " << geo.max_membership() << ")\n";
    });
    return 0;
}

// ----------------------------------------------------------------- bounds --

int cmd_bounds(const CommonOpts& opt, std::ostream& out) {
    SrgParams p;
    std::string label;
    std::optional<Graph> g;
    bool mu_exact = true;
    if (!opt.params.empty()) {
        if (!opt.family.empty() || !opt.graph_path.empty())
            throw CLI::ValidationError("input", "--params excludes --family/--graph");
        p = parse_params(opt.params);
        label = p.str();
        // Parameter-only mode treats the tuple as strongly regular.
        if (!p.identity_holds())
            throw AnalysisError("counting identity fails for " + p.str());
    } else {
        g = load_input_graph(opt, &label);
        auto ample = ample_parameters(*g);
        if (!ample.ok()) throw AnalysisError("not sub-amply regular: " + ample.error);
        p = {ample->n, ample->k, ample->lambda, ample->mu};
        mu_exact = ample->mu_exact;
    }

    json doc;
    doc["command"] = "bounds";
    doc["input"] = label;
    doc["params"] = params_json(p);

    // Spectrum: full strongly-regular spectrum when the tuple supports it,
    // else the least eigenvalue alone from the intersection array.
    std::optional<Spectrum> spec;
    std::optional<double> least;
    if (!g) {
        spec = srg_spectrum(p);
        least = spec->s();
    } else {
        auto arr = intersection_array(*g);
        if (arr.ok() && arr->diameter() == 2 && mu_exact && p.identity_holds()) {
            spec = srg_spectrum(p);
            least = spec->s();
        } else if (arr.ok()) {
            least = drg_eigenvalues(*arr).back();
        } else if (p.mu == 0 && p.k >= 1) {
            least = -1.0;  // disjoint cliques
        }
    }
    if (spec) doc["spectrum"] = spectrum_json(*spec);
    doc["least_eigenvalue"] = least ? json(*least) : json(nullptr);

    AmpleParams ap{p.n, p.k, p.lambda, p.mu, mu_exact};
    std::vector<BoundEntry> entries;
    auto push_checked = [&entries](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const std::domain_error& e) {
            BoundEntry skip;
            skip.name = name;
            skip.applicable = false;
            skip.note = e.what();
            entries.push_back(skip);
        }
    };
    auto skip = [&entries](const std::string& name, const std::string& why) {
        BoundEntry e;
        e.name = name;
        e.applicable = false;
        e.note = why;
        entries.push_back(e);
    };
    const std::string not_srg = "needs strongly regular parameters";

    push_checked("lambda_bound", [&] { entries.push_back(lambda_bound(ap)); });

    if (spec) {
        push_checked("r_bound", [&] { entries.push_back(r_bound(p, *spec)); });
        push_checked("claw_bound", [&] { entries.push_back(claw_bound(*spec, p.mu)); });
        push_checked("spielman", [&] {
            auto [a, b] = spielman_bounds(p, *spec);
            entries.push_back(a);
            entries.push_back(b);
        });
        push_checked("pyber", [&] {
            auto [a, b] = pyber_bounds(p, *spec);
            entries.push_back(a);
            entries.push_back(b);
        });
        push_checked("g", [&] {
            auto gv = g_func(p.n, p.k);
            BoundEntry e;
            e.name = "g";
            e.bound = gv.value;
            e.observed = spec->r() / p.n;
            e.margin = e.bound - e.observed;
            e.verdict = e.observed <= e.bound;
            e.tag = gv.piece + "," + gv.convention;
            e.inputs = {{"n", double(p.n)}, {"k", double(p.k)}};
            entries.push_back(e);
        });
        push_checked("h", [&] {
            auto hv = h_func(p.n, p.k);
            BoundEntry e;
            e.name = "h";
            e.bound = hv.value;
            e.observed = double(p.lambda) / p.n;
            e.margin = e.bound - e.observed;
            e.verdict = e.observed <= e.bound;
            e.tag = hv.piece + "," + hv.convention;
            e.inputs = {{"n", double(p.n)}, {"k", double(p.k)}};
            entries.push_back(e);
        });
    } else {
        for (const char* name : {"r_bound", "claw_bound", "spielman_a", "spielman_b", "pyber_a",
                                 "pyber_b", "g", "h"})
            skip(name, not_srg);
    }

    if (least) {
        std::optional<int> claw_free_from;
        if (g) {
            const int mstar = static_cast<int>(std::floor(-*least + 1e-9)) + 1;
            for (int m = 1; m <= mstar; ++m) {
                if (!find_claw(*g, m)) {
                    claw_free_from = m;
                    break;
                }
            }
            if (!claw_free_from) claw_free_from = mstar + 1;  // claws exist through mstar
        }
        push_checked("godsil",
                     [&] { entries.push_back(godsil_condition(ap, *least, claw_free_from)); });
        push_checked("bang_koolen",
                     [&] { entries.push_back(bang_koolen_condition(ap, *least)); });
    } else {
        skip("godsil", "least eigenvalue unknown");
        skip("bang_koolen", "least eigenvalue unknown");
    }

    std::optional<Classification> cls;
    if (spec) {
        cls = classify(p, *spec);
        doc["classification"] = classification_json(*cls);
    } else {
        doc["classification"] = json(nullptr);
    }
    json jentries = json::array();
    for (const auto& e : entries) jentries.push_back(entry_json(e));
    doc["entries"] = jentries;

    emit(opt, out, doc, [&](std::ostream& os) {
        os << "bounds for " << p.str() << "\n";
        if (spec)
            os << "  spectrum: r=" << spec->r() << " s=" << spec->s()
               << (spec->integral ? " (integral)" : " (conference)") << "\n";
        else if (least)
            os << "  least eigenvalue: " << *least << "\n";
        for (const auto& e : entries) render_entry_human(os, e);
        if (cls) os << "  classification: " << cls->tag << " (" << cls->detail << ")\n";
    });
    return 0;
}

// ---------------------------------------------------------------- spectra --

int cmd_spectra(const CommonOpts& opt, std::ostream& out) {
    json doc;
    doc["command"] = "spectra";

    if (!opt.params.empty()) {
        SrgParams p = parse_params(opt.params);
        doc["input"] = p.str();
        doc["params"] = params_json(p);
        Spectrum spec = srg_spectrum(p);  // domain_error -> analysis failure
        doc["spectrum"] = spectrum_json(spec);
        emit(opt, out, doc, [&](std::ostream& os) {
            os << "spectrum of " << p.str() << "\n";
            os << "  theta:";
            for (double t : spec.theta) os << " " << t;
            os << "\n  multiplicities:";
            for (long long m : spec.multiplicities) os << " " << m;
            os << "\n  integral: " << (spec.integral ? "true" : "false") << "\n";
        });
        return 0;
    }

    std::string label;
    Graph g = load_input_graph(opt, &label);
    doc["input"] = label;
    auto arr = intersection_array(g);
    if (!arr.ok()) throw AnalysisError("not distance-regular: " + arr.error);
    doc["intersection_array"] = json{{"b", arr->b}, {"c", arr->c}};
    auto evals = drg_eigenvalues(*arr);
    doc["eigenvalues"] = evals;

    json seqs = json::array();
    for (double theta : evals) {
        const long long rounded = std::llround(theta);
        StandardSequence seq;
        if (std::abs(theta - rounded) < 1e-7 && is_exact_drg_eigenvalue(*arr, rounded)) {
            seq = standard_sequence(*arr, Rational(rounded));
        } else {
            seq = standard_sequence(*arr, theta);
        }
        json row;
        row["at"] = theta;
        row["exact"] = seq.exact;
        if (seq.exact) {
            std::vector<std::string> vals;
            for (const auto& r : seq.exact_values) vals.push_back(r.str());
            row["values"] = vals;
        } else {
            row["values"] = seq.values;
        }
        try {
            row["sign_changes"] = sign_changes(seq);
        } catch (const std::domain_error& e) {
            row["sign_changes"] = nullptr;
            row["error"] = e.what();
        }
        seqs.push_back(row);
    }
    doc["standard_sequences"] = seqs;

    const int lambda = arr->a(1);
    if (lambda >= 1) {
        auto chk = check_lambda_s(arr->degree(), lambda, evals.back());
        doc["lambda_s_check"] = json{{"margin", chk.margin},
                                     {"holds", chk.holds},
                                     {"variant_margin", chk.variant_margin},
                                     {"variant_holds", chk.variant_holds}};
    } else {
        doc["lambda_s_check"] = json{{"skipped", "lambda = 0 is degenerate for this bound"}};
    }

    emit(opt, out, doc, [&](std::ostream& os) {
        os << "spectra of " << label << "\n";
        os << "  intersection array: " << arr->str() << "\n";
        os << "  eigenvalues:";
        for (double t : evals) os << " " << t;
        os << "\n";
        for (const auto& row : seqs) {
            os << "  u(" << row["at"].get<double>() << "):";
            if (row["exact"].get<bool>())
                for (const auto& v : row["values"]) os << " " << v.get<std::string>();
            else
                for (const auto& v : row["values"]) os << " " << v.get<double>();
            if (row.contains("sign_changes") && !row["sign_changes"].is_null())
                os << "  sign changes: " << row["sign_changes"].get<int>();
            os << "\n";
        }
        if (doc["lambda_s_check"].contains("margin"))
            os << "  lambda + k/lambda - k/|s| = "
               << doc["lambda_s_check"]["margin"].get<double>() << " ("
               << (doc["lambda_s_check"]["holds"].get<bool>() ? "holds" : "FAILS") << ")\n";
    });
    return 0;
}

// ------------------------------------------------------------------- scan --

int cmd_scan(const CommonOpts& opt, std::ostream& out) {
    if (opt.nmax < 5) throw CLI::ValidationError("--nmax", "scan needs --nmax >= 5");
    FeasibilityFilters filters;
    if (!opt.extra_filters.empty()) {
        std::istringstream fs(opt.extra_filters);
        std::string tok;
        while (std::getline(fs, tok, ',')) {
            if (tok == "krein")
                filters.krein = true;
            else if (tok == "absolute")
                filters.absolute = true;
            else
                throw CLI::ValidationError("--extra-filters", "unknown filter \"" + tok + "\"");
        }
    }

    std::optional<std::vector<FeasibleRecord>> table;
    json rejected = json::array();
    if (!opt.table_path.empty()) {
        std::ifstream in(opt.table_path);
        if (!in) throw AnalysisError("cannot open " + opt.table_path);
        auto loaded = load_table(in);
        for (const auto& rej : loaded.rejected)
            rejected.push_back(json{{"line", rej.line}, {"reason", rej.reason}});
        table = std::move(loaded.records);
    }

    ScanReport report = scan_main(opt.nmax, table ? &*table : nullptr, filters, opt.allow_large);

    auto record_json = [](const FeasibleRecord& r) {
        json j;
        j["n"] = r.params.n;
        j["k"] = r.params.k;
        j["lambda"] = r.params.lambda;
        j["mu"] = r.params.mu;
        j["satisfies_main"] = r.satisfies_main;
        j["classification"] = classification_json(r.classification);
        j["source"] = r.source;
        if (!r.status.empty()) j["status"] = r.status;
        return j;
    };

    json doc;
    doc["command"] = "scan";
    doc["nmax"] = report.n_max;
    doc["filters_active"] = report.filters_active;
    if (!opt.table_path.empty()) doc["table_rows_rejected"] = rejected;
    doc["total_feasible"] = report.total_feasible;
    doc["main_satisfiers"] = report.main_satisfier_count;
    json triv = json::array(), matched = json::array(), unmatched = json::array();
    for (const auto& r : report.trivially_satisfying) triv.push_back(record_json(r));
    for (const auto& r : report.matched) matched.push_back(record_json(r));
    for (const auto& r : report.unmatched) unmatched.push_back(record_json(r));
    doc["trivially_satisfying"] = triv;
    doc["matched"] = matched;
    doc["unmatched"] = unmatched;
    doc["min_unmatched_n"] = report.min_unmatched_n ? json(*report.min_unmatched_n) : json(nullptr);

    emit(opt, out, doc, [&](std::ostream& os) {
        os << "scan up to n = " << report.n_max << "\n";
        os << "  filters:";
        for (const auto& f : report.filters_active) os << " " << f;
        os << "\n  feasible tuples: " << report.total_feasible << "\n";
        os << "  main-inequality satisfiers: " << report.main_satisfier_count << " ("
           << report.trivially_satisfying.size() << " with mu <= 1, " << report.matched.size()
           << " family-matched, " << report.unmatched.size() << " unmatched)\n";
        for (const auto& r : report.matched)
            os << "    matched " << r.params.str() << "  " << r.classification.detail << "\n";
        for (const auto& r : report.unmatched)
            os << "    unmatched " << r.params.str() << "  [" << r.classification.tag << "]\n";
        if (report.min_unmatched_n)
            os << "  smallest unmatched n: " << *report.min_unmatched_n << "\n";
        else
            os << "  no unmatched satisfiers\n";
    });
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"distance-regular and strongly regular graph toolkit"};
    app.require_subcommand(1);

    CommonOpts opt;
    auto add_input = [&opt](CLI::App* cmd, bool with_params) {
        cmd->add_option("--family", opt.family, "family spec, e.g. triangular:25");
        cmd->add_option("--graph", opt.graph_path, "edge-list file");
        if (with_params) cmd->add_option("--params", opt.params, "n,k,lambda,mu");
        cmd->add_option("--format", opt.format, "human|structured")
            ->check(CLI::IsMember({"human", "structured"}));
    };

    auto* cgen = app.add_subcommand("generate", "write a family graph as an edge list");
    add_input(cgen, false);
    cgen->add_option("--out", opt.out_path, "output path (default stdout)");

    auto* cana = app.add_subcommand("analyze", "regularity parameters of a graph");
    add_input(cana, false);

    auto* cgeo = app.add_subcommand("geometry", "extract and verify the clique geometry");
    add_input(cgeo, false);
    cgeo->add_option("--t-mode", opt.t_mode, "witness selection: min|corollary")
        ->check(CLI::IsMember({"min", "corollary"}));

    auto* cbnd = app.add_subcommand("bounds", "evaluate the parameter bounds");
    add_input(cbnd, true);

    auto* cspc = app.add_subcommand("spectra", "eigenvalues and standard sequences");
    add_input(cspc, true);

    auto* cscn = app.add_subcommand("scan", "scan feasible parameter tuples");
    cscn->add_option("--nmax", opt.nmax, "upper bound on n")->required();
    cscn->add_option("--table", opt.table_path, "CSV parameter table to intersect with");
    cscn->add_option("--extra-filters", opt.extra_filters, "comma list: krein,absolute");
    cscn->add_flag("--allow-large", opt.allow_large, "permit nmax > 5000");
    cscn->add_option("--format", opt.format, "human|structured")
        ->check(CLI::IsMember({"human", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cgen)) return cmd_generate(opt, out);
        if (app.got_subcommand(cana)) return cmd_analyze(opt, out);
        if (app.got_subcommand(cgeo)) return cmd_geometry(opt, out);
        if (app.got_subcommand(cbnd)) return cmd_bounds(opt, out);
        if (app.got_subcommand(cspc)) return cmd_spectra(opt, out);
        if (app.got_subcommand(cscn)) return cmd_scan(opt, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisError& e) {
        err << "analysis failure: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "analysis failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace drgkit
