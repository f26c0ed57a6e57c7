// gkit: decides Cohen-Macaulay / Gorenstein / well-covered / W2 properties
// of small graphs through their independence complexes, enumerates graph
// classes by structural constraints, and re-runs the library's full
// self-verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkit/builtins.hpp"
#include "gkit/complex.hpp"
#include "gkit/enumerate.hpp"
#include "gkit/gorenstein.hpp"
#include "gkit/homology.hpp"
#include "gkit/independence.hpp"
#include "gkit/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;

struct InputFlags {
    std::string graph6, edges_file, facets_file, builtin;

    int count() const {
        return (graph6.empty() ? 0 : 1) + (edges_file.empty() ? 0 : 1) +
               (facets_file.empty() ? 0 : 1) + (builtin.empty() ? 0 : 1);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gkit::MalformedInput("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gkit::Graph load_graph(const InputFlags& in) {
    if (in.count() != 1) throw gkit::MalformedInput("choose exactly one of --graph6/--edges/--facets/--builtin");
    if (!in.graph6.empty()) return gkit::parse_graph6(in.graph6);
    if (!in.edges_file.empty()) return gkit::parse_edge_list(read_file(in.edges_file));
    if (!in.builtin.empty()) {
        if (auto g = gkit::builtin_graph(in.builtin)) return *g;
        throw gkit::MalformedInput("unknown builtin graph \"" + in.builtin + "\"");
    }
    throw gkit::MalformedInput("facet input is only valid for complex-level commands");
}

std::vector<gkit::FieldSpec> parse_fields(std::string spec) {
    if (spec.empty()) {
        if (const char* env = std::getenv("GKIT_FIELDS")) spec = env;
        else spec = "q,f2,f3,f5";
    }
    std::vector<gkit::FieldSpec> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(gkit::FieldSpec::parse(token));
    if (out.empty()) throw gkit::InvalidInput("empty field list");
    return out;
}

json witness_json(const std::optional<gkit::Witness>& w) {
    if (!w) return nullptr;
    return json{{"condition", w->condition}, {"vertices", w->vertices}, {"detail", w->detail}};
}

json verdict_json(const gkit::Verdict& v) {
    return json{{"accepted", v.accepted},
                {"route", gkit::to_string(v.route)},
                {"conditions", v.conditions_checked},
                {"witness", witness_json(v.witness)}};
}

void print_verdict_text(std::ostream& out, const std::string& field, const gkit::Verdict& v) {
    out << "field " << field << " [" << gkit::to_string(v.route) << "]: "
        << (v.accepted ? "accepted" : "rejected");
    if (v.witness) {
        out << "  (" << v.witness->condition;
        if (!v.witness->vertices.empty()) {
            out << " at {";
            for (std::size_t i = 0; i < v.witness->vertices.size(); ++i)
                out << (i ? "," : "") << v.witness->vertices[i];
            out << "}";
        }
        out << ": " << v.witness->detail << ")";
    }
    out << "\n";
}

std::string input_label(const InputFlags& in) {
    if (!in.builtin.empty()) return in.builtin;
    if (!in.graph6.empty()) return in.graph6;
    if (!in.edges_file.empty()) return in.edges_file;
    if (!in.facets_file.empty()) return in.facets_file;
    return "";
}

std::string fault_injection() {
    const char* f = std::getenv("GKIT_FAULT");
    return f ? f : "";
}

json betti_json(const gkit::BettiProfile& b) {
    json out{{"field", b.field.to_string()}, {"values", b.values}};
    if (!b.label.empty()) out["label"] = b.label;
    return out;
}

template <typename T>
json bigints_json(const std::vector<T>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(gkit::to_string(v));
    return arr;
}

// --- check -----------------------------------------------------------------------

int run_check(const InputFlags& in, const std::string& fields_flag, const std::string& route,
              const std::string& format) {
    if (in.count() != 1) throw gkit::MalformedInput("choose exactly one of --graph6/--edges/--facets/--builtin");
    const std::vector<gkit::FieldSpec> fields = parse_fields(fields_flag);

    if (!in.facets_file.empty()) {
        // Complex-level input goes through the homological route only.
        const gkit::SimplicialComplex c = gkit::parse_facet_file(read_file(in.facets_file));
        if (c.is_void()) throw gkit::MalformedInput("the void complex has no Stanley-Reisner ring to check");
        json results = json::array();
        for (const auto& k : fields) {
            const gkit::Verdict cm = gkit::is_cm_reisner(c, k);
            const gkit::Verdict gor = gkit::is_gorenstein_homological(c, k);
            if (format == "json") {
                results.push_back(json{{"field", k.to_string()},
                                       {"cohen_macaulay", verdict_json(cm)},
                                       {"gorenstein", verdict_json(gor)}});
            } else {
                std::cout << "field " << k.to_string() << ": cohen-macaulay="
                          << (cm.accepted ? "yes" : "no") << " gorenstein=" << (gor.accepted ? "yes" : "no") << "\n";
                if (gor.witness) print_verdict_text(std::cout, k.to_string(), gor);
            }
        }
        if (format == "json")
            std::cout << json{{"command", "check"}, {"input", "facets"}, {"route", "homological"}, {"results", results}}
                      << "\n";
        return kExitOk;
    }

    const gkit::Graph g = load_graph(in);
    json results = json::array();
    bool all_agree = true;
    for (const auto& k : fields) {
        std::optional<gkit::Verdict> theorem, homological;
        if (route == "theorem" || route == "both") theorem = gkit::check_gorenstein_theorem(g, k);
        if (route == "homological" || route == "both") {
            const gkit::StrippedGraph stripped = gkit::strip_isolated(g);
            homological = gkit::is_gorenstein_homological(gkit::independence_complex(stripped.graph), k);
            if (fault_injection() == "negate-homological") homological->accepted = !homological->accepted;
        }
        json entry{{"field", k.to_string()}};
        if (theorem) entry["theorem"] = verdict_json(*theorem);
        if (homological) entry["homological"] = verdict_json(*homological);
        if (theorem && homological) {
            const bool agree = theorem->accepted == homological->accepted;
            entry["agree"] = agree;
            all_agree = all_agree && agree;
        }
        results.push_back(entry);
        if (format != "json") {
            if (theorem) print_verdict_text(std::cout, k.to_string(), *theorem);
            if (homological) print_verdict_text(std::cout, k.to_string(), *homological);
            if (theorem && homological)
                std::cout << "field " << k.to_string() << ": routes "
                          << (theorem->accepted == homological->accepted ? "agree" : "DISAGREE") << "\n";
        }
    }
    if (format == "json") {
        json out{{"command", "check"},
                 {"graph", {{"n", g.order()}, {"m", g.edge_count()}, {"alpha", gkit::independence_number(g)}}},
                 {"route", route},
                 {"results", results}};
        if (route == "both") out["all_agree"] = all_agree;
        std::cout << out << "\n";
    } else if (route == "both") {
        std::cout << (all_agree ? "routes agree on every field" : "ROUTE DISAGREEMENT") << "\n";
    }
    return (route == "both" && !all_agree) ? kExitDisagreement : kExitOk;
}

// --- report ----------------------------------------------------------------------

int run_report(const InputFlags& in, const std::string& fields_flag, const std::string& format) {
    if (in.count() != 1) throw gkit::MalformedInput("choose exactly one of --graph6/--edges/--facets/--builtin");
    const std::vector<gkit::FieldSpec> fields = parse_fields(fields_flag);

    if (!in.facets_file.empty()) {
        const gkit::SimplicialComplex c = gkit::parse_facet_file(read_file(in.facets_file));
        if (c.is_void()) throw gkit::MalformedInput("the void complex has no report");
        const gkit::FVector f = gkit::f_vector(c);
        const bool pure = gkit::is_pure(c);
        json out{{"command", "report"},
                 {"complex", {{"ambient", c.ambient()}, {"dim", c.dim()}, {"facets", c.facets().size()}}},
                 {"f_vector", bigints_json(f.entries)},
                 {"pure", pure},
                 {"h_vector", pure ? bigints_json(gkit::h_vector(c)) : json(nullptr)},
                 {"euler", gkit::is_euler(c)},
                 {"core_vertices", gkit::core(c).vertex_support().size()}};
        json betti = json::array();
        for (const auto& k : fields) betti.push_back(betti_json(gkit::reduced_betti(c, k, input_label(in))));
        out["betti"] = betti;
        if (format == "json") {
            std::cout << out << "\n";
        } else {
            std::cout << "complex: dim=" << c.dim() << ", facets=" << c.facets().size() << "\n"
                      << "f=" << out["f_vector"].dump() << " pure=" << (pure ? "yes" : "no")
                      << " euler=" << (gkit::is_euler(c) ? "yes" : "no") << "\n";
            for (const auto& k : fields)
                std::cout << "betti over " << k.to_string() << ": "
                          << json(gkit::reduced_betti(c, k).values).dump() << "\n";
        }
        return kExitOk;
    }

    const gkit::Graph g = load_graph(in);
    const gkit::IntPolynomial ip = gkit::independence_polynomial(g);
    const gkit::SimplicialComplex delta = gkit::independence_complex(g);
    const gkit::FVector f = gkit::f_vector(delta);
    const bool pure = gkit::is_pure(delta);
    const bool no_isolated = gkit::isolated_vertices(g).empty();

    json out{{"command", "report"},
             {"graph", {{"n", g.order()}, {"m", g.edge_count()}, {"alpha", gkit::independence_number(g)}}},
             {"independence_polynomial", ip.to_string()},
             {"f_vector", bigints_json(f.entries)},
             {"pure", pure},
             {"h_vector", pure ? bigints_json(gkit::h_vector(delta)) : json(nullptr)},
             {"well_covered", gkit::is_well_covered(g)},
             {"w2", g.order() >= 2 && gkit::is_w2_definition(g)},
             {"euler", gkit::is_euler(delta)},
             {"core_vertices", gkit::core(delta).vertex_support().size()},
             {"no_isolated_vertices", no_isolated}};
    json betti = json::array();
    for (const auto& k : fields) betti.push_back(betti_json(gkit::reduced_betti(delta, k, input_label(in))));
    out["betti"] = betti;

    if (format == "json") {
        std::cout << out << "\n";
    } else {
        std::cout << "graph: n=" << g.order() << " m=" << g.edge_count()
                  << " alpha=" << gkit::independence_number(g) << "\n"
                  << "I(x)=" << ip.to_string() << "\n"
                  << "f=" << out["f_vector"].dump() << "\n"
                  << "h=" << (pure ? out["h_vector"].dump() : std::string("(not pure)")) << "\n"
                  << "well-covered=" << (out["well_covered"].get<bool>() ? "yes" : "no")
                  << " w2=" << (out["w2"].get<bool>() ? "yes" : "no")
                  << " euler=" << (out["euler"].get<bool>() ? "yes" : "no")
                  << " core-vertices=" << out["core_vertices"].get<int>() << "\n";
        for (const auto& k : fields)
            std::cout << "betti over " << k.to_string() << ": "
                      << json(gkit::reduced_betti(delta, k).values).dump() << "\n";
    }
    return kExitOk;
}

// --- enumerate ---------------------------------------------------------------------

gkit::SearchSpec build_spec(const std::string& n_range, bool triangle_free, bool no_isolated,
                            std::optional<int> alpha, bool connected, std::optional<long> edge_count,
                            const std::string& degrees, const std::string& predicate) {
    gkit::SearchSpec spec;
    if (const auto dots = n_range.find(".."); dots != std::string::npos) {
        spec.n_min = std::stoi(n_range.substr(0, dots));
        spec.n_max = std::stoi(n_range.substr(dots + 2));
    } else {
        spec.n_min = spec.n_max = std::stoi(n_range);
    }
    spec.triangle_free = triangle_free;
    spec.no_isolated = no_isolated;
    spec.alpha = alpha;
    if (connected) spec.connected = true;
    spec.edge_count = edge_count;
    if (!degrees.empty()) {
        gkit::SearchSpec::DegreeSpec ds;
        std::stringstream ss(degrees);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token.empty()) continue;
            const auto eq = token.find('=');
            const int d = std::stoi(token.substr(0, eq));
            ds.allowed.push_back(d);
            if (eq != std::string::npos) ds.exact_multiplicity[d] = std::stoi(token.substr(eq + 1));
        }
        spec.degrees = std::move(ds);
    }
    if (predicate == "none" || predicate.empty()) {
        spec.predicate = gkit::SearchSpec::Predicate::None;
    } else if (predicate == "w2") {
        spec.predicate = gkit::SearchSpec::Predicate::W2;
    } else if (predicate.rfind("gorenstein:", 0) == 0) {
        spec.predicate = gkit::SearchSpec::Predicate::Gorenstein;
        spec.predicate_field = gkit::FieldSpec::parse(predicate.substr(std::string("gorenstein:").size()));
    } else {
        throw gkit::InvalidInput("unknown predicate \"" + predicate + "\" (none | w2 | gorenstein:<field>)");
    }
    return spec;
}

int run_enumerate(const gkit::SearchSpec& spec, int jobs, const std::string& format) {
    long count = 0;
    gkit::generate(spec, [&](const gkit::Graph& g) {
        ++count;
        if (format == "json") {
            json verdicts = json::object();
            if (spec.predicate == gkit::SearchSpec::Predicate::W2) verdicts["w2"] = true;
            if (spec.predicate == gkit::SearchSpec::Predicate::Gorenstein)
                verdicts["gorenstein:" + spec.predicate_field->to_string()] = true;
            std::cout << json{{"n", g.order()},
                              {"graph6", gkit::emit_graph6(g)},
                              {"canonical", gkit::canonical_form(g).bytes},
                              {"alpha", gkit::independence_number(g)},
                              {"m", g.edge_count()},
                              {"verdicts", verdicts}}
                      << "\n";
        } else {
            std::cout << gkit::emit_graph6(g) << "\n";
        }
    }, jobs);
    std::cerr << "enumerated " << count << " graph(s)\n";
    return kExitOk;
}

// --- verify ------------------------------------------------------------------------

int run_verify(int probe_max_n, int corpus, unsigned seed, int jobs, const std::string& fields_flag) {
    gkit::VerifyOptions opt;
    opt.fields = parse_fields(fields_flag.empty() ? "q,f2,f3" : fields_flag);
    opt.probe_max_n = probe_max_n;
    opt.corpus_size = corpus;
    opt.seed = seed;
    opt.jobs = jobs;
    const gkit::VerificationReport report = gkit::run_verification(opt, &std::cerr);
    for (const auto& c : report.criteria) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name << " -- "
                  << c.detail << " (" << static_cast<long>(c.ms) << " ms)\n";
    }
    std::cout << (report.all_passed() ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return report.all_passed() ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Gorenstein/Cohen-Macaulay graph checks"};
    app.require_subcommand(1);

    InputFlags input;
    std::string fields_flag, route = "theorem", format = "text";
    int jobs = 1;

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--graph6", input.graph6, "graph6-encoded graph");
        cmd->add_option("--edges", input.edges_file, "edge-list file (first line: n <count>)");
        cmd->add_option("--facets", input.facets_file, "facet file (one facet per line)");
        cmd->add_option("--builtin", input.builtin, "named graph: fig1a fig1b fig1c cbarN cN kN pN");
        cmd->add_option("--fields", fields_flag, "comma-separated fields, e.g. q,f2,f3 (default: GKIT_FIELDS or q,f2,f3,f5)");
        cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "decide the Gorenstein property");
    add_input_flags(check);
    check->add_option("--route", route, "theorem | homological | both")
        ->check(CLI::IsMember({"theorem", "homological", "both"}));

    CLI::App* report = app.add_subcommand("report", "invariants: counts, polynomials, complex data, Betti numbers");
    add_input_flags(report);

    CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free generation under structural constraints");
    std::string n_range = "1", degrees, predicate = "none", enum_format = "json";
    bool tf = false, no_isolated = false, connected = false;
    std::optional<int> alpha;
    std::optional<long> edge_count;
    enumerate->add_option("--n", n_range, "target order or range, e.g. 7 or 6..8");
    enumerate->add_flag("--triangle-free", tf, "restrict to triangle-free graphs");
    enumerate->add_flag("--no-isolated", no_isolated, "require minimum degree one");
    enumerate->add_flag("--connected", connected, "require connectivity");
    enumerate->add_option("--alpha", alpha, "exact independence number");
    enumerate->add_option("--edge-count", edge_count, "exact edge count (single order only)");
    enumerate->add_option("--degrees", degrees, "allowed degrees, e.g. 3=4,2=4 (degree=count) or 2,3");
    enumerate->add_option("--predicate", predicate, "none | w2 | gorenstein:<field>");
    enumerate->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
    enumerate->add_option("--format", enum_format, "json (one object per line) | text (graph6 lines)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run the self-verification battery");
    int probe_max_n = 9, corpus = 500;
    unsigned seed = 20250808;
    verify->add_option("--probe-n", probe_max_n, "max order for the connected alpha=3 probe (<= 12)");
    verify->add_option("--corpus", corpus, "random corpus size");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--fields", fields_flag, "fields for the agreement criteria (default q,f2,f3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(input, fields_flag, route, format);
        if (report->parsed()) return run_report(input, fields_flag, format);
        if (enumerate->parsed()) {
            const gkit::SearchSpec spec =
                build_spec(n_range, tf, no_isolated, alpha, connected, edge_count, degrees, predicate);
            return run_enumerate(spec, jobs, enum_format);
        }
        if (verify->parsed()) return run_verify(probe_max_n, corpus, seed, jobs, fields_flag);
    } catch (const gkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
