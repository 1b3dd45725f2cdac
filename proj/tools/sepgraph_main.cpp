// Command line front end. Every run emits one JSON document (or CSV where
// noted) with the operation name, the seed, and the result; identical
// invocations produce byte-identical output.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sepgraph/io_json.hpp"
#include "sepgraph/sepgraph.hpp"

namespace {

using sepgraph::json;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sepgraph::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_all(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sepgraph::ParseError("cannot open output file: " + path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw sepgraph::ParseError(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw sepgraph::ParseError(std::string(what) + ": empty list");
    return out;
}

json parse_json_doc(const std::string& path) {
    try {
        return json::parse(read_all(path));
    } catch (const json::parse_error& e) {
        throw sepgraph::ParseError(path + ": " + e.what());
    }
}

sepgraph::SeparationProfile profile_from_json(const json& doc) {
    const json* body = &doc;
    if (doc.contains("result")) body = &doc.at("result");
    sepgraph::SeparationProfile prof;
    prof.source = body->value("source", std::string("unknown"));
    prof.seed = body->value("seed", 0ULL);
    if (!body->contains("points")) throw sepgraph::ParseError("profile: missing points");
    for (const auto& p : body->at("points")) {
        sepgraph::ProfilePoint pt;
        int n = p.at("n").get<int>();
        pt.value = p.at("value").get<long long>();
        pt.kind = p.at("kind").get<std::string>();
        if (pt.kind != "lower" && pt.kind != "exact" && pt.kind != "upper")
            throw sepgraph::ParseError("profile: unknown point kind " + pt.kind);
        if (p.contains("witness")) pt.witness = p.at("witness").get<std::vector<int>>();
        prof.points[n] = std::move(pt);
    }
    return prof;
}

struct Invocation {
    std::string op;
    json result;
    std::string text_override;  // CSV output replaces the JSON envelope
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex separation toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path = "-", format = "json";
    std::uint64_t seed = 1;
    long long budget = 100'000'000LL;
    bool timing = false;
    int workers = 0;
    app.add_option("--out", out_path, "output file, - for stdout");
    app.add_option("--format", format, "json or csv (csv for profiles only)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for randomized phases");
    app.add_option("--budget", budget, "cap on examined candidate sets");
    app.add_flag("--timing", timing, "include wall time in the output");
    app.add_option("--workers", workers, "worker threads, 0 = hardware default");

    Invocation inv;

    auto* parse_check = app.add_subcommand("parse-check", "validate a graph document");
    parse_check->add_option("--in", in_path, "graph file, - for stdin")->required();
    parse_check->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        inv.op = "parse-check";
        inv.result = json{{"n", g.n},
                          {"edges", g.edge_count()},
                          {"max_degree", g.max_degree()},
                          {"components", sepgraph::connected_components(g).size()},
                          {"connected", sepgraph::is_connected(g)}};
    });

    auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
    girth_cmd->add_option("--in", in_path)->required();
    girth_cmd->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        auto gv = sepgraph::girth(g);
        inv.op = "girth";
        inv.result = json{{"girth", gv ? json(*gv) : json(nullptr)}};
    });

    std::string cheeger_method = "auto";
    auto* cheeger_cmd = app.add_subcommand("cheeger", "vertex Cheeger constant");
    cheeger_cmd->add_option("--in", in_path)->required();
    cheeger_cmd->add_option("--method", cheeger_method, "auto, exhaustive, or spectral")
        ->check(CLI::IsMember({"auto", "exhaustive", "spectral"}));
    cheeger_cmd->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        std::string m = cheeger_method;
        if (m == "auto") m = g.n <= 20 ? "exhaustive" : "spectral";
        sepgraph::CheegerResult r =
            m == "exhaustive" ? sepgraph::cheeger_exact(g) : sepgraph::cheeger_spectral_lower(g);
        inv.op = "cheeger";
        inv.result = sepgraph::json_of(r);
    });

    bool cut_bounds_mode = false;
    int restarts = 32;
    auto* cut_cmd = app.add_subcommand("cut", "minimum balancing vertex removal");
    cut_cmd->add_option("--in", in_path)->required();
    cut_cmd->add_flag("--bounds", cut_bounds_mode, "bounds instead of the exact value");
    cut_cmd->add_option("--restarts", restarts, "random sweep restarts for --bounds");
    cut_cmd->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        inv.op = "cut";
        if (cut_bounds_mode) {
            sepgraph::CutBoundsOptions opts;
            opts.restarts = restarts;
            opts.seed = seed;
            inv.result = sepgraph::json_of(sepgraph::cut_bounds(g, opts));
        } else {
            inv.result = sepgraph::json_of(sepgraph::cut_exact(g, budget));
        }
    });

    bool with_trace = false;
    auto* extract_cmd = app.add_subcommand("extract-expander", "certified expander subgraph");
    extract_cmd->add_option("--in", in_path)->required();
    extract_cmd->add_flag("--trace", with_trace, "include the full cut sequence");
    extract_cmd->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        inv.op = "extract-expander";
        sepgraph::ExpanderCertificate cert = sepgraph::extract_expander(g, budget);
        inv.result = sepgraph::json_of(cert);
        if (with_trace)
            inv.result["sequence"] = sepgraph::json_of(sepgraph::efficient_cut_sequence(g, budget));
    });

    std::string n_list_text;
    std::string sep_mode = "auto";
    int samples = 32;
    auto* sep_cmd = app.add_subcommand("sep", "separation profile of a host graph");
    sep_cmd->add_option("--in", in_path)->required();
    sep_cmd->add_option("--n-list", n_list_text, "comma separated scales")->required();
    sep_cmd->add_option("--mode", sep_mode, "auto, exact, or lower")
        ->check(CLI::IsMember({"auto", "exact", "lower"}));
    sep_cmd->add_option("--samples", samples, "candidates per scale in lower mode");
    sep_cmd->callback([&] {
        sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
        std::vector<int> ns = parse_int_list(n_list_text, "--n-list");
        std::string mode = sep_mode;
        if (mode == "auto") mode = g.n <= 16 ? "exact" : "lower";
        sepgraph::SeparationProfile prof;
        if (mode == "exact") {
            int widest = *std::max_element(ns.begin(), ns.end());
            sepgraph::SeparationProfile all = sepgraph::sep_profile_exact(g, widest, budget);
            prof.source = all.source;
            for (int n : ns) {
                int key = std::min(n, g.n);
                prof.points[n] = all.points.at(key);
            }
        } else {
            sepgraph::SepLowerOptions opts;
            opts.samples = samples;
            opts.seed = seed;
            prof = sepgraph::sep_lower_estimate(g, ns, opts);
        }
        inv.op = "sep";
        inv.result = sepgraph::json_of(prof);
        if (format == "csv") inv.text_override = sepgraph::profile_to_csv(prof);
    });

    std::string f_path, g_path;
    long long max_constant = 0;
    auto* cmp_cmd = app.add_subcommand("profile-compare", "pointwise profile domination");
    cmp_cmd->add_option("--f", f_path, "profile JSON whose values must be dominated")->required();
    cmp_cmd->add_option("--g", g_path, "profile JSON providing the upper side")->required();
    cmp_cmd->add_option("--max-constant", max_constant, "largest admissible constant, 0 = none");
    cmp_cmd->callback([&] {
        sepgraph::SeparationProfile f = profile_from_json(parse_json_doc(f_path));
        sepgraph::SeparationProfile g = profile_from_json(parse_json_doc(g_path));
        std::optional<long long> cap;
        if (max_constant > 0) cap = max_constant;
        inv.op = "profile-compare";
        inv.result = sepgraph::json_of(sepgraph::compare_profiles(f, g, cap));
    });

    auto* family_cmd = app.add_subcommand("family", "cage family operations");
    family_cmd->require_subcommand(1);

    std::string positions_text, bits_text;
    int depth = -1;
    auto* build_cmd = family_cmd->add_subcommand("build", "assemble a family manifest");
    build_cmd->add_option("--positions", positions_text, "1-based positions into the cage list");
    build_cmd->add_option("--bits", bits_text, "binary index string");
    build_cmd->add_option("--depth", depth, "prefix depth for --bits");
    build_cmd->callback([&] {
        if (positions_text.empty() == bits_text.empty())
            throw sepgraph::ParseError("family build: give exactly one of --positions, --bits");
        sepgraph::GraphFamily fam;
        if (!positions_text.empty()) {
            fam = sepgraph::build_family(parse_int_list(positions_text, "--positions"));
        } else {
            sepgraph::IndexSet s = sepgraph::continuum_index_set(bits_text, depth);
            fam = sepgraph::build_family(s);
        }
        inv.op = "family-build";
        inv.result = sepgraph::json_of(fam);
    });

    std::string m_list_text, n_fam_text, m_bits, n_bits;
    int c_position = 0;
    auto* dist_cmd = family_cmd->add_subcommand("distinguish", "separate two families at c");
    dist_cmd->add_option("--m-list", m_list_text, "positions of the family containing c");
    dist_cmd->add_option("--n-list", n_fam_text, "positions of the family to bound above");
    dist_cmd->add_option("--m-bits", m_bits, "index bits of the first family");
    dist_cmd->add_option("--n-bits", n_bits, "index bits of the second family");
    dist_cmd->add_option("--depth", depth, "prefix depth for bits");
    dist_cmd->add_option("--c", c_position, "separating position")->required();
    dist_cmd->callback([&] {
        auto build_side = [&](const std::string& list_text, const std::string& bits,
                              const char* side) {
            if (list_text.empty() == bits.empty())
                throw sepgraph::ParseError(std::string("family distinguish: give exactly one of "
                                                       "--") +
                                           side + "-list, --" + side + "-bits");
            if (!list_text.empty())
                return sepgraph::build_family(parse_int_list(list_text.c_str(), side));
            return sepgraph::build_family(sepgraph::continuum_index_set(bits, depth));
        };
        sepgraph::GraphFamily m_fam = build_side(m_list_text, m_bits, "m");
        sepgraph::GraphFamily n_fam = build_side(n_fam_text, n_bits, "n");
        inv.op = "family-distinguish";
        inv.result = sepgraph::json_of(sepgraph::distinguish(m_fam, n_fam, c_position, budget));
    });

    auto* sparsify_cmd = family_cmd->add_subcommand("sparsify", "girth-driven thinning");
    sparsify_cmd->callback([&] {
        inv.op = "family-sparsify";
        inv.result = sepgraph::json_of(sepgraph::sparsify_for_girth(sepgraph::builtin_cages()));
    });

    std::string grid_text, r_text = "auto";
    bool validate = false;
    auto* asdim_cmd = app.add_subcommand("asdim-cut", "cover-driven balancing cut on a grid");
    asdim_cmd->add_option("--grid", grid_text, "dimension,side")->required();
    asdim_cmd->add_option("--r", r_text, "separation scale, integer or auto");
    asdim_cmd->add_flag("--validate", validate, "audit the cover before cutting");
    asdim_cmd->callback([&] {
        std::vector<int> ds = parse_int_list(grid_text, "--grid");
        if (ds.size() != 2) throw sepgraph::ParseError("--grid: expected dimension,side");
        int d = ds[0], s = ds[1];
        sepgraph::Graph g = sepgraph::make_grid(d, s);
        int m = 1 << d;
        int r;
        if (r_text == "auto") {
            r = sepgraph::auto_grid_r(d, s, m);
        } else {
            r = parse_int_list(r_text, "--r").at(0);
        }
        sepgraph::Cover cover = sepgraph::grid_cover(d, s, r);
        if (validate) sepgraph::validate_cover(g, cover);
        inv.op = "asdim-cut";
        inv.result = sepgraph::json_of(sepgraph::asdim_cut(g, cover));
        inv.result["grid"] = json{{"d", d}, {"s", s}};
        inv.result["r"] = r;
        inv.result["m"] = m;
    });

    std::string model_name = "grid";
    int model_d = 2, c_scale = 0, m_classes = 4;
    long long scale_n = 0;
    auto* upper_cmd = app.add_subcommand("sep-upper", "growth-model separation upper bound");
    upper_cmd->add_option("--model", model_name, "grid, exponential, or empirical")
        ->check(CLI::IsMember({"grid", "exponential", "empirical"}));
    upper_cmd->add_option("--d", model_d, "lattice dimension for the grid model");
    upper_cmd->add_option("--c-scale", c_scale, "radius multiplier, 0 = dimension default");
    upper_cmd->add_option("--m", m_classes, "number of cover classes")->required();
    upper_cmd->add_option("--n", scale_n, "scale at which to bound sep")->required();
    upper_cmd->add_option("--in", in_path, "host graph for the empirical model");
    upper_cmd->callback([&] {
        sepgraph::GrowthModel model;
        if (model_name == "grid") {
            model = sepgraph::growth_model_grid(model_d, c_scale == 0 ? -1 : c_scale);
        } else if (model_name == "exponential") {
            model = sepgraph::growth_model_exponential();
        } else {
            if (in_path.empty())
                throw sepgraph::ParseError("sep-upper: empirical model needs --in");
            sepgraph::Graph g = sepgraph::parse_graph(read_all(in_path));
            model = sepgraph::growth_model_empirical(g, c_scale == 0 ? 1 : c_scale);
        }
        inv.op = "sep-upper";
        sepgraph::AsdimSepBound b = sepgraph::sep_upper_from_growth(model, m_classes, scale_n);
        inv.result = sepgraph::json_of(b);
        inv.result["model"] = model.label;
        inv.result["m"] = m_classes;
        inv.result["n"] = scale_n;
    });

    // Global options are accepted anywhere on the line, including after the
    // subcommand name.
    for (CLI::App* sub : {parse_check, girth_cmd, cheeger_cmd, cut_cmd, extract_cmd, sep_cmd,
                          cmp_cmd, family_cmd, build_cmd, dist_cmd, sparsify_cmd, asdim_cmd,
                          upper_cmd})
        sub->fallthrough();

    auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const sepgraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sepgraph::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const sepgraph::DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const sepgraph::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (format == "csv" && inv.text_override.empty()) {
        std::cerr << "error: --format csv is only available for profile output\n";
        return 1;
    }
    json envelope{{"op", inv.op}, {"seed", seed}, {"result", inv.result}};
    if (workers != 0) envelope["workers"] = workers;
    if (timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        envelope["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::string text = inv.text_override.empty() ? envelope.dump(2) + "\n" : inv.text_override;
    try {
        write_all(out_path, text);
    } catch (const sepgraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
