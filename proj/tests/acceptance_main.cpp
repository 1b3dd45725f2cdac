// Acceptance gate: every guarantee the library advertises, rechecked against
// independent oracles and printed one line per criterion. Exits nonzero if
// any criterion fails its checks or its wall-time cap.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepgraph/io_json.hpp"
#include "sepgraph/sepgraph.hpp"

using namespace sepgraph;

namespace {

struct Check {
    bool ok = true;
    long long count = 0;
    std::string why;

    void expect(bool cond, const std::string& msg) {
        ++count;
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(es));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return make_graph(n, std::move(es));
}

Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    return make_graph(10, std::move(es));
}

// Every connected graph up to 8 vertices, one labeled representative per
// isomorphism class; the class counts pin the enumeration itself.
const std::vector<std::vector<Graph>>& corpus() {
    static const std::vector<std::vector<Graph>> all = [] {
        std::vector<std::vector<Graph>> out(9);
        for (int n = 1; n <= 8; ++n)
            for (std::uint64_t code : oracles::connected_isoclasses(n))
                out[static_cast<std::size_t>(n)].push_back(
                    oracles::rows_to_graph(oracles::code_to_rows(code, n)));
        return out;
    }();
    return all;
}

bool corpus_counts_ok(Check& c) {
    const long long want[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        c.expect(static_cast<long long>(corpus()[static_cast<std::size_t>(n)].size()) == want[n],
                 "isomorphism class count off at n=" + std::to_string(n));
    return c.ok;
}

bool is_regular(const Graph& g) {
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return g.n >= 1 && g.degree(0) >= 1;
}

// ---- criteria ----

void criterion_cut_oracle(Check& c) {
    if (!corpus_counts_ok(c)) return;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : corpus()[static_cast<std::size_t>(n)]) {
            CutResult r = cut_exact(g);
            c.expect(r.value == oracles::cut_value(g), "cut value off on a corpus graph");
            c.expect(oracles::valid_cut(g, r.witness), "cut witness does not balance");
            c.expect(static_cast<int>(r.witness.size()) == r.value, "witness size off");
        }
    Rng rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.range(1, 12);
        Graph g = oracles::random_connected(n, rng, rng.range(0, n));
        CutResult r = cut_exact(g);
        c.expect(r.value == oracles::cut_value(g), "cut value off on a random graph");
        c.expect(oracles::valid_cut(g, r.witness), "random witness does not balance");
    }
}

void criterion_cheeger_oracle(Check& c) {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : corpus()[static_cast<std::size_t>(n)]) {
            auto [p, q] = oracles::cheeger_value(g);
            CheegerResult r = cheeger_exact(g);
            c.expect(r.value == Rational(p, q), "expansion value off on a corpus graph");
            c.expect(!r.witness.empty() && 2 * static_cast<int>(r.witness.size()) <= g.n,
                     "expansion witness size out of range");
            auto bnd = vertex_boundary(g, r.witness);
            c.expect(Rational(static_cast<long long>(bnd.size()),
                              static_cast<long long>(r.witness.size())) == r.value,
                     "expansion witness does not achieve the value");
        }
    Rng rng(1002);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.range(2, 12);
        Graph g = oracles::random_connected(n, rng, rng.range(0, n));
        auto [p, q] = oracles::cheeger_value(g);
        c.expect(cheeger_exact(g).value == Rational(p, q), "expansion value off on random graph");
    }
}

void criterion_quarter_bound(Check& c) {
    Rng rng(1003);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.range(2, 14);
        Graph g = oracles::random_connected(n, rng, rng.range(0, 2 * n));
        Rational h = cheeger_exact(g).value;
        long long cut = cut_exact(g).value;
        c.expect(Rational(cut) >= h * g.n / 4, "cut below a quarter of h times n");
    }
}

void criterion_subgraph_expansion(Check& c) {
    Rng rng(1004);
    for (int host_i = 0; host_i < 50; ++host_i) {
        int n = rng.range(4, 14);
        Graph host = oracles::random_connected(n, rng, rng.range(0, 2 * n));
        int n_max = std::min(10, host.n);
        SeparationProfile sep = sep_profile_exact(host, n_max);
        // All connected induced subgraphs on 2..n_max vertices, sampled at 500.
        MaskGraph m = make_mask_graph(host);
        std::vector<std::uint64_t> subs;
        for (std::uint64_t s = 1; s < (1ULL << host.n); ++s) {
            int sz = std::popcount(s);
            if (sz < 2 || sz > n_max) continue;
            if (mask_connected(m, s)) subs.push_back(s);
        }
        if (subs.size() > 500) {
            rng.shuffle(subs);
            subs.resize(500);
        }
        for (std::uint64_t s : subs) {
            Graph sub = induced_graph(host, mask_to_vertices(s));
            Rational h = cheeger_exact(sub).value;
            long long sep_s = sep.points.at(sub.n).value;
            c.expect(h <= Rational(4 * sep_s, sub.n),
                     "subgraph expansion exceeds 4 sep(s) / s");
        }
    }
}

void criterion_cut_chains(Check& c) {
    Rng rng(1005);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.range(2, 14);
        Graph g = oracles::random_connected(n, rng, rng.range(0, 2 * n));
        EfficientCutSequence seq = efficient_cut_sequence(g);
        c.expect(seq.origin_cut == oracles::cut_value(g), "chain origin cut off");
        c.expect(2 * static_cast<int>(seq.terminal.size()) > g.n,
                 "terminal piece not above half");
        std::vector<int> current = seq.origin.vertices;
        for (const auto& st : seq.steps) {
            c.expect(Rational(st.size_drop) >
                         seq.efficiency_k * static_cast<long long>(st.removed.size()),
                     "step misses the efficiency threshold");
            c.expect(static_cast<int>(current.size()) - st.successor.size() == st.size_drop,
                     "step drop inconsistent with successor size");
            current = st.successor.vertices;
        }
        c.expect(current == seq.terminal.vertices, "terminal is not the last successor");
        Graph term = induced_graph(seq.terminal);
        c.expect(is_connected(term), "terminal piece not connected");
        if (term.n >= 2)
            c.expect(cheeger_exact(term).value >= Rational(seq.origin_cut, 2LL * g.n),
                     "terminal expansion below cut/2n");
    }
}

void criterion_trees(Check& c) {
    c.expect(cut_exact(make_graph(1, {})).value == 1, "single vertex cut must be 1");
    c.expect(cut_exact(make_graph(2, {{0, 1}})).value == 1, "two vertex tree cut must be 1");
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
        for (;;) {
            Graph t = oracles::prufer_tree(n, seq);
            CutResult r = cut_exact(t);
            c.expect(r.value <= 1, "tree needs more than one vertex removed");
            // Odometer over all n^(n-2) sequences.
            std::size_t i = 0;
            while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
            if (i == seq.size()) break;
        }
    }
    Rng rng(1006);
    for (int n = 9; n <= 12; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> seq(static_cast<std::size_t>(n) - 2);
            for (auto& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            Graph t = oracles::prufer_tree(n, seq);
            c.expect(cut_exact(t).value <= 1, "sampled tree cut above 1");
            CutBoundsResult b = cut_bounds(t);
            c.expect(b.upper == 1 && b.upper_exact, "tree bounds not exact");
            c.expect(oracles::valid_cut(t, b.upper_witness), "tree centroid does not balance");
        }
}

void criterion_cages(Check& c) {
    const auto& cages = builtin_cages();
    c.expect(cages.size() == 8, "cage table size off");
    c.expect(cages[0].size == 4 && cages[0].girth_value == std::optional<int>(3),
             "smallest cage record off");
    c.expect(cages[1].size == 10 && cages[1].girth_value == std::optional<int>(5),
             "10-vertex cage record off");
    c.expect(cages[6].size == 112 && cages[6].girth_value == std::optional<int>(11),
             "112-vertex cage record off");
    for (const auto& rec : cages) {
        c.expect(rec.degree == 3, "cage not cubic");
        c.expect(is_connected(rec.graph), "cage not connected");
        c.expect(girth(rec.graph) == rec.girth_value, "cage girth record off");
    }
    SparsifiedSequence s = sparsify_for_girth(cages);
    c.expect(s.kept.size() == 3, "thinned chain length off");
    if (s.kept.size() == 3) {
        c.expect(s.kept[0].size == 4 && s.kept[1].size == 10 && s.kept[2].size == 112,
                 "thinned chain members off");
        c.expect(*s.kept[1].girth_value > s.kept[0].size &&
                     *s.kept[2].girth_value > s.kept[1].size,
                 "thinned chain violates the girth rule");
    }
}

void criterion_distinguish(Check& c) {
    GraphFamily m = build_family(std::vector<int>{2});
    GraphFamily n_fam = build_family(std::vector<int>{1, 7});
    DistinguishReport rep = distinguish(m, n_fam, 2);
    c.expect(rep.scale == 10, "separating scale off");
    c.expect(rep.lower_at_c >= 3, "lower bound at the scale too weak");
    c.expect(rep.upper_at_c == 2, "upper bound at the scale off");
    c.expect(rep.verdict == "gap", "no gap found");
    ProfilePoint refined = sep_upper_family_refined(member_graphs(n_fam), 10);
    c.expect(refined.kind == "exact" && refined.value == 2, "family bound not exact");
}

void criterion_spectral(Check& c) {
    int regular_seen = 0;
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : corpus()[static_cast<std::size_t>(n)]) {
            if (!is_regular(g)) continue;
            ++regular_seen;
            c.expect(cheeger_spectral_lower(g).value <= cheeger_exact(g).value,
                     "spectral bound above the exact constant on the corpus");
        }
    // 32 connected regular graphs exist on 2..8 vertices.
    c.expect(regular_seen == 32, "regular graph count in the corpus off");
    for (const Graph& g : {complete(4), cycle(6), petersen()})
        c.expect(cheeger_spectral_lower(g).value <= cheeger_exact(g).value,
                 "spectral bound above the exact constant on a named graph");
    Rng rng(1009);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 * rng.range(5, 7);  // 10, 12, 14
        int d = rng.range(3, 4);
        Graph g = random_regular(n, d, rng.next());
        if (!is_connected(g)) continue;
        c.expect(cheeger_spectral_lower(g).value <= cheeger_exact(g).value,
                 "spectral bound above the exact constant on a random regular graph");
    }
}

void criterion_cover_cut(Check& c) {
    for (int s : {12, 16})
        for (int r : {2, 3}) {
            Graph host = make_grid(2, s);
            Cover cover = grid_cover(2, s, r);
            validate_cover(host, cover);
            AsdimCutTrace trace = asdim_cut(host, cover);
            c.expect(oracles::valid_cut(host, trace.total_cut), "cover cut does not balance");
            c.expect(trace.k_of_m == 11, "iteration bound for four classes off");
            c.expect(static_cast<int>(trace.iterations.size()) <= trace.k_of_m,
                     "too many iterations");
            c.expect(static_cast<long long>(trace.total_cut.size()) * r <=
                         static_cast<long long>(trace.k_of_m) * host.n,
                     "total cut above k(m) n / r");
            for (const auto& it : trace.iterations) {
                c.expect(!it.shell.empty(), "empty shell recorded");
                c.expect(static_cast<long long>(it.shell.size()) * r <= it.working_before,
                         "shell above working/r");
                c.expect(16LL * it.working_after <= 15LL * it.working_before,
                         "iteration shrink factor missed");
            }
        }
}

void criterion_grid_slope(Check& c) {
    for (int s = 2; s <= 6; ++s) {
        long long budget = s == 6 ? 10'000'000LL : 1'000'000'000LL;
        CutResult r = cut_exact(make_grid(2, s), budget);
        c.expect(r.value == s, "exact grid cut differs from the side length");
    }
    std::vector<double> xs, ys;
    for (int s : {8, 16, 32, 64}) {
        Graph g = make_grid(2, s);
        CutBoundsResult b = cut_bounds(g);
        c.expect(oracles::valid_cut(g, b.upper_witness), "grid upper witness invalid");
        c.expect(b.upper >= b.lower, "bounds crossed");
        xs.push_back(std::log(static_cast<double>(g.n)));
        ys.push_back(std::log(static_cast<double>(b.upper)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = num / den;
    c.expect(std::abs(slope - 0.5) <= 0.15,
             "log-log slope " + std::to_string(slope) + " outside 0.5 +- 0.15");
}

void criterion_prefix_overlap(Check& c) {
    Rng rng(1012);
    for (int trial = 0; trial < 100; ++trial) {
        int len = rng.range(1, 16);
        std::string x, y;
        for (int i = 0; i < len; ++i) {
            x.push_back(static_cast<char>('0' + rng.below(2)));
            y.push_back(static_cast<char>('0' + rng.below(2)));
        }
        IndexSet sx = continuum_index_set(x), sy = continuum_index_set(y);
        std::size_t common = 0;
        for (long long e : sy.elements)
            if (std::find(sx.elements.begin(), sx.elements.end(), e) != sx.elements.end())
                ++common;
        std::size_t prefix = 0;
        while (prefix < x.size() && x[prefix] == y[prefix]) ++prefix;
        c.expect(common == prefix, "overlap differs from the common prefix length");
    }
}

void criterion_cli_determinism(Check& c) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sepgraph_acceptance";
    fs::create_directories(dir);
    auto spit = [](const fs::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        out << text;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    spit(dir / "pet.txt", serialize_graph(petersen()));
    spit(dir / "grid5.txt", serialize_graph(make_grid(2, 5)));
    auto run_once = [&](const std::string& args, int& code) {
        fs::path out_file = dir / "out.txt";
        std::string cmd = std::string("\"") + SEPGRAPH_BIN_PATH + "\" " + args + " > " +
                          out_file.string() + " 2> " + (dir / "err.txt").string();
        int raw = std::system(cmd.c_str());
        code = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
        return slurp(out_file);
    };
    std::string pet = (dir / "pet.txt").string();
    std::string grid5 = (dir / "grid5.txt").string();
    const std::vector<std::string> commands = {
        "cut --in " + pet,
        "cheeger --in " + pet,
        "sep --n-list 4,10 --in " + pet,
        "sep --n-list 4,9 --samples 8 --seed 3 --in " + grid5,
        "family distinguish --m-list 2 --n-list 1,7 --c 2",
        "asdim-cut --grid 2,12 --r 3",
        "sep-upper --model grid --d 2 --m 4 --n 4096",
    };
    for (const std::string& cmd : commands) {
        int code_a = -1, code_b = -1;
        std::string a = run_once(cmd, code_a);
        std::string b = run_once(cmd, code_b);
        c.expect(code_a == 0 && code_b == 0, "command failed: " + cmd);
        c.expect(!a.empty() && a == b, "output not byte identical: " + cmd);
        if (!a.empty()) {
            auto parsed = nlohmann::json::parse(a, nullptr, false);
            c.expect(!parsed.is_discarded(), "output not valid JSON: " + cmd);
        }
    }
}

struct Criterion {
    const char* name;
    void (*run)(Check&);
    double cap_seconds;  // 0 = no cap
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"exhaustive cut oracle agreement", criterion_cut_oracle, 300.0},
        {"exhaustive expansion oracle agreement", criterion_cheeger_oracle, 300.0},
        {"cut dominates a quarter of expansion times size", criterion_quarter_bound, 0.0},
        {"subgraph expansion bounded by separation", criterion_subgraph_expansion, 0.0},
        {"efficient cut chains certify their terminals", criterion_cut_chains, 0.0},
        {"trees split at one vertex", criterion_trees, 0.0},
        {"cage table integrity and girth thinning", criterion_cages, 0.0},
        {"family separation gap at the ten vertex scale", criterion_distinguish, 60.0},
        {"spectral bound never exceeds the exact constant", criterion_spectral, 0.0},
        {"cover driven cuts balance square grids", criterion_cover_cut, 60.0},
        {"grid separation scales like the square root", criterion_grid_slope, 600.0},
        {"index sets overlap in their common prefix", criterion_prefix_overlap, 0.0},
        {"command line output is byte deterministic", criterion_cli_determinism, 0.0},
    };
    int failures = 0;
    int idx = 0;
    for (const Criterion& cr : criteria) {
        ++idx;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (check.ok && cr.cap_seconds > 0 && secs > cr.cap_seconds) {
            check.ok = false;
            check.why = "over the " + std::to_string(cr.cap_seconds) + "s cap";
        }
        if (check.ok) {
            std::printf("[PASS] criterion-%02d %s (%lld checks, %.1fs)\n", idx, cr.name,
                        check.count, secs);
        } else {
            ++failures;
            std::printf("[FAIL] criterion-%02d %s: %s (%.1fs)\n", idx, cr.name,
                        check.why.c_str(), secs);
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of 13 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
