#include "berge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "berge/berge_search.hpp"
#include "berge/canonical.hpp"
#include "berge/clusters.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/reduction.hpp"
#include "berge/tree_enum.hpp"
#include "berge/turan.hpp"

namespace berge::cli {

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAlarm = 3;

MultiHypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open hypergraph file: " + path);
    return MultiHypergraph::parse(in);
}

Tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tree file: " + path);
    return Tree::parse(in);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    f << text;
}

std::string edge_list_text(const std::vector<int>& ids) {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s << ' ';
        s << ids[i];
    }
    s << ']';
    return s.str();
}

void print_component(const CertComponent& c, std::ostream& out) {
    switch (c.kind) {
        case CertComponent::Kind::CliqueBlock:
            out << "  clique-block vertices=" << edge_list_text(c.vertices)
                << " edges=" << edge_list_text(c.edge_indices) << '\n';
            break;
        case CertComponent::Kind::MultiBlock:
            out << "  multiplicity-block vertices=" << edge_list_text(c.vertices)
                << " edges=" << edge_list_text(c.edge_indices) << '\n';
            break;
        case CertComponent::Kind::TwoSided:
            out << "  two-sided vertices=" << edge_list_text(c.vertices)
                << " blocks=" << c.blocks.size() << " singles=" << edge_list_text(c.singles)
                << " edges=" << edge_list_text(c.edge_indices) << '\n';
            break;
    }
}

Tree named_tree(const std::string& name, int k) {
    if (name == "path") return make_tree(TreeKind::Path, k);
    if (name == "star") return make_tree(TreeKind::Star, k);
    if (name == "dstar") return make_tree(TreeKind::BalancedDoubleStar, k);
    throw PreconditionError("unknown tree name: " + name);
}

TuranOptions options_with_budget(int jobs, double budget_secs) {
    TuranOptions opt;
    opt.jobs = jobs;
    if (const char* env = std::getenv("BERGE_BUDGET_SECS")) {
        double v = std::atof(env);
        if (v > 0) budget_secs = v;
    }
    if (budget_secs > 0)
        opt.deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(static_cast<long long>(budget_secs * 1000));
    return opt;
}

int cmd_gen(const std::string& family, int n, int t, int r, int k, const std::string& out_path,
            std::ostream& out) {
    MultiHypergraph h = [&]() {
        if (family == "cliques") return disjoint_cliques(n, r, k);
        if (family == "multiblocks") return multi_blocks(n, r, k);
        if (family == "twosided") return two_sided(t, r, k);
        throw PreconditionError("unknown family: " + family);
    }();
    write_text(out_path, h.serialize(), out);
    return kExitFound;
}

int cmd_trees(int k, bool non_star_only, const std::string& dir, std::ostream& out) {
    auto catalog = enumerate_trees(k);
    int id = 0;
    for (const auto& t : catalog) {
        auto cls = classify_tree(t);
        if (non_star_only && cls.kind == TreeKind::Star) continue;
        out << "tree k=" << k << " id=" << id << " kind=" << tree_kind_name(cls.kind) << " edges=";
        for (std::size_t i = 0; i < t.edges().size(); ++i) {
            auto [u, v] = t.edges()[i];
            out << (i ? " " : "") << u << '-' << v;
        }
        out << '\n';
        if (!dir.empty()) {
            std::ostringstream name;
            name << dir << "/tree_k" << k << "_" << id << ".tree";
            std::ofstream f(name.str());
            if (!f) throw ParseError("cannot write " + name.str());
            f << t.serialize();
        }
        ++id;
    }
    return kExitFound;
}

int cmd_search(const std::string& hg_path, const std::string& tree_path,
               const std::string& witness_path, std::ostream& out) {
    MultiHypergraph h = load_hypergraph(hg_path);
    Tree t = load_tree(tree_path);
    auto emb = find_berge_copy(h, t);
    if (!emb) {
        out << "berge-free\n";
        return kExitNegative;
    }
    out << "berge-copy: found\n";
    if (!witness_path.empty()) write_text(witness_path, serialize_embedding(*emb), out);
    else out << serialize_embedding(*emb);
    return kExitFound;
}

int cmd_audit(const std::string& hg_path, const std::string& tree_path, int k_flag,
              const std::string& mode_name, std::ostream& out) {
    MultiHypergraph h = load_hypergraph(hg_path);
    Tree t = load_tree(tree_path);
    const int k = t.edge_count();
    if (k_flag > 0 && k_flag != k)
        throw PreconditionError("--k disagrees with the tree's edge count");

    auto clusters = find_clusters(h, k);
    out << "clusters: " << clusters.size() << '\n';
    for (std::size_t i = 0; i < clusters.size(); ++i)
        out << "  cluster " << i << ": edges=" << edge_list_text(clusters[i].edge_indices)
            << " core=" << edge_list_text(clusters[i].core)
            << " span=" << edge_list_text(clusters[i].span) << '\n';

    auto outcome = strip_clusters(h, t);
    if (std::holds_alternative<BergeEmbedding>(outcome)) {
        out << "audit: violation, embedding follows\n";
        out << serialize_embedding(std::get<BergeEmbedding>(outcome));
        return kExitFound;
    }
    const auto& strip = std::get<StripResult>(outcome);
    const auto& rep = strip.report;
    out << "audit: clean\n";
    out << "strip: t=" << rep.t() << " |X|=" << rep.x_all.size() << " |Y|=" << rep.y_all.size()
        << " a=" << rep.full_block_count << " degree-sum-x=" << rep.degree_sum_x
        << " degree-sum-y=" << rep.degree_sum_y << '\n';
    out << "remainder: n=" << strip.remainder.vertex_count()
        << " e=" << strip.remainder.edge_count() << '\n';

    Mode mode = mode_name == "multi" ? Mode::Multi
                                     : (mode_name == "simple" ? Mode::Simple
                                                              : (h.is_simple() ? Mode::Simple
                                                                               : Mode::Multi));
    auto audit = audit_strip_inequalities(rep, h.vertex_count(), h.uniformity(), k, mode);
    out << "inequalities (" << (mode == Mode::Simple ? "simple" : "multi") << "): "
        << (audit.ok ? "all hold" : "VIOLATED") << '\n';
    for (const auto& line : audit.lines)
        out << "  " << (line.holds ? (line.tight ? "=" : "<") : "!") << ' ' << line.name
            << "  lhs=" << line.lhs.str() << " rhs=" << line.rhs.str() << '\n';
    return audit.ok ? kExitNegative : kExitAlarm;
}

int cmd_prove(const std::string& hg_path, const std::string& tree_path,
              const std::string& mode_name, bool trace, std::ostream& out) {
    MultiHypergraph h = load_hypergraph(hg_path);
    Tree t = load_tree(tree_path);
    Mode mode = mode_name == "multi" ? Mode::Multi : Mode::Simple;
    auto outcome = prove_or_embed(h, t, mode);
    if (trace)
        for (const auto& line : outcome.trace) out << "# " << line << '\n';
    if (outcome.embedded()) {
        out << "embedding:\n" << serialize_embedding(outcome.embedding());
        return kExitFound;
    }
    out << "certificate: " << outcome.certificate().components.size() << " component(s)\n";
    for (const auto& c : outcome.certificate().components) print_component(c, out);
    return kExitNegative;
}

int cmd_turan(long long n, int r, int k, const std::string& tree_name,
              const std::string& mode_name, bool extremal, bool verify, bool probe, int jobs,
              double budget, std::ostream& out) {
    TuranOptions opt = options_with_budget(jobs, budget);
    Mode mode = mode_name == "multi" ? Mode::Multi : Mode::Simple;

    if (probe) {
        auto rep = probe_conjecture(n, r, k, opt);
        out << "probe n=" << n << " r=" << r << " k=" << k << " regime=" << rep.regime
            << " formula=" << Rational(n * (k - 1), r).str() << '\n';
        for (const auto& line : rep.trees) {
            out << "tree kind=" << line.kind << " value=";
            if (line.result.infinite) out << "infinite";
            else out << line.result.value;
            out << " within-formula=" << (line.within_formula ? "yes" : "no");
            if (line.equality) out << " equality extremal-blocks=" << (line.extremal_blocks ? "yes" : "no");
            if (line.blocks_family_free)
                out << " blocks-free=" << (*line.blocks_family_free ? "yes" : "no")
                    << " extensions-force=" << (*line.blocks_extension_forces ? "yes" : "no");
            out << '\n';
        }
        out << (rep.confirmed ? "confirmed\n" : "not-confirmed\n");
        if (rep.counterexample) out << "counterexample:\n" << *rep.counterexample;
        return rep.confirmed ? kExitFound : kExitNegative;
    }

    std::vector<std::pair<std::string, Tree>> trees;
    if (tree_name == "all") {
        int id = 0;
        for (const auto& t : enumerate_trees(k)) {
            std::ostringstream label;
            label << tree_kind_name(classify_tree(t).kind) << '#' << id++;
            trees.emplace_back(label.str(), t);
        }
    } else {
        trees.emplace_back(tree_name, named_tree(tree_name, k));
    }

    int exit_code = kExitFound;
    for (const auto& [name, t] : trees) {
        if (verify) {
            auto rep = verify_extremal(n, r, k, t, mode, opt);
            out << "turan n=" << n << " r=" << r << " k=" << k << " tree=" << name
                << " mode=" << mode_name << " value=";
            if (rep.result.infinite) out << "infinite";
            else out << rep.result.value;
            out << " extremal_classes=" << rep.result.extremal_class_count;
            if (!rep.characterization_supported) out << " characterization=unsupported";
            else out << " matched=" << rep.matched << " outliers=" << rep.outliers.size();
            out << '\n';
            if (rep.characterization_supported && !rep.outliers.empty()) {
                out << "FALSIFICATION: extremal host outside the published shape\n";
                for (const auto& h : rep.outliers) out << h.serialize();
                exit_code = kExitAlarm;
            }
            continue;
        }
        TuranOptions o = opt;
        o.collect_extremal = extremal;
        auto res = brute_force_turan(n, r, k, t, mode, o);
        out << "turan n=" << n << " r=" << r << " k=" << k << " tree=" << name
            << " mode=" << mode_name << " value=";
        if (res.infinite) out << "infinite";
        else out << res.value;
        if (extremal) out << " extremal_classes=" << res.extremal_class_count;
        out << '\n';
        if (extremal)
            for (const auto& h : res.extremal) out << h.serialize();
    }
    return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Berge-tree search, audits and desk-scale extremal verification"};
    app.require_subcommand(1);
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--jobs", jobs, "worker parallelism for the exhaustive search");

    auto* gen = app.add_subcommand("gen", "write an extremal-family hypergraph");
    std::string family, gen_out;
    int gen_n = 0, gen_t = 0, gen_r = 0, gen_k = 0;
    gen->add_option("--family", family)->required();
    gen->add_option("--n", gen_n);
    gen->add_option("--t", gen_t);
    gen->add_option("--r", gen_r)->required();
    gen->add_option("--k", gen_k)->required();
    gen->add_option("--out", gen_out);

    auto* trees = app.add_subcommand("trees", "list the k-edge tree catalog");
    int trees_k = 0;
    bool non_star = false;
    std::string trees_dir;
    trees->add_option("--k", trees_k)->required();
    trees->add_flag("--non-star", non_star);
    trees->add_option("--write-dir", trees_dir, "also write one tree file per class");

    auto* search = app.add_subcommand("search", "decide Berge containment");
    std::string s_hg, s_tree, s_witness;
    search->add_option("--hypergraph", s_hg)->required();
    search->add_option("--tree", s_tree)->required();
    search->add_option("--witness", s_witness);

    auto* audit = app.add_subcommand("audit", "cluster audits, strip report, inequality ledger");
    std::string a_hg, a_tree, a_mode;
    int a_k = 0;
    audit->add_option("--hypergraph", a_hg)->required();
    audit->add_option("--tree", a_tree)->required();
    audit->add_option("--k", a_k);
    audit->add_option("--mode", a_mode)->check(CLI::IsMember({"simple", "multi"}));

    auto* prove = app.add_subcommand("prove-or-embed", "run the constructive pipeline");
    std::string p_hg, p_tree, p_mode = "simple";
    bool p_trace = false;
    prove->add_option("--hypergraph", p_hg)->required();
    prove->add_option("--tree", p_tree)->required();
    prove->add_option("--mode", p_mode)->check(CLI::IsMember({"simple", "multi"}))->required();
    prove->add_flag("--trace", p_trace);

    auto* turan = app.add_subcommand("turan", "exact desk-scale extremal numbers");
    long long t_n = 0;
    int t_r = 0, t_k = 0;
    std::string t_tree = "path", t_mode = "simple";
    bool t_extremal = false, t_verify = false, t_probe = false;
    double t_budget = 0;
    turan->add_option("--n", t_n)->required();
    turan->add_option("--r", t_r)->required();
    turan->add_option("--k", t_k)->required();
    turan->add_option("--tree", t_tree)->check(CLI::IsMember({"path", "star", "dstar", "all"}));
    turan->add_option("--mode", t_mode)->check(CLI::IsMember({"simple", "multi"}));
    turan->add_flag("--extremal", t_extremal, "print extremal classes");
    turan->add_flag("--verify-extremal", t_verify, "check extremal hosts against the published shape");
    turan->add_flag("--probe", t_probe, "probe the density formula over every k-edge tree");
    turan->add_option("--budget", t_budget, "seconds before the search aborts");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitFound;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, gen_n, gen_t, gen_r, gen_k, gen_out, out);
        if (trees->parsed()) return cmd_trees(trees_k, non_star, trees_dir, out);
        if (search->parsed()) return cmd_search(s_hg, s_tree, s_witness, out);
        if (audit->parsed()) return cmd_audit(a_hg, a_tree, a_k, a_mode, out);
        if (prove->parsed()) return cmd_prove(p_hg, p_tree, p_mode, p_trace, out);
        if (turan->parsed())
            return cmd_turan(t_n, t_r, t_k, t_tree, t_mode, t_extremal, t_verify, t_probe, jobs,
                             t_budget, out);
    } catch (const TheoremViolation& e) {
        err << "FALSIFICATION ALARM: " << e.what() << '\n';
        return kExitAlarm;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

} // namespace berge::cli
