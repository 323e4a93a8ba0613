#include <ctc/constructions.hpp>
#include <ctc/error.hpp>
#include <ctc/generators.hpp>
#include <ctc/repro.hpp>
#include <ctc/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace ctc;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct UsageError : Error {
    using Error::Error;
};

int require(const std::optional<int> & v, const char * flag, const std::string & context)
{
    if (!v)
        throw UsageError(context + " needs " + flag);
    return *v;
}

std::string decimal(Fraction f)
{
    std::ostringstream os;
    os << "~" << std::fixed << std::setprecision(6) << f.approx();
    return os.str();
}

struct GenArgs {
    std::string family, out;
    std::optional<int> k, n, m, a, b;
};

int cmd_gen(const GenArgs & g)
{
    const std::string ctx = "gen --family " + g.family;
    HalfEdgeGraph graph;
    if (g.family == "hk")
        graph = gen_Hk(require(g.k, "-k", ctx));
    else if (g.family == "hprime")
        graph = gen_Hprime(require(g.k, "-k", ctx));
    else if (g.family == "gkn")
        graph = gen_Gkn(require(g.k, "-k", ctx), require(g.n, "-n", ctx));
    else if (g.family == "cycle")
        graph = gen_cycle(require(g.m ? g.m : g.n, "-m", ctx));
    else if (g.family == "moebius")
        graph = gen_moebius(require(g.n, "-n", ctx));
    else if (g.family == "prism")
        graph = gen_prism(require(g.m ? g.m : g.n, "-m", ctx));
    else
        graph = gen_complete_bipartite(require(g.a, "-a", ctx), require(g.b, "-b", ctx));
    write_heg_file(g.out, graph);
    std::cout << "wrote " << g.out << ": " << graph.vertices().size() << " vertices, " << graph.edges().size()
              << " edges, " << graph.half_edges().size() << " half-edges\n";
    return exit_ok;
}

struct ConstructArgs {
    std::string method, out, graph;
    std::optional<int> k, n;
};

int cmd_construct(const ConstructArgs & a)
{
    const std::string ctx = "construct --method " + a.method;
    std::optional<CircularColouring> c;
    std::vector<std::string> comments{"method " + a.method};
    if (a.method == "all0") {
        const int k = require(a.k, "-k", ctx);
        c = colour_all0(k, back_circulant(k));
    }
    else if (a.method == "tweak") {
        const int k = require(a.k, "-k", ctx);
        c = colour_tweak(k, require(a.n, "-n", ctx));
    }
    else if (a.method == "refine") {
        const int k = require(a.k, "-k", ctx);
        c = colour_refine(k, require(a.n, "-n", ctx));
    }
    else {
        const int n = require(a.n, "-n", ctx);
        if (a.method == "thm-k3" && a.k && *a.k != 3)
            throw UsageError("construct --method thm-k3 is defined for k = 3 only");
        const auto asm_ = a.method == "thm-lim"       ? assemble_thm_lim(require(a.k, "-k", ctx), n)
                          : a.method == "thm-improve" ? assemble_thm_improve(require(a.k, "-k", ctx), n)
                                                      : assemble_k3(n);
        c = asm_.colouring;
        for (const auto & note : asm_.notes)
            comments.push_back(note);
    }

    if (!a.graph.empty()) {
        const auto t = total_conflict_graph(read_heg_file(a.graph));
        bool fits = t.size() == c->size();
        for (const auto & e : t.elements())
            fits = fits && c->contains(e.label);
        if (!fits || !is_valid(t, *c)) {
            std::cerr << "ctc: the " << a.method << " colouring does not fit " << a.graph << '\n';
            return exit_negative;
        }
    }
    write_pqc_file(a.out, *c, comments);
    std::cout << "wrote " << a.out << ": (" << c->p() << "," << c->q() << ") = " << c->ratio().str() << '\n';
    return exit_ok;
}

int cmd_check(const std::string & graph_path, const std::string & cert_path)
{
    const auto g = read_heg_file(graph_path);
    const auto c = read_pqc_file(cert_path);
    const auto t = total_conflict_graph(g);

    std::vector<std::string> missing, unknown;
    for (const auto & e : t.elements())
        if (!c.contains(e.label))
            missing.push_back(e.label);
    for (const auto & [label, colour] : c.assignment())
        if (!t.index_of(label))
            unknown.push_back(label);
    if (!missing.empty() || !unknown.empty()) {
        std::cout << "invalid (" << c.p() << "," << c.q() << "): label sets differ\n";
        for (const auto & l : missing)
            std::cout << "  missing " << l << '\n';
        for (const auto & l : unknown)
            std::cout << "  unknown " << l << '\n';
        return exit_negative;
    }

    const auto violations = check(t, c);
    if (violations.empty()) {
        std::cout << "valid (" << c.p() << "," << c.q() << ")\n";
        return exit_ok;
    }
    std::cout << "invalid (" << c.p() << "," << c.q() << "): " << violations.size() << " violations\n";
    for (const auto & v : violations)
        std::cout << "  " << v.describe(c.p(), c.q()) << '\n';
    return exit_negative;
}

struct FeasibleArgs {
    std::string graph, out;
    int p = 0, q = 0;
    double timeout = 60;
    bool no_symmetry = false;
};

int cmd_feasible(const FeasibleArgs & a)
{
    const auto g = read_heg_file(a.graph);
    SearchConfig cfg;
    cfg.time_budget = a.timeout;
    cfg.symmetry_breaking = !a.no_symmetry;
    const auto o = feasible(total_conflict_graph(g), a.p, a.q, cfg);
    std::cout << to_string(o.status) << " (" << a.p << "," << a.q << ")";
    std::cout << " nodes " << o.nodes << " seconds " << std::fixed << std::setprecision(3) << o.seconds;
    if (!o.reason.empty())
        std::cout << " [" << o.reason << "]";
    std::cout << '\n';
    if (o.certificate && !a.out.empty())
        write_pqc_file(a.out, *o.certificate);
    return o.status == SearchStatus::feasible ? exit_ok : exit_negative;
}

struct ChiArgs {
    std::string graph, out;
    std::optional<int> qmax;
    double timeout = 60;
    bool decimal = false, record = false, trace = false;
};

int cmd_chi(const ChiArgs & a)
{
    const auto g = read_heg_file(a.graph);
    SearchConfig cfg;
    cfg.time_budget = a.timeout;
    cfg.qmax = a.qmax;
    const auto r = chi_total(g, cfg);
    if (a.trace)
        for (const auto & line : r.trace)
            std::cerr << "  " << line << '\n';
    if (a.record)
        std::cout << r.record();
    else {
        std::cout << r.summary();
        if (a.decimal)
            std::cout << "  (decimal, approximate: "
                      << (r.status == ChiResult::Status::exact ? decimal(r.upper)
                                                               : decimal(r.lower) + " .. " + decimal(r.upper))
                      << ")";
        std::cout << '\n';
    }
    if (!a.out.empty())
        write_pqc_file(a.out, r.witness, {"witness for upper bound " + r.upper.str()});
    return r.status == ChiResult::Status::exact ? exit_ok : exit_negative;
}

int cmd_verify_lemma(const std::string & lemma, int k, bool allow_large)
{
    if (lemma != "all0")
        throw UsageError("verify-lemma: unknown lemma '" + lemma + "'");
    const auto r = verify_half_edge_uniform(k, allow_large);
    if (r.holds) {
        std::cout << "holds for H_" << k << " with " << k + 1 << " colours: all half-edges share one colour in "
                  << r.colourings << " colourings\n";
        return exit_ok;
    }
    std::cout << "fails for H_" << k << ": counterexample\n" << serialize_pqc(*r.counterexample);
    return exit_negative;
}

int cmd_repro(const std::string & suite, double timeout, const std::string & out, bool quiet)
{
    repro::Options o;
    o.suite = suite == "full" ? repro::Suite::full : repro::Suite::fast;
    o.full_timeout = timeout;
    if (!quiet)
        o.progress = &std::cerr;
    const auto results = repro::run(o);
    const auto text = repro::table(results);
    std::cout << text;
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f)
            throw Error("cannot write " + out);
        f << text;
    }
    bool all = true;
    for (const auto & r : results)
        all = all && r.pass;
    return all ? exit_ok : exit_negative;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Circular total colourings of graphs with half-edges"};
    app.require_subcommand(1, 1);

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "write a generated graph as heg 1");
    gen_cmd->add_option("--family", gen.family, "graph family")
        ->required()
        ->check(CLI::IsMember({"hk", "hprime", "gkn", "cycle", "moebius", "prism", "kab"}));
    gen_cmd->add_option("-k", gen.k);
    gen_cmd->add_option("-n", gen.n);
    gen_cmd->add_option("-m", gen.m);
    gen_cmd->add_option("-a", gen.a);
    gen_cmd->add_option("-b", gen.b);
    gen_cmd->add_option("-o", gen.out, "output file")->required();

    ConstructArgs con;
    auto * con_cmd = app.add_subcommand("construct", "write a constructive colouring as pqc 1");
    con_cmd->add_option("--method", con.method)
        ->required()
        ->check(CLI::IsMember({"all0", "tweak", "refine", "thm-lim", "thm-improve", "thm-k3"}));
    con_cmd->add_option("-k", con.k);
    con_cmd->add_option("-n", con.n, "n (q for refine)");
    con_cmd->add_option("--graph", con.graph, "verify against this graph before writing")->check(CLI::ExistingFile);
    con_cmd->add_option("-o", con.out, "output file")->required();

    std::string check_graph, check_cert;
    auto * check_cmd = app.add_subcommand("check", "verify a certificate against a graph");
    check_cmd->add_option("GRAPH", check_graph)->required()->check(CLI::ExistingFile);
    check_cmd->add_option("CERT", check_cert)->required()->check(CLI::ExistingFile);

    FeasibleArgs fea;
    auto * fea_cmd = app.add_subcommand("feasible", "decide whether a (p,q)-total colouring exists");
    fea_cmd->add_option("GRAPH", fea.graph)->required()->check(CLI::ExistingFile);
    fea_cmd->add_option("-p", fea.p)->required()->check(CLI::PositiveNumber);
    fea_cmd->add_option("-q", fea.q)->required()->check(CLI::PositiveNumber);
    fea_cmd->add_option("--timeout", fea.timeout, "seconds")->check(CLI::PositiveNumber);
    fea_cmd->add_flag("--no-symmetry", fea.no_symmetry);
    fea_cmd->add_option("-o", fea.out, "write the certificate here");

    ChiArgs chi;
    auto * chi_cmd = app.add_subcommand("chi", "circular total chromatic number");
    chi_cmd->add_option("GRAPH", chi.graph)->required()->check(CLI::ExistingFile);
    chi_cmd->add_option("--qmax", chi.qmax, "denominator bound")->check(CLI::PositiveNumber);
    chi_cmd->add_option("--timeout", chi.timeout, "seconds per feasibility call")->check(CLI::PositiveNumber);
    chi_cmd->add_flag("--decimal", chi.decimal, "add an approximate decimal value");
    chi_cmd->add_flag("--record", chi.record, "key-value result record");
    chi_cmd->add_flag("--trace", chi.trace, "feasibility calls on stderr");
    chi_cmd->add_option("-o", chi.out, "write the witness colouring here");

    std::string lemma;
    int lemma_k = 0;
    bool allow_large = false;
    auto * lem_cmd = app.add_subcommand("verify-lemma", "enumerate colourings to check a lemma");
    lem_cmd->add_option("LEMMA", lemma)->required()->check(CLI::IsMember({"all0"}));
    lem_cmd->add_option("-k", lemma_k)->required()->check(CLI::Range(2, 64));
    lem_cmd->add_flag("--allow-large", allow_large, "permit k > 4");

    std::string suite = "fast", repro_out;
    double repro_timeout = 600;
    bool quiet = false;
    auto * rep_cmd = app.add_subcommand("repro", "run the acceptance suite");
    rep_cmd->add_option("--suite", suite)->check(CLI::IsMember({"fast", "full"}));
    rep_cmd->add_option("--timeout", repro_timeout, "seconds per call in the full extras")
        ->check(CLI::PositiveNumber);
    rep_cmd->add_option("-o", repro_out, "also write the table here");
    rep_cmd->add_flag("--quiet", quiet);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen);
        if (*con_cmd)
            return cmd_construct(con);
        if (*check_cmd)
            return cmd_check(check_graph, check_cert);
        if (*fea_cmd)
            return cmd_feasible(fea);
        if (*chi_cmd)
            return cmd_chi(chi);
        if (*lem_cmd)
            return cmd_verify_lemma(lemma, lemma_k, allow_large);
        return cmd_repro(suite, repro_timeout, repro_out, quiet);
    }
    catch (const ConstructionIncomplete & e) {
        std::cerr << "ctc: " << e.what() << '\n';
        return exit_negative;
    }
    catch (const ParseError & e) {
        std::cerr << "ctc: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        std::cerr << "ctc: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "ctc: " << e.what() << '\n';
        return exit_usage;
    }
}
