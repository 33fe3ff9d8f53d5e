// Command-line front door: enumerate triangulations, inspect the two
// Stasheff-Tamari orders, enumerate maximal green sequences, run the
// verification suites, and export JSON/DOT dumps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// guard exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hst/hst.hpp"

namespace {

struct Options {
    int m = 0, delta = 0;
    int d = 0, n = 0;
    bool green = false;
    std::string format = "json";
    std::string output;
    std::size_t max_states = hst::default_state_guard;
    std::size_t max_chains = hst::default_chain_guard;
};

void add_polytope_params(CLI::App* cmd, Options& opt, bool required) {
    auto* m = cmd->add_option("--m", opt.m, "vertex count of the cyclic polytope");
    auto* delta = cmd->add_option("--delta", opt.delta, "dimension of the cyclic polytope");
    if (required) {
        m->required();
        delta->required();
    }
    m->needs(delta);
    delta->needs(m);
}

void add_algebra_params(CLI::App* cmd, Options& opt, bool required) {
    auto* d = cmd->add_option("--d", opt.d, "cluster-tilting degree of the algebra");
    auto* n = cmd->add_option("--n", opt.n, "type-A rank of the algebra");
    if (required) {
        d->required();
        n->required();
    }
    d->needs(n);
    n->needs(d);
}

void add_guards(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-states", opt.max_states, "triangulation-count guard");
    cmd->add_option("--max-chains", opt.max_chains, "maximal-chain-count guard");
}

void require_one_family(const CLI::App* cmd, const Options& opt) {
    const bool polytope_given = cmd->count("--m") > 0;
    const bool algebra_given = cmd->count("--d") > 0;
    if (opt.green ? !algebra_given : !polytope_given)
        throw hst::contract_error(opt.green ? "--green needs --d and --n"
                                            : "need --m and --delta (or --green with --d/--n)");
    if (polytope_given && algebra_given)
        throw hst::contract_error("give either --m/--delta or --green --d/--n, not both");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Dotted label rendering once any vertex needs two digits, for the whole
// listing, so columns stay uniform.
std::string show(const hst::VertexTuple& t, bool wide) {
    if (!wide) return t.str();
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(t[i]);
    }
    return out;
}

void write_output(const Options& opt, const std::string& content) {
    if (opt.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    file << content;
    if (!file.good())
        throw hst::contract_error("cannot write to " + opt.output);
}

int run_enumerate(const Options& opt) {
    const hst::TriangulationPoset poset =
        hst::TriangulationPoset::enumerate(hst::PolytopeSpec(opt.m, opt.delta), opt.max_states);
    const bool wide = opt.m > 9;
    std::cout << poset.size() << " triangulations\n";
    for (int i = 0; i < poset.size(); ++i) {
        std::cout << "T" << i << ":";
        for (const hst::VertexTuple& cell : poset.element(i).simplices())
            std::cout << " " << show(cell, wide);
        std::cout << "\n";
    }
    return 0;
}

int run_orders(const Options& opt) {
    const hst::TriangulationPoset poset =
        hst::TriangulationPoset::enumerate(hst::PolytopeSpec(opt.m, opt.delta), opt.max_states);
    const hst::CoincidenceResult co = hst::orders_coincide(poset);
    std::cout << "C(" << opt.m << "," << opt.delta << "): " << poset.size()
              << " triangulations, " << poset.covers().size() << " covers\n";
    std::cout << "bottom T" << poset.bottom() << ", top T" << poset.top() << "\n";
    std::cout << "orders coincide: " << yesno(co.coincide) << "\n";
    std::cout << "hst1 lattice: " << yesno(hst::is_lattice(poset.leq1_matrix()).is_lattice)
              << "\n";
    std::cout << "hst2 lattice: " << yesno(hst::is_lattice(poset.leq2_matrix()).is_lattice)
              << "\n";
    return 0;
}

int run_green(const Options& opt) {
    std::vector<hst::GreenSequence> sequences =
        hst::enumerate_green_sequences(opt.d, opt.n, opt.max_states, opt.max_chains);
    const std::size_t sequence_count = sequences.size();
    const bool wide = opt.n + 2 * opt.d + 1 > 9;
    std::ostringstream lines;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        lines << "G" << i << ": length " << sequences[i].length() << ", flips";
        for (const hst::VertexTuple& f : sequences[i].flips) lines << " " << show(f, wide);
        lines << "\n";
    }
    const hst::GreenClassOrders orders(opt.d, opt.n, std::move(sequences));
    std::cout << "d=" << opt.d << " n=" << opt.n << ": " << sequence_count
              << " green sequences, " << orders.size() << " classes\n"
              << lines.str();
    for (int i = 0; i < orders.size(); ++i) {
        const hst::GreenClass& c = orders.classes()[static_cast<std::size_t>(i)];
        std::cout << "C" << i << ": size " << c.representatives.size() << ", sigma {";
        for (std::size_t k = 0; k < c.sigma.size(); ++k)
            std::cout << (k ? " " : "") << show(c.sigma[k], wide);
        std::cout << "}, triangulation {";
        const auto& cells = orders.class_triangulations()[static_cast<std::size_t>(i)].simplices();
        for (std::size_t k = 0; k < cells.size(); ++k)
            std::cout << (k ? " " : "") << show(cells[k], wide);
        std::cout << "}\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    const std::vector<hst::CheckResult> results =
        opt.green ? hst::verify_green_suite(opt.d, opt.n, opt.max_states, opt.max_chains)
                  : hst::verify_polytope_suite(opt.m, opt.delta, opt.max_states, opt.max_chains);
    bool all = true;
    for (const hst::CheckResult& r : results) {
        std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        all = all && r.pass;
    }
    for (const hst::CheckResult& r : results)
        if (!r.pass)
            std::cout << hst::Json{{"check", r.name}, {"counterexample", r.detail}}.dump()
                      << "\n";
    return all ? 0 : 1;
}

int run_export(const Options& opt) {
    std::string content;
    if (opt.green) {
        if (opt.format == "json") {
            content = hst::render(
                hst::green_export_json(opt.d, opt.n, opt.max_states, opt.max_chains));
        } else {
            const hst::GreenClassOrders orders(opt.d, opt.n, opt.max_states, opt.max_chains);
            content = hst::green_to_dot(orders);
        }
    } else {
        const hst::TriangulationPoset poset = hst::TriangulationPoset::enumerate(
            hst::PolytopeSpec(opt.m, opt.delta), opt.max_states);
        content = opt.format == "json" ? hst::render(hst::to_json(poset))
                                       : hst::poset_to_dot(poset);
    }
    write_output(opt, content);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangulations of cyclic polytopes, higher Stasheff-Tamari orders, "
                 "and d-maximal green sequences"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate all triangulations");
    add_polytope_params(enumerate, opt, true);
    add_guards(enumerate, opt);

    CLI::App* orders = app.add_subcommand("orders", "summarize the two orders");
    add_polytope_params(orders, opt, true);
    add_guards(orders, opt);

    CLI::App* green = app.add_subcommand("green", "enumerate d-maximal green sequences");
    add_algebra_params(green, opt, true);
    add_guards(green, opt);

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    verify->add_flag("--green", opt.green, "verify green sequences for --d/--n");
    add_polytope_params(verify, opt, false);
    add_algebra_params(verify, opt, false);
    add_guards(verify, opt);

    CLI::App* exporter = app.add_subcommand("export", "write JSON or DOT dumps");
    exporter->add_flag("--green", opt.green, "export green sequences for --d/--n");
    add_polytope_params(exporter, opt, false);
    add_algebra_params(exporter, opt, false);
    exporter->add_option("--format", opt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    exporter->add_option("--output", opt.output, "output path (stdout when omitted)");
    add_guards(exporter, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(opt);
        if (orders->parsed()) return run_orders(opt);
        if (green->parsed()) return run_green(opt);
        if (verify->parsed()) {
            require_one_family(verify, opt);
            return run_verify(opt);
        }
        require_one_family(exporter, opt);
        return run_export(opt);
    } catch (const hst::resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const hst::contract_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
