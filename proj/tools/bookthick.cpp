// bookthick: decide and construct k-page book embeddings from the command line.
//
//   bookthick fobt  graph.txt [--k N] [--algo vc|pw|oracle|auto] [--out doc.json]
//   bookthick bt    graph.txt [--k N] [--algo auto|oracle] [--jobs N] [--out doc.json]
//   bookthick check doc.json
//   bookthick render doc.json --out drawing.svg
//   bookthick gen   complete 5 [--order identity|random] [--seed S]
//
// Exit status: 0 feasible / crossing-free, 1 infeasible / crossings, 2 input error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <bookthick/bookthick.hpp>

namespace {

using namespace bookthick;

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_input = 2;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string &path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_target(const std::string &path, const std::string &text)
{
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw input_error("cannot write " + path);
}

parsed_graph load_graph(const std::string &path)
{
    auto text = read_source(path);
    try {
        return parse_graph(text);
    }
    catch (const parse_error &e) {
        throw input_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

embedding_document load_document(const std::string &path)
{
    auto text = read_source(path);
    try {
        return read_embedding_document(text);
    }
    catch (const document_error &e) {
        throw input_error(path + ": " + e.what());
    }
}

struct solve_options {
    std::string input;
    std::optional<int> k;
    std::string algo = "auto";
    int jobs = 1;
    std::string out;
};

// The report goes to stdout unless the document itself does.
std::ostream &report_stream(const solve_options &opts)
{
    return opts.out == "-" ? std::cerr : std::cout;
}

void emit(const solve_options &opts, const graph &g, const book_embedding &emb)
{
    if (!validate(g, emb).ok)
        throw std::logic_error("solver produced a crossing embedding");
    if (!opts.out.empty())
        write_target(opts.out, write_embedding_document(g, emb));
}

using clock_type = std::chrono::steady_clock;

void print_time(clock_type::time_point start)
{
    const auto ms = std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
    std::cerr << "time_ms: " << std::fixed << std::setprecision(1) << ms << '\n';
}

int run_fobt(const solve_options &opts, bool timed)
{
    auto parsed = load_graph(opts.input);
    if (!parsed.order)
        throw input_error(opts.input + ": missing order line");
    if (opts.k && *opts.k < 0)
        throw input_error("page count must be non-negative");
    const auto &g = parsed.g;
    const auto &order = *parsed.order;
    const auto start = clock_type::now();

    const int tau = static_cast<int>(minimum_vertex_cover(g).size());
    const int kappa = compute_guard_profile(g, order).pathwidth;
    std::string algo = opts.algo;
    if (algo == "auto")
        algo = tau <= kappa ? "vc" : "pw";

    std::optional<page_assignment> found;
    int pages = 0;
    if (opts.k) {
        if (algo == "vc")
            found = vc::solve_fixed_order_vc(g, order, *opts.k);
        else if (algo == "pw")
            found = pw::solve_fixed_order_pw(g, order, *opts.k);
        else
            found = fobt_oracle(g, order, *opts.k);
        pages = *opts.k;
    }
    else {
        if (algo == "vc")
            std::tie(pages, found) = vc::min_pages_fixed_order_vc(g, order);
        else if (algo == "pw")
            std::tie(pages, found) = pw::min_pages_fixed_order_pw(g, order);
        else {
            while (!(found = fobt_oracle(g, order, pages)))
                ++pages;
        }
    }

    auto &rep = report_stream(opts);
    rep << "problem: fixed-order\n"
        << "algorithm: " << algo << '\n'
        << "tau: " << tau << '\n'
        << "pathwidth: " << kappa << '\n';
    if (opts.k)
        rep << "k: " << *opts.k << '\n';
    rep << "feasible: " << (found ? "yes" : "no") << '\n';
    if (found) {
        rep << "pages: " << found->pages_used() << '\n';
        found->k = pages;
        emit(opts, g, {order, *found});
    }
    if (timed)
        print_time(start);
    return found ? exit_ok : exit_no;
}

int run_bt(const solve_options &opts, bool timed)
{
    auto parsed = load_graph(opts.input);
    if (opts.k && *opts.k < 0)
        throw input_error("page count must be non-negative");
    if (opts.algo != "auto" && opts.algo != "oracle")
        throw input_error("bt supports --algo auto or oracle");
    const auto &g = parsed.g;
    const auto start = clock_type::now();
    const int tau = static_cast<int>(minimum_vertex_cover(g).size());

    std::optional<book_embedding> found;
    int pages = 0;
    if (opts.algo == "oracle") {
        if (opts.k)
            found = bt_oracle(g, pages = *opts.k, opts.jobs);
        else
            while (!(found = bt_oracle(g, pages, opts.jobs)))
                ++pages;
    }
    else if (opts.k) {
        found = kernel::solve_bt(g, pages = *opts.k, opts.jobs);
    }
    else {
        auto [best, emb] = kernel::min_pages_bt(g, opts.jobs);
        pages = best;
        found = std::move(emb);
    }

    auto &rep = report_stream(opts);
    rep << "problem: free-order\n"
        << "algorithm: " << (opts.algo == "oracle" ? "oracle" : "kernel") << '\n'
        << "tau: " << tau << '\n';
    if (opts.k)
        rep << "k: " << *opts.k << '\n';
    rep << "feasible: " << (found ? "yes" : "no") << '\n';
    if (found) {
        rep << "pages: " << found->assignment.pages_used() << '\n';
        found->assignment.k = pages;
        emit(opts, g, *found);
    }
    if (timed)
        print_time(start);
    return found ? exit_ok : exit_no;
}

int run_check(const std::string &path)
{
    auto doc = load_document(path);
    auto report = validate(doc.g, doc.embedding);
    if (report.ok) {
        std::cout << "ok: " << doc.g.m() << " edges on " << doc.embedding.assignment.pages_used() << " pages\n";
        return exit_ok;
    }
    std::cout << "crossings: " << report.violations.size() << '\n';
    for (const auto &[e, f] : report.violations)
        std::cout << '(' << e.u << ' ' << e.v << ") x (" << f.u << ' ' << f.v << ") on page "
                  << doc.embedding.assignment.pages[*doc.g.edge_index(e.u, e.v)] << '\n';
    return exit_no;
}

int run_render(const std::string &path, const std::string &out)
{
    auto doc = load_document(path);
    if (!validate(doc.g, doc.embedding).ok)
        throw input_error(path + ": embedding has crossings");
    write_target(out, render_svg(doc.g, doc.embedding));
    return exit_ok;
}

struct gen_options {
    std::string family;
    std::vector<int> sizes;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string order = "none";
    std::string out = "-";
};

int run_gen(const gen_options &opts)
{
    auto need = [&](std::size_t count) {
        if (opts.sizes.size() != count)
            throw input_error(opts.family + " takes " + std::to_string(count) + " size argument(s)");
        for (int s : opts.sizes)
            if (s < 0)
                throw input_error("sizes must be non-negative");
    };
    std::optional<graph> g;
    if (opts.family == "complete") {
        need(1);
        g = gen::complete(opts.sizes[0]);
    }
    else if (opts.family == "bipartite") {
        need(2);
        g = gen::complete_bipartite(opts.sizes[0], opts.sizes[1]);
    }
    else if (opts.family == "path") {
        need(1);
        g = gen::path(opts.sizes[0]);
    }
    else if (opts.family == "cycle") {
        need(1);
        if (opts.sizes[0] < 3)
            throw input_error("cycle needs at least 3 vertices");
        g = gen::cycle(opts.sizes[0]);
    }
    else if (opts.family == "star") {
        need(1);
        g = gen::star(opts.sizes[0]);
    }
    else if (opts.family == "random") {
        need(1);
        if (opts.p < 0 || opts.p > 1)
            throw input_error("edge probability must lie in [0, 1]");
        g = gen::random_graph(opts.sizes[0], opts.p, opts.seed);
    }
    else {
        throw input_error("unknown family " + opts.family);
    }

    std::optional<linear_order> order;
    if (opts.order == "identity")
        order = linear_order::identity(g->n());
    else if (opts.order == "random")
        order = gen::random_order(g->n(), opts.seed + 1);
    write_target(opts.out, format_graph(*g, order ? &*order : nullptr));
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Decide and construct k-page book embeddings"};
    app.require_subcommand(1);
    bool timed = false;
    app.add_flag("--time", timed, "Print wall time to stderr");

    auto add_solver = [&](const char *name, const char *help, solve_options &opts, std::vector<std::string> algos) {
        auto *cmd = app.add_subcommand(name, help);
        cmd->add_option("input", opts.input, "Graph file ('-' for stdin)")->required();
        cmd->add_option("--k", opts.k, "Page budget; omit for the minimum");
        cmd->add_option("--algo", opts.algo, "Solver")->check(CLI::IsMember(std::move(algos)));
        cmd->add_option("--jobs", opts.jobs, "Worker threads for order search")->check(CLI::PositiveNumber);
        cmd->add_option("--out", opts.out, "Write the embedding document here ('-' for stdout)");
        return cmd;
    };
    solve_options fobt_opts, bt_opts;
    auto *fobt_cmd = add_solver("fobt", "Fixed-order book thickness", fobt_opts, {"vc", "pw", "oracle", "auto"});
    auto *bt_cmd = add_solver("bt", "Book thickness over all orders", bt_opts, {"auto", "oracle"});

    std::string check_path;
    auto *check_cmd = app.add_subcommand("check", "Validate an embedding document");
    check_cmd->add_option("document", check_path, "Embedding document ('-' for stdin)")->required();

    std::string render_path, render_out;
    auto *render_cmd = app.add_subcommand("render", "Draw an embedding document as SVG");
    render_cmd->add_option("document", render_path, "Embedding document ('-' for stdin)")->required();
    render_cmd->add_option("--out", render_out, "SVG output path ('-' for stdout)")->required();

    gen_options gen_opts;
    auto *gen_cmd = app.add_subcommand("gen", "Print a graph from a built-in family");
    gen_cmd->add_option("family", gen_opts.family, "complete | bipartite | path | cycle | star | random")->required();
    gen_cmd->add_option("sizes", gen_opts.sizes, "Family sizes (bipartite takes two)")->required();
    gen_cmd->add_option("--p", gen_opts.p, "Edge probability for random graphs");
    gen_cmd->add_option("--seed", gen_opts.seed, "Seed for random graphs and orders");
    gen_cmd->add_option("--order", gen_opts.order, "Append an order line")->check(CLI::IsMember({"none", "identity", "random"}));
    gen_cmd->add_option("--out", gen_opts.out, "Output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*fobt_cmd)
            return run_fobt(fobt_opts, timed);
        if (*bt_cmd)
            return run_bt(bt_opts, timed);
        if (*check_cmd)
            return run_check(check_path);
        if (*render_cmd)
            return run_render(render_path, render_out);
        if (*gen_cmd)
            return run_gen(gen_opts);
    }
    catch (const input_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
