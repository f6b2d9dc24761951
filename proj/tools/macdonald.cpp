// macdonald: enumerate odd partitions, run the verification suites, export
// DOT figures and time the two enumeration routes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <macdonald/macdonald.hpp>

namespace {

using namespace macdonald;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int size_cap()
{
    if (const char* env = std::getenv("MACDONALD_LIMIT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw usage_error("MACDONALD_LIMIT must be an integer");
        }
    }
    return default_partition_limit;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw usage_error(what);
}

// "-" means stdout.
void write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_enumerate(int n, const std::string& format)
{
    const int cap = size_cap();
    require(n >= 0 && n <= cap, "n must lie in [0, " + std::to_string(cap) + "]");
    for (const partition& p : enumerate_odd(n)) {
        const std::optional<partition> up = p.empty() ? std::nullopt : std::optional(parent(p));
        const bool hook = is_hook(p);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["parts"] = p.parts_vector();
            j["parent"] = up ? nlohmann::ordered_json(up->parts_vector()) : nlohmann::ordered_json(nullptr);
            j["hook"] = hook;
            j["f_odd"] = true;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << to_string(p) << " parent=" << (up ? to_string(*up) : "-") << " hook=" << (hook ? 1 : 0)
                      << '\n';
        }
    }
    return exit_ok;
}

int cmd_tree(int max_rank, const std::string& dot)
{
    require(max_rank >= 0 && max_rank <= 31, "--max-rank must lie in [0, 31]");
    const auto t = subtree(partition(), max_rank);
    write_text(dot, export_dot(t));
    std::cerr << t.size() << " nodes, top rank " << max_rank << ": " << t.count_at_rank(max_rank) << " nodes, "
              << t.count_at_rank(max_rank, mark::hook) << " hooks\n";
    return exit_ok;
}

int cmd_check(const std::string& suite, std::optional<int> limit)
{
    bool all_passed = true;
    bool found = false;
    for (const auto& s : checks::suites()) {
        if (suite != "all" && suite != s.name)
            continue;
        found = true;
        const int l = limit.value_or(s.default_limit);
        checks::suite_report r;
        try {
            r = s.run(l);
        } catch (const error& e) {
            if (e.code() == errc::limit_exceeded || e.code() == errc::invalid_argument)
                throw usage_error(std::string(s.name) + ": " + e.what());
            throw;
        }
        std::cout << checks::format(r) << std::flush;
        all_passed = all_passed && r.passed();
    }
    require(found, "unknown suite " + suite);
    return all_passed ? exit_ok : exit_failed;
}

int cmd_pascal(int max_size, const std::string& dot)
{
    require(max_size >= 1 && max_size <= 64, "--max-size must lie in [1, 64]");
    const bool ok = verify_pascal_embedding(max_size);
    if (!dot.empty())
        write_text(dot, export_dot(odd_pascal_graph(max_size - 1)));
    std::cout << "odd Pascal graph to rank " << max_size - 1 << " vs hooks up to size " << max_size << ": "
              << (ok ? "isomorphic" : "MISMATCH") << '\n';
    return ok ? exit_ok : exit_failed;
}

int cmd_fib(int r, int max_rank, const std::string& dot)
{
    require(r >= 1 && r <= 8, "--r must lie in [1, 8]");
    require(max_rank >= 0 && max_rank <= default_fib_rank_limit,
            "--max-rank must lie in [0, " + std::to_string(default_fib_rank_limit) + "]");
    const auto p = build_fib(r, max_rank);
    std::cout << "rank size odd\n";
    for (int n = 0; n <= max_rank; ++n)
        std::cout << n << ' ' << p.rank_size(n) << ' ' << count_odd_fib(p, n) << '\n';
    const auto sub = odd_subgraph(p);
    if (const auto* v = std::get_if<odd_subgraph_violation>(&sub)) {
        std::cout << "odd subgraph is not a tree: " << v->label << " at rank " << v->element.rank << " has "
                  << v->odd_parents << " odd lower covers\n";
        if (!dot.empty())
            throw usage_error("no tree to export");
        return exit_ok;
    }
    std::cout << "odd subgraph is a tree\n";
    if (!dot.empty())
        write_text(dot, export_dot(p, std::get<odd_tree>(sub)));
    return exit_ok;
}

int cmd_bench(int n, const std::string& mode)
{
    const bool naive = mode == "naive" || mode == "both";
    const bool fast = mode == "fast" || mode == "both";
    require(n >= 0 && n <= size_cap(), "--n must lie in [0, " + std::to_string(size_cap()) + "]");
    require(!naive || n <= 32, "naive mode is capped at n <= 32");

    std::optional<std::size_t> naive_count, fast_count;
    if (naive) {
        const auto start = std::chrono::steady_clock::now();
        std::size_t total = 0, odd = 0;
        for_each_partition(n, [&](const partition& p) {
            ++total;
            odd += is_odd(p) ? 1 : 0;
        });
        naive_count = odd;
        std::cout << "naive n=" << n << " count=" << odd << " scanned=" << total << " seconds=" << seconds_since(start)
                  << '\n';
    }
    if (fast) {
        const auto start = std::chrono::steady_clock::now();
        fast_count = enumerate_odd(n).size();
        std::cout << "fast  n=" << n << " count=" << *fast_count << " seconds=" << seconds_since(start) << '\n';
    }
    if (naive_count && fast_count && *naive_count != *fast_count) {
        std::cout << "count mismatch\n";
        return exit_failed;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Odd partitions and the Macdonald tree"};
    app.require_subcommand(1);

    int n = 0;
    std::string format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "list the odd partitions of n");
    enumerate->add_option("n", n, "size")->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int max_rank = 0;
    std::string dot = "-";
    auto* tree = app.add_subcommand("tree", "DOT of the tree up to a rank");
    tree->add_option("--max-rank", max_rank)->required();
    tree->add_option("--dot", dot, "output file, - for stdout");

    std::string suite = "all";
    std::optional<int> limit;
    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "parity", "tree", "fractal", "rays", "recursive", "pascal", "fib"}));
    check->add_option("--limit", limit);

    int max_size = 33;
    std::string pascal_dot;
    auto* pascal = app.add_subcommand("pascal", "compare the odd Pascal graph with the hooks");
    pascal->add_option("--max-size", max_size);
    pascal->add_option("--dot", pascal_dot);

    int r = 1;
    int fib_rank = 10;
    std::string fib_dot;
    auto* fib = app.add_subcommand("fib", "Fibonacci differential posets");
    fib->add_option("--r", r);
    fib->add_option("--max-rank", fib_rank);
    fib->add_option("--dot", fib_dot);

    int bench_n = 24;
    std::string mode = "both";
    auto* bench = app.add_subcommand("bench", "time naive filtering against enumeration");
    bench->add_option("--n", bench_n);
    bench->add_option("--mode", mode)->check(CLI::IsMember({"naive", "fast", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(n, format);
        if (*tree)
            return cmd_tree(max_rank, dot);
        if (*check)
            return cmd_check(suite, limit);
        if (*pascal)
            return cmd_pascal(max_size, pascal_dot);
        if (*fib)
            return cmd_fib(r, fib_rank, fib_dot);
        if (*bench)
            return cmd_bench(bench_n, mode);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
