#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringlat/report.hpp"

using namespace ringlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << text << "\n";
}

unsigned env_threads() {
    const char* v = std::getenv("RINGLAT_THREADS");
    if (!v) return 1;
    try {
        unsigned long n = std::stoul(v);
        return n == 0 ? 1 : static_cast<unsigned>(std::min<unsigned long>(n, 64));
    } catch (const std::exception&) {
        return 1;
    }
}

struct CommonFlags {
    ReportOptions opts;
    void attach(CLI::App* cmd, bool lattice_flag = true, bool with_seed = true) {
        cmd->add_option("--sample-budget", opts.closure.sample_budget,
                        "candidate samples per closure over infinite fields");
        if (with_seed)
            cmd->add_option("--seed", opts.closure.seed, "seed for sampled scans");
        cmd->add_option("--scan-cap", opts.closure.scan_cap, "coset scan cap");
        cmd->add_option("--node-cap", opts.node_cap, "lattice node cap");
        if (lattice_flag)
            cmd->add_flag_callback(
                "--no-lattice", [this] { opts.with_lattice = false; },
                "skip lattice enumeration");
    }
};

int classify_error(const Error& e) {
    if (dynamic_cast<const ScanCapExceeded*>(&e) || dynamic_cast<const NodeCapExceeded*>(&e) ||
        dynamic_cast<const TooManyAtoms*>(&e)) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of finite-dimensional commutative ring extensions"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full classification report for one extension");
    std::string analyze_input;
    analyze->add_option("input", analyze_input, "extension JSON file, or - for stdin")
        ->required();
    CommonFlags analyze_flags;
    analyze_flags.attach(analyze);

    // examples
    auto* examples = app.add_subcommand("examples", "emit a named catalog instance");
    std::string example_name, example_out;
    bool list_examples = false;
    examples->add_option("name", example_name, "catalog name, e.g. ex1:2, split:3,2, ex5");
    examples->add_option("-o,--output", example_out, "output file (default stdout)");
    examples->add_flag("--list", list_examples, "list catalog names");

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the intermediate rings");
    std::string lattice_input, lattice_out;
    bool want_dot = false, want_json = false;
    lattice->add_option("input", lattice_input, "extension JSON file, or - for stdin")
        ->required();
    lattice->add_flag("--dot", want_dot, "emit DOT");
    lattice->add_flag("--json", want_json, "emit JSON");
    lattice->add_option("-o,--output", lattice_out, "output file (default stdout)");
    CommonFlags lattice_flags;
    lattice_flags.attach(lattice, false);

    // random
    auto* random_cmd = app.add_subcommand("random", "generate seeded random instances");
    std::uint64_t rnd_seed = 1;
    size_t rnd_count = 1;
    std::string rnd_dir = ".";
    RandomProfile rnd_profile;
    random_cmd->add_option("--seed", rnd_seed, "base seed");
    random_cmd->add_option("--count", rnd_count, "number of instances");
    random_cmd->add_option("--out-dir", rnd_dir, "output directory");
    random_cmd->add_option("--primes", rnd_profile.primes, "allowed characteristics");
    random_cmd->add_option("--max-dim", rnd_profile.max_dim, "dimension bound");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem harness");
    std::uint64_t ver_seed = 42;
    size_t ver_count = 100;
    bool ver_catalog = false;
    std::string ver_cert = "certificates.json";
    RandomProfile ver_profile;
    verify->add_option("--seed", ver_seed, "base seed");
    verify->add_option("--count", ver_count, "number of random instances");
    verify->add_flag("--catalog", ver_catalog, "run the named catalog instead");
    verify->add_option("--certificates", ver_cert, "file for failure certificates");
    verify->add_option("--primes", ver_profile.primes, "allowed characteristics");
    verify->add_option("--max-dim", ver_profile.max_dim, "dimension bound");
    CommonFlags verify_flags;
    verify_flags.attach(verify, true, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            ExtensionInstance inst = parse_extension(read_input(analyze_input));
            ExtensionReport rep = build_report(inst, analyze_flags.opts);
            std::cout << rep.document.dump(2) << "\n";
            return kExitOk;
        }

        if (examples->parsed()) {
            if (list_examples) {
                for (const std::string& n : catalog_names()) std::cout << n << "\n";
                return kExitOk;
            }
            if (example_name.empty()) {
                std::cerr << "error: an example name (or --list) is required\n";
                return kExitBadInput;
            }
            ExtensionInstance inst = catalog_example(example_name);
            write_output(example_out, extension_to_json(inst).dump(2));
            return kExitOk;
        }

        if (lattice->parsed()) {
            ExtensionInstance inst = parse_extension(read_input(lattice_input));
            if (!inst.s->field()->isFinite())
                throw ParseError("lattice enumeration needs a finite coefficient field");
            LatticeOptions lo;
            lo.scan_cap = lattice_flags.opts.closure.scan_cap;
            lo.node_cap = lattice_flags.opts.node_cap;
            IntervalLattice l = enumerate_interval(inst.r, Subalgebra::full(inst.s), lo);
            if (want_dot == want_json)
                throw ParseError("choose exactly one of --dot or --json");
            if (want_dot) {
                write_output(lattice_out, lattice_dot(l));
            } else {
                Json j;
                j["id"] = inst.id;
                Json nodes = Json::array();
                for (const Subalgebra& n : l.nodes)
                    nodes.push_back(mat_to_json(n.space().basis().rows));
                j["nodes"] = std::move(nodes);
                Json edges = Json::array();
                for (size_t a = 0; a < l.nodes.size(); ++a)
                    for (size_t b = 0; b < l.nodes.size(); ++b)
                        if (l.covers(a, b)) edges.push_back(Json::array({a, b}));
                j["edges"] = std::move(edges);
                j["bottom"] = l.bottom;
                j["top"] = l.top;
                write_output(lattice_out, j.dump(2));
            }
            return kExitOk;
        }

        if (random_cmd->parsed()) {
            for (size_t i = 0; i < rnd_count; ++i) {
                ExtensionInstance inst = random_extension(rnd_seed + i, rnd_profile);
                write_output(rnd_dir + "/" + inst.id + ".json",
                             extension_to_json(inst).dump(2));
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            unsigned threads = env_threads();
            verify_flags.opts.closure.seed = ver_seed;
            HarnessSummary sum =
                ver_catalog
                    ? run_catalog_harness(threads, verify_flags.opts)
                    : run_harness(ver_seed, ver_count, ver_profile, threads,
                                  verify_flags.opts);
            std::cout << summary_to_json(sum).dump(2) << "\n";
            if (sum.fail > 0) {
                write_output(ver_cert, Json(sum.certificates).dump(2));
                std::cerr << "harness failures recorded in " << ver_cert << "\n";
                return kExitCheckFailed;
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const UnknownExample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        return classify_error(e);
    }
    return kExitBadInput;
}
