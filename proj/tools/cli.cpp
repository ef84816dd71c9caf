#include "cli.hpp"

#include "sroots/bench.hpp"
#include "sroots/io.hpp"
#include "sroots/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace sroots::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

const std::map<std::string, Algorithm> kAlgorithms{
    {"fast", Algorithm::fast}, {"dnc", Algorithm::dnc_reference}, {"iter", Algorithm::iterative_reference}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power-series roots of polynomials over F_p[[x]]/(x^d)", "sroots"};
    app.require_subcommand(1);

    std::string algorithm = "fast";
    std::uint64_t seed = 0;
    bool no_shortcut = false;
    std::string out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algorithm", algorithm, "fast, dnc or iter")
            ->check(CLI::IsMember({"fast", "dnc", "iter"}));
        sub->add_option("--seed", seed, "seed for root splitting and instance generation");
        sub->add_flag("--no-shortcut", no_shortcut, "disable the degree-1 affine factor exit");
        sub->add_option("--out", out_path, "write output here instead of stdout");
    };

    std::string instance_path, roots_path, mode = "basic";
    auto* roots_cmd = app.add_subcommand("roots", "print a root set of an instance");
    roots_cmd->add_option("instance", instance_path)->required();
    add_common(roots_cmd);

    auto* check_cmd = app.add_subcommand("check", "verify a root set file against an instance");
    check_cmd->add_option("instance", instance_path)->required();
    check_cmd->add_option("rootset", roots_path)->required();
    check_cmd->add_option("--mode", mode, "basic, reduced or oracle")
        ->check(CLI::IsMember({"basic", "reduced", "oracle"}));
    add_common(check_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "list every root modulo x^d by enumeration");
    oracle_cmd->add_option("instance", instance_path)->required();
    add_common(oracle_cmd);

    std::vector<std::size_t> sizes{16, 32, 64, 128};
    std::size_t bench_d = 128, runs = 1;
    std::uint32_t bench_p = 998244353;
    std::string family = "repeated-root";
    std::vector<std::string> bench_algorithms{"fast", "dnc"};
    auto* bench_cmd = app.add_subcommand("bench", "time solvers on the repeated-root family, CSV output");
    bench_cmd->add_option("--sizes", sizes, "values of n")->delimiter(',');
    bench_cmd->add_option("--d", bench_d, "precision");
    bench_cmd->add_option("--p", bench_p, "prime modulus");
    bench_cmd->add_option("--runs", runs, "timings per row (median reported)");
    bench_cmd->add_option("--family", family)->check(CLI::IsMember({"repeated-root"}));
    bench_cmd->add_option("--algorithms", bench_algorithms, "solvers to time")
        ->delimiter(',')
        ->check(CLI::IsMember({"fast", "dnc", "iter"}));
    add_common(bench_cmd);

    std::vector<std::string> argv_store{"sroots"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (bench_cmd->parsed()) {
            if (bench_d < 1) throw InvalidParameters("d must be >= 1");
            if (!is_prime(bench_p)) throw InvalidParameters("p is not prime");
            for (std::size_t n : sizes)
                if (n < 2) throw InvalidParameters("sizes must be >= 2");
            const PrimeField F(bench_p);
            std::vector<Algorithm> algs;
            for (const auto& a : bench_algorithms) algs.push_back(kAlgorithms.at(a));
            emit(format_csv(run_benchmark(F, sizes, bench_d, algs, std::max<std::size_t>(runs, 1), seed)), out_path,
                 out);
            return kOk;
        }

        const Instance inst = parse_instance(slurp(instance_path));
        const PrimeField F(static_cast<std::uint32_t>(inst.p));
        const SeriesPoly Q = inst.poly(F);

        if (roots_cmd->parsed()) {
            SolverConfig cfg{seed, !no_shortcut, kAlgorithms.at(algorithm)};
            emit(format_root_set(series_roots(F, Q, inst.d, cfg)), out_path, out);
            return kOk;
        }
        if (oracle_cmd->parsed()) {
            std::string text;
            for (const Residue& r : brute_force_roots(F, Q, inst.d).residues) {
                for (std::size_t i = 0; i < r.size(); ++i) text += (i ? " " : "") + std::to_string(r[i].v);
                text += '\n';
            }
            emit(text, out_path, out);
            return kOk;
        }

        const RootSet rs = parse_root_set(slurp(roots_path), inst.p);
        CheckResult verdict;
        if (mode == "basic") {
            verdict = check_basic_root_set(F, Q, inst.d, rs);
        } else if (mode == "reduced") {
            verdict = check_reduced_root_set(F, Q, inst.d, rs);
        } else {
            for (const Root& r : rs)
                if (r.t() > inst.d) verdict = {false, "root has t > d: " + format_root(r)};
            if (verdict && !agree(F, rs, Q, inst.d))
                verdict = {false, "expansion differs from the enumerated roots"};
        }
        emit(verdict ? "PASS\n" : "FAIL: " + verdict.reason + "\n", out_path, out);
        return verdict ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InvalidParameters& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::length_error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::domain_error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

}  // namespace sroots::cli
