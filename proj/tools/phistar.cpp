// phistar: query Phi*_n(q), enumerate bounded sets, and regenerate the
// classification tables.
//
// Exit status: 0 ok, 1 table mismatch, 2 invalid input, 3 factorization
// budget exceeded, 4 golden table missing.

#include "phistar/phistar.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace phistar;

constexpr int exit_mismatch = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;
constexpr int exit_missing_golden = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
    const char* env = std::getenv("PHISTAR_JOBS");
    if (!env || !*env) return 1;
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used == std::string_view(env).size() && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PHISTAR_JOBS must be an integer in 1..1024, got '") + env + "'");
}

RecordFormat parse_format(const std::string& name) {
    if (name == "text") return RecordFormat::text;
    if (name == "csv") return RecordFormat::csv;
    if (name == "jsonl") return RecordFormat::jsonl;
    throw UsageError("unknown format '" + name + "'");
}

mpz_class parse_integer(const std::string& text, const char* what) {
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(std::string(what) + " must be a decimal integer");
    return v;
}

struct ComputeArgs {
    std::string n, q;
    bool require_prime_power = false;
    bool no_factor = false;
    u64 budget = FactorOptions{}.max_candidates;
    std::string format = "text";
};

int run_compute(const ComputeArgs& args) {
    const mpz_class n_big = parse_integer(args.n, "--n");
    const mpz_class q = parse_integer(args.q, "--q");
    if (n_big < 1 || !fits_u64(n_big)) throw UsageError("--n must be in 1..2^64-1");
    if (q < 2 || !fits_u64(q)) throw UsageError("--q must be in 2..2^64-1");
    const RecordFormat format = parse_format(args.format);
    const u64 n = n_big.get_ui();

    const auto pp = prime_power_decompose(q);
    if (args.require_prime_power && !pp) throw UsageError("--q " + q.get_str() + " is not a prime power");

    const PhiStarResult r = phi_star(n, q);
    OutputRecord rec;
    rec.n = n;
    rec.q = q.get_ui();
    if (pp) {
        rec.q_base = to_u64(pp->base());
        rec.q_exp = pp->exponent();
    }
    rec.phi_n = r.phi_n;
    rec.phi_star = r.phi_star;
    if (!args.no_factor && n >= 2) {
        FactorOptions opts;
        opts.max_candidates = args.budget;
        rec.indices = factor_phi_star(n, q, r.phi_star, opts).indices();
    }

    if (format != RecordFormat::text) {
        write_records(std::cout, {rec}, format);
        return 0;
    }
    std::cout << "n         " << n << '\n';
    std::cout << "q         " << q.get_str();
    if (pp && pp->exponent() > 1) std::cout << " = " << pp->base().get_str() << '^' << pp->exponent();
    if (!pp) std::cout << " (not a prime power)";
    std::cout << '\n';
    std::cout << "phi_n     " << r.phi_n.get_str() << '\n';
    std::cout << "phi_star  " << r.phi_star.get_str() << '\n';
    std::cout << "branch    " << to_string(r.branch) << '\n';
    if (rec.indices) std::cout << "I         " << (rec.indices->empty() ? "-" : join_indices(*rec.indices, ",")) << '\n';
    return 0;
}

struct EnumerateArgs {
    std::string set;
    std::string c, k;
    std::string bound;
    std::string format = "text";
    std::optional<unsigned> jobs;
    bool classify = false;
    std::string evaluation = "moebius";
};

int run_enumerate(const EnumerateArgs& args) {
    const RecordFormat format = parse_format(args.format);
    mpq_class c, k;
    try {
        c = parse_rational(args.c);
        k = parse_rational(args.k);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (c <= 0 || k <= 0) throw UsageError("--c and --k must be positive");
    EnumerateOptions opts;
    opts.jobs = args.jobs.value_or(default_jobs());
    if (args.evaluation == "coefficients") opts.evaluation = PhiEvaluation::coefficients;
    else if (args.evaluation != "moebius") throw UsageError("--evaluation must be moebius or coefficients");
    if (args.classify && args.set != "Mstar3") throw UsageError("--classify applies to --set Mstar3 only");
    if (args.set == "Mstar2" && args.bound.empty()) throw UsageError("--bound is required with --set Mstar2");

    std::vector<OutputRecord> records;
    try {
        if (args.set == "M") {
            for (const auto& row : enumerate_phi_bounded(BoundSpec(c, k), opts).rows) records.push_back(make_record(row));
        } else if (args.set == "Mstar3") {
            PairSet set = enumerate_phi_star_bounded(c, k, opts);
            if (args.classify) {
                for (const auto& row : filter_restricted_shape(set)) records.push_back(make_record(row));
            } else {
                for (const auto& row : set.rows) records.push_back(make_record(row));
            }
        } else if (args.set == "Mstar2") {
            const mpz_class cap = parse_integer(args.bound, "--bound");
            if (cap < 1) throw UsageError("--bound must be positive");
            for (const auto& row : enumerate_phi_star_n2(c, k, cap, opts).merged()) records.push_back(make_record(row));
        } else {
            throw UsageError("--set must be one of M, Mstar3, Mstar2");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_records(std::cout, records, format);
    return 0;
}

struct TableArgs {
    int id = 0;
    std::string golden_dir = PHISTAR_TABLE_DIR;
    std::optional<unsigned> jobs;
    bool quiet = false;
};

int run_table(const TableArgs& args) {
    const auto path = golden_table_path(args.golden_dir, args.id);
    const auto golden = read_text_file(path);
    if (!golden) {
        std::cerr << "phistar: golden file " << path.string() << " not found\n";
        return exit_missing_golden;
    }
    EnumerateOptions opts;
    opts.jobs = args.jobs.value_or(default_jobs());
    const std::string regenerated = render_table(args.id, opts);
    if (!args.quiet) std::cout << regenerated;
    const TableDiff diff = diff_tables(*golden, regenerated);
    if (diff.match) {
        std::cerr << "table " << args.id << ": matches " << path.string() << '\n';
        return 0;
    }
    std::cerr << "table " << args.id << ": differs from " << path.string() << " (- golden, + regenerated)\n";
    for (const auto& line : diff.lines) std::cerr << line << '\n';
    return exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phi*_n(q): largest strong primitive divisors of q^n - 1"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "Phi_n(q), Phi*_n(q) and the multiset I for one pair");
    cmd_compute->add_option("--n", compute.n, "index n >= 1")->required();
    cmd_compute->add_option("--q", compute.q, "integer q >= 2")->required();
    cmd_compute->add_flag("--require-prime-power", compute.require_prime_power, "reject q that is not a prime power");
    cmd_compute->add_flag("--no-factor", compute.no_factor, "skip the factorization of Phi*_n(q)");
    cmd_compute->add_option("--budget", compute.budget, "maximum trial-division candidates")
        ->check(CLI::PositiveNumber);
    cmd_compute->add_option("--format", compute.format, "text, csv or jsonl");

    EnumerateArgs enumerate;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "all pairs within the bound c * n^k");
    cmd_enumerate->add_option("--set", enumerate.set, "M, Mstar3 or Mstar2")->required();
    cmd_enumerate->add_option("--c", enumerate.c, "positive rational c (e.g. 16, 0.5, 3/2)")->required();
    cmd_enumerate->add_option("--k", enumerate.k, "positive rational k")->required();
    cmd_enumerate->add_option("--bound", enumerate.bound, "cap B on primes q = 3 mod 4 (Mstar2)");
    cmd_enumerate->add_option("--format", enumerate.format, "text, csv or jsonl");
    cmd_enumerate->add_option("--jobs", enumerate.jobs, "worker threads (default $PHISTAR_JOBS or 1)")
        ->check(CLI::Range(1, 1024));
    cmd_enumerate->add_flag("--classify", enumerate.classify,
                            "Mstar3 only: keep I inside {1,1,1,2,3,4} and add c0, c1");
    cmd_enumerate->add_option("--evaluation", enumerate.evaluation, "moebius or coefficients");

    TableArgs table;
    auto* cmd_table = app.add_subcommand("table", "regenerate a table and diff it against the golden copy");
    cmd_table->add_option("id", table.id, "table number 1..5")->required()->check(CLI::Range(1, 5));
    cmd_table->add_option("--golden-dir", table.golden_dir, "directory holding table<id>.csv");
    cmd_table->add_option("--jobs", table.jobs, "worker threads")->check(CLI::Range(1, 1024));
    cmd_table->add_flag("--quiet", table.quiet, "do not print the regenerated table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (cmd_compute->parsed()) return run_compute(compute);
        if (cmd_enumerate->parsed()) return run_enumerate(enumerate);
        if (cmd_table->parsed()) return run_table(table);
    } catch (const UsageError& e) {
        std::cerr << "phistar: " << e.what() << '\n';
        return exit_invalid;
    } catch (const FactorBudgetExceeded& e) {
        std::cerr << "phistar: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "phistar: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
