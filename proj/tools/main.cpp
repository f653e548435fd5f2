#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sumrank/codes.hpp"
#include "sumrank/counting.hpp"
#include "sumrank/decoder.hpp"
#include "sumrank/distribution.hpp"
#include "sumrank/reduction.hpp"
#include "sumrank/sampling.hpp"
#include "sumrank/workfactor.hpp"

using namespace sumrank;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string out;
    std::string config;
};

struct SphereArgs {
    std::uint64_t q = 2;
    int m = 1, n = 1, ell = 1, t = 0;
    bool all_ell = false;
};

struct SampleArgs {
    std::uint64_t q = 2;
    int m = 1, n = 1, ell = 1, t = 0, s = -1, count = 1;
    std::string kind = "row";
};

struct DecodeArgs {
    std::uint64_t q = 2;
    int m = 4, n = 4, ell = 2, k = 1, t = 1, s = -1;
    std::uint64_t trials = 100;
    std::uint64_t max_iter = 0;
    std::string kind = "auto";
    std::string code_path;
    bool csv = false;
};

struct WorkArgs {
    std::uint64_t q = 2;
    int m = 20, n = 60, k = 30, t = 9, s = 10;
    std::vector<int> ells;
    std::string model = "unit";
    bool optimal = false;
    std::size_t lp_cap = 2000;
    int figure = 0;
};

struct LpArgs {
    std::uint64_t q = 2;
    int zeta = 1, mu = -1, t = 1, ell = 2, s = 1;
    std::size_t cap = 2000;
};

std::string fmt(double v, int prec = 4)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << v;
    return os.str();
}

void require_prime_power(std::uint64_t q)
{
    if (!prime_power(q)) throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
}

std::vector<int> divisors(int n)
{
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

void emit_sphere_row(std::ostream& os, const SphereArgs& a, int ell)
{
    const int eta = a.n / ell;
    const BigInt count = sphere_size(a.t, ell, a.q, eta, a.m);
    os << ell << ',' << (count > 0 ? fmt(log2_big(count)) : std::string()) << ',';
    if (a.t <= std::min(eta, a.m) * ell) os << fmt(sphere_size_log2_upper_bound(a.t, ell, a.q, eta, a.m));
    os << '\n';
}

int cmd_sphere(std::ostream& os, const SphereArgs& a, bool bound)
{
    require_prime_power(a.q);
    if (a.all_ell) {
        os << "ell,log2_exact,log2_bound\n";
        for (int ell : divisors(a.n)) emit_sphere_row(os, a, ell);
        return 0;
    }
    const SumRankParams p = make_params(a.n, a.ell, a.m);
    const BigInt count = sphere_size(a.t, a.ell, a.q, p.eta, a.m);
    if (!bound) {
        os << "q,m,n,ell,t,count,log2_count\n";
        os << a.q << ',' << a.m << ',' << a.n << ',' << a.ell << ',' << a.t << ',' << to_decimal(count) << ','
           << (count > 0 ? fmt(log2_big(count)) : std::string()) << '\n';
        return 0;
    }
    os << "q,m,n,ell,t,log2_bound,log2_exact\n";
    os << a.q << ',' << a.m << ',' << a.n << ',' << a.ell << ',' << a.t << ','
       << fmt(sphere_size_log2_upper_bound(a.t, a.ell, a.q, p.eta, a.m)) << ','
       << (count > 0 ? fmt(log2_big(count)) : std::string()) << '\n';
    return 0;
}

std::string join(std::span<const Elem> v, char sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

SupportKind parse_kind(const std::string& k)
{
    if (k == "row") return SupportKind::Row;
    if (k == "column") return SupportKind::Column;
    throw Error(ErrorCode::InvalidParams, "kind must be row or column");
}

int cmd_sample_error(std::ostream& os, const SampleArgs& a, const Globals& g)
{
    const FieldContext ctx = make_field(a.q, static_cast<unsigned>(a.m));
    const SumRankParams p = make_params(a.n, a.ell, a.m);
    const SphereTable table(a.q, p.eta, a.m, a.t, a.ell);
    Rng rng(g.seed);
    os << "index,weight,entries\n";
    for (int i = 0; i < a.count; ++i) {
        BlockVector e = sample_uniform_error(a.t, p, ctx, rng, &table);
        os << i << ',' << sum_rank_weight(ctx, e) << ',' << join(e.entries, ' ') << '\n';
    }
    return 0;
}

int cmd_sample_support(std::ostream& os, const SampleArgs& a, const Globals& g)
{
    const FieldContext ctx = make_field(a.q, static_cast<unsigned>(a.m));
    const SumRankParams p = make_params(a.n, a.ell, a.m);
    const SupportKind kind = parse_kind(a.kind);
    const int s = a.s < 0 ? a.t : a.s;
    const SupportDistribution dist(a.q, p.zeta(kind), a.t, a.ell, p.mu(), s);
    Rng rng(g.seed);
    os << "index,block,dim,basis\n";
    for (int i = 0; i < a.count; ++i) {
        SumRankSupport sup = draw_random_support(dist, kind, ctx.base(), rng);
        for (int b = 0; b < sup.ell(); ++b) {
            const FqMatrix& m = sup.bases[static_cast<std::size_t>(b)];
            std::string rows;
            for (std::size_t r = 0; r < m.rows(); ++r) rows += (r ? ";" : "") + join(m.row(r), ' ');
            os << i << ',' << b << ',' << m.rows() << ',' << rows << '\n';
        }
    }
    return 0;
}

int cmd_decode(std::ostream& os, const DecodeArgs& a, const Globals& g)
{
    LinearCode code = [&] {
        if (!a.code_path.empty()) {
            std::ifstream in(a.code_path);
            if (!in) throw Error(ErrorCode::ParseError, "cannot open " + a.code_path);
            return read_code(in);
        }
        const FieldContext ctx = make_field(a.q, static_cast<unsigned>(a.m));
        Rng rng = Rng(g.seed).split(~0ULL);
        return random_code(a.k, make_params(a.n, a.ell, a.m), ctx, rng);
    }();
    DecodeConfig cfg;
    cfg.s = a.s;
    if (a.max_iter > 0) cfg.max_iterations = a.max_iter;
    cfg.kind = a.kind == "auto" ? DecodeKind::Auto : a.kind == "row" ? DecodeKind::Row
             : a.kind == "column" ? DecodeKind::Column
             : throw Error(ErrorCode::InvalidParams, "kind must be auto, row or column");
    ExperimentStats st = run_experiment(code, a.t, a.trials, cfg, g.seed, g.threads);
    if (a.csv) {
        write_experiment_csv(os, st);
        return 0;
    }
    const SupportDistribution dist = decoder_distribution(code.ctx, code.params, a.t, st.s, st.kind);
    const BigRational qv = dist.q_value();
    const BigInt tcount = num_decompositions(a.t, code.params.ell, code.params.mu());
    os << "q,m,n,ell,k,t,s,kind,trials,successes,mean_iterations,stderr_iterations,success_probability,"
          "p_lower,p_upper\n";
    os << code.ctx.q() << ',' << code.ctx.m() << ',' << code.n() << ',' << code.params.ell << ',' << code.k << ','
       << a.t << ',' << st.s << ',' << to_string(st.kind) << ',' << st.trials.size() << ',' << st.successes() << ','
       << fmt(st.mean_iterations()) << ',' << fmt(st.standard_error()) << ',' << fmt(st.success_probability(), 6)
       << ',' << fmt(1.0 / qv.get_d(), 6) << ',' << fmt(std::min(1.0, tcount.get_d() / qv.get_d()), 6) << '\n';
    return 0;
}

void apply_figure(WorkArgs& a)
{
    switch (a.figure) {
    case 0: return;
    case 2: a.q = 2, a.m = 20, a.n = 60, a.k = 30, a.t = 9, a.s = 10; return;
    case 3: a.q = 2, a.m = 60, a.n = 60, a.k = 30, a.t = 10, a.s = 30; return;
    case 4: a.q = 2, a.m = 25, a.n = 60, a.k = 20, a.t = 30, a.s = 30; return;
    default: throw Error(ErrorCode::InvalidParams, "figure must be 2, 3 or 4");
    }
}

int cmd_workfactor(std::ostream& os, WorkArgs a, const Globals& g)
{
    apply_figure(a);
    require_prime_power(a.q);
    const WIterModel model = parse_w_iter_model(a.model);
    std::vector<int> ells = a.ells.empty() ? divisors(a.n) : a.ells;
    for (int ell : ells)
        if (ell <= 0 || a.n % ell != 0) throw Error(ErrorCode::InvalidParams, "every ell must divide n");
    std::vector<WorkFactorReport> rows(ells.size());
    std::vector<std::string> errors(ells.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= ells.size()) return;
                i = next++;
            }
            WorkFactorParams p{a.q, a.m, a.n, a.k, ells[i], a.t, a.s};
            try {
                rows[i] = work_factor_report(p, model, a.optimal, a.lp_cap);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < std::max(1u, g.threads); ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);

    write_sweep_header(os);
    for (const auto& r : rows) {
        if (!r.feasible)
            std::cerr << "warning: ell=" << r.params.ell << " infeasible (need t <= s <= ell*min(eta,m))\n";
        write_sweep_row(os, r);
    }
    return 0;
}

int cmd_lp(std::ostream& os, const LpArgs& a)
{
    require_prime_power(a.q);
    const int mu = a.mu < 0 ? a.zeta : a.mu;
    OptimalDistribution od = optimal_distribution_lp(a.q, a.zeta, mu, a.t, a.ell, a.s, a.cap);
    const BigRational qv = MTable(a.q, a.zeta, a.t, a.ell, mu, a.s).q_value();
    os << "xi," << od.xi.get_str() << '\n';
    os << "log2_inv_xi," << fmt(-log2_big(od.xi)) << '\n';
    os << "Q," << qv.get_str() << '\n';
    os << "log2_Q," << fmt(log2_big(qv)) << '\n';
    os << "certified," << (od.certified ? "true" : "false") << '\n';
    os << "class,multiplicity,probability_each\n";
    for (std::size_t j = 0; j < od.lp.s_classes.size(); ++j) {
        std::string cls;
        for (std::size_t i = 0; i < od.lp.s_classes[j].size(); ++i)
            cls += (i ? " " : "") + std::to_string(od.lp.s_classes[j][i]);
        os << cls << ',' << to_decimal(od.lp.multiplicity[j]) << ',' << od.per_class[j].get_str() << '\n';
    }
    return 0;
}

int cmd_reduce(std::ostream& os, const ReductionDemoConfig& cfg)
{
    ReductionDemoReport r = run_reduction_demo(cfg);
    os << "metric,value\n";
    os << "trials," << r.trials << '\n';
    os << "rp_true," << r.rp_true << '\n';
    os << "rp_success_rate," << fmt(r.rp_success_rate()) << '\n';
    os << "rp_unverified_true," << r.rp_unverified_true << '\n';
    os << "corp_true_on_positive," << r.corp_true_on_positive << '\n';
    os << "negatives," << r.negatives << '\n';
    os << "corp_false_on_negative," << r.corp_false_on_negative << '\n';
    os << "corp_negative_false_rate," << fmt(r.corp_negative_false_rate()) << '\n';
    os << "lifts," << r.lifts << '\n';
    os << "weight_preserved," << r.weight_preserved << '\n';
    os << "weight_preservation_rate," << fmt(r.weight_preservation()) << '\n';
    os << "oracle_calls," << r.oracle_calls << '\n';
    return 0;
}

// Lines "key = value" become "--key=value"; '#' starts a comment. They are
// appended after the command line, and TakeFirst lets explicit flags win.
std::vector<std::string> config_tokens(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CLI::FileError::Missing(path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw CLI::ConversionError("config line without '=': " + line);
        out.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sum-rank metric syndrome decoding toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeFirst);

    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--config", g.config, "key=value file mirroring the flags");

    SphereArgs sa;
    auto* sphere = app.add_subcommand("sphere", "Sphere sizes in the sum-rank metric");
    sphere->require_subcommand(1);
    auto add_sphere = [&](CLI::App* c) {
        c->add_option("--q", sa.q, "Field size")->required();
        c->add_option("--m", sa.m, "Extension degree")->required()->check(CLI::PositiveNumber);
        c->add_option("--n", sa.n, "Code length")->required()->check(CLI::PositiveNumber);
        c->add_option("--ell", sa.ell, "Number of blocks")->check(CLI::PositiveNumber);
        c->add_option("--t", sa.t, "Sum-rank weight")->required()->check(CLI::NonNegativeNumber);
        c->add_flag("--all-ell", sa.all_ell, "Sweep every divisor of n");
    };
    auto* sphere_count = sphere->add_subcommand("count", "Exact number of vectors of weight t");
    auto* sphere_bound = sphere->add_subcommand("bound", "Closed-form upper bound");
    add_sphere(sphere_count);
    add_sphere(sphere_bound);

    SampleArgs sm;
    auto* sample = app.add_subcommand("sample", "Draw random errors or supports");
    sample->require_subcommand(1);
    auto add_sample = [&](CLI::App* c) {
        c->add_option("--q", sm.q, "Field size")->required();
        c->add_option("--m", sm.m, "Extension degree")->required()->check(CLI::PositiveNumber);
        c->add_option("--n", sm.n, "Code length")->required()->check(CLI::PositiveNumber);
        c->add_option("--ell", sm.ell, "Number of blocks")->required()->check(CLI::PositiveNumber);
        c->add_option("--t", sm.t, "Sum-rank weight")->required()->check(CLI::NonNegativeNumber);
        c->add_option("--count", sm.count, "Number of draws")->check(CLI::NonNegativeNumber);
    };
    auto* sample_error = sample->add_subcommand("error", "Uniform errors of weight t");
    auto* sample_support = sample->add_subcommand("support", "Super-supports from the designed distribution");
    add_sample(sample_error);
    add_sample(sample_support);
    sample_support->add_option("--s", sm.s, "Super-support dimension (default t)");
    sample_support->add_option("--kind", sm.kind, "row or column")->check(CLI::IsMember({"row", "column"}));

    DecodeArgs da;
    auto* decode = app.add_subcommand("decode", "Generic decoding experiment on a random or given code");
    decode->add_option("--q", da.q, "Field size");
    decode->add_option("--m", da.m, "Extension degree")->check(CLI::PositiveNumber);
    decode->add_option("--n", da.n, "Code length")->check(CLI::PositiveNumber);
    decode->add_option("--ell", da.ell, "Number of blocks")->check(CLI::PositiveNumber);
    decode->add_option("--k", da.k, "Code dimension")->check(CLI::PositiveNumber);
    decode->add_option("--t", da.t, "Error weight")->check(CLI::NonNegativeNumber);
    decode->add_option("--s", da.s, "Super-support dimension (default: largest useful)");
    decode->add_option("--trials", da.trials, "Number of planted instances");
    decode->add_option("--max-iter", da.max_iter, "Iteration cap per trial (0: none)");
    decode->add_option("--kind", da.kind, "auto, row or column")->check(CLI::IsMember({"auto", "row", "column"}));
    decode->add_option("--code", da.code_path, "Read the code from this file")->check(CLI::ExistingFile);
    decode->add_flag("--csv", da.csv, "Per-trial CSV instead of the summary");

    WorkArgs wa;
    auto* work = app.add_subcommand("workfactor", "Work-factor estimates over ell");
    work->add_option("--q", wa.q, "Field size");
    work->add_option("--m", wa.m, "Extension degree")->check(CLI::PositiveNumber);
    work->add_option("--n", wa.n, "Code length")->check(CLI::PositiveNumber);
    work->add_option("--k", wa.k, "Code dimension")->check(CLI::NonNegativeNumber);
    work->add_option("--t", wa.t, "Error weight")->check(CLI::NonNegativeNumber);
    work->add_option("--s", wa.s, "Super-support dimension")->check(CLI::NonNegativeNumber);
    work->add_option("--ell", wa.ells, "Block counts (default: all divisors of n)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->delimiter(',');
    work->add_option("--model", wa.model, "W_iter model: unit or cubic")->check(CLI::IsMember({"unit", "cubic"}));
    work->add_flag("--optimal", wa.optimal, "Also solve the optimal-distribution LP");
    work->add_option("--lp-cap", wa.lp_cap, "Maximum LP variables");
    work->add_option("--figure", wa.figure, "Preset parameters 2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));

    LpArgs la;
    auto* lp = app.add_subcommand("lp-optimal", "Optimal super-support distribution by exact LP");
    lp->add_option("--q", la.q, "Field size");
    lp->add_option("--zeta", la.zeta, "Ambient block dimension")->required()->check(CLI::PositiveNumber);
    lp->add_option("--mu", la.mu, "Maximum block rank (default zeta)");
    lp->add_option("--t", la.t, "Error weight")->required()->check(CLI::NonNegativeNumber);
    lp->add_option("--ell", la.ell, "Number of blocks")->required()->check(CLI::PositiveNumber);
    lp->add_option("--s", la.s, "Super-support dimension")->required()->check(CLI::NonNegativeNumber);
    lp->add_option("--cap", la.cap, "Maximum LP variables");

    ReductionDemoConfig rc;
    auto* reduce = app.add_subcommand("reduce", "Hamming to sum-rank reduction");
    reduce->require_subcommand(1);
    auto* demo = reduce->add_subcommand("demo", "Run both reduction wrappers on random tiny instances");
    demo->add_option("--q", rc.q, "Field size");
    demo->add_option("--n", rc.n, "Code length")->check(CLI::PositiveNumber);
    demo->add_option("--ell", rc.ell, "Number of blocks")->check(CLI::PositiveNumber);
    demo->add_option("--m", rc.m, "Extension degree")->check(CLI::PositiveNumber);
    demo->add_option("--k", rc.k, "Code dimension")->check(CLI::NonNegativeNumber);
    demo->add_option("--t", rc.t, "Hamming weight of the planted solution")->check(CLI::NonNegativeNumber);
    demo->add_option("--trials", rc.trials, "Number of instances")->check(CLI::NonNegativeNumber);
    demo->add_option("--fn-rate", rc.false_negative_rate, "Injected oracle false-negative rate")
        ->check(CLI::Range(0.0, 1.0));
    demo->add_option("--repeats", rc.repeats, "Oracle repetitions OR-ed together")->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        // A first pass finds --config; its tokens are then appended.
        auto cfg_it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
            return a == "--config" || a.rfind("--config=", 0) == 0;
        });
        if (cfg_it != args.end()) {
            std::string path;
            if (*cfg_it == "--config") {
                if (cfg_it == args.begin()) throw CLI::ArgumentMismatch("--config needs a path");
                path = *(cfg_it - 1);
            } else {
                path = cfg_it->substr(9);
            }
            std::vector<std::string> extra = config_tokens(path);
            for (const auto& tok : extra) args.insert(args.begin(), tok);
        }
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::ofstream file;
        if (!g.out.empty()) {
            file.open(g.out);
            if (!file) throw Error(ErrorCode::ParseError, "cannot open " + g.out + " for writing");
        }
        std::ostream& os = g.out.empty() ? std::cout : file;

        if (sphere_count->parsed()) return cmd_sphere(os, sa, false);
        if (sphere_bound->parsed()) return cmd_sphere(os, sa, true);
        if (sample_error->parsed()) return cmd_sample_error(os, sm, g);
        if (sample_support->parsed()) return cmd_sample_support(os, sm, g);
        if (decode->parsed()) return cmd_decode(os, da, g);
        if (work->parsed()) return cmd_workfactor(os, wa, g);
        if (lp->parsed()) return cmd_lp(os, la);
        if (demo->parsed()) {
            rc.seed = g.seed;
            rc.threads = g.threads;
            return cmd_reduce(os, rc);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
