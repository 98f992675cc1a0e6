#include "cli.hpp"

#include <map>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace ovpcheck {

namespace {

void add_global_options(CLI::App& app, Options& opt) {
    app.add_option("--order", opt.order, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--n-max", opt.n_max, "Largest n checked in each progression");
    app.add_option("--t-max", opt.grid.t_max, "Largest tuple count t")->check(CLI::NonNegativeNumber);
    app.add_option("--alpha-max", opt.grid.alpha_max, "Largest alpha")->check(CLI::NonNegativeNumber);
    app.add_option("--i-max", opt.grid.i_max, "Largest i")->check(CLI::PositiveNumber);
    app.add_option("--j-max", opt.grid.j_max, "Largest j")->check(CLI::PositiveNumber);
    app.add_option("--r-max", opt.grid.r_max, "Largest odd multiplier r")->check(CLI::PositiveNumber);
    app.add_option("--k-max", opt.grid.k_max, "Largest multiplier k prime to 6")->check(CLI::PositiveNumber);
    app.add_option("--ell-max", opt.grid.ell_max, "Largest multiplier ell")->check(CLI::PositiveNumber);
    app.add_option("--only", opt.only, "Restrict to these keys")->delimiter(',');
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}}))
        ->option_text("table|json|csv");
    app.add_flag("--include-conjectures", opt.include_conjectures, "Also run conjecture-only families");
    app.add_flag("--primes-only", opt.grid.primes_only, "Restrict all-t families to prime t");
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Seed for sampled exact cross-checks");
    app.add_option("--out", opt.out_dir, "Also write the report into this directory");
    app.add_option("--max-order", opt.max_order, "Largest series order a family may request")
        ->check(CLI::PositiveNumber);
    app.add_option("--exact-samples", opt.exact_samples, "Grid points per family re-derived over Z");
    app.set_config("--config", "", "key=value file mirroring the long flags; flags win");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Verify eta-quotient identities and overpartition congruences", "ovpcheck"};
    app.require_subcommand(1);
    add_global_options(app, opt);

    auto* identities = app.add_subcommand("identities", "Check the built-in identity suite");
    auto* verify = app.add_subcommand("verify", "Check congruence families over their parameter grids");
    verify->add_option("keys", opt.keys, "Family keys, or 'all'")->required();
    auto* oracle = app.add_subcommand("oracle", "Compare generating functions with combinatorial counts");
    oracle->add_option("--t", opt.oracle_t, "Overpartition tuple counts to check");
    oracle->add_option("--opt", opt.oracle_opt, "Odd-part overpartition tuple counts to check");
    oracle->add_option("--upto", opt.upto, "Largest n");
    auto* replay = app.add_subcommand("replay", "Replay the binomial tables and the dissection steps");
    replay->add_option("--width", opt.width, "Only the table of this width")->check(CLI::IsMember({16U, 32U}));
    replay->add_option("--step", opt.step, "Only this dissection step");
    replay->add_option("--t", opt.t, "Step parameter t");
    replay->add_option("--i", opt.i, "Step parameter i");
    replay->add_option("--r", opt.r, "Step parameter r");
    auto* families = app.add_subcommand("families", "Dump the congruence family registry");
    for (auto* sub : {identities, verify, oracle, replay, families}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    opt.order_given = app.count("--order") > 0;

    const Output io{out, err};
    try {
        if (*identities) {
            return cmd_identities(opt, io);
        }
        if (*verify) {
            return cmd_verify(opt, io);
        }
        if (*oracle) {
            return cmd_oracle(opt, io);
        }
        if (*replay) {
            return cmd_replay(opt, io);
        }
        return cmd_families(opt, io);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace ovpcheck
