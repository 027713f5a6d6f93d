#include "addenergy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "addenergy/constructions.hpp"
#include "addenergy/errors.hpp"
#include "addenergy/group_density.hpp"
#include "addenergy/product_cube.hpp"
#include "addenergy/serialize.hpp"
#include "addenergy/spectrum.hpp"
#include "addenergy/verify.hpp"

namespace addenergy::cli {

using nlohmann::json;

namespace {

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("ADDENERGY_BUDGET")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw PreconditionError("ADDENERGY_BUDGET must be a positive integer");
    }
    return RunConfig{}.work_budget;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    require(out.good(), "cannot write " + path);
    out << content;
}

IntSet input_set(const std::string& inline_set, const std::string& file)
{
    require(inline_set.empty() != file.empty(), "give exactly one of --set or --file");
    if (!file.empty()) {
        return int_set_from_json(read_json_file(file));
    }
    return parse_int_list(inline_set);
}

json strings(const std::vector<EnergyValue>& values)
{
    auto j = json::array();
    for (const auto& v : values) {
        j.push_back(v.get_str());
    }
    return j;
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

struct Options {
    RunConfig config;
    // energy / profile
    std::string set, file;
    // construct
    std::uint64_t n = 0;
    std::string target;
    std::uint64_t base = 10;
    std::size_t iterations = BuildOptions{}.local_search_iterations;
    // spectrum
    std::uint64_t diameter = 0;
    std::string plot;
    // product
    std::vector<std::string> factor_files;
    std::string alphabet;
    bool oracle = false;
    // ratio-chain / min-ratio
    std::uint64_t w = 0;
    std::uint64_t alphabet_size = 0;
    std::string out_path;
    // sidon / density-curve
    std::uint64_t p = 0;
    bool check = false;
    std::string csv_path;
    // verify
    std::string suite = "all";
    std::string verify_format = "table";
};

int cmd_energy(const Options& o, std::ostream& out)
{
    const IntSet a = input_set(o.set, o.file);
    emit(out, {{"energy", energy_oracle(a).get_str()}});
    return kSuccess;
}

int cmd_profile(const Options& o, std::ostream& out)
{
    const IntSet a = input_set(o.set, o.file);
    emit(out, to_json(difference_profile(a)));
    return kSuccess;
}

int cmd_construct(const Options& o, std::ostream& out)
{
    BigInt target;
    require(target.set_str(o.target, 10) == 0, "--target must be a decimal integer");
    BuildOptions bo;
    bo.seed = o.config.seed;
    bo.base = static_cast<unsigned long>(o.base);
    bo.local_search_iterations = o.iterations;
    const BuildResult r = build_with_target_energy(o.n, target, bo);
    json j{
        {"n", r.n},
        {"target", r.target.get_str()},
        {"reached", r.reached},
        {"energy", r.energy.get_str()},
        {"witness", to_json(r.witness)},
        {"stages",
         {{"j", r.stages.j},
          {"k", r.stages.k},
          {"swaps", r.stages.swaps},
          {"local_search_moves", r.stages.local_search_moves}}},
        {"verified", r.reached},
    };
    emit(out, j);
    return r.reached ? kSuccess : kTargetUnreached;
}

int cmd_spectrum(const Options& o, std::ostream& out)
{
    const std::uint64_t d = o.diameter ? o.diameter : 3 * o.n * o.n;
    SpectrumOptions so;
    so.work_budget = o.config.work_budget;
    so.threads = o.config.threads;
    const EnergySpectrum s = enumerate_spectrum(o.n, d, so);
    const auto gaps = spectrum_gaps(s);

    if (o.config.output_format == "csv") {
        out << "energy,witness,gap_to_next\n";
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            const auto& e = s.entries[i];
            std::string w;
            for (const auto& x : e.witness) {
                w += (w.empty() ? "" : " ") + x.get_str();
            }
            out << e.energy.get_str() << ',' << w << ',' << (i < gaps.size() ? gaps[i].gap.get_str() : "") << '\n';
        }
    } else {
        json entries = json::array();
        for (const auto& e : s.entries) {
            entries.push_back({{"energy", e.energy.get_str()}, {"witness", to_json(e.witness)}});
        }
        json gap_list = json::array();
        for (const auto& g : gaps) {
            gap_list.push_back(
                {{"from", g.from.get_str()}, {"to", g.to.get_str()}, {"gap", g.gap.get_str()}, {"flagged", g.flagged}});
        }
        emit(out, {{"n", s.n},
                   {"diameter_bound", s.diameter_bound},
                   {"complete", s.complete},
                   {"visited", s.visited},
                   {"residue_check", residue_check(s)},
                   {"entries", entries},
                   {"gaps", gap_list}});
    }
    if (o.config.plot_path) {
        write_file(*o.config.plot_path, spectrum_svg(s));
    }
    return kSuccess;
}

int cmd_product(const Options& o, std::ostream& out)
{
    require(!o.factor_files.empty(), "--factors needs at least one file");
    std::vector<IntSet> factors;
    BigInt top = 1;
    for (const auto& f : o.factor_files) {
        factors.push_back(int_set_from_json(read_json_file(f)));
        require(!factors.back().empty(), f + ": factor must be nonempty");
        top = std::max(top, BigInt(factors.back().max() + 1));
    }
    BigInt alphabet = top;
    if (!o.alphabet.empty()) {
        require(alphabet.set_str(o.alphabet, 10) == 0, "--alphabet must be a decimal integer");
    }
    const ProductSet p(alphabet, factors);
    json j{{"alphabet", p.alphabet().get_str()},
           {"dimension", p.dimension()},
           {"size", p.cardinality().get_str()},
           {"energy", product_energy(p).get_str()}};
    if (o.oracle) {
        j["oracle_energy"] = product_energy_oracle(p).get_str();
    }
    emit(out, j);
    return kSuccess;
}

int cmd_ratio_chain(const Options& o, std::ostream& out)
{
    BuildOptions bo;
    bo.seed = o.config.seed;
    const RatioChain c = ratio_chain(o.w, o.n, bo);
    json ratios = json::array();
    bool within = true;
    for (const auto& q : c.ratios) {
        ratios.push_back(to_json(q));
        within = within && q > 1 && q <= c.bound;
    }
    json factor_sets = json::array();
    std::vector<EnergyValue> factor_energy;
    for (const auto& a : c.factor_sets) {
        factor_sets.push_back(to_json(a));
        factor_energy.push_back(energy_oracle(a));
    }
    json j{{"w", c.w},
           {"n", c.n},
           {"length", c.sets.size()},
           {"target_length", c.target_length},
           {"start_target", c.start_target.get_str()},
           {"set_size", c.sets.empty() ? std::string("0") : c.sets.front().cardinality().get_str()},
           {"bound", to_json(c.bound)},
           {"all_within_bound", within},
           {"factor_energies", strings(factor_energy)},
           {"energies", strings(c.energies)},
           {"ratios", ratios},
           {"factor_sets", factor_sets},
           {"misses", strings(c.misses)}};
    if (!o.out_path.empty()) {
        write_file(o.out_path, j.dump(2) + "\n");
    }
    emit(out, j);
    return c.sets.empty() ? kTargetUnreached : kSuccess;
}

int cmd_min_ratio(const Options& o, std::ostream& out)
{
    const MinRatioReport r = min_ratio_empirical(o.alphabet_size, o.n, o.w);
    emit(out, {{"M", o.alphabet_size},
               {"w", o.w},
               {"n", o.n},
               {"factor_energies", strings(r.factor_energies)},
               {"products", strings(r.products)},
               {"degenerate", !r.min_ratio.has_value()},
               {"min_ratio", r.min_ratio ? to_json(*r.min_ratio) : json(nullptr)}});
    return kSuccess;
}

int cmd_sidon(const Options& o, std::ostream& out)
{
    const GroupSet s = sidon_parabola(o.p);
    json elems = json::array();
    for (const auto& x : s.elements()) {
        elems.push_back(x);
    }
    const BigInt pp(static_cast<unsigned long>(o.p));
    json j{{"p", o.p},
           {"group", s.group().cyclic_orders()},
           {"size", s.size()},
           {"elements", elems},
           {"energy", group_energy(s).get_str()},
           {"expected_energy", BigInt(2 * pp * pp - pp).get_str()}};
    if (o.check) {
        j["is_sidon"] = is_sidon(s);
        j["cauchy_bound"] = cauchy_bound_check(s);
    }
    emit(out, j);
    return kSuccess;
}

int cmd_density_curve(const Options& o, std::ostream& out)
{
    const auto points = density_curve(static_cast<unsigned>(o.n), o.p, o.config.threads);
    std::ostringstream csv;
    csv << "k,alpha,delta,bound_gap\n";
    json list = json::array();
    for (const auto& t : points) {
        const std::string alpha_dec = decimal_string(Decimal(t.alpha.get_num().get_str()) / Decimal(t.alpha.get_den().get_str()));
        csv << t.k << ',' << alpha_dec << ',' << decimal_string(t.delta) << ',' << decimal_string(t.bound_gap) << '\n';
        list.push_back({{"k", t.k},
                        {"size", t.size.get_str()},
                        {"energy", t.energy.get_str()},
                        {"alpha", to_json(t.alpha)},
                        {"alpha_decimal", alpha_dec},
                        {"delta", decimal_string(t.delta)},
                        {"bound", decimal_string(t.bound)},
                        {"bound_gap", decimal_string(t.bound_gap)},
                        {"cauchy_holds", t.cauchy_holds}});
    }
    if (!o.csv_path.empty()) {
        write_file(o.csv_path, csv.str());
    }
    if (o.config.output_format == "csv") {
        out << csv.str();
    } else {
        emit(out, {{"n", o.n}, {"p", o.p}, {"points", list}});
    }
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto results = run_verification(o.suite, o.config.seed);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
    }
    if (o.verify_format == "json") {
        json list = json::array();
        for (const auto& r : results) {
            list.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        emit(out, {{"suite", o.suite}, {"passed", all}, {"results", list}});
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(14) << r.suite << r.name;
            if (!r.passed) {
                out << "  (" << r.detail << ')';
            }
            out << '\n';
        }
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kSuccess : kPreconditionFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    try {
        o.config.work_budget = default_budget();
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionFailed;
    }

    CLI::App app{"Additive energy toolkit"};
    app.require_subcommand(1);
    app.add_option("--budget", o.config.work_budget, "maximum enumeration work")->check(CLI::PositiveNumber);
    app.add_option("--threads", o.config.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", o.config.seed, "seed for randomized fallback search");

    auto set_opts = [&](CLI::App* sub) {
        sub->add_option("--set", o.set, "comma-separated integers");
        sub->add_option("--file", o.file, "JSON array of decimal strings");
    };
    auto common = [&](CLI::App* sub) {
        // global flags are also accepted after the subcommand
        sub->add_option("--budget", o.config.work_budget)->check(CLI::PositiveNumber);
        sub->add_option("--threads", o.config.threads)->check(CLI::Range(1u, 256u));
        sub->add_option("--seed", o.config.seed);
    };

    auto* energy = app.add_subcommand("energy", "additive energy of a set");
    set_opts(energy);
    auto* profile = app.add_subcommand("profile", "difference profile of a set");
    set_opts(profile);

    auto* construct = app.add_subcommand("construct", "build a set with a prescribed energy");
    construct->add_option("--n", o.n, "set size")->required();
    construct->add_option("--target", o.target, "target energy")->required();
    construct->add_option("--base", o.base, "lacunary base")->check(CLI::Range(std::uint64_t{10}, std::uint64_t{1'000'000}));
    construct->add_option("--iterations", o.iterations, "local search iterations");
    common(construct);

    auto* spectrum = app.add_subcommand("spectrum", "enumerate attainable energies");
    spectrum->add_option("--n", o.n, "set size")->required();
    spectrum->add_option("--diameter", o.diameter, "diameter bound (default 3n^2)");
    spectrum->add_option("--format", o.config.output_format)->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("--plot", o.plot, "write an SVG gap chart");
    common(spectrum);

    auto* product = app.add_subcommand("product", "energy of a concatenation product");
    product->add_option("--factors", o.factor_files, "comma-separated factor JSON files")->required()->delimiter(',');
    product->add_option("--alphabet", o.alphabet, "alphabet size M (default max element + 1)");
    product->add_flag("--oracle", o.oracle, "also count over the materialized product");

    auto* chain = app.add_subcommand("ratio-chain", "equal-size product sets with energy ratios near 1");
    chain->add_option("--w", o.w, "factor size")->required();
    chain->add_option("--n", o.n, "dimension")->required();
    chain->add_option("--out", o.out_path, "also write the chain JSON here");
    common(chain);

    auto* min_ratio = app.add_subcommand("min-ratio", "smallest consecutive energy ratio in [M]^n");
    min_ratio->add_option("--M", o.alphabet_size, "alphabet size")->required();
    min_ratio->add_option("--w", o.w, "factor size")->required();
    min_ratio->add_option("--n", o.n, "dimension")->required();

    auto* sidon = app.add_subcommand("sidon", "parabola Sidon set in Z_p x Z_p");
    sidon->add_option("--p", o.p, "odd prime")->required();
    sidon->add_flag("--check", o.check, "verify the Sidon property and the Cauchy bound");

    auto* density = app.add_subcommand("density-curve", "density vs energy tradeoff points");
    density->add_option("--n", o.n, "number of group factors")->required();
    density->add_option("--p", o.p, "odd prime")->required();
    density->add_option("--csv", o.csv_path, "write k,alpha,delta,bound_gap");
    density->add_option("--format", o.config.output_format)->check(CLI::IsMember({"json", "csv"}));
    common(density);

    auto* verify = app.add_subcommand("verify", "run the invariant battery");
    verify->add_option("--suite", o.suite, "all or one module")->check(CLI::IsMember([] {
        auto s = verification_suites();
        s.push_back("all");
        return s;
    }()));
    verify->add_option("--format", o.verify_format)->check(CLI::IsMember({"json", "table"}));
    common(verify);

    std::vector<std::string> argv_store{"addenergy"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionFailed;
    }

    o.config.subcommand = app.get_subcommands().front()->get_name();
    if (!o.plot.empty()) {
        o.config.plot_path = o.plot;
    }

    try {
        const auto& name = o.config.subcommand;
        if (name == "energy") return cmd_energy(o, out);
        if (name == "profile") return cmd_profile(o, out);
        if (name == "construct") return cmd_construct(o, out);
        if (name == "spectrum") return cmd_spectrum(o, out);
        if (name == "product") return cmd_product(o, out);
        if (name == "ratio-chain") return cmd_ratio_chain(o, out);
        if (name == "min-ratio") return cmd_min_ratio(o, out);
        if (name == "sidon") return cmd_sidon(o, out);
        if (name == "density-curve") return cmd_density_curve(o, out);
        if (name == "verify") return cmd_verify(o, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionFailed;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    }
    err << "error: unknown subcommand\n";
    return kPreconditionFailed;
}

} // namespace addenergy::cli
