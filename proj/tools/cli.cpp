#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <span>

#include "arcwalk/errors.hpp"
#include "arcwalk/exact_two.hpp"
#include "arcwalk/genchi2.hpp"
#include "arcwalk/large_n.hpp"
#include "arcwalk/monte_carlo.hpp"
#include "arcwalk/recursion.hpp"
#include "arcwalk/support.hpp"
#include "arcwalk/version.hpp"

namespace arcwalk::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = count == 1 ? lo : lo + (hi - lo) * k / (count - 1);
    }
    return out;
}

void require_positive(int value, const char* what)
{
    if (value < 1) throw DomainError(std::string(what) + " must be >= 1");
}

WalkConfig config_of(const RunSpec& spec)
{
    return validate_config(spec.n_steps, spec.max_angle,
                           spec.extended ? AngleRange::extended : AngleRange::restricted);
}

Json base_meta(const RunSpec& spec)
{
    Json meta;
    meta["tool"] = "arcwalk";
    meta["version"] = std::string(version);
    meta["command"] = spec.command;
    return meta;
}

/// Previous-step law feeding the last propagation to N steps.
struct RecursionChain {
    std::unique_ptr<JointLaw> prev;
    std::optional<PolarGridDistribution> grid;
    Json normalization = Json::array();
};

RecursionChain build_chain(const WalkConfig& cfg, const GridOptions& opts)
{
    RecursionChain chain;
    int const n = cfg.n_steps();
    if (n < 2) throw DomainError("recursion needs N >= 2");
    auto note = [&chain](int steps, double factor) { chain.normalization.push_back({steps, factor}); };
    if (n == 2) {
        chain.prev = std::make_unique<ArcLaw>(cfg.with_steps(1));
    } else if (n == 3) {
        chain.prev = std::make_unique<ExactTwoStepLaw>(cfg.with_steps(2));
    } else {
        chain.prev = std::make_unique<PolarGridDistribution>(compute_joint(cfg.with_steps(n - 1), opts, note));
    }
    chain.grid = propagate(*chain.prev, opts);
    note(n, chain.grid->normalization());
    return chain;
}

GridOptions grid_options(const RunSpec& spec)
{
    GridOptions opts;
    opts.radial_nodes = spec.grid_r;
    opts.angle_nodes = spec.grid_theta;
    opts.phi_nodes = spec.phi_nodes;
    opts.threads = spec.threads;
    return opts;
}

Report exact2_report(const RunSpec& spec)
{
    require_positive(spec.points, "--points");
    WalkConfig const cfg = validate_config(2, spec.max_angle);
    ExactTwoStep const law(cfg);
    double const a = cfg.max_angle();
    Report rep;
    rep.meta = base_meta(spec);
    rep.meta["N"] = 2;
    rep.meta["a"] = a;
    rep.meta["formulas"] = "two-step closed form: radius cdf and pdf, angle cdf and pdf";

    Table angle{"angle", {"theta", "pdf_angle", "cdf_angle"}, {}};
    for (double t : linspace(-a, a, spec.points)) angle.rows.push_back({t, law.pdf_angle(t), law.cdf_angle(t)});
    Table radius{"radius", {"r", "pdf_radius", "cdf_radius"}, {}};
    double const lo = 2 * std::cos(a);
    for (int k = 0; k < spec.points; ++k) {
        double const r = lo + (2 - lo) * k / spec.points;
        radius.rows.push_back({r, law.pdf_radius(r), law.cdf_radius(r)});
    }
    rep.tables = {std::move(angle), std::move(radius)};
    return rep;
}

Report support_report(const RunSpec& spec)
{
    require_positive(spec.points, "--points");
    WalkConfig const cfg = validate_config(spec.n_steps, spec.max_angle);
    SupportBoundary const support(cfg);
    Report rep;
    rep.meta = base_meta(spec);
    rep.meta["N"] = cfg.n_steps();
    rep.meta["a"] = cfg.max_angle();
    rep.meta["r_min"] = support.min_radius();
    rep.meta["unique"] = support.radius_is_function_of_angle();
    if (cfg.n_steps() >= 2) rep.meta["uniqueness_threshold"] = uniqueness_threshold(cfg.n_steps());
    rep.meta["formulas"] = "support boundary parametrization, minimum radius, uniqueness threshold";

    Table inner{"inner", {"t", "radius_inner", "angle_inner"}, {}};
    for (double t : linspace(0, 1, spec.points + 1)) {
        auto const b = support.inner_boundary(t);
        inner.rows.push_back({t, b.point.radius, b.point.angle});
    }
    rep.tables = {std::move(inner)};
    return rep;
}

Report recurse_report(const RunSpec& spec)
{
    WalkConfig const cfg = validate_config(spec.n_steps, spec.max_angle);
    GridOptions const opts = grid_options(spec);
    RecursionChain chain = build_chain(cfg, opts);
    const PolarGridDistribution& grid = *chain.grid;

    Report rep;
    rep.meta = base_meta(spec);
    rep.meta["N"] = cfg.n_steps();
    rep.meta["a"] = cfg.max_angle();
    rep.meta["grid_r"] = opts.radial_nodes;
    rep.meta["grid_theta"] = opts.angle_nodes;
    rep.meta["phi_nodes"] = opts.phi_nodes;
    rep.meta["normalization"] = chain.normalization;
    rep.meta["formulas"] = "joint-density recursion over the last step angle; radius cdf by conditioning "
                           "on the last step; linearized angle cdf and pdf";

    auto const radii = grid.radii();
    auto const angles = grid.angles();
    Table joint{"joint", {"r", "theta", "pdf"}, {}};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = 0; j < angles.size(); ++j) joint.rows.push_back({radii[i], angles[j], grid.at(i, j)});
    }
    auto const mr = grid.marginal_radius();
    Table radius{"radius", {"r", "pdf", "cdf_grid", "cdf_recursive"}, {}};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        radius.rows.push_back({radii[i], mr[i], grid.cdf_radius(radii[i]), cdf_radius_recursive(radii[i], *chain.prev)});
    }
    auto const ma = grid.marginal_angle();
    Table angle{"angle", {"theta", "pdf", "cdf_grid", "pdf_approx", "cdf_approx"}, {}};
    for (std::size_t j = 0; j < angles.size(); ++j) {
        angle.rows.push_back({angles[j], ma[j], grid.cdf_angle(angles[j]), pdf_angle_approx(angles[j], *chain.prev),
                              cdf_angle_approx(angles[j], *chain.prev)});
    }
    rep.tables = {std::move(joint), std::move(radius), std::move(angle)};
    return rep;
}

Report approx_report(const RunSpec& spec)
{
    require_positive(spec.points, "--points");
    require_positive(spec.joint_points, "--joint-points");
    WalkConfig const cfg = config_of(spec);
    LargeNModel const model(cfg);
    double const n = cfg.n_steps();
    const MomentSet& m = model.moments();
    Report rep;
    rep.meta = base_meta(spec);
    rep.meta["N"] = cfg.n_steps();
    rep.meta["a"] = cfg.max_angle();
    rep.meta["extended"] = cfg.extended();
    rep.meta["mean_x"] = m.mean_x;
    rep.meta["var_x"] = m.var_x;
    rep.meta["var_y"] = m.var_y;
    rep.meta["truncate"] = spec.truncate;
    if (spec.truncate) rep.meta["support_mass"] = model.support_mass();
    rep.meta["formulas"] = "generalized chi-square law of the squared radius, normal-ratio angle law, "
                           "bivariate normal joint density";

    double const spread = std::sqrt(n * std::max(m.var_x, m.var_y));
    double const r_lo = std::max(0.0, n * m.mean_x - 8 * spread);
    double const r_hi = std::min(n, n * m.mean_x + 8 * spread);
    double const t_hi = std::min(cfg.max_angle(), 0.999 * pi / 2);

    Table radius{"radius", {"r", "pdf", "cdf"}, {}};
    for (double r : linspace(r_lo, r_hi, spec.points)) radius.rows.push_back({r, model.pdf_radius(r), model.cdf_radius(r)});
    Table angle{"angle", {"theta", "pdf", "cdf"}, {}};
    for (double t : linspace(-t_hi, t_hi, spec.points)) angle.rows.push_back({t, model.pdf_angle(t), model.cdf_angle(t)});
    Table joint{"joint", {"r", "theta", "pdf"}, {}};
    for (double r : linspace(r_lo, r_hi, spec.joint_points)) {
        for (double t : linspace(-t_hi, t_hi, spec.joint_points)) {
            joint.rows.push_back({r, t, model.joint_pdf(r, t, spec.truncate)});
        }
    }
    rep.tables = {std::move(radius), std::move(angle), std::move(joint)};
    return rep;
}

Report genchi2_report(const RunSpec& spec)
{
    if (spec.xs.empty()) throw DomainError("genchi2 needs at least one --x value");
    GeneralizedChiSquare const law({spec.weights, spec.dofs, spec.noncentralities, spec.gaussian_sd, spec.offset});
    Report rep;
    rep.meta = base_meta(spec);
    rep.meta["w"] = spec.weights;
    rep.meta["k"] = spec.dofs;
    rep.meta["lambda"] = spec.noncentralities;
    rep.meta["s"] = spec.gaussian_sd;
    rep.meta["m"] = spec.offset;
    rep.meta["formulas"] = "characteristic-function inversion (Gil-Pelaez)";
    Table values{"values", {"x", "cdf", "pdf"}, {}};
    for (double x : spec.xs) values.rows.push_back({x, law.cdf(x), law.pdf(x)});
    rep.tables = {std::move(values)};
    return rep;
}

Table histogram_table(const std::string& name, const Histogram& h)
{
    Table t{name, {"lo", "hi", "density", "std_error"}, {}};
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        t.rows.push_back({h.edges[b], h.edges[b + 1], h.density(b), h.density_std_error(b)});
    }
    return t;
}

/// Histogram ranges covering every possible endpoint.
std::pair<double, double> radius_range(const WalkConfig& cfg)
{
    if (cfg.extended()) return {0.0, static_cast<double>(cfg.n_steps())};
    return {min_radius(cfg), static_cast<double>(cfg.n_steps())};
}

std::pair<double, double> angle_range(const WalkConfig& cfg)
{
    double const a = cfg.extended() ? pi : cfg.max_angle();
    return {-a, a};
}

Json sampling_meta(const RunSpec& spec, const WalkConfig& cfg)
{
    Json meta = base_meta(spec);
    meta["N"] = cfg.n_steps();
    meta["a"] = cfg.max_angle();
    meta["seed"] = spec.seed;
    meta["count"] = spec.count;
    meta["bins"] = spec.bins;
    return meta;
}

Report sample_report(const RunSpec& spec)
{
    WalkConfig const cfg = config_of(spec);
    require_positive(spec.bins, "--bins");
    SampleBatch const batch = sample_walk(cfg, spec.count, spec.seed, spec.threads);
    Report rep;
    rep.meta = sampling_meta(spec, cfg);
    rep.meta["formulas"] = "sum of unit steps with uniform angles (counter-based generator)";
    if (spec.raw) {
        Table t{"samples", {"radius", "angle"}, {}};
        for (const auto& p : batch.samples) t.rows.push_back({p.radius, p.angle});
        rep.tables = {std::move(t)};
        return rep;
    }
    auto const [r_lo, r_hi] = radius_range(cfg);
    auto const [t_lo, t_hi] = angle_range(cfg);
    rep.tables = {histogram_table("radius_histogram", empirical_cdf(batch.radii()).histogram(spec.bins, r_lo, r_hi)),
                  histogram_table("angle_histogram", empirical_cdf(batch.angles()).histogram(spec.bins, t_lo, t_hi))};
    return rep;
}

struct Model {
    std::function<double(double)> cdf_radius;
    std::function<double(double)> pdf_radius;
    std::function<double(double)> cdf_angle;
    std::function<double(double)> pdf_angle;
    bool exact_ks = false;
};

Table overlay(const std::string& name, const Histogram& h, const std::function<double(double)>& pdf)
{
    Table t{name, {"center", "mc_density", "std_error", "model_density"}, {}};
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        t.rows.push_back({h.center(b), h.density(b), h.density_std_error(b), pdf(h.center(b))});
    }
    return t;
}

Json ks_json(const KsBracket& k)
{
    Json j;
    j["lower"] = k.lower;
    j["upper"] = k.upper;
    return j;
}

/// Linear interpolation in a table with ascending abscissae.
double interpolate(std::span<const double> xs, const std::vector<double>& ys, double x)
{
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto const k = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    double const t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return ys[k - 1] + t * (ys[k] - ys[k - 1]);
}

Report compare_report(const RunSpec& spec)
{
    require_positive(spec.bins, "--bins");
    if (spec.checkpoints < 2) throw DomainError("--checkpoints must be >= 2");
    WalkConfig const cfg = config_of(spec);
    Report rep;
    rep.meta = sampling_meta(spec, cfg);
    rep.meta["regime"] = spec.regime;
    rep.meta["checkpoints"] = spec.checkpoints;

    Model model;
    std::optional<ExactTwoStep> exact;
    std::optional<LargeNModel> large;
    RecursionChain chain;
    if (spec.regime == "exact2") {
        if (cfg.n_steps() != 2) throw DomainError("regime exact2 needs --n 2");
        exact.emplace(cfg);
        const ExactTwoStep& e = *exact;
        model = {[&e](double r) { return e.cdf_radius(std::max(r, 0.0)); },
                 [&e](double r) { return e.pdf_radius(std::max(r, 0.0)); },
                 [&e](double t) { return e.cdf_angle(t); }, [&e](double t) { return e.pdf_angle(t); }, true};
        rep.meta["formulas"] = "two-step closed form against Monte Carlo";
    } else if (spec.regime == "recurse") {
        if (cfg.extended()) throw DomainError("regime recurse needs a <= pi/2");
        chain = build_chain(cfg, grid_options(spec));
        const JointLaw& prev = *chain.prev;
        const PolarGridDistribution& g = *chain.grid;
        auto const mr = std::make_shared<std::vector<double>>(g.marginal_radius());
        auto const ma = std::make_shared<std::vector<double>>(g.marginal_angle());
        model = {[&prev](double r) { return cdf_radius_recursive(std::max(r, 0.0), prev); },
                 [&g, mr](double r) { return interpolate(g.radii(), *mr, r); },
                 [&g](double t) { return g.cdf_angle(t); },
                 [&g, ma](double t) { return interpolate(g.angles(), *ma, t); }, false};
        rep.meta["grid_r"] = spec.grid_r;
        rep.meta["grid_theta"] = spec.grid_theta;
        rep.meta["phi_nodes"] = spec.phi_nodes;
        rep.meta["normalization"] = chain.normalization;
        rep.meta["formulas"] = "joint-density recursion and conditioned radius cdf against Monte Carlo";
    } else if (spec.regime == "approx") {
        large.emplace(cfg);
        const LargeNModel& l = *large;
        double const edge = 0.999 * pi / 2;
        model = {[&l](double r) { return l.cdf_radius(std::max(r, 0.0)); },
                 [&l](double r) { return l.pdf_radius(std::max(r, 0.0)); },
                 [&l, edge](double t) { return l.cdf_angle(std::clamp(t, -edge, edge)); },
                 [&l, edge](double t) { return std::abs(t) < edge ? l.pdf_angle(t) : 0.0; }, false};
        rep.meta["formulas"] = "large-N generalized chi-square and normal-ratio laws against Monte Carlo";
    } else {
        throw DomainError("unknown regime '" + spec.regime + "' (expected exact2, recurse or approx)");
    }

    SampleBatch const batch = sample_walk(cfg, spec.count, spec.seed, spec.threads);
    auto const emp_r = empirical_cdf(batch.radii());
    auto const emp_t = empirical_cdf(batch.angles());
    auto ks = [&](const EmpiricalDistribution& emp, const std::function<double(double)>& cdf) {
        if (model.exact_ks) {
            double const d = ks_distance(emp, cdf);
            return KsBracket{d, d};
        }
        return ks_distance_bracket(emp, cdf, spec.checkpoints);
    };
    rep.summary["ks_radius"] = ks_json(ks(emp_r, model.cdf_radius));
    rep.summary["ks_angle"] = ks_json(ks(emp_t, model.cdf_angle));
    if (spec.regime == "recurse") {
        const JointLaw& prev = *chain.prev;
        rep.summary["ks_angle_linearized"] =
            ks_json(ks_distance_bracket(emp_t, [&prev](double t) { return cdf_angle_approx(t, prev); }, spec.checkpoints));
    }

    auto const [r_lo, r_hi] = radius_range(cfg);
    auto const [t_lo, t_hi] = angle_range(cfg);
    rep.tables = {overlay("radius_overlay", emp_r.histogram(spec.bins, r_lo, r_hi), model.pdf_radius),
                  overlay("angle_overlay", emp_t.histogram(spec.bins, t_lo, t_hi), model.pdf_angle)};
    return rep;
}

std::string meta_value(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void write_table_rows(const Table& t, std::ostream& out)
{
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
    }
}

void write_header(const Report& rep, std::ostream& out)
{
    for (const auto& [key, value] : rep.meta.items()) out << "# " << key << ": " << meta_value(value) << '\n';
    for (const auto& [key, value] : rep.summary.items()) out << "# " << key << ": " << meta_value(value) << '\n';
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    return f;
}

}  // namespace

Report build_report(const RunSpec& spec)
{
    if (spec.command == "exact2") return exact2_report(spec);
    if (spec.command == "support") return support_report(spec);
    if (spec.command == "recurse") return recurse_report(spec);
    if (spec.command == "approx") return approx_report(spec);
    if (spec.command == "genchi2") return genchi2_report(spec);
    if (spec.command == "sample") return sample_report(spec);
    if (spec.command == "compare") return compare_report(spec);
    throw DomainError("unknown command '" + spec.command + "'");
}

void write_csv(const Report& rep, std::ostream& out)
{
    write_header(rep, out);
    for (const Table& t : rep.tables) {
        if (rep.tables.size() > 1) out << "# table: " << t.name << '\n';
        write_table_rows(t, out);
    }
}

void write_json(const Report& rep, std::ostream& out)
{
    // Metadata indented, one table row per line.
    out << "{\n  \"meta\": " << rep.meta.dump() << ",\n";
    if (!rep.summary.empty()) out << "  \"summary\": " << rep.summary.dump() << ",\n";
    out << "  \"tables\": {";
    for (std::size_t k = 0; k < rep.tables.size(); ++k) {
        const Table& t = rep.tables[k];
        out << (k ? ",\n" : "\n") << "    " << Json(t.name).dump() << ": {\"columns\": " << Json(t.columns).dump()
            << ", \"rows\": [";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            out << (r ? ",\n      " : "\n      ") << Json(t.rows[r]).dump();
        }
        out << "\n    ]}";
    }
    out << "\n  }\n}\n";
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    try {
        Report const rep = build_report(spec);
        if (spec.format == Format::json) {
            if (spec.output) {
                auto f = open_output(*spec.output);
                write_json(rep, f);
            } else {
                write_json(rep, out);
            }
        } else if (spec.output && rep.tables.size() > 1) {
            // One file per table: <output>_<table>.csv
            for (const Table& t : rep.tables) {
                auto f = open_output(*spec.output + "_" + t.name + ".csv");
                write_header(rep, f);
                write_table_rows(t, f);
            }
        } else if (spec.output) {
            auto f = open_output(*spec.output);
            write_csv(rep, f);
        } else {
            write_csv(rep, out);
        }
        return 0;
    } catch (const ConvergenceError& e) {
        err << "arcwalk: genchi2 inversion failed: " << e.what() << '\n';
        return 3;
    } catch (const GridError& e) {
        err << "arcwalk: numeric recursion failed: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "arcwalk: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "arcwalk: " << e.what() << '\n';
        return 2;
    }
}

namespace {

/// Turns a flat JSON object into command-line tokens, skipping keys whose
/// flag the user already passed.
std::vector<std::string> config_tokens(const Json& cfg, const std::vector<std::string>& user_args)
{
    if (!cfg.is_object()) throw CLI::ValidationError("--config", "config file must hold a JSON object");
    std::vector<std::string> out;
    for (const auto& [key, value] : cfg.items()) {
        std::string const flag = "--" + key;
        bool const given = std::any_of(user_args.begin(), user_args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (given) continue;
        auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back(flag);
        } else if (value.is_array()) {
            out.push_back(flag);
            for (const auto& v : value) out.push_back(scalar(v));
        } else {
            out.push_back(flag);
            out.push_back(scalar(value));
        }
    }
    return out;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunSpec spec;
    CLI::App app{"Distributions of constrained 2-D random walks: exact, numerical, large-N and Monte Carlo",
                 "arcwalk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    std::string format = "csv";
    std::string output;
    std::string config_path;

    auto walk_opts = [&](CLI::App* sub, bool with_n) {
        if (with_n) sub->add_option("--n", spec.n_steps, "number of steps N")->capture_default_str();
        sub->add_option("--a", spec.max_angle, "half-width a of the step-angle law")->capture_default_str();
    };
    auto io_opts = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", output, "output file (CSV with several tables: file prefix)");
        sub->add_option("--config", config_path, "JSON file with flag values; explicit flags win");
    };
    auto grid_opts = [&](CLI::App* sub) {
        sub->add_option("--grid-r", spec.grid_r, "radial grid nodes")->capture_default_str();
        sub->add_option("--grid-theta", spec.grid_theta, "angular grid nodes")->capture_default_str();
        sub->add_option("--phi-nodes", spec.phi_nodes, "Gauss-Legendre nodes per step-angle piece")
            ->capture_default_str();
        sub->add_option("--threads", spec.threads, "worker threads (0: ARCWALK_THREADS or all cores)");
    };
    auto sample_opts = [&](CLI::App* sub) {
        sub->add_option("--count", spec.count, "Monte-Carlo samples")->capture_default_str();
        sub->add_option("--seed", spec.seed, "generator seed")->capture_default_str();
        sub->add_option("--bins", spec.bins, "histogram bins")->capture_default_str();
        sub->add_flag("--extended", spec.extended, "allow a up to pi");
    };

    auto* exact2 = app.add_subcommand("exact2", "closed-form two-step radius and angle laws");
    walk_opts(exact2, false);
    exact2->add_option("--points", spec.points, "table rows")->capture_default_str();
    io_opts(exact2);

    auto* support = app.add_subcommand("support", "support boundary, minimum radius and uniqueness");
    walk_opts(support, true);
    support->add_option("--points", spec.points, "boundary samples")->capture_default_str();
    io_opts(support);

    auto* recurse = app.add_subcommand("recurse", "grid recursion for the joint density and marginals");
    walk_opts(recurse, true);
    grid_opts(recurse);
    io_opts(recurse);

    auto* approx = app.add_subcommand("approx", "large-N Gaussian approximations");
    walk_opts(approx, true);
    approx->add_option("--points", spec.points, "rows of the radius and angle tables")->capture_default_str();
    approx->add_option("--joint-points", spec.joint_points, "joint grid size per axis")->capture_default_str();
    approx->add_flag("--truncate", spec.truncate, "restrict the joint density to the support");
    approx->add_flag("--extended", spec.extended, "allow a up to pi");
    io_opts(approx);

    auto* genchi2 = app.add_subcommand("genchi2", "generalized chi-square CDF and PDF");
    genchi2->add_option("--w", spec.weights, "weights")->required();
    genchi2->add_option("--k", spec.dofs, "degrees of freedom")->required();
    genchi2->add_option("--lambda", spec.noncentralities, "noncentralities")->required();
    genchi2->add_option("--s", spec.gaussian_sd, "sd of the added normal term");
    genchi2->add_option("--m", spec.offset, "offset");
    genchi2->add_option("--x", spec.xs, "evaluation points")->required();
    io_opts(genchi2);

    auto* sample = app.add_subcommand("sample", "Monte-Carlo endpoints or histograms");
    walk_opts(sample, true);
    sample_opts(sample);
    sample->add_option("--threads", spec.threads, "worker threads (0: ARCWALK_THREADS or all cores)");
    sample->add_flag("--raw", spec.raw, "emit every endpoint instead of histograms");
    io_opts(sample);

    auto* compare = app.add_subcommand("compare", "analytic regime against Monte Carlo");
    walk_opts(compare, true);
    sample_opts(compare);
    grid_opts(compare);
    compare->add_option("--regime", spec.regime, "exact2, recurse or approx")
        ->check(CLI::IsMember({"exact2", "recurse", "approx"}))
        ->capture_default_str();
    compare->add_option("--checkpoints", spec.checkpoints, "CDF evaluations for the KS bracket")
        ->capture_default_str();
    io_opts(compare);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        // Splice --config values in right after the subcommand name.
        auto cfg_it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
            return a == "--config" || a.rfind("--config=", 0) == 0;
        });
        if (cfg_it != args.end()) {
            std::string path;
            if (*cfg_it == "--config") {
                if (cfg_it + 1 == args.end()) throw CLI::ArgumentMismatch("--config needs a file path");
                path = *(cfg_it + 1);
                args.erase(cfg_it, cfg_it + 2);
            } else {
                path = cfg_it->substr(std::string("--config=").size());
                args.erase(cfg_it);
            }
            std::ifstream f(path);
            if (!f) throw CLI::FileError::Missing(path);
            Json cfg;
            try {
                cfg = Json::parse(f);
            } catch (const Json::parse_error& e) {
                throw CLI::ValidationError("--config", e.what());
            }
            auto sub_it = std::find_if(args.begin(), args.end(), [&app](const std::string& a) {
                return app.get_subcommand_ptr(a) != nullptr;
            });
            if (sub_it == args.end()) throw CLI::RequiredError("a subcommand");
            auto tokens = config_tokens(cfg, args);
            args.insert(sub_it + 1, tokens.begin(), tokens.end());
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version << '\n';
        return 0;
    } catch (const CLI::Error& e) {
        err << "arcwalk: " << e.what() << "\n";
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 2;
    }

    spec.command = app.get_subcommands().front()->get_name();
    if (spec.command == "compare" && app.get_subcommands().front()->count("--format") == 0) format = "json";
    spec.format = format == "json" ? Format::json : Format::csv;
    if (!output.empty()) spec.output = output;
    return run(spec, out, err);
}

}  // namespace arcwalk::cli
