#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abc2d/bound.hpp"
#include "abc2d/errors.hpp"
#include "abc2d/parallel.hpp"
#include "abc2d/reduction.hpp"
#include "abc2d/scatter.hpp"
#include "abc2d/verify.hpp"

namespace abc2d::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    double mu = 1.0;
    double kappa = 1.0;
    double alpha = 0.0;
    bool raw = false;
    double m1 = 1.0, m2 = 1.0;
    double q1 = 0.0, q2 = 0.0;
    double phi1 = 0.0, phi2 = 0.0;
    std::string format = "csv";
    std::string out_path;
    int jobs = 1;
};

struct ScatterArgs {
    std::string flux_case;
    std::optional<double> k;
    std::optional<double> beta;
    std::optional<double> energy;
};

void add_output_options(CLI::App* sub, Common& c, const std::vector<std::string>& formats)
{
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_problem_options(CLI::App* sub, Common& c)
{
    sub->add_option("--mu", c.mu, "Reduced mass");
    sub->add_option("--kappa", c.kappa, "Coulomb strength, positive for attraction");
    sub->add_option("--alpha", c.alpha, "Dimensionless flux q Phi / 2 pi");
    auto* raw = sub->add_flag("--raw", c.raw, "Build the problem from particle data (--m1 ... --phi2)");
    for (auto [name, ptr] : {std::pair{"--m1", &c.m1}, {"--m2", &c.m2}, {"--q1", &c.q1},
                             {"--q2", &c.q2}, {"--phi1", &c.phi1}, {"--phi2", &c.phi2}})
        sub->add_option(name, *ptr)->needs(raw);
}

void add_scatter_options(CLI::App* sub, ScatterArgs& s)
{
    sub->add_option("--case", s.flux_case, "Flux case (default: from --alpha)")
        ->check(CLI::IsMember({"coulomb", "integer", "half"}));
    auto* k = sub->add_option("--k", s.k, "Wavenumber");
    auto* beta = sub->add_option("--beta", s.beta, "mu kappa / k");
    auto* e = sub->add_option("--energy", s.energy, "Scattering energy (uses --mu, --kappa)");
    e->excludes(k)->excludes(beta);
}

RelativeProblem build_problem(const Common& c)
{
    if (c.raw)
        return reduce_two_body({c.m1, c.m2, c.q1, c.q2, c.phi1, c.phi2});
    return make_relative_problem(c.mu, c.kappa, c.alpha);
}

FluxCase parse_case(const std::string& name)
{
    if (name == "coulomb")
        return FluxCase::CoulombOnly;
    if (name == "integer")
        return FluxCase::IntegerFlux;
    return FluxCase::HalfInteger;
}

ScatteringParams build_scattering(const Common& c, const ScatterArgs& s)
{
    const RelativeProblem problem = build_problem(c);
    if (s.energy) {
        const ScatteringParams p = scattering_params(problem, *s.energy);
        if (!s.flux_case.empty() && parse_case(s.flux_case) != p.flux_case)
            throw UsageError("--case " + s.flux_case + " contradicts the flux of the problem (" +
                             std::string(to_string(p.flux_case)) + ")");
        return p;
    }
    if (!s.k || !s.beta)
        throw UsageError("give either --energy or both --k and --beta");
    if (!s.flux_case.empty())
        return make_scattering_params(*s.k, *s.beta, parse_case(s.flux_case));
    // Flux case from alpha: energy-independent, so any positive E works.
    const FluxCase fc = scattering_params(problem, 1.0).flux_case;
    return make_scattering_params(*s.k, *s.beta, fc);
}

Json problem_json(const RelativeProblem& p)
{
    Json j;
    j["mu"] = p.reduced_mass;
    j["kappa"] = p.kappa;
    j["alpha"] = p.alpha_flux;
    j["m0"] = p.m0;
    j["nu"] = p.nu;
    j["case"] = std::string(to_string(p.spectral_case()));
    return j;
}

Json scattering_json(const ScatteringParams& p)
{
    Json j;
    j["k"] = p.k;
    j["beta"] = p.beta;
    j["case"] = std::string(to_string(p.flux_case));
    return j;
}

std::string scalar_text(const Json& v)
{
    if (v.is_number_float())
        return format_number(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

// One "# key=value" line per parameter.
void write_csv_header(std::ostream& os, const std::string& command, const Json& params)
{
    os << "# command=" << command << '\n';
    for (const auto& [key, value] : params.items())
        os << "# " << key << '=' << scalar_text(value) << '\n';
}

std::vector<double> symmetric_grid(double half_width, int n)
{
    if (n < 1)
        throw UsageError("grid sizes must be positive");
    std::vector<double> out(n, 0.0);
    if (n == 1)
        return out;
    for (int j = 0; j < n; ++j)
        out[j] = half_width * static_cast<double>(2 * j - (n - 1)) / static_cast<double>(n - 1);
    return out;
}

std::string run_spectrum(const Common& c, int levels)
{
    const RelativeProblem problem = build_problem(c);
    const auto spec = spectrum(problem, levels);

    Json params = problem_json(problem);
    params["levels"] = levels;
    std::ostringstream os;
    if (c.format == "json") {
        Json doc;
        doc["command"] = "spectrum";
        doc["parameters"] = params;
        doc["levels"] = Json::array();
        for (std::size_t i = 0; i < spec.size(); ++i) {
            Json lv;
            lv["index"] = i;
            lv["energy"] = spec[i].energy;
            lv["branch"] = std::string(to_string(spec[i].branch));
            lv["N"] = spec[i].principal_n;
            lv["degeneracy"] = spec[i].degeneracy;
            lv["members"] = Json::array();
            for (const auto& q : spec[i].members)
                lv["members"].push_back({q.n_r, q.m});
            doc["levels"].push_back(lv);
        }
        os << doc.dump(2) << '\n';
        return os.str();
    }
    write_csv_header(os, "spectrum", params);
    os << "index,energy,branch,N,degeneracy,members\n";
    for (std::size_t i = 0; i < spec.size(); ++i) {
        os << i << ',' << format_number(spec[i].energy) << ',' << to_string(spec[i].branch) << ','
           << spec[i].principal_n << ',' << spec[i].degeneracy << ',';
        for (std::size_t k = 0; k < spec[i].members.size(); ++k)
            os << (k ? " " : "") << spec[i].members[k].n_r << ':' << spec[i].members[k].m;
        os << '\n';
    }
    return os.str();
}

std::string run_xsection(const Common& c, const ScatterArgs& s, int n_theta, double theta_min)
{
    if (n_theta < 1)
        throw UsageError("--thetas must be positive");
    if (!(theta_min >= kForwardCone) || !(theta_min < std::numbers::pi))
        throw UsageError("--theta-min must lie in [1e-3, pi)");
    const ScatteringParams p = build_scattering(c, s);

    // theta_j = theta_min + (2 pi - 2 theta_min) j / n; an even n hits pi.
    std::vector<CrossSectionSample> rows(n_theta);
    const double span = 2.0 * std::numbers::pi - 2.0 * theta_min;
    parallel_for(rows.size(), c.jobs, [&](std::size_t j) {
        rows[j] = cross_section(p, theta_min + span * static_cast<double>(j) / n_theta);
    });

    Json params = scattering_json(p);
    params["thetas"] = n_theta;
    params["theta_min"] = theta_min;
    std::ostringstream os;
    if (c.format == "json") {
        Json doc;
        doc["command"] = "xsection";
        doc["parameters"] = params;
        doc["samples"] = Json::array();
        for (const auto& r : rows)
            doc["samples"].push_back({{"theta", r.theta},
                                      {"sigma_total", r.sigma_total},
                                      {"sigma_coulomb", r.sigma_coulomb},
                                      {"sigma_cross", r.sigma_cross}});
        os << doc.dump(2) << '\n';
        return os.str();
    }
    write_csv_header(os, "xsection", params);
    os << "theta,sigma_total,sigma_coulomb,sigma_cross\n";
    for (const auto& r : rows)
        os << format_number(r.theta) << ',' << format_number(r.sigma_total) << ','
           << format_number(r.sigma_coulomb) << ',' << format_number(r.sigma_cross) << '\n';
    return os.str();
}

struct FieldArgs {
    std::string kind = "bound";
    int n_r = 0;
    int m = 0;
    double extent = 5.0;
    int nx = 41;
    int ny = 41;
};

std::string run_field(const Common& c, const ScatterArgs& s, const FieldArgs& f)
{
    if (!(f.extent > 0.0))
        throw UsageError("--extent must be positive");
    const std::vector<double> xs = symmetric_grid(f.extent, f.nx);
    const std::vector<double> ys = symmetric_grid(f.extent, f.ny);
    std::vector<Complex> values(xs.size() * ys.size());

    Json params;
    std::string cx = "x";
    std::string cy = "y";
    if (f.kind == "bound") {
        const RelativeProblem problem = build_problem(c);
        const QuantumNumbers qn{f.n_r, f.m};
        energy(qn, problem);  // reject invalid states before sampling
        params = problem_json(problem);
        params["kind"] = "bound";
        params["n_r"] = f.n_r;
        params["m"] = f.m;
        parallel_for(ys.size(), c.jobs, [&](std::size_t j) {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double r = std::hypot(xs[i], ys[j]);
                values[j * xs.size() + i] =
                    eval_bound_wavefunction(qn, problem, r, std::atan2(ys[j], xs[i]));
            }
        });
    } else {
        const ScatteringParams p = build_scattering(c, s);
        params = scattering_json(p);
        params["kind"] = "scattering";
        cx = "xi";
        cy = "eta";
        parallel_for(ys.size(), c.jobs, [&](std::size_t j) {
            for (std::size_t i = 0; i < xs.size(); ++i)
                values[j * xs.size() + i] = eval_scattering_field(p, xs[i], ys[j]);
        });
    }
    params[cx + "_range"] = Json::array({-f.extent, f.extent});
    params[cy + "_range"] = Json::array({-f.extent, f.extent});
    params["nx"] = f.nx;
    params["ny"] = f.ny;

    std::ostringstream os;
    if (c.format == "json") {
        Json doc;
        doc["command"] = "field";
        doc["parameters"] = params;
        Json re = Json::array();
        Json im = Json::array();
        for (const Complex v : values) {
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        doc["re"] = re;
        doc["im"] = im;
        os << doc.dump(2) << '\n';
        return os.str();
    }
    os << "# command=field\n";
    for (const auto& [key, value] : params.items()) {
        os << "# " << key << '=';
        if (value.is_array())
            os << format_number(value[0].get<double>()) << ':' << format_number(value[1].get<double>());
        else
            os << scalar_text(value);
        os << '\n';
    }
    os << cx << ',' << cy << ",re,im,abs\n";
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Complex v = values[j * xs.size() + i];
            os << format_number(xs[i]) << ',' << format_number(ys[j]) << ','
               << format_number(v.real()) << ',' << format_number(v.imag()) << ','
               << format_number(std::abs(v)) << '\n';
        }
    return os.str();
}

std::string run_verify(const Common& c, const VerifyOptions& opts, bool& pass)
{
    const VerifyReport report = run_verification(opts);
    pass = report.all_pass();

    Json params;
    params["grid"] = opts.small_grid ? "small" : "full";
    params["perturb_energy"] = opts.perturb_energy;
    params["jobs"] = opts.jobs;

    std::ostringstream os;
    if (c.format == "json") {
        Json doc;
        doc["command"] = "verify";
        doc["parameters"] = params;
        doc["shooting"] = Json::array();
        for (const auto& r : report.shooting)
            doc["shooting"].push_back({{"case", r.spectral_case}, {"nu", r.nu}, {"n_r", r.n_r},
                                       {"m", r.m}, {"closed_E", r.closed_energy},
                                       {"shoot_E", r.shoot_energy}, {"rel_err", r.rel_err},
                                       {"nodes", r.nodes}, {"norm", r.norm}, {"pass", r.pass}});
        doc["checks"] = Json::array();
        for (const auto& k : report.checks)
            doc["checks"].push_back({{"name", k.name}, {"value", k.value}, {"limit", k.limit},
                                     {"pass", k.pass}, {"detail", k.detail}});
        doc["pass"] = pass;
        os << doc.dump(2) << '\n';
        return os.str();
    }
    if (c.format == "csv") {
        write_csv_header(os, "verify", params);
        os << "case,nu,n_r,m,closed_E,shoot_E,rel_err,nodes,norm,status\n";
        for (const auto& r : report.shooting)
            os << r.spectral_case << ',' << format_number(r.nu) << ',' << r.n_r << ',' << r.m << ','
               << format_number(r.closed_energy) << ',' << format_number(r.shoot_energy) << ','
               << format_number(r.rel_err) << ',' << r.nodes << ',' << format_number(r.norm) << ','
               << (r.pass ? "PASS" : "FAIL") << '\n';
        os << "check,value,limit,status\n";
        for (const auto& k : report.checks)
            os << k.name << ',' << format_number(k.value) << ',' << format_number(k.limit) << ','
               << (k.pass ? "PASS" : "FAIL") << '\n';
        return os.str();
    }

    char line[256];
    os << "shooting oracle vs closed form (mu = kappa = 1)\n";
    std::snprintf(line, sizeof line, "%-12s %5s %4s %4s %22s %22s %10s %5s %12s %s\n", "case", "nu",
                  "n_r", "m", "closed_E", "shoot_E", "rel_err", "nodes", "norm", "status");
    os << line;
    for (const auto& r : report.shooting) {
        std::snprintf(line, sizeof line, "%-12s %5.2f %4d %4d %22.15e %22.15e %10.2e %5d %12.9f %s\n",
                      r.spectral_case.c_str(), r.nu, r.n_r, r.m, r.closed_energy, r.shoot_energy,
                      r.rel_err, r.nodes, r.norm, r.pass ? "PASS" : "FAIL");
        os << line;
    }
    os << "\nchecks\n";
    for (const auto& k : report.checks) {
        std::snprintf(line, sizeof line, "%-30s %12.4e  limit %10.3e  %s\n", k.name.c_str(), k.value,
                      k.limit, k.pass ? "PASS" : "FAIL");
        os << line;
    }
    os << (pass ? "\nall checks passed\n" : "\nverification FAILED\n");
    return os.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open " + c.out_path + " for writing");
    file << text;
    if (!file)
        throw UsageError("failed writing " + c.out_path);
}

}  // namespace

std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Aharonov-Bohm-Coulomb two-body problem in two dimensions", "abc2d"};
    app.require_subcommand(1);

    Common c;
    ScatterArgs s;
    FieldArgs f;
    int levels = 5;
    int n_theta = 64;
    double theta_min = 0.01;
    VerifyOptions vopts;
    std::string grid = "full";

    auto* sp = app.add_subcommand("spectrum", "Bound-state levels, degeneracies and members");
    add_problem_options(sp, c);
    add_output_options(sp, c, {"csv", "json"});
    sp->add_option("--levels", levels, "Number of distinct levels")->check(CLI::PositiveNumber);

    auto* xs = app.add_subcommand("xsection", "Differential cross sections on a theta grid");
    add_problem_options(xs, c);
    add_scatter_options(xs, s);
    add_output_options(xs, c, {"csv", "json"});
    xs->add_option("--thetas", n_theta, "Number of angles");
    xs->add_option("--theta-min", theta_min, "Smallest angle; the grid is symmetric about pi");

    auto* fd = app.add_subcommand("field", "Bound or scattering wavefunction on a grid");
    add_problem_options(fd, c);
    add_scatter_options(fd, s);
    add_output_options(fd, c, {"csv", "json"});
    fd->add_option("--kind", f.kind)->check(CLI::IsMember({"bound", "scattering"}));
    fd->add_option("--nr", f.n_r, "Radial quantum number (bound)");
    fd->add_option("--m", f.m, "Angular label (bound)");
    fd->add_option("--extent", f.extent, "Half-width of the grid (x, y or xi, eta)");
    fd->add_option("--nx", f.nx);
    fd->add_option("--ny", f.ny);

    auto* vf = app.add_subcommand("verify", "Run the oracle and identity checks");
    add_output_options(vf, c, {"table", "csv", "json"});
    vf->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));
    vf->add_option("--perturb-energy", vopts.perturb_energy,
                   "Relative shift of the closed-form energies (fault injection)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream text;
        std::ostringstream text_err;
        const int code = app.exit(e, text, text_err);
        out << text.str();
        err << text_err.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (sp->parsed()) {
            emit(c, run_spectrum(c, levels), out);
        } else if (xs->parsed()) {
            emit(c, run_xsection(c, s, n_theta, theta_min), out);
        } else if (fd->parsed()) {
            emit(c, run_field(c, s, f), out);
        } else {
            if (vf->count("--format") == 0)
                c.format = "table";
            vopts.small_grid = grid == "small";
            vopts.jobs = c.jobs;
            bool pass = false;
            emit(c, run_verify(c, vopts, pass), out);
            if (!pass) {
                err << "verification failed\n";
                return kVerifyFailed;
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::invalid_argument ? kUsage : kDomain;
    }
    return kOk;
}

}  // namespace abc2d::cli
