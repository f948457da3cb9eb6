// Batch front-end over the cylinder-surface library: deterministic
// key = value reports, one subcommand per operation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strebel/asymptotics.hpp"
#include "strebel/conformal.hpp"
#include "strebel/errors.hpp"
#include "strebel/extremal.hpp"
#include "strebel/qcmap.hpp"
#include "strebel/ray.hpp"
#include "strebel/specfile.hpp"

namespace {

using namespace strebel;

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Output {
    bool machine = false;  // --format lines

    void emit(const std::string& key, const std::string& value, const std::string& cite = "") {
        if (machine) {
            std::cout << key << "\t" << value;
            if (!cite.empty()) std::cout << "\t" << cite;
            std::cout << "\n";
        } else {
            std::cout << key << " = " << value;
            if (!cite.empty()) std::cout << " ; cite = " << cite;
            std::cout << "\n";
        }
    }
    void emit(const std::string& key, double value, const std::string& cite = "") {
        emit(key, fmt17(value), cite);
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_csv(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            if (auto r = parse_rational(item)) {
                out.push_back(to_double(*r));
            } else {
                out.push_back(std::stod(item, &pos));
                if (pos != item.size()) throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ValidationError("cannot parse number '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty number list");
    return out;
}

std::vector<double> parse_grid(const std::string& text) {
    // a:b:step
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ValidationError("grid must be a:b:step");
    const double a = std::stod(text.substr(0, c1));
    const double b = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (!(step > 0.0) || b < a) throw ValidationError("grid must satisfy a <= b, step > 0");
    std::vector<double> grid;
    for (double t = a; t <= b + step * 1e-9; t += step) grid.push_back(t);
    return grid;
}

struct ModuliArgs {
    std::string m, mp;
    std::string spec_path, spec2_path;

    std::pair<std::vector<double>, std::vector<double>> resolve() const {
        auto one = [](const std::string& inline_csv, const std::string& path) {
            if (!inline_csv.empty()) return parse_csv(inline_csv);
            if (path.empty()) throw ValidationError("missing moduli vector (--m/--mp or spec file)");
            return moduli_vector(parse_surface_spec(read_input(path)).surface);
        };
        return {one(m, spec_path), one(mp, spec2_path)};
    }
};

void add_moduli_options(CLI::App* cmd, ModuliArgs& args) {
    cmd->add_option("--m", args.m, "first moduli vector, comma separated");
    cmd->add_option("--mp", args.mp, "second moduli vector, comma separated");
    cmd->add_option("spec", args.spec_path, "surface spec for the first ray ('-' for stdin)");
    cmd->add_option("spec2", args.spec2_path, "surface spec for the second ray");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cylinder-decomposition geodesic ray toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "text|lines")->check(CLI::IsMember({"text", "lines"}));

    Output out;

    // limit-distance / detour / optimal-shift share moduli inputs.
    ModuliArgs ld_args, detour_args, shift_args, sup_args;
    double shift_s = 0.0;
    bool have_shift_s = false;

    auto* ld = app.add_subcommand("limit-distance", "limit of the distance between the two rays");
    add_moduli_options(ld, ld_args);
    auto* ld_s = ld->add_option("--s", shift_s, "shift of the second ray's initial point");

    auto* detour = app.add_subcommand("detour", "detour metric between the ray endpoints");
    add_moduli_options(detour, detour_args);

    auto* shift = app.add_subcommand("optimal-shift", "shift minimizing the limit distance");
    add_moduli_options(shift, shift_args);

    auto* supr = app.add_subcommand("sup-ratio", "sup of E'^2/E^2 over test foliations");
    add_moduli_options(supr, sup_args);
    bool oracle = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    supr->add_flag("--oracle", oracle, "also run the sampling oracle");
    supr->add_option("--samples", samples, "oracle sample count");
    supr->add_option("--seed", seed, "oracle RNG seed");

    auto* efun = app.add_subcommand("e-functional", "limit extremal-length functional");
    std::string ef_m, ef_i;
    efun->add_option("--m", ef_m, "moduli vector")->required();
    efun->add_option("--i", ef_i, "intersection numbers i(gamma_j, mu)")->required();

    auto* la = app.add_subcommand("length-area", "flat-metric length-area bound");
    std::string la_spec, la_i;
    la->add_option("spec", la_spec, "surface spec ('-' for stdin)")->required();
    la->add_option("--i", la_i, "intersection numbers")->required();

    auto* fl = app.add_subcommand("flow", "apply the time-t stretch to a surface");
    std::string fl_spec;
    double fl_t = 0.0;
    fl->add_option("spec", fl_spec, "surface spec ('-' for stdin)")->required();
    fl->add_option("--t", fl_t, "flow time")->required();

    auto* ep = app.add_subcommand("endpoint", "canonical endpoint descriptor");
    std::string ep_spec;
    ep->add_option("spec", ep_spec, "surface spec ('-' for stdin)")->required();

    auto* epe = app.add_subcommand("endpoints-equal", "compare endpoint descriptors");
    std::string epe_a, epe_b;
    epe->add_option("spec", epe_a, "first surface spec")->required();
    epe->add_option("spec2", epe_b, "second surface spec")->required();

    auto* cl = app.add_subcommand("classify", "classification of the pair of rays");
    std::string cl_relation = "TopEquivAbsCont";
    PairDescriptor pd;
    cl->add_option("--relation", cl_relation,
                   "TopEquivAbsCont|TopEquivNotAbsCont|NotTopEquivZeroIntersection|"
                   "NotTopEquivPositiveIntersection");
    cl->add_flag("--js1", pd.jenkins_strebel_first, "first foliation is Jenkins-Strebel");
    cl->add_flag("--js2", pd.jenkins_strebel_second, "second foliation is Jenkins-Strebel");
    cl->add_flag("--ue", pd.uniquely_ergodic, "both uniquely ergodic");
    cl->add_flag("--closed-loops", pd.critical_graph_has_closed_loops,
                 "a critical graph contains closed loops");
    cl->add_flag("--mod-equi", pd.modularly_equivalent, "rays are modularly equivalent");
    cl->add_flag("--endpoints-equal", pd.endpoints_equal, "endpoints agree");

    auto* qc = app.add_subcommand("qc-trajectory", "dilatation trajectory of the interpolating map");
    double qc_M = 1.0, qc_m = 1.0, qc_eps = 0.5, qc_cre = 1.0, qc_cim = 0.0;
    std::string qc_psi, qc_grid = "0:8:1";
    qc->add_option("--M", qc_M, "modulus ratio m'/m")->required();
    qc->add_option("--m", qc_m, "source modulus")->required();
    qc->add_option("--eps", qc_eps, "epsilon in (0,1)")->required();
    qc->add_option("--c-re", qc_cre, "Re of the leading coefficient");
    qc->add_option("--c-im", qc_cim, "Im of the leading coefficient");
    qc->add_option("--psi", qc_psi, "tail coefficients from degree 2, comma separated");
    qc->add_option("--t-grid", qc_grid, "time grid a:b:step");

    auto* dg = app.add_subcommand("diagram-check", "commutativity of the chart/flow diagram");
    double dg_a = 1.0, dg_b = 1.0, dg_t = 1.0;
    int dg_grid = 32;
    dg->add_option("--a", dg_a, "circumference")->required();
    dg->add_option("--b", dg_b, "height")->required();
    dg->add_option("--t", dg_t, "flow time")->required();
    dg->add_option("--grid", dg_grid, "grid size");

    CLI11_PARSE(app, argc, argv);
    out.machine = format == "lines";

    try {
        if (ld->parsed()) {
            auto [m, mp] = ld_args.resolve();
            have_shift_s = ld_s->count() > 0;
            if (have_shift_s)
                out.emit("limit", shifted_limit(m, mp, shift_s), cite::kLimit);
            else
                out.emit("limit", limit_distance(m, mp), cite::kLimit);
        } else if (detour->parsed()) {
            auto [m, mp] = detour_args.resolve();
            out.emit("detour", detour_metric(m, mp), cite::kDetour);
        } else if (shift->parsed()) {
            auto [m, mp] = shift_args.resolve();
            const OptimalShift os = optimal_shift(m, mp);
            out.emit("beta", os.beta, cite::kOptimalShift);
            out.emit("min", os.min_value, cite::kOptimalShift);
        } else if (supr->parsed()) {
            auto [m, mp] = sup_args.resolve();
            out.emit("sup_ratio", sup_ratio(m, mp), "Walsh12-sup");
            if (oracle) out.emit("oracle", sup_ratio_oracle(m, mp, samples, seed), "oracle");
        } else if (efun->parsed()) {
            out.emit("e", e_functional(parse_csv(ef_m), parse_csv(ef_i)), "Walsh12-limit");
        } else if (la->parsed()) {
            const auto spec = parse_surface_spec(read_input(la_spec));
            const LengthAreaBound b = length_area_bound(spec.surface, parse_csv(la_i));
            out.emit("bound", b.bound);
            out.emit("e_squared", b.e_squared);
            out.emit("equality", b.equality ? "true" : "false");
        } else if (fl->parsed()) {
            ParsedSpec spec = parse_surface_spec(read_input(fl_spec));
            spec.surface = flow(spec.surface, fl_t);
            out.emit("area", spec.surface.area());
            const auto mods = moduli_vector(spec.surface);
            for (std::size_t j = 0; j < mods.size(); ++j)
                out.emit("modulus_" + std::to_string(j), mods[j]);
            std::cout << serialize_surface_spec(spec);
        } else if (ep->parsed()) {
            const auto spec = parse_surface_spec(read_input(ep_spec));
            std::cout << endpoint_descriptor(spec.surface).canonical;
        } else if (epe->parsed()) {
            const auto d1 = endpoint_descriptor(parse_surface_spec(read_input(epe_a)).surface);
            const auto d2 = endpoint_descriptor(parse_surface_spec(read_input(epe_b)).surface);
            out.emit("equal", endpoints_equal(d1, d2) ? "true" : "false");
        } else if (cl->parsed()) {
            if (cl_relation == "TopEquivAbsCont") pd.relation = FoliationRelation::TopEquivAbsCont;
            else if (cl_relation == "TopEquivNotAbsCont") pd.relation = FoliationRelation::TopEquivNotAbsCont;
            else if (cl_relation == "NotTopEquivZeroIntersection")
                pd.relation = FoliationRelation::NotTopEquivZeroIntersection;
            else if (cl_relation == "NotTopEquivPositiveIntersection")
                pd.relation = FoliationRelation::NotTopEquivPositiveIntersection;
            else throw ValidationError("unknown relation '" + cl_relation + "'");
            const Verdict v = classify(pd);
            out.emit("verdict", to_string(v.outcome), v.citation);
        } else if (qc->parsed()) {
            std::vector<Complex> coeffs;
            if (!qc_psi.empty())
                for (double c : parse_csv(qc_psi)) coeffs.emplace_back(c, 0.0);
            const QcMapConfig config = make_config(qc_M, qc_m, qc_eps, Complex(qc_cre, qc_cim),
                                                   std::move(coeffs));
            out.emit("X", config.X);
            out.emit("target", config.limit_target());
            const DilatationReport rep = dilatation_trajectory(config, parse_grid(qc_grid));
            for (const auto& s : rep.samples) {
                std::cout << "t " << fmt17(s.t) << "  K_affine " << fmt17(s.k_affine)
                          << "  K_interp_bound " << fmt17(s.k_interp_bound) << "  K_total "
                          << fmt17(s.k_total) << "  valid " << (s.valid ? "yes" : "no") << "\n";
            }
        } else if (dg->parsed()) {
            out.emit("sup_error", check_diagram_commutativity(dg_a, dg_b, dg_t, dg_grid));
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
