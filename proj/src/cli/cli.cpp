#include "eigenfence/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eigenfence/bounds.hpp"
#include "eigenfence/cassini.hpp"
#include "eigenfence/discs.hpp"
#include "eigenfence/errors.hpp"
#include "eigenfence/oracle.hpp"
#include "eigenfence/refine.hpp"
#include "eigenfence/render.hpp"
#include "eigenfence/serialize.hpp"
#include "eigenfence/similarity.hpp"

namespace eigenfence::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

struct Loaded {
    RealMatrix matrix;
    Eigenpair pair;
};

Loaded load_with_pair(const std::string& path, double tol, std::ostream& err) {
    auto problem = parse_problem(read_input(path));
    if (!problem.eigenpair)
        throw InvalidEigenpairError("'" + path +
                                    "' has no eigenvalue/eigenvector; run `eig` on the matrix to find one");
    validate_eigenpair(problem.matrix, *problem.eigenpair, tol);
    if (has_zero_component(problem.eigenpair->v)) {
        std::size_t zeros = 0;
        const double zt = zero_tolerance(problem.eigenpair->v);
        for (double x : problem.eigenpair->v) zeros += std::abs(x) <= zt ? 1 : 0;
        err << "notice: eigenvector has " << zeros << " zero component(s); desingularizing first\n";
    }
    return {std::move(problem.matrix), std::move(*problem.eigenpair)};
}

json header(const Loaded& in, double tol) {
    const auto form = constant_row_sum_form(in.matrix, in.pair, tol);
    return {{"n", in.matrix.size()}, {"eigenvalue", in.pair.lambda}, {"desingularized", form.desingularized}};
}

Region refined_region(const RealMatrix& b) {
    if (b.size() % 2 == 0) return second_type_discs_of_transpose(refine_even(b).f);
    return refined_region_odd(b);
}

std::string complex_line(ComplexPoint z) {
    char buf[96];
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();  // no "-0"
    std::snprintf(buf, sizeof buf, "%.10g%c%.10gi", z.real() == 0.0 ? 0.0 : z.real(), im < 0 ? '-' : '+',
                  std::abs(im));
    return buf;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalue inclusion regions and bounds from one known eigenpair", "eigenfence"};
    app.require_subcommand(1);
    double tol = kDefaultEigenpairTol;
    app.add_option("--tol", tol, "eigenpair residual tolerance")->check(CLI::PositiveNumber);

    std::string input;
    auto add_input = [&](CLI::App* sub, const char* what) { sub->add_option("input", input, what)->required(); };

    auto* locate = app.add_subcommand("locate", "second-type disc region of B^T");
    add_input(locate, "problem file (JSON)");
    bool classic = false;
    locate->add_flag("--classic", classic, "include classic Gershgorin discs of A and A^T");

    auto* refine = app.add_subcommand("refine", "F (and G) matrices and the refined region");
    add_input(refine, "problem file (JSON)");

    auto* bound = app.add_subcommand("bound", "upper bounds on the other eigenvalues");
    add_input(bound, "problem file (JSON)");
    std::vector<int> powers;
    std::string norm;
    bool det = false;
    bound->add_option("--k", powers, "powers (comma separated or repeated)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bound->add_option("--norm", norm, "semi-norm: 1 or inf")->check(CLI::IsMember({"1", "inf"}));
    bound->add_flag("--det", det, "add determinant bounds");

    auto* obr = app.add_subcommand("obr", "refined Ostrowski-Brauer region");
    add_input(obr, "problem file (JSON)");

    auto* render = app.add_subcommand("render", "SVG of the regions");
    add_input(render, "problem file (JSON)");
    std::string out_path;
    std::vector<std::string> layers{"classic", "second"};
    bool eigs = false;
    render->add_option("--out", out_path, "output SVG path ('-' for stdout)")->required();
    render->add_option("--layers", layers, "classic,second,refined,obr")
        ->delimiter(',')
        ->check(CLI::IsMember({"classic", "second", "refined", "obr"}));
    render->add_flag("--eigs", eigs, "overlay oracle eigenvalues");

    auto* eig = app.add_subcommand("eig", "oracle eigenvalues, by modulus descending");
    add_input(eig, "matrix file (text or JSON)");

    auto* validate = app.add_subcommand("validate", "eigenpair residual");
    add_input(validate, "problem file (JSON)");

    std::vector<std::string> argv_store{"eigenfence"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*locate) {
            const auto in = load_with_pair(input, tol, err);
            json j = header(in, tol);
            j["region"] = to_json(eigenpair_region(in.matrix, in.pair, tol));
            if (classic) {
                j["classic"] = {{"columns", to_json(classic_discs(in.matrix, Axis::columns))},
                                {"rows", to_json(classic_discs(in.matrix, Axis::rows))}};
            }
            out << j.dump(2) << "\n";
        } else if (*refine) {
            const auto in = load_with_pair(input, tol, err);
            json j = header(in, tol);
            const auto b = constant_row_sum_form(in.matrix, in.pair, tol).matrix;
            j["B"] = to_json(b);
            if (b.size() % 2 == 0) {
                const auto r = refine_even(b);
                j["parity"] = "even";
                j["F"] = to_json(r.f);
                j["betas"] = r.betas;
            } else {
                const auto r = refine_odd(b);
                j["parity"] = "odd";
                j["F"] = to_json(r.f);
                j["G"] = to_json(r.g);
                j["betas"] = r.betas;
                j["gammas"] = r.gammas;
                j["simplified_region"] = to_json(corollary2_region(b));
            }
            j["region"] = to_json(refined_region(b));
            out << j.dump(2) << "\n";
        } else if (*bound) {
            const auto in = load_with_pair(input, tol, err);
            BoundOptions opts;
            if (!powers.empty()) opts.powers = powers;
            if (norm == "1") opts.norms = {SemiNorm::l1};
            if (norm == "inf") opts.norms = {SemiNorm::linf};
            opts.determinant = det;
            json j = header(in, tol);
            json list = json::array();
            const double modulus = std::abs(in.pair.lambda);
            for (const auto& b : bound_report(in.matrix, in.pair, opts, tol)) {
                json e = to_json(b);
                if (b.name.rfind("det_", 0) != 0 && b.value >= modulus) e["note"] = "not below |eigenvalue|";
                list.push_back(std::move(e));
            }
            j["bounds"] = std::move(list);
            out << j.dump(2) << "\n";
        } else if (*obr) {
            const auto in = load_with_pair(input, tol, err);
            json j = header(in, tol);
            j["region"] = to_json(theorem8_region(in.matrix, in.pair, tol));
            out << j.dump(2) << "\n";
        } else if (*render) {
            const auto problem = parse_problem(read_input(input));
            const bool needs_pair = std::any_of(layers.begin(), layers.end(), [](const std::string& l) { return l != "classic"; });
            Scene scene;
            std::optional<RealMatrix> b;
            if (needs_pair) {
                const auto in = load_with_pair(input, tol, err);
                b = constant_row_sum_form(in.matrix, in.pair, tol).matrix;
            }
            for (const auto& l : layers) {
                if (l == "classic")
                    scene.layers.push_back({classic_discs(problem.matrix, Axis::columns), colors::gray, 0.6});
                else if (l == "second")
                    scene.layers.push_back({second_type_discs_of_transpose(*b), colors::blue, 0.6});
                else if (l == "refined")
                    scene.layers.push_back({refined_region(*b), colors::turquoise, 0.7});
                else
                    scene.layers.push_back(
                        {theorem8_region(problem.matrix, *problem.eigenpair, tol), colors::turquoise, 0.7});
            }
            if (eigs) {
                const auto spec = oracle::eigenvalues(problem.matrix, oracle::seed_from_environment());
                for (auto z : oracle::sorted_by_modulus(spec.values)) scene.points.push_back({z, colors::black});
            }
            write_output(out_path, render_svg(scene), out);
        } else if (*eig) {
            const auto problem = parse_problem(read_input(input));
            const auto spec = oracle::eigenvalues(problem.matrix, oracle::seed_from_environment());
            for (auto z : oracle::sorted_by_modulus(spec.values)) out << complex_line(z) << "\n";
        } else if (*validate) {
            const auto problem = parse_problem(read_input(input));
            if (!problem.eigenpair)
                throw InvalidEigenpairError("'" + input + "' has no eigenpair; run `eig` on the matrix to find one");
            const double r = check_eigenpair(problem.matrix, *problem.eigenpair);
            const bool ok = r <= tol;
            out << json{{"residual", r}, {"tol", tol}, {"valid", ok}}.dump(2) << "\n";
            if (!ok) {
                err << "error: eigenpair residual " << r << " exceeds tolerance " << tol << "\n";
                return 2;
            }
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace eigenfence::cli
