#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dspace/diffops.hpp"
#include "dspace/geometricity.hpp"
#include "dspace/gradedspace.hpp"
#include "dspace/json_io.hpp"
#include "dspace/verify.hpp"
#include "dspace/volumes.hpp"

using namespace dspace;

namespace {

struct Options {
    std::string type;
    std::string matrix_file;
    std::string poly;
    std::string poly_file;
    std::string subset;
    std::string weight;
    std::optional<unsigned> dmax;
    std::string normalization = "weight";
    std::string convention = "row";
    std::uint64_t seed = 42;
    std::size_t orbit_cap = kDefaultOrbitCap;
    std::string include;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void add_source(CLI::App* cmd, Options& o, bool poly = false) {
    auto* type = cmd->add_option("--type", o.type, "Labeled Cartan type such as A3 or G2");
    auto* matrix = cmd->add_option("--matrix", o.matrix_file, "Matrix JSON file");
    type->excludes(matrix);
    matrix->excludes(type);
    cmd->add_option("--convention", o.convention, "Simple roots from Cartan rows or columns")
        ->check(CLI::IsMember({"row", "column"}));
    if (poly) {
        auto* text = cmd->add_option("--poly", o.poly, "Polynomial text, e.g. \"x1^2 - 1/2*x2\"");
        auto* file = cmd->add_option("--poly-file", o.poly_file, "File holding the polynomial text");
        text->excludes(file);
        file->excludes(text);
    }
}

void add_normalization(CLI::App* cmd, Options& o) {
    cmd->add_option("--normalization", o.normalization, "Lattice of covolume one")
        ->check(CLI::IsMember({"weight", "root"}));
}

CartanSystem system_of(const Options& o) {
    const RootConvention conv = parse_convention(o.convention);
    if (!o.type.empty()) return CartanSystem::of_label(o.type, conv);
    if (!o.matrix_file.empty()) return CartanSystem::of_matrix(parse_matrix_json(read_file(o.matrix_file)), conv);
    throw InputError("one of --type or --matrix is required");
}

std::string type_name(const Options& o) { return o.type.empty() ? "matrix" : o.type; }

// Plain matrix for the commands that accept any square matrix.
QMatrix matrix_of(const Options& o) {
    if (!o.matrix_file.empty()) return parse_matrix_json(read_file(o.matrix_file));
    return system_of(o).root_matrix();
}

MPoly poly_of(const Options& o, std::size_t n) {
    if (!o.poly.empty()) return parse_poly(o.poly, n);
    if (!o.poly_file.empty()) return parse_poly(read_file(o.poly_file), n);
    throw InputError("one of --poly or --poly-file is required");
}

WeightVector weight_of(const Options& o, std::size_t n) {
    if (o.weight.empty()) return WeightVector(n, Rational(1));
    WeightVector w;
    std::stringstream in(o.weight);
    for (std::string item; std::getline(in, item, ',');) w.push_back(Rational::parse(item));
    if (w.size() != n) throw InputError("--weight needs " + std::to_string(n) + " entries");
    return w;
}

int run(const std::string& command, const Options& o) {
    const Normalization norm = parse_normalization(o.normalization);
    if (command == "minors") {
        std::cout << dump(minors_json(matrix_of(o)));
    } else if (command == "basis") {
        const QMatrix m = matrix_of(o);
        std::cout << dump(basis_json(GradedBasis(m, o.dmax.value_or(default_dmax(m)))));
    } else if (command == "hilbert") {
        const QMatrix m = matrix_of(o);
        std::cout << dump(hilbert_json(hilbert_report(m, o.dmax.value_or(default_dmax(m)))));
    } else if (command == "orbit") {
        const CartanSystem sys = system_of(o);
        std::cout << dump(orbit_json(weyl_orbit(sys, weight_of(o, sys.rank()), o.orbit_cap)));
    } else if (command == "volume") {
        const CartanSystem sys = system_of(o);
        const WeightVector lambda = weight_of(o, sys.rank());
        Rational v = permutohedron_volume(sys, lambda, o.orbit_cap);
        Subset all;
        for (std::size_t j = 0; j < sys.rank(); ++j) all.push_back(j);
        if (norm == Normalization::RootLattice) v /= lattice_ratio(sys, all);
        Json weight = Json::array();
        for (const Rational& r : lambda) weight.push_back(r.str());
        std::cout << dump(Json{{"type", type_name(o)},
                               {"normalization", to_string(norm)},
                               {"convention", to_string(sys.convention())},
                               {"weight", weight},
                               {"volume", v.str()}});
    } else if (command == "volpoly" || command == "facevol") {
        const CartanSystem sys = system_of(o);
        Subset subset;
        if (command == "facevol") {
            subset = parse_subset(o.subset, sys.rank());
        } else {
            for (std::size_t j = 0; j < sys.rank(); ++j) subset.push_back(j);
        }
        const MPoly v = renormalize(command == "facevol" ? face_volume_polynomial(sys, subset) : volume_polynomial(sys),
                                    sys, subset, Normalization::WeightLattice, norm);
        Json out = volume_json(v, type_name(o), norm, sys.convention());
        if (command == "facevol") out["subset"] = subset_json(subset);
        std::cout << dump(out);
    } else if (command == "geometric") {
        const CartanSystem sys = system_of(o);
        const MPoly p = poly_of(o, sys.rank());
        const VolumeBasis basis = volume_basis(sys, norm);
        Json out = certificate_json(decompose(basis, p));
        std::cout << dump(out);
        if (out["status"] == "InternalResidual") return 1;
    } else if (command == "verify") {
        VerifyOptions options;
        options.seed = o.seed;
        std::stringstream in(o.include);
        for (std::string item; std::getline(in, item, ',');) {
            if (!item.empty()) options.include.push_back(item);
        }
        for (const std::string& label : options.include) CartanSystem::of_label(label);
        const VerifyReport report = run_verify(options, [](const CriterionResult& r) {
            std::cerr << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.seconds << "s  " << r.detail << '\n';
        });
        std::cout << dump(verify_json(report));
        return report.all_passed() ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial spaces D(M), graded bases and permutohedron volume polynomials"};
    app.require_subcommand(1);
    Options o;

    auto* minors = app.add_subcommand("minors", "All principal minors of a matrix");
    add_source(minors, o);

    auto* basis = app.add_subcommand("basis", "Graded basis of D(M) up to --dmax");
    add_source(basis, o);
    basis->add_option("--dmax", o.dmax, "Top degree (default n+2)");

    auto* hilbert = app.add_subcommand("hilbert", "Primal and dual Hilbert functions");
    add_source(hilbert, o);
    hilbert->add_option("--dmax", o.dmax, "Top degree (default n+2)");

    auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
    add_source(orbit, o);
    orbit->add_option("--weight", o.weight, "Weight coordinates, e.g. \"1,0,2\" (default all ones)");
    orbit->add_option("--orbit-cap", o.orbit_cap, "Abort above this many points");

    auto* volume = app.add_subcommand("volume", "Volume of the permutohedron of a weight");
    add_source(volume, o);
    add_normalization(volume, o);
    volume->add_option("--weight", o.weight, "Weight coordinates (default all ones)");
    volume->add_option("--orbit-cap", o.orbit_cap, "Abort above this many points");

    auto* volpoly = app.add_subcommand("volpoly", "Volume polynomial of a root system");
    add_source(volpoly, o);
    add_normalization(volpoly, o);

    auto* facevol = app.add_subcommand("facevol", "Volume polynomial of a face subsystem");
    add_source(facevol, o);
    add_normalization(facevol, o);
    facevol->add_option("--subset", o.subset, "1-based indices, e.g. \"1,3\"")->required();

    auto* geometric = app.add_subcommand("geometric", "Decide geometricity and decompose");
    add_source(geometric, o, true);
    add_normalization(geometric, o);

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--include", o.include, "Extra types for the volume checks, e.g. A4,D4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OrbitCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
