#include "dspace/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "dspace/diffops.hpp"
#include "dspace/geometricity.hpp"
#include "dspace/gradedspace.hpp"
#include "dspace/random.hpp"
#include "dspace/volumes.hpp"

namespace dspace {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (passed) detail.str("");
        if (!passed) detail << "; ";
        passed = false;
        detail << why;
    }
};

const std::vector<std::string> kVolumeTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

std::vector<std::size_t> profile(std::size_t n, std::size_t dmax) {
    std::vector<std::size_t> out(dmax + 1, 0);
    std::vector<std::size_t> row{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> next(k + 1, 1);
        for (std::size_t j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    for (std::size_t d = 0; d <= std::min(n, dmax); ++d) out[d] = row[d];
    return out;
}

Subset full_set(std::size_t n) {
    Subset s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = j;
    return s;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + "]";
}

class Suite {
public:
    explicit Suite(std::uint64_t seed) : seed_(seed) {}

    std::vector<QMatrix> ac1_matrices() {
        Sampler rng(seed_ + 1);
        std::vector<QMatrix> out;
        for (std::size_t n = 2; n <= 5; ++n)
            for (int k = 0; k < 25; ++k) out.push_back(rng.matrix_with_nonzero_minors(n));
        return out;
    }

    void ac1(Outcome& o) {
        for (const QMatrix& m : ac1_matrices()) {
            const std::size_t n = m.rows();
            std::vector<std::size_t> dims;
            std::size_t total = 0;
            for (unsigned d = 0; d <= n + 2; ++d) {
                dims.push_back(basis_degree(m, d).size());
                total += dims.back();
            }
            if (dims != profile(n, n + 2) || total != (std::size_t{1} << n)) {
                o.fail("n=" + std::to_string(n) + " dims " + join(dims));
            }
        }
        if (o.passed) o.detail << "100 matrices, n=2..5, dims C(n,d) through d=n+2";
    }

    void ac2(Outcome& o) {
        for (const QMatrix& m : ac1_matrices()) {
            for (unsigned d = 0; d <= m.rows() + 2; ++d) {
                if (basis_degree(m, d).size() != dual_quotient_dim(m, d)) {
                    o.fail("mismatch at n=" + std::to_string(m.rows()) + " d=" + std::to_string(d));
                }
            }
        }
        const QMatrix perm = QMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        std::vector<std::size_t> primal, dual;
        for (unsigned d = 0; d <= 6; ++d) {
            primal.push_back(basis_degree(perm, d).size());
            dual.push_back(dual_quotient_dim(perm, d));
        }
        const std::vector<std::size_t> expected{1, 3, 3, 3, 3, 3, 3};
        if (primal != expected || dual != expected) o.fail("cyclic permutation dims " + join(primal) + " / " + join(dual));
        if (o.passed) o.detail << "primal = dual on 100 matrices; cyclic permutation " << join(primal);
    }

    void ac3(Outcome& o) {
        Sampler rng(seed_ + 3);
        for (int k = 0; k < 10; ++k) {
            const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
            const QMatrix m = rng.matrix_with_vanishing_minor(n);
            std::vector<std::size_t> dims;
            for (unsigned d = 0; d <= n + 2; ++d) dims.push_back(basis_degree(m, d).size());
            if (has_binomial_profile(dims, n)) o.fail("matrix " + std::to_string(k) + " keeps the binomial profile");
            if (all_principal_minors_nonzero(m).all_nonzero) o.fail("matrix " + std::to_string(k) + " has no zero minor");
        }
        if (o.passed) o.detail << "10 singular-minor matrices leave the profile by d=n+2";
    }

    void ac4(Outcome& o) {
        Sampler rng(seed_ + 4);
        int members = 0;
        for (int k = 0; k < 200; ++k) {
            const auto n = static_cast<std::size_t>(rng.integer(1, 4));
            const QMatrix m = rng.coin() ? rng.matrix_with_nonzero_minors(n) : rng.matrix(n);
            const OperatorContext ctx(m);
            MPoly p(n);
            const auto top = static_cast<unsigned>(rng.integer(0, 6));
            for (unsigned d = 0; d <= top; ++d) {
                for (const MPoly& b : basis_degree(m, d)) p += scale(b, rng.rational());
            }
            if (rng.coin()) p += rng.polynomial(n, 6, static_cast<std::size_t>(rng.integer(1, 3)));
            const bool delta = in_difference_space(ctx, p).verdict;
            const bool deriv = in_derivative_space(ctx, p).verdict;
            if (delta != deriv) o.fail("pair " + std::to_string(k) + " disagrees: " + render(p));
            members += deriv ? 1 : 0;
        }
        if (members == 0 || members == 200) o.fail("sample has only one verdict");
        for (int k = 0; k < 100; ++k) {
            const auto n = static_cast<std::size_t>(rng.integer(1, 4));
            const OperatorContext ctx(rng.matrix(n));
            const MPoly p = rng.polynomial(n, 6, static_cast<std::size_t>(rng.integer(1, 5)));
            const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
            if (!verify_expansion(ctx, i, p)) o.fail("expansion fails for " + render(p));
        }
        if (o.passed) o.detail << "200 pairs agree (" << members << " members); 100 expansions exact";
    }

    void ac5(Outcome& o) {
        Sampler rng(seed_ + 5);
        for (int k = 0; k < 50; ++k) {
            const auto n = static_cast<std::size_t>(rng.integer(2, 4));
            const QMatrix m = rng.matrix_with_nonzero_minors(n);
            const OperatorContext ctx(m);
            const GradedBasis basis(m, static_cast<unsigned>(n));
            MPoly p(n);
            for (unsigned d = 0; d <= n; ++d)
                for (const MPoly& b : basis.piece(d).elements) p += scale(b, rng.rational());
            if (!in_difference_space(ctx, p).verdict) o.fail("sum " + std::to_string(k) + " not in Delta");
            for (unsigned d = 0; d <= n; ++d) {
                if (!in_difference_space(ctx, homogeneous_component(p, d)).verdict) {
                    o.fail("sum " + std::to_string(k) + " degree " + std::to_string(d) + " component not in Delta");
                }
            }
        }
        if (o.passed) o.detail << "50 mixed-degree sums, every component in Delta";
    }

    void ac6(Outcome& o) {
        std::size_t count = 0;
        for (const CartanSystem& sys : finite_types_up_to(8)) {
            for (const Subset& s : nonempty_subsets(sys.rank())) {
                const Rational minor = principal_minor(sys.cartan(), s);
                ++count;
                if (!minor.is_integer() || minor.sign() <= 0) {
                    o.fail(sys.label().value_or("?") + " minor " + subset_key(s) + " = " + minor.str());
                }
            }
        }
        if (o.passed) o.detail << count << " minors positive integers";
    }

    void volume_check(const std::string& label, Outcome& o) {
        const CartanSystem sys = CartanSystem::of_label(label);
        const std::size_t n = sys.rank();
        const MPoly v = volume_polynomial(sys);
        if (!in_derivative_space(OperatorContext(sys.root_matrix()), v).verdict) o.fail(label + ": V not in D(C)");
        const std::vector<MPoly> top = basis_degree(sys.root_matrix(), static_cast<unsigned>(n));
        if (top.size() != 1) {
            o.fail(label + ": dim D(C)_n = " + std::to_string(top.size()));
        } else {
            const auto& [lead, c] = *v.terms().begin();
            if (scale(top[0], c / top[0].coefficient(lead)) != v) o.fail(label + ": V not proportional to the basis");
        }
        const VolumeBasis& basis = basis_for(label);
        std::vector<std::string> good;
        std::string ratios, indices;
        for (RootConvention conv : {RootConvention::Row, RootConvention::Column}) {
            bool ok = true;
            for (const DerivativeIdentityRow& row : derivative_identity(basis, conv)) {
                ok = ok && row.free_of_variable && row.ratio && row.ratio->sign() > 0;
                if (ok && conv == sys.convention()) {
                    Subset face;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != row.index) face.push_back(j);
                    ratios += (row.index ? "," : "") + row.ratio->str();
                    indices += (row.index ? "," : "") + std::to_string(parabolic_index(sys, face));
                }
            }
            if (ok) good.push_back(to_string(conv));
        }
        if (good.empty()) o.fail(label + ": derivative identity fails under both conventions");
        o.detail << (o.detail.tellp() > 0 ? "; " : "") << label << " ";
        for (std::size_t k = 0; k < good.size(); ++k) o.detail << (k ? "," : "") << good[k];
        if (!ratios.empty()) o.detail << " c=[" << ratios << "] index=[" << indices << "]";
    }

    void ac7(Outcome& o) {
        for (const std::string& label : kVolumeTypes) volume_check(label, o);
    }

    void ac8(Outcome& o) {
        Sampler rng(seed_ + 8);
        for (const std::string& label : kVolumeTypes) {
            const VolumeBasis& basis = basis_for(label);
            const VolumeBasis root = renormalize(basis, Normalization::RootLattice);
            const std::size_t n = basis.sys.rank();
            const OperatorContext ctx(basis.sys.root_matrix());
            for (int k = 0; k < 50; ++k) {
                std::map<Subset, Rational, SubsetLess> mu;
                for (const auto& entry : basis.entries) mu.emplace(entry.first, rng.rational());
                const MPoly p = round_trip(basis, mu);
                const GeometricityCertificate cert = decompose(basis, p);
                if (cert.status != GeometricityStatus::Geometric || cert.coefficients != mu) {
                    o.fail(label + ": round trip " + std::to_string(k));
                    continue;
                }
                const GeometricityCertificate scaled = decompose(root, p);
                for (const auto& [s, c] : mu) {
                    if (scaled.coefficients.at(s) != c * lattice_ratio(basis.sys, s)) {
                        o.fail(label + ": root-normalized coefficient " + subset_key(s));
                    }
                }
                const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
                const MPoly q = p + MPoly::term(Monomial::unit(n, i) * Monomial::unit(n, i), Rational(1));
                const GeometricityCertificate bad = decompose(basis, q);
                if (bad.status != GeometricityStatus::NotInSpace || !bad.witness) {
                    o.fail(label + ": perturbation by x" + std::to_string(i + 1) + "^2 accepted");
                    continue;
                }
                const std::size_t w = bad.witness->index;
                const MPoly recomputed = partial(row_derivative(ctx, w, q), w);
                bool valid = !recomputed.is_zero() && recomputed == bad.witness->offending;
                for (std::size_t j = 0; j < w; ++j) valid = valid && partial(row_derivative(ctx, j, q), j).is_zero();
                if (!valid) o.fail(label + ": invalid witness");
            }
        }
        if (o.passed) o.detail << "7 types x 50 round trips; x_i^2 perturbations rejected";
    }

    void ac9(Outcome& o) {
        Rational factorial(1);
        for (std::size_t n = 1; n <= 3; ++n) {
            factorial *= Rational(static_cast<long>(n));
            const std::string label = "A" + std::to_string(n);
            const VolumeBasis& weight = basis_for(label);
            const VolumeBasis root = renormalize(weight, Normalization::RootLattice);
            Monomial top(n);
            for (std::size_t j = 0; j < n; ++j) top[j] = 1;
            const Rational r = root.at(full_set(n)).coefficient(top);
            const Rational w = weight.at(full_set(n)).coefficient(top);
            if (r != factorial) o.fail(label + " root-normalized " + r.str());
            if (w != Rational(static_cast<long>(n) + 1) * factorial) o.fail(label + " weight-normalized " + w.str());
            if (o.passed) o.detail << (n > 1 ? "; " : "") << label << ": root " << r.str() << ", weight " << w.str();
        }
    }

private:
    const VolumeBasis& basis_for(const std::string& label) {
        auto it = bases_.find(label);
        if (it == bases_.end()) it = bases_.emplace(label, volume_basis(CartanSystem::of_label(label))).first;
        return it->second;
    }

    std::uint64_t seed_;
    std::map<std::string, VolumeBasis> bases_;
};

}  // namespace

bool VerifyReport::all_passed() const {
    for (const CriterionResult& c : criteria)
        if (!c.passed) return false;
    return true;
}

VerifyReport run_verify(const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
    Suite suite(options.seed);
    VerifyReport report;
    report.seed = options.seed;
    const auto run = [&](const std::string& id, const std::function<void(Outcome&)>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        CriterionResult result{id, o.passed, o.detail.str(),
                               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
        if (on_result) on_result(result);
        report.criteria.push_back(std::move(result));
    };
    run("AC-1", [&](Outcome& o) { suite.ac1(o); });
    run("AC-2", [&](Outcome& o) { suite.ac2(o); });
    run("AC-3", [&](Outcome& o) { suite.ac3(o); });
    run("AC-4", [&](Outcome& o) { suite.ac4(o); });
    run("AC-5", [&](Outcome& o) { suite.ac5(o); });
    run("AC-6", [&](Outcome& o) { suite.ac6(o); });
    run("AC-7", [&](Outcome& o) { suite.ac7(o); });
    run("AC-8", [&](Outcome& o) { suite.ac8(o); });
    run("AC-9", [&](Outcome& o) { suite.ac9(o); });
    for (const std::string& label : options.include) {
        run("volume " + label, [&](Outcome& o) { suite.volume_check(label, o); });
    }
    return report;
}

Json verify_json(const VerifyReport& report) {
    Json criteria = Json::array();
    for (const CriterionResult& c : report.criteria) {
        criteria.push_back(Json{{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return Json{{"seed", report.seed}, {"criteria", criteria}, {"passed", report.all_passed()}};
}

}  // namespace dspace
