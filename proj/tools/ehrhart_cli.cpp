#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ehrhart/json_io.hpp"
#include "ehrhart/oracle.hpp"

namespace {

using namespace ehrhart;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

KindFlag parse_kind(const std::string& s) {
    return s == "open" ? KindFlag::open : KindFlag::closed;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

std::string vertices_to_string(const std::vector<RationalVector>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < vs[i].size(); ++j) {
            if (j) s += ", ";
            s += rational_to_string(vs[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

struct VerifyOptions {
    std::string input;
    std::string compare;
    std::string kind_str = "closed";
    bool oracle = false, reciprocity = false, derivative = false, period = false, volume = false;
    std::uint64_t seed = 1;
    std::size_t cases = 10;
    std::size_t t_samples = 8;
    int jobs = 1;
    std::int64_t budget = 100'000'000;
};

struct SuiteTally {
    long passed = 0;
    long total = 0;
};

struct CaseOutcome {
    std::map<std::string, SuiteTally> tallies;
    std::string first_failure;
    std::exception_ptr error;
};

CaseOutcome run_case(const std::string& label, const RationalPolytope& p,
                     const VerifyOptions& opt) {
    CaseOutcome out;
    const auto check = [&](const char* suite, bool ok, const auto& describe) {
        auto& tally = out.tallies[suite];
        ++tally.total;
        if (ok) {
            ++tally.passed;
        } else if (out.first_failure.empty()) {
            out.first_failure = std::string(suite) + ": " + describe() + "\n  case: " + label;
        }
    };

    const QuasiPolynomial closed_qp = polytope_quasi(p, KindFlag::closed, opt.budget);
    const QuasiPolynomial open_qp = polytope_quasi(p, KindFlag::open, opt.budget);
    const std::vector<Rational> ts = sample_dilations(closed_qp, 3, opt.t_samples);
    const bool is_simplex = p.vertices().size() == static_cast<std::size_t>(p.dim()) + 1;

    if (opt.oracle) {
        const Decomposition dec = triangulate(p.vertices());
        for (const auto& t : ts) {
            for (const KindFlag kind : {KindFlag::closed, KindFlag::open}) {
                const auto& qp = kind == KindFlag::closed ? closed_qp : open_qp;
                const Rational got = eval_quasi(qp, t);
                const Integer want = brute_count(dec, t, kind, opt.budget);
                check("oracle", got == to_rational(want), [&] {
                    return "quasi-polynomial gives " + rational_to_string(got) +
                           ", brute force counts " + want.str() + " at t = " +
                           rational_to_string(t) +
                           (kind == KindFlag::closed ? " (closed)" : " (open)");
                });
            }
        }
    }

    if (opt.reciprocity) {
        check("reciprocity", polytope_reciprocity_check(closed_qp, open_qp, ts),
              [&] { return std::string("L(interior, -t) != (-1)^dim L(closed, t) on the grid"); });
        if (is_simplex) {
            check("reciprocity", coefficient_reciprocity_check(closed_qp, open_qp), [&] {
                return std::string("coefficient functions fail structural reciprocity");
            });
        }
    }

    if (opt.derivative) {
        for (const auto* qp : {&closed_qp, &open_qp}) {
            for (int k = 0; k + 1 <= qp->dim; ++k) {
                const auto lhs = derivative_piecewise(*qp, k);
                const auto rhs = Rational(-(k + 1)) * qp->coefficients[k + 1];
                check("derivative", equal_almost_everywhere(lhs, rhs), [&] {
                    return "d/dt c_" + std::to_string(k) + " != -(k+1) c_" + std::to_string(k + 1);
                });
            }
        }
    }

    if (opt.period) {
        check("period", closed_qp.period == p.denominator(), [&] {
            return "assembled period " + rational_to_string(closed_qp.period) +
                   " != polytope denominator " + rational_to_string(p.denominator());
        });
        for (const auto* qp : {&closed_qp, &open_qp}) {
            for (const auto& t : ts) {
                bool ok = true;
                for (const auto& c : qp->coefficients) ok = ok && c(t + qp->period) == c(t);
                check("period", ok, [&] {
                    return "coefficient changes across one period at t = " + rational_to_string(t);
                });
            }
        }
        if (is_simplex) {
            const RationalSimplex s(p.vertices());
            for (const KindFlag kind : {KindFlag::closed, KindFlag::open}) {
                const auto& qp = kind == KindFlag::closed ? closed_qp : open_qp;
                const StepFunction counts = determined_sets(s, kind, opt.budget);
                for (const auto& t : ts) {
                    const Rational via_binomial = eval_binomial_formula(
                        counts, s.dim(), s.denominator(), kind, -t);
                    check("period", via_binomial == eval_quasi(qp, -t), [&] {
                        return "binomial formula and coefficients disagree at t = -" +
                               rational_to_string(t);
                    });
                }
            }
        }
    }

    if (opt.volume && p.dim() == static_cast<int>(p.ambient_dim())) {
        const Rational vol = volume(p);
        check("volume", leading_coefficient_check(closed_qp, vol), [&] {
            return "closed leading coefficients differ from (-1)^(n-k) C(n,k) vol = " +
                   rational_to_string(vol);
        });
        check("volume", leading_coefficient_check(open_qp, vol), [&] {
            return "open leading coefficients differ from (-1)^(n-k) C(n,k) vol = " +
                   rational_to_string(vol);
        });
    }

    return out;
}

int cmd_verify(VerifyOptions opt) {
    const bool any_suite =
        opt.oracle || opt.reciprocity || opt.derivative || opt.period || opt.volume;
    if (!any_suite && opt.compare.empty())
        opt.oracle = opt.reciprocity = opt.derivative = opt.period = opt.volume = true;

    std::map<std::string, SuiteTally> totals;
    std::string first_failure;

    if (!opt.compare.empty()) {
        if (opt.input.empty()) throw std::invalid_argument("--compare requires --input");
        const auto pf = read_polytope_file(opt.input);
        const RationalPolytope p(pf.vertices);
        const auto computed = polytope_quasi(p, parse_kind(opt.kind_str), opt.budget);
        const auto stored = quasi_from_json(slurp(opt.compare));
        auto& tally = totals["compare"];
        ++tally.total;
        if (stored == computed) {
            ++tally.passed;
        } else {
            first_failure = "compare: stored quasi-polynomial differs from computed (" +
                            opt.compare + ")\n  case: " + opt.input;
        }
    }

    std::vector<std::pair<std::string, RationalPolytope>> cases;
    if (opt.oracle || opt.reciprocity || opt.derivative || opt.period || opt.volume) {
        if (!opt.input.empty()) {
            const auto pf = read_polytope_file(opt.input);
            cases.emplace_back(opt.input + " " + vertices_to_string(pf.vertices),
                               RationalPolytope(pf.vertices));
        } else {
            for (std::size_t i = 0; i < opt.cases; ++i) {
                const std::size_t ambient = 1 + i % 3;
                RationalPolytope p = random_polytope(opt.seed + 0x9E3779B97F4A7C15ULL * (i + 1),
                                                     ambient, 5, 3, 4);
                cases.emplace_back("seed " + std::to_string(opt.seed) + ", case " +
                                       std::to_string(i) + ", vertices " +
                                       vertices_to_string(p.vertices()),
                                   std::move(p));
            }
        }
    }

    std::vector<CaseOutcome> outcomes(cases.size());
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(opt.jobs), cases.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            outcomes[i] = run_case(cases[i].first, cases[i].second, opt);
    } else {
        std::atomic<std::size_t> next{0};
        const auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                try {
                    outcomes[i] = run_case(cases[i].first, cases[i].second, opt);
                } catch (...) {
                    outcomes[i].error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < workers; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (const auto& outcome : outcomes) {
        if (outcome.error) std::rethrow_exception(outcome.error);
        for (const auto& [suite, tally] : outcome.tallies) {
            totals[suite].passed += tally.passed;
            totals[suite].total += tally.total;
        }
        if (first_failure.empty()) first_failure = outcome.first_failure;
    }

    for (const auto& [suite, tally] : totals)
        std::cout << suite << ": " << tally.passed << "/" << tally.total << " checks passed\n";
    if (!first_failure.empty()) {
        std::cout << "first failure:\n  " << first_failure << "\n";
        return kExitVerifyFailed;
    }
    std::cout << "verification passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart counting for rational polytopes"};
    app.require_subcommand(1);

    std::string input, kind_str = "closed", out_path, cells_path, t_str;
    std::int64_t budget = 0;  // 0 = library default
    const auto kind_values = CLI::IsMember({"closed", "open"});

    auto* compute = app.add_subcommand(
        "compute", "Write the counting quasi-polynomial of a polytope as JSON");
    compute->add_option("--input", input, "polytope JSON file")->required();
    compute->add_option("--kind", kind_str, "closed|open")->check(kind_values);
    compute->add_option("--out", out_path, "output file (default: stdout)");
    compute->add_option("--cells", cells_path, "also write the triangulation to this file");
    compute->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "Evaluate the counting function at a rational t");
    eval->add_option("--input", input, "polytope JSON file")->required();
    eval->add_option("--kind", kind_str, "closed|open")->check(kind_values);
    eval->add_option("-t,--t", t_str, "dilation, e.g. 3/2 or -2")->required();
    eval->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);

    auto* determined = app.add_subcommand(
        "determined", "Write the determined-set step function of a simplex as JSON");
    determined->add_option("--input", input, "simplex JSON file")->required();
    determined->add_option("--kind", kind_str, "closed|open")->check(kind_values);
    determined->add_option("--out", out_path, "output file (default: stdout)");
    determined->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Check the counting identities");
    verify->add_option("--input", vopt.input, "polytope JSON file (default: random cases)");
    verify->add_option("--kind", vopt.kind_str, "kind used by --compare")->check(kind_values);
    verify->add_option("--compare", vopt.compare,
                       "quasi-polynomial JSON to compare against (needs --input)");
    verify->add_flag("--oracle", vopt.oracle, "brute-force lattice counts match");
    verify->add_flag("--reciprocity", vopt.reciprocity, "closed/open reciprocity");
    verify->add_flag("--derivative", vopt.derivative, "d/dt c_k = -(k+1) c_{k+1}");
    verify->add_flag("--period", vopt.period, "period equals denominator; negative dilations");
    verify->add_flag("--volume", vopt.volume, "leading coefficients carry the volume");
    verify->add_option("--seed", vopt.seed, "random case seed");
    verify->add_option("--cases", vopt.cases, "number of random cases")
        ->check(CLI::PositiveNumber);
    verify->add_option("--t-samples", vopt.t_samples, "dilations sampled per case")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", vopt.budget, "enumeration budget")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (compute->parsed()) {
            const auto pf = read_polytope_file(input);
            const RationalPolytope poly(pf.vertices);
            const auto qp = polytope_quasi(poly, parse_kind(kind_str),
                                           budget > 0 ? budget : kDefaultEnumerationBudget);
            write_output(out_path, quasi_to_json(qp));
            if (!cells_path.empty())
                write_output(cells_path, decomposition_to_json(triangulate(poly.vertices())));
            return kExitOk;
        }
        if (eval->parsed()) {
            const auto pf = read_polytope_file(input);
            const RationalPolytope poly(pf.vertices);
            const auto qp = polytope_quasi(poly, parse_kind(kind_str),
                                           budget > 0 ? budget : kDefaultEnumerationBudget);
            std::cout << rational_to_string(eval_quasi(qp, parse_rational(t_str))) << "\n";
            return kExitOk;
        }
        if (determined->parsed()) {
            const auto pf = read_polytope_file(input);
            std::optional<RationalSimplex> s;
            try {
                s.emplace(pf.vertices);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("determined sets defined per simplex");
            }
            const auto sf = determined_sets(*s, parse_kind(kind_str),
                                            budget > 0 ? budget : kDefaultEnumerationBudget);
            write_output(out_path, step_function_to_json(sf));
            return kExitOk;
        }
        return cmd_verify(std::move(vopt));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
