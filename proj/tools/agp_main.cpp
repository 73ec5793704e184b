#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "agp/goodstein.hpp"
#include "agp/oracle.hpp"
#include "agp/verify.hpp"

namespace {

using namespace agp;

struct ExitWith {
    int code;
};

Nat arg_nat(const std::string& s) {
    auto v = parse_nat(s);
    if (!v) {
        std::cerr << "error: '" << s << "' is not a decimal number\n";
        throw ExitWith{2};
    }
    return *v;
}

EvalBudget make_budget(const std::string& digits, const std::string& calls) {
    EvalBudget b;
    if (!digits.empty()) b.max_digits = arg_nat(digits);
    if (!calls.empty()) b.max_calls = arg_nat(calls);
    return b;
}

void print_verify(const verify::Result& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (checks=" << r.checks
              << ", skipped=" << r.skipped << ")";
    if (!r.note.empty()) std::cout << " -- " << r.note;
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  ! " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ackermannian Goodstein sequences: normal forms, ordinals, traces"};
    app.require_subcommand(1);

    std::string m_str, base_str = "2", term_str, ord_str, from_str, to_str;
    std::string digits_str, calls_str;
    std::string a_str, b_str;
    bool b_minus_one = false;
    std::string x_str = "2", max_str = "100", n_str = "0", seed_str;
    std::string mode_str = "concrete", format_str = "text", suite_str;
    std::string rng_seed_str = "12345", limit_str = "0";

    auto* c_nf = app.add_subcommand("nf", "normal form of a number");
    c_nf->add_option("--m", m_str, "number")->required();
    c_nf->add_option("--base", base_str, "base, >= 2");

    auto* c_sw = app.add_subcommand("sandwich", "sandwiching sequence of a number");
    c_sw->add_option("--m", m_str, "number")->required();
    c_sw->add_option("--base", base_str, "base, >= 2");

    auto* c_ev = app.add_subcommand("eval", "evaluate a term or an Ackermann value");
    c_ev->add_option("--term", term_str, "term to evaluate");
    c_ev->add_option("--a", a_str, "Ackermann level");
    c_ev->add_option("--b", b_str, "Ackermann argument");
    c_ev->add_flag("--minus-one", b_minus_one, "use the -1 argument");
    c_ev->add_option("--base", base_str, "base, >= 2");
    c_ev->add_option("--max-digits", digits_str, "budget: decimal digits");
    c_ev->add_option("--max-calls", calls_str, "budget: evaluator calls");

    auto* c_bch = app.add_subcommand("bch", "base change of a number or term");
    c_bch->add_option("--from", from_str, "source base")->required();
    c_bch->add_option("--to", to_str, "target base")->required();
    c_bch->add_option("--m", m_str, "number");
    c_bch->add_option("--term", term_str, "term");

    auto* c_ord = app.add_subcommand("ord", "base-omega image as a phi-term");
    c_ord->add_option("--m", m_str, "number");
    c_ord->add_option("--term", term_str, "term");
    c_ord->add_option("--base", base_str, "base, >= 2");

    auto* c_fs = app.add_subcommand("fs", "one fundamental-sequence step");
    c_fs->add_option("--ord", ord_str, "phi-term")->required();
    c_fs->add_option("--x", x_str, "index, >= 1");

    auto* c_sd = app.add_subcommand("stepdown", "iterate [2],[3],... until zero");
    c_sd->add_option("--ord", ord_str, "phi-term")->required();
    c_sd->add_option("--max", max_str, "step budget");

    auto* c_gs = app.add_subcommand("goodstein", "run a Goodstein sequence");
    c_gs->add_option("--seed", seed_str, "starting number")->required();
    c_gs->add_option("--mode", mode_str, "concrete|symbolic");
    c_gs->add_option("--max-steps", max_str, "step budget");
    c_gs->add_option("--format", format_str, "text|json");
    c_gs->add_option("--max-digits", digits_str, "budget: decimal digits");
    c_gs->add_option("--max-calls", calls_str, "budget: evaluator calls");

    auto* c_ga = app.add_subcommand("gamma", "the n-th member of the critical sequence");
    c_ga->add_option("--n", n_str, "depth")->required();

    auto* c_vf = app.add_subcommand("verify", "run a named invariant suite");
    c_vf->add_option("--suite", suite_str, "suite name or 'all'")->required();
    c_vf->add_option("--seed", rng_seed_str, "RNG seed for sampled suites");
    c_vf->add_option("--limit", limit_str, "sweep limit (0: suite default)");
    c_vf->add_option("--max-digits", digits_str, "budget: decimal digits");
    c_vf->add_option("--max-calls", calls_str, "budget: evaluator calls");

    try {
        app.parse(argc, argv);

        if (*c_nf) {
            std::cout << print_term(normal_form(arg_nat(m_str), arg_nat(base_str))) << "\n";
        } else if (*c_sw) {
            SandwichSeq s = sandwich(arg_nat(m_str), arg_nat(base_str));
            for (const auto& st : s.steps)
                std::cout << "(" << nat_str(st.a) << ", " << nat_str(st.b) << ", "
                          << nat_str(st.m) << ")\n";
        } else if (*c_ev) {
            EvalBudget budget = make_budget(digits_str, calls_str);
            Nat k = arg_nat(base_str);
            BoundedNat v;
            if (!term_str.empty()) {
                v = eval_term(parse_term(term_str), k, budget);
            } else if (!a_str.empty()) {
                ArgOrMinusOne arg =
                    b_minus_one ? ArgOrMinusOne::minus_one() : ArgOrMinusOne(arg_nat(b_str));
                v = ack_eval(arg_nat(a_str), k, arg, budget);
            } else {
                std::cerr << "error: eval needs --term or --a/--b\n";
                throw ExitWith{2};
            }
            if (!v) {
                std::cout << "exceeded\n";
                throw ExitWith{3};
            }
            std::cout << nat_str(*v) << "\n";
        } else if (*c_bch) {
            Nat from = arg_nat(from_str), to = arg_nat(to_str);
            NFTerm t;
            if (!term_str.empty())
                t = parse_term(term_str);
            else if (!m_str.empty())
                t = normal_form(arg_nat(m_str), from);
            else {
                std::cerr << "error: bch needs --m or --term\n";
                throw ExitWith{2};
            }
            std::cout << print_term(base_change(t, from, to)) << "\n";
        } else if (*c_ord) {
            NFTerm t;
            if (!term_str.empty())
                t = parse_term(term_str);
            else if (!m_str.empty())
                t = normal_form(arg_nat(m_str), arg_nat(base_str));
            else {
                std::cerr << "error: ord needs --m or --term\n";
                throw ExitWith{2};
            }
            std::cout << print_ord(to_ordinal(t)) << "\n";
        } else if (*c_fs) {
            std::cout << print_ord(fund_seq(parse_ord(ord_str), arg_nat(x_str))) << "\n";
        } else if (*c_sd) {
            StepdownReport rep = stepdown(parse_ord(ord_str), arg_nat(max_str), 50);
            for (const auto& [x, t] : rep.steps)
                std::cout << "[" << nat_str(x) << "] -> " << print_ord(t) << "\n";
            if (rep.steps_taken > Nat(rep.steps.size()))
                std::cout << "... (" << nat_str(rep.steps_taken) << " steps taken)\n";
            if (rep.reached_zero)
                std::cout << "reached zero at n=" << nat_str(rep.final_index) << "\n";
            else
                std::cout << "step budget exhausted\n";
        } else if (*c_gs) {
            GMode mode;
            if (mode_str == "concrete")
                mode = GMode::Concrete;
            else if (mode_str == "symbolic")
                mode = GMode::Symbolic;
            else {
                std::cerr << "error: --mode must be concrete or symbolic\n";
                throw ExitWith{2};
            }
            EvalBudget budget = make_budget(digits_str, calls_str);
            GoodsteinTrace tr = grun(arg_nat(seed_str), mode, arg_nat(max_str), budget);
            if (format_str == "json") {
                std::cout << trace_json(tr).dump(2) << "\n";
            } else {
                for (const auto& e : tr.entries)
                    std::cout << "i=" << nat_str(e.i) << " base=" << nat_str(e.base)
                              << " nf=" << e.nf << " ordinal=" << print_ord(e.ordinal)
                              << " descent_ok=" << (e.descent_ok ? "true" : "false") << "\n";
                std::cout << (tr.terminated ? "terminated at i=" : "budget at i=")
                          << nat_str(tr.outcome_i) << "\n";
            }
            if (!tr.terminated) throw ExitWith{3};
        } else if (*c_ga) {
            std::cout << print_ord(gamma_n(arg_nat(n_str))) << "\n";
        } else if (*c_vf) {
            verify::Options opt;
            opt.limit = arg_nat(limit_str);
            opt.seed = to_ulong(arg_nat(rng_seed_str));
            EvalBudget budget = make_budget(digits_str, calls_str);
            opt.budget = budget;
            bool all_pass = true;
            if (suite_str == "all") {
                for (const auto& name : verify::suite_names()) {
                    auto r = verify::run_suite(name, opt);
                    print_verify(*r);
                    all_pass = all_pass && r->passed;
                }
            } else {
                auto r = verify::run_suite(suite_str, opt);
                if (!r) {
                    std::cerr << "error: unknown suite '" << suite_str << "'; available:";
                    for (const auto& name : verify::suite_names()) std::cerr << " " << name;
                    std::cerr << "\n";
                    throw ExitWith{2};
                }
                print_verify(*r);
                all_pass = r->passed;
            }
            if (!all_pass) throw ExitWith{1};
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
