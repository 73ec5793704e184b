// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agp/goodstein.hpp"
#include "agp/oracle.hpp"
#include "agp/verify.hpp"

using namespace agp;

namespace {

struct Outcome {
    int id;
    std::string what;
    bool pass;
    double secs;
    std::string detail;
};

std::vector<Outcome> outcomes;

template <typename F>
void criterion(int id, const std::string& what, double time_limit_s, F&& body) {
    Outcome o{id, what, true, 0.0, ""};
    auto start = std::chrono::steady_clock::now();
    try {
        std::string detail;
        o.pass = body(detail);
        o.detail = detail;
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    o.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && time_limit_s > 0 && o.secs > time_limit_s) {
        o.pass = false;
        o.detail = "time limit exceeded";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " ("
              << std::fixed << std::setprecision(2) << o.secs << " s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << "\n" << std::flush;
    outcomes.push_back(o);
}

bool suite_result(const verify::Result& r, std::string& detail) {
    std::ostringstream os;
    os << "checks=" << r.checks << " skipped=" << r.skipped;
    if (!r.note.empty()) os << " (" << r.note << ")";
    if (!r.passed)
        for (const auto& f : r.failures) os << "; " << f;
    detail = os.str();
    return r.passed;
}

}  // namespace

int main() {
    criterion(1, "two-step sandwich and printed form of 2^65537 at base 2", 10.0,
              [](std::string& detail) {
                  Nat m = pow_nat(Nat(2), 65537);
                  SandwichSeq s = sandwich(m, Nat(2));
                  bool ok = s.steps.size() == 2 && s.steps[0].a == 1 && s.steps[0].b == 1 &&
                            s.steps[0].m == 65536 && s.steps[1].a == 0 &&
                            s.steps[1].b == 65537 && s.steps[1].m == m;
                  std::string printed = print_term(normal_form(m, Nat(2)));
                  ok = ok && printed == "A(0,A(A(0,0),A(0,0))+A(0,0))";
                  detail = "printed " + printed;
                  return ok;
              });

    criterion(2, "base change of 2^16+1 and the six-fold right expansion", 10.0,
              [](std::string& detail) {
                  NFTerm t = normal_form(Nat(65537), Nat(2));
                  NFTerm bt = base_change(t, Nat(2), Nat(3));
                  bool ok = print_term(bt) == "A(A(0,0),A(0,0))+A(0,0)";
                  // head block expands through level 0 twice: the tower shape
                  NFTerm b11 = head_block(bt);
                  NFTerm r1 = right_expand(b11, Nat(1), Nat(3), Nat(3));
                  ok = ok && term_eq(r1, wrap_blocks(nullptr, Nat(3),
                                                     make_block(one_term(), nullptr)));
                  NFTerm a10 = make_block(one_term(), nullptr);
                  NFTerm r2 = right_expand(a10, Nat(1), Nat(3), Nat(3));
                  ok = ok && term_eq(r2, wrap_blocks(nullptr, Nat(3), one_term()));
                  ok = ok && term_eq(wrap_blocks(nullptr, Nat(3), r2),
                                     wrap_blocks(nullptr, Nat(6), one_term()));
                  // the same bookkeeping is value-exact where values fit
                  NFTerm small = right_expand(normal_form(Nat(65536), Nat(2)), Nat(1), Nat(2),
                                              Nat(2));
                  ok = ok && *eval_term(small, Nat(2)) == 65536;
                  detail = "printed " + print_term(bt);
                  return ok;
              });

    criterion(3, "sandwiching equals exhaustive search, m <= 100000, bases 2..4", 300.0,
              [](std::string& detail) {
                  verify::Options opt;
                  opt.limit = 100000;
                  return suite_result(verify::sandwich_oracle_suite(opt), detail);
              });

    criterion(4, "symbolic predecessor inverts +1, m <= 100000, bases 2..3", 600.0,
              [](std::string& detail) {
                  verify::Options opt;
                  opt.limit = 100000;
                  return suite_result(verify::predecessor_suite(opt), detail);
              });

    criterion(5, "base-change values strictly increase, m <= 4096", 300.0,
              [](std::string& detail) {
                  Nat prev;
                  for (Nat m = 0; m <= 4096; ++m) {
                      NFTerm bt = base_change(normal_form(m, Nat(2)), Nat(2), Nat(3));
                      auto v = eval_term(bt, Nat(3));
                      if (!v) {
                          detail = "value exceeded budget at m=" + nat_str(m);
                          return false;
                      }
                      if (m > 0 && !(*v > prev)) {
                          detail = "not increasing at m=" + nat_str(m);
                          return false;
                      }
                      prev = *v;
                  }
                  detail = "4097 values";
                  return true;
              });

    criterion(6, "base-change outputs re-validate as normal forms, m <= 4096", 300.0,
              [](std::string& detail) {
                  for (Nat m = 1; m <= 4096; ++m) {
                      NFTerm bt = base_change(normal_form(m, Nat(2)), Nat(2), Nat(3));
                      auto r = validate_nf(bt, Nat(3));
                      if (r.verdict != Validity::Valid) {
                          detail = "validation failed at m=" + nat_str(m) + ": " + r.reason;
                          return false;
                      }
                  }
                  detail = "4096 terms";
                  return true;
              });

    criterion(7, "base-omega image is stable under base change, m <= 4096", 300.0,
              [](std::string& detail) {
                  for (Nat m = 1; m <= 4096; ++m) {
                      NFTerm t = normal_form(m, Nat(2));
                      NFTerm bt = base_change(t, Nat(2), Nat(3));
                      OrdTerm o1 = to_ordinal(t);
                      if (ord_compare(o1, to_ordinal(bt)) != Cmp::EQ) {
                          detail = "structural image differs at m=" + nat_str(m);
                          return false;
                      }
                      auto v = eval_term(bt, Nat(3));
                      if (!v) {
                          detail = "image value exceeded budget at m=" + nat_str(m);
                          return false;
                      }
                      if (ord_compare(o1, ordinal_of_value(*v, Nat(3))) != Cmp::EQ) {
                          detail = "re-normalized image differs at m=" + nat_str(m);
                          return false;
                      }
                  }
                  detail = "4096 images, both routes";
                  return true;
              });

    criterion(8, "termination indices 1/3/5 and mode agreement, seeds <= 64", 600.0,
              [](std::string& detail) {
                  struct Want {
                      unsigned long m, i;
                  };
                  for (Want w : {Want{1, 1}, Want{2, 3}, Want{3, 5}}) {
                      GoodsteinTrace tr = grun(Nat(w.m), GMode::Concrete, Nat(10));
                      if (!tr.terminated || tr.outcome_i != Nat(w.i)) {
                          detail = "termination index wrong for seed " + std::to_string(w.m);
                          return false;
                      }
                  }
                  unsigned long compared = 0;
                  for (Nat m = 1; m <= 64; ++m) {
                      GoodsteinTrace c = grun(m, GMode::Concrete, Nat(25));
                      GoodsteinTrace s = grun(m, GMode::Symbolic, Nat(25));
                      size_t overlap = std::min(c.entries.size(), s.entries.size());
                      for (size_t i = 0; i < overlap; ++i, ++compared) {
                          if (c.entries[i].nf != s.entries[i].nf) {
                              detail = "modes disagree at seed " + nat_str(m) + " step " +
                                       std::to_string(i);
                              return false;
                          }
                      }
                  }
                  detail = std::to_string(compared) + " aligned steps";
                  return true;
              });

    criterion(9, "ordinal descent along every trace, seeds <= 64", 600.0,
              [](std::string& detail) {
                  for (Nat m = 1; m <= 64; ++m) {
                      GoodsteinTrace tr = grun(m, GMode::Concrete, Nat(25));
                      if (!descent_check(tr)) {
                          detail = "descent fails for concrete seed " + nat_str(m);
                          return false;
                      }
                  }
                  GoodsteinTrace t4 = grun(Nat(4), GMode::Symbolic, Nat(5));
                  if (t4.entries.size() < 6) {
                      detail = "symbolic seed 4 did not run five steps";
                      return false;
                  }
                  if (print_ord(t4.entries[0].ordinal) != "phi(phi(0,0),0)") {
                      detail = "seed 4 does not start at the first fixed point";
                      return false;
                  }
                  if (!descent_check(t4)) {
                      detail = "descent fails for symbolic seed 4";
                      return false;
                  }
                  detail = "64 concrete traces, 5 symbolic steps from seed 4";
                  return true;
              });

    criterion(10, "[2] of the image bounds the image of the decremented change, m <= 256",
              300.0, [](std::string& detail) {
                  verify::Options opt;
                  opt.limit = 256;
                  return suite_result(verify::lemma13_suite(opt), detail);
              });

    criterion(11, "fundamental-sequence unit steps and 10^4 random descents", 300.0,
              [](std::string& detail) {
                  verify::Options opt;
                  opt.limit = 10000;
                  return suite_result(verify::fundseq_suite(opt), detail);
              });

    criterion(12, "no gap-property failures in the sampled walks", 600.0,
              [](std::string& detail) {
                  verify::Options opt;
                  return suite_result(verify::bachmann_suite(opt), detail);
              });

    int failed = 0;
    for (const auto& o : outcomes)
        if (!o.pass) ++failed;
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failed))
              << "\n";
    return failed == 0 ? 0 : 1;
}
