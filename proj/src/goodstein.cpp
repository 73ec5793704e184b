#include "agp/goodstein.hpp"

namespace agp {

GoodsteinState goodstein_start(const Nat& m, GMode mode) {
    GoodsteinState s;
    s.i = 0;
    s.mode = mode;
    if (mode == GMode::Concrete)
        s.value = m;
    else
        s.term = normal_form(m, Nat(2));
    return s;
}

std::optional<GoodsteinState> gstep(const GoodsteinState& s, const EvalBudget& budget) {
    if (s.is_zero()) throw ZeroInput{};
    GoodsteinState next;
    next.i = s.i + 1;
    next.mode = s.mode;
    Nat from = s.base();
    Nat to = from + 1;
    try {
        BudgetMeter meter(budget);
        if (s.mode == GMode::Concrete) {
            NFTerm t = normal_form(*s.value, from);
            NFTerm bt = base_change(t, from, to);
            Nat v = eval_term_meter(bt, to, meter);
            next.value = v - 1;
        } else {
            NFTerm bt = base_change(s.term, from, to);
            next.term = predecessor_meter(bt, to, meter);
        }
        return next;
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

GoodsteinTrace grun(const Nat& m, GMode mode, const Nat& max_steps, const EvalBudget& budget) {
    GoodsteinTrace tr;
    tr.seed = m;
    tr.mode = mode;
    tr.terminated = false;
    GoodsteinState s = goodstein_start(m, mode);
    Nat steps = 0;
    while (true) {
        GoodsteinEntry e;
        e.i = s.i;
        e.base = s.base();
        NFTerm t = s.mode == GMode::Concrete ? normal_form(*s.value, s.base()) : s.term;
        e.nf = print_term(t);
        e.ordinal = to_ordinal(t);
        e.descent_ok = true;
        tr.entries.push_back(std::move(e));
        tr.outcome_i = s.i;
        if (s.is_zero()) {
            tr.terminated = true;
            break;
        }
        if (steps >= max_steps) break;
        auto nxt = gstep(s, budget);
        if (!nxt) break;
        s = std::move(*nxt);
        steps += 1;
    }
    for (size_t j = 0; j + 1 < tr.entries.size(); ++j)
        tr.entries[j].descent_ok =
            ord_compare(tr.entries[j].ordinal, tr.entries[j + 1].ordinal) == Cmp::GT;
    return tr;
}

bool descent_check(const GoodsteinTrace& tr) {
    for (size_t j = 0; j + 1 < tr.entries.size(); ++j)
        if (!tr.entries[j].descent_ok) return false;
    return true;
}

FsBoundReport fs_bound_check(const Nat& m, const Nat& steps, const EvalBudget& budget) {
    FsBoundReport rep{{}, true};
    GoodsteinTrace tr = grun(m, GMode::Symbolic, steps, budget);
    if (tr.entries.empty()) return rep;
    OrdTerm chain = tr.entries[0].ordinal;
    for (Nat k = 1; k <= steps; ++k) {
        if (chain) chain = fund_seq(chain, k + 1);  // now <k+1> of the start
        FsBoundRow row{k, false, false};
        if (k < Nat(tr.entries.size())) {
            const OrdTerm& ok = tr.entries[to_ulong(k)].ordinal;
            row.ok = ord_compare(ok, chain) != Cmp::LT;
        } else if (tr.terminated) {
            // the process already died; nothing left to bound
            break;
        } else {
            row.blown = true;
        }
        if (!row.ok && !row.blown) rep.all_ok = false;
        rep.rows.push_back(row);
    }
    return rep;
}

nlohmann::json trace_json(const GoodsteinTrace& tr) {
    nlohmann::json j;
    j["seed"] = nat_str(tr.seed);
    j["mode"] = tr.mode == GMode::Concrete ? "concrete" : "symbolic";
    j["entries"] = nlohmann::json::array();
    for (const auto& e : tr.entries) {
        nlohmann::json je;
        je["i"] = to_ulong(e.i);
        je["base"] = to_ulong(e.base);
        je["nf"] = e.nf;
        je["ordinal"] = print_ord(e.ordinal);
        je["descent_ok"] = e.descent_ok;
        j["entries"].push_back(std::move(je));
    }
    j["outcome"]["kind"] = tr.terminated ? "terminated" : "budget";
    j["outcome"]["i"] = to_ulong(tr.outcome_i);
    return j;
}

}  // namespace agp
