#include <algorithm>

#include "strsolve/engine/engine.hpp"
#include "strsolve/error.hpp"
#include "strsolve/ir/normalize.hpp"
#include "strsolve/oracle/oracle.hpp"
#include "strsolve/rewriter/rewriter.hpp"

namespace strsolve::engine {

using ir::Fn;
using ir::VarSort;

namespace {

bool propagating(Fn fn) {
    switch (fn) {
        case Fn::Concat:
        case Fn::Reverse:
        case Fn::Replace:
        case Fn::ReplaceAll:
        case Fn::ReplaceRe:
        case Fn::ReplaceReAll: return true;
        default: return false;
    }
}

}  // namespace

Prover::Prover(Interner& in, AutomatonDb& db, SolverConfig cfg) : in_(in), db_(db), cfg_(std::move(cfg)) {
    cfg_.validate();
    db_.set_state_cap(cfg_.state_cap);
}

bool Prover::over_budget(std::string& reason) const {
    if (stats_.steps >= cfg_.step_cap) {
        reason = "step cap " + std::to_string(cfg_.step_cap) + " reached";
        return true;
    }
    if (cfg_.time_cap_ms > 0) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
        if (static_cast<std::uint64_t>(ms) >= cfg_.time_cap_ms) {
            reason = "time cap " + std::to_string(cfg_.time_cap_ms) + " ms reached";
            return true;
        }
    }
    return false;
}

std::vector<RuleApplication> Prover::candidates(Goal& g) {
    std::vector<RuleApplication> out;
    auto bound = [&](VarId x) { return value_of(g, x).has_value(); };
    auto universal = [&](VarId x) {
        x = rep(g, x);
        if (g.strings.count(x)) return false;
        auto it = g.langs.find(x);
        return it == g.langs.end() || it->second.empty();
    };
    auto fingerprint = [&](const FunEq& eq) {
        std::string fp;
        for (VarId v : ir::vars_of(eq)) {
            if (in_.sort(v) != VarSort::String) continue;
            if (auto w = value_of(g, v)) fp += "=" + utf8_encode(as_string(*w)) + "\x1f";
            else fp += "L" + std::to_string(lang_of(g, v).id) + ";";
        }
        return fp;
    };
    auto push = [&](RuleApplication r) {
        auto [it, _] = g.birth.emplace(r.key, g.age);
        r.birth = it->second;
        out.push_back(std::move(r));
    };

    std::map<VarId, std::vector<FunEq>> concats;
    for (const Literal& l : g.atoms) {
        const auto* fe = std::get_if<FunEq>(&l.atom);
        if (!fe || l.negated) continue;
        const FunEq& eq = *fe;
        if (eq.fn == Fn::Concat) concats[eq.out].push_back(eq);
        if (propagating(eq.fn)) {
            const std::string d = describe(eq);
            // replace-style functions only propagate through their subject
            std::vector<VarId> inputs = eq.fn == Fn::Concat ? eq.args : std::vector<VarId>{eq.args[0]};
            bool inputs_bound = std::all_of(inputs.begin(), inputs.end(), bound);
            if (cfg_.forward && !bound(eq.out) && !inputs_bound) {
                bool skip = (eq.fn == Fn::Concat || eq.fn == Fn::Reverse) &&
                            std::all_of(eq.args.begin(), eq.args.end(), universal);
                if (eq.fn != Fn::Concat && eq.fn != Fn::Reverse && universal(eq.args[0])) skip = true;
                std::string key = "fwd:" + d;
                if (!skip && g.applied[key] != fingerprint(eq)) {
                    push({Rule::Forward, key, fingerprint(eq), eq, std::nullopt, eq.out, 0, 0, 0});
                }
            }
            if (cfg_.backward && !universal(eq.out) && !inputs_bound) {
                std::string key = "bwd:" + d;
                bool useful = g.applied[key] != fingerprint(eq);
                if (useful && eq.fn == Fn::Concat && !bound(eq.args[0]) && !bound(eq.args[1])) {
                    try {
                        AutomatonRef prod = db_.concat(lang_of(g, eq.args[0]), lang_of(g, eq.args[1]));
                        useful = db_.subset_of(prod, lang_of(g, eq.out)) != true;
                    } catch (const StateBlowup&) {
                    }
                }
                if (useful) push({Rule::Backward, key, fingerprint(eq), eq, std::nullopt, eq.out, 0, 0, 0});
            }
        }
        switch (eq.fn) {
            case Fn::ToInt:
            case Fn::FromInt: {
                VarId n = eq.fn == Fn::ToInt ? eq.out : eq.args[0];
                VarId s = eq.fn == Fn::ToInt ? eq.args[0] : eq.out;
                lia::Interval iv = g.ints.get(n);
                if (!bound(n) && !bound(s) && !iv.empty()) {
                    push({Rule::StrInt, "str-int:" + in_.name(n) + ":" + lia::to_string(iv), "", eq, std::nullopt, n, 0, 0, 0});
                }
                break;
            }
            case Fn::IndexOf: {
                VarId i = eq.args[2];
                lia::Interval iv = g.ints.get(i);
                if (bound(eq.args[0]) && bound(eq.args[1]) && !bound(i) && !iv.empty()) {
                    push({Rule::IndexOf, "indexof:" + in_.name(i) + ":" + lia::to_string(iv), "", eq, std::nullopt, i, 0, 0, 0});
                }
                break;
            }
            default: break;
        }
    }
    if (cfg_.nielsen) {
        for (const auto& [z, eqs] : concats) {
            for (std::size_t i = 0; i < eqs.size(); ++i) {
                for (std::size_t j = i + 1; j < eqs.size(); ++j) {
                    std::string key = "nielsen:" + describe(eqs[i]) + "&" + describe(eqs[j]);
                    if (g.applied.count(key)) continue;
                    push({Rule::Nielsen, key, "", eqs[i], eqs[j], z, 0, 0, 0});
                }
            }
        }
    }
    for (std::size_t i = 0; i < g.ors.size(); ++i) {
        push({Rule::Split, "split:" + ir::to_string(g.ors[i], in_), "", std::nullopt, std::nullopt, 0, i, 0, 0});
    }
    for (RuleApplication& r : out) r.priority = priority_of(r, g);
    return out;
}

std::int64_t Prover::priority_of(const RuleApplication& r, const Goal& g) {
    const Weights& w = cfg_.weights;
    auto& self = *this;
    Goal& goal = const_cast<Goal&>(g);
    auto states = [&](VarId x) -> std::int64_t {
        if (self.value_of(goal, x)) return 1;
        return static_cast<std::int64_t>(db_.num_states(self.lang_of(goal, x)));
    };
    auto is_universal = [&](VarId x) {
        x = rep(g, x);
        auto it = g.langs.find(x);
        return !g.strings.count(x) && (it == g.langs.end() || it->second.empty());
    };
    std::int64_t p = 0, size = 0;
    if (r.eq) {
        for (VarId v : ir::vars_of(*r.eq)) {
            if (value_of(g, v)) {
                p += w.ground;
                break;
            }
        }
    }
    switch (r.rule) {
        case Rule::Forward: {
            const FunEq& eq = *r.eq;
            if (eq.fn == Fn::Concat) size = states(eq.args[0]) + states(eq.args[1]);
            else size = states(eq.args[0]);
            if (eq.fn != Fn::Concat && eq.fn != Fn::Reverse && !replacer_for(g, eq).exact) p -= w.inexact_forward;
            size *= 2;  // inputs plus the estimated result
            break;
        }
        case Rule::Backward: {
            const FunEq& eq = *r.eq;
            if (is_universal(eq.out)) p -= w.universal_backward;
            std::int64_t s = states(eq.out);
            size = s + (eq.fn == Fn::Concat ? s * s : s);
            break;
        }
        case Rule::Nielsen: size = 10; break;
        case Rule::Split: size = 5 * static_cast<std::int64_t>(g.ors[r.index].children.size()); break;
        case Rule::StrInt:
        case Rule::IndexOf: size = 20; break;
        default: break;
    }
    p -= w.size * size;
    p += w.age * static_cast<std::int64_t>(g.age - r.birth);
    return p;
}

std::vector<Goal> Prover::apply(Goal g, const RuleApplication& r) {
    auto record = [&](Goal& c) {
        if (!r.fingerprint.empty() && r.eq) {
            // fingerprint after the update, so an unchanged goal does not re-fire
            std::string fp;
            for (VarId v : ir::vars_of(*r.eq)) {
                if (in_.sort(v) != VarSort::String) continue;
                if (auto w = value_of(c, v)) fp += "=" + utf8_encode(as_string(*w)) + "\x1f";
                else fp += "L" + std::to_string(lang_of(c, v).id) + ";";
            }
            c.applied[r.key] = fp;
        }
    };
    try {
        switch (r.rule) {
            case Rule::Forward: {
                bool ok = rule_rcp_forward(g, *r.eq);
                if (!ok) return {};
                record(g);
                return {std::move(g)};
            }
            case Rule::Backward: {
                auto kids = rule_rcp_backward(std::move(g), *r.eq);
                for (Goal& c : kids) record(c);
                return kids;
            }
            case Rule::Nielsen: {
                g.applied[r.key] = "1";
                return rule_nielsen(std::move(g), *r.eq, *r.eq2);
            }
            case Rule::StrInt:
            case Rule::IndexOf:
            case Rule::Subdivide: return rule_subdivide(std::move(g), r.var, r.rule);
            case Rule::Cut: return rule_cut(std::move(g), r.var);
            case Rule::Split: {
                Formula f = g.ors[r.index];
                g.ors.erase(g.ors.begin() + static_cast<std::ptrdiff_t>(r.index));
                std::vector<Goal> kids;
                for (const Formula& d : f.children) {
                    Goal c = g;
                    if (add_formula(c, d)) kids.push_back(std::move(c));
                }
                return kids;
            }
            default: throw PreconditionViolation(std::string("rule is not queued: ") + rule_tag(r.rule));
        }
    } catch (const StateBlowup&) {
        // the application is given up on this goal until its operands change
        g.applied[r.key] = r.fingerprint;
        g.tainted = true;
        return {std::move(g)};
    }
}

std::vector<VarId> Prover::choice_order(const Goal& g) const {
    std::vector<VarId> order;
    auto unbound_string = [&](VarId x) { return in_.sort(x) == VarSort::String && !g.strings.count(rep(g, x)); };
    auto open_int = [&](VarId n) { return in_.sort(n) == VarSort::Int && !lia::concrete_value(n, g.ints); };
    for (VarId x : original_vars_) {
        if (unbound_string(x)) order.push_back(rep(g, x));
    }
    for (VarId n : original_vars_) {
        if (open_int(n) && !in_.length_of(n)) order.push_back(n);
    }
    for (VarId n : original_vars_) {
        if (open_int(n)) order.push_back(n);
    }
    for (VarId v : goal_vars(g)) {
        if (unbound_string(v)) order.push_back(rep(g, v));
    }
    for (VarId v : goal_vars(g)) {
        if (open_int(v)) order.push_back(v);
    }
    return order;
}

Valuation Prover::extract_model(const Goal& g, const Formula& original, const std::vector<VarId>& vars) {
    Valuation full;
    for (VarId v : vars) {
        if (in_.sort(v) == VarSort::String) {
            auto it = g.strings.find(rep(g, v));
            if (it == g.strings.end()) throw PreconditionViolation("extract_model: " + in_.name(v) + " is unbound");
            full[v] = it->second;
            continue;
        }
        if (auto n = lia::concrete_value(v, g.ints)) {
            full[v] = *n;
        } else if (auto x = in_.length_of(v); x && g.strings.count(rep(g, *x))) {
            full[v] = static_cast<std::int64_t>(g.strings.at(rep(g, *x)).size());
        } else {
            throw PreconditionViolation("extract_model: " + in_.name(v) + " is unbound");
        }
    }
    if (!oracle::eval_formula(original, full, db_)) throw VerificationFailed("model does not satisfy the input");
    Valuation model;
    for (auto& [v, val] : full) {
        if (!in_.is_fresh(v)) model[v] = val;
    }
    return model;
}

namespace {

bool all_bound(const Prover& p, const Goal& g, const std::vector<VarId>& vars, const Interner& in) {
    for (VarId v : vars) {
        if (p.value_of(g, v)) continue;
        auto x = in.length_of(v);
        if (x && p.value_of(g, *x)) continue;
        return false;
    }
    return true;
}

}  // namespace

Verdict Prover::solve(const Formula& normalized) {
    start_ = std::chrono::steady_clock::now();
    stats_ = {};
    if (cfg_.trace_level > 0 && cfg_.trace_sink) cfg_.trace_sink(cfg_.header());

    Verdict verdict;
    auto finish = [&](Status s, std::string reason) {
        verdict.stats = stats_;
        if (!verdict.models.empty()) {
            verdict.status = Status::Sat;
            verdict.model = verdict.models.front();
            verdict.reason.clear();
        } else {
            verdict.status = s;
            verdict.reason = std::move(reason);
        }
        return verdict;
    };

    std::vector<Goal> stack;
    try {
        original_ = ir::cse(normalized, in_);
        original_vars_.clear();
        ir::collect_vars(original_, original_vars_);
        std::sort(original_vars_.begin(), original_vars_.end());
        original_vars_.erase(std::unique(original_vars_.begin(), original_vars_.end()), original_vars_.end());
        rewriter::RewriteContext ctx{in_, db_, nullptr};
        stack.push_back(make_goal(rewriter::preprocess(original_, ctx)));
    } catch (const StateBlowup& e) {
        return finish(Status::Unknown, e.what());
    }

    std::string incomplete;
    while (!stack.empty()) {
        std::string reason;
        if (over_budget(reason)) return finish(Status::Unknown, reason);
        Goal g = std::move(stack.back());
        stack.pop_back();
        try {
            for (;;) {
                if (g.closed || !inprocess(g)) {
                    ++stats_.closed;
                    break;
                }
                if (all_bound(*this, g, original_vars_, in_)) {
                    try {
                        Valuation m = extract_model(g, original_, original_vars_);
                        if (std::find(verdict.models.begin(), verdict.models.end(), m) == verdict.models.end()) {
                            verdict.models.push_back(std::move(m));
                        }
                        if (verdict.models.size() >= cfg_.max_models) return finish(Status::Sat, "");
                    } catch (const VerificationFailed&) {
                        trace(g, Rule::Verify, "model rejected", 0);
                        close(g, "verify");
                        ++stats_.closed;
                    }
                    break;
                }
                auto cands = candidates(g);
                RuleApplication pick;
                if (!cands.empty()) {
                    pick = *std::max_element(cands.begin(), cands.end(), [](const RuleApplication& a, const RuleApplication& b) {
                        if (a.priority != b.priority) return a.priority < b.priority;
                        if (a.rule != b.rule) return a.rule > b.rule;
                        return a.key > b.key;
                    });
                } else {
                    auto order = choice_order(g);
                    if (order.empty()) {
                        incomplete = "no applicable rule";
                        break;
                    }
                    VarId v = order.front();
                    pick.rule = in_.sort(v) == VarSort::String ? Rule::Cut : Rule::Subdivide;
                    pick.var = v;
                    pick.key = std::string(rule_tag(pick.rule)) + ":" + in_.name(v);
                }
                ++stats_.steps;
                ++g.age;
                trace(g, pick.rule, pick.eq ? describe(*pick.eq) : pick.rule == Rule::Split ? "or" : in_.name(pick.var),
                      pick.priority);
                auto kids = apply(std::move(g), pick);
                if (kids.size() == 1) {
                    g = std::move(kids.front());
                    if (over_budget(reason)) return finish(Status::Unknown, reason);
                    continue;
                }
                if (kids.empty()) ++stats_.closed;
                stats_.branches += kids.size();
                for (std::size_t i = kids.size(); i-- > 0;) {
                    kids[i].id += "." + std::to_string(i);
                    stack.push_back(std::move(kids[i]));
                }
                break;
            }
        } catch (const StateBlowup& e) {
            incomplete = e.what();
        }
    }
    if (!incomplete.empty()) return finish(Status::Unknown, incomplete);
    return finish(Status::Unsat, "");
}

Verdict solve(const Formula& normalized, Interner& in, AutomatonDb& db, const SolverConfig& cfg) {
    Prover p(in, db, cfg);
    return p.solve(normalized);
}

Verdict portfolio(const Formula& normalized, Interner& in, AutomatonDb& db, const SolverConfig& cfg) {
    if (cfg.time_cap_ms == 0) throw ConfigError("the portfolio needs a time cap");
    Verdict last;
    std::string reasons;
    for (int k = 0; k < 2; ++k) {
        SolverConfig c = cfg;
        c.forward = k == 0;
        c.backward = true;
        c.nielsen = k == 1;
        c.time_cap_ms = std::max<std::uint64_t>(1, cfg.time_cap_ms / 2);
        last = solve(normalized, in, db, c);
        if (last.status != Status::Unknown) return last;
        reasons += (reasons.empty() ? "" : "; ") + c.flags() + ": " + last.reason;
    }
    last.reason = reasons;
    return last;
}

}  // namespace strsolve::engine
