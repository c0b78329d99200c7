#include "strsolve/lia/lia.hpp"

#include "strsolve/error.hpp"

namespace strsolve::lia {

namespace {

using i128 = __int128;

std::optional<std::int64_t> clamp_bound(i128 v) {
    if (v > kBoundLimit || v < -kBoundLimit) return std::nullopt;
    return static_cast<std::int64_t>(v);
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Finite part of a bound sum plus the number of infinite contributions.
struct PartialSum {
    i128 finite = 0;
    int infinite = 0;
};

}  // namespace

std::string to_string(const Interval& iv) {
    std::string s = "[";
    s += iv.lo ? std::to_string(*iv.lo) : "-inf";
    s += ", ";
    s += iv.hi ? std::to_string(*iv.hi) : "+inf";
    return s + "]";
}

Interval IntervalStore::get(VarId x) const {
    auto it = m_.find(x);
    return it == m_.end() ? Interval{} : it->second;
}

bool IntervalStore::raise_lo(VarId x, std::int64_t lo) {
    Interval& iv = m_[x];
    if (iv.lo && *iv.lo >= lo) return false;
    iv.lo = lo;
    return true;
}

bool IntervalStore::lower_hi(VarId x, std::int64_t hi) {
    Interval& iv = m_[x];
    if (iv.hi && *iv.hi <= hi) return false;
    iv.hi = hi;
    return true;
}

bool IntervalStore::consistent() const {
    for (const auto& [x, iv] : m_) {
        if (iv.empty()) return false;
    }
    return true;
}

PropagateResult propagate(const std::vector<Lin>& sys, IntervalStore& store) {
    PropagateResult res;
    if (!store.consistent()) {
        res.consistent = false;
        return res;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Lin& l : sys) {
            // min and max of Σ a·x over the current box
            PartialSum mn, mx;
            for (const auto& [a, x] : l.terms) {
                Interval iv = store.get(x);
                auto lo_part = a > 0 ? iv.lo : iv.hi;
                auto hi_part = a > 0 ? iv.hi : iv.lo;
                if (lo_part) mn.finite += i128{a} * *lo_part; else ++mn.infinite;
                if (hi_part) mx.finite += i128{a} * *hi_part; else ++mx.infinite;
            }
            const i128 c = l.constant;
            if (l.terms.empty() || (mn.infinite == 0 && mx.infinite == 0)) {
                bool ok = l.rel == ir::Rel::Le ? mn.finite + c <= 0 : (mn.finite + c <= 0 && mx.finite + c >= 0);
                if (!ok) {
                    res.consistent = false;
                    return res;
                }
                if (l.terms.empty()) continue;
            }
            for (const auto& [a, x] : l.terms) {
                Interval iv = store.get(x);
                auto lo_part = a > 0 ? iv.lo : iv.hi;
                auto hi_part = a > 0 ? iv.hi : iv.lo;
                // others' minimum: a·x ≤ -c - min(others)
                PartialSum omn = mn;
                if (lo_part) omn.finite -= i128{a} * *lo_part; else --omn.infinite;
                std::optional<i128> upper_ax, lower_ax;
                if (omn.infinite == 0) upper_ax = -c - omn.finite;
                if (l.rel == ir::Rel::Eq) {
                    PartialSum omx = mx;
                    if (hi_part) omx.finite -= i128{a} * *hi_part; else --omx.infinite;
                    if (omx.infinite == 0) lower_ax = -c - omx.finite;
                }
                auto apply_upper = [&](i128 bound_ax) {
                    // a·x ≤ bound_ax
                    if (a > 0) {
                        if (auto b = clamp_bound(floor_div(bound_ax, a)); b && store.lower_hi(x, *b)) return true;
                    } else {
                        if (auto b = clamp_bound(ceil_div(bound_ax, a)); b && store.raise_lo(x, *b)) return true;
                    }
                    return false;
                };
                auto apply_lower = [&](i128 bound_ax) {
                    // a·x ≥ bound_ax
                    if (a > 0) {
                        if (auto b = clamp_bound(ceil_div(bound_ax, a)); b && store.raise_lo(x, *b)) return true;
                    } else {
                        if (auto b = clamp_bound(floor_div(bound_ax, a)); b && store.lower_hi(x, *b)) return true;
                    }
                    return false;
                };
                bool tightened = false;
                if (upper_ax) tightened |= apply_upper(*upper_ax);
                if (lower_ax) tightened |= apply_lower(*lower_ax);
                if (tightened) {
                    if (store.get(x).empty()) {
                        res.consistent = false;
                        return res;
                    }
                    changed = true;
                    if (++res.tightenings >= kTighteningCap) {
                        res.capped = true;
                        return res;
                    }
                    // refresh the sums for the remaining terms
                    mn = {};
                    mx = {};
                    for (const auto& [a2, x2] : l.terms) {
                        Interval iv2 = store.get(x2);
                        auto l2 = a2 > 0 ? iv2.lo : iv2.hi;
                        auto h2 = a2 > 0 ? iv2.hi : iv2.lo;
                        if (l2) mn.finite += i128{a2} * *l2; else ++mn.infinite;
                        if (h2) mx.finite += i128{a2} * *h2; else ++mx.infinite;
                    }
                }
            }
        }
    }
    return res;
}

std::pair<IntervalStore, IntervalStore> subdivide(VarId x, const IntervalStore& store) {
    Interval iv = store.get(x);
    if (iv.empty() || (iv.lo && iv.hi && *iv.lo == *iv.hi)) {
        throw PreconditionViolation("subdivide needs an interval with at least two values");
    }
    IntervalStore a = store, b = store;
    if (iv.lo && iv.hi) {
        auto m = static_cast<std::int64_t>(floor_div(i128{*iv.lo} + *iv.hi, 2));
        a.set(x, {iv.lo, m});
        b.set(x, {m + 1, iv.hi});
    } else if (iv.lo) {
        if (*iv.lo >= 0) {
            // doubling window [lo, 2lo] first
            std::int64_t w = std::min<std::int64_t>(*iv.lo * 2, kBoundLimit);
            a.set(x, {iv.lo, w});
            b.set(x, {w + 1, std::nullopt});
        } else {
            a.set(x, {0, std::nullopt});
            b.set(x, {iv.lo, -1});
        }
    } else if (iv.hi) {
        if (*iv.hi <= 0) {
            std::int64_t w = std::max<std::int64_t>(*iv.hi * 2, -kBoundLimit);
            a.set(x, {w, iv.hi});
            b.set(x, {std::nullopt, w - 1});
        } else {
            a.set(x, {0, iv.hi});
            b.set(x, {std::nullopt, -1});
        }
    } else {
        a.set(x, {0, std::nullopt});
        b.set(x, {std::nullopt, -1});
    }
    return {a, b};
}

std::optional<std::int64_t> concrete_value(VarId x, const IntervalStore& store) {
    Interval iv = store.get(x);
    if (iv.lo && iv.hi && *iv.lo == *iv.hi) return *iv.lo;
    return std::nullopt;
}

bool holds(const Lin& l, const std::map<VarId, std::int64_t>& values) {
    i128 sum = l.constant;
    for (const auto& [a, x] : l.terms) sum += i128{a} * values.at(x);
    return l.rel == ir::Rel::Eq ? sum == 0 : sum <= 0;
}

}  // namespace strsolve::lia
