#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strsolve/ir/ir.hpp"

namespace strsolve::lia {

using ir::Lin;
using ir::VarId;

/// Bounds beyond ±2^62 are widened to infinity so that bound arithmetic
/// never overflows 128-bit intermediates.
inline constexpr std::int64_t kBoundLimit = std::int64_t{1} << 62;
/// Tightenings performed by one propagate call before it gives up on the fixpoint.
inline constexpr std::size_t kTighteningCap = 10'000;

/// Integer interval; nullopt ends are infinite.
struct Interval {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;

    bool empty() const { return lo && hi && *lo > *hi; }
    bool contains(std::int64_t v) const { return (!lo || *lo <= v) && (!hi || v <= *hi); }
    bool operator==(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// Branch-local map from Int variables to intervals. Missing variables are (−∞, +∞).
class IntervalStore {
public:
    Interval get(VarId x) const;
    void set(VarId x, Interval iv) { m_[x] = iv; }
    /// Tightens the lower bound; returns true if it changed.
    bool raise_lo(VarId x, std::int64_t lo);
    /// Tightens the upper bound; returns true if it changed.
    bool lower_hi(VarId x, std::int64_t hi);
    bool consistent() const;
    const std::map<VarId, Interval>& entries() const { return m_; }

    bool operator==(const IntervalStore&) const = default;

private:
    std::map<VarId, Interval> m_;
};

struct PropagateResult {
    bool consistent = true;
    std::size_t tightenings = 0;
    bool capped = false;  ///< stopped at kTighteningCap (result is still sound)
};

/// Bound tightening to a fixpoint over `sys`. On an inconsistent result the
/// store contents are unspecified.
PropagateResult propagate(const std::vector<Lin>& sys, IntervalStore& store);

/// Children in preferred search order (small absolute values first).
/// Throws PreconditionViolation when x has fewer than two values.
std::pair<IntervalStore, IntervalStore> subdivide(VarId x, const IntervalStore& store);

std::optional<std::int64_t> concrete_value(VarId x, const IntervalStore& store);

/// Lin under a full assignment of its variables.
bool holds(const Lin& l, const std::map<VarId, std::int64_t>& values);

}  // namespace strsolve::lia
