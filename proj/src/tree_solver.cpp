#include "mis/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "mis/errors.hpp"

namespace mis {

namespace {

using ExtVec = std::vector<ExtInt>;

/// Per-child maxima over the (tau, t) choices a parent may combine with.
class ChildSummary {
public:
    ChildSummary(const NodeTable& table)  // NOLINT: built in place from tables
        : table_(&table), slots_(table.round_slots()), cap_(table.budget_cap()) {
        const auto rows = static_cast<std::size_t>(cap_ + 1);
        full_prefix_.resize(rows * slots_);
        residual_suffix_.resize(rows * (slots_ + 1));
        for (std::int32_t j = 0; j <= cap_; ++j) {
            ExtInt run;
            for (std::size_t s = 0; s < slots_; ++s) {
                run = max(run, table.at_slot(j, s, ThresholdSlot::Full));
                full_prefix_[row(j) * slots_ + s] = run;
            }
            ExtInt tail;
            residual_suffix_[row(j) * (slots_ + 1) + slots_] = tail;
            for (std::size_t s = slots_; s-- > 0;) {
                tail = max(tail, table.at_slot(j, s, ThresholdSlot::Residual));
                residual_suffix_[row(j) * (slots_ + 1) + s] = tail;
            }
        }
    }

    /// Child active by parent_round - 1 with its full threshold.
    ExtInt early(std::int32_t j, std::int32_t parent_round) const {
        if (parent_round <= 0) return ExtInt::bottom();
        return full_prefix_[row(j) * slots_ + static_cast<std::size_t>(parent_round - 1)];
    }

    /// Any round; the residual threshold only from parent_round + 1 on (NEVER included).
    ExtInt unconstrained(std::int32_t j, std::int32_t parent_round) const {
        return max(full_any(j), residual_suffix_[row(j) * (slots_ + 1) + static_cast<std::size_t>(parent_round + 1)]);
    }

    ExtInt full_any(std::int32_t j) const { return full_prefix_[row(j) * slots_ + slots_ - 1]; }

    struct Pick {
        std::size_t tau_slot;
        ThresholdSlot slot;
    };

    Pick pick_unconstrained(std::int32_t j, std::int32_t parent_round, ExtInt target) const {
        for (std::size_t s = 0; s < slots_; ++s) {
            if (table_->at_slot(j, s, ThresholdSlot::Full) == target) return {s, ThresholdSlot::Full};
            if (static_cast<std::int32_t>(s) >= parent_round + 1 &&
                table_->at_slot(j, s, ThresholdSlot::Residual) == target)
                return {s, ThresholdSlot::Residual};
        }
        throw std::logic_error("tree backtracking: no unconstrained child choice");
    }

    Pick pick_early(std::int32_t j, std::int32_t parent_round, ExtInt target) const {
        for (std::int32_t s = 0; s < parent_round; ++s)
            if (table_->at_slot(j, static_cast<std::size_t>(s), ThresholdSlot::Full) == target)
                return {static_cast<std::size_t>(s), ThresholdSlot::Full};
        throw std::logic_error("tree backtracking: no early child choice");
    }

    Pick pick_full(std::int32_t j, ExtInt target) const {
        for (std::size_t s = 0; s < slots_; ++s)
            if (table_->at_slot(j, s, ThresholdSlot::Full) == target) return {s, ThresholdSlot::Full};
        throw std::logic_error("tree backtracking: no full-threshold child choice");
    }

    std::int32_t clamp(std::int32_t j) const { return std::min(j, cap_); }

private:
    std::size_t row(std::int32_t j) const { return static_cast<std::size_t>(std::min(j, cap_)); }

    const NodeTable* table_;
    std::size_t slots_;
    std::int32_t cap_;
    ExtVec full_prefix_;      // [j][s]: max over slots <= s, full threshold
    ExtVec residual_suffix_;  // [j][s]: max over slots >= s, residual threshold
};

/// out[j] = max over a <= j of acc[a] + gain(j - a).
template <class Gain>
ExtVec merge_budget(const ExtVec& acc, Gain gain) {
    ExtVec out(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        ExtInt best;
        for (std::size_t a = 0; a <= j; ++a) {
            if (acc[a].is_bottom()) continue;
            best = max(best, acc[a] + gain(static_cast<std::int32_t>(j - a)));
        }
        out[j] = best;
    }
    return out;
}

/// Stage arrays of a single-index scan (Amax or Cmax): stages[i][j] over the first i children.
template <class Gain>
std::vector<ExtVec> scan_single(const std::vector<ChildSummary>& kids, std::int32_t cap, Gain gain) {
    std::vector<ExtVec> stages;
    stages.reserve(kids.size() + 1);
    stages.emplace_back(static_cast<std::size_t>(cap + 1), ExtInt(0));
    for (const auto& kid : kids)
        stages.push_back(merge_budget(stages.back(), [&](std::int32_t j) { return gain(kid, j); }));
    return stages;
}

/// Bmax stage arrays: stages[i][j * (k_max + 1) + k], at least k of the first i children active by tau - 1.
std::vector<ExtVec> scan_round(const std::vector<ChildSummary>& kids, std::int32_t cap, std::int32_t tau,
                               std::int32_t k_max) {
    const auto width = static_cast<std::size_t>(k_max + 1);
    const auto rows = static_cast<std::size_t>(cap + 1);
    std::vector<ExtVec> stages;
    stages.reserve(kids.size() + 1);
    ExtVec base(rows * width);
    for (std::size_t j = 0; j < rows; ++j) base[j * width] = ExtInt(0);
    stages.push_back(std::move(base));

    for (const auto& kid : kids) {
        const ExtVec& prev = stages.back();
        ExtVec next(rows * width);
        for (std::size_t j = 0; j < rows; ++j) {
            for (std::size_t a = 0; a <= j; ++a) {
                const auto child_budget = static_cast<std::int32_t>(j - a);
                const ExtInt any = kid.unconstrained(child_budget, tau);
                const ExtInt early = kid.early(child_budget, tau);
                for (std::size_t k = 0; k < width; ++k) {
                    ExtInt best = prev[a * width + k] + any;
                    if (k > 0) best = max(best, prev[a * width + k - 1] + early);
                    next[j * width + k] = max(next[j * width + k], best);
                }
            }
        }
        stages.push_back(std::move(next));
    }
    return stages;
}

ExtInt target_gain(const ChildSummary& kid, std::int32_t j) { return kid.unconstrained(j, 0); }
ExtInt never_gain(const ChildSummary& kid, std::int32_t j) { return kid.full_any(j); }

std::vector<ChildSummary> summarize(std::span<const ChildTable> children) {
    std::vector<ChildSummary> kids;
    kids.reserve(children.size());
    for (const auto& c : children) kids.emplace_back(*c.table);
    return kids;
}

} // namespace

ExtInt leaf_table(std::int64_t b, RoundIndex tau, std::int32_t t, std::int32_t lambda) {
    if (tau.is_never()) return ExtInt(0);
    const auto r = tau.round();
    if (r == 0 && b >= 1) return ExtInt(1);
    if (t <= 0 && r >= 1 && r <= lambda) return ExtInt(1);
    return ExtInt::bottom();
}

ExtInt case_target(std::span<const ChildTable> children, std::int32_t b, std::int32_t /*lambda*/) {
    if (b < 1) return ExtInt::bottom();
    const auto kids = summarize(children);
    const auto stages = scan_single(kids, b - 1, target_gain);
    return ExtInt(1) + stages.back()[static_cast<std::size_t>(b - 1)];
}

ExtInt case_internal_round(std::span<const ChildTable> children, std::int32_t b, std::int32_t tau,
                           std::int32_t t, std::int32_t /*lambda*/) {
    t = std::max(t, 0);
    if (t > static_cast<std::int32_t>(children.size())) return ExtInt::bottom();
    const auto kids = summarize(children);
    const auto stages = scan_round(kids, b, tau, t);
    return ExtInt(1) + stages.back()[static_cast<std::size_t>(b) * static_cast<std::size_t>(t + 1) +
                                     static_cast<std::size_t>(t)];
}

ExtInt case_never(std::span<const ChildTable> children, std::int32_t b, std::int32_t /*lambda*/) {
    const auto kids = summarize(children);
    return scan_single(kids, b, never_gain).back()[static_cast<std::size_t>(b)];
}

TreeDp::TreeDp(const Instance& instance, Node root)
    : thresholds_(instance.thresholds),
      root_(root),
      lambda_(static_cast<std::int32_t>(effective_lambda(instance))),
      budget_(static_cast<std::int32_t>(effective_budget(instance))) {
    const std::size_t n = instance.size();
    if (root < 0 || static_cast<std::size_t>(root) >= n) throw InputError("tree root out of range");
    children_.resize(n);
    subtree_size_.assign(n, 1);
    tables_.resize(n);

    std::vector<Node> order;
    order.reserve(n);
    std::vector<Node> parent(n, -1);
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Node u = order[head];
        for (Node w : instance.graph.neighbors(u)) {
            if (parent[static_cast<std::size_t>(w)] != -1) continue;
            parent[static_cast<std::size_t>(w)] = u;
            children_[static_cast<std::size_t>(u)].push_back(w);
            order.push_back(w);
        }
    }
    if (order.size() != n) throw ClassMismatchError("tree solver: graph is not connected");

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Node v = *it;
        for (Node c : children(v)) subtree_size_[static_cast<std::size_t>(v)] += subtree_size_[static_cast<std::size_t>(c)];
        compute(v);
    }
}

std::int32_t TreeDp::threshold_of(Node v, ThresholdSlot slot) const {
    const auto t = thresholds_[static_cast<std::size_t>(v)];
    return slot == ThresholdSlot::Full ? t : std::max(t - 1, 0);
}

std::vector<ChildTable> TreeDp::child_tables(Node v) const {
    std::vector<ChildTable> out;
    for (Node c : children(v)) out.push_back({&table(c)});
    return out;
}

void TreeDp::compute(Node v) {
    const auto cap = std::min(budget_, subtree_size_[static_cast<std::size_t>(v)]);
    NodeTable table(lambda_, cap);
    const auto kids = summarize(child_tables(v));
    const auto d = static_cast<std::int32_t>(kids.size());
    const auto never_slot = static_cast<std::size_t>(lambda_ + 1);

    const auto targeted = scan_single(kids, cap, target_gain).back();
    const auto inactive = scan_single(kids, cap, never_gain).back();
    for (std::int32_t b = 0; b <= cap; ++b) {
        const ExtInt with_v = b >= 1 ? ExtInt(1) + targeted[static_cast<std::size_t>(b - 1)] : ExtInt::bottom();
        for (auto slot : {ThresholdSlot::Residual, ThresholdSlot::Full}) {
            table.set(b, 0, slot, with_v);
            table.set(b, never_slot, slot, inactive[static_cast<std::size_t>(b)]);
        }
    }

    const std::int32_t k_max = std::min(threshold_of(v, ThresholdSlot::Full), d);
    const auto width = static_cast<std::size_t>(k_max + 1);
    for (std::int32_t tau = 1; tau <= lambda_; ++tau) {
        const auto stages = scan_round(kids, cap, tau, k_max);
        const auto& last = stages.back();
        for (std::int32_t b = 0; b <= cap; ++b) {
            for (auto slot : {ThresholdSlot::Residual, ThresholdSlot::Full}) {
                const auto t = threshold_of(v, slot);
                const ExtInt value = t <= k_max
                                         ? ExtInt(1) + last[static_cast<std::size_t>(b) * width + static_cast<std::size_t>(t)]
                                         : ExtInt::bottom();
                table.set(b, static_cast<std::size_t>(tau), slot, value);
            }
        }
    }
    tables_[static_cast<std::size_t>(v)] = std::move(table);
}

std::pair<RoundIndex, ExtInt> TreeDp::best_root_round() const {
    const auto& t = table(root_);
    std::size_t best_slot = 0;
    ExtInt best;
    for (std::size_t s = 0; s < t.round_slots(); ++s) {
        const ExtInt value = t.at_slot(budget_, s, ThresholdSlot::Full);
        if (value > best) {
            best = value;
            best_slot = s;
        }
    }
    return {RoundIndex::from_slot(best_slot, lambda_), best};
}

void TreeDp::expand(const Frame& f, std::vector<Frame>& stack, std::vector<Node>& seeds) const {
    const auto& own = table(f.v);
    const ExtInt value = own.at_slot(f.budget, f.tau_slot, f.slot);
    if (value.is_bottom()) throw std::logic_error("tree backtracking reached an infeasible entry");

    const auto kids = summarize(child_tables(f.v));
    const auto child_ids = children(f.v);
    const auto d = kids.size();
    const auto never_slot = static_cast<std::size_t>(lambda_ + 1);

    auto push = [&](std::size_t i, std::int32_t budget, ChildSummary::Pick pick) {
        stack.push_back({child_ids[i], kids[i].clamp(budget), pick.tau_slot, pick.slot});
    };

    if (f.tau_slot == 0 || f.tau_slot == never_slot) {
        const bool targeted = f.tau_slot == 0;
        if (targeted) seeds.push_back(f.v);
        auto gain = targeted ? target_gain : never_gain;
        std::int32_t j = targeted ? f.budget - 1 : f.budget;
        const auto stages = scan_single(kids, j, gain);
        for (std::size_t i = d; i-- > 0;) {
            const ExtInt want = stages[i + 1][static_cast<std::size_t>(j)];
            bool found = false;
            for (std::int32_t a = 0; a <= j && !found; ++a) {
                const ExtInt g = gain(kids[i], j - a);
                if (stages[i][static_cast<std::size_t>(a)] + g != want) continue;
                push(i, j - a,
                     targeted ? kids[i].pick_unconstrained(j - a, 0, g) : kids[i].pick_full(j - a, g));
                j = a;
                found = true;
            }
            if (!found) throw std::logic_error("tree backtracking: budget split not found");
        }
        return;
    }

    const auto tau = static_cast<std::int32_t>(f.tau_slot);
    std::int32_t k = threshold_of(f.v, f.slot);
    const auto stages = scan_round(kids, f.budget, tau, k);
    const auto width = static_cast<std::size_t>(k + 1);
    std::int32_t j = f.budget;
    for (std::size_t i = d; i-- > 0;) {
        const ExtInt want = stages[i + 1][static_cast<std::size_t>(j) * width + static_cast<std::size_t>(k)];
        bool found = false;
        for (std::int32_t a = 0; a <= j && !found; ++a) {
            const auto at = [&](std::int32_t kk) {
                return stages[i][static_cast<std::size_t>(a) * width + static_cast<std::size_t>(kk)];
            };
            const ExtInt any = kids[i].unconstrained(j - a, tau);
            if (at(k) + any == want) {
                push(i, j - a, kids[i].pick_unconstrained(j - a, tau, any));
                found = true;
            } else if (k > 0) {
                const ExtInt early = kids[i].early(j - a, tau);
                if (at(k - 1) + early == want) {
                    push(i, j - a, kids[i].pick_early(j - a, tau, early));
                    --k;
                    found = true;
                }
            }
            if (found) j = a;
        }
        if (!found) throw std::logic_error("tree backtracking: budget split not found");
    }
}

std::vector<Node> TreeDp::backtrack(RoundIndex root_tau) const {
    std::vector<Node> seeds;
    std::vector<Frame> stack{{root_, std::min(budget_, table(root_).budget_cap()), root_tau.slot(lambda_),
                              ThresholdSlot::Full}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        expand(f, stack, seeds);
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

Solution solve_tree(const Instance& raw, Node root) {
    raw.validate();
    const auto cls = classify(raw.graph);
    if (cls != GraphClass::Tree && cls != GraphClass::Path)
        throw ClassMismatchError("tree solver requires a tree, got " + std::string(to_string(cls)));
    const Instance instance = normalize_thresholds(raw);
    const TreeDp dp(instance, root);
    const auto [tau, value] = dp.best_root_round();
    Solution sol;
    sol.solver = SolverKind::Tree;
    sol.influenced_count = static_cast<std::size_t>(value.value());
    sol.seeds = dp.backtrack(tau);
    return sol;
}

} // namespace mis
