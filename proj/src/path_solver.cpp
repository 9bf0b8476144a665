#include "mis/path_solver.hpp"

#include <algorithm>
#include <string>

#include "mis/diffusion.hpp"
#include "mis/errors.hpp"
#include "mis/generate.hpp"

namespace mis {

std::vector<Node> path_order(const Graph& graph) {
    const auto cls = classify(graph);
    if (cls != GraphClass::Path)
        throw ClassMismatchError("path solver requires a path, got " + std::string(to_string(cls)));
    const std::size_t n = graph.node_count();
    Node start = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (graph.degree(static_cast<Node>(v)) <= 1) {
            start = static_cast<Node>(v);
            break;
        }
    }
    std::vector<Node> order{start};
    Node prev = -1;
    Node cur = start;
    while (order.size() < n) {
        for (Node w : graph.neighbors(cur)) {
            if (w == prev) continue;
            prev = cur;
            cur = w;
            break;
        }
        order.push_back(cur);
    }
    return order;
}

SegmentDecomposition preprocess_zeros(const Thresholds& line, std::int64_t lambda) {
    const std::size_t m = line.size();
    SegmentDecomposition out;
    if (m == 0) return out;

    std::vector<std::int64_t> act(m, DiffusionTrace::kNever);
    if (lambda > 0) {
        Instance inst;
        inst.graph = make_path(m);
        inst.thresholds = line;
        inst.lambda = lambda;
        Simulator sim(inst);
        sim.run({});
        act = sim.activation();
    }

    // A neighbor active by lambda - 1 helps from a round that still counts.
    const auto helps = [&](std::size_t x) { return act[x] != DiffusionTrace::kNever && act[x] <= lambda - 1; };

    std::size_t x = 0;
    while (x < m) {
        if (act[x] != DiffusionTrace::kNever) {
            out.auto_influenced.push_back(x);
            ++x;
            continue;
        }
        Segment seg;
        const std::size_t begin = x;
        while (x < m && act[x] == DiffusionTrace::kNever) {
            seg.positions.push_back(x);
            seg.thresholds.push_back(std::max(line[x], 1));
            ++x;
        }
        const std::size_t last = x - 1;
        if (begin > 0 && helps(begin - 1)) {
            --seg.thresholds.front();
            seg.reduced.push_back(begin);
        }
        if (x < m && helps(x)) {
            --seg.thresholds.back();
            if (seg.reduced.empty() || seg.reduced.back() != last) seg.reduced.push_back(last);
        }
        out.segments.push_back(std::move(seg));
    }
    return out;
}

SegmentDecomposition preprocess_zeros(const Instance& instance) {
    const auto normalized = normalize_thresholds(instance);
    Thresholds line;
    for (Node v : path_order(normalized.graph)) line.push_back(normalized.threshold(v));
    return preprocess_zeros(line, instance.lambda);
}

// --- line DP ----------------------------------------------------------------

PathDp::PathDp(const Thresholds& thresholds, const std::vector<std::int64_t>& weights, std::int64_t lambda,
               std::int64_t budget)
    : m_(thresholds.size()),
      lambda_(std::min<std::int64_t>(lambda, static_cast<std::int64_t>(thresholds.size()))),
      cap_(std::min<std::int64_t>(budget, static_cast<std::int64_t>(thresholds.size()))) {
    t_.assign(m_ + 1, 0);
    for (std::size_t i = 1; i <= m_; ++i) {
        t_[i] = thresholds[i - 1];
        if (t_[i] < 0 || t_[i] > 3)
            throw InputError("path threshold " + std::to_string(t_[i]) + " outside [0, 3]");
    }

    std::vector<std::int64_t> right_run(m_ + 2, 0);
    for (std::size_t i = m_; i-- > 1;) right_run[i] = t_[i + 1] == 1 ? right_run[i + 1] + 1 : 0;
    left_run_.assign(m_ + 1, 0);
    for (std::size_t i = 2; i <= m_; ++i) left_run_[i] = t_[i - 1] == 1 ? left_run_[i - 1] + 1 : 0;

    std::vector<std::int64_t> prefix(m_ + 1, 0);
    for (std::size_t i = 1; i <= m_; ++i) prefix[i] = prefix[i - 1] + weights[i - 1];
    const auto weight_between = [&](std::size_t lo, std::size_t hi) {  // positions lo..hi, 1-based
        hi = std::min(hi, m_);
        return hi >= lo ? prefix[hi] - prefix[lo - 1] : 0;
    };

    const auto budgets = static_cast<std::size_t>(cap_ + 1);
    rows_.assign(m_ + 1, 1);
    offset_.assign(m_ + 2, 0);
    for (std::size_t i = 1; i <= m_; ++i) {
        rows_[i] = std::min(lambda_, right_run[i] + 1) + 1;
        offset_[i + 1] = offset_[i] + budgets * static_cast<std::size_t>(rows_[i]) * 2;
    }
    took_target_.assign(offset_[m_ + 1], false);
    took_source_.assign(offset_[m_ + 1], false);

    // Only r = 0 entries are read from rows further back than i - 1, and never
    // more than lambda + 1 rows back.
    const auto ring = static_cast<std::size_t>(lambda_) + 2;
    std::vector<std::int64_t> zero_slice(ring * budgets * 2, 0);
    const auto zero_index = [&](std::size_t i, std::int64_t b, int slot) {
        return ((i % ring) * budgets + static_cast<std::size_t>(b)) * 2 + static_cast<std::size_t>(slot);
    };
    const auto at_zero = [&](std::size_t i, std::int64_t b, int slot) -> std::int64_t {
        return i == 0 ? 0 : zero_slice[zero_index(i, b, slot)];
    };
    std::vector<std::int64_t> prev_row;
    std::vector<std::int64_t> cur_row;

    for (std::size_t i = 1; i <= m_; ++i) {
        const auto rows = rows_[i];
        cur_row.assign(budgets * static_cast<std::size_t>(rows) * 2, 0);
        const auto prev_rows = rows_[i - 1];

        // v_i targeted: active from round 0, reaches lambda nodes each way.
        const auto ell = std::min(lambda_, left_run_[i]);
        const auto back = i - static_cast<std::size_t>(ell) - 1;
        const int back_slot = ell < lambda_ ? 0 : 1;

        // v_i a free source: active from round 1, reaches lambda - 1 nodes each way.
        const bool source = t_[i] == 0 && lambda_ >= 1;
        const auto src_ell = source ? std::min(lambda_ - 1, left_run_[i]) : 0;
        const auto src_back = i - static_cast<std::size_t>(src_ell) - 1;
        const int src_slot = src_ell < lambda_ - 1 ? 0 : 1;

        for (std::int64_t b = 0; b <= cap_; ++b) {
            for (std::int64_t r = 0; r < rows; ++r) {
                const std::int64_t m0 =
                    b > 0 ? at_zero(back, b - 1, back_slot) + weight_between(back + 1, i + static_cast<std::size_t>(r)) : -1;
                const std::int64_t m2 =
                    source ? at_zero(src_back, b, src_slot) +
                                 weight_between(src_back + 1, i + static_cast<std::size_t>(std::min(r, lambda_ - 1)))
                           : -1;
                for (int slot = 0; slot < 2; ++slot) {
                    ++cells_;
                    std::int64_t m1 = 0;
                    if (i > 1) {
                        if (threshold(i, slot) > 1) {
                            m1 = at_zero(i - 1, b, 1);
                        } else {
                            const auto rr = std::min({lambda_, r + 1, prev_rows - 1});
                            m1 = prev_row[(static_cast<std::size_t>(b) * static_cast<std::size_t>(prev_rows) +
                                           static_cast<std::size_t>(rr)) * 2 + 1];
                        }
                    }
                    const auto local = (static_cast<std::size_t>(b) * static_cast<std::size_t>(rows) +
                                        static_cast<std::size_t>(r)) * 2 + static_cast<std::size_t>(slot);
                    auto best = m1;
                    if (m2 > best) {
                        best = m2;
                        took_source_[offset_[i] + local] = true;
                    }
                    if (m0 > best) {
                        best = m0;
                        took_target_[offset_[i] + local] = true;
                        took_source_[offset_[i] + local] = false;
                    }
                    cur_row[local] = best;
                }
            }
            for (int slot = 0; slot < 2; ++slot)
                zero_slice[zero_index(i, b, slot)] =
                    cur_row[(static_cast<std::size_t>(b) * static_cast<std::size_t>(rows)) * 2 + static_cast<std::size_t>(slot)];
        }
        std::swap(prev_row, cur_row);
    }

    values_.resize(budgets);
    for (std::int64_t b = 0; b <= cap_; ++b) values_[static_cast<std::size_t>(b)] = at_zero(m_, b, 1);
}

std::int64_t PathDp::threshold(std::size_t i, int slot) const {
    return slot == 1 ? t_[i] : std::max(t_[i] - 1, 0);
}

std::size_t PathDp::cell_index(std::size_t i, std::int64_t b, std::int64_t r, int slot) const {
    return offset_[i] + (static_cast<std::size_t>(b) * static_cast<std::size_t>(rows_[i]) + static_cast<std::size_t>(r)) * 2 +
           static_cast<std::size_t>(slot);
}

PathDp::Choice PathDp::choice(std::size_t i, std::int64_t b, std::int64_t r, int slot) const {
    const auto k = cell_index(i, b, r, slot);
    if (took_target_[k]) return Choice::Target;
    if (took_source_[k]) return Choice::Source;
    return Choice::Skip;
}

std::vector<std::size_t> PathDp::targets(std::int64_t b) const {
    std::vector<std::size_t> out;
    b = std::min(b, cap_);
    std::size_t i = m_;
    std::int64_t r = 0;
    int slot = 1;
    while (i > 0) {
        const auto c = choice(i, b, r, slot);
        if (c == Choice::Target) {
            out.push_back(i - 1);
            const auto ell = std::min(lambda_, left_run_[i]);
            slot = ell < lambda_ ? 0 : 1;
            i -= static_cast<std::size_t>(ell) + 1;
            --b;
            r = 0;
        } else if (c == Choice::Source) {
            const auto ell = std::min(lambda_ - 1, left_run_[i]);
            slot = ell < lambda_ - 1 ? 0 : 1;
            i -= static_cast<std::size_t>(ell) + 1;
            r = 0;
        } else if (threshold(i, slot) > 1) {
            --i;
            r = 0;
            slot = 1;
        } else {
            if (i > 1) r = std::min({lambda_, r + 1, rows_[i - 1] - 1});
            --i;
            slot = 1;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

LinePlan solve_line(const Thresholds& thresholds, const std::vector<std::int64_t>& weights, std::int64_t lambda,
                    std::int64_t budget) {
    const PathDp dp(thresholds, weights, lambda, budget);
    LinePlan plan;
    plan.value = dp.value(dp.budget_cap());
    plan.targets = dp.targets(dp.budget_cap());
    plan.cells_evaluated = dp.cells_evaluated();
    return plan;
}

Solution solve_path(const Instance& instance, std::size_t& cells_evaluated) {
    instance.validate();
    const auto normalized = normalize_thresholds(instance);
    const auto order = path_order(normalized.graph);
    Thresholds line;
    for (Node v : order) line.push_back(normalized.threshold(v));

    const auto plan = solve_line(line, std::vector<std::int64_t>(line.size(), 1), instance.lambda, instance.beta);
    cells_evaluated = plan.cells_evaluated;

    Solution sol;
    sol.solver = SolverKind::Path;
    sol.influenced_count = static_cast<std::size_t>(plan.value);
    for (auto x : plan.targets) sol.seeds.push_back(order[x]);
    std::sort(sol.seeds.begin(), sol.seeds.end());
    return sol;
}

Solution solve_path(const Instance& instance) {
    std::size_t cells = 0;
    return solve_path(instance, cells);
}

} // namespace mis
