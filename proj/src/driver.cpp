#include "mmbl/driver.hpp"

#include <algorithm>
#include <functional>

#include "mmbl/graph_io.hpp"

namespace mmbl {

std::string_view to_string(StopRule r) {
    switch (r) {
        case StopRule::R1: return "R1";
        case StopRule::R2: return "R2";
        case StopRule::R3: return "R3";
    }
    return "?";
}

std::string_view to_string(LocalSource s) {
    switch (s) {
        case LocalSource::Reused: return "reused";
        case LocalSource::Fragment: return "fragment";
        case LocalSource::Learned: return "learned";
    }
    return "?";
}

bool stop_r1(const DriverState& s) { return s.donelist.count(s.target) && marks_determined_at(s.p, s.target); }

bool stop_r2(const DriverState& s) { return s.waitlist.empty(); }

bool stop_r3(const DriverState& s) {
    if (!s.donelist.count(s.target)) return false;
    const MixedGraph& p = s.p;
    std::vector<char> expanded(p.size(), 0);
    expanded[s.target] = 1;

    // false when the walk from `from` into `to` is not stopped by an arrowhead
    // before reaching a node whose surroundings are still unknown
    std::function<bool(NodeId, NodeId)> blocked = [&](NodeId from, NodeId to) -> bool {
        if (p.mark_at(to, from) == Mark::Arrow) return true;
        if (to == s.target) return true;
        if (!s.donelist.count(to)) return false;
        if (expanded[to]) return true;
        expanded[to] = 1;
        for (NodeId w : p.neighbors(to))
            if (w != from && !blocked(to, w)) return false;
        return true;
    };

    for (NodeId x : p.neighbors(s.target)) {
        const bool undetermined = p.mark_at(s.target, x) == Mark::Circle || p.mark_at(x, s.target) == Mark::Circle;
        if (undetermined && !blocked(s.target, x)) return false;
    }
    return true;
}

bool FragmentKnowledge::nonadjacent(const MixedGraph& g, NodeId a, NodeId b) const {
    if (g.adjacent(a, b)) return false;
    return complete(a) || complete(b) || s_.sepsets.contains(a, b);
}

bool FragmentKnowledge::outside_blanket(NodeId a, NodeId c) const {
    auto outside = [&](NodeId x, NodeId y) {
        auto it = s_.blankets.find(x);
        return complete(x) && it != s_.blankets.end() && !it->second.count(y);
    };
    return outside(a, c) || outside(c, a);
}

Triple FragmentKnowledge::triple(const MixedGraph& g, NodeId a, NodeId b, NodeId c) const {
    if (!nonadjacent(g, a, c)) return Triple::Unknown;
    if (const NodeSet* sep = s_.sepsets.find(a, c)) return sep->count(b) ? Triple::Noncollider : Triple::Collider;
    return outside_blanket(a, c) ? Triple::Noncollider : Triple::Unknown;
}

std::optional<bool> FragmentKnowledge::discriminated_collider(NodeId theta, NodeId, NodeId b, NodeId c) const {
    if (const NodeSet* sep = s_.sepsets.find(theta, c)) return sep->count(b) == 0;
    if (outside_blanket(theta, c)) return false;
    return std::nullopt;
}

MmbByMmb::MmbByMmb(CiBackend& backend, std::vector<NodeId> observed, NodeId target)
    : backend_(backend), observed_(std::move(observed)) {
    std::sort(observed_.begin(), observed_.end());
    if (!std::binary_search(observed_.begin(), observed_.end(), target))
        throw CiError("target is not an observed variable");
    state_.target = target;
    state_.waitlist.push_back(target);
    state_.p = MixedGraph(backend.variables());
}

LocalStructure MmbByMmb::fragment_structure(const NodeSet& scope, bool& usable) {
    LocalStructure ls{scope, MixedGraph(backend_.variables()), {}};
    const MixedGraph& p = state_.p;
    for (NodeId a : scope)
        for (NodeId b : scope)
            if (a < b && p.adjacent(a, b)) ls.graph.set_edge(a, b, p.mark_at(a, b), p.mark_at(b, a));

    usable = true;
    for (NodeId c : scope) {
        const auto& nb = ls.graph.neighbors(c);
        for (std::size_t i = 0; i < nb.size() && usable; ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId a = nb[i], b = nb[j];
                if (ls.graph.adjacent(a, b)) continue;
                const NodeSet* sep = state_.sepsets.find(a, b);
                if (!sep) {
                    usable = false;
                    break;
                }
                ls.sepsets.set(a, b, *sep);
            }
        }
    }
    if (!usable) return ls;

    for (NodeId c : scope) {
        const auto nb = ls.graph.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId a = nb[i], b = nb[j];
                if (ls.graph.adjacent(a, b) || ls.sepsets.find(a, b)->count(c)) continue;
                for (NodeId end : {a, b}) {
                    if (ls.graph.mark_at(c, end) == Mark::Tail) {
                        log_.push_back("conflict: collider at " + p.name(c) + " kept tail on " +
                                       format_edge(ls.graph, end, c));
                        continue;
                    }
                    ls.graph.set_mark(c, end, Mark::Arrow);
                }
            }
        }
    }
    return ls;
}

void MmbByMmb::merge(const std::vector<SelectedEdge>& info, NodeId pivot) {
    MixedGraph& p = state_.p;

    // The pivot's adjacencies are exact; drop edges at the pivot that earlier
    // pivots proposed but the pivot's own structure lacks.
    NodeSet keep;
    for (const auto& e : info)
        if (e.a == pivot) keep.insert(e.b);
    for (NodeId x : std::vector<NodeId>(p.neighbors(pivot).begin(), p.neighbors(pivot).end())) {
        if (!keep.count(x)) {
            log_.push_back("dropped " + format_edge(p, pivot, x) + " absent from the structure of " + p.name(pivot));
            p.remove_edge(pivot, x);
        }
    }

    for (const auto& e : info) {
        if (!p.adjacent(e.a, e.b)) {
            if (e.a != pivot && (state_.donelist.count(e.a) || state_.donelist.count(e.b))) {
                log_.push_back("skipped " + p.name(e.a) + " - " + p.name(e.b) + ": not adjacent in a processed blanket");
                continue;
            }
            p.set_edge(e.a, e.b, e.at_a, e.at_b);
            continue;
        }
        auto combine = [&](NodeId at, NodeId other, Mark proposed) {
            const Mark cur = p.mark_at(at, other);
            if (proposed == Mark::Circle || cur == proposed) return;
            if (cur == Mark::Circle) {
                p.set_mark(at, other, proposed);
                return;
            }
            log_.push_back("conflict: kept " + std::string(to_string(cur)) + " at " + p.name(at) + " on " +
                           format_edge(p, at, other) + " over " + std::string(to_string(proposed)));
        };
        combine(e.a, e.b, e.at_a);
        combine(e.b, e.a, e.at_b);
    }
}

std::optional<StopRule> MmbByMmb::step() {
    if (stopped_) return stopped_;
    if (state_.waitlist.empty()) return stopped_ = StopRule::R2;

    const NodeId x = state_.waitlist.front();
    state_.waitlist.pop_front();

    PivotRecord rec;
    rec.pivot = x;
    rec.blanket = tc_mmb(backend_, observed_, x);
    const NodeSet& plus = rec.blanket.mmb_plus;

    std::optional<LocalStructure> local;
    for (const auto& done : pivots_) {
        const NodeId y = done.pivot;
        auto stored = state_.stored_locals.find(y);
        if (stored == state_.stored_locals.end()) continue;
        const NodeSet& cover = state_.blankets.at(y);
        if (std::includes(cover.begin(), cover.end(), plus.begin(), plus.end())) {
            local = restrict_structure(stored->second, plus);
            rec.source = LocalSource::Reused;
            break;
        }
    }
    if (!local) {
        const NodeSet& mmb = rec.blanket.mmb;
        if (std::includes(state_.donelist.begin(), state_.donelist.end(), mmb.begin(), mmb.end())) {
            bool usable = false;
            auto ls = fragment_structure(plus, usable);
            if (usable) {
                local = std::move(ls);
                rec.source = LocalSource::Fragment;
            } else {
                log_.push_back("fallback: fragment around " + state_.p.name(x) + " lacks a sepset; learning afresh");
            }
        }
    }
    if (!local) {
        local = orient_v_structures(learn_skeleton(backend_, plus));
        rec.source = LocalSource::Learned;
    }
    for (const auto& [pair, sep] : local->sepsets.entries()) state_.sepsets.add(pair.first, pair.second, sep);
    if (rec.source != LocalSource::Fragment) state_.stored_locals[x] = *local;
    state_.blankets[x] = plus;

    merge(select_pivot_info(*local, x), x);
    RuleTrace trace;
    apply_rule_closure(state_.p, FragmentKnowledge(state_, x), trace, &log_);

    state_.donelist.insert(x);
    for (NodeId v : state_.p.neighbors(x)) {
        if (state_.donelist.count(v)) continue;
        if (std::find(state_.waitlist.begin(), state_.waitlist.end(), v) != state_.waitlist.end()) continue;
        state_.waitlist.push_back(v);
    }
    rec.tests_after = backend_.n_tests();
    pivots_.push_back(std::move(rec));

    if (stop_r1(state_)) return stopped_ = StopRule::R1;
    if (stop_r2(state_)) return stopped_ = StopRule::R2;
    if (stop_r3(state_)) return stopped_ = StopRule::R3;
    return std::nullopt;
}

LocalResult MmbByMmb::run() {
    while (!step()) {
    }
    return result();
}

LocalResult MmbByMmb::result() const {
    LocalResult r;
    r.target = state_.target;
    r.p = Pag(state_.p);
    const MixedGraph& p = state_.p;
    const NodeId t = state_.target;
    for (NodeId x : p.neighbors(t)) {
        const Mark at_t = p.mark_at(t, x), at_x = p.mark_at(x, t);
        if (at_t == Mark::Circle || at_x == Mark::Circle)
            r.ambiguous.insert(x);
        else if (at_x == Mark::Tail && at_t == Mark::Arrow)
            r.parents.insert(x);
        else if (at_t == Mark::Tail && at_x == Mark::Arrow)
            r.children.insert(x);
        else if (at_t == Mark::Arrow && at_x == Mark::Arrow)
            r.spouses_or_confounded.insert(x);
        else
            r.ambiguous.insert(x);
    }
    r.stop_rule = stopped_.value_or(StopRule::R2);
    r.n_tests = backend_.n_tests();
    for (const auto& rec : pivots_) r.trace.push_back(rec.pivot);
    r.log = log_;
    return r;
}

LocalResult run_mmb_by_mmb(CiBackend& backend, const std::vector<NodeId>& observed, NodeId target) {
    return MmbByMmb(backend, observed, target).run();
}

LocalResult run_mmb_by_mmb(CiBackend& backend, NodeId target) {
    std::vector<NodeId> all(backend.size());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    return run_mmb_by_mmb(backend, all, target);
}

std::uint64_t global_skeleton_tests(CiBackend& backend) {
    const std::uint64_t before = backend.n_tests();
    NodeSet all;
    for (NodeId v = 0; v < backend.size(); ++v) all.insert(v);
    learn_skeleton(backend, all);
    return backend.n_tests() - before;
}

}  // namespace mmbl
