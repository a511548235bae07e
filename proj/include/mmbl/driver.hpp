#ifndef MMBL_DRIVER_HPP_
#define MMBL_DRIVER_HPP_

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmbl/ci.hpp"
#include "mmbl/graph.hpp"
#include "mmbl/local.hpp"
#include "mmbl/mmb.hpp"
#include "mmbl/orient.hpp"

namespace mmbl {

enum class StopRule { R1, R2, R3 };
std::string_view to_string(StopRule r);

/// How the local structure of a pivot was obtained.
enum class LocalSource {
    Reused,    // restricted from a stored structure whose blanket covers the pivot's
    Fragment,  // read off the accumulated fragment (blanket already processed)
    Learned,   // learned afresh over the pivot's blanket
};
std::string_view to_string(LocalSource s);

struct DriverState {
    NodeId target = 0;
    std::deque<NodeId> waitlist;
    NodeSet donelist;
    /// Accumulated fragment around the target; spans every backend variable.
    MixedGraph p;
    /// Learned (or reused) local structures of processed pivots.
    std::map<NodeId, LocalStructure> stored_locals;
    std::map<NodeId, NodeSet> blankets;  // MMB+ of processed pivots
    /// Every separating set found by local learning during the run.
    SepsetCache sepsets;
};

/// Target processed and no circle mark on any of its edges.
bool stop_r1(const DriverState& s);
/// Nothing left to process.
bool stop_r2(const DriverState& s);
/// Every path leaving the target along an undetermined edge runs, through
/// processed nodes only, into an arrowhead before it can reach an unprocessed
/// node.
bool stop_r3(const DriverState& s);

/// Orientation knowledge of a fragment. A missing edge is a true
/// non-adjacency only when one endpoint has been processed (its adjacency is
/// exact) or a separating set is known. An unshielded triple a - b - c is a
/// collider iff b is outside the separating set of a and c; without one, it is
/// a non-collider when a processed endpoint does not have the other in its
/// blanket, and unknown otherwise.
class FragmentKnowledge : public OrientationKnowledge {
public:
    FragmentKnowledge(const DriverState& s, std::optional<NodeId> pivot) : s_(s), pivot_(pivot) {}
    bool nonadjacent(const MixedGraph& g, NodeId a, NodeId b) const override;
    Triple triple(const MixedGraph& g, NodeId a, NodeId b, NodeId c) const override;
    std::optional<bool> discriminated_collider(NodeId theta, NodeId a, NodeId b, NodeId c) const override;

private:
    bool complete(NodeId v) const { return s_.donelist.count(v) || (pivot_ && *pivot_ == v); }
    // a processed and c outside its blanket, or the other way round
    bool outside_blanket(NodeId a, NodeId c) const;
    const DriverState& s_;
    std::optional<NodeId> pivot_;
};

struct PivotRecord {
    NodeId pivot = 0;
    MmbResult blanket;
    LocalSource source = LocalSource::Learned;
    std::uint64_t tests_after = 0;
};

struct LocalResult {
    NodeId target = 0;
    Pag p;
    NodeSet parents;
    NodeSet children;
    NodeSet ambiguous;              // some circle mark on the edge
    NodeSet spouses_or_confounded;  // bidirected
    StopRule stop_rule = StopRule::R2;
    std::uint64_t n_tests = 0;
    std::vector<NodeId> trace;  // pivots in processing order
    std::vector<std::string> log;
};

/**
 * The sequential blanket-by-blanket learner. Each step pops the head of the
 * waitlist, finds its blanket by total conditioning, obtains a local
 * structure over it, merges the pivot's edges and the colliders it takes part
 * in into the fragment, closes the fragment under the orientation rules and
 * queues the pivot's unseen neighbours.
 */
class MmbByMmb {
public:
    MmbByMmb(CiBackend& backend, std::vector<NodeId> observed, NodeId target);

    /// Processes one pivot; returns the stop rule that fired, if any.
    std::optional<StopRule> step();
    /// Steps until a stop rule fires.
    LocalResult run();

    const DriverState& state() const { return state_; }
    const std::vector<PivotRecord>& pivots() const { return pivots_; }
    LocalResult result() const;

private:
    LocalStructure fragment_structure(const NodeSet& scope, bool& usable);
    void merge(const std::vector<SelectedEdge>& info, NodeId pivot);

    CiBackend& backend_;
    std::vector<NodeId> observed_;
    DriverState state_;
    std::vector<PivotRecord> pivots_;
    std::vector<std::string> log_;
    std::optional<StopRule> stopped_;
};

LocalResult run_mmb_by_mmb(CiBackend& backend, const std::vector<NodeId>& observed, NodeId target);
/// Over every backend variable.
LocalResult run_mmb_by_mmb(CiBackend& backend, NodeId target);

/// Global PC-style adjacency search over all observed variables; the baseline
/// for test counts. Returns the number of tests it issued.
std::uint64_t global_skeleton_tests(CiBackend& backend);

}  // namespace mmbl

#endif  // MMBL_DRIVER_HPP_
