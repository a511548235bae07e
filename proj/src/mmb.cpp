#include "mmbl/mmb.hpp"

#include <algorithm>

namespace mmbl {

MmbResult tc_mmb(CiBackend& backend, const std::vector<NodeId>& observed, NodeId x) {
    if (std::find(observed.begin(), observed.end(), x) == observed.end())
        throw CiError("blanket target is not an observed variable");
    if (observed.size() < 2) throw CiError("blanket discovery needs at least two observed variables");

    MmbResult out;
    out.target = x;
    const NodeSet all(observed.begin(), observed.end());
    for (NodeId y : observed) {
        if (y == x) continue;
        NodeSet rest = all;
        rest.erase(x);
        rest.erase(y);
        if (!backend.query(x, y, rest).independent) out.mmb.insert(y);
    }
    out.mmb_plus = out.mmb;
    out.mmb_plus.insert(x);
    return out;
}

}  // namespace mmbl
