#ifndef MMBL_MMB_HPP_
#define MMBL_MMB_HPP_

#include <vector>

#include "mmbl/ci.hpp"

namespace mmbl {

struct MmbResult {
    NodeId target = 0;
    NodeSet mmb;
    NodeSet mmb_plus;
};

/// Total conditioning: y joins the blanket of x iff x and y are dependent
/// given all other observed variables. Issues |observed| - 1 tests.
MmbResult tc_mmb(CiBackend& backend, const std::vector<NodeId>& observed, NodeId x);

}  // namespace mmbl

#endif  // MMBL_MMB_HPP_
