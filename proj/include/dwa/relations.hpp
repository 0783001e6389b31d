#pragma once

#include <string>
#include <vector>

#include "dwa/algebra.hpp"

namespace dwa {

// One defining relation, instantiated on a concrete sequence: LHS - RHS.
// The element is zero in the algebra; many instances are already zero at
// construction (the layer-canonical pre-form equates both sides), the
// interesting ones (dot slides, psi^2, braid) are not.
struct RelationInstance {
    std::string id;
    Element element;
};

// Every defining relation of the flavor, instantiated over all bottom
// sequences and positions. max_d caps the E-order loops (default: labels).
std::vector<RelationInstance> relation_instances(const Flavor& flavor, const PrimeConfig& cfg);

// The defect side of psi_j^2 e(i): the signed dot sum, as an element.
Element psi_squared_rhs(const Flavor& flavor, const PrimeConfig& cfg, const StrandSeq& seq, int j);

// The defect side of the braid relation on e(i) at positions (j, j+1, j+2).
Element braid_rhs(const Flavor& flavor, const PrimeConfig& cfg, const StrandSeq& seq, int j);

}  // namespace dwa
