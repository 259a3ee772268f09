#ifndef GRL_CONTAIN_HPP
#define GRL_CONTAIN_HPP

#include "grl/model.hpp"
#include "grl/term.hpp"

namespace grl {

/// The frozen database of a flat term: one atom per dot, one extra atom for
/// each support symbol that no dot carries, and one tuple per cell.
struct CanonicalInstance {
    ModelInstance instance;
    Tuple frozen;  // the atoms of the outer ports
};

/// Types and predicates mentioned by the terms. Throws BoundaryMismatch if a
/// predicate name is used with two different shells.
PredicateSignature signature_of(const std::vector<const GraphicalTerm*>& terms);

CanonicalInstance canonical_instance(const GraphicalTerm& t);
/// As above, with the domains and predicates of `sig` (absent ones empty).
CanonicalInstance canonical_instance(const GraphicalTerm& t, const PredicateSignature& sig);

/// Decides whether t entails t2 in every model. Nested terms are flattened.
bool contains(const GraphicalTerm& t, const GraphicalTerm& t2);

/// Greedily drops cells while the term stays equivalent to the original.
GraphicalTerm minimize_core(const GraphicalTerm& t);

} // namespace grl

#endif // GRL_CONTAIN_HPP
