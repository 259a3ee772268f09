#ifndef GRL_MODEL_HPP
#define GRL_MODEL_HPP

#include "grl/context.hpp"
#include "grl/term.hpp"
#include "grl/wiring.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace grl {

using Atom = std::string;
using Tuple = std::vector<Atom>;

/// Finite carrier sets, one per type. Atom order is the declaration order and
/// fixes the order in which tuple spaces are enumerated.
class Domains {
public:
    Domains() = default;

    /// Replaces the carrier of `t`; duplicate atoms are dropped.
    void set(const TypeSymbol& t, std::vector<Atom> atoms);
    const std::vector<Atom>& atoms(const TypeSymbol& t) const;
    bool contains(const TypeSymbol& t, const Atom& a) const;
    bool inhabited(const TypeSymbol& t) const { return !atoms(t).empty(); }
    /// True when every support symbol of `g` has a nonempty carrier.
    bool inhabited(const Context& g) const;

    const std::map<TypeSymbol, std::vector<Atom>>& carriers() const { return carriers_; }

    friend bool operator==(const Domains&, const Domains&) = default;

private:
    std::map<TypeSymbol, std::vector<Atom>> carriers_;
};

/// A predicate in a context: a set of atom tuples, one entry per port.
class FinRelation {
public:
    FinRelation() = default;
    explicit FinRelation(Context context) : context_(std::move(context)) {}
    FinRelation(Context context, std::set<Tuple> tuples);

    const Context& context() const { return context_; }
    const std::set<Tuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    bool contains(const Tuple& t) const { return tuples_.count(t) != 0; }
    void insert(Tuple t);

    /// Subset test; both sides must share a context.
    bool subset_of(const FinRelation& other) const;

    friend bool operator==(const FinRelation&, const FinRelation&) = default;

private:
    Context context_;
    std::set<Tuple> tuples_;
};

/// Throws unless every tuple is typed by `domains` and the support constraint holds.
void validate_relation(const FinRelation& r, const Domains& domains);

/// A finite model of a predicate signature.
class ModelInstance {
public:
    ModelInstance() = default;
    ModelInstance(PredicateSignature signature, Domains domains);

    const PredicateSignature& signature() const { return signature_; }
    const Domains& domains() const { return domains_; }

    /// Validates against the declared context and the domains.
    void set_relation(const std::string& predicate, FinRelation r);
    /// The stored relation, or the empty relation on the declared context.
    FinRelation relation(const std::string& predicate) const;
    const std::map<std::string, FinRelation>& relations() const { return relations_; }

private:
    PredicateSignature signature_;
    Domains domains_;
    std::map<std::string, FinRelation> relations_;
};

/// All tuples of the product of the port carriers, or nothing when a support
/// symbol is uninhabited. Lexicographic in the domain order.
std::vector<Tuple> tuple_space(const Context& g, const Domains& domains);

/// P(w) applied to the product of the cells: assignments of atoms to dots that
/// agree with every cell, restricted to the outer ports.
FinRelation apply_diagram(const WiringDiagram& w, std::span<const FinRelation> cells, const Domains& domains);

FinRelation eval(const GraphicalTerm& t, const ModelInstance& m);

bool entails_in(const ModelInstance& m, const GraphicalTerm& a, const GraphicalTerm& b);

/// f_! : P(dom f) -> P(cod f).
FinRelation pushforward(const ContextMorphism& f, const FinRelation& r, const Domains& domains);
/// f^* : P(cod f) -> P(dom f).
FinRelation pullback_pred(const ContextMorphism& f, const FinRelation& r, const Domains& domains);

/// The laxator: product of relations on the oplus of their contexts.
FinRelation rho_lax(const FinRelation& a, const FinRelation& b);
/// Left adjoint of the laxator: the two block projections.
std::pair<FinRelation, FinRelation> lambda_opl(const FinRelation& r, const Context& left, const Context& right);

FinRelation meet_rel(const FinRelation& a, const FinRelation& b);
FinRelation true_rel(const Context& g, const Domains& domains);

} // namespace grl

#endif // GRL_MODEL_HPP
