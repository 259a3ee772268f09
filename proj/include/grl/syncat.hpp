#ifndef GRL_SYNCAT_HPP
#define GRL_SYNCAT_HPP

#include "grl/context.hpp"
#include "grl/model.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace grl {

/// An object (Γ, φ) of the syntactic category.
struct SynObject {
    Context context;
    FinRelation predicate;

    friend bool operator==(const SynObject&, const SynObject&) = default;
};

/// θ ∈ P(Γ₁ ⊕ Γ₂) whose marginals lie under φ₁ and φ₂.
struct InternalRelation {
    SynObject dom;
    SynObject cod;
    FinRelation theta;

    friend bool operator==(const InternalRelation&, const InternalRelation&) = default;
};

struct Classification {
    bool total = false;
    bool deterministic = false;
    bool function = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

struct PullbackSquare {
    SynObject apex;
    InternalRelation p1;  // apex -> dom(t1)
    InternalRelation p2;  // apex -> dom(t2)
};

struct Equalizer {
    SynObject object;
    InternalRelation inclusion;
};

struct ImageFactorizationIR {
    InternalRelation epi;
    SynObject image;
    InternalRelation mono;
};

/// Internal relations and functions over the finite calculus of one set of
/// domains. Every operation validates its inputs against those domains.
class SyntacticCategory {
public:
    explicit SyntacticCategory(Domains domains);
    explicit SyntacticCategory(const ModelInstance& m) : SyntacticCategory(m.domains()) {}

    const Domains& domains() const { return domains_; }

    SynObject object(const Context& g, FinRelation phi) const;
    /// (Γ, true).
    SynObject top(const Context& g) const;

    /// Throws MarginalViolation when a marginal escapes its endpoint.
    InternalRelation mk_internal_relation(const SynObject& dom, const SynObject& cod, FinRelation theta) const;
    /// id ⊛ θ ⊛ id = θ, computed without the marginal test.
    bool satisfies_unit_law(const SynObject& dom, const SynObject& cod, const FinRelation& theta) const;

    InternalRelation compose_ir(const InternalRelation& a, const InternalRelation& b) const;
    InternalRelation identity_ir(const SynObject& o) const;
    InternalRelation transpose_ir(const InternalRelation& a) const;
    /// Same endpoints and θ ⊆ θ'.
    bool leq_ir(const InternalRelation& a, const InternalRelation& b) const;
    InternalRelation meet_ir(const InternalRelation& a, const InternalRelation& b) const;

    /// Both characterizations of functions are computed; a disagreement
    /// between them throws std::logic_error.
    Classification classify(const InternalRelation& a) const;
    /// The two sides of the determinism entailment on Γ₁ ⊕ Γ₂ ⊕ Γ₂: pairs of
    /// outputs sharing an input, and the copied outputs.
    std::pair<FinRelation, FinRelation> determinism_sides(const InternalRelation& a) const;

    SynObject terminal_syn() const;
    InternalRelation bang(const SynObject& o) const;

    /// Throws NotAFunction or BoundaryMismatch.
    PullbackSquare pullback_ir(const InternalRelation& t1, const InternalRelation& t2) const;
    /// Mediating map of a cone u1: Q -> dom(p1), u2: Q -> dom(p2) into the
    /// apex; throws MarginalViolation when the cone does not commute.
    InternalRelation pair(const PullbackSquare& pb, const InternalRelation& u1, const InternalRelation& u2) const;

    Equalizer equalizer_ir(const InternalRelation& t1, const InternalRelation& t2) const;

    ImageFactorizationIR image_ir(const InternalRelation& t) const;
    bool is_mono_ir(const InternalRelation& t) const;
    bool is_regular_epi_ir(const InternalRelation& t) const;

    /// Every (Γ, ψ) with ψ ⊆ φ, by size and then lexicographically.
    std::vector<SynObject> subobjects(const SynObject& o) const;

    SynObject tensor_obj(const SynObject& a, const SynObject& b) const;
    InternalRelation tensor_ir(const InternalRelation& a, const InternalRelation& b) const;
    InternalRelation delta_ir(const SynObject& o) const;   // o -> o ⊗ o
    InternalRelation mu_ir(const SynObject& o) const;      // o ⊗ o -> o
    InternalRelation epsilon_ir(const SynObject& o) const; // o -> terminal
    InternalRelation eta_ir(const SynObject& o) const;     // terminal -> o
    InternalRelation braid_ir(const SynObject& a, const SynObject& b) const;

private:
    void require_function(const InternalRelation& t, const char* what) const;
    // The fixed diagrams behind composition, determinism and pairing, built
    // once per tuple of contexts.
    enum class Shape { Compose, Determinism, Pair };
    struct ShapeKey {
        Shape shape;
        Context a, b, c;
    };
    struct ShapeRef {
        Shape shape;
        const Context &a, &b, &c;
    };
    struct ShapeLess {
        using is_transparent = void;
        template <class L, class R>
        bool operator()(const L& l, const R& r) const {
            return std::tie(l.shape, l.a, l.b, l.c) < std::tie(r.shape, r.a, r.b, r.c);
        }
    };
    const WiringDiagram& diagram(Shape shape, const Context& a, const Context& b, const Context& c) const;

    struct RelationLess {
        bool operator()(const InternalRelation& l, const InternalRelation& r) const;
    };

    Domains domains_;
    mutable std::map<ShapeKey, WiringDiagram, ShapeLess> diagrams_;
    // Classification is pure; results are kept up to a fixed number of entries.
    mutable std::map<InternalRelation, Classification, RelationLess> classified_;
};

// Verification suites.

struct AxiomBounds {
    std::size_t max_arity = 2;          // contexts in the object universe
    std::size_t max_pred_size = 2;      // predicates in the object universe
    std::size_t probe_max_arity = 1;    // test objects for universal properties
    std::size_t probe_max_pred_size = 2;
    std::size_t max_relation_space = 8; // exhaustive relation sets up to this many tuples
    std::size_t api_stride = 29;        // every n-th mediator is rebuilt through the public API
};

/// Deliberate defects used to show that the suite can fail.
enum class Fault {
    None,
    /// Regular epis are recognized only by an inhabited image over an
    /// inhabited codomain.
    RegularEpiBySupportOnly,
};

struct LawResult {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string witness;  // first failure
};

struct AxiomReport {
    std::size_t objects = 0;
    std::size_t probes = 0;
    std::vector<LawResult> laws;

    bool ok() const;
};

AxiomReport check_regular_axioms(const ModelInstance& m, const AxiomBounds& bounds = {}, Fault fault = Fault::None);

struct FundamentalReport {
    std::size_t relations = 0;
    std::size_t expected_relations = 0;
    std::size_t functions = 0;
    std::size_t expected_functions = 0;
    bool all_graphs = true;
    bool bijective = true;

    bool ok() const;
};

/// Internal relations and functions (<r>, true) -> (<r'>, true) against set
/// functions D_r -> D_r'. Throws OutOfRange above 16 tuples.
FundamentalReport fundamental_check(const ModelInstance& m, const TypeSymbol& r, const TypeSymbol& r2);

} // namespace grl

#endif // GRL_SYNCAT_HPP
