#ifndef GRL_WIRING_HPP
#define GRL_WIRING_HPP

#include "grl/context.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace grl {

/// Unvalidated wiring-diagram data. Ports are numbered inner shells first (in
/// declaration order, ports 1..n within each shell) and the outer shell last;
/// `boundary[p]` is the dot that port p is wired to.
struct DiagramData {
    std::vector<Context> inner;
    Context outer;
    std::vector<TypeSymbol> dot_types;
    std::vector<std::size_t> boundary;
    std::vector<TypeSymbol> extra_support;
};

/// A morphism inner_1 + ... + inner_k -> outer of the free regular
/// po-category, drawn as a wiring diagram. Values are always in normal form:
/// every dot is hit by some port, dots are numbered by first port occurrence,
/// and the support holds every symbol of the dots and shells (the white dot is
/// the part of the support not carried by any dot).
class WiringDiagram {
public:
    /// The empty diagram: no inner shells, outer shell 0.
    WiringDiagram();

    const std::vector<Context>& inner() const { return inner_; }
    const Context& outer() const { return outer_; }
    const std::vector<TypeSymbol>& dot_types() const { return dot_types_; }
    const std::vector<TypeSymbol>& support() const { return support_; }
    const std::vector<std::size_t>& boundary() const { return boundary_; }

    std::size_t shell_count() const { return inner_.size(); }
    std::size_t dot_count() const { return dot_types_.size(); }
    std::size_t port_count() const { return boundary_.size(); }

    /// First port index of a shell; `shell == shell_count()` names the outer shell.
    std::size_t port_offset(std::size_t shell) const { return offsets_.at(shell); }
    std::size_t shell_arity(std::size_t shell) const;
    std::size_t dot_at(std::size_t shell, std::size_t port) const;
    std::size_t outer_dot(std::size_t port) const { return dot_at(shell_count(), port); }

    /// Support symbols not carried by any dot.
    std::vector<TypeSymbol> white_labels() const;

    DiagramData data() const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const WiringDiagram& a, const WiringDiagram& b);

private:
    friend WiringDiagram mk_wiring(DiagramData data);

    void finish();

    std::vector<Context> inner_;
    Context outer_;
    std::vector<TypeSymbol> dot_types_;
    std::vector<TypeSymbol> support_;
    std::vector<std::size_t> boundary_;
    std::vector<std::size_t> offsets_;
    std::size_t hash_ = 0;
};

/// Validates and normalizes. Dots hit by no port are absorbed into the support.
WiringDiagram mk_wiring(DiagramData data);

WiringDiagram normalize(const WiringDiagram& w);

/// Deterministic plain-text form.
std::string to_string(const WiringDiagram& w);

/// Operadic substitution of `part` into inner shell `slot` of `w`.
WiringDiagram substitute(const WiringDiagram& w, std::size_t slot, const WiringDiagram& part);

/// Juxtaposition: inner shells concatenated, outer shells combined with oplus.
WiringDiagram tensor(const WiringDiagram& a, const WiringDiagram& b);

/// The 2-cell order: a <= b iff b breaks wires of a and drops support labels.
bool leq_wd(const WiringDiagram& a, const WiringDiagram& b);

/// Collapse the inner shells into one shell carrying their oplus.
WiringDiagram merge_inner(const WiringDiagram& w);

/// Sequential composite a then b, viewing both as relations between the
/// oplus of their inner shells and their outer shell. The result has a
/// single inner shell.
WiringDiagram compose_wd(const WiringDiagram& a, const WiringDiagram& b);

WiringDiagram empty_wd();
WiringDiagram identity_wd(const Context& g);
WiringDiagram diagonal_wd(const Context& g);    // delta: G -> G+G
WiringDiagram codiagonal_wd(const Context& g);  // mu:    G+G -> G
WiringDiagram counit_wd(const Context& g);      // epsilon: G -> 0
WiringDiagram unit_wd(const Context& g);        // eta:   0 -> G
WiringDiagram braid_wd(const Context& g, const Context& h);
WiringDiagram graph_wd(const ContextMorphism& f);
WiringDiagram cograph_wd(const ContextMorphism& f);

/// Swap the roles of the single inner shell and the outer shell.
WiringDiagram transpose_wd(const WiringDiagram& w);
/// For a diagram without inner shells whose outer shell is left + right.
WiringDiagram transpose_wd(const WiringDiagram& w, const Context& left, const Context& right);

/// Permute the outer ports of any diagram from left + right to right + left.
WiringDiagram braid_outer(const WiringDiagram& w, const Context& left, const Context& right);

} // namespace grl

template <>
struct std::hash<grl::WiringDiagram> {
    std::size_t operator()(const grl::WiringDiagram& w) const noexcept { return w.hash(); }
};

#endif // GRL_WIRING_HPP
