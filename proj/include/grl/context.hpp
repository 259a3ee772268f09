#ifndef GRL_CONTEXT_HPP
#define GRL_CONTEXT_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace grl {

/// A sort name drawn from the declared type set.
class TypeSymbol {
public:
    TypeSymbol() = default;
    TypeSymbol(std::string name) : name_(std::move(name)) {}
    TypeSymbol(const char* name) : name_(name) {}

    const std::string& name() const { return name_; }

    friend auto operator<=>(const TypeSymbol&, const TypeSymbol&) = default;
    friend bool operator==(const TypeSymbol&, const TypeSymbol&) = default;

private:
    std::string name_;
};

/// The declared set T of types. Symbols must be nonempty identifiers.
class TypeSet {
public:
    TypeSet() = default;
    TypeSet(std::initializer_list<TypeSymbol> symbols);

    void insert(const TypeSymbol& t);
    bool contains(const TypeSymbol& t) const { return symbols_.count(t) != 0; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    // Throws UnknownType when `t` is not declared.
    void require(const TypeSymbol& t) const;

    friend bool operator==(const TypeSet&, const TypeSet&) = default;

private:
    std::set<TypeSymbol> symbols_;
};

/// An object (n, S, tau) of the free regular category: n typed ports plus a
/// support set. The support is kept sorted and deduplicated and always
/// contains the image of the typing, so value equality is object equality.
class Context {
public:
    /// The terminal context 0 = (0, {}).
    Context() = default;

    Context(std::vector<TypeSymbol> typing, const std::vector<TypeSymbol>& extra_support = {});

    std::size_t arity() const { return typing_.size(); }
    const std::vector<TypeSymbol>& typing() const { return typing_; }
    const TypeSymbol& type_at(std::size_t i) const { return typing_.at(i); }
    const std::vector<TypeSymbol>& support() const { return support_; }
    bool in_support(const TypeSymbol& t) const;

    /// Support symbols not hit by the typing (the white-dot labels of a shell).
    std::vector<TypeSymbol> extra_support() const;

    friend bool operator==(const Context&, const Context&) = default;
    friend auto operator<=>(const Context& a, const Context& b) {
        return std::tie(a.typing_, a.support_) <=> std::tie(b.typing_, b.support_);
    }

private:
    std::vector<TypeSymbol> typing_;
    std::vector<TypeSymbol> support_;
};

std::string to_string(const Context& c);

Context mk_context(const TypeSet& types,
                   const std::vector<TypeSymbol>& typing,
                   const std::vector<TypeSymbol>& extra_support = {});

Context terminal();
Context unary(const TypeSymbol& t);
/// Supp(t) = (0, {t}).
Context support_ctx(const TypeSet& types, const TypeSymbol& t);
Context support_ctx(const TypeSymbol& t);

/// Product: (n + n', S u S', [tau, tau']). Strictly associative and unital.
Context oplus(const Context& a, const Context& b);
Context oplus_all(const std::vector<Context>& parts);

/// A morphism dom -> cod of FRg(T). The underlying function runs the other
/// way: map[j] is the dom port feeding cod port j. Requires cod support to be
/// contained in dom support.
class ContextMorphism {
public:
    ContextMorphism(Context dom, Context cod, std::vector<std::size_t> map);

    const Context& dom() const { return dom_; }
    const Context& cod() const { return cod_; }
    const std::vector<std::size_t>& map() const { return map_; }

    friend bool operator==(const ContextMorphism&, const ContextMorphism&) = default;

private:
    Context dom_;
    Context cod_;
    std::vector<std::size_t> map_;
};

std::string to_string(const ContextMorphism& f);

ContextMorphism mk_morphism(const Context& dom, const Context& cod, std::vector<std::size_t> map);

ContextMorphism identity_cm(const Context& c);

/// Diagrammatic order: f then g.
ContextMorphism compose_cm(const ContextMorphism& f, const ContextMorphism& g);

bool is_mono(const ContextMorphism& f);
bool is_regular_epi(const ContextMorphism& f);

struct ImageFactorization {
    ContextMorphism epi;
    ContextMorphism mono;
};

ImageFactorization image_factor_cm(const ContextMorphism& f);

struct PullbackCone {
    Context apex;
    ContextMorphism p1;
    ContextMorphism p2;
};

/// Pullback of f: A -> C <- B :g, computed as the pushout of port sets.
/// Apex ports are the union-find classes of (A ports, then B ports), numbered
/// by their smallest member.
PullbackCone pullback_cm(const ContextMorphism& f, const ContextMorphism& g);

struct CanonicalMaps {
    ContextMorphism diagonal;   // G -> G+G
    ContextMorphism proj1;      // G+G' -> G
    ContextMorphism proj2;      // G+G' -> G'
    ContextMorphism counit;     // G -> 0
    ContextMorphism braid;      // G+G' -> G'+G
};

ContextMorphism diagonal_cm(const Context& g);
ContextMorphism proj1_cm(const Context& g, const Context& h);
ContextMorphism proj2_cm(const Context& g, const Context& h);
ContextMorphism bang_cm(const Context& g);
ContextMorphism braid_cm(const Context& g, const Context& h);
ContextMorphism oplus_cm(const ContextMorphism& f, const ContextMorphism& g);

CanonicalMaps canonical_maps(const Context& g, const Context& h);

/// Every morphism dom -> cod (all typing-compatible functions), in
/// lexicographic order of the underlying map. Empty when S_cod is not
/// contained in S_dom.
std::vector<ContextMorphism> all_morphisms(const Context& dom, const Context& cod);

} // namespace grl

template <>
struct std::hash<grl::TypeSymbol> {
    std::size_t operator()(const grl::TypeSymbol& t) const noexcept {
        return std::hash<std::string>{}(t.name());
    }
};

#endif // GRL_CONTEXT_HPP
