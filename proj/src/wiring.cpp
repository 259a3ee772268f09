#include "grl/wiring.hpp"

#include "grl/error.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <limits>

namespace grl {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_context(const Context& c) {
    std::size_t h = c.arity();
    for (const auto& t : c.typing()) hash_combine(h, std::hash<TypeSymbol>{}(t));
    hash_combine(h, 0xc0ffee);
    for (const auto& t : c.support()) hash_combine(h, std::hash<TypeSymbol>{}(t));
    return h;
}

std::vector<TypeSymbol> sorted_unique(std::vector<TypeSymbol> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string shell_name(std::size_t shell, std::size_t k) {
    return shell == k ? std::string("out") : std::to_string(shell + 1);
}

} // namespace

WiringDiagram::WiringDiagram() { finish(); }

void WiringDiagram::finish() {
    offsets_.assign(inner_.size() + 1, 0);
    std::size_t at = 0;
    for (std::size_t i = 0; i < inner_.size(); ++i) {
        offsets_[i] = at;
        at += inner_[i].arity();
    }
    offsets_[inner_.size()] = at;

    hash_ = inner_.size();
    for (const auto& c : inner_) hash_combine(hash_, hash_context(c));
    hash_combine(hash_, hash_context(outer_));
    for (const auto& t : dot_types_) hash_combine(hash_, std::hash<TypeSymbol>{}(t));
    for (const auto& t : support_) hash_combine(hash_, std::hash<TypeSymbol>{}(t));
    for (auto d : boundary_) hash_combine(hash_, d);
}

std::size_t WiringDiagram::shell_arity(std::size_t shell) const {
    return shell == inner_.size() ? outer_.arity() : inner_.at(shell).arity();
}

std::size_t WiringDiagram::dot_at(std::size_t shell, std::size_t port) const {
    if (port >= shell_arity(shell)) throw Error(ErrorKind::OutOfRange, "port index out of range");
    return boundary_[offsets_.at(shell) + port];
}

std::vector<TypeSymbol> WiringDiagram::white_labels() const {
    auto carried = sorted_unique(dot_types_);
    std::vector<TypeSymbol> out;
    std::set_difference(support_.begin(), support_.end(), carried.begin(), carried.end(), std::back_inserter(out));
    return out;
}

DiagramData WiringDiagram::data() const {
    return {inner_, outer_, dot_types_, boundary_, support_};
}

bool operator==(const WiringDiagram& a, const WiringDiagram& b) {
    return a.hash_ == b.hash_ && a.boundary_ == b.boundary_ && a.dot_types_ == b.dot_types_ &&
           a.support_ == b.support_ && a.outer_ == b.outer_ && a.inner_ == b.inner_;
}

WiringDiagram mk_wiring(DiagramData data) {
    std::size_t ports = data.outer.arity();
    for (const auto& c : data.inner) ports += c.arity();
    if (data.boundary.size() != ports) {
        throw Error(ErrorKind::BoundaryMismatch, "boundary map has " + std::to_string(data.boundary.size()) +
                                                     " entries for " + std::to_string(ports) + " ports");
    }

    const std::size_t k = data.inner.size();
    std::size_t p = 0;
    for (std::size_t shell = 0; shell <= k; ++shell) {
        const Context& c = shell == k ? data.outer : data.inner[shell];
        for (std::size_t j = 0; j < c.arity(); ++j, ++p) {
            const std::size_t d = data.boundary[p];
            if (d >= data.dot_types.size()) {
                throw Error(ErrorKind::OutOfRange, "port " + shell_name(shell, k) + "." + std::to_string(j + 1) +
                                                       " is wired to nonexistent dot " + std::to_string(d + 1));
            }
            if (data.dot_types[d] != c.type_at(j)) {
                throw Error(ErrorKind::TypeMismatch, "port " + shell_name(shell, k) + "." + std::to_string(j + 1) +
                                                         " has type " + c.type_at(j).name() + " but its dot has type " +
                                                         data.dot_types[d].name());
            }
        }
    }

    WiringDiagram w;
    w.inner_ = std::move(data.inner);
    w.outer_ = std::move(data.outer);

    // Renumber dots by first occurrence; untouched dots disappear.
    std::vector<std::size_t> renumber(data.dot_types.size(), kUnset);
    w.boundary_.resize(ports);
    for (std::size_t q = 0; q < ports; ++q) {
        auto& slot = renumber[data.boundary[q]];
        if (slot == kUnset) {
            slot = w.dot_types_.size();
            w.dot_types_.push_back(data.dot_types[data.boundary[q]]);
        }
        w.boundary_[q] = slot;
    }

    std::vector<TypeSymbol> support = std::move(data.extra_support);
    support.insert(support.end(), data.dot_types.begin(), data.dot_types.end());
    for (const auto& c : w.inner_) support.insert(support.end(), c.support().begin(), c.support().end());
    support.insert(support.end(), w.outer_.support().begin(), w.outer_.support().end());
    w.support_ = sorted_unique(std::move(support));

    w.finish();
    return w;
}

WiringDiagram normalize(const WiringDiagram& w) { return mk_wiring(w.data()); }

std::string to_string(const WiringDiagram& w) {
    std::string s = "wiring { inner: [";
    for (std::size_t i = 0; i < w.shell_count(); ++i) {
        if (i) s += ", ";
        s += to_string(w.inner()[i]);
    }
    s += "]; outer: " + to_string(w.outer()) + "; dots: [";
    for (std::size_t d = 0; d < w.dot_count(); ++d) {
        if (d) s += ", ";
        s += w.dot_types()[d].name();
    }
    s += "];";
    for (std::size_t shell = 0; shell <= w.shell_count(); ++shell) {
        for (std::size_t j = 0; j < w.shell_arity(shell); ++j) {
            s += " wire " + shell_name(shell, w.shell_count()) + "." + std::to_string(j + 1) + " -> d" +
                 std::to_string(w.dot_at(shell, j) + 1) + ";";
        }
    }
    s += " supp {";
    for (std::size_t i = 0; i < w.support().size(); ++i) {
        if (i) s += ", ";
        s += w.support()[i].name();
    }
    return s + "} }";
}

WiringDiagram substitute(const WiringDiagram& w, std::size_t slot, const WiringDiagram& part) {
    if (slot >= w.shell_count()) {
        throw Error(ErrorKind::OutOfRange, "substitution slot " + std::to_string(slot + 1) + " does not exist");
    }
    if (part.outer() != w.inner()[slot]) {
        throw Error(ErrorKind::BoundaryMismatch, "cannot substitute a diagram with outer shell " +
                                                     to_string(part.outer()) + " into shell " +
                                                     to_string(w.inner()[slot]));
    }
    const std::size_t nd = w.dot_count();
    detail::UnionFind uf(nd + part.dot_count());
    for (std::size_t j = 0; j < part.outer().arity(); ++j) uf.unite(w.dot_at(slot, j), nd + part.outer_dot(j));

    DiagramData out;
    out.dot_types = w.dot_types();
    out.dot_types.insert(out.dot_types.end(), part.dot_types().begin(), part.dot_types().end());

    auto emit_shell = [&](const WiringDiagram& src, std::size_t shell, std::size_t base) {
        for (std::size_t j = 0; j < src.shell_arity(shell); ++j) {
            out.boundary.push_back(uf.find(base + src.dot_at(shell, j)));
        }
    };
    for (std::size_t i = 0; i < w.shell_count(); ++i) {
        if (i == slot) {
            for (std::size_t m = 0; m < part.shell_count(); ++m) {
                out.inner.push_back(part.inner()[m]);
                emit_shell(part, m, nd);
            }
        } else {
            out.inner.push_back(w.inner()[i]);
            emit_shell(w, i, 0);
        }
    }
    out.outer = w.outer();
    emit_shell(w, w.shell_count(), 0);

    out.extra_support = w.support();
    out.extra_support.insert(out.extra_support.end(), part.support().begin(), part.support().end());
    return mk_wiring(std::move(out));
}

WiringDiagram tensor(const WiringDiagram& a, const WiringDiagram& b) {
    DiagramData out;
    out.inner = a.inner();
    out.inner.insert(out.inner.end(), b.inner().begin(), b.inner().end());
    out.outer = oplus(a.outer(), b.outer());
    out.dot_types = a.dot_types();
    out.dot_types.insert(out.dot_types.end(), b.dot_types().begin(), b.dot_types().end());

    const std::size_t na = a.dot_count();
    const std::size_t a_inner_ports = a.port_offset(a.shell_count());
    const std::size_t b_inner_ports = b.port_offset(b.shell_count());
    for (std::size_t p = 0; p < a_inner_ports; ++p) out.boundary.push_back(a.boundary()[p]);
    for (std::size_t p = 0; p < b_inner_ports; ++p) out.boundary.push_back(na + b.boundary()[p]);
    for (std::size_t p = a_inner_ports; p < a.port_count(); ++p) out.boundary.push_back(a.boundary()[p]);
    for (std::size_t p = b_inner_ports; p < b.port_count(); ++p) out.boundary.push_back(na + b.boundary()[p]);

    out.extra_support = a.support();
    out.extra_support.insert(out.extra_support.end(), b.support().begin(), b.support().end());
    return mk_wiring(std::move(out));
}

bool leq_wd(const WiringDiagram& a, const WiringDiagram& b) {
    if (a.inner() != b.inner() || a.outer() != b.outer()) {
        throw Error(ErrorKind::BoundaryMismatch, "2-cells compare diagrams with identical boundaries only");
    }
    // b's partition of ports must refine a's: each dot of b lands in one dot of a.
    std::vector<std::size_t> image(b.dot_count(), kUnset);
    for (std::size_t p = 0; p < a.port_count(); ++p) {
        auto& target = image[b.boundary()[p]];
        if (target == kUnset) {
            target = a.boundary()[p];
        } else if (target != a.boundary()[p]) {
            return false;
        }
    }
    return std::includes(a.support().begin(), a.support().end(), b.support().begin(), b.support().end());
}

WiringDiagram merge_inner(const WiringDiagram& w) {
    DiagramData d = w.data();
    d.inner = {oplus_all(w.inner())};
    return mk_wiring(std::move(d));
}

WiringDiagram compose_wd(const WiringDiagram& a, const WiringDiagram& b) {
    return substitute(merge_inner(b), 0, merge_inner(a));
}

WiringDiagram empty_wd() { return WiringDiagram(); }

namespace {

// A diagram with one inner shell whose dots are the ports of `dots_from`
// (either the inner or the outer shell) and whose other shell is wired by `map`.
WiringDiagram graph_like(const Context& inner, const Context& outer, bool dots_on_inner,
                         const std::vector<std::size_t>& map, const std::vector<TypeSymbol>& support) {
    DiagramData d;
    d.inner = {inner};
    d.outer = outer;
    const Context& base = dots_on_inner ? inner : outer;
    d.dot_types = base.typing();
    std::vector<std::size_t> identity(base.arity());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    if (dots_on_inner) {
        d.boundary = identity;
        d.boundary.insert(d.boundary.end(), map.begin(), map.end());
    } else {
        d.boundary = map;
        d.boundary.insert(d.boundary.end(), identity.begin(), identity.end());
    }
    d.extra_support = support;
    return mk_wiring(std::move(d));
}

std::vector<std::size_t> iota_map(std::size_t n, std::size_t modulo) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = modulo ? i % modulo : i;
    return m;
}

} // namespace

WiringDiagram identity_wd(const Context& g) {
    return graph_like(g, g, true, iota_map(g.arity(), 0), g.support());
}

WiringDiagram diagonal_wd(const Context& g) {
    return graph_like(g, oplus(g, g), true, iota_map(2 * g.arity(), g.arity()), g.support());
}

WiringDiagram codiagonal_wd(const Context& g) {
    return graph_like(oplus(g, g), g, false, iota_map(2 * g.arity(), g.arity()), g.support());
}

WiringDiagram counit_wd(const Context& g) { return graph_like(g, terminal(), true, {}, g.support()); }

WiringDiagram unit_wd(const Context& g) { return graph_like(terminal(), g, false, {}, g.support()); }

WiringDiagram braid_wd(const Context& g, const Context& h) {
    const std::size_t n = g.arity();
    const std::size_t m = h.arity();
    std::vector<std::size_t> map(n + m);
    for (std::size_t j = 0; j < n + m; ++j) map[j] = j < m ? n + j : j - m;
    return graph_like(oplus(g, h), oplus(h, g), true, map, oplus(g, h).support());
}

WiringDiagram graph_wd(const ContextMorphism& f) {
    return graph_like(f.dom(), f.cod(), true, f.map(), f.dom().support());
}

WiringDiagram cograph_wd(const ContextMorphism& f) {
    return graph_like(f.cod(), f.dom(), false, f.map(), f.dom().support());
}

WiringDiagram transpose_wd(const WiringDiagram& w) {
    if (w.shell_count() != 1) {
        throw Error(ErrorKind::BoundaryMismatch, "transpose needs exactly one inner shell");
    }
    DiagramData d;
    d.inner = {w.outer()};
    d.outer = w.inner()[0];
    d.dot_types = w.dot_types();
    const std::size_t split = w.port_offset(1);
    d.boundary.assign(w.boundary().begin() + static_cast<std::ptrdiff_t>(split), w.boundary().end());
    d.boundary.insert(d.boundary.end(), w.boundary().begin(), w.boundary().begin() + static_cast<std::ptrdiff_t>(split));
    d.extra_support = w.support();
    return mk_wiring(std::move(d));
}

WiringDiagram braid_outer(const WiringDiagram& w, const Context& left, const Context& right) {
    if (oplus(left, right) != w.outer()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "outer shell " + to_string(w.outer()) + " is not " + to_string(left) + " + " + to_string(right));
    }
    DiagramData d = w.data();
    d.outer = oplus(right, left);
    const std::size_t base = w.port_offset(w.shell_count());
    for (std::size_t j = 0; j < right.arity(); ++j) d.boundary[base + j] = w.outer_dot(left.arity() + j);
    for (std::size_t j = 0; j < left.arity(); ++j) d.boundary[base + right.arity() + j] = w.outer_dot(j);
    return mk_wiring(std::move(d));
}

WiringDiagram transpose_wd(const WiringDiagram& w, const Context& left, const Context& right) {
    if (w.shell_count() != 0) {
        throw Error(ErrorKind::BoundaryMismatch, "split transpose applies to diagrams without inner shells");
    }
    return braid_outer(w, left, right);
}

} // namespace grl
