#include "grl/dsl.hpp"

#include "grl/error.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace grl {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool is_name(const std::string& s) {
    return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') &&
           std::all_of(s.begin(), s.end(), word_char);
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"type", "pred",  "context", "diagram", "term", "domain",
                                         "relation", "csv", "dot", "wire", "supp", "out", "header"};
    return k;
}

std::string positioned(const std::string& origin, SourcePos pos, const std::string& message) {
    return origin + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message;
}

enum class Tok { Word, String, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::vector<Token> lex(const std::string& src, const std::string& origin) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (word_char(c)) {
            SourcePos pos{line, col};
            std::size_t j = i;
            while (j < src.size() && word_char(src[j])) ++j;
            out.push_back({Tok::Word, src.substr(i, j - i), pos});
            advance(j - i);
        } else if (c == '"') {
            SourcePos pos{line, col};
            std::string text;
            advance(1);
            while (true) {
                if (i >= src.size() || src[i] == '\n') {
                    throw Error(ErrorKind::Syntax, positioned(origin, pos, "unterminated string"));
                }
                if (src[i] == '"') {
                    advance(1);
                    break;
                }
                if (src[i] == '\\' && i + 1 < src.size()) advance(1);
                text += src[i];
                advance(1);
            }
            out.push_back({Tok::String, text, pos});
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Punct, "->", {line, col}});
            advance(2);
        } else if (std::string_view(";:,(){}|.=").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), {line, col}});
            advance(1);
        } else {
            throw Error(ErrorKind::Syntax,
                        positioned(origin, {line, col}, std::string("unexpected character '") + c + "'"));
        }
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
    }
}

// One inner or outer shell reference inside a diagram body.
struct ShellRef {
    std::size_t shell;  // inner index, or the inner count for the outer shell
    std::string text;
};

class Parser {
public:
    Parser(const std::string& src, Workspace& ws, std::string origin, std::string base_dir)
        : tokens_(lex(src, origin)), ws_(ws), origin_(std::move(origin)), base_dir_(std::move(base_dir)) {}

    void run() {
        while (peek().kind != Tok::End) statement();
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& message, ErrorKind kind = ErrorKind::Syntax) const {
        throw Error(kind, positioned(origin_, t.pos, message));
    }

    bool accept(const std::string& punct) {
        if (peek().kind == Tok::Punct && peek().text == punct) {
            ++at_;
            return true;
        }
        return false;
    }

    void expect(const std::string& punct) {
        if (!accept(punct)) fail(peek(), "expected '" + punct + "' but found " + describe(peek()));
    }

    bool accept_keyword(const std::string& kw) {
        if (peek().kind == Tok::Word && peek().text == kw) {
            ++at_;
            return true;
        }
        return false;
    }

    const Token& name() {
        const Token& t = next();
        if (t.kind != Tok::Word || !is_name(t.text)) fail(t, "expected a name but found " + describe(t));
        if (keywords().count(t.text)) fail(t, "'" + t.text + "' is a reserved word");
        return t;
    }

    const Token& fresh_name(const char* what) {
        const Token& t = name();
        if (ws_.name_taken(t.text)) fail(t, std::string(what) + " name '" + t.text + "' is already declared", ErrorKind::UnknownName);
        return t;
    }

    std::size_t number() {
        const Token& t = next();
        if (t.kind != Tok::Word || !std::all_of(t.text.begin(), t.text.end(), ::isdigit) || t.text.size() > 9) {
            fail(t, "expected a port number but found " + describe(t));
        }
        return std::stoul(t.text);
    }

    Atom atom() {
        const Token& t = next();
        if (t.kind != Tok::Word && t.kind != Tok::String) fail(t, "expected an atom but found " + describe(t));
        return t.text;
    }

    TypeSymbol type_symbol() {
        const Token& t = name();
        if (!ws_.signature.types().contains(t.text)) fail(t, "unknown type '" + t.text + "'", ErrorKind::UnknownType);
        return t.text;
    }

    // `supp {a, b}`, `supp a, b` or `supp {}`; the keyword is already consumed.
    std::vector<TypeSymbol> support_list() {
        std::vector<TypeSymbol> out;
        const bool braced = accept("{");
        if (braced && accept("}")) return out;
        do out.push_back(type_symbol());
        while (accept(","));
        if (braced) expect("}");
        return out;
    }

    // `(x, y | supp z)`; the parenthesis is already consumed.
    Context context_literal() {
        std::vector<TypeSymbol> typing, extra;
        if (!accept(")")) {
            if (peek().kind == Tok::Word && peek().text != "supp") {
                do typing.push_back(type_symbol());
                while (accept(","));
            }
            if (accept("|")) {
                if (!accept_keyword("supp")) fail(peek(), "expected 'supp' after '|'");
                extra = support_list();
            }
            expect(")");
        }
        return Context(typing, extra);
    }

    // A context name or a literal; `name_out` receives the name when one was used.
    Context context_ref(std::string* name_out = nullptr) {
        if (accept("(")) return context_literal();
        const Token& t = name();
        const Context* c = ws_.find_context(t.text);
        if (!c) fail(t, "unknown context '" + t.text + "'", ErrorKind::UnknownName);
        if (name_out) *name_out = t.text;
        return *c;
    }

    void end_statement() { expect(";"); }

    template <class F>
    void validated(const Token& start, const std::string& what, F&& body) {
        try {
            body();
        } catch (const Error& e) {
            if (std::string(e.what()).rfind(origin_ + ":", 0) == 0) throw;
            throw Error(e.kind(), positioned(origin_, start.pos, "in " + what + ": " + e.what()));
        }
    }

    void statement() {
        const Token& kw = next();
        if (kw.kind != Tok::Word) fail(kw, "expected a declaration but found " + describe(kw));
        if (kw.text == "type") return type_decl();
        if (kw.text == "pred") return pred_decl(kw);
        if (kw.text == "context") return context_decl();
        if (kw.text == "diagram") return diagram_decl(kw);
        if (kw.text == "term") return term_decl(kw);
        if (kw.text == "domain") return domain_decl(kw);
        if (kw.text == "relation") return relation_decl();
        if (kw.text == "csv") return csv_decl(kw);
        fail(kw, "unknown declaration '" + kw.text + "'");
    }

    void type_decl() {
        do {
            const Token& t = name();
            ws_.signature.add_type(t.text);
        } while (accept(","));
        end_statement();
    }

    void pred_decl(const Token& kw) {
        const Token& n = fresh_name("predicate");
        expect(":");
        Context c = context_ref();
        if (accept_keyword("supp")) {
            auto extra = c.extra_support();
            for (auto& s : support_list()) extra.push_back(s);
            c = Context(c.typing(), extra);
        }
        end_statement();
        validated(kw, "pred " + n.text, [&] { ws_.signature.add_predicate(n.text, c); });
    }

    void context_decl() {
        const Token& n = fresh_name("context");
        expect("=");
        Context c = context_ref();
        end_statement();
        ws_.contexts.emplace_back(n.text, std::move(c));
    }

    ShellRef shell_ref(const DiagramDecl& d, const std::vector<Context>& inner) {
        const Token& t = next();
        const std::size_t k = inner.size();
        if (t.kind != Tok::Word) fail(t, "expected a shell reference but found " + describe(t));
        if (t.text == "out") return {k, t.text};
        if (std::all_of(t.text.begin(), t.text.end(), ::isdigit)) {
            const std::size_t i = t.text.size() > 9 ? 0 : std::stoul(t.text);
            if (i == 0 || i > k) fail(t, "no inner shell " + t.text, ErrorKind::OutOfRange);
            return {i - 1, t.text};
        }
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < k; ++i) {
            if (d.inner_names[i] == t.text) hits.push_back(i);
        }
        if (d.outer_name == t.text) hits.push_back(k);
        if (hits.empty()) fail(t, "no shell named '" + t.text + "'", ErrorKind::UnknownName);
        if (hits.size() > 1) fail(t, "shell name '" + t.text + "' is ambiguous; use its position", ErrorKind::UnknownName);
        return {hits[0], t.text};
    }

    void diagram_decl(const Token& kw) {
        DiagramDecl d;
        const Token& n = fresh_name("diagram");
        d.name = n.text;
        d.pos = kw.pos;
        expect(":");
        std::vector<Context> inner;
        expect("(");
        if (!accept(")")) {
            do {
                std::string nm;
                inner.push_back(context_ref(&nm));
                d.inner_names.push_back(nm);
            } while (accept(","));
            expect(")");
        }
        expect("->");
        Context outer = context_ref(&d.outer_name);
        expect("{");

        const std::size_t k = inner.size();
        std::vector<std::size_t> offsets(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) offsets[i + 1] = offsets[i] + inner[i].arity();
        const std::size_t ports = offsets[k] + outer.arity();
        auto shell_ctx = [&](std::size_t s) -> const Context& { return s == k ? outer : inner[s]; };

        std::vector<std::string> dot_names;
        std::map<std::string, std::size_t> dot_index;
        std::vector<TypeSymbol> dot_types, extra;
        std::vector<std::size_t> boundary(ports, SIZE_MAX);

        while (!accept("}")) {
            const Token& st = next();
            if (st.kind == Tok::Word && st.text == "dot") {
                do {
                    const Token& dn = next();
                    if (dn.kind != Tok::Word || !word_char(dn.text[0])) fail(dn, "expected a dot name");
                    if (dot_index.count(dn.text)) fail(dn, "dot '" + dn.text + "' is already declared");
                    expect(":");
                    dot_index[dn.text] = dot_types.size();
                    dot_names.push_back(dn.text);
                    dot_types.push_back(type_symbol());
                } while (accept(","));
                end_statement();
            } else if (st.kind == Tok::Word && st.text == "wire") {
                struct Source {
                    Token tok;
                    std::size_t port;
                    TypeSymbol type;
                };
                std::vector<Source> sources;
                do {
                    const Token at = peek();
                    ShellRef s = shell_ref(d, inner);
                    expect(".");
                    const Token pt = peek();
                    const std::size_t p = number();
                    if (p == 0 || p > shell_ctx(s.shell).arity()) {
                        fail(pt, "port " + s.text + "." + std::to_string(p) + " does not exist; the shell has arity " +
                                     std::to_string(shell_ctx(s.shell).arity()),
                             ErrorKind::OutOfRange);
                    }
                    const std::size_t port = offsets[s.shell] + p - 1;
                    if (boundary[port] != SIZE_MAX) fail(at, "port " + s.text + "." + std::to_string(p) + " is wired twice");
                    boundary[port] = SIZE_MAX - 1;
                    sources.push_back({at, port, shell_ctx(s.shell).type_at(p - 1)});
                } while (accept(","));
                expect("->");
                const Token& dn = next();
                auto it = dot_index.find(dn.text);
                if (dn.kind != Tok::Word || it == dot_index.end()) fail(dn, "unknown dot " + describe(dn), ErrorKind::UnknownName);
                for (const auto& src : sources) {
                    if (src.type != dot_types[it->second]) {
                        fail(src.tok, "port of type " + src.type.name() + " wired to dot '" + dn.text + "' of type " +
                                          dot_types[it->second].name(),
                             ErrorKind::TypeMismatch);
                    }
                    boundary[src.port] = it->second;
                }
                end_statement();
            } else if (st.kind == Tok::Word && st.text == "supp") {
                for (auto& s : support_list()) extra.push_back(s);
                end_statement();
            } else {
                fail(st, "expected 'dot', 'wire', 'supp' or '}' but found " + describe(st));
            }
        }
        accept(";");

        for (std::size_t s = 0; s <= k; ++s) {
            for (std::size_t j = 0; j < shell_ctx(s).arity(); ++j) {
                if (boundary[offsets[s] + j] == SIZE_MAX) {
                    const std::string shell = s == k ? std::string("out") : std::to_string(s + 1);
                    fail(kw, "in diagram " + d.name + ": port " + shell + "." + std::to_string(j + 1) + " is not wired",
                         ErrorKind::BoundaryMismatch);
                }
            }
        }
        validated(kw, "diagram " + d.name, [&] {
            d.diagram = mk_wiring({inner, outer, dot_types, boundary, extra});
        });
        ws_.diagrams.push_back(std::move(d));
    }

    Cell cell_for(const Token& t) {
        if (ws_.signature.has_predicate(t.text)) return PredicateRef{t.text};
        if (const TermDecl* td = ws_.find_term(t.text)) return nested(td->term);
        fail(t, "'" + t.text + "' is neither a predicate nor a term", ErrorKind::UnknownName);
    }

    void term_decl(const Token& kw) {
        TermDecl td;
        const Token& n = fresh_name("term");
        td.name = n.text;
        td.pos = kw.pos;
        expect("=");
        const Token& head = name();
        if (accept("(")) {
            const DiagramDecl* dd = ws_.find_diagram(head.text);
            if (!dd) fail(head, "unknown diagram '" + head.text + "'", ErrorKind::UnknownName);
            td.diagram = head.text;
            std::vector<Cell> cells;
            if (!accept(")")) {
                do {
                    const Token& a = name();
                    td.args.push_back(a.text);
                    cells.push_back(cell_for(a));
                } while (accept(","));
                expect(")");
            }
            end_statement();
            validated(kw, "term " + td.name, [&] { td.term = mk_term(ws_.signature, dd->diagram, std::move(cells)); });
        } else {
            end_statement();
            td.args.push_back(head.text);
            if (ws_.signature.has_predicate(head.text)) {
                td.term = bare_term(ws_.signature, head.text);
            } else if (const TermDecl* other = ws_.find_term(head.text)) {
                td.term = other->term;
            } else {
                fail(head, "'" + head.text + "' is neither a predicate nor a term", ErrorKind::UnknownName);
            }
        }
        ws_.terms.push_back(std::move(td));
    }

    void domain_decl(const Token& kw) {
        const TypeSymbol t = type_symbol();
        if (ws_.domains.carriers().count(t)) fail(kw, "domain of type " + t.name() + " is already declared");
        expect("=");
        expect("{");
        std::vector<Atom> atoms;
        if (!accept("}")) {
            do atoms.push_back(atom());
            while (accept(","));
            expect("}");
        }
        end_statement();
        ws_.domains.set(t, std::move(atoms));
    }

    const Context& declared_predicate(const Token& t) {
        if (!ws_.signature.has_predicate(t.text)) fail(t, "unknown predicate '" + t.text + "'", ErrorKind::UnknownName);
        return ws_.signature.predicate(t.text);
    }

    void relation_decl() {
        const Token& n = name();
        const Context& c = declared_predicate(n);
        expect("=");
        expect("{");
        FinRelation r(c);
        std::vector<std::pair<Token, Tuple>> rows;
        if (!accept("}")) {
            do {
                const Token& start = peek();
                Tuple t;
                if (accept("(")) {
                    if (!accept(")")) {
                        do t.push_back(atom());
                        while (accept(","));
                        expect(")");
                    }
                } else {
                    t.push_back(atom());
                }
                if (t.size() != c.arity()) {
                    fail(start, "tuple has " + std::to_string(t.size()) + " entries but " + n.text + " has arity " +
                                    std::to_string(c.arity()),
                         ErrorKind::BoundaryMismatch);
                }
                rows.push_back({start, std::move(t)});
            } while (accept(","));
            expect("}");
        }
        end_statement();
        for (auto& [tok, t] : rows) {
            FinRelation single(c, {t});
            try {
                validate_relation(single, ws_.domains);
            } catch (const Error& e) {
                fail(tok, std::string("in relation ") + n.text + ": " + e.what(), e.kind());
            }
            r.insert(t);
        }
        auto& slot = ws_.relations.try_emplace(n.text, c).first->second;
        for (const auto& t : r.tuples()) slot.insert(t);
    }

    void csv_decl(const Token& kw) {
        const Token& n = name();
        declared_predicate(n);
        const Token& p = next();
        if (p.kind != Tok::String) fail(p, "expected a quoted path but found " + describe(p));
        const bool header = accept_keyword("header");
        end_statement();
        std::filesystem::path path(p.text);
        if (path.is_relative()) path = std::filesystem::path(base_dir_) / path;
        validated(kw, "csv " + n.text, [&] { ingest_csv(ws_, n.text, path.string(), header); });
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    Workspace& ws_;
    std::string origin_;
    std::string base_dir_;
};

// RFC-4180 subset: quoted fields with doubled quotes, CRLF or LF endings.
std::vector<std::vector<std::string>> read_csv_rows(const std::string& text, const std::string& path) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, was_quoted = false, any = false;
    std::size_t line = 1;
    auto end_field = [&] {
        if (!was_quoted) {
            auto b = field.find_first_not_of(" \t");
            auto e = field.find_last_not_of(" \t");
            field = b == std::string::npos ? "" : field.substr(b, e - b + 1);
        }
        row.push_back(std::move(field));
        field.clear();
        was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        if (!(row.size() == 1 && row[0].empty() && !any)) rows.push_back(std::move(row));
        row.clear();
        any = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
        } else if (c == '"') {
            quoted = was_quoted = any = true;
        } else if (c == ',') {
            end_field();
            any = true;
        } else if (c == '\r') {
            continue;
        } else if (c == '\n') {
            end_row();
            ++line;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw Error(ErrorKind::Syntax, path + ":" + std::to_string(line) + ": unterminated quoted field");
    if (any || !field.empty() || !row.empty()) end_row();
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> names_of(const std::vector<TypeSymbol>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.name());
    return out;
}

} // namespace

ModelInstance Workspace::model() const {
    if (!has_model()) throw Error(ErrorKind::UnknownName, "no model is loaded (declare a domain or pass --model)");
    ModelInstance m(signature, domains);
    for (const auto& [name, r] : relations) m.set_relation(name, r);
    return m;
}

const Context* Workspace::find_context(const std::string& name) const {
    for (const auto& [n, c] : contexts) {
        if (n == name) return &c;
    }
    return nullptr;
}

const DiagramDecl* Workspace::find_diagram(const std::string& name) const {
    for (const auto& d : diagrams) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

const TermDecl* Workspace::find_term(const std::string& name) const {
    for (const auto& t : terms) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

bool Workspace::name_taken(const std::string& name) const {
    return signature.has_predicate(name) || find_context(name) || find_diagram(name) || find_term(name);
}

void parse_dsl(const std::string& source, Workspace& ws, const std::string& origin, const std::string& base_dir) {
    Parser(source, ws, origin, base_dir).run();
}

Workspace parse_dsl(const std::string& source) {
    Workspace ws;
    parse_dsl(source, ws);
    return ws;
}

void load_dsl_file(const std::string& path, Workspace& ws) {
    const auto dir = std::filesystem::path(path).parent_path();
    parse_dsl(read_file(path), ws, path, dir.empty() ? "." : dir.string());
}

void ingest_csv(Workspace& ws, const std::string& predicate, const std::string& path, bool header) {
    if (!ws.signature.has_predicate(predicate)) throw Error(ErrorKind::UnknownName, "unknown predicate '" + predicate + "'");
    const Context& c = ws.signature.predicate(predicate);
    const auto rows = read_csv_rows(read_file(path), path);
    FinRelation loaded(c);
    for (std::size_t i = header ? 1 : 0; i < rows.size(); ++i) {
        const std::string where = path + ": row " + std::to_string(i + 1) + ": ";
        // A zero-ary predicate is read from rows holding one empty field.
        Tuple t = c.arity() == 0 && rows[i].size() == 1 && rows[i][0].empty() ? Tuple{} : rows[i];
        if (t.size() != c.arity()) {
            throw Error(ErrorKind::BoundaryMismatch, where + "has " + std::to_string(t.size()) + " fields but " +
                                                         predicate + " has arity " + std::to_string(c.arity()));
        }
        try {
            validate_relation(FinRelation(c, {t}), ws.domains);
        } catch (const Error& e) {
            throw Error(e.kind(), where + e.what());
        }
        loaded.insert(std::move(t));
    }
    auto& slot = ws.relations.try_emplace(predicate, c).first->second;
    for (const auto& t : loaded.tuples()) slot.insert(t);
}

std::string print_context(const Context& c) {
    std::string out = "(" + join(names_of(c.typing()), ", ");
    const auto extra = c.extra_support();
    if (!extra.empty()) out += std::string(c.arity() ? " " : "") + "| supp " + join(names_of(extra), ", ");
    return out + ")";
}

std::string print_atom(const Atom& a) {
    if (!a.empty() && std::all_of(a.begin(), a.end(), word_char)) return a;
    std::string out = "\"";
    for (char ch : a) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string print_tuple(const Tuple& t) {
    std::vector<std::string> parts;
    for (const auto& a : t) parts.push_back(print_atom(a));
    return "(" + join(parts, ", ") + ")";
}

std::string print_diagram(const std::string& name, const WiringDiagram& w, const std::vector<std::string>& inner_names,
                          const std::string& outer_name) {
    const std::size_t k = w.shell_count();
    auto label = [&](std::size_t s) -> std::string {
        const std::string& n = s == k ? outer_name : (s < inner_names.size() ? inner_names[s] : std::string());
        return n;
    };
    std::map<std::string, std::size_t> uses;
    for (std::size_t s = 0; s <= k; ++s) {
        if (!label(s).empty()) ++uses[label(s)];
    }
    auto ref = [&](std::size_t s) {
        if (!label(s).empty() && uses[label(s)] == 1) return label(s);
        return s == k ? std::string("out") : std::to_string(s + 1);
    };
    auto header_ctx = [&](std::size_t s) {
        const Context& c = s == k ? w.outer() : w.inner()[s];
        return label(s).empty() ? print_context(c) : label(s);
    };

    std::ostringstream out;
    std::vector<std::string> inner;
    for (std::size_t s = 0; s < k; ++s) inner.push_back(header_ctx(s));
    out << "diagram " << name << " : (" << join(inner, ", ") << ") -> " << header_ctx(k) << " {\n";
    for (std::size_t d = 0; d < w.dot_count(); ++d) out << "  dot d" << d + 1 << ":" << w.dot_types()[d].name() << ";\n";
    for (std::size_t s = 0; s <= k; ++s) {
        for (std::size_t j = 0; j < w.shell_arity(s); ++j) {
            out << "  wire " << ref(s) << "." << j + 1 << " -> d" << w.dot_at(s, j) + 1 << ";\n";
        }
    }
    const auto white = w.white_labels();
    if (!white.empty()) out << "  supp {" << join(names_of(white), ", ") << "};\n";
    out << "}\n";
    return out.str();
}

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    for (const auto& t : ws.signature.types()) out << "type " << t.name() << ";\n";
    for (const auto& [name, c] : ws.signature.predicates()) out << "pred " << name << " : " << print_context(c) << ";\n";
    for (const auto& [name, c] : ws.contexts) out << "context " << name << " = " << print_context(c) << ";\n";
    for (const auto& d : ws.diagrams) out << print_diagram(d.name, d.diagram, d.inner_names, d.outer_name);
    for (const auto& t : ws.terms) {
        out << "term " << t.name << " = ";
        if (t.diagram.empty()) {
            out << t.args.at(0);
        } else {
            out << t.diagram << "(" << join(t.args, ", ") << ")";
        }
        out << ";\n";
    }
    for (const auto& [t, atoms] : ws.domains.carriers()) {
        std::vector<std::string> parts;
        for (const auto& a : atoms) parts.push_back(print_atom(a));
        out << "domain " << t.name() << " = {" << join(parts, ", ") << "};\n";
    }
    for (const auto& [name, r] : ws.relations) {
        std::vector<std::string> parts;
        for (const auto& t : r.tuples()) parts.push_back(print_tuple(t));
        out << "relation " << name << " = {" << join(parts, ", ") << "};\n";
    }
    return out.str();
}

} // namespace grl
