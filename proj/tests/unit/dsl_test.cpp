#include "grl/dsl.hpp"
#include "grl/error.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace grl;
using namespace grl::testing;

namespace {

const char* kExample54 = R"(type v, w, x, y, z;
context G1 = (x, y, y);
context G2 = (x, x, x | supp w, y);
context G3 = (y, y, x, x);
context Gout = (y, z, z, x, x, z | supp w);
diagram omega : (G1, G2, G3) -> Gout {
  dot d1:y, d2:y, d3:z, d4:x, d5:x, d6:x, d7:z;
  wire G1.1 -> d4; wire G1.2 -> d2; wire G1.3 -> d1;
  wire G2.1 -> d6; wire G2.2 -> d4; wire G2.3 -> d5;
  wire G3.1 -> d1; wire G3.2 -> d2; wire G3.3 -> d6; wire G3.4 -> d6;
  wire out.1 -> d1; wire out.2 -> d3; wire out.3 -> d3;
  wire out.4 -> d5; wire out.5 -> d6; wire out.6 -> d7;
  supp {v};
}
)";

// Message and kind of the error raised by parsing `src`.
std::pair<std::string, ErrorKind> parse_error(const std::string& src) {
    try {
        parse_dsl(src);
    } catch (const Error& e) {
        return {e.what(), e.kind()};
    }
    return {"", ErrorKind::Io};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("grl_dsl_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name, std::ios::binary) << text;
        return (path / name).string();
    }
};

const char* kGraph = "type n, e;\npred E : (n, n);\npred U : (n);\npred Q : (n | supp e);\ndomain n = {a, b, c};\n"
                     "domain e = {};\n";

} // namespace

TEST(Dsl, EmptySourceGivesEmptyWorkspace) {
    auto ws = parse_dsl("");
    EXPECT_TRUE(ws.signature.types().empty());
    EXPECT_TRUE(ws.diagrams.empty() && ws.terms.empty() && ws.contexts.empty());
    EXPECT_FALSE(ws.has_model());
    EXPECT_EQ(print_workspace(ws), "");
    EXPECT_THROW(ws.model(), Error);
    EXPECT_EQ(print_workspace(parse_dsl("# only a comment\n// and another\n")), "");
}

TEST(Dsl, ShellOfThreePortsWithExtraSupport) {
    auto ws = parse_dsl("type w, x, y, z;\ncontext Gamma = (y, z, y | supp w, x);\n");
    ASSERT_NE(ws.find_context("Gamma"), nullptr);
    EXPECT_EQ(*ws.find_context("Gamma"), example_shell());
    EXPECT_EQ(print_context(example_shell()), "(y, z, y | supp w, x)");
}

TEST(Dsl, MorphismDataParsesAndValidates) {
    auto ws = parse_dsl(kExample54);
    const auto* d = ws.find_diagram("omega");
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->diagram, mk_wiring(example_morphism_data()));
    EXPECT_EQ(d->diagram.dot_count(), 7u);
    EXPECT_EQ(d->diagram.white_labels(), (std::vector<TypeSymbol>{"v", "w"}));
    EXPECT_EQ(d->inner_names, (std::vector<std::string>{"G1", "G2", "G3"}));
}

TEST(Dsl, WireBeyondArityIsReportedAtItsLine) {
    auto [msg, kind] = parse_error("type x;\ncontext G1 = (x, x, x);\ndiagram w : (G1) -> () {\n  dot d1:x;\n"
                                   "  wire G1.4 -> d1;\n}\n");
    EXPECT_EQ(kind, ErrorKind::OutOfRange);
    EXPECT_NE(msg.find("<input>:5:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("G1.4"), std::string::npos) << msg;
}

TEST(Dsl, SyntaxErrorsArePositioned) {
    auto [msg, kind] = parse_error("type x\npred R : (x);\n");
    EXPECT_EQ(kind, ErrorKind::Syntax);
    EXPECT_EQ(msg.rfind("<input>:2:1:", 0), 0u) << msg;

    std::tie(msg, kind) = parse_error("type x;\ncontext G = (x, x;\n");
    EXPECT_EQ(msg.rfind("<input>:2:18:", 0), 0u) << msg;

    std::tie(msg, kind) = parse_error("type x;\n  @\n");
    EXPECT_EQ(msg.rfind("<input>:2:3:", 0), 0u) << msg;

    std::tie(msg, kind) = parse_error("type x;\nsort y;\n");
    EXPECT_NE(msg.find("unknown declaration"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\ndomain x = {\"open};\n");
    EXPECT_NE(msg.find("unterminated string"), std::string::npos) << msg;
}

TEST(Dsl, UndefinedNames) {
    EXPECT_EQ(parse_error("pred R : (x);").second, ErrorKind::UnknownType);
    EXPECT_EQ(parse_error("type x;\ndiagram w : (G) -> () {}").second, ErrorKind::UnknownName);
    EXPECT_EQ(parse_error("type x;\nterm t = R;").second, ErrorKind::UnknownName);
    EXPECT_EQ(parse_error("type x;\ndiagram w : () -> (x) { dot a:x; wire out.1 -> b; }").second,
              ErrorKind::UnknownName);
    EXPECT_EQ(parse_error("type x;\npred R : (x);\nrelation S = {};").second, ErrorKind::UnknownName);
    EXPECT_EQ(parse_error("type x;\ncontext G = (x);\ncontext G = (x);").second, ErrorKind::UnknownName);
    EXPECT_EQ(parse_error("type x;\ncontext out = (x);").second, ErrorKind::Syntax);
}

TEST(Dsl, ValidationErrorsNameTheDeclaration) {
    const std::string head = "type x, y;\npred R : (x, y);\ndiagram w : ((x, x)) -> () { dot a:x; wire 1.1, 1.2 -> a; }\n";
    auto [msg, kind] = parse_error(head + "term t = w(R);\n");
    EXPECT_EQ(msg.rfind("<input>:4:1: in term t:", 0), 0u) << msg;

    std::tie(msg, kind) = parse_error("type x, y;\ndiagram w : ((x)) -> () {\n  dot a:y;\n  wire 1.1 -> a;\n}\n");
    EXPECT_EQ(kind, ErrorKind::TypeMismatch);
    EXPECT_NE(msg.find("<input>:4:"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\ndiagram w : ((x, x)) -> () {\n  dot a:x;\n  wire 1.1 -> a;\n}\n");
    EXPECT_EQ(kind, ErrorKind::BoundaryMismatch);
    EXPECT_NE(msg.find("port 1.2 is not wired"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\ndiagram w : ((x)) -> () { dot a:x; wire 1.1 -> a; wire 1.1 -> a; }\n");
    EXPECT_NE(msg.find("wired twice"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\ncontext G = (x);\ndiagram w : (G) -> G { dot a:x; wire G.1 -> a; }\n");
    EXPECT_NE(msg.find("ambiguous"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\npred R : (x);\ndomain x = {1};\nrelation R = {(1), (2)};\n");
    EXPECT_EQ(kind, ErrorKind::TypeMismatch);
    EXPECT_NE(msg.find("<input>:4:20:"), std::string::npos) << msg;

    std::tie(msg, kind) = parse_error("type x;\npred R : (x);\ndomain x = {1};\nrelation R = {(1, 1)};\n");
    EXPECT_EQ(kind, ErrorKind::BoundaryMismatch);
}

TEST(Dsl, TermsNestAndAlias) {
    auto ws = parse_dsl("type x;\npred R : (x, x);\n"
                        "diagram sq : ((x, x), (x, x)) -> (x, x) {\n"
                        "  dot a:x, b:x, c:x;\n  wire 1.1 -> a; wire 1.2 -> b; wire 2.1 -> b; wire 2.2 -> c;\n"
                        "  wire out.1 -> a; wire out.2 -> c;\n}\n"
                        "term r = R;\nterm r2 = sq(R, r);\nterm r4 = sq(r2, r2);\nterm same = r4;\n");
    ASSERT_EQ(ws.terms.size(), 4u);
    EXPECT_EQ(ws.find_term("r")->term, bare_term(ws.signature, "R"));
    EXPECT_FALSE(ws.find_term("r4")->term.is_flat());
    EXPECT_EQ(flatten(ws.find_term("r4")->term).cells().size(), 4u);
    EXPECT_EQ(ws.find_term("same")->term, ws.find_term("r4")->term);
}

TEST(Dsl, PrintParseIsIdentityOnNormalForms) {
    Rng rng(101);
    const auto types = type_pool(3);
    for (int i = 0; i < 300; ++i) {
        const auto w = random_diagram(rng, types, 3, 3, 5);
        std::string src;
        for (const auto& t : types) src += "type " + t.name() + ";\n";
        src += print_diagram("w", w);
        auto ws = parse_dsl(src);
        ASSERT_EQ(ws.diagrams.size(), 1u);
        ASSERT_EQ(ws.diagrams[0].diagram, w) << src;
        const auto printed = print_workspace(ws);
        ASSERT_EQ(print_workspace(parse_dsl(printed)), printed);
    }
}

TEST(Dsl, RandomWorkspacesRoundTrip) {
    Rng rng(103);
    const auto types = type_pool(2);
    for (int i = 0; i < 100; ++i) {
        PredicateSignature sig = signature_for(types, {});
        const auto w = random_diagram(rng, types, 3, 2, 4);
        const auto term = term_with_fresh_predicates(sig, w);
        auto m = random_model(rng, sig, 3, 0.2, 0.5);

        std::string src;
        for (const auto& t : types) src += "type " + t.name() + ";\n";
        for (const auto& [name, c] : sig.predicates()) src += "pred " + name + " : " + print_context(c) + ";\n";
        src += print_diagram("w", w) + "term t = w(";
        for (std::size_t k = 0; k < term.cells().size(); ++k) {
            src += (k ? ", " : "") + std::get<PredicateRef>(term.cells()[k]).name;
        }
        src += ");\n";
        for (const auto& [t, atoms] : m.domains().carriers()) {
            src += "domain " + t.name() + " = {";
            for (std::size_t k = 0; k < atoms.size(); ++k) src += (k ? ", " : "") + print_atom(atoms[k]);
            src += "};\n";
        }
        for (const auto& [name, r] : m.relations()) {
            src += "relation " + name + " = {";
            bool first = true;
            for (const auto& t : r.tuples()) {
                src += (first ? "" : ", ") + print_tuple(t);
                first = false;
            }
            src += "};\n";
        }
        auto ws = parse_dsl(src);
        ASSERT_EQ(ws.find_term("t")->term, term) << src;
        ASSERT_EQ(eval(ws.find_term("t")->term, ws.model()), eval(term, m)) << src;
        const auto printed = print_workspace(ws);
        ASSERT_EQ(print_workspace(parse_dsl(printed)), printed);
    }
}

TEST(Dsl, AtomsNeedingQuotesSurvive) {
    const Atom odd = "a \"quoted\", odd\\atom";
    auto ws = parse_dsl("type x;\npred P : (x);\ndomain x = {" + print_atom(odd) + ", plain};\nrelation P = {" +
                        print_atom(odd) + "};\n");
    EXPECT_TRUE(ws.relations.at("P").contains({odd}));
    const auto printed = print_workspace(ws);
    EXPECT_EQ(print_workspace(parse_dsl(printed)), printed);
    EXPECT_EQ(print_tuple({"1", "b c"}), "(1, \"b c\")");
}

TEST(Csv, UnaryFileLoadsAsSet) {
    TempDir dir;
    auto path = dir.write("u.csv", "a\nc\na\n");
    auto ws = parse_dsl(kGraph);
    ingest_csv(ws, "U", path);
    EXPECT_EQ(ws.relations.at("U").tuples(), (std::set<Tuple>{{"a"}, {"c"}}));
}

TEST(Csv, HeaderQuotesAndLineEndings) {
    TempDir dir;
    auto path = dir.write("e.csv", "src,dst\r\n\"a\", b\r\n\r\nb,\"c\"\r\n");
    auto ws = parse_dsl(kGraph);
    ingest_csv(ws, "E", path, true);
    EXPECT_EQ(ws.relations.at("E").tuples(), (std::set<Tuple>{{"a", "b"}, {"b", "c"}}));
}

TEST(Csv, UnknownAtomNamesTheRow) {
    TempDir dir;
    auto path = dir.write("e.csv", "a,b\nb,zz\n");
    auto ws = parse_dsl(kGraph);
    try {
        ingest_csv(ws, "E", path);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
        EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos) << e.what();
    }
    EXPECT_EQ(ws.relations.count("E"), 0u);
}

TEST(Csv, ReloadIsIdempotent) {
    TempDir dir;
    auto path = dir.write("e.csv", "a,b\nb,c\n");
    auto ws = parse_dsl(kGraph);
    ingest_csv(ws, "E", path);
    const auto once = ws.relations.at("E");
    ingest_csv(ws, "E", path);
    EXPECT_EQ(ws.relations.at("E"), once);
}

TEST(Csv, ArityAndSupportViolations) {
    TempDir dir;
    auto ws = parse_dsl(kGraph);
    EXPECT_EQ([&] {
        try {
            ingest_csv(ws, "E", dir.write("e.csv", "a,b,c\n"));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    }(), ErrorKind::BoundaryMismatch);
    EXPECT_EQ([&] {
        try {
            ingest_csv(ws, "Q", dir.write("q.csv", "a\n"));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    }(), ErrorKind::SupportViolation);
    EXPECT_THROW(ingest_csv(ws, "E", (dir.path / "missing.csv").string()), Error);
    EXPECT_THROW(ingest_csv(ws, "Nope", dir.write("n.csv", "a\n")), Error);
    EXPECT_THROW(ingest_csv(ws, "E", dir.write("bad.csv", "\"a,b\n")), Error);
}

TEST(Csv, StatementResolvesAgainstSourceDirectory) {
    TempDir dir;
    dir.write("e.csv", "a,b\n");
    auto src = dir.write("m.grl", std::string(kGraph) + "csv E \"e.csv\";\n");
    Workspace ws;
    load_dsl_file(src, ws);
    EXPECT_EQ(ws.relations.at("E").tuples(), (std::set<Tuple>{{"a", "b"}}));
    // The printed form inlines the loaded rows.
    EXPECT_NE(print_workspace(ws).find("relation E = {(a, b)};"), std::string::npos);
}

TEST(Dsl, CorpusRoundTrips) {
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(GRL_CORPUS_DIR)) {
        if (e.path().extension() != ".grl") continue;
        ++files;
        Workspace ws;
        load_dsl_file(e.path().string(), ws);
        const auto printed = print_workspace(ws);
        ASSERT_EQ(print_workspace(parse_dsl(printed)), printed) << e.path();
    }
    EXPECT_GE(files, 20u);
}
