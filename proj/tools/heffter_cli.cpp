// Command-line front end: construct, verify, decompose, orthogonal, biembed,
// search, simple-ordering. Exit codes: 0 success, 1 verification or
// certification failure, 2 usage error, 3 array only available as a
// separately published fixture.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "heffter/biembed.hpp"
#include "heffter/construct.hpp"
#include "heffter/decomp.hpp"
#include "heffter/grid_io.hpp"
#include "heffter/search.hpp"
#include "heffter/verify.hpp"

namespace {

using namespace heffter;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFixture = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// plain mode prints "key: value", structured mode prints "key value" with
// kebab-case keys so every line splits on whitespace.
struct Printer {
    bool structured = false;

    void kv(const std::string& key, const std::string& value) const {
        std::cout << key << (structured ? " " : ": ") << value << '\n';
    }
    void kv(const std::string& key, Entry value) const { kv(key, std::to_string(value)); }
    void kv(const std::string& key, std::uint64_t value) const { kv(key, std::to_string(value)); }
};

const char* okfail(bool b) { return b ? "ok" : "fail"; }

std::string fraction(const std::vector<bool>& flags) {
    std::size_t good = 0;
    for (bool b : flags) good += b ? 1 : 0;
    return std::to_string(good) + "/" + std::to_string(flags.size());
}

GridFile load_grid(const std::string& path) {
    try {
        return parse_grid_file(path);
    } catch (const GridFormatError& e) {
        throw UsageError(e.what());
    }
}

// Writes every (path, content) pair or none: a failed write removes the files
// already produced by this command.
void write_all(const std::vector<std::pair<std::string, std::string>>& files) {
    std::vector<std::string> written;
    for (const auto& [path, content] : files) {
        std::ofstream out(path, std::ios::trunc);
        if (!out || !(out << content) || !out.flush()) {
            std::error_code ec;
            for (const std::string& done : written) std::filesystem::remove(done, ec);
            std::filesystem::remove(path, ec);
            throw std::runtime_error("cannot write " + path);
        }
        written.push_back(path);
    }
}

Classification parse_requirement(const std::string& name) {
    if (name == "heffter") return Classification::Heffter;
    if (name == "globally-simple") return Classification::GloballySimple;
    if (name == "star" || name == "globally-simple-star")
        return Classification::GloballySimpleStar;
    throw UsageError("unknown requirement \"" + name +
                     "\" (expected heffter, globally-simple, or star)");
}

GraphKind parse_kind(const std::string& name) {
    if (name == "complete") return GraphKind::Complete;
    if (name == "cocktail") return GraphKind::CocktailParty;
    throw UsageError("unknown graph kind \"" + name + "\" (expected complete or cocktail)");
}

void print_violation(const Printer& P, const OrthogonalityViolation& viol) {
    if (P.structured) {
        P.kv("violation", "first " + std::to_string(viol.first_index) + " second " +
                              std::to_string(viol.second_index) + " shift " +
                              std::to_string(viol.shift) + " shared " +
                              std::to_string(viol.shared_edges));
    } else {
        P.kv("violation", "cycle " + std::to_string(viol.first_index) + " vs cycle " +
                              std::to_string(viol.second_index) + " translated by " +
                              std::to_string(viol.shift) + " share " +
                              std::to_string(viol.shared_edges) + " edges");
    }
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const Printer& P, Entry n, Entry k, const std::string& out,
                  const std::string& fixture) {
    std::optional<PartialArray> H;
    std::string construction;
    std::vector<std::string> adjustments;
    std::string source;
    Classification cls = Classification::NotHeffter;

    if (!fixture.empty()) {
        GridFile gf = load_grid(fixture);
        if (static_cast<Entry>(gf.array.rows()) != n ||
            static_cast<Entry>(gf.array.cols()) != n || static_cast<Entry>(gf.k) != k)
            throw CertificationError(
                "fixture " + fixture + " declares a " + std::to_string(gf.array.rows()) + "x" +
                std::to_string(gf.array.cols()) + " array with " + std::to_string(gf.k) +
                " entries per column, not the requested " + std::to_string(n) + "x" +
                std::to_string(n) + " with " + std::to_string(k));
        const VerificationReport rep = verify(gf.array, static_cast<std::size_t>(k));
        if (rep.classification != Classification::GloballySimpleStar)
            throw CertificationError("fixture " + fixture +
                                     " failed verification: classification is " +
                                     to_string(rep.classification) +
                                     ", need globally-simple-star");
        H = std::move(gf.array);
        construction = "fixture";
        source = "fixture " + fixture;
        cls = rep.classification;
    } else {
        BuildOutcome outcome = build(BuildSpec{n, k});
        switch (outcome.status) {
            case BuildStatus::Built:
                break;
            case BuildStatus::NeedsFixture:
                P.kv("status", "needs-fixture");
                P.kv("detail", outcome.detail);
                return kExitFixture;
            case BuildStatus::Nonexistent:
                P.kv("status", "nonexistent");
                P.kv("detail", outcome.detail);
                return kExitFail;
            case BuildStatus::OutOfRange:
                throw UsageError(outcome.detail);
        }
        H = std::move(*outcome.array);
        construction = outcome.construction;
        adjustments = std::move(outcome.adjustments);
        source = "formula";
        cls = outcome.report->classification;
    }

    std::ostringstream manifest;
    manifest << "#fmt 1\n";
    manifest << "n " << n << '\n';
    manifest << "k " << k << '\n';
    manifest << "construction " << construction << '\n';
    for (const std::string& a : adjustments) manifest << "adjustment " << a << '\n';
    manifest << "classification " << to_string(cls) << '\n';
    manifest << "source " << source << '\n';

    std::ostringstream grid;
    write_grid(grid, *H, static_cast<std::size_t>(k));

    P.kv("status", "built");
    P.kv("construction", construction);
    for (const std::string& a : adjustments) P.kv("adjustment", a);
    P.kv("classification", to_string(cls));
    if (out.empty()) {
        std::cout << grid.str();
    } else {
        write_all({{out, grid.str()}, {out + ".manifest", manifest.str()}});
        P.kv("wrote", out);
        P.kv("wrote", out + ".manifest");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Printer& P, const std::string& file, const std::string& require) {
    const Classification threshold = parse_requirement(require);
    GridFile gf = load_grid(file);
    const VerificationReport rep = verify(gf.array, gf.k);

    P.kv("file", file);
    P.kv("rows", gf.array.rows());
    P.kv("cols", gf.array.cols());
    P.kv("row-fill", rep.observed_row_fill);
    P.kv("col-fill", rep.observed_col_fill);
    P.kv("support", okfail(rep.support_ok));
    P.kv("counts", okfail(rep.counts_ok));
    P.kv("zero-sums", okfail(rep.zero_sums_ok));
    P.kv("v-complete", rep.v_complete);
    P.kv("v-cocktail", rep.v_cocktail);
    for (const auto& [v, ls] : rep.simple_mod) {
        if (P.structured) {
            P.kv("simple-mod-" + std::to_string(v) + "-rows", fraction(ls.rows));
            P.kv("simple-mod-" + std::to_string(v) + "-cols", fraction(ls.cols));
        } else {
            P.kv("simple mod " + std::to_string(v),
                 "rows " + fraction(ls.rows) + ", cols " + fraction(ls.cols));
        }
    }
    P.kv("classification", to_string(rep.classification));

    const bool pass = static_cast<int>(rep.classification) >= static_cast<int>(threshold);
    P.kv("requirement", std::string(to_string(threshold)) + (pass ? " satisfied" : " not-met"));
    return pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// decompose / orthogonal

struct DerivedDecomposition {
    Entry v = 0;
    BaseCycleSet rows{GraphKind::Complete, 0, {}};
    BaseCycleSet cols{GraphKind::Complete, 0, {}};
};

DerivedDecomposition derive(const PartialArray& H, const VerificationReport& rep,
                            GraphKind kind) {
    const bool star = rep.classification == Classification::GloballySimpleStar;
    const bool gs = star || rep.classification == Classification::GloballySimple;
    if (kind == GraphKind::Complete && !gs)
        throw CertificationError(
            "classification is " + std::string(to_string(rep.classification)) +
            "; the complete-graph decomposition needs globally-simple or better");
    if (kind == GraphKind::CocktailParty && !star)
        throw CertificationError(
            "classification is " + std::string(to_string(rep.classification)) +
            "; the cocktail-party decomposition needs globally-simple-star");

    DerivedDecomposition d;
    d.v = kind == GraphKind::Complete ? rep.v_complete : rep.v_cocktail;
    d.rows = BaseCycleSet{kind, d.v, {}};
    d.cols = BaseCycleSet{kind, d.v, {}};
    for (std::size_t r = 0; r < H.rows(); ++r)
        d.rows.cycles.push_back(line_to_cycle(row_line(H, r), d.v));
    for (std::size_t c = 0; c < H.cols(); ++c)
        d.cols.cycles.push_back(line_to_cycle(col_line(H, c), d.v));
    return d;
}

int cmd_decompose(const Printer& P, const std::string& file, const std::string& kind_name,
                  const std::string& out) {
    const GraphKind kind = parse_kind(kind_name);
    GridFile gf = load_grid(file);
    const VerificationReport rep = verify(gf.array, gf.k);
    const DerivedDecomposition d = derive(gf.array, rep, kind);

    const BaseCycleCertificate cert_rows = certify_base_cycles(d.rows);
    const BaseCycleCertificate cert_cols = certify_base_cycles(d.cols);
    const OrthogonalityReport orth = certify_orthogonal(d.rows, d.cols);

    P.kv("kind", to_string(kind));
    P.kv("v", d.v);
    P.kv("row-cycles", d.rows.cycles.size());
    P.kv("col-cycles", d.cols.cycles.size());
    P.kv("base-cycles-rows", okfail(cert_rows.ok));
    P.kv("base-cycles-cols", okfail(cert_cols.ok));
    P.kv("orthogonal", okfail(orth.ok));
    if (orth.violation) print_violation(P, *orth.violation);

    const bool all_ok = cert_rows.ok && cert_cols.ok && orth.ok;
    if (!all_ok) return kExitFail;

    std::ostringstream rows_text, cols_text, cert_text;
    write_cycles(rows_text, d.rows);
    write_cycles(cols_text, d.cols);
    cert_text << "#fmt 1\n";
    cert_text << "kind " << to_string(kind) << '\n';
    cert_text << "v " << d.v << '\n';
    cert_text << "row-cycles " << d.rows.cycles.size() << '\n';
    cert_text << "col-cycles " << d.cols.cycles.size() << '\n';
    cert_text << "base-cycles-rows " << okfail(cert_rows.ok) << '\n';
    cert_text << "base-cycles-cols " << okfail(cert_cols.ok) << '\n';
    cert_text << "orthogonal " << okfail(orth.ok) << '\n';

    if (out.empty()) {
        std::cout << rows_text.str() << cols_text.str();
    } else {
        write_all({{out + ".rows", rows_text.str()},
                   {out + ".cols", cols_text.str()},
                   {out + ".cert", cert_text.str()}});
        P.kv("wrote", out + ".rows");
        P.kv("wrote", out + ".cols");
        P.kv("wrote", out + ".cert");
    }
    return kExitOk;
}

int cmd_orthogonal(const Printer& P, const std::string& file) {
    GridFile gf = load_grid(file);
    const VerificationReport rep = verify(gf.array, gf.k);
    const bool star = rep.classification == Classification::GloballySimpleStar;
    const bool gs = star || rep.classification == Classification::GloballySimple;
    if (!gs)
        throw CertificationError("classification is " +
                                 std::string(to_string(rep.classification)) +
                                 "; no certified decomposition to test");

    P.kv("file", file);
    P.kv("classification", to_string(rep.classification));
    bool all_ok = true;
    std::vector<GraphKind> kinds{GraphKind::Complete};
    if (star) kinds.push_back(GraphKind::CocktailParty);
    for (GraphKind kind : kinds) {
        const DerivedDecomposition d = derive(gf.array, rep, kind);
        const OrthogonalityReport orth = certify_orthogonal(d.rows, d.cols);
        P.kv("orthogonal-mod-" + std::to_string(d.v), okfail(orth.ok));
        if (orth.violation) print_violation(P, *orth.violation);
        all_ok = all_ok && orth.ok;
    }
    if (!star)
        P.kv("orthogonal-mod-" + std::to_string(rep.v_cocktail),
             P.structured ? "skipped" : "skipped (needs globally-simple-star)");
    return all_ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// biembed

int cmd_biembed(const Printer& P, const std::string& file, bool show_cycle) {
    GridFile gf = load_grid(file);
    const BiembedReport rep = certify_biembedding(gf.array, gf.k);

    P.kv("file", file);
    P.kv("heffter", okfail(rep.heffter));
    P.kv("cyclically-diagonal", okfail(rep.diagonal));
    if (rep.profile) {
        P.kv("diagonals", rep.profile->k);
        P.kv("start-diagonal", rep.profile->r);
    }
    P.kv("method", rep.method.empty() ? "none" : rep.method);
    P.kv("compatible", okfail(rep.compatible));
    if (rep.composition) {
        std::ostringstream lens;
        for (std::size_t i = 0; i < rep.composition->cycle_lengths.size(); ++i)
            lens << (i ? " " : "") << rep.composition->cycle_lengths[i];
        P.kv("cycle-lengths", lens.str());
        if (show_cycle && rep.composition->is_single_cycle) {
            std::ostringstream cyc;
            const auto& cells = rep.composition->cycles.front();
            for (std::size_t i = 0; i < cells.size(); ++i)
                cyc << (i ? " " : "") << cells[i].row << ',' << cells[i].col;
            P.kv("cycle", cyc.str());
        }
    }
    for (const BiembedModulusReport* m : {&rep.complete, &rep.cocktail}) {
        const std::string tag = std::to_string(m->v);
        if (P.structured) {
            P.kv("mod-" + tag + "-rows-simple", okfail(m->rows_simple));
            P.kv("mod-" + tag + "-cols-simple", okfail(m->cols_simple));
            P.kv("mod-" + tag + "-ok", okfail(m->ok));
        } else {
            P.kv("mod " + tag, std::string("rows-simple ") + okfail(m->rows_simple) +
                                   ", cols-simple " + okfail(m->cols_simple) + " -> " +
                                   okfail(m->ok));
        }
    }
    return rep.complete.ok && rep.cocktail.ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// search / simple-ordering

int cmd_search(const Printer& P, std::size_t m, std::size_t n, std::size_t h, std::size_t k,
               const SearchBudget& budget) {
    HeffterSearchResult res;
    try {
        res = find_heffter(m, n, h, k, budget);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    P.kv("status", to_string(res.status));
    P.kv("nodes", res.nodes);
    if (res.array) write_grid(std::cout, *res.array, k);
    return res.status == SearchStatus::Unknown ? kExitFail : kExitOk;
}

std::vector<Entry> parse_values(const std::string& csv) {
    std::vector<Entry> values;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const std::size_t a = tok.find_first_not_of(" \t");
        const std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw UsageError("empty entry in --values");
        tok = tok.substr(a, b - a + 1);
        std::size_t used = 0;
        Entry value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw UsageError("bad entry \"" + tok + "\" in --values");
        values.push_back(value);
    }
    if (values.empty()) throw UsageError("--values must list at least one integer");
    return values;
}

int cmd_simple_ordering(const Printer& P, const std::string& csv, Entry v,
                        const SearchBudget& budget) {
    const std::vector<Entry> values = parse_values(csv);
    OrderingSearchResult res;
    try {
        res = find_simple_ordering(values, v, budget);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    P.kv("status", to_string(res.status));
    P.kv("nodes", res.nodes);
    P.kv("zero-sum", okfail(res.zero_sum));
    P.kv("no-negation-pair", okfail(res.no_pair));
    P.kv("no-zero-entry", okfail(res.no_zero));
    if (res.ordering) {
        std::ostringstream w;
        for (std::size_t i = 0; i < res.ordering->size(); ++i)
            w << (i ? " " : "") << (*res.ordering)[i];
        P.kv("ordering", w.str());
    }
    return res.status == SearchStatus::Unknown ? kExitFail : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heffter array toolkit: construct, certify, and decompose"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format, "Output format: plain or structured")
        ->check(CLI::IsMember({"plain", "structured"}));

    Entry c_n = 0, c_k = 0;
    std::string c_out, c_fixture;
    auto* construct =
        app.add_subcommand("construct", "Build an n x n array with k entries per line");
    construct->add_option("n", c_n, "Array size")->required();
    construct->add_option("k", c_k, "Entries per row and per column")->required();
    construct->add_option("--out", c_out, "Write the grid here plus a .manifest next to it");
    construct->add_option("--fixture", c_fixture,
                          "Grid file supplying an array that has no row formula; it is "
                          "verified before use");
    construct->fallthrough();

    std::string v_file, v_require = "heffter";
    auto* verify_cmd = app.add_subcommand("verify", "Check every defining property of a grid");
    verify_cmd->add_option("file", v_file, "Grid file")->required();
    verify_cmd->add_option("--require", v_require,
                           "Classification needed for exit 0: heffter, globally-simple, star");
    verify_cmd->fallthrough();

    std::string d_file, d_kind, d_out;
    auto* decompose =
        app.add_subcommand("decompose", "Derive and certify row/column base cycles");
    decompose->add_option("file", d_file, "Grid file")->required();
    decompose->add_option("--kind", d_kind, "complete or cocktail")->required();
    decompose->add_option("--out", d_out, "Write BASE.rows, BASE.cols, BASE.cert");
    decompose->fallthrough();

    std::string o_file;
    auto* orthogonal = app.add_subcommand(
        "orthogonal", "Certify row-vs-column orthogonality at every certified modulus");
    orthogonal->add_option("file", o_file, "Grid file")->required();
    orthogonal->fallthrough();

    std::string b_file;
    bool b_show_cycle = false;
    auto* biembed = app.add_subcommand(
        "biembed", "Certify diagonal structure, compatible orderings, and simplicity");
    biembed->add_option("file", b_file, "Grid file")->required();
    biembed->add_flag("--show-cycle", b_show_cycle, "Print the composition cycle's cells");
    biembed->fallthrough();

    std::size_t s_m = 0, s_n = 0, s_h = 0, s_k = 0;
    SearchBudget s_budget;
    auto* search = app.add_subcommand(
        "search", "Exhaustive search for an m x n array with h per row, k per column");
    search->set_help_flag("--help", "Print this help message and exit");
    search->add_option("m", s_m, "Rows")->required();
    search->add_option("n", s_n, "Columns")->required();
    search->add_option("h", s_h, "Filled cells per row")->required();
    search->add_option("k", s_k, "Filled cells per column")->required();
    search->add_option("--nodes", s_budget.node_limit, "Node budget");
    search->add_option("--time", s_budget.time_limit_seconds, "Time budget in seconds");
    search->fallthrough();

    std::string so_values;
    Entry so_v = 0;
    SearchBudget so_budget;
    auto* simple = app.add_subcommand(
        "simple-ordering", "Search for an ordering with pairwise distinct partial sums mod v");
    simple->add_option("v", so_v, "Modulus")->required();
    simple->add_option("--values", so_values, "Comma-separated integers, e.g. \"4,-18,9,5\"")
        ->required();
    simple->add_option("--nodes", so_budget.node_limit, "Node budget");
    simple->add_option("--time", so_budget.time_limit_seconds, "Time budget in seconds");
    simple->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Printer P{format == "structured"};
    try {
        if (construct->parsed()) return cmd_construct(P, c_n, c_k, c_out, c_fixture);
        if (verify_cmd->parsed()) return cmd_verify(P, v_file, v_require);
        if (decompose->parsed()) return cmd_decompose(P, d_file, d_kind, d_out);
        if (orthogonal->parsed()) return cmd_orthogonal(P, o_file);
        if (biembed->parsed()) return cmd_biembed(P, b_file, b_show_cycle);
        if (search->parsed()) return cmd_search(P, s_m, s_n, s_h, s_k, s_budget);
        if (simple->parsed()) return cmd_simple_ordering(P, so_values, so_v, so_budget);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NeedsFixtureError& e) {
        std::cerr << "needs-fixture: " << e.what() << '\n';
        return kExitFixture;
    } catch (const CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return kExitFail;
    } catch (const NotSimpleError& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return kExitFail;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
