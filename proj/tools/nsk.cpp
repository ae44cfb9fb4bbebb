// nsk: classification of Neron-Severi lattices of real weak del Pezzo surfaces.
#include "nsk/checks.hpp"
#include "nsk/families.hpp"
#include "nsk/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nsk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    int degree = 0;
    std::string scope = "full";
    int index = -1;
    std::string certificate;
    std::string emit;
    std::string out;
    bool no_cache = false;
    int jobs = 1;
    // adjoint
    std::string example, basis = "type1", h, sigma, B;
    int r = -1;
    // bases
    std::string seed;
    // check
    int min_degree = 3;
    int shuffles = 100;
    bool cremona = false;
};

void emit(const Args& a, const std::string& text) {
    if (a.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(a.out);
    if (!f) throw DomainError("cannot write " + a.out);
    f << text;
}

ClassifyOptions classify_options(const Args& a) {
    ClassifyOptions o;
    o.jobs = a.jobs;
    o.use_cache = !a.no_cache;
    return o;
}

std::vector<LatticeClassRecord> records(const Args& a) {
    if (a.degree < 1 || a.degree > 9) throw UsageError("--degree must be in 1..9");
    Scope s;
    try {
        s = parse_scope(a.scope);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return classify_degree(a.degree, s, classify_options(a));
}

LatticeClassRecord pick(const Args& a) {
    auto recs = records(a);
    if (!a.certificate.empty()) {
        std::vector<const LatticeClassRecord*> hit;
        for (const auto& r : recs)
            if (r.certificate.hex().rfind(a.certificate, 0) == 0) hit.push_back(&r);
        if (hit.empty()) throw DomainError("no record with certificate prefix " + a.certificate);
        if (hit.size() > 1) throw DomainError("certificate prefix " + a.certificate + " is ambiguous");
        return *hit[0];
    }
    if (a.index < 0) throw UsageError("--index or --certificate is required");
    if (a.index >= int(recs.size()))
        throw DomainError("degree " + std::to_string(a.degree) + " has " + std::to_string(recs.size()) + " records");
    return recs[a.index];
}

std::vector<Vec> parse_list(const std::string& s, const Lattice& L, char sep) {
    std::vector<Vec> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_class(item, L));
    return out;
}

std::string table(const std::vector<LatticeClassRecord>& recs, const std::string& fmt) {
    if (fmt == "csv") return records_csv(recs);
    if (fmt == "md") return records_markdown(recs);
    if (fmt == "json" || fmt.empty()) {
        auto j = nlohmann::json::array();
        for (const auto& r : recs) j.push_back(to_json(r));
        return j.dump(2) + "\n";
    }
    throw UsageError("--emit must be json, csv or md here");
}

int run_classify(const Args& a) {
    emit(a, table(records(a), a.emit));
    return 0;
}

int run_row(const Args& a) {
    auto rec = pick(a);
    if (a.emit == "dot") {
        Lattice L = rec.lattice();
        auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
        emit(a, to_dot(cremona_invariant(sets.E, rec.B_classes, rec.sigma, L), L,
                       "d" + std::to_string(rec.degree) + "_" + std::to_string(rec.index)));
        return 0;
    }
    emit(a, table({rec}, a.emit));
    return 0;
}

int run_graph(const Args& a) {
    auto rec = pick(a);
    Lattice L = rec.lattice();
    std::string name = "d" + std::to_string(rec.degree) + "_" + std::to_string(rec.index);
    if (a.cremona) {
        auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
        auto g = cremona_invariant(sets.E, rec.B_classes, rec.sigma, L);
        if (a.emit == "json") throw UsageError("the Cremona invariant is exported as dot only");
        emit(a, to_dot(g, L, name));
        return 0;
    }
    auto g = simple_family_graph(rec);
    if (a.emit == "json")
        emit(a, to_json(g, L).dump(2) + "\n");
    else if (a.emit.empty() || a.emit == "dot")
        emit(a, to_dot(g, L, name));
    else
        throw UsageError("--emit must be dot or json here");
    return 0;
}

int run_hex(const Args& a) {
    auto rec = pick(a);
    Lattice L = rec.lattice();
    auto g = simple_family_graph(rec);
    auto t = hexagonal_triples(rec);
    nlohmann::json j;
    j["degree"] = rec.degree;
    j["index"] = rec.index;
    j["triples"] = triples_json(g, t, L);
    emit(a, j.dump(2) + "\n");
    return 0;
}

int run_adjoint(const Args& a) {
    AdjointChain ch;
    if (!a.example.empty()) {
        bool found = false;
        for (auto& ex : chain_examples())
            if (ex.name == a.example) {
                ch = ex.chain;
                found = true;
            }
        if (!found) throw UsageError("--example must be plane8, plane9 or quadric5");
    } else {
        if (a.r < 0 || a.h.empty()) throw UsageError("adjoint needs --example, or --r and --hyperplane");
        Lattice L;
        if (a.basis == "type1")
            L = make_type1_lattice(a.r);
        else if (a.basis == "type2")
            L = make_lattice(a.r, BasisKind::Type2, 1);
        else
            throw UsageError("--basis must be type1 or type2");
        RealStructure sigma = identity_structure(L);
        if (!a.sigma.empty()) {
            auto im = parse_list(a.sigma, L, ';');
            if (int(im.size()) != L.rank) throw UsageError("--sigma needs one image per basis vector");
            sigma = validate_involution(matrix_from_images(im), L);
        }
        ch = adjoint_chain(parse_class(a.h, L), L, sigma, parse_list(a.B, L, ','));
    }
    auto mf = minimal_families_via_chain(ch);
    auto g = chain_family_graph(ch, mf);
    if (a.emit == "dot") {
        emit(a, to_dot(g, ch.L, a.example.empty() ? "chain" : a.example));
        return 0;
    }
    nlohmann::json j;
    j["chain"] = to_json(ch);
    j["families"] = to_json(mf, ch.L);
    j["graph"] = to_json(g, ch.L);
    j["triples"] = triples_json(g, hexagonal_triples(g), ch.L);
    emit(a, j.dump(2) + "\n");
    return 0;
}

int run_bases(const Args& a) {
    auto rec = pick(a);
    Lattice L = rec.lattice();
    if (a.seed.empty()) throw UsageError("bases needs --seed");
    auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
    auto out = algo_bases(parse_list(a.seed, L, ','), sets.E, rec.B_classes, rec.sigma, L);
    auto j = nlohmann::json::array();
    for (const auto& b : out) j.push_back(classes_json(b, L));
    emit(a, j.dump(2) + "\n");
    return 0;
}

int run_check(const Args& a) {
    CheckOptions o;
    o.min_degree = a.min_degree;
    o.shuffles = a.shuffles;
    o.jobs = a.jobs;
    o.use_cache = !a.no_cache;
    std::ostringstream os;
    bool all = true;
    for (const auto& r : run_property_suite(o)) {
        os << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        os << "\n";
        all = all && r.pass;
    }
    emit(a, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neron-Severi lattices of real weak del Pezzo surfaces"};
    app.require_subcommand(1);
    Args a;

    auto row_opts = [&](CLI::App* c) {
        c->add_option("--degree", a.degree, "degree k^2 (1..9)")->required();
        c->add_option("--scope", a.scope, "full, trivial-sigma or del-pezzo");
        c->add_option("--index", a.index, "row index within the degree");
        c->add_option("--certificate", a.certificate, "prefix of the certificate digest");
        c->add_flag("--no-cache", a.no_cache, "recompute instead of reading the cache");
        c->add_option("--jobs", a.jobs, "worker threads");
    };
    auto out_opts = [&](CLI::App* c, const std::string& formats) {
        c->add_option("--emit,--format", a.emit, formats);
        c->add_option("--out", a.out, "output file (default stdout)");
    };

    auto* classify = app.add_subcommand("classify", "classify the lattices of one degree");
    classify->add_option("--degree", a.degree, "degree k^2 (1..9)")->required();
    classify->add_option("--scope", a.scope, "full, trivial-sigma or del-pezzo");
    classify->add_flag("--no-cache", a.no_cache, "recompute instead of reading the cache");
    classify->add_option("--jobs", a.jobs, "worker threads");
    out_opts(classify, "json, csv or md");

    auto* row = app.add_subcommand("row", "one classification record");
    row_opts(row);
    out_opts(row, "json, csv, md, or dot for the Cremona invariant");

    auto* graph = app.add_subcommand("graph", "simple family graph of a record");
    row_opts(graph);
    out_opts(graph, "dot or json");
    graph->add_flag("--cremona", a.cremona, "export the Cremona invariant instead");

    auto* hex = app.add_subcommand("hex", "hexagonal triples of a record");
    row_opts(hex);
    out_opts(hex, "json");

    auto* adjoint = app.add_subcommand("adjoint", "adjoint chain and its simple families");
    adjoint->add_option("--example", a.example, "plane8, plane9 or quadric5");
    adjoint->add_option("--basis", a.basis, "type1 or type2");
    adjoint->add_option("--r", a.r, "number of exceptional basis classes");
    adjoint->add_option("--hyperplane", a.h, "hyperplane class h0, e.g. 4e0-e1-e2");
    adjoint->add_option("--sigma", a.sigma, "images of the basis vectors, separated by ';'");
    adjoint->add_option("--B", a.B, "(-2)-curves, separated by ','");
    out_opts(adjoint, "json or dot");

    auto* bases = app.add_subcommand("bases", "complete a seed to bases by (-1)-classes");
    row_opts(bases);
    bases->add_option("--seed", a.seed, "classes separated by ','")->required();
    out_opts(bases, "json");

    auto* check = app.add_subcommand("check", "run the invariant suite");
    check->add_option("--min-degree", a.min_degree, "lowest degree classified (default 3)");
    check->add_option("--shuffles", a.shuffles, "relabelings per invariant");
    check->add_flag("--no-cache", a.no_cache, "recompute instead of reading the cache");
    check->add_option("--jobs", a.jobs, "worker threads");
    check->add_option("--out", a.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classify) return run_classify(a);
        if (*row) return run_row(a);
        if (*graph) return run_graph(a);
        if (*hex) return run_hex(a);
        if (*adjoint) return run_adjoint(a);
        if (*bases) return run_bases(a);
        if (*check) return run_check(a);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
