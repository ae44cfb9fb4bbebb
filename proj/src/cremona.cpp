#include "nsk/cremona.hpp"

#include <openssl/evp.h>

#include <map>
#include <sstream>

namespace nsk {

std::vector<std::tuple<int, int, int64_t>> LabeledGraph::edges() const {
    std::vector<std::tuple<int, int, int64_t>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (prod[i][j] != 0) out.emplace_back(i, j, prod[i][j]);
    return out;
}

std::vector<std::pair<int, int>> LabeledGraph::infinity_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        if (conj[i] >= i) out.emplace_back(i, conj[i]);
    return out;
}

LabeledGraph cremona_invariant(const std::vector<Vec>& E, const std::vector<Vec>& B, const std::vector<Vec>& extra,
                               const RealStructure& sigma, const Lattice& L) {
    LabeledGraph g;
    for (const auto& c : E) {
        g.classes.push_back(c);
        g.kinds.push_back(VertexKind::Minus1);
    }
    for (const auto& c : B) {
        g.classes.push_back(c);
        g.kinds.push_back(VertexKind::Minus2);
    }
    for (const auto& c : extra) {
        g.classes.push_back(c);
        g.kinds.push_back(VertexKind::Zero);
    }
    std::map<Vec, int> index;
    for (int i = 0; i < g.size(); ++i) index[g.classes[i]] = i;
    g.conj.resize(g.size());
    for (int i = 0; i < g.size(); ++i) {
        auto it = index.find(sigma(g.classes[i]));
        if (it == index.end() || g.kinds[it->second] != g.kinds[i])
            throw DomainError("invariant violation: sigma does not preserve the vertex set (" +
                              format_class(g.classes[i], L) + ")");
        g.conj[i] = it->second;
    }
    g.prod.assign(g.size(), std::vector<int64_t>(g.size(), 0));
    for (int i = 0; i < g.size(); ++i)
        for (int j = i; j < g.size(); ++j) g.prod[i][j] = g.prod[j][i] = inner_product(g.classes[i], g.classes[j], L);
    return g;
}

LabeledGraph cremona_invariant(const std::vector<Vec>& E, const std::vector<Vec>& B, const RealStructure& sigma,
                               const Lattice& L) {
    return cremona_invariant(E, B, {}, sigma, L);
}

CodeGraph code_graph(const LabeledGraph& g) {
    int n = g.size();
    CodeGraph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j) = int32_t(2 * g.prod[i][j] + (g.conj[i] == j ? 1 : 0));
    return c;
}

std::string Certificate::hex() const {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (unsigned int i = 0; i < len; ++i) {
        s += digits[md[i] >> 4];
        s += digits[md[i] & 15];
    }
    return s;
}

CanonicalResult canonicalize(const LabeledGraph& g) {
    CanonicalResult r;
    int n = g.size();
    // length prefix, then the upper triangle of the canonical code matrix row by row
    r.certificate.bytes.push_back(char((n >> 8) & 0xff));
    r.certificate.bytes.push_back(char(n & 0xff));
    if (n == 0) return r;
    auto cf = canonical_form(code_graph(g));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int32_t v = cf.form[size_t(i) * n + j];
            if (v < -128 || v > 127) throw DomainError("certificate code out of range");
            r.certificate.bytes.push_back(char(int8_t(v)));
        }
    r.order = std::move(cf.order);
    r.generators = std::move(cf.generators);
    return r;
}

Certificate canonical_certificate(const LabeledGraph& g) { return canonicalize(g).certificate; }

bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
    return g.size() == h.size() && canonical_certificate(g) == canonical_certificate(h);
}

std::string to_dot(const LabeledGraph& g, const Lattice& L, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int i = 0; i < g.size(); ++i) {
        const char* shape = g.kinds[i] == VertexKind::Minus1 ? "circle" : g.kinds[i] == VertexKind::Minus2 ? "square" : "diamond";
        os << "  v" << i << " [shape=" << shape << ", label=\"" << format_class(g.classes[i], L) << "\", self=\""
           << g.prod[i][i] << "\"];\n";
    }
    for (auto [i, j, p] : g.edges()) {
        os << "  v" << i << " -- v" << j << " [label=\"" << p << "\"";
        if (p < 0) os << ", style=dashed, color=red";
        os << "];\n";
    }
    for (auto [i, j] : g.infinity_edges()) {
        if (i == j) continue;
        os << "  v" << i << " -- v" << j << " [label=\"inf\", style=dotted, color=blue];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nsk
