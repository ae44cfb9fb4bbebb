#include "nsk/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;

namespace nsk {

const char* const kVersion = "0.3.0";

nlohmann::json matrix_json(const IntMatrix& m) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json classes_json(const std::vector<Vec>& v, const Lattice& L) {
    auto a = nlohmann::json::array();
    for (const auto& c : v) a.push_back(format_class(c, L));
    return a;
}

std::string to_hex(const std::string& bytes) {
    static const char* d = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        s += d[c >> 4];
        s += d[c & 15];
    }
    return s;
}

std::string from_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd hex length");
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::string out;
    for (size_t i = 0; i < hex.size(); i += 2) out.push_back(char(val(hex[i]) * 16 + val(hex[i + 1])));
    return out;
}

nlohmann::json to_json(const LatticeClassRecord& r, bool with_bytes) {
    Lattice L = r.lattice();
    nlohmann::json j;
    j["degree"] = r.degree;
    j["index"] = r.index;
    j["basis"] = r.kind == BasisKind::Type1 ? "type1" : "type2";
    j["rank"] = r.rank;
    j["dynkin_A"] = r.name_A;
    j["dynkin_B"] = r.name_B;
    j["A_classes"] = classes_json(r.A_classes, L);
    j["B_classes"] = classes_json(r.B_classes, L);
    j["sigma"] = matrix_json(r.sigma.matrix);
    j["certificate"] = r.certificate.hex();
    if (with_bytes) j["certificate_bytes"] = to_hex(r.certificate.bytes);
    j["counts"] = {{"E", r.counts.E},           {"E_star", r.counts.E_star}, {"E_real", r.counts.E_real},
                   {"R_plus", r.counts.R_plus}, {"F", r.counts.F},           {"F_star", r.counts.F_star},
                   {"F_real", r.counts.F_real}, {"G", r.counts.G}};
    j["flags"] = {{"p1p1", r.p1p1}, {"real_minimal", r.real_minimal}};
    return j;
}

LatticeClassRecord record_from_json(const nlohmann::json& j) {
    LatticeClassRecord r;
    r.degree = j.at("degree");
    r.index = j.at("index");
    r.kind = j.at("basis") == "type1" ? BasisKind::Type1 : BasisKind::Type2;
    r.rank = j.at("rank");
    Lattice L = r.lattice();
    r.name_A = j.at("dynkin_A");
    r.name_B = j.at("dynkin_B");
    for (const auto& s : j.at("A_classes")) r.A_classes.push_back(parse_class(s, L));
    for (const auto& s : j.at("B_classes")) r.B_classes.push_back(parse_class(s, L));
    r.dynkin_A = dynkin_type(r.A_classes, L);
    r.dynkin_B = dynkin_type(r.B_classes, L);
    IntMatrix m(L.rank);
    for (int a = 0; a < L.rank; ++a)
        for (int b = 0; b < L.rank; ++b) m(a, b) = j.at("sigma").at(a).at(b);
    r.sigma.matrix = m;
    r.certificate.bytes = from_hex(j.at("certificate_bytes"));
    const auto& c = j.at("counts");
    r.counts = {c.at("E"), c.at("E_star"), c.at("E_real"), c.at("R_plus"),
                c.at("F"), c.at("F_star"), c.at("F_real"), c.at("G")};
    r.p1p1 = j.at("flags").at("p1p1");
    r.real_minimal = j.at("flags").at("real_minimal");
    return r;
}

static const char* yn(bool b) { return b ? "y" : "n"; }

std::string records_csv(const std::vector<LatticeClassRecord>& recs) {
    std::ostringstream os;
    os << "index,deg,D(A),D(B),#E,#E*,#E_R,#F*,#F_R,#G,P1xP1,minimal\n";
    for (const auto& r : recs)
        os << r.index << ',' << r.degree << ',' << r.name_A << ',' << r.name_B << ',' << r.counts.E << ','
           << r.counts.E_star << ',' << r.counts.E_real << ',' << r.counts.F_star << ',' << r.counts.F_real << ','
           << r.counts.G << ',' << yn(r.p1p1) << ',' << yn(r.real_minimal) << '\n';
    return os.str();
}

std::string records_markdown(const std::vector<LatticeClassRecord>& recs) {
    std::ostringstream os;
    os << "| index | deg | D(A) | D(B) | #E | #E* | #E_R | #F* | #F_R | #G | P1xP1 | minimal |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : recs)
        os << "| " << r.index << " | " << r.degree << " | " << r.name_A << " | " << r.name_B << " | " << r.counts.E
           << " | " << r.counts.E_star << " | " << r.counts.E_real << " | " << r.counts.F_star << " | "
           << r.counts.F_real << " | " << r.counts.G << " | " << yn(r.p1p1) << " | " << yn(r.real_minimal) << " |\n";
    return os.str();
}

std::string cache_directory() {
    if (const char* d = std::getenv("NSK_CACHE"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/nsk";
    if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/nsk";
    return (fs::temp_directory_path() / "nsk").string();
}

static fs::path cache_file(int degree, Scope scope) {
    return fs::path(cache_directory()) /
           ("classify-" + std::string(kVersion) + "-d" + std::to_string(degree) + "-" + to_string(scope) + ".json");
}

std::optional<std::vector<LatticeClassRecord>> load_cached_classification(int degree, Scope scope) {
    try {
        std::ifstream in(cache_file(degree, scope));
        if (!in) return std::nullopt;
        auto j = nlohmann::json::parse(in);
        if (j.at("version") != kVersion) return std::nullopt;
        std::vector<LatticeClassRecord> out;
        for (const auto& r : j.at("records")) out.push_back(record_from_json(r));
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void save_cached_classification(int degree, Scope scope, const std::vector<LatticeClassRecord>& recs) {
    try {
        fs::path target = cache_file(degree, scope);
        fs::create_directories(target.parent_path());
        nlohmann::json j;
        j["version"] = kVersion;
        j["degree"] = degree;
        j["scope"] = to_string(scope);
        j["records"] = nlohmann::json::array();
        for (const auto& r : recs) j["records"].push_back(to_json(r, true));
        fs::path tmp = target;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << j.dump();
            if (!out) throw std::runtime_error("write failed");
        }
        fs::rename(tmp, target);
    } catch (const std::exception&) {
        // the cache is advisory
    }
}

}  // namespace nsk
