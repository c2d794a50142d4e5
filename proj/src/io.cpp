#include "lyu/io.hpp"

#include <bit>
#include <cctype>
#include <set>
#include <sstream>

namespace lyu::io {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask, int n) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) v.push_back(i + 1);
    return v;
}

// right-aligned cell grid with row labels; "." for structural zeros
std::string render_grid(const std::string& corner, const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_w = corner.size();
    for (auto& l : row_labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> w(col_labels.size());
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
        w[c] = col_labels[c].size();
        for (auto& row : cells) w[c] = std::max(w[c], row[c].size());
    }
    std::ostringstream os;
    auto pad = [&os](const std::string& s, std::size_t width) {
        os << std::string(width - s.size(), ' ') << s;
    };
    pad(corner, label_w);
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
        os << "  ";
        pad(col_labels[c], w[c]);
    }
    os << "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        pad(row_labels[r], label_w);
        for (std::size_t c = 0; c < col_labels.size(); ++c) {
            os << "  ";
            pad(cells[r][c], w[c]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

json complex_to_json(const SimplicialComplex& delta) {
    json j;
    j["n"] = delta.nvertices();
    json facets = json::array();
    if (delta.is_void()) {
        j["void"] = true;
    } else {
        for (auto f : delta.facets()) facets.push_back(mask_to_vertices(f, delta.nvertices()));
    }
    j["facets"] = std::move(facets);
    return j;
}

SimplicialComplex complex_from_json(const json& j, bool* normalized_warning) {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw InputError("complex JSON needs \"n\" and \"facets\"");
    int n = j.at("n").get<int>();
    if (j.value("void", false)) return SimplicialComplex::void_complex(n);
    std::vector<std::uint64_t> masks;
    for (auto& face : j.at("facets")) {
        std::uint64_t m = 0;
        for (auto& v : face) {
            int vi = v.get<int>();
            if (vi < 1 || vi > n) throw InputError("facet vertex out of range 1..n");
            m |= std::uint64_t(1) << (vi - 1);
        }
        masks.push_back(m);
    }
    if (masks.empty()) throw InputError("no facets; use \"void\": true for the void complex");
    return SimplicialComplex::from_facets(n, std::move(masks), normalized_warning);
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json j;
    j["n"] = ideal.nvars();
    json gens = json::array();
    if (ideal.is_zero()) {
        j["zero"] = true;
    } else {
        for (auto& g : ideal.gens()) gens.push_back(g.e);
    }
    j["gens"] = std::move(gens);
    return j;
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
        throw InputError("ideal JSON needs \"n\" and \"gens\"");
    int n = j.at("n").get<int>();
    if (n < 1) throw InputError("variable count must be positive");
    if (j.value("zero", false)) return MonomialIdeal::zero_ideal(n);
    std::vector<Monomial> gens;
    for (auto& g : j.at("gens")) {
        auto e = g.get<std::vector<int>>();
        if (static_cast<int>(e.size()) != n) throw InputError("generator exponent length != n");
        gens.emplace_back(std::move(e));
    }
    if (gens.empty()) return MonomialIdeal::zero_ideal(n);
    return MonomialIdeal::from_gens(n, std::move(gens));
}

json betti_to_json(const BettiTable& t) {
    json entries = json::array();
    for (auto& [ij, b] : t.by_ij)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    json mg = json::array();
    for (auto& [im, b] : t.by_mdeg)
        mg.push_back({{"i", im.first}, {"mdeg", im.second}, {"beta", b}});
    return json{{"entries", std::move(entries)}, {"multigraded", std::move(mg)}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    for (auto& e : j.at("multigraded"))
        t.add(e.at("i").get<int>(), Monomial(e.at("mdeg").get<std::vector<int>>()),
              e.at("beta").get<long>());
    // sanity: the coarse entries must agree with the refinement
    for (auto& e : j.at("entries"))
        if (t.beta(e.at("i").get<int>(), e.at("j").get<int>()) != e.at("beta").get<long>())
            throw InputError("Betti JSON: entries inconsistent with multigraded refinement");
    return t;
}

json nu_to_json(const NuTable& t) {
    json entries = json::array();
    for (auto& [ij, v] : t.entries)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"nu", v}});
    return json{{"l", t.l}, {"n", t.nvars}, {"entries", std::move(entries)}};
}

NuTable nu_from_json(const json& j) {
    NuTable t;
    t.l = j.at("l").get<int>();
    t.nvars = j.at("n").get<int>();
    for (auto& e : j.at("entries"))
        t.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("nu").get<long>());
    return t;
}

json lyubeznik_to_json(const LyubeznikTable& t) {
    json entries = json::array();
    for (auto& [pi, v] : t.entries)
        entries.push_back({{"p", pi.first}, {"i", pi.second}, {"lambda", v}});
    json j{{"d", t.d},
           {"char", t.characteristic.characteristic},
           {"entries", std::move(entries)}};
    if (t.radical_substituted) j["radical_substituted"] = true;
    return j;
}

LyubeznikTable lyubeznik_from_json(const json& j) {
    LyubeznikTable t;
    t.d = j.at("d").get<int>();
    t.characteristic = FieldSpec::from_characteristic(j.at("char").get<long>());
    t.radical_substituted = j.value("radical_substituted", false);
    for (auto& e : j.at("entries"))
        t.set(e.at("p").get<int>(), e.at("i").get<int>(), e.at("lambda").get<long>());
    return t;
}

json composition_report_to_json(const CompositionReport& r) {
    json mism = json::array();
    for (auto& m : r.mismatches)
        mism.push_back({{"p", m.p}, {"i", m.i}, {"expected", m.expected}, {"actual", m.actual}});
    json j{{"mode", r.mode == CompositionMode::sum_nu ? "sum-nu" : "intersection-lambda"},
           {"status", r.match ? "match" : "mismatch"},
           {"clause", r.clause},
           {"mismatches", std::move(mism)}};
    if (r.mode == CompositionMode::intersection_lambda) j["routes_agree"] = r.routes_agree;
    return j;
}

TextKind sniff_text(const std::string& text) {
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            in_comment = false;
            continue;
        }
        if (in_comment || c == '#') {
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)))
            continue;
        return TextKind::monomials;
    }
    return TextKind::facets;
}

Monomial parse_monomial(const std::string& token, int nvars) {
    Monomial m = Monomial::one(nvars);
    if (token == "1") return m;
    std::size_t pos = 0;
    while (pos < token.size()) {
        if (token[pos] == '*') ++pos;
        if (pos >= token.size() || token[pos] != 'x')
            throw InputError("bad monomial '" + token + "': expected x<index>");
        ++pos;
        std::size_t len = 0;
        int idx = std::stoi(token.substr(pos), &len);
        pos += len;
        int exp = 1;
        if (pos < token.size() && token[pos] == '^') {
            ++pos;
            exp = std::stoi(token.substr(pos), &len);
            pos += len;
        }
        if (idx < 1 || idx > nvars || exp < 0)
            throw InputError("bad monomial '" + token + "': index or exponent out of range");
        m.e[idx - 1] += exp;
    }
    return m;
}

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

}  // namespace

SimplicialComplex complex_from_text(const std::string& text, bool* normalized_warning) {
    auto lines = nonempty_lines(text);
    if (lines.empty()) throw InputError("empty facet list");
    int n = 1;
    std::vector<std::uint64_t> masks;
    for (auto& line : lines) {
        std::istringstream ls(line);
        std::uint64_t m = 0;
        int v;
        while (ls >> v) {
            if (v < 1 || v > SimplicialComplex::kMaxVertices)
                throw InputError("vertex index out of range");
            n = std::max(n, v);
            m |= std::uint64_t(1) << (v - 1);
        }
        if (!ls.eof()) throw InputError("bad facet line '" + line + "'");
        masks.push_back(m);
    }
    return SimplicialComplex::from_facets(n, std::move(masks), normalized_warning);
}

MonomialIdeal ideal_from_text(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty()) throw InputError("empty generator list");
    int n = 1;
    for (auto& line : lines) {
        std::size_t pos = 0;
        while ((pos = line.find('x', pos)) != std::string::npos) {
            ++pos;
            std::size_t len = 0;
            n = std::max(n, std::stoi(line.substr(pos), &len));
            pos += len;
        }
    }
    std::vector<Monomial> gens;
    for (auto& line : lines) gens.push_back(parse_monomial(line, n));
    return MonomialIdeal::from_gens(n, std::move(gens));
}

namespace {

template <class Lookup>
std::string strand_grid(int min_r, int max_r, int max_i, Lookup&& value) {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i <= max_i; ++i) cols.push_back(std::to_string(i));
    for (int r = min_r; r <= max_r; ++r) {
        rows.push_back(std::to_string(r) + ":");
        std::vector<std::string> row;
        for (int i = 0; i <= max_i; ++i) {
            long v = value(i, i + r);
            row.push_back(v == 0 ? "." : std::to_string(v));
        }
        cells.push_back(std::move(row));
    }
    return render_grid("", rows, cols, cells);
}

}  // namespace

std::string betti_text(const BettiTable& t) {
    if (t.by_ij.empty()) return "(empty table)\n";
    int min_r = 1 << 20, max_r = 0, max_i = 0;
    for (auto& [ij, b] : t.by_ij) {
        min_r = std::min(min_r, ij.second - ij.first);
        max_r = std::max(max_r, ij.second - ij.first);
        max_i = std::max(max_i, ij.first);
    }
    return strand_grid(min_r, max_r, max_i, [&](int i, int j) { return t.beta(i, j); });
}

std::string nu_text(const NuTable& t) {
    if (t.entries.empty()) return "(empty table)\n";
    int min_r = 1 << 20, max_r = 0, max_i = 0;
    for (auto& [ij, v] : t.entries) {
        min_r = std::min(min_r, ij.second - ij.first);
        max_r = std::max(max_r, ij.second - ij.first);
        max_i = std::max(max_i, ij.first);
    }
    return strand_grid(min_r, max_r, max_i, [&](int i, int j) { return t.nu(i, j); });
}

std::string lyubeznik_text(const LyubeznikTable& t) {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i <= t.d; ++i) cols.push_back(std::to_string(i));
    for (int p = 0; p <= t.d; ++p) {
        rows.push_back(std::to_string(p) + ":");
        std::vector<std::string> row;
        for (int i = 0; i <= t.d; ++i)
            row.push_back(i < p ? "" : std::to_string(t.lambda(p, i)));
        cells.push_back(std::move(row));
    }
    return render_grid("", rows, cols, cells);
}

std::string betti_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "i,j,beta\n";
    for (auto& [ij, b] : t.by_ij) os << ij.first << "," << ij.second << "," << b << "\n";
    return os.str();
}

std::string nu_csv(const NuTable& t) {
    std::ostringstream os;
    os << "i,j,nu\n";
    for (auto& [ij, v] : t.entries) os << ij.first << "," << ij.second << "," << v << "\n";
    return os.str();
}

std::string lyubeznik_csv(const LyubeznikTable& t) {
    std::ostringstream os;
    os << "p,i,lambda\n";
    for (auto& [pi, v] : t.entries) os << pi.first << "," << pi.second << "," << v << "\n";
    return os.str();
}

}  // namespace lyu::io
