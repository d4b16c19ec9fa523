// algebra_io.hpp -- the JSON file formats: algebra files ({"dim", "field",
// "brackets"}), the catalog export schema, and witness serialization.  All
// output is emitted with fixed key order and fixed entry order, so files are
// byte-stable across runs.

#pragma once

#include <nlohmann/json.hpp>

#include "nilcat/catalog.hpp"

namespace nilcat {

using ordered_json = nlohmann::ordered_json;

struct FieldSpec {
    bool rational = false;
    unsigned p = 0, k = 0; // finite case
    std::string text;      // as written, e.g. "GF(4)" or "Q"
};

inline FieldSpec parse_field_spec(const std::string& s) {
    FieldSpec spec;
    spec.text = s;
    if (s == "Q" || s == "QQ" || s == "q") {
        spec.rational = true;
        spec.text = "Q";
        return spec;
    }
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        const std::string body = s.substr(3, s.size() - 4);
        unsigned long q = 0;
        std::size_t pos = 0;
        try {
            q = std::stoul(body, &pos);
        } catch (...) {
            throw UnsupportedFieldError("cannot parse field: " + s);
        }
        if (pos != body.size() || q < 2) throw UnsupportedFieldError("cannot parse field: " + s);
        // factor q = p^k
        unsigned p = 0;
        for (unsigned d = 2; d * d <= q; ++d)
            if (q % d == 0) { p = d; break; }
        if (p == 0) p = unsigned(q);
        unsigned k = 0;
        unsigned long rest = q;
        while (rest % p == 0) { rest /= p; ++k; }
        if (rest != 1) throw UnsupportedFieldError("field size is not a prime power: " + s);
        spec.p = p;
        spec.k = k;
        spec.text = "GF(" + std::to_string(q) + ")";
        return spec;
    }
    throw UnsupportedFieldError("cannot parse field: " + s);
}

inline GF make_gf(const FieldSpec& spec) {
    if (spec.rational) throw UnsupportedFieldError("finite field required");
    return gf(spec.p, spec.k);
}

struct FileParseError : Error {
    using Error::Error;
};

template <class F>
LieAlgebra<F> algebra_from_json(const F& f, const ordered_json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw FileParseError("algebra file: missing integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 15) throw FileParseError("algebra file: dim out of range");
    std::vector<std::tuple<int, int, int, typename F::Elem>> entries;
    std::vector<std::tuple<int, int, int>> seen;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw FileParseError("algebra file: \"brackets\" must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.contains("i") || !b.contains("j") || !b.contains("k") || !b.contains("c"))
                throw FileParseError("algebra file: bracket entry needs i, j, k, c");
            const int i = b["i"].get<int>(), jj = b["j"].get<int>(), k = b["k"].get<int>();
            if (!(1 <= i && i < jj && jj <= dim && 1 <= k && k <= dim))
                throw FileParseError("algebra file: bracket indices out of range (need 1 <= i < j <= dim)");
            for (auto& [si, sj, sk] : seen)
                if (si == i && sj == jj && sk == k)
                    throw FileParseError("algebra file: duplicate bracket entry");
            seen.emplace_back(i, jj, k);
            typename F::Elem c;
            try {
                c = f.parse(b["c"].get<std::string>());
            } catch (const std::exception& e) {
                throw FileParseError(std::string("algebra file: bad coefficient: ") + e.what());
            }
            entries.push_back({i, jj, k, c});
        }
    }
    try {
        return lie_from_table_elems(f, dim, entries);
    } catch (const JacobiError& e) {
        throw FileParseError(std::string("algebra file: ") + e.what());
    }
}

template <class F>
ordered_json brackets_to_json(const F& f, const LieAlgebra<F>& L) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j)
            for (int k = 0; k < L.n; ++k) {
                auto c = L.coef(i, j, k);
                if (f.is_zero(c)) continue;
                ordered_json b;
                b["i"] = i + 1;
                b["j"] = j + 1;
                b["k"] = k + 1;
                b["c"] = f.to_string(c);
                arr.push_back(std::move(b));
            }
    return arr;
}

template <class F>
ordered_json algebra_to_json(const F& f, const std::string& field_text, const LieAlgebra<F>& L) {
    ordered_json j;
    j["dim"] = L.n;
    j["field"] = field_text;
    j["brackets"] = brackets_to_json(f, L);
    return j;
}

template <class F> std::string table_to_text(const F& f, const LieAlgebra<F>& L) {
    std::string s;
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            std::string term;
            for (int k = 0; k < L.n; ++k) {
                auto c = L.coef(i, j, k);
                if (f.is_zero(c)) continue;
                if (!term.empty()) term += "+";
                if (!f.eq(c, f.one())) term += f.to_string(c) + "*";
                term += "x" + std::to_string(k + 1);
            }
            if (term.empty()) continue;
            if (!s.empty()) s += ", ";
            s += "[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]=" + term;
        }
    return s.empty() ? "(abelian)" : s;
}

inline ordered_json witness_to_json(const GF& f, const Mat<GF>& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(f.to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// catalog export: {"field", "count", "entries": [{"id", "dim", "brackets", "parent", "parameter"}]}
inline ordered_json catalog_to_json(const GF& f, const std::string& field_text, int dim) {
    auto entries = list_catalog(f, dim);
    ordered_json j;
    j["field"] = field_text;
    j["count"] = entries.size();
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json item;
        item["id"] = id_to_string(e.id, &f);
        item["dim"] = dim;
        item["brackets"] = brackets_to_json(f, e.algebra);
        const auto& info = family_info(e.id.fam);
        if (info.parent && e.id.summands == 0)
            item["parent"] = family_info(*info.parent).name;
        else
            item["parent"] = nullptr;
        if (e.id.param)
            item["parameter"] = f.to_string(*e.id.param);
        else
            item["parameter"] = nullptr;
        arr.push_back(std::move(item));
    }
    j["entries"] = std::move(arr);
    return j;
}

} // namespace nilcat
