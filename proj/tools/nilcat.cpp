// nilcat -- classification of nilpotent Lie algebras of dimension <= 6:
// catalog listing, identification of user-supplied algebras, descendant
// enumeration with orbit cross-validation, Klein orbit verification, and the
// verification scoreboard.
//
// Exit codes: 0 success; 1 verification failure; 2 unsupported field;
// 3 catalog/identification unavailable over this field (symbolic answer
// printed); 4 input not nilpotent; 5 malformed input file.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilcat/algebra_io.hpp"
#include "nilcat/verify.hpp"

using namespace nilcat;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadField = 2;
constexpr int kExitSymbolic = 3;
constexpr int kExitNotNilpotent = 4;
constexpr int kExitBadFile = 5;

int cmd_classify(const std::string& field_text, int dim, bool as_json) {
    auto spec = parse_field_spec(field_text);
    if (spec.rational) {
        QQ q;
        try {
            auto entries = list_catalog(q, dim);
            if (as_json) {
                ordered_json j;
                j["field"] = "Q";
                j["count"] = entries.size();
                ordered_json arr = ordered_json::array();
                for (const auto& e : entries) {
                    ordered_json item;
                    item["id"] = id_to_string(e.id);
                    item["dim"] = dim;
                    item["brackets"] = brackets_to_json(q, e.algebra);
                    item["parent"] = nullptr;
                    item["parameter"] = nullptr;
                    arr.push_back(std::move(item));
                }
                j["entries"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "# " << dim << "-dimensional nilpotent Lie algebras over Q: "
                          << entries.size() << "\n";
                for (const auto& e : entries) {
                    std::cout << id_to_string(e.id);
                    if (auto alias = classical_alias(e.id)) std::cout << " (" << *alias << ")";
                    std::cout << ": " << table_to_text(q, e.algebra) << "\n";
                }
            }
            return 0;
        } catch (const CatalogUnavailable& e) {
            std::cerr << "dimension-6 classification over Q has infinite parametric families; "
                         "the isomorphism types are:\n";
            for (const auto& name : e.symbolic_families) std::cerr << "  " << name << "\n";
            std::cerr << "count: " << count_formula(QQ{}).symbolic << "\n";
            return kExitSymbolic;
        }
    }
    auto f = make_gf(spec);
    if (as_json) {
        std::cout << catalog_to_json(f, spec.text, dim).dump(2) << "\n";
    } else {
        auto entries = list_catalog(f, dim);
        std::cout << "# " << dim << "-dimensional nilpotent Lie algebras over " << spec.text << ": "
                  << entries.size() << "\n";
        for (const auto& e : entries) {
            std::cout << id_to_string(e.id, &f);
            if (auto alias = classical_alias(e.id)) std::cout << " (" << *alias << ")";
            std::cout << ": " << table_to_text(f, e.algebra) << "\n";
        }
    }
    return 0;
}

int cmd_identify(const std::string& path, bool witness) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitBadFile;
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
        return kExitBadFile;
    }
    if (!j.contains("field") || !j["field"].is_string()) {
        std::cerr << "algebra file: missing \"field\"\n";
        return kExitBadFile;
    }
    FieldSpec spec;
    try {
        spec = parse_field_spec(j["field"].get<std::string>());
    } catch (const UnsupportedFieldError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadField;
    }
    try {
        if (spec.rational) {
            QQ q;
            auto L = algebra_from_json(q, j);
            auto part = identify_partial(q, L);
            std::cout << "fingerprint: " << part.fp.str() << "\n";
            std::cout << "candidates:";
            for (const auto& c : part.candidates) std::cout << " " << c;
            std::cout << "\n";
            std::cerr << "full identification requires a finite field with q <= 5\n";
            return kExitSymbolic;
        }
        auto f = make_gf(spec);
        auto L = algebra_from_json(f, j);
        if (f.q() > 5) {
            auto part = identify_partial(f, L);
            std::cout << "fingerprint: " << part.fp.str() << "\n";
            std::cout << "candidates:";
            for (const auto& c : part.candidates) std::cout << " " << c;
            std::cout << "\n";
            std::cerr << "full identification requires q <= 5\n";
            return kExitSymbolic;
        }
        Workspace ws(f);
        auto res = identify(ws, L);
        std::cout << id_to_string(res.id, &f) << "\n";
        if (witness) {
            ordered_json w;
            w["witness"] = witness_to_json(f, res.witness);
            w["target"] = algebra_to_json(f, spec.text, instantiate_id(f, res.id));
            std::cout << w.dump(2) << "\n";
        }
        return 0;
    } catch (const NotNilpotentError& e) {
        std::cerr << e.what() << "\n";
        return kExitNotNilpotent;
    } catch (const FileParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadFile;
    } catch (const UnsupportedFieldError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadField;
    }
}

int cmd_descendants(const std::string& parent_name, const std::string& field_text, int step) {
    auto fam = family_by_name(parent_name);
    if (!fam) {
        std::cerr << "unknown parent family: " << parent_name << "\n";
        return kExitBadFile;
    }
    auto spec = parse_field_spec(field_text);
    if (spec.rational) {
        std::cerr << "descendant enumeration requires a finite field\n";
        return kExitBadField;
    }
    auto f = make_gf(spec);
    Workspace ws(f);
    auto rep = descendant_table(ws, *fam, step);
    std::cout << "parent " << parent_name << " over " << spec.text << ", step " << step << "\n";
    std::cout << "catalog: " << rep.claimed.size() << " entries\n";
    for (const auto& [id, u] : rep.claimed) {
        std::cout << "  " << id_to_string(id, &f) << "  <";
        for (int i = 0; i < u.dim(); ++i) {
            if (i) std::cout << "; ";
            for (int c = 0; c < u.ambient; ++c) {
                if (c) std::cout << ",";
                std::cout << f.to_string(u.basis.at(i, c));
            }
        }
        std::cout << ">\n";
    }
    std::cout << "computed: " << rep.orbit_count << " orbits on " << rep.allowable_count
              << " allowable subspaces\n";
    const bool ok = rep.counts_match && rep.reps_match;
    std::cout << "match: " << (ok ? "OK (bijection via orbit membership)" : "MISMATCH") << "\n";
    return ok ? 0 : kExitVerifyFail;
}

int cmd_klein(const std::string& field_text) {
    auto spec = parse_field_spec(field_text);
    if (spec.rational) {
        std::cerr << "Klein verification requires a finite field\n";
        return kExitBadField;
    }
    auto f = make_gf(spec);
    auto rep = verify_klein(f);
    std::cout << rep.total_subspaces << " 2-subspaces, " << rep.orbits.size() << " orbits\n";
    for (const auto& o : rep.orbits) {
        std::cout << "  orbit size " << o.size << ", representative matched: "
                  << (o.matched >= 0 ? std::to_string(o.matched) : std::string("none")) << "\n";
    }
    std::cout << (rep.ok ? "all representatives matched bijectively" : "MISMATCH") << "\n";
    return rep.ok ? 0 : kExitVerifyFail;
}

int cmd_verify(const std::string& field_text, const std::string& level, std::uint64_t seed) {
    auto spec = parse_field_spec(field_text);
    if (spec.rational) {
        std::cerr << "verification suites require a finite field\n";
        return kExitBadField;
    }
    auto f = make_gf(spec);
    auto results = verify_field(f, level == "full", seed);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %-70s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilcat: nilpotent Lie algebras of dimension <= 6"};
    app.require_subcommand(1);
    std::uint64_t seed = 20101101;
    app.add_option("--seed", seed, "seed for randomized checks");

    std::string field = "GF(2)";
    int dim = 6;
    bool as_json = false;
    auto* classify = app.add_subcommand("classify", "list the catalog for one dimension");
    classify->add_option("--dim", dim, "dimension (1..6)")->check(CLI::Range(1, 6));
    classify->add_option("--field", field, "Q or GF(q)");
    classify->add_flag("--json", as_json, "emit the catalog export schema");

    std::string file;
    bool witness = false;
    auto* identify_cmd = app.add_subcommand("identify", "identify an algebra file");
    identify_cmd->add_option("file", file, "algebra JSON file")->required();
    identify_cmd->add_flag("--witness", witness, "print the basis-change witness");

    std::string parent;
    int step = 1;
    auto* desc = app.add_subcommand("descendants", "descendant table of a parent, cross-validated");
    desc->add_option("--parent", parent, "parent family, e.g. L5_8")->required();
    desc->add_option("--field", field, "GF(q)");
    desc->add_option("--step", step, "extension dimension");

    auto* klein = app.add_subcommand("klein", "verify the wedge-square orbit classification");
    klein->add_option("--field", field, "GF(q)");

    std::string level = "quick";
    auto* verify = app.add_subcommand("verify", "run the verification scoreboard");
    verify->add_option("--field", field, "GF(q)");
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(field, dim, as_json);
        if (identify_cmd->parsed()) return cmd_identify(file, witness);
        if (desc->parsed()) return cmd_descendants(parent, field, step);
        if (klein->parsed()) return cmd_klein(field);
        if (verify->parsed()) return cmd_verify(field, level, seed);
    } catch (const UnsupportedFieldError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadField;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadField;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFail;
    }
    return 0;
}
