#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sclab/group_spec.hpp"
#include "sclab/report.hpp"
#include "sclab/subgroups.hpp"

using namespace sclab;

namespace {

struct Caps {
    int order_cap = kDefaultOrderCap;
    int degree_cap = 4;
};

Caps caps_from_env() {
    Caps c;
    if (const char* s = std::getenv("SCLAB_ORDER_CAP")) c.order_cap = std::atoi(s);
    if (const char* s = std::getenv("SCLAB_DEGREE_CAP")) c.degree_cap = std::atoi(s);
    return c;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int finish(const SuiteResult& suite, bool as_json) {
    if (as_json) std::cout << to_json(suite).dump(2) << "\n";
    return suite.all_expected() ? 0 : 1;
}

int cmd_collections(const std::string& group, int prime, const std::string& kinds_csv,
                    bool as_json, const Caps& caps) {
    GroupTable G = build_group(group, caps.order_cap);
    std::vector<Kind> kinds;
    if (kinds_csv.empty()) {
        kinds = {Kind::S, Kind::B, Kind::Ce, Kind::BCe, Kind::D,
                 Kind::I, Kind::A, Kind::Z,  Kind::E};
    } else {
        for (const auto& k : split_list(kinds_csv)) kinds.push_back(kind_from_string(k));
    }
    SuiteResult suite;
    std::vector<std::pair<Kind, Collection>> built;
    for (Kind k : kinds) {
        auto t0 = std::chrono::steady_clock::now();
        Collection C = collect(G, prime, k);
        CheckRecord rec;
        rec.check_id = "collections/" + kind_to_string(k);
        rec.inputs = json{{"group", group}, {"prime", prime}, {"kind", kind_to_string(k)}};
        rec.verdict = C.empty() ? "VACUOUS" : "PASS";
        rec.witnesses = collection_json(C);
        rec.wall_ms = ms_since(t0);
        suite.records.push_back(std::move(rec));
        if (!as_json)
            std::cout << kind_to_string(k) << ": " << C.size() << " members, "
                      << C.class_reps.size() << " classes" << (C.empty() ? "  [VACUOUS]" : "")
                      << "\n";
        built.emplace_back(k, std::move(C));
    }
    auto find = [&](Kind k) -> const Collection* {
        for (auto& [kk, c] : built)
            if (kk == k) return &c;
        return nullptr;
    };
    const std::pair<Kind, Kind> chains[] = {{Kind::D, Kind::BCe}, {Kind::BCe, Kind::Ce},
                                            {Kind::BCe, Kind::B}, {Kind::Ce, Kind::S},
                                            {Kind::B, Kind::S},   {Kind::I, Kind::S},
                                            {Kind::E, Kind::A},   {Kind::Z, Kind::A},
                                            {Kind::A, Kind::S}};
    for (auto [small, big] : chains) {
        const Collection* cs = find(small);
        const Collection* cb = find(big);
        if (!cs || !cb) continue;
        bool ok = true;
        for (int i = 0; i < cs->size(); ++i)
            if (cb->index_of(cs->members[i].members) < 0) ok = false;
        CheckRecord rec;
        rec.check_id = "inclusion/" + kind_to_string(small) + "-in-" + kind_to_string(big);
        rec.inputs = json{{"group", group}, {"prime", prime}};
        rec.verdict = ok ? "PASS" : "FAIL";
        if (!as_json && !ok)
            std::cout << "inclusion " << kind_to_string(small) << " <= " << kind_to_string(big)
                      << " FAILS\n";
        suite.records.push_back(std::move(rec));
    }
    return finish(suite, as_json);
}

int cmd_equivalence(const std::string& group, int prime, const std::string& row_s,
                    const std::string& pair_csv, const std::string& scope_s, bool as_json,
                    const std::string& expect, const Caps& caps) {
    GroupTable G = build_group(group, caps.order_cap);
    auto pair = split_list(pair_csv);
    if (pair.size() != 2) throw std::runtime_error("--pair expects two kinds, e.g. B,S");
    Row row = row_from_string(row_s);
    Scope scope = scope_from_string(scope_s);
    auto t0 = std::chrono::steady_clock::now();
    Collection C1 = collect(G, prime, kind_from_string(pair[0]));
    Collection C2 = collect(G, prime, kind_from_string(pair[1]));
    EvidenceReport rep = equivalence_evidence(C1, C2, row, scope);
    std::string verdict = verdict_of_evidence(rep);

    SuiteResult suite;
    CheckRecord rec;
    rec.check_id = "equivalence/" + pair[0] + "-" + pair[1] + "/" + row_s + "/" + scope_s;
    rec.inputs = json{{"group", group},
                      {"prime", prime},
                      {"row", row_s},
                      {"pair", pair},
                      {"scope", scope_s}};
    rec.verdict = verdict;
    rec.witnesses = to_json(rep);
    rec.wall_ms = ms_since(t0);
    if (!expect.empty() && verdict != expect) rec.verdict = "MISMATCH_UNEXPECTED";
    suite.records.push_back(rec);

    if (!as_json) {
        // mirror the table layout: three rows, the tested row carries the mark
        const char* rows3[] = {"|EO_C| :", "  |C|  :", "|EA_C| :"};
        int active = row == Row::Subgroup ? 0 : row == Row::Normalizer ? 1 : 2;
        std::cout << "         " << pair[0] << "  " << pair[1] << "   (scope " << scope_s
                  << ")\n";
        for (int r = 0; r < 3; ++r)
            std::cout << rows3[r] << "  *" << (r == active ? (rep.evidence_pass ? "====" : " =/=") : "    ")
                      << "*\n";
        std::cout << "verdict: " << verdict;
        if (!rep.evidence_pass) {
            const auto& m = rep.rows[rep.mismatch_class];
            std::cout << "  (witness class " << m.h_class_id << ", |H|=" << m.h_order << ": "
                      << m.left.summary() << " vs " << m.right.summary() << ")";
        }
        std::cout << "\n";
        for (const auto& r : rep.rows)
            std::cout << "  H class " << r.h_class_id << " |H|=" << r.h_order << "  "
                      << (r.match ? "MATCH   " : "MISMATCH") << "  " << r.left.summary()
                      << "  |  " << r.right.summary() << "\n";
    }
    return finish(suite, as_json);
}

int cmd_sharpness(const std::string& group, int prime, const std::string& kind_s,
                  const std::string& type_s, int nmax, int imax, bool as_json,
                  const std::string& expect, const Caps& caps) {
    GroupTable G = build_group(group, caps.order_cap);
    if (nmax > caps.degree_cap || imax > caps.degree_cap)
        throw std::runtime_error("degree cap exceeded (see SCLAB_DEGREE_CAP)");
    Kind kind = kind_from_string(kind_s);
    Row type = row_from_string(type_s);
    auto t0 = std::chrono::steady_clock::now();
    ResolutionCache R(G, prime, std::max(nmax, imax) + 1);
    SharpnessReport rep = sharpness_check(G, prime, kind, type, nmax, imax, R);

    SuiteResult suite;
    CheckRecord rec;
    rec.check_id = "sharpness/" + kind_s + "/" + type_s;
    rec.inputs = json{{"group", group}, {"prime", prime}, {"kind", kind_s},
                      {"type", type_s}, {"nmax", nmax},   {"imax", imax}};
    rec.verdict = to_string(rep.state);
    rec.witnesses = to_json(rep);
    rec.wall_ms = ms_since(t0);
    if (!expect.empty() && rec.verdict != expect) rec.verdict = "MISMATCH_UNEXPECTED";
    suite.records.push_back(rec);

    if (!as_json) {
        std::cout << group << " p=" << prime << " " << kind_s << " " << type_s << ": "
                  << to_string(rep.state);
        if (rep.fail_n >= 0) std::cout << " at (n=" << rep.fail_n << ", i=" << rep.fail_i << ")";
        std::cout << "\n";
        if (!rep.detail.empty()) std::cout << rep.detail << "\n";
        for (size_t n = 0; n < rep.table.size(); ++n) {
            std::cout << "  n=" << n << ": dim H^n(G)=" << rep.table[n][0]
                      << "  lim0=" << rep.table[n][1] << "  comparison rank=" << rep.table[n][2]
                      << "  lim^i=";
            for (size_t i = 3; i < rep.table[n].size(); ++i) std::cout << rep.table[n][i] << " ";
            std::cout << "\n";
        }
    }
    return finish(suite, as_json);
}

struct Battery {
    SuiteResult suite;
    bool as_json = false;
    const Caps* caps = nullptr;

    void record(const std::string& id, const json& inputs, bool pass, const json& wit,
                double ms) {
        CheckRecord r;
        r.check_id = id;
        r.inputs = inputs;
        r.verdict = pass ? "PASS" : "FAIL";
        r.witnesses = wit;
        r.wall_ms = ms;
        if (!as_json) std::cout << (pass ? "PASS " : "FAIL ") << id << "\n";
        suite.records.push_back(std::move(r));
    }
};

void battery_contractibility(Battery& B, const std::string& spec, int p,
                             const std::vector<std::pair<Kind, bool>>& expectations) {
    GroupTable G = build_group(spec, B.caps->order_cap);
    for (auto [kind, expect_contractible] : expectations) {
        auto t0 = std::chrono::steady_clock::now();
        Collection C = collect(G, p, kind);
        auto rep = contractibility(poset_of(C), p);
        bool pass = expect_contractible ? rep.status == ContractStatus::CERTIFIED
                                        : rep.status == ContractStatus::NOT_CONTRACTIBLE;
        B.record("counterexamples/" + spec + "/" + kind_to_string(kind) + "-" +
                     (expect_contractible ? "contractible" : "non-contractible"),
                 json{{"group", spec}, {"prime", p}, {"kind", kind_to_string(kind)}}, pass,
                 json{{"status", to_string(rep.status)}, {"homology", to_json(rep.homology)}},
                 ms_since(t0));
    }
}

void battery_fixed_empty(Battery& B, const GroupTable& G, const std::string& spec, int p,
                         Kind kind, const std::string& which, const Subgroup& H,
                         bool expect_empty) {
    auto t0 = std::chrono::steady_clock::now();
    Collection C = collect(G, p, kind);
    auto fp = sub_posets(C, H);
    const std::vector<int>& sel = which == "fixed"   ? fp.fixed
                                  : which == "above" ? fp.above
                                                     : fp.below_centralizer;
    bool empty = sel.empty();
    B.record("counterexamples/" + spec + "/" + kind_to_string(kind) + "-" + which + "-" +
                 (expect_empty ? "empty" : "nonempty"),
             json{{"group", spec},
                  {"prime", p},
                  {"kind", kind_to_string(kind)},
                  {"subposet", which},
                  {"H_order", H.order}},
             empty == expect_empty, json{{"size", int(sel.size())}}, ms_since(t0));
}

int cmd_counterexamples(int prime, bool as_json, const Caps& caps) {
    Battery B;
    B.as_json = as_json;
    B.caps = &caps;
    int p = prime;
    if (p != 2 && p != 3) throw std::runtime_error("battery supports --prime 2 or 3");
    bool odd = p == 3;

    // coordinates permuted, cyclic factor multiplied by a p-th root of unity
    std::string perm_spec =
        odd ? "semidirect(product(elemab:3^3,cyclic:7),cyclic:3,(1 2 3)(4 5 7)(6 9 8))"
            : "semidirect(product(elemab:2^2,cyclic:3),cyclic:2,(1 2)(3 4))";
    std::string product_spec =
        odd ? "product(cyclic:3,semidirect(cyclic:7,cyclic:3,(1 2 4)(3 6 5)))"
            : "product(cyclic:2,sym:3)";
    std::string dihedral_like = odd ? "extraspecial:3" : "dihedral:8";
    std::string row_sep = odd ? "semidirect(cyclic:3,cyclic:2,(1 2))" : "alt:4";
    int q = odd ? 7 : 3;

    // 1) the principal-radical collection has its own homotopy type
    battery_contractibility(
        B, perm_spec, p,
        {{Kind::D, false}, {Kind::S, true}, {Kind::Ce, true}, {Kind::E, true}});

    // 2) the centric collection splits into the q Sylow components
    {
        auto t0 = std::chrono::steady_clock::now();
        GroupTable G = build_group(product_spec, caps.order_cap);
        Collection Ce = collect(G, p, Kind::Ce);
        auto h = reduced_homology_of_poset(poset_of(Ce), p);
        bool pass = h.pi0 == q && h.betti_p[1] == q - 1;
        auto s = contractibility(poset_of(collect(G, p, Kind::S)), p);
        pass = pass && s.status == ContractStatus::CERTIFIED;
        B.record("counterexamples/" + product_spec + "/Ce-disconnected-vs-S-contractible",
                 json{{"group", product_spec}, {"prime", p}}, pass,
                 json{{"Ce_homology", to_json(h)}, {"S_status", to_string(s.status)}},
                 ms_since(t0));
    }

    // 3) connectivity split between S and E
    if (!odd) {
        auto t0 = std::chrono::steady_clock::now();
        GroupTable G = build_group("sym:5", caps.order_cap);
        auto hS = reduced_homology_of_poset(poset_of(collect(G, 2, Kind::S)), 2);
        auto hE = reduced_homology_of_poset(poset_of(collect(G, 2, Kind::E)), 2);
        B.record("counterexamples/sym:5/pi0-E-5-vs-S-1", json{{"group", "sym:5"}, {"prime", 2}},
                 hS.pi0 == 1 && hE.pi0 == 5, json{{"pi0_S", hS.pi0}, {"pi0_E", hE.pi0}},
                 ms_since(t0));
    } else {
        CheckRecord r;
        r.check_id = "counterexamples/SL2(9):3/pi0-split";
        r.inputs = json{{"prime", p}};
        r.verdict = "VACUOUS";
        r.witnesses =
            json{{"note", "order 2160 exceeds the desk-scale order cap; the p=2 instance "
                          "of the same family is sym:5"}};
        if (!as_json) std::cout << "SKIP " << r.check_id << " (order cap)\n";
        B.suite.records.push_back(r);
    }

    // 4) empty-vs-nonempty fixed subposets on the p-group D
    {
        GroupTable G = build_group(dihedral_like, caps.order_cap);
        Subgroup S = sylow_p(G, p);  // the whole group
        battery_fixed_empty(B, G, dihedral_like, p, Kind::BCe, "below_centralizer", S, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::Ce, "below_centralizer", S, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::Ce, "fixed", S, false);
        Subgroup maxab = trivial_subgroup(G);
        for (const auto& H : subgroups_all(G, caps.order_cap))
            if (is_abelian(G, H) && H.order > maxab.order && H.order < G.n) maxab = H;
        battery_fixed_empty(B, G, dihedral_like, p, Kind::BCe, "below_centralizer", maxab, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::Ce, "below_centralizer", maxab, false);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::E, "above", S, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::E, "fixed", S, false);
        Subgroup rank2 = trivial_subgroup(G);
        for (const auto& H : subgroups_all(G, caps.order_cap))
            if (is_elementary_abelian(G, H, p) && H.order == p * p) {
                rank2 = H;
                break;
            }
        battery_fixed_empty(B, G, dihedral_like, p, Kind::B, "below_centralizer", rank2, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::I, "below_centralizer", rank2, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::A, "above", rank2, false);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::A, "fixed", rank2, false);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::A, "above", S, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::A, "fixed", S, false);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::D, "below_centralizer", S, true);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::D, "fixed", S, false);
        battery_fixed_empty(B, G, dihedral_like, p, Kind::D, "above", S, false);
    }

    // 5) the radical and sylow-intersection collections split on the
    //    centralizer row
    if (!odd) {
        GroupTable G = build_group("SL:3,2", caps.order_cap);
        Subgroup S = sylow_p(G, 2);
        battery_fixed_empty(B, G, "SL:3,2", 2, Kind::B, "below_centralizer", S, true);
        battery_fixed_empty(B, G, "SL:3,2", 2, Kind::I, "below_centralizer", S, false);
    }

    // 6) rows separate: H = G with trivial center and trivial p-core
    {
        GroupTable G = build_group(row_sep, caps.order_cap);
        Subgroup whole = full_subgroup(G);
        for (Kind k : {Kind::S, Kind::B, Kind::Ce, Kind::BCe, Kind::D, Kind::I, Kind::A,
                       Kind::Z, Kind::E}) {
            battery_fixed_empty(B, G, row_sep, p, k, "above", whole, true);
            battery_fixed_empty(B, G, row_sep, p, k, "below_centralizer", whole, true);
            battery_fixed_empty(B, G, row_sep, p, k, "fixed", whole, false);
        }
    }

    // 7) the subgroup row separates on the abelian product
    {
        std::string spec = odd ? "product(cyclic:3,cyclic:2)" : "cyclic:6";
        GroupTable G = build_group(spec, caps.order_cap);
        Subgroup whole = full_subgroup(G);
        battery_fixed_empty(B, G, spec, p, Kind::S, "above", whole, true);
        battery_fixed_empty(B, G, spec, p, Kind::S, "below_centralizer", whole, false);
        battery_fixed_empty(B, G, spec, p, Kind::S, "fixed", whole, false);
    }

    // 8) abelian collections are not subgroup sharp: cyclic of order p^2
    {
        std::string spec = odd ? "cyclic:9" : "cyclic:4";
        auto t0 = std::chrono::steady_clock::now();
        GroupTable G = build_group(spec, caps.order_cap);
        ResolutionCache R(G, p, 3);
        auto rep = sharpness_check(G, p, Kind::A, Row::Subgroup, 2, 2, R);
        B.record("counterexamples/" + spec + "/A-subgroup-fails-at-n1",
                 json{{"group", spec}, {"prime", p}},
                 rep.state == SharpState::FAILS && rep.fail_n == 1 && rep.fail_i == 0,
                 to_json(rep), ms_since(t0));
    }
    return finish(B.suite, as_json);
}

int cmd_group(const std::string& spec, int prime, bool as_json, const std::string& dump_file,
              const Caps& caps) {
    GroupTable G = build_group(spec, caps.order_cap);
    auto subs = subgroups_all(G, caps.order_cap);
    auto cls = conjugacy_classes(G, subs);
    json j{{"spec", spec},
           {"order", G.n},
           {"center", center_of(G, full_subgroup(G)).order},
           {"subgroups", int(subs.size())},
           {"subgroup_classes", int(cls.reps.size())},
           {"abelian", is_abelian(G, full_subgroup(G))}};
    if (prime > 1) {
        j["sylow_order"] = sylow_p(G, prime).order;
        j["sylow_count"] = int(all_sylows(G, prime).size());
    }
    if (!dump_file.empty()) {
        if (prime < 2) throw std::runtime_error("--dump-resolution needs --prime");
        ResolutionCache R(G, prime, caps.degree_cap);
        std::ofstream out(dump_file);
        out << R.dump_json(full_subgroup(G)) << "\n";
        j["resolution_dump"] = dump_file;
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << spec << ": order " << G.n << ", " << subs.size()
                  << " subgroups in " << cls.reps.size() << " classes, center of order "
                  << j["center"].get<int>() << "\n";
        if (prime > 1)
            std::cout << "sylow_" << prime << ": order " << j["sylow_order"].get<int>() << ", "
                      << j["sylow_count"].get<int>() << " conjugates\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroup-collection laboratory: collections of p-subgroups, poset topology, "
                 "higher limits, and sharpness checks on finite groups"};
    app.require_subcommand(1);
    Caps caps = caps_from_env();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string group, kinds, row, pair, scope = "plain", kind, type, expect, dump_file;
    int prime = 2, nmax = 3, imax = 3;
    long long seed = 0;

    auto* c_col = app.add_subcommand("collections", "member and class counts per collection");
    c_col->add_option("--group", group)->required();
    c_col->add_option("--prime", prime)->required();
    c_col->add_option("--kinds", kinds, "comma list among S,B,Ce,BCe,D,I,A,Z,E (default all)");

    auto* c_eq = app.add_subcommand("equivalence", "fixed-point homology evidence for one row");
    c_eq->add_option("--group", group)->required();
    c_eq->add_option("--prime", prime)->required();
    c_eq->add_option("--row", row, "subgroup|normalizer|centralizer")->required();
    c_eq->add_option("--pair", pair, "two kinds, e.g. B,S")->required();
    c_eq->add_option("--scope", scope, "plain|sylow|full");
    c_eq->add_option("--expect", expect, "exit 1 unless the verdict matches");

    auto* c_sh = app.add_subcommand("sharpness", "comparison map and higher-limit vanishing");
    c_sh->add_option("--group", group)->required();
    c_sh->add_option("--prime", prime)->required();
    c_sh->add_option("--kind", kind)->required();
    c_sh->add_option("--type", type, "subgroup|normalizer|centralizer")->required();
    c_sh->add_option("--nmax", nmax);
    c_sh->add_option("--imax", imax);
    c_sh->add_option("--expect", expect);

    auto* c_cx = app.add_subcommand("counterexamples", "the fixed refutation battery");
    c_cx->add_option("--prime", prime, "2 (default) or 3");
    c_cx->add_option("--seed", seed, "recorded in reports; verdicts are seed independent");

    auto* c_gr = app.add_subcommand("group", "build and describe a group");
    c_gr->add_option("--spec", group)->required();
    c_gr->add_option("--prime", prime);
    c_gr->add_option("--dump-resolution", dump_file, "write the resolution matrices as JSON");

    try {
        app.parse(argc, argv);
        if (c_col->parsed()) return cmd_collections(group, prime, kinds, as_json, caps);
        if (c_eq->parsed())
            return cmd_equivalence(group, prime, row, pair, scope, as_json, expect, caps);
        if (c_sh->parsed())
            return cmd_sharpness(group, prime, kind, type, nmax, imax, as_json, expect, caps);
        if (c_cx->parsed()) return cmd_counterexamples(prime, as_json, caps);
        if (c_gr->parsed()) return cmd_group(group, prime, as_json, dump_file, caps);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
