// combperm: exact counting of comb/fence tilings, metatile censuses,
// permanents of banded (0,1) Toeplitz matrices, and identity verification.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "combperm/acceptance.hpp"
#include "combperm/bfile.hpp"
#include "combperm/identities.hpp"
#include "combperm/metatile.hpp"
#include "combperm/permanents.hpp"
#include "combperm/recurrence.hpp"
#include "combperm/tile_spec.hpp"
#include "combperm/tiling.hpp"

using nlohmann::json;
using namespace combperm;

namespace {

std::string str(const BigInt& v) { return v.str(); }

struct Output {
    std::string format = "table";  // table | json | csv
    bool timings = false;
};

void print_sequence(const SequenceTable& t, const Output& out) {
    if (out.format == "json") {
        json j;
        j["start_index"] = t.start_index;
        json vals = json::array();
        for (const auto& v : t.values) vals.push_back(str(v));
        j["values"] = vals;
        std::cout << j.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < t.values.size(); ++i)
            std::cout << (t.start_index + static_cast<long>(i)) << "," << str(t.values[i]) << "\n";
    } else {
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            if (i) std::cout << " ";
            std::cout << str(t.values[i]);
        }
        std::cout << "\n";
    }
}

void print_value(const std::string& op, const json& meta, const BigInt& v, const Output& out) {
    if (out.format == "json") {
        json j = meta;
        j["op"] = op;
        j["value"] = str(v);
        std::cout << j.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << "op,value\n" << op << "," << str(v) << "\n";
    } else {
        std::cout << str(v) << "\n";
    }
}

int emit_reports(const std::vector<IdentityReport>& reports, const Output& out) {
    bool all = true;
    if (out.format == "json") {
        for (const auto& r : reports) {
            json params = json::object();
            for (const auto& [k, v] : r.params) params[k] = v;
            json j{{"id", r.id},
                   {"params", params},
                   {"n_min", r.n_min},
                   {"n_max", r.n_max},
                   {"verified", r.verified},
                   {"fail_n", r.fail_n},
                   {"lhs", r.verified ? "" : str(r.lhs)},
                   {"rhs", r.verified ? "" : str(r.rhs)}};
            if (out.timings) j["elapsed_s"] = r.elapsed_s;
            std::cout << j.dump() << "\n";
            all = all && r.verified;
        }
    } else if (out.format == "csv") {
        std::cout << "id,params,n_min,n_max,status,fail_n,lhs,rhs\n";
        for (const auto& r : reports) {
            std::string params;
            for (const auto& [k, v] : r.params) {
                if (!params.empty()) params += ";";
                params += k + "=" + std::to_string(v);
            }
            std::cout << r.id << "," << params << "," << r.n_min << "," << r.n_max << ","
                      << (r.verified ? "verified" : "failed") << "," << r.fail_n << ","
                      << (r.verified ? "" : str(r.lhs)) << "," << (r.verified ? "" : str(r.rhs)) << "\n";
            all = all && r.verified;
        }
    } else {
        for (const auto& r : reports) {
            std::cout << r.describe();
            if (out.timings) std::cout << " [" << r.elapsed_s << "s]";
            std::cout << "\n";
            all = all && r.verified;
        }
    }
    return all ? 0 : 1;
}

int run_oeis_check(const std::string& wtext, const std::string& path, long max_n, const Output& out) {
    const auto W = parse_offset_set(wtext);
    const auto file = load_bfile(path);
    long checked = 0;
    long first = -1, last = -1;
    for (const auto& [index, value] : file.entries) {
        if (index < 0 || index > max_n) continue;
        const BigInt computed = count_restricted_perms(index, W);
        if (computed != value) {
            if (out.format == "json") {
                json j{{"w", W.describe()},
                       {"status", "mismatch"},
                       {"n", index},
                       {"file", str(value)},
                       {"computed", str(computed)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "mismatch at n=" << index << ": file=" << value << " computed=" << computed
                          << "\n";
            }
            return 1;
        }
        if (checked == 0) first = index;
        last = index;
        ++checked;
    }
    if (out.format == "json") {
        json j{{"w", W.describe()}, {"status", "ok"}, {"checked", checked}, {"first", first}, {"last", last}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ok: " << checked << " terms agree (n=" << first << ".." << last << ")\n";
    }
    return 0;
}

void print_boards(const std::vector<Board>& boards, const Output& out) {
    if (out.format == "json") {
        json list = json::array();
        for (const auto& b : boards) {
            json placements = json::array();
            for (const auto& pl : b.placements) {
                const auto& sh = b.shape(pl);
                placements.push_back(json{{"tile", sh.label}, {"start", pl.start}, {"color", pl.color}});
            }
            list.push_back(placements);
        }
        std::cout << json{{"count", boards.size()}, {"boards", list}}.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << "board,tile,start,color\n";
        for (std::size_t i = 0; i < boards.size(); ++i)
            for (const auto& pl : boards[i].placements)
                std::cout << i << "," << boards[i].shape(pl).label << ","
                          << pl.start << "," << pl.color << "\n";
    } else {
        for (const auto& b : boards) {
            bool first = true;
            for (const auto& pl : b.placements) {
                const auto& sh = b.shape(pl);
                if (!first) std::cout << " ";
                std::cout << sh.label << "@" << pl.start;
                if (sh.colors > 1) std::cout << "#" << pl.color;
                first = false;
            }
            std::cout << "\n";
        }
    }
}

void print_census_table(const MetatileCensus& c, const Output& out) {
    if (out.format == "json") {
        json rows = json::array();
        for (int l = 1; l <= c.length_cap; ++l)
            rows.push_back(json{{"l", l}, {"total", str(c.total_at(l))}, {"mixed", str(c.mixed_at(l))}});
        std::cout << json{{"tiles", c.tile_set}, {"rows", rows}}.dump() << "\n";
    } else {
        if (out.format == "csv")
            std::cout << "l,total,mixed\n";
        else
            std::cout << "l total mixed\n";
        const char* sep = out.format == "csv" ? "," : " ";
        for (int l = 1; l <= c.length_cap; ++l)
            std::cout << l << sep << str(c.total_at(l)) << sep << str(c.mixed_at(l)) << "\n";
    }
}

int emit_acceptance(const Output& out) {
    const auto results = run_acceptance();
    if (out.format == "json") {
        bool all = true;
        for (const auto& r : results) {
            json j{{"criterion", r.index}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
            if (out.timings) j["elapsed_s"] = r.elapsed_s;
            std::cout << j.dump() << "\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }
    if (out.format == "csv") {
        bool all = true;
        std::cout << "criterion,pass,name,detail\n";
        for (const auto& r : results) {
            std::cout << r.index << "," << (r.pass ? "pass" : "fail") << ",\"" << r.name << "\",\"" << r.detail
                      << "\"\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }
    return print_acceptance(std::cout, results, out.timings) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact comb/fence tiling counts, metatile censuses, and permanents of banded (0,1) "
                 "Toeplitz matrices"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--timings", out.timings, "include elapsed times in verify output");

    // seq
    auto* seq = app.add_subcommand("seq", "evaluate a weighted sparse recurrence");
    std::string terms;
    long seq_n = 10;
    seq->add_option("--terms", terms, "recurrence terms m1:v1,m2:v2,...")->required();
    seq->add_option("--n", seq_n, "largest index")->required()->check(CLI::NonNegativeNumber);

    // tilings count|enum
    auto* tilings = app.add_subcommand("tilings", "count or enumerate board tilings");
    tilings->require_subcommand(1);
    std::string tile_text;
    int cells = 0, resolution = 2;
    long long enum_cap = kDefaultEnumCap;
    auto* tcount = tilings->add_subcommand("count", "exact weighted count");
    auto* tenum = tilings->add_subcommand("enum", "list every tiling");
    for (auto* sub : {tcount, tenum}) {
        sub->add_option("--cells", cells, "board length in cells")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--tiles", tile_text, "tile spec, e.g. t1g1x1=h,t1g1x3")->required();
        sub->add_option("--p", resolution, "slots per cell")->capture_default_str();
    }
    tenum->add_option("--cap", enum_cap, "refuse to list more tilings than this");

    // metatiles census|digraph
    auto* metatiles = app.add_subcommand("metatiles", "metatile census and slot-state digraphs");
    metatiles->require_subcommand(1);
    auto* mcensus = metatiles->add_subcommand("census", "counts of (mixed) metatiles by length");
    int m1 = 1, m2 = 3, lmax = 15;
    mcensus->add_option("--m1", m1, "teeth of the first comb")->capture_default_str();
    mcensus->add_option("--m2", m2, "teeth of the second comb")->capture_default_str();
    mcensus->add_option("--lmax", lmax, "largest metatile length")->capture_default_str();
    std::string census_tiles;
    int census_p = 2;
    mcensus->add_option("--tiles", census_tiles, "explicit tile spec (overrides --m1/--m2)");
    mcensus->add_option("--p", census_p, "slots per cell for --tiles")->capture_default_str();

    auto* mdigraph = metatiles->add_subcommand("digraph", "export the slot-state digraph as DOT");
    std::string digraph_tiles, dot_out = "-";
    DigraphOptions dopts;
    bool no_compress = false;
    mdigraph->add_option("--tiles", digraph_tiles, "tile spec")->required();
    mdigraph->add_option("--p", resolution, "slots per cell")->capture_default_str();
    mdigraph->add_option("--out", dot_out, "output file, - for stdout")->capture_default_str();
    mdigraph->add_flag("--interior", dopts.interior, "interior-tile digraph (drop completing arcs)");
    mdigraph->add_option("--start-residue", dopts.start_residue, "frontier residue of the start node");
    mdigraph->add_flag("--no-compress", no_compress, "one tile per arc; keep forced pass-through nodes");
    mdigraph->add_option("--node-cap", dopts.node_cap, "state explosion guard")->capture_default_str();

    // perm count|ryser|theorem1|a080013
    auto* perm = app.add_subcommand("perm", "strongly restricted permutation counts / permanents");
    perm->require_subcommand(1);
    std::string wtext;
    long perm_n = 0;
    bool whole_table = false;
    auto* pcount = perm->add_subcommand("count", "P_n^W by the transfer DP");
    auto* pryser = perm->add_subcommand("ryser", "permanent of the Toeplitz matrix, inclusion-exclusion");
    auto* ptheorem1 = perm->add_subcommand("theorem1", "recurrence for W = {-1, d_1..d_r}");
    auto* pa = perm->add_subcommand("a080013", "the signed {-2,-1,2} recurrence");
    for (auto* sub : {pcount, pryser, ptheorem1})
        sub->add_option("--w", wtext, "offset set, e.g. -2,-1,2")->required();
    for (auto* sub : {pcount, pryser, ptheorem1, pa})
        sub->add_option("--n", perm_n, "index (matrix order)")->required()->check(CLI::NonNegativeNumber);
    for (auto* sub : {pcount, ptheorem1, pa})
        sub->add_flag("--all", whole_table, "print the whole table 0..n");

    // verify
    auto* verify = app.add_subcommand("verify", "check theorems and identities exactly");
    app.footer("tile spec grammar: t<len>g<gap>x<teeth>[@<residue digits>][*<colors>][=<label>], comma\n"
               "separated, lengths in slots at resolution --p. Example: t1g1x1=h,t1g1x3=C at --p 2.");
    verify->require_subcommand(1);
    long vm = 1, vj = -1, vN = -1;
    int v_mmax = 3, v_lmax = 15, vp = 2;
    std::string vterms = "1:1,2:1";
    auto* vgen1 = verify->add_subcommand("gen1", "squares of s^{(1,m+2)} vs P^{{-2,-1,m}}");
    auto* vgen2 = verify->add_subcommand("gen2", "squares of s^{(m+1,m+2)} vs P^{{-2,m-1,m}}");
    auto* vsum = verify->add_subcommand("sum", "the cumulative-board identity");
    auto* vblock = verify->add_subcommand("block", "the n(m+2)+j family");
    auto* vmixed = verify->add_subcommand("mixed", "the at-least-one-mixed-metatile identity");
    auto* vmixed2 = verify->add_subcommand("mixed2", "same, for the (m+1,m+2) combs");
    auto* vcows = verify->add_subcommand("narayana-padovan", "the six m=1 specializations");
    auto* vthm2 = verify->add_subcommand("theorem2", "A_{pn+r} = s_n^{p-r} s_{n+1}^r");
    auto* vcor3 = verify->add_subcommand("corollary3", "A_n = s_n^p");
    auto* vmu = verify->add_subcommand("mu", "mu_l vs permanent sequences");
    auto* vall = verify->add_subcommand("all", "the whole acceptance suite");
    for (auto* sub : {vgen1, vgen2, vsum, vblock, vmixed, vmixed2})
        sub->add_option("--m", vm, "comb parameter m")->capture_default_str();
    vblock->add_option("--j", vj, "offset j in 0..m+1; default runs all");
    for (auto* sub : {vgen1, vgen2, vsum, vblock, vmixed, vmixed2, vcows, vthm2, vcor3})
        sub->add_option("--N", vN, "largest index checked");
    for (auto* sub : {vthm2, vcor3}) {
        sub->add_option("--terms", vterms, "recurrence terms m1:v1,...")->capture_default_str();
        sub->add_option("--p", vp, "slots per cell")->capture_default_str();
    }
    vmu->add_option("--m", v_mmax, "largest m")->capture_default_str();
    vmu->add_option("--lmax", v_lmax, "largest metatile length")->capture_default_str();

    // oeis-check
    auto* oeis = app.add_subcommand("oeis-check", "compare P_n^W against a local OEIS b-file");
    std::string bfile_path;
    long max_n = 400;
    oeis->add_option("--w", wtext, "offset set")->required();
    oeis->add_option("--bfile", bfile_path, "path to the b-file")->required();
    oeis->add_option("--max-n", max_n, "largest index to compare")->capture_default_str();

    // Let --format/--timings appear after any subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands(std::function<bool(CLI::App*)>{})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) {
            print_sequence(eval_sequence(parse_recurrence_terms(terms), seq_n), out);
            return 0;
        }
        if (tilings->parsed()) {
            const auto tiles = parse_tile_spec(tile_text, resolution);
            if (tcount->parsed())
                print_value("tilings.count", json{{"cells", cells}, {"p", resolution}},
                            count_tilings(cells, tiles, resolution), out);
            else
                print_boards(enumerate_tilings(cells, tiles, resolution, enum_cap), out);
            return 0;
        }
        if (metatiles->parsed()) {
            if (mcensus->parsed()) {
                if (census_tiles.empty())
                    print_census_table(census(mu_tiles(m1, m2), 2, lmax), out);
                else
                    print_census_table(census(parse_tile_spec(census_tiles, census_p), census_p, lmax), out);
                return 0;
            }
            dopts.compress = !no_compress;
            const auto g = export_digraph(parse_tile_spec(digraph_tiles, resolution), resolution, dopts);
            if (dot_out == "-") {
                std::cout << g.to_dot();
            } else {
                std::ofstream f(dot_out);
                if (!f) throw std::invalid_argument("cannot open output file: " + dot_out);
                f << g.to_dot();
            }
            return 0;
        }
        if (perm->parsed()) {
            if (pa->parsed()) {
                const auto t = a080013_sequence(perm_n);
                if (whole_table)
                    print_sequence(t, out);
                else
                    print_value("perm.a080013", json{{"n", perm_n}}, t.at(perm_n), out);
                return 0;
            }
            const auto W = parse_offset_set(wtext);
            if (pcount->parsed()) {
                if (whole_table) {
                    SequenceTable t;
                    t.values = perm_table(W, perm_n);
                    print_sequence(t, out);
                } else {
                    print_value("perm.count", json{{"n", perm_n}, {"w", W.describe()}},
                                count_restricted_perms(perm_n, W), out);
                }
            } else if (pryser->parsed()) {
                const BigInt v = perm_n == 0
                                     ? BigInt(1)
                                     : permanent_ryser(toeplitz_from_W(static_cast<int>(perm_n), W));
                print_value("perm.ryser", json{{"n", perm_n}, {"w", W.describe()}}, v, out);
            } else {
                const auto t = theorem1_sequence(W, perm_n);
                if (whole_table)
                    print_sequence(t, out);
                else
                    print_value("perm.theorem1", json{{"n", perm_n}, {"w", W.describe()}}, t.at(perm_n), out);
            }
            return 0;
        }
        if (verify->parsed()) {
            if (vall->parsed()) return emit_acceptance(out);
            std::vector<IdentityReport> reports;
            if (vgen1->parsed()) reports.push_back(verify_identity_gen1(vm, vN < 0 ? 30 : vN));
            if (vgen2->parsed()) reports.push_back(verify_identity_gen2(vm, vN < 0 ? 30 : vN));
            if (vsum->parsed()) reports.push_back(verify_identity_sum(vm, vN < 0 ? 30 : vN));
            if (vblock->parsed()) {
                const long N = vN < 0 ? 30 : vN;
                if (vj >= 0)
                    reports.push_back(verify_identity_block(vm, vj, N));
                else
                    for (long j = 0; j <= vm + 1; ++j) reports.push_back(verify_identity_block(vm, j, N));
            }
            if (vmixed->parsed()) reports.push_back(verify_identity_mixed(vm, vN < 0 ? 30 : vN));
            if (vmixed2->parsed()) reports.push_back(verify_identity_mixed2(vm, vN < 0 ? 30 : vN));
            if (vcows->parsed())
                for (auto& r : verify_narayana_padovan(vN < 0 ? 40 : vN)) reports.push_back(std::move(r));
            if (vthm2->parsed())
                reports.push_back(verify_theorem2(parse_recurrence_terms(vterms), vp, vN < 0 ? 6 : vN));
            if (vcor3->parsed())
                reports.push_back(verify_corollary3(parse_recurrence_terms(vterms), vp, vN < 0 ? 10 : vN));
            if (vmu->parsed())
                for (auto& r : verify_mu_theorems(v_mmax, v_lmax)) reports.push_back(std::move(r));
            return emit_reports(reports, out);
        }
        if (oeis->parsed()) return run_oeis_check(wtext, bfile_path, max_n, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
