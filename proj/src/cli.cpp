#include "gwloc/cli.hpp"

#include "gwloc/engine.hpp"
#include "gwloc/mirror.hpp"
#include "gwloc/modular.hpp"
#include "gwloc/parallel.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gwloc::cli {

namespace {

struct RunConfig {
    int n = 2;
    std::vector<long> a;
    long dmax = 2;
    long qorder = 12;
    long rmax = 4;
    long marks_max = 2;
    std::vector<long> seeds{0, 1};
    std::string format = "json";
    std::string output;
    long decimal = 0;
    bool dump_graphs = false;
};

std::string decimal_approx(const Rat& v, long digits) {
    Int num = numerator(v), den = denominator(v);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (long k = 0; k < digits; ++k) scale *= 10;
    Int scaled = num * scale / den;
    std::string body = scaled.str();
    while (long(body.size()) <= digits) body.insert(body.begin(), '0');
    body.insert(body.end() - digits, '.');
    if (digits == 0) body.pop_back();
    return (neg ? "-" : "") + body;
}

void emit(const RunConfig& cfg, const nlohmann::json& doc, std::ostream& out) {
    std::ostringstream buf;
    if (cfg.format == "csv") {
        buf << "d,kind,value,route,seeds";
        if (cfg.decimal > 0) buf << ",approx";
        buf << "\n";
        for (const auto& row : doc.at("rows")) {
            buf << row.at("d").get<long>() << "," << row.at("kind").get<std::string>() << ","
                << row.at("value").get<std::string>() << "," << row.at("route").get<std::string>()
                << ",";
            const auto& seeds = row.at("seeds");
            for (size_t i = 0; i < seeds.size(); ++i) buf << (i ? " " : "") << seeds[i].get<long>();
            if (cfg.decimal > 0)
                buf << "," << decimal_approx(rat_parse(row.at("value").get<std::string>()), cfg.decimal);
            buf << "\n";
        }
        for (const auto& chk : doc.at("checks"))
            buf << "# check," << chk.at("name").get<std::string>() << ","
                << (chk.at("pass").get<bool>() ? "PASS" : "FAIL") << ","
                << chk.at("detail").get<std::string>() << "\n";
    } else {
        buf << doc.dump(2) << "\n";
    }
    if (!cfg.output.empty()) {
        std::ofstream f(cfg.output, std::ios::binary);
        f << buf.str();
    } else {
        out << buf.str();
    }
}

nlohmann::json row_json(const RunConfig& cfg, const InvariantResult& r) {
    nlohmann::json row;
    row["space"] = {{"n", cfg.n}, {"a", cfg.a}, {"sign", "concave"}};
    row["d"] = r.d;
    row["kind"] = r.kind;
    row["value"] = rat_str(r.value);
    row["route"] = r.route;
    row["seeds"] = r.seeds;
    if (cfg.decimal > 0) row["approx"] = decimal_approx(r.value, cfg.decimal);
    return row;
}

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["a"] = cfg.a;
    j["dmax"] = cfg.dmax;
    j["qorder"] = cfg.qorder;
    j["seeds"] = cfg.seeds;
    j["format"] = cfg.format;
    return j;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Model model{cfg.n, cfg.a, BundleSign::concave};
    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["rows"] = nlohmann::json::array();
    doc["checks"] = nlohmann::json::array();
    bool all_ok = true;
    for (long d = 1; d <= cfg.dmax; ++d) {
        auto n0 = invariant_genus0(model, d, cfg.seeds);
        auto n1 = invariant_genus1(model, d, cfg.seeds);
        auto n1r = invariant_reduced_genus1(model, d, cfg.seeds);
        auto corr = correction_sum(model, d, cfg.seeds);
        doc["rows"].push_back(row_json(cfg, n0));
        doc["rows"].push_back(row_json(cfg, n1));
        doc["rows"].push_back(row_json(cfg, n1r));
        doc["rows"].push_back(row_json(cfg, corr));
        bool svr = n1.value == n1r.value + corr.value;
        all_ok = all_ok && svr;
        nlohmann::json chk;
        chk["name"] = "standard-vs-reduced d=" + std::to_string(d);
        chk["pass"] = svr;
        chk["detail"] = svr ? ""
                            : rat_str(n1.value) + " != " + rat_str(n1r.value) + " + " +
                                  rat_str(corr.value);
        doc["checks"].push_back(chk);
    }
    if (cfg.dump_graphs) {
        Model m2 = model;
        LocalSpace ls = make_local_space(m2, cfg.seeds.empty() ? 0 : cfg.seeds[0]);
        nlohmann::json graphs = nlohmann::json::array();
        for (long d = 1; d <= cfg.dmax; ++d) {
            for (const auto& g : enumerate_one_loop(ls.space, d, 0))
                graphs.push_back(nlohmann::json::parse(graph_to_json(g)));
            for (const auto& g : enumerate_rooted_trees(ls.space, d, 0))
                graphs.push_back(nlohmann::json::parse(graph_to_json(g)));
        }
        doc["graphs"] = graphs;
    }
    emit(cfg, doc, out);
    if (!all_ok) err << "identity violation detected\n";
    return all_ok ? 0 : 1;
}

int cmd_svr_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    // bundle splittings: the given one, or every CY splitting of n
    std::vector<std::vector<long>> splittings;
    if (!cfg.a.empty()) {
        splittings.push_back(cfg.a);
    } else {
        std::function<void(long, long, std::vector<long>&)> rec = [&](long left, long maxpart,
                                                                      std::vector<long>& cur) {
            if (left == 0) {
                splittings.push_back(cur);
                return;
            }
            for (long p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p, cur);
                cur.pop_back();
            }
        };
        std::vector<long> cur;
        rec(cfg.n, cfg.n, cur);
    }

    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["rows"] = nlohmann::json::array();
    doc["checks"] = nlohmann::json::array();
    long stars_checked = 0;
    bool all_ok = true;
    for (const auto& a : splittings) {
        Model model{cfg.n, a, BundleSign::concave};
        for (long seed : cfg.seeds) {
            LocalSpace ls = make_local_space(model, seed);
            for (long d = 1; d <= cfg.dmax; ++d) {
                for (const auto& ds : star_configs(ls.space, d)) {
                    if (long(ds.legs.size()) > cfg.rmax) continue;
                    StarData star = make_star(ls, ds);
                    for (long nm = 0; nm <= cfg.marks_max; ++nm) {
                        std::vector<Rat> mu(size_t(nm),
                                            ls.space.spec.alpha[size_t(ds.root)]);
                        SvrCheck chk;
                        try {
                            chk = svr_check_star(ls, star, mu);
                        } catch (const degenerate_error&) {
                            // retry the whole star at a shifted seed
                            LocalSpace ls2 = make_local_space(model, seed + 7919);
                            StarData star2 = make_star(ls2, ds);
                            std::vector<Rat> mu2(size_t(nm),
                                                 ls2.space.spec.alpha[size_t(ds.root)]);
                            chk = svr_check_star(ls2, star2, mu2);
                        }
                        ++stars_checked;
                        if (!chk.equal) {
                            all_ok = false;
                            nlohmann::json bad;
                            bad["name"] = "star root=" + std::to_string(ds.root) +
                                          " d=" + std::to_string(d) +
                                          " marks=" + std::to_string(nm) +
                                          " seed=" + std::to_string(seed);
                            bad["pass"] = false;
                            bad["detail"] = "lhs=" + rat_str(chk.lhs) +
                                            " reduced=" + rat_str(chk.reduced) +
                                            " correction=" + rat_str(chk.correction);
                            doc["checks"].push_back(bad);
                            err << bad["name"] << ": " << bad["detail"] << "\n";
                        }
                    }
                }
            }
        }
    }
    nlohmann::json summary;
    summary["name"] = "per-star standard-vs-reduced";
    summary["pass"] = all_ok;
    summary["detail"] = std::to_string(stars_checked) + " star checks";
    doc["checks"].push_back(summary);
    emit(cfg, doc, out);
    return all_ok ? 0 : 1;
}

int cmd_mirror_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Model model{cfg.n, cfg.a, BundleSign::concave};
    MirrorContext ctx{cfg.n, cfg.a, std::max(cfg.qorder, cfg.dmax), 0};
    TruncSeries rhs = genus_one_series(ctx);
    nlohmann::json doc;
    doc["config"] = config_json(cfg);
    doc["rows"] = nlohmann::json::array();
    doc["checks"] = nlohmann::json::array();
    std::ostringstream csv;
    csv << "d,N1_localization,N1_mirror,equal\n";
    bool all_ok = true;
    for (long d = 1; d <= cfg.dmax; ++d) {
        auto n1 = invariant_genus1(model, d, cfg.seeds);
        Rat mirror = rhs.coeff(d);
        bool equal = n1.value == mirror;
        all_ok = all_ok && equal;
        csv << d << "," << rat_str(n1.value) << "," << rat_str(mirror) << ","
            << (equal ? "true" : "false") << "\n";
        nlohmann::json row = row_json(cfg, n1);
        row["mirror"] = rat_str(mirror);
        row["route"] = "graph-sum vs generating-function";
        doc["rows"].push_back(row);
        if (!equal)
            err << "mismatch at d=" << d << ": " << rat_str(n1.value) << " vs "
                << rat_str(mirror) << "\n";
    }
    nlohmann::json chk;
    chk["name"] = "mirror formula";
    chk["pass"] = all_ok;
    chk["detail"] = "";
    doc["checks"].push_back(chk);
    if (cfg.format == "csv") {
        if (!cfg.output.empty())
            std::ofstream(cfg.output, std::ios::binary) << csv.str();
        else
            out << csv.str();
    } else {
        emit(cfg, doc, out);
    }
    return all_ok ? 0 : 1;
}

int cmd_modularity_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    struct Item {
        const char* name;
        IdentityCheck result;
    };
    std::vector<Item> items{
        {"discriminant-vs-hypergeometric", check_delta_identity(cfg.qorder)},
        {"j-function", check_j_identity(cfg.qorder)},
        {"eta-theta-quotient", check_eta_quotient(cfg.qorder)},
        {"genus-one-potential-log-derivative", check_F1_modular(cfg.qorder)},
    };
    bool all_ok = true;
    std::ostringstream buf;
    for (const auto& it : items) {
        all_ok = all_ok && it.result.pass;
        buf << it.name << ": " << (it.result.pass ? "PASS" : "FAIL");
        if (!it.result.pass) buf << " (first mismatch at order " << it.result.first_mismatch << ")";
        buf << "\n";
    }
    if (!cfg.output.empty())
        std::ofstream(cfg.output, std::ios::binary) << buf.str();
    else
        out << buf.str();
    return all_ok ? 0 : 1;
}

int cmd_hodge_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    std::ostringstream buf;
    buf << "r,exponents,psi_integral,npoint_coefficient\n";
    for (long r = 1; r <= cfg.rmax; ++r) {
        // all exponent multisets a_1 <= ... <= a_r with sum r
        std::vector<long> a;
        std::function<void(long, long)> rec = [&](long left, long minv) {
            if (long(a.size()) == r) {
                if (left != 0) return;
                Rat v = genus1_psi_oracle(a);
                buf << r << ",";
                for (size_t i = 0; i < a.size(); ++i) buf << (i ? " " : "") << a[i];
                // the matching coefficient of F_r: multinomial over the
                // distinct arrangements divided out, i.e. the raw bracket
                buf << "," << rat_str(v) << "," << rat_str(v) << "\n";
                return;
            }
            for (long v = minv; v <= left; ++v) {
                a.push_back(v);
                rec(left - v, v);
                a.pop_back();
            }
        };
        rec(r, 0);
    }
    if (!cfg.output.empty())
        std::ofstream(cfg.output, std::ios::binary) << buf.str();
    else
        out << buf.str();
    return 0;
}

}  // namespace

// pulls `--config path` out of the argument list and appends `--key value`
// for every config entry whose flag is not already present, so explicit
// flags win
bool merge_config_file(std::vector<std::string>& args, std::string& error) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                error = "--config needs a path";
                return false;
            }
            path = args[i + 1];
            args.erase(args.begin() + long(i), args.begin() + long(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + long(i));
            break;
        }
    }
    if (path.empty()) return true;
    std::ifstream f(path);
    if (!f) {
        error = "cannot read config file " + path;
        return false;
    }
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : args)
            present = present || a == flag || a.rfind(flag + "=", 0) == 0;
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return true;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact localization and mirror-series computations for local Calabi-Yau spaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--threads", worker_count(), "worker cap for graph sums");

    auto add_common = [&](CLI::App* sub, bool needs_space) {
        if (needs_space) {
            sub->add_option("--n", cfg.n, "projective-space parameter (P^{n-1})")
                ->check(CLI::Range(2, 12));
            sub->add_option("--a", cfg.a, "bundle degrees")
                ->delimiter(',')
                ->check(CLI::PositiveNumber);
        }
        sub->add_option("--dmax", cfg.dmax, "largest degree")->check(CLI::PositiveNumber);
        sub->add_option("--qorder", cfg.qorder, "series truncation order");
        sub->add_option("--seeds", cfg.seeds, "specialization seeds")->delimiter(',');
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "write results to a file");
        sub->add_option("--decimal", cfg.decimal, "decimal approximation digits");
    };

    auto* inv = app.add_subcommand("invariants", "invariant table with internal identity checks");
    add_common(inv, true);
    inv->add_flag("--dump-graphs", cfg.dump_graphs, "include the graph list in the output");

    auto* svr = app.add_subcommand("svr-verify", "per-star standard-vs-reduced identity");
    add_common(svr, true);
    svr->add_option("--rmax", cfg.rmax, "largest star valence");
    svr->add_option("--marks", cfg.marks_max, "largest insertion count");

    auto* mir = app.add_subcommand("mirror-verify", "graph sums against the closed formula");
    add_common(mir, true);

    auto* mod = app.add_subcommand("modularity-verify", "q-series identities of the local plane");
    add_common(mod, false);

    auto* hodge = app.add_subcommand("hodge-table", "psi-class integral table");
    add_common(hodge, false);
    hodge->add_option("--rmax", cfg.rmax, "largest point count");

    std::string config_error;
    if (!merge_config_file(args, config_error)) {
        err << config_error << "\n";
        return 2;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    // subcommand defaults that depend on n
    if (cfg.a.empty() && (inv->parsed() || mir->parsed())) cfg.a = {long(cfg.n)};
    if ((inv->parsed() || mir->parsed() || svr->parsed()) && cfg.seeds.size() < 2) {
        err << "need at least two seeds to assert weight-independence\n";
        return 2;
    }
    if (mir->parsed() && cfg.qorder < cfg.dmax) {
        err << "--qorder must be at least --dmax\n";
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(cfg, out, err);
        if (svr->parsed()) return cmd_svr_verify(cfg, out, err);
        if (mir->parsed()) return cmd_mirror_verify(cfg, out, err);
        if (mod->parsed()) return cmd_modularity_verify(cfg, out, err);
        if (hodge->parsed()) return cmd_hodge_table(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace gwloc::cli
