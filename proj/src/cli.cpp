#include "galmod/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "galmod/groups.hpp"
#include "galmod/lattice.hpp"
#include "galmod/psi_model.hpp"
#include "galmod/quad_arith.hpp"
#include "galmod/stickelberger.hpp"
#include "galmod/swan_lattice.hpp"
#include "galmod/verify_suites.hpp"

namespace galmod {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Int parse_int_token(const std::string& raw) {
    std::string tok = trim(raw);
    size_t pos = 0;
    Int v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (tok.empty() || pos != tok.size())
        throw usage_error("invalid integer '" + raw + "'");
    return v;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (trim(s).empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        out.push_back(parse_int_token(
            s.substr(start, comma == std::string::npos ? std::string::npos
                                                       : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// "1,0;0,2" -> two coordinate vectors
std::vector<GroupElement> parse_vector_list(const std::string& s) {
    std::vector<GroupElement> out;
    if (trim(s).empty()) return out;
    size_t start = 0;
    while (true) {
        size_t semi = s.find(';', start);
        out.push_back(parse_int_list(
            s.substr(start, semi == std::string::npos ? std::string::npos
                                                      : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

json rat_json(const Rat& r) {
    return json{{"num", r.num}, {"den", r.den}, {"str", r.str()}};
}

Int euler_phi_local(Int n) {
    Int out = n;
    for (const auto& pe : factorize(n)) out = out / pe.first * (pe.first - 1);
    return out;
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string cell(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void render(std::ostream& os, const json& j, int indent);

void render_table(std::ostream& os, const json& rows, int indent) {
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
        keys.push_back(it.key());
    std::vector<size_t> width(keys.size());
    for (size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < keys.size(); ++c)
            if (row.contains(keys[c]))
                width[c] = std::max(width[c], cell(row[keys[c]]).size());
    std::string pad(static_cast<size_t>(indent), ' ');
    os << pad;
    for (size_t c = 0; c < keys.size(); ++c)
        os << keys[c] << std::string(width[c] - keys[c].size() + 2, ' ');
    os << "\n";
    for (const auto& row : rows) {
        os << pad;
        for (size_t c = 0; c < keys.size(); ++c) {
            std::string v = row.contains(keys[c]) ? cell(row[keys[c]]) : "";
            os << v << std::string(width[c] - v.size() + 2, ' ');
        }
        os << "\n";
    }
}

void render(std::ostream& os, const json& j, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_scalar(it.value())) {
                os << pad << it.key() << ": " << cell(it.value()) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render(os, it.value(), indent + 2);
            }
        }
        return;
    }
    if (j.is_array()) {
        bool objs = !j.empty();
        bool scalars = true;
        for (const auto& x : j) {
            if (!x.is_object()) objs = false;
            if (!is_scalar(x)) scalars = false;
        }
        if (objs) {
            render_table(os, j, indent);
        } else if (scalars) {
            os << pad << j.dump() << "\n";
        } else {
            for (const auto& x : j) render(os, x, indent);
        }
        return;
    }
    os << pad << cell(j) << "\n";
}

}  // namespace

json CommandResult::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["status"] = status;
    if (status == "ok")
        j["outputs"] = outputs;
    else
        j["message"] = message;
    return j;
}

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact arithmetic for abelian group characters, Swan ideals, "
                 "and quadratic units",
                 "galmod"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "render tables instead of JSON");

    std::string st_group;
    CLI::App* st = app.add_subcommand(
        "stickelberger", "pairing integrality lattice basis and index");
    st->add_option("--group", st_group, "invariant factors, comma separated")
        ->required();

    std::string sw_group, sw_sub;
    Int sw_r = 0;
    CLI::App* sw = app.add_subcommand(
        "swan", "local-freeness and fiber certificates for (r, Sigma_H)");
    sw->add_option("--group", sw_group, "invariant factors")->required();
    sw->add_option("--subgroup", sw_sub,
                   "generator vectors, ';' separated, coordinates ',' separated");
    sw->add_option("--r", sw_r, "integer generator")->required();

    Int se_m = 0, se_bound = 0, se_d = 0;
    CLI::App* se = app.add_subcommand(
        "search", "primes p = -1 mod 8 with p = -1 mod 2m");
    se->add_option("--m", se_m, "conductor")->required();
    se->add_option("--bound", se_bound, "search bound")->required();
    CLI::Option* se_field = se->add_option("--field", se_d,
                                           "squarefree D for unit-quotient witnesses");

    Int vp_d = 0, vp_p = 0;
    CLI::App* vp = app.add_subcommand(
        "vp", "residue units modulo p and their quotient by global units");
    vp->add_option("--field", vp_d, "squarefree D")->required();
    vp->add_option("--p", vp_p, "odd prime")->required();

    Int ch_h = 1, ch_r = 0, ch_norm = 1, ch_deg = 1;
    std::string ch_e;
    CLI::App* ch = app.add_subcommand(
        "chevalley", "h * 2^r * prod(e) / (norm_index * degree)");
    // keep the short -h free so --h can name the class number factor
    ch->set_help_flag("--help", "print help and exit");
    ch->add_option("--h", ch_h, "class number factor");
    ch->add_option("--r", ch_r, "power of two")->required();
    ch->add_option("--e", ch_e, "ramification indices, comma separated");
    ch->add_option("--norm-index", ch_norm, "unit norm index");
    ch->add_option("--degree", ch_deg, "field degree");

    Int ko_d = 0, ko_p = 0;
    CLI::App* ko = app.add_subcommand(
        "kobayashi", "candidate cyclic quotients from the splitting symbol");
    ko->add_option("--field", ko_d, "squarefree D, not -1 or -3")->required();
    ko->add_option("--p", ko_p, "odd prime")->required();

    std::string ps_group;
    Int ps_n = 0;
    CLI::App* ps = app.add_subcommand(
        "psi", "residue actions on a finite abelian group and the kernel chain");
    ps->add_option("--group", ps_group, "invariant factors")->required();
    ps->add_option("--n", ps_n, "residue modulus")->required();

    Int va_bound = 12;
    CLI::App* va = app.add_subcommand("verify-all", "every exhaustive suite");
    va->add_option("--size-bound", va_bound, "cap on group order");

    // lets --pretty appear after the subcommand name
    for (CLI::App* s : app.get_subcommands(nullptr)) s->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("galmod");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw help_requested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw help_requested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw usage_error(std::string(e.what()) +
                          "\nrun 'galmod --help' for usage");
    }

    CommandResult res;
    std::function<void()> handler;

    if (app.got_subcommand(st)) {
        res.command = "stickelberger";
        res.inputs = json{{"group", st_group}};
        handler = [&] {
            FinAbGroup g = FinAbGroup::from_moduli(parse_int_list(st_group));
            IntLattice lat = a_hat_lattice(g);
            res.outputs = json{{"factors", g.factors},
                               {"order", g.order()},
                               {"basis", lat.basis},
                               {"index", lat.index()}};
        };
    } else if (app.got_subcommand(sw)) {
        res.command = "swan";
        res.inputs = json{{"group", sw_group}, {"subgroup", sw_sub}, {"r", sw_r}};
        handler = [&] {
            FinAbGroup g = FinAbGroup::from_moduli(parse_int_list(sw_group));
            Subgroup h = subgroup_generated_by(g, parse_vector_list(sw_sub));
            SwanIdeal ideal = swan_ideal(g, h, sw_r);
            LocalFreenessCert lf = verify_locally_free(g, h, sw_r);
            FiberCert fc = verify_fiber_module(fiber_module(g, h, sw_r));
            bool psi_ok = psi_invariance_check(g, h, sw_r);
            json json_primes = json::array();
            for (const auto& c : lf.per_prime)
                json_primes.push_back(
                    json{{"p", c.p}, {"N", c.n_precision}, {"pass", c.matches}});
            res.outputs = json{{"group", g.factors},
                               {"subgroup_gen", sw_sub},
                               {"subgroup_order", h.order()},
                               {"r", sw_r},
                               {"index", ideal.index},
                               {"per_prime", json_primes},
                               {"local_pass", lf.pass},
                               {"phi_pass", fc.pass},
                               {"psi_invariant", psi_ok},
                               {"pass", lf.pass && fc.pass && psi_ok}};
        };
    } else if (app.got_subcommand(se)) {
        res.command = "search";
        res.inputs = json{{"m", se_m}, {"bound", se_bound}};
        if (*se_field) res.inputs["field"] = se_d;
        handler = [&] {
            if (se_bound < 3)
                throw std::invalid_argument("search: bound must be >= 3");
            if (*se_field) {
                QuadField k(se_d);
                if (k.conductor() != se_m)
                    throw std::invalid_argument(
                        "search: m does not match the conductor of the field");
                json list = json::array();
                for (const SearchWitness& w :
                     explicit_prime_search_witnessed(k, se_bound))
                    list.push_back(json{{"p", w.p},
                                        {"has_order_four", w.has_order_four}});
                res.outputs = json{{"m", se_m},
                                   {"bound", se_bound},
                                   {"field", se_d},
                                   {"primes", list}};
            } else {
                res.outputs = json{{"m", se_m},
                                   {"bound", se_bound},
                                   {"primes", explicit_prime_search(se_m, se_bound)}};
            }
        };
    } else if (app.got_subcommand(vp)) {
        res.command = "vp";
        res.inputs = json{{"field", vp_d}, {"p", vp_p}};
        handler = [&] {
            VpResult v = vp_structure(QuadField(vp_d), vp_p);
            res.outputs = json{{"p", v.p},
                               {"splitting", splitting_name(v.splitting)},
                               {"full_factors", v.full_factors},
                               {"full_order", v.full_order},
                               {"unit_image_order", v.unit_image_order},
                               {"vp_factors", v.vp_factors},
                               {"vp_order", v.vp_order},
                               {"has_order_four", v.has_order_four}};
        };
    } else if (app.got_subcommand(ch)) {
        res.command = "chevalley";
        res.inputs = json{{"h", ch_h},
                          {"r", ch_r},
                          {"e", ch_e},
                          {"norm_index", ch_norm},
                          {"degree", ch_deg}};
        handler = [&] {
            ChevalleyInput in;
            in.h_k = ch_h;
            in.r = ch_r;
            in.e_list = parse_int_list(ch_e);
            in.norm_index = ch_norm;
            in.degree = ch_deg;
            ChevalleyResult out = chevalley(in);
            res.outputs = json{{"value", rat_json(out.value)},
                               {"integral", out.integral}};
        };
    } else if (app.got_subcommand(ko)) {
        res.command = "kobayashi";
        res.inputs = json{{"field", ko_d}, {"p", ko_p}};
        handler = [&] {
            KobayashiCandidates kc = kobayashi_swan(ko_d, ko_p);
            res.outputs = json{{"symbol", kc.symbol},
                               {"cyclic_orders", kc.cyclic_orders}};
        };
    } else if (app.got_subcommand(ps)) {
        res.command = "psi";
        res.inputs = json{{"group", ps_group}, {"n", ps_n}};
        handler = [&] {
            FinAbGroup a = FinAbGroup::from_moduli(parse_int_list(ps_group));
            std::vector<PsiModule> mods = enumerate_actions(a, ps_n);
            bool odd = ps_n % 2 == 1;
            Int phi = euler_phi_local(ps_n);
            const Int kMaxListed = 64;
            json actions = json::array();
            Int chain_failures = 0;
            for (size_t i = 0; i < mods.size(); ++i) {
                PsiSubgroup whole = PsiSubgroup::whole(mods[i]);
                Int gen = 1;
                for (const auto& kv : mods[i].action)
                    if (mult_order(kv.first, ps_n) == phi) {
                        gen = kv.first;
                        break;
                    }
                json entry{{"generator", gen},
                           {"matrix", mods[i].action.at(gen)},
                           {"sd_kernel_size",
                            static_cast<Int>(sd_kernel(whole).size())}};
                if (odd) {
                    entry["at_image_size"] =
                        static_cast<Int>(at_image(whole).size());
                    bool ok = check_chain(whole);
                    entry["chain_ok"] = ok;
                    if (!ok) ++chain_failures;
                }
                if (static_cast<Int>(i) < kMaxListed) actions.push_back(entry);
            }
            res.outputs = json{{"factors", a.factors},
                               {"n", ps_n},
                               {"action_count", static_cast<Int>(mods.size())},
                               {"listed", actions}};
            if (odd) res.outputs["chain_failures"] = chain_failures;
        };
    } else {
        res.command = "verify-all";
        res.inputs = json{{"size_bound", va_bound}};
        handler = [&] {
            if (va_bound < 1 || va_bound > 64)
                throw resource_error("verify-all: size bound outside [1, 64]");
            SuiteOptions opt;
            opt.size_bound = va_bound;
            json suites = json::array();
            bool all = true;
            for (const SuiteResult& s : run_all_suites(opt)) {
                json row{{"name", s.name},
                         {"pass", s.pass},
                         {"checks", s.checks},
                         {"seconds", s.seconds}};
                if (!s.pass) row["counterexample"] = s.counterexample;
                suites.push_back(row);
                all = all && s.pass;
            }
            res.outputs =
                json{{"size_bound", va_bound}, {"all_pass", all}, {"suites", suites}};
        };
        (void)va;
    }

    try {
        handler();
        res.status = "ok";
    } catch (const resource_error& ex) {
        res.status = "resource_error";
        res.message = ex.what();
        res.outputs = nullptr;
    } catch (const std::domain_error& ex) {
        res.status = "domain_error";
        res.message = ex.what();
        res.outputs = nullptr;
    } catch (const std::invalid_argument& ex) {
        res.status = "domain_error";
        res.message = ex.what();
        res.outputs = nullptr;
    }
    return res;
}

int exit_code_for(const CommandResult& res) {
    if (res.status == "ok") return 0;
    if (res.status == "resource_error") return 4;
    return 3;
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    bool pretty =
        std::find(args.begin(), args.end(), "--pretty") != args.end();
    try {
        CommandResult res = run_command(args);
        if (pretty) {
            std::cout << "command: " << res.command << "\n";
            std::cout << "status: " << res.status << "\n";
            if (res.status == "ok")
                render(std::cout, res.outputs, 0);
            else
                std::cout << "message: " << res.message << "\n";
        } else {
            std::cout << res.to_json().dump(2) << "\n";
        }
        return exit_code_for(res);
    } catch (const help_requested& h) {
        std::cout << h.text;
        return 0;
    } catch (const usage_error& ue) {
        std::cerr << ue.what() << "\n";
        return 2;
    }
}

}  // namespace galmod
