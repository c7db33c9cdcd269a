#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdr/acceptance.hpp"
#include "fdr/basisops.hpp"
#include "fdr/exterior.hpp"
#include "fdr/partitions.hpp"
#include "fdr/quotient.hpp"
#include "fdr/sieving.hpp"
#include "fdr/symfunc.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum Exit : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kIterationCap = 3 };

enum class Format { Text, Json, Csv };

struct Options {
    std::optional<int> n, k, t, x;
    std::vector<int> bidegree;
    std::string pi, sigma;
    bool count = false;
    bool oracle = false;
    bool all = false;
    Format format = Format::Text;
    std::uint64_t seed = fdr::acceptance::kDefaultSeed;
    std::optional<int> n_max;
    std::uint64_t max_rewrites = fdr::kDefaultMaxRewrites;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json document(const std::string& command) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int require_n(const Options& o) {
    if (!o.n) throw InputError("--n is required");
    if (*o.n < 2 || *o.n > fdr::kMaxN) throw InputError("--n must lie in 2.." + std::to_string(fdr::kMaxN));
    return *o.n;
}

fdr::LabeledPartition parse_pi(const Options& o) {
    if (o.pi.empty()) throw InputError("--pi is required");
    try {
        return fdr::LabeledPartition::parse(o.pi, o.n.value_or(0));
    } catch (const std::exception& e) {
        throw InputError(std::string("bad --pi: ") + e.what());
    }
}

fdr::Permutation parse_sigma(const Options& o, int n) {
    if (o.sigma.empty()) throw InputError("--sigma is required");
    try {
        return fdr::Permutation::parse(o.sigma, n - 1);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad --sigma: ") + e.what());
    }
}

std::string combination_csv(const fdr::PartitionCombination& c) {
    std::string s = fdr::to_string(c);
    for (char& ch : s)
        if (ch == '\t') ch = ',';
    return "coefficient,partition\n" + s;
}

ordered_json combination_json(const fdr::PartitionCombination& c) {
    ordered_json arr = ordered_json::array();
    std::istringstream in(fdr::to_string(c));
    for (std::string line; std::getline(in, line);) {
        const auto tab = line.find('\t');
        arr.push_back({{"coefficient", line.substr(0, tab)}, {"partition", line.substr(tab + 1)}});
    }
    return arr;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& o) {
    const int n = require_n(o);
    fdr::EnumerateFilter f;
    f.pairs = o.k;
    f.theta_singletons = o.t;
    f.xi_singletons = o.x;
    f.noncrossing_only = !o.all;
    if (!o.bidegree.empty() && o.bidegree.size() != 2) throw InputError("--bidegree takes two integers");
    std::vector<fdr::LabeledPartition> out;
    for (auto& pi : fdr::enumerate(n, f)) {
        const auto s = pi.stats();
        if (!o.bidegree.empty() &&
            (s.pairs + s.theta_singletons != o.bidegree[0] || s.pairs + s.xi_singletons != o.bidegree[1]))
            continue;
        out.push_back(std::move(pi));
    }
    switch (o.format) {
        case Format::Json: {
            auto j = document("enumerate");
            j["n"] = n;
            j["family"] = o.all ? "Psi" : "Phi";
            j["count"] = out.size();
            if (!o.count) {
                j["partitions"] = ordered_json::array();
                for (const auto& pi : out) j["partitions"].push_back(pi.to_string());
            }
            emit_json(j);
            break;
        }
        case Format::Csv:
            if (o.count) {
                std::cout << "n,count\n" << n << ',' << out.size() << '\n';
                break;
            }
            std::cout << "partition,pairs,theta_singletons,xi_singletons,n_block_size\n";
            for (const auto& pi : out) {
                const auto s = pi.stats();
                std::cout << '"' << pi.to_string() << "\"," << s.pairs << ',' << s.theta_singletons << ','
                          << s.xi_singletons << ',' << s.n_block_size << '\n';
            }
            break;
        case Format::Text:
            if (o.count)
                std::cout << out.size() << '\n';
            else
                for (const auto& pi : out) std::cout << pi.to_string() << '\n';
    }
    return kOk;
}

int cmd_gpi(const Options& o) {
    const auto pi = parse_pi(o);
    const auto blockops = fdr::g_pi_blockops(pi);
    const auto product = fdr::g_pi_product(pi);
    const auto word = fdr::canonical_word(pi);
    const int shuffle = fdr::nblock_shuffle_sign(pi);
    switch (o.format) {
        case Format::Json: {
            auto j = document("gpi");
            j["n"] = pi.n();
            j["partition"] = pi.to_string();
            j["noncrossing"] = fdr::is_noncrossing(pi);
            j["canonical_word"] = word.word;
            j["word_sign"] = word.sign;
            j["blockops"] = blockops.to_string();
            j["product"] = product.to_string();
            j["nblock_shuffle_sign"] = shuffle;
            j["constructions_equal"] = blockops == product;
            emit_json(j);
            break;
        }
        case Format::Csv:
            std::cout << "construction,multivector\nblockops,\"" << blockops.to_string() << "\"\nproduct,\""
                      << product.to_string() << "\"\n";
            break;
        case Format::Text: {
            std::cout << "partition      " << pi.to_string() << '\n';
            std::cout << "word           ";
            for (int w : word.word) std::cout << w;
            std::cout << "  sign " << (word.sign > 0 ? "+1" : "-1") << '\n';
            std::cout << "product        " << product.to_string() << '\n';
            std::cout << "block ops      " << blockops.to_string() << '\n';
            std::cout << "shuffle sign   " << (shuffle > 0 ? "+1" : "-1") << '\n';
        }
    }
    return kOk;
}

int cmd_straighten(const Options& o) {
    const auto pi = parse_pi(o);
    const auto sigma = parse_sigma(o, pi.n());
    fdr::StraightenResult res;
    try {
        res = fdr::straighten(sigma, pi, o.max_rewrites);
    } catch (const fdr::IterationCapExceeded& e) {
        std::cerr << "straighten: " << e.what() << '\n';
        return kIterationCap;
    }
    std::optional<bool> oracle_ok, reduction_ok;
    if (o.oracle) {
        const auto target = fdr::apply_perm(sigma, fdr::g_pi(pi));
        oracle_ok = fdr::evaluate(res.combination, pi.n()) == target;
        reduction_ok = fdr::reduce_to_basis(target).coords == res.combination;
    }
    switch (o.format) {
        case Format::Json: {
            auto j = document("straighten");
            j["n"] = pi.n();
            j["sigma"] = sigma.to_string();
            j["partition"] = pi.to_string();
            j["rewrites"] = res.rewrites;
            j["combination"] = combination_json(res.combination);
            if (oracle_ok) {
                j["oracle_agrees"] = *oracle_ok;
                j["reduction_agrees"] = *reduction_ok;
            }
            emit_json(j);
            break;
        }
        case Format::Csv:
            std::cout << combination_csv(res.combination);
            break;
        case Format::Text:
            std::cout << fdr::to_string(res.combination);
            std::cout << "rewrites " << res.rewrites << '\n';
            if (oracle_ok)
                std::cout << "oracle " << (*oracle_ok ? "agrees" : "DISAGREES") << ", reduction "
                          << (*reduction_ok ? "agrees" : "DISAGREES") << '\n';
    }
    return oracle_ok.value_or(true) && reduction_ok.value_or(true) ? kOk : kCheckFailed;
}

int cmd_verify_basis(const Options& o) {
    std::vector<int> ns;
    if (o.n)
        ns.push_back(require_n(o));
    else
        for (int n = 2; n <= o.n_max.value_or(8); ++n) ns.push_back(n);
    bool all_ok = true;
    ordered_json reports = ordered_json::array();
    if (o.format == Format::Csv) std::cout << "n,i,j,dim\n";
    for (int n : ns) {
        const auto rep = fdr::verify_basis(n);
        all_ok = all_ok && rep.ok();
        if (o.format == Format::Json) {
            ordered_json j;
            j["n"] = n;
            j["phi_count"] = rep.phi_count;
            j["monomial_count"] = rep.monomial_count;
            j["ideal_rank"] = rep.ideal_rank;
            j["quotient_dim"] = rep.quotient_dim;
            j["count_matches"] = rep.count_matches;
            j["independent"] = rep.independent;
            j["leading_terms_ok"] = rep.leading_terms_ok;
            j["dims"] = ordered_json::array();
            for (const auto& [ij, d] : rep.dims) j["dims"].push_back({ij.first, ij.second, d});
            j["witnesses"] = rep.witnesses;
            reports.push_back(j);
        } else if (o.format == Format::Csv) {
            for (const auto& [ij, d] : rep.dims) std::cout << n << ',' << ij.first << ',' << ij.second << ',' << d << '\n';
        } else {
            std::cout << "n=" << n << "  |Phi|=" << rep.phi_count << "  dim=" << rep.quotient_dim
                      << "  count " << (rep.count_matches ? "ok" : "MISMATCH") << ", independence "
                      << (rep.independent ? "ok" : "FAIL") << ", leading terms " << (rep.leading_terms_ok ? "ok" : "FAIL")
                      << '\n';
            for (int i = 0; i < n; ++i) {
                std::cout << "   ";
                for (int j = 0; j < n; ++j) {
                    auto it = rep.dims.find({i, j});
                    char cell[16];
                    std::snprintf(cell, sizeof cell, "%7llu",
                                  static_cast<unsigned long long>(it == rep.dims.end() ? 0 : it->second));
                    std::cout << cell;
                }
                std::cout << '\n';
            }
            for (const auto& w : rep.witnesses) std::cout << "   " << w << '\n';
        }
    }
    if (o.format == Format::Json) {
        auto j = document("verify-basis");
        j["reports"] = reports;
        j["ok"] = all_ok;
        emit_json(j);
    }
    return all_ok ? kOk : kCheckFailed;
}

int cmd_frobenius(const Options& o) {
    const int n = require_n(o);
    if (o.k) {
        const int k = *o.k, x = o.x.value_or(0), t = o.t.value_or(0);
        if (!fdr::frob_v_valid(n, k, x, t)) throw InputError("no V(n,k,x,y) for these parameters");
        const auto f = fdr::frob_V(n, k, x, t);
        if (o.format == Format::Json) {
            auto j = document("frobenius");
            j["n"] = n;
            j["k"] = k;
            j["x"] = x;
            j["y"] = t;
            j["schur"] = f.to_string();
            j["dimension"] = f.dimension().get_str();
            emit_json(j);
        } else {
            std::cout << f.to_string() << '\n';
        }
        return kOk;
    }
    const auto lhs = fdr::frob_fdr(n);
    const auto rhs = fdr::grfrob_product_side(n);
    std::set<std::pair<int, int>> keys;
    for (const auto& [ij, f] : lhs) keys.insert(ij);
    for (const auto& [ij, f] : rhs) keys.insert(ij);
    auto at = [](const fdr::BigradedSchur& b, std::pair<int, int> ij) {
        auto it = b.find(ij);
        return it == b.end() ? fdr::SchurExpansion{} : it->second;
    };
    switch (o.format) {
        case Format::Json: {
            auto j = document("frobenius");
            j["n"] = n;
            j["entries"] = ordered_json::array();
            for (auto ij : keys)
                j["entries"].push_back({{"i", ij.first},
                                        {"j", ij.second},
                                        {"frob_fdr", at(lhs, ij).to_string()},
                                        {"product_side", at(rhs, ij).to_string()},
                                        {"equal", at(lhs, ij) == at(rhs, ij)}});
            emit_json(j);
            break;
        }
        case Format::Csv:
            std::cout << "i,j,frob_fdr,product_side\n";
            for (auto ij : keys)
                std::cout << ij.first << ',' << ij.second << ",\"" << at(lhs, ij).to_string() << "\",\""
                          << at(rhs, ij).to_string() << "\"\n";
            break;
        case Format::Text:
            for (auto ij : keys) {
                const auto a = at(lhs, ij), b = at(rhs, ij);
                std::cout << "q^" << ij.first << " t^" << ij.second << ": " << a.to_string();
                if (a != b) std::cout << "   [product side: " << b.to_string() << "]";
                std::cout << '\n';
            }
    }
    return kOk;
}

int cmd_sieve(const Options& o) {
    const int n = require_n(o);
    const std::vector<std::pair<std::string, fdr::QPolynomial>> polys = {
        {"q^C(n,2) fd_top(n)", fdr::theorem_polynomial(n)}, {"C_n(q)", fdr::q_catalan(n)}};
    bool all_ok = true;
    ordered_json checks = ordered_json::array();
    if (o.format == Format::Csv) std::cout << "polynomial,d,fixed,matches\n";
    for (const auto& [name, p] : polys) {
        const auto rep = fdr::csp_check(n, p);
        all_ok = all_ok && rep.ok();
        if (o.format == Format::Json) {
            ordered_json j;
            j["name"] = name;
            j["polynomial"] = rep.polynomial.to_string();
            j["reduced"] = rep.reduced.to_string();
            j["orbit_polynomial"] = rep.orbit_polynomial.to_string();
            j["congruence"] = rep.congruence;
            j["rows"] = ordered_json::array();
            for (const auto& r : rep.rows)
                j["rows"].push_back({{"d", r.d}, {"fixed", r.fixed}, {"matches", r.matches}, {"residue", r.residue.to_string()}});
            j["ok"] = rep.ok();
            checks.push_back(j);
        } else if (o.format == Format::Csv) {
            for (const auto& r : rep.rows) std::cout << '"' << name << "\"," << r.d << ',' << r.fixed << ',' << r.matches << '\n';
        } else {
            std::cout << name << " = " << rep.polynomial.to_string() << '\n';
            std::cout << "  mod q^" << n - 1 << "-1: " << rep.reduced.to_string() << '\n';
            std::cout << "  orbit polynomial: " << rep.orbit_polynomial.to_string() << '\n';
            for (const auto& r : rep.rows)
                std::cout << "  d=" << r.d << "  fixed=" << r.fixed << "  " << (r.matches ? "ok" : "MISMATCH") << '\n';
            std::cout << "  " << (rep.ok() ? "cyclic sieving holds" : "cyclic sieving FAILS") << '\n';
        }
    }
    if (o.format == Format::Json) {
        auto j = document("sieve");
        j["n"] = n;
        j["x_n_size"] = fdr::x_set(n).size();
        j["orbits"] = fdr::rotation_orbits(n).size();
        j["checks"] = checks;
        emit_json(j);
    }
    return all_ok ? kOk : kCheckFailed;
}

int cmd_congruence(const Options& o) {
    const int n = require_n(o);
    const auto rep = fdr::problem1_check(n);
    switch (o.format) {
        case Format::Json: {
            auto j = document("congruence");
            j["n"] = n;
            j["lhs"] = rep.lhs.to_string();
            j["rhs"] = rep.rhs.to_string();
            j["remainder_mod_q^(n-1)-1"] = rep.remainder_n_minus_1.to_string();
            j["remainder_mod_q^n-1"] = rep.remainder_n.to_string();
            j["zero_mod_q^(n-1)-1"] = rep.zero_mod_n_minus_1();
            j["zero_mod_q^n-1"] = rep.zero_mod_n();
            emit_json(j);
            break;
        }
        case Format::Csv:
            std::cout << "n,modulus,remainder\n"
                      << n << ",q^" << n - 1 << "-1,\"" << rep.remainder_n_minus_1.to_string() << "\"\n"
                      << n << ",q^" << n << "-1,\"" << rep.remainder_n.to_string() << "\"\n";
            break;
        case Format::Text:
            std::cout << "q^C(n,2) fd_top(n) = " << rep.lhs.to_string() << '\n';
            std::cout << "C_n(q)             = " << rep.rhs.to_string() << '\n';
            std::cout << "difference mod q^" << n - 1 << "-1: " << rep.remainder_n_minus_1.to_string() << '\n';
            std::cout << "difference mod q^" << n << "-1: " << rep.remainder_n.to_string() << '\n';
    }
    return rep.zero_mod_n_minus_1() ? kOk : kCheckFailed;
}

int cmd_report(const Options& o) {
    fdr::acceptance::Config cfg;
    cfg.seed = o.seed;
    cfg.n_max = o.n_max;
    const auto results = fdr::acceptance::run_all(cfg);
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.passed;
    switch (o.format) {
        case Format::Json: {
            auto j = document("report");
            j["seed"] = o.seed;
            if (o.n_max) j["n_max"] = *o.n_max;
            j["criteria"] = ordered_json::array();
            for (const auto& r : results)
                j["criteria"].push_back({{"id", r.id},
                                         {"title", r.title},
                                         {"passed", r.passed},
                                         {"seconds", r.seconds},
                                         {"details", r.details}});
            j["all_passed"] = all_ok;
            emit_json(j);
            break;
        }
        case Format::Csv:
            std::cout << "id,passed,seconds,title\n";
            for (const auto& r : results)
                std::cout << r.id << ',' << (r.passed ? "true" : "false") << ',' << r.seconds << ",\"" << r.title << "\"\n";
            break;
        case Format::Text:
            for (const auto& r : results) {
                char timing[32];
                std::snprintf(timing, sizeof timing, "%8.2fs", r.seconds);
                std::cout << (r.passed ? "PASS " : "FAIL ") << timing << "  " << r.id << ". " << r.title << '\n';
            }
            std::cout << (all_ok ? "all criteria pass" : "some criteria fail") << '\n';
    }
    return all_ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermionic diagonal coinvariants: noncrossing basis tools"};
    app.require_subcommand(1);
    Options o;
    const std::map<std::string, Format> formats = {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    };
    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "ambient n"); };

    auto* e = app.add_subcommand("enumerate", "list Phi(n) (or Psi(n) with --all)");
    add_n(e);
    e->add_option("--k", o.k, "number of 2-element blocks");
    e->add_option("--t", o.t, "number of theta-labelled singletons");
    e->add_option("--x", o.x, "number of xi'-labelled singletons");
    e->add_option("--bidegree", o.bidegree, "keep G_pi of bidegree (theta, xi')")->expected(2);
    e->add_flag("--count", o.count, "print the count only");
    e->add_flag("--all", o.all, "include crossing partitions");
    common(e);

    auto* g = app.add_subcommand("gpi", "G_pi by both constructions");
    add_n(g);
    g->add_option("--pi", o.pi, "partition, e.g. 1:t/2,5/3,4/6,8/7:x")->required();
    common(g);

    auto* s = app.add_subcommand("straighten", "expand sigma . G_pi in the noncrossing basis");
    add_n(s);
    s->add_option("--pi", o.pi, "partition in Phi(n)")->required();
    s->add_option("--sigma", o.sigma, "permutation of [n-1], one-line or cycles")->required();
    s->add_flag("--oracle", o.oracle, "compare with the multivector and with reduce_to_basis");
    s->add_option("--max-rewrites", o.max_rewrites, "rewrite cap");
    common(s);

    auto* v = app.add_subcommand("verify-basis", "exact rank verification of the basis");
    add_n(v);
    v->add_option("--n-max", o.n_max, "verify n = 2..N when --n is absent (default 8)");
    common(v);

    auto* f = app.add_subcommand("frobenius", "bigraded Frobenius image, or V(n,k,x,y) with --k");
    add_n(f);
    f->add_option("--k", o.k, "number of 2-element blocks");
    f->add_option("--x", o.x, "number of xi'-labelled singletons");
    f->add_option("--t", o.t, "number of theta-labelled singletons");
    common(f);

    auto* sv = app.add_subcommand("sieve", "cyclic sieving on X_n");
    add_n(sv);
    common(sv);

    auto* c = app.add_subcommand("congruence", "q^C(n,2) fd_top(n) against C_n(q)");
    add_n(c);
    common(c);

    auto* r = app.add_subcommand("report", "run every acceptance criterion");
    r->add_option("--n-max", o.n_max, "cap every range at this n");
    r->add_option("--seed", o.seed, "sampling seed");
    common(r);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (e->parsed()) return cmd_enumerate(o);
        if (g->parsed()) return cmd_gpi(o);
        if (s->parsed()) return cmd_straighten(o);
        if (v->parsed()) return cmd_verify_basis(o);
        if (f->parsed()) return cmd_frobenius(o);
        if (sv->parsed()) return cmd_sieve(o);
        if (c->parsed()) return cmd_congruence(o);
        if (r->parsed()) return cmd_report(o);
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
