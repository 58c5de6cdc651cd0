// pa: command-line front end for partition algebra computations.
// Exit status: 0 ok, 1 invalid input, 2 internal failure.

#include "pa/acceptance.hpp"
#include "pa/cellmod.hpp"
#include "pa/combinatorics.hpp"
#include "pa/diagrams.hpp"
#include "pa/fock.hpp"
#include "pa/repthy.hpp"
#include "pa/scalars.hpp"
#include "pa/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace pa;

namespace {

struct Common {
    std::string d = "1", delta = "0", label;
    int p = 0;
    bool json = false;
};

FieldElement parse_delta(const Common& c) {
    if (c.p < 0 || (c.p != 0 && !is_prime(c.p))) throw std::invalid_argument("--p must be 0 or a prime");
    return FieldElement::parse(c.delta, c.p);
}

void add_field_opts(CLI::App* sub, Common& c) {
    sub->add_option("--delta", c.delta, "parameter: integer, a/b, or residue mod p");
    sub->add_option("--p", c.p, "characteristic (0 or prime)");
    sub->add_flag("--json", c.json, "JSON output");
}

void add_degree_opts(CLI::App* sub, Common& c) {
    sub->add_option("--d", c.d, "degree: r or r+1/2")->required();
    add_field_opts(sub, c);
}

json partitions_json(const std::vector<Partition>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const ExactMatrix& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        a.push_back(row);
    }
    return a;
}

std::string field_name(int p) { return p ? "GF(" + std::to_string(p) + ")" : "Q"; }

int cmd_diag_mul(const std::string& a, const std::string& b, const Common& c, bool has_delta) {
    Diagram x = parse_diagram(a), y = parse_diagram(b);
    if (x.degree() != y.degree()) {
        // allow shorthand with trailing identity strands
        int n = std::max(x.degree(), y.degree());
        x = parse_diagram(a, n);
        y = parse_diagram(b, n);
    }
    auto [prod, e] = concatenate(x, y);
    json out = {{"degree", prod.degree()}, {"diagram", format_diagram(prod)}, {"delta_exponent", e}};
    std::string coeff = e == 0 ? "1" : e == 1 ? "delta" : "delta^" + std::to_string(e);
    if (has_delta) {
        FieldElement delta = parse_delta(c);
        AlgebraElement r = multiply(AlgebraElement::basis(x, delta, is_half(x)), AlgebraElement::basis(y, delta, is_half(y)));
        json terms = json::array();
        for (auto& [d, k] : r.terms()) terms.push_back({{"diagram", format_diagram(d)}, {"coeff", k.str()}});
        out["delta"] = delta.str();
        out["p"] = c.p;
        out["half"] = r.half();
        out["terms"] = terms;
        coeff = r.terms().empty() ? "0" : r.terms().begin()->second.str();
    }
    if (c.json) {
        std::cout << out.dump(2) << "\n";
    } else if (has_delta && coeff == "0") {
        std::cout << "0\n";
    } else {
        std::cout << coeff << " * " << format_diagram(prod) << "\n";
    }
    return 0;
}

int cmd_gram(const Common& c, bool dim_only) {
    Degree d = Degree::parse(c.d);
    FieldElement delta = parse_delta(c);
    Partition l = parse_partition(c.label);
    if (!is_admissible_label(l, d, delta))
        throw std::invalid_argument("label " + to_string(l) + " is not in the label set of P_" + d.str() + "(" + delta.str() + ")");
    long dim = cell_dim(l, d);
    long rank = gram_rank(l, d, delta);
    long tabs = static_cast<long>(enumerate_tableaux(d, l).size());
    if (dim_only) {
        if (c.json)
            std::cout << json{{"label", to_string(l)}, {"d", d.str()}, {"delta", delta.str()}, {"p", c.p},
                              {"cell_dim", dim}, {"simple_dim", rank}, {"tableaux", tabs}}.dump(2)
                      << "\n";
        else
            std::cout << "dim cell " << to_string(l) << " = " << dim << "\ndim simple = " << rank
                      << "\ntableaux = " << tabs << "\n";
        return 0;
    }
    ExactMatrix G = gram_matrix(l, d, delta);
    if (c.json) {
        std::cout << json{{"label", to_string(l)}, {"d", d.str()}, {"delta", delta.str()}, {"p", c.p},
                          {"cell_dim", dim}, {"rank", rank}, {"matrix", matrix_json(G)}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "Gram matrix of " << to_string(l) << " in P_" << d.str() << "(" << delta.str() << ") over "
              << field_name(c.p) << "\n";
    size_t w = 1;
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < G.cols(); ++j) w = std::max(w, G.at(i, j).str().size());
    for (int i = 0; i < G.rows(); ++i) {
        for (int j = 0; j < G.cols(); ++j) {
            std::string s = G.at(i, j).str();
            std::cout << std::string(w - s.size() + 1, ' ') << s;
        }
        std::cout << "\n";
    }
    std::cout << "rank " << rank << ", cell dim " << dim << "\n";
    return 0;
}

int cmd_decmat(const Common& c) {
    Degree d = Degree::parse(c.d);
    FieldElement delta = parse_delta(c);
    auto D = decomposition_matrix(d, delta);
    if (c.json) {
        std::cout << json{{"d", d.str()}, {"delta", delta.str()}, {"p", c.p}, {"rows", partitions_json(D.rows)},
                          {"cols", partitions_json(D.cols)}, {"entries", D.entry}}.dump(2)
                  << "\n";
    } else {
        std::cout << D.table();
    }
    return 0;
}

int cmd_blocks(const Common& c, const std::string& method) {
    Degree d = Degree::parse(c.d);
    FieldElement delta = parse_delta(c);
    BlockPartition b;
    if (method == "profile") b = blocks(d, delta);
    else if (method == "moves") b = blocks_via_moves(d, delta);
    else if (method == "weights") b = blocks_via_weights(d, delta);
    else throw std::invalid_argument("--method must be profile, moves or weights");
    if (c.json) {
        json a = json::array();
        for (auto& cls : b) a.push_back(partitions_json(cls));
        std::cout << json{{"d", d.str()}, {"delta", delta.str()}, {"p", c.p}, {"blocks", a}}.dump(2) << "\n";
    } else {
        for (auto& cls : b) {
            for (size_t i = 0; i < cls.size(); ++i) std::cout << (i ? " " : "") << to_string(cls[i]);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_semisimple(const Common& c, bool oracle) {
    Degree d = Degree::parse(c.d);
    FieldElement delta = parse_delta(c);
    bool s = is_semisimple(d, delta);
    json out = {{"d", d.str()}, {"delta", delta.str()}, {"p", c.p}, {"semisimple", s}};
    if (oracle) out["oracle"] = semisimple_oracle(d, delta);
    if (c.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (s ? "true" : "false") << "\n";
        if (oracle) std::cout << "oracle: " << (out["oracle"].get<bool>() ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_tabweights(const Common& c) {
    Degree d = Degree::parse(c.d);
    FieldElement delta = parse_delta(c);
    Partition l = parse_partition(c.label);
    if (size(l) > d.floor()) throw std::invalid_argument("|label| exceeds floor(d)");
    json a = json::array();
    for (auto& t : enumerate_tableaux(d, l)) {
        std::vector<std::string> steps, wt;
        for (auto& x : t) steps.push_back(to_string(x));
        for (auto& x : jm_weight(t, delta)) wt.push_back(x.str());
        a.push_back({{"tableau", steps}, {"weight", wt}});
    }
    if (c.json) {
        std::cout << json{{"d", d.str()}, {"label", to_string(l)}, {"delta", delta.str()}, {"p", c.p}, {"tableaux", a}}.dump(2)
                  << "\n";
        return 0;
    }
    for (auto& e : a) {
        std::string s;
        for (auto& x : e["tableau"]) s += (s.empty() ? "" : " ") + x.get<std::string>();
        std::string w;
        for (auto& x : e["weight"]) w += (w.empty() ? "" : ",") + x.get<std::string>();
        std::cout << s << "  ->  (" << w << ")\n";
    }
    std::cout << a.size() << " tableaux\n";
    return 0;
}

int cmd_arrow(const Common& c, const std::string& mu, int lo, int hi, int shift) {
    FieldElement delta = parse_delta(c);
    Partition l = parse_partition(c.label);
    ArrowDiagram a = mu.empty() ? arrow_diagram(l, delta) : mu_projection(l, parse_partition(mu), delta);
    if (shift) a = tau(a, shift);
    if (lo > hi) throw std::invalid_argument("--lo must not exceed --hi");
    std::string pic = a.render(lo, hi);
    if (c.json) {
        std::cout << json{{"label", to_string(l)}, {"delta", delta.str()}, {"p", c.p}, {"wedge", a.wedge.str()},
                          {"vees", a.vee_positions(static_cast<int>(l.size()) + 1)}, {"render", pic}}.dump(2)
                  << "\n";
    } else {
        std::cout << pic;
        if (!pic.empty() && pic.back() != '\n') std::cout << "\n";
    }
    return 0;
}

WedgeOrder parse_order(const std::string& s) {
    if (s == "last") return WedgeOrder::Last;
    if (s == "first") return WedgeOrder::First;
    if (s == "interleaved") return WedgeOrder::Interleaved;
    throw std::invalid_argument("--order must be last, first or interleaved");
}

json fock_json(const FockVector& v) {
    json a = json::array();
    for (auto& [key, coeff] : v) {
        json terms = json::object();
        for (auto& [e, k] : coeff.terms()) terms[std::to_string(e)] = k.get_str();
        a.push_back({{"level", key.k}, {"label", to_string(key.lambda)}, {"coeff", coeff.str()}, {"q_terms", terms}});
    }
    return a;
}

// word tokens: E<i>, F<i>, K<i>, K<i>^-1, Kd, Kd^-1; rightmost applied first
int cmd_fock_act(const Common& c, int r, int k, const std::string& word, const std::string& order) {
    FockContext ctx{r, parse_delta(c), parse_order(order)};
    if (r < 0 || k < 0) throw std::invalid_argument("--r and --k must be nonnegative");
    Partition l = parse_partition(c.label);
    if (size(l) > k) throw std::invalid_argument("|label| exceeds the level k");
    std::vector<std::string> tokens;
    std::istringstream is(word);
    for (std::string t; is >> t;) tokens.push_back(t);
    FockVector v = basis_vector({k, l});
    bool truncated = false;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        std::string t = *it;
        int power = 1;
        if (auto pos = t.find("^-1"); pos != std::string::npos && pos + 3 == t.size()) {
            power = -1;
            t = t.substr(0, pos);
        }
        if (t == "Kd") {
            v = apply_Kd(ctx, v, power);
            continue;
        }
        if (t.size() < 2 || (t[0] != 'E' && t[0] != 'F' && t[0] != 'K'))
            throw std::invalid_argument("bad operator token '" + *it + "'");
        long i;
        try {
            size_t used = 0;
            i = std::stol(t.substr(1), &used);
            if (used != t.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad residue in token '" + *it + "'");
        }
        if (ctx.p() > 0) i = ((i % ctx.p()) + ctx.p()) % ctx.p();
        if (t[0] != 'K' && power != 1) throw std::invalid_argument("only K tokens take ^-1");
        if (t[0] == 'E') v = apply_E(ctx, i, v, &truncated);
        else if (t[0] == 'F') v = apply_F(ctx, i, v);
        else v = apply_K(ctx, i, v, power);
    }
    if (c.json) {
        std::cout << json{{"r", r}, {"delta", ctx.delta.str()}, {"p", c.p}, {"level", k}, {"label", to_string(l)},
                          {"word", word}, {"truncated", truncated}, {"result", fock_json(v)}}.dump(2)
                  << "\n";
    } else {
        std::cout << (v.empty() ? "0" : to_string(v)) << "\n";
        if (truncated) std::cout << "(terms below level 0 dropped)\n";
    }
    return 0;
}

int cmd_fock_relcheck(const Common& c, int r, int levels, const std::string& order) {
    FockContext ctx{r, parse_delta(c), parse_order(order)};
    if (r < 0 || levels < 0) throw std::invalid_argument("--r and --levels must be nonnegative");
    auto rep = check_relations(ctx, levels, relation_residues(ctx, levels));
    if (c.json) {
        json f = json::array();
        for (auto& x : rep.failures)
            f.push_back({{"relation", x.relation}, {"i", x.i}, {"j", x.j}, {"level", x.vector.k},
                         {"label", to_string(x.vector.lambda)}, {"pass", x.pass}});
        std::cout << json{{"r", r}, {"delta", ctx.delta.str()}, {"p", c.p}, {"levels", levels}, {"checked", rep.checked},
                          {"failed", rep.failed}, {"skipped", rep.skipped}, {"ok", rep.ok()}, {"failures", f}}.dump(2)
                  << "\n";
    } else {
        std::cout << "checked " << rep.checked << ", failed " << rep.failed << ", skipped " << rep.skipped << "\n";
        for (auto& x : rep.failures)
            std::cout << "  FAIL " << x.relation << " i=" << x.i << " j=" << x.j << " on [" << x.vector.k << ", "
                      << to_string(x.vector.lambda) << "]\n";
    }
    return rep.ok() ? 0 : 2;
}

int cmd_verify(const std::vector<int>& ids, bool as_json) {
    std::vector<CriterionResult> res;
    auto show = [&](const CriterionResult& r) {
        if (!as_json) std::cout << format_result(r) << std::endl;
    };
    if (ids.empty()) {
        res = run_acceptance(show);
    } else {
        for (int id : ids) {
            res.push_back(run_criterion(id));
            show(res.back());
        }
    }
    int failed = 0;
    for (auto& r : res) failed += !r.pass;
    if (as_json) {
        json a = json::array();
        for (auto& r : res)
            a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        std::cout << json{{"criteria", a}, {"passed", res.size() - failed}, {"total", res.size()}}.dump(2) << "\n";
    } else {
        std::cout << (res.size() - failed) << "/" << res.size() << " criteria passed\n";
    }
    return failed ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition algebra toolkit"};
    app.require_subcommand(1);
    Common c;

    std::string da, db;
    auto* mul = app.add_subcommand("diag-mul", "concatenate two diagrams");
    mul->add_option("a", da, "top diagram, e.g. \"{1,1'},{2,2'}\"")->required();
    mul->add_option("b", db, "bottom diagram")->required();
    auto* mul_delta = mul->add_option("--delta", c.delta, "evaluate the coefficient at this parameter");
    mul->add_option("--p", c.p, "characteristic (0 or prime)");
    mul->add_flag("--json", c.json, "JSON output");

    auto* gram = app.add_subcommand("gram", "Gram matrix of a cell module");
    add_degree_opts(gram, c);
    gram->add_option("--label", c.label, "partition, e.g. 2,1")->required();

    auto* dim = app.add_subcommand("dim", "cell and simple dimensions");
    add_degree_opts(dim, c);
    dim->add_option("--label", c.label, "partition")->required();

    auto* dec = app.add_subcommand("decmat", "decomposition matrix (p = 0 or p > floor(d))");
    add_degree_opts(dec, c);

    std::string method = "profile";
    auto* blk = app.add_subcommand("blocks", "block partition of the label set");
    add_degree_opts(blk, c);
    blk->add_option("--method", method, "profile | moves | weights");

    bool oracle = false;
    auto* ss = app.add_subcommand("semisimple", "semisimplicity of P_d(delta)");
    add_degree_opts(ss, c);
    ss->add_flag("--oracle", oracle, "also evaluate all Gram determinants");

    auto* tw = app.add_subcommand("tabweights", "tableaux with JM weights");
    add_degree_opts(tw, c);
    tw->add_option("--label", c.label, "partition")->required();

    std::string mu;
    int lo = -6, hi = 6, shift = 0;
    auto* arr = app.add_subcommand("arrow", "ASCII arrow diagram");
    add_field_opts(arr, c);
    arr->add_option("--label", c.label, "partition")->required();
    arr->add_option("--mu", mu, "render the mu-projection (p > |mu|)");
    arr->add_option("--lo", lo, "lowest above-label shown");
    arr->add_option("--hi", hi, "highest above-label shown");
    arr->add_option("--tau", shift, "apply tau this many times (+1 / -1)");

    int r = 2, k = 0, levels = 3;
    std::string word, order = "last";
    auto* fa = app.add_subcommand("fock-act", "apply an operator word to a Fock basis vector");
    add_field_opts(fa, c);
    fa->add_option("--r", r, "rank parameter r");
    fa->add_option("--k", k, "level of the basis vector");
    fa->add_option("--label", c.label, "partition");
    fa->add_option("--word", word, "e.g. \"E1 F0 K2^-1 Kd\", applied right to left")->required();
    fa->add_option("--order", order, "wedge reading order: last | first | interleaved");

    auto* fr = app.add_subcommand("fock-relcheck", "check the quantum group relations");
    add_field_opts(fr, c);
    fr->add_option("--r", r, "rank parameter r");
    fr->add_option("--levels", levels, "highest level k");
    fr->add_option("--order", order, "wedge reading order: last | first | interleaved");

    std::vector<int> ids;
    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_option("--criterion", ids, "only these criteria");
    ver->add_flag("--json", c.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*mul) return cmd_diag_mul(da, db, c, mul_delta->count() > 0);
        if (*gram) return cmd_gram(c, false);
        if (*dim) return cmd_gram(c, true);
        if (*dec) return cmd_decmat(c);
        if (*blk) return cmd_blocks(c, method);
        if (*ss) return cmd_semisimple(c, oracle);
        if (*tw) return cmd_tabweights(c);
        if (*arr) return cmd_arrow(c, mu, lo, hi, shift);
        if (*fa) return cmd_fock_act(c, r, k, word, order);
        if (*fr) return cmd_fock_relcheck(c, r, levels, order);
        if (*ver) return cmd_verify(ids, c.json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
