#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permwqo/antichains.hpp"
#include "permwqo/decomposition.hpp"
#include "permwqo/errors.hpp"
#include "permwqo/graph.hpp"
#include "permwqo/grid.hpp"
#include "permwqo/io.hpp"
#include "permwqo/labels.hpp"
#include "permwqo/perm_class.hpp"
#include "permwqo/permutation.hpp"
#include "permwqo/suite.hpp"

using namespace permwqo;
using nlohmann::json;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kGuard = 3 };

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_n;
    std::string matrix, klass, poset, dot;
};

Globals g;

std::size_t cap(std::size_t fallback) { return g.max_n.value_or(fallback); }

json perm_json(const Permutation& p) { return std::vector<int>(p.begin(), p.end()); }

/// A file path, or the JSON text itself.
std::string file_or_inline(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return io::read_file(arg);
    return arg;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void write_dot(const std::string& text) {
    if (g.dot.empty() || g.dot == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(g.dot);
    if (!out) throw InvalidInput("cannot write " + g.dot);
    out << text;
}

int verdict(bool b) { return b ? kTrue : kFalse; }

/// --class file, or --basis "2413,3142"; the empty class spec means Av().
PermClass load_class(const std::string& basis) {
    if (!g.klass.empty()) return io::parse_class(file_or_inline(g.klass));
    std::vector<Permutation> elements;
    std::stringstream in(basis);
    for (std::string item; std::getline(in, item, ',');)
        if (item.find_first_not_of(" ") != std::string::npos) elements.push_back(parse_permutation(item));
    return PermClass(std::move(elements));
}

ZeroPmOneMatrix load_matrix() {
    if (g.matrix.empty()) throw InvalidInput("--matrix is required");
    if (g.matrix == "X") return ZeroPmOneMatrix::x_matrix();
    return io::parse_matrix(file_or_inline(g.matrix));
}

FinitePoset load_poset() {
    if (g.poset.empty()) return FinitePoset::two_antichain();
    return io::parse_poset(file_or_inline(g.poset));
}

/// Exact decimal or p/q parsing, so reduce never compares rounded values.
Rational parse_rational(const std::string& s) {
    auto to_ll = [&](const std::string& t) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not a number: '" + s + "'");
        }
        if (used != t.size()) throw InvalidInput("not a number: '" + s + "'");
        return v;
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const long long den = to_ll(s.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
        return Rational(to_ll(s.substr(0, slash)), den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        if (frac.size() > 15) throw InvalidInput("too many decimal places in '" + s + "'");
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::string whole = s.substr(0, dot);
        const bool negative = !whole.empty() && whole[0] == '-';
        const long long w = whole.empty() || whole == "-" || whole == "+" ? 0 : to_ll(whole);
        const long long f = frac.empty() ? 0 : to_ll(frac);
        Rational r(w);
        r += Rational(negative ? -f : f, scale);
        return r;
    }
    return Rational(to_ll(s));
}

json tree_json(const SubstitutionTree& t) {
    using K = SubstitutionTree::Kind;
    if (t.kind == K::leaf) return "leaf";
    json children = json::array();
    for (const auto& c : t.children) children.push_back(tree_json(c));
    const char* kind = t.kind == K::sum ? "sum" : t.kind == K::skew ? "skew" : "simple";
    json out{{"kind", kind}, {"children", children}};
    if (t.kind == K::simple) out["skeleton"] = perm_json(t.skeleton);
    return out;
}

json intervals_json(const std::vector<Interval>& xs) {
    json out = json::array();
    for (auto r : xs) out.push_back({r.first, r.last});
    return out;
}

std::string witness_str(const Witness& w) {
    std::string out;
    for (auto i : w) out += (out.empty() ? "" : " ") + std::to_string(i);
    return out;
}

MembershipOracle named_oracle(const std::string& name, const std::string& basis) {
    if (name == "class") {
        auto c = load_class(basis);
        return [c](const Permutation& p) { return c.contains(p); };
    }
    if (name == "linear-forest") return [](const Permutation& p) { return is_linear_forest(inversion_graph(p)); };
    if (name == "forest") return [](const Permutation& p) { return is_forest(inversion_graph(p)); };
    if (name == "bipartite") return [](const Permutation& p) { return is_bipartite(inversion_graph(p)); };
    if (name == "cograph") return [](const Permutation& p) { return is_cograph(inversion_graph(p)); };
    if (name == "skew-merged-separable") {
        const PermClass merged({Permutation{2, 1, 4, 3}, Permutation{3, 4, 1, 2}});
        const PermClass sep({Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2}});
        return [merged, sep](const Permutation& p) { return merged.contains(p) && sep.contains(p); };
    }
    if (name == "plus-one") {
        auto c = load_class(basis);
        return [c](const Permutation& p) { return plus_one_member(p, c); };
    }
    throw InvalidInput("unknown oracle '" + name +
                       "' (class, plus-one, linear-forest, forest, bipartite, cograph, skew-merged-separable)");
}

ClosureKind parse_closure(const std::string& s) {
    if (s == "sum") return ClosureKind::sum;
    if (s == "skew") return ClosureKind::skew;
    if (s == "substitution") return ClosureKind::substitution;
    if (s == "separable") return ClosureKind::separable;
    throw InvalidInput("unknown closure kind '" + s + "'");
}

Symmetry parse_symmetry(const std::string& s) {
    if (s == "inverse") return Symmetry::inverse;
    if (s == "rc" || s == "reverse-complement") return Symmetry::reverse_complement;
    if (s == "rc-inverse") return Symmetry::rc_inverse;
    throw InvalidInput("unknown symmetry '" + s + "' (inverse, rc, rc-inverse)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation patterns, labeled containment, inversion graphs and grid classes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    app.set_help_all_flag("--help-all", "Help for every verb");
    app.add_flag("--json", g.json, "Print one JSON object");
    app.add_option("--seed", g.seed, "Seed for sampled checks")->default_val(0);
    app.add_option("--max-n", g.max_n, "Override the size guard of the chosen verb");
    app.add_option("--matrix", g.matrix, "Matrix JSON file (or X for the X-matrix)");
    app.add_option("--class", g.klass, "Class JSON file");
    app.add_option("--poset", g.poset, "Poset JSON file (default: the 2-antichain o, *)");
    app.add_option("--dot", g.dot, "Write DOT output to this file");

    std::string a1, a2, which, basis, kind, oracle, family;
    std::vector<std::string> rest;
    std::size_t n = 0, nmax = 0, count = 0, length = 0;
    std::optional<std::size_t> evidence;
    bool members = false, classify_flag = false, autos_flag = false, preimages_flag = false, labels_flag = false;
    bool verify = false, list = false;
    std::size_t jobs = 1;
    std::vector<std::string> only, expect_fail;

    auto* contains_cmd = app.add_subcommand("contains", "Pattern containment with a witness");
    contains_cmd->add_option("sigma", a1)->required();
    contains_cmd->add_option("pi", a2)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce distinct numbers (integers, decimals, p/q)");
    reduce_cmd->add_option("values", rest)->allow_extra_args();

    auto* sym_cmd = app.add_subcommand("symmetry", "inverse, rc or rc-inverse");
    sym_cmd->add_option("pi", a1)->required();
    sym_cmd->add_option("which", which)->required();

    auto* dec_cmd = app.add_subcommand("decompose", "Substitution decomposition tree");
    dec_cmd->add_option("pi", a1)->required();

    auto* int_cmd = app.add_subcommand("intervals", "Proper intervals");
    int_cmd->add_option("pi", a1)->required();

    auto* simple_cmd = app.add_subcommand("simple", "Is the permutation simple");
    simple_cmd->add_option("pi", a1)->required();

    auto* inflate_cmd = app.add_subcommand("inflate", "Inflate sigma by blocks");
    inflate_cmd->add_option("sigma", a1)->required();
    inflate_cmd->add_option("blocks", rest)->required();

    auto* inv_cmd = app.add_subcommand("invgraph", "Inversion graph as DOT");
    inv_cmd->add_option("pi", a1)->required();
    inv_cmd->add_flag("--classify", classify_flag, "Print structural flags");
    inv_cmd->add_flag("--automorphisms", autos_flag, "List automorphisms");
    inv_cmd->add_flag("--preimages", preimages_flag, "List permutations with an isomorphic graph");

    auto* member_cmd = app.add_subcommand("member", "Class membership");
    member_cmd->add_option("pi", a1)->required();
    member_cmd->add_option("--basis", basis, "Comma-separated basis, e.g. 2413,3142");

    auto* enum_cmd = app.add_subcommand("enumerate", "Members of lengths 0..n as CSV");
    enum_cmd->add_option("n", n)->required();
    enum_cmd->add_option("--basis", basis);
    enum_cmd->add_flag("--members", members, "List members");

    auto* basis_cmd = app.add_subcommand("basis", "Minimal nonmembers of a named oracle");
    basis_cmd->add_option("oracle", oracle)->required();
    basis_cmd->add_option("nmax", nmax)->required();
    basis_cmd->add_option("--basis", basis);

    auto* plus_cmd = app.add_subcommand("plus-one-basis", "Basis of the one-point extension");
    plus_cmd->add_option("--basis", basis);
    plus_cmd->add_option("--evidence", evidence, "Search only to this length and report a partial basis");

    auto* closure_cmd = app.add_subcommand("closure-member", "Sum, skew, substitution or separable closure");
    closure_cmd->add_option("pi", a1)->required();
    closure_cmd->add_option("kind", kind)->required();
    closure_cmd->add_option("--basis", basis);

    auto* gm_cmd = app.add_subcommand("grid-member", "Monotone grid class membership");
    gm_cmd->add_option("pi", a1)->required();

    auto* geo_cmd = app.add_subcommand("geom-member", "Geometric grid class membership");
    geo_cmd->add_option("pi", a1)->required();

    auto* ge_cmd = app.add_subcommand("grid-enum", "Grid class members of lengths 0..n as CSV");
    ge_cmd->add_option("n", n)->required();
    ge_cmd->add_option("kind", kind)->default_val("monotone");
    ge_cmd->add_flag("--members", members);

    auto* cell_cmd = app.add_subcommand("cellgraph", "Cell graph of --matrix as DOT");

    auto* grd_cmd = app.add_subcommand("griddability", "Status of the sum-of-21 and skew-of-12 chains");
    grd_cmd->add_option("depth", n)->required();
    grd_cmd->add_option("--basis", basis);

    auto* anti_cmd = app.add_subcommand("antichain", "Members of an antichain family");
    anti_cmd->add_option("family", family)->required();
    anti_cmd->add_option("--count", count, "Members 1..count")->default_val(4);
    anti_cmd->add_option("--length", length, "Only the member of this length");
    anti_cmd->add_flag("--labels", labels_flag, "Labeled members (labeled-path, widdershins)");
    anti_cmd->add_flag("--verify", verify, "Check pairwise incomparability");

    auto* lc_cmd = app.add_subcommand("labeled-contains", "Labeled containment over --poset");
    lc_cmd->add_option("sigma", a1, "Labeled permutation JSON (file or inline)")->required();
    lc_cmd->add_option("pi", a2, "Labeled permutation JSON (file or inline)")->required();

    auto* suite_cmd = app.add_subcommand("paper-suite", "Run the property battery");
    suite_cmd->alias("properties");
    suite_cmd->add_option("--jobs", jobs, "Concurrent checks")->default_val(1);
    suite_cmd->add_option("--only", only, "Run only these checks");
    suite_cmd->add_option("--expect-fail", expect_fail, "Checks known to fail; they do not affect the exit code");
    suite_cmd->add_flag("--list", list, "List check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (g.max_n) std::cerr << "warning: size guard overridden to " << *g.max_n << "; searches may be slow\n";

    try {
        if (*contains_cmd) {
            const auto sigma = parse_permutation(a1), pi = parse_permutation(a2);
            const auto w = find_occurrence(sigma, pi);
            if (g.json) {
                json out{{"contains", w.has_value()}};
                if (w) out["witness"] = *w;
                emit(out);
            } else if (w) {
                std::string vals;
                for (auto i : *w) vals += (vals.empty() ? "" : " ") + std::to_string(pi.at(i));
                std::cout << "true\nwitness positions: " << witness_str(*w) << "\nwitness entries: " << vals << '\n';
            } else {
                std::cout << "false\n";
            }
            return verdict(w.has_value());
        }
        if (*reduce_cmd) {
            std::vector<Rational> xs;
            for (const auto& s : rest) xs.push_back(parse_rational(s));
            const auto p = reduce(xs);
            if (g.json) emit({{"perm", perm_json(p)}});
            else std::cout << p.str() << '\n';
            return kTrue;
        }
        if (*sym_cmd) {
            const auto p = apply_symmetry(parse_permutation(a1), parse_symmetry(which));
            if (g.json) emit({{"perm", perm_json(p)}});
            else std::cout << p.str() << '\n';
            return kTrue;
        }
        if (*dec_cmd) {
            const auto t = decompose_tree(parse_permutation(a1));
            if (g.json) emit({{"tree", tree_json(t)}, {"term", t.str()}});
            else std::cout << t.str() << '\n';
            return kTrue;
        }
        if (*int_cmd) {
            const auto xs = intervals(parse_permutation(a1));
            if (g.json) {
                emit({{"intervals", intervals_json(xs)}});
            } else {
                for (auto r : xs) std::cout << '[' << r.first << ',' << r.last << "]\n";
            }
            return kTrue;
        }
        if (*simple_cmd) {
            const bool s = is_simple(parse_permutation(a1));
            if (g.json) emit({{"simple", s}});
            else std::cout << (s ? "true" : "false") << '\n';
            return verdict(s);
        }
        if (*inflate_cmd) {
            std::vector<Permutation> blocks;
            for (const auto& b : rest) blocks.push_back(parse_permutation(b));
            const auto p = inflate(parse_permutation(a1), blocks);
            if (g.json) emit({{"perm", perm_json(p)}});
            else std::cout << p.str() << '\n';
            return kTrue;
        }
        if (*inv_cmd) {
            const auto pi = parse_permutation(a1);
            const auto graph = inversion_graph(pi);
            json out = json::parse(to_adjacency_json(graph));
            if (classify_flag) {
                const auto c = classify(graph);
                out["classification"] = {{"is_path", c.is_path},         {"is_cycle", c.is_cycle},
                                         {"is_linear_forest", c.is_linear_forest},
                                         {"is_forest", c.is_forest},     {"is_bipartite", c.is_bipartite},
                                         {"is_connected", c.is_connected}, {"is_cograph", c.is_cograph},
                                         {"is_prime", c.is_prime}};
            }
            if (autos_flag) out["automorphisms"] = automorphisms(graph, cap(kDefaultAutomorphismCap));
            if (preimages_flag) {
                json ps = json::array();
                for (const auto& p : preimages(graph, pi.size(), cap(kDefaultPreimageCap))) ps.push_back(perm_json(p));
                out["preimages"] = ps;
            }
            if (g.json) {
                emit(out);
            } else {
                std::vector<std::string> names;
                for (auto v : pi) names.push_back(std::to_string(v));
                write_dot(to_dot(graph, nullptr, names));
                if (classify_flag || autos_flag || preimages_flag) {
                    out.erase("adjacency");
                    out.erase("n");
                    std::cerr << out.dump(2) << '\n';
                }
            }
            return kTrue;
        }
        if (*member_cmd) {
            const auto c = load_class(basis);
            const bool m = member(parse_permutation(a1), c);
            if (g.json) emit({{"member", m}, {"class", c.str()}});
            else std::cout << (m ? "true" : "false") << '\n';
            return verdict(m);
        }
        if (*enum_cmd) {
            const auto c = load_class(basis);
            std::map<std::size_t, PermSet> by_length;
            check_guard("enumerate", n, cap(kDefaultEnumerateCap));
            for (std::size_t k = 0; k <= n; ++k) by_length[k] = enumerate(c, k, cap(kDefaultEnumerateCap));
            if (g.json) {
                json out = json::array();
                for (const auto& [k, s] : by_length) {
                    json row{{"length", k}, {"count", s.size()}};
                    if (members) {
                        json ms = json::array();
                        for (const auto& p : s) ms.push_back(perm_json(p));
                        row["members"] = ms;
                    }
                    out.push_back(row);
                }
                emit({{"class", c.str()}, {"enumeration", out}});
            } else {
                std::cout << io::enumeration_csv(by_length, members);
            }
            return kTrue;
        }
        if (*basis_cmd) {
            const auto b = minimal_nonmembers(named_oracle(oracle, basis), nmax, cap(kDefaultBasisSearchCap));
            if (g.json) {
                json out = json::array();
                for (const auto& p : b) out.push_back(perm_json(p));
                emit({{"oracle", oracle}, {"searched_to", nmax}, {"basis", out}});
            } else {
                for (const auto& p : b) std::cout << p.str() << '\n';
            }
            return kTrue;
        }
        if (*plus_cmd) {
            const auto c = load_class(basis);
            const auto r = plus_one_basis(c, evidence, cap(kDefaultBasisSearchCap));
            if (g.json) {
                json out = json::parse(io::class_json(r.basis));
                out["searched_to"] = r.searched_to;
                out["bound"] = r.bound;
                out["exact"] = r.exact;
                emit(out);
            } else {
                std::cout << r.basis.str() << '\n'
                          << "searched to length " << r.searched_to << ", bound " << r.bound
                          << (r.exact ? " (exact)" : " (partial: evidence only)") << '\n';
            }
            return kTrue;
        }
        if (*closure_cmd) {
            const auto c = load_class(basis);
            const bool m = closure_member(parse_permutation(a1), c, parse_closure(kind));
            if (g.json) emit({{"member", m}, {"kind", kind}, {"class", c.str()}});
            else std::cout << (m ? "true" : "false") << '\n';
            return verdict(m);
        }
        if (*gm_cmd) {
            const auto m = load_matrix();
            const auto r = grid_member(parse_permutation(a1), m, cap(kDefaultGridCap));
            if (g.json) {
                json out{{"member", r.has_value()}};
                if (r) out["gridding"] = json::parse(io::gridded_json(*r));
                emit(out);
            } else {
                std::cout << (r ? "true" : "false") << '\n';
                if (r) std::cout << io::gridded_json(*r) << '\n';
            }
            return verdict(r.has_value());
        }
        if (*geo_cmd) {
            const auto m = load_matrix();
            const auto r = geom_member(parse_permutation(a1), m, cap(kDefaultGeomCap));
            if (g.json) {
                json out{{"member", r.has_value()}};
                if (r) out["drawing"] = json::parse(io::gridded_json(r->gridded, &r->params));
                emit(out);
            } else {
                std::cout << (r ? "true" : "false") << '\n';
                if (r) std::cout << io::gridded_json(r->gridded, &r->params) << '\n';
            }
            return verdict(r.has_value());
        }
        if (*ge_cmd) {
            const auto m = load_matrix();
            GridKind k;
            if (kind == "monotone") k = GridKind::monotone;
            else if (kind == "geometric") k = GridKind::geometric;
            else throw InvalidInput("kind must be monotone or geometric");
            std::map<std::size_t, PermSet> by_length;
            check_guard("grid-enum", n, cap(kDefaultGridEnumCap));
            for (std::size_t len = 0; len <= n; ++len) by_length[len] = enumerate_grid(m, len, k, cap(kDefaultGridEnumCap));
            if (g.json) {
                json out = json::array();
                for (const auto& [len, s] : by_length) out.push_back({{"length", len}, {"count", s.size()}});
                emit({{"matrix", json::parse(io::matrix_json(m))}, {"kind", kind}, {"enumeration", out}});
            } else {
                std::cout << io::enumeration_csv(by_length, members);
            }
            return kTrue;
        }
        if (*cell_cmd) {
            const auto m = load_matrix();
            const auto graph = cell_graph(m);
            if (g.json) {
                json out = json::parse(to_adjacency_json(graph));
                json cells = json::array();
                for (auto [c, r] : m.nonzero_cells()) cells.push_back({c, r});
                out["cells"] = cells;
                out["is_forest"] = is_forest(graph);
                emit(out);
            } else {
                std::vector<std::string> names;
                for (auto [c, r] : m.nonzero_cells()) names.push_back("(" + std::to_string(c) + "," + std::to_string(r) + ")");
                write_dot(to_dot(graph, nullptr, names));
            }
            return kTrue;
        }
        if (*grd_cmd) {
            const auto c = load_class(basis);
            const auto r = griddability_evidence(c, n, cap(9));
            if (g.json) {
                emit({{"class", c.str()}, {"sum_chain", r.sum_chain}, {"skew_chain", r.skew_chain},
                      {"verdict", "not decided"}, {"note", r.note}});
            } else {
                for (std::size_t j = 0; j < r.sum_chain.size(); ++j)
                    std::cout << "j=" << j + 1 << " sum-of-21 " << (r.sum_chain[j] ? "in" : "out") << ", skew-of-12 "
                              << (r.skew_chain[j] ? "in" : "out") << '\n';
                std::cout << "note: " << r.note << '\n';
            }
            return kTrue;
        }
        if (*anti_cmd) {
            const auto f = parse_family(family);
            std::vector<std::size_t> ks;
            if (length) {
                const auto k = index_for_length(f, length);
                if (!k) throw InvalidInput(std::string(family_name(f)) + " has no member of length " + std::to_string(length));
                ks.push_back(*k);
            } else {
                for (std::size_t k = 1; k <= count; ++k) ks.push_back(k);
            }
            const bool labeled = labels_flag || f == AntichainFamily::labeled_path;
            if (labeled && f != AntichainFamily::labeled_path && f != AntichainFamily::widdershins)
                throw InvalidInput("--labels is defined for labeled-path and widdershins");
            const auto L = FinitePoset::two_antichain();
            std::vector<LabeledPermutation> lms;
            std::vector<Permutation> ms;
            for (auto k : ks) {
                if (labeled) {
                    lms.push_back(f == AntichainFamily::labeled_path ? labeled_antichain_member(k) : labeled_widdershins_member(k));
                    ms.push_back(lms.back().perm);
                } else {
                    ms.push_back(antichain_member(f, k));
                }
            }
            std::optional<std::pair<std::size_t, std::size_t>> violation;
            if (verify) {
                if (labeled) violation = antichain_violation(lms, [&](const auto& a, const auto& b) { return labeled_contains(a, b, L); });
                else violation = antichain_violation(ms, [](const auto& a, const auto& b) { return contains(a, b); });
            }
            const bool extrapolated = std::any_of(ms.begin(), ms.end(), [](const Permutation& p) { return p.size() > 18; });
            if (g.json) {
                json out = json::array();
                for (std::size_t i = 0; i < ms.size(); ++i) {
                    json row{{"k", ks[i]}, {"perm", perm_json(ms[i])}};
                    if (labeled) row["labels"] = json::parse(io::labeled_json(lms[i], L))["labels"];
                    out.push_back(row);
                }
                json doc{{"family", family_name(f)}, {"members", out}};
                if (verify) doc["antichain"] = !violation.has_value();
                if (violation) doc["violation"] = {violation->first, violation->second};
                if (extrapolated) doc["note"] = "members beyond length 18 extrapolate the figure instances";
                emit(doc);
            } else {
                for (std::size_t i = 0; i < ms.size(); ++i)
                    std::cout << (labeled ? io::labeled_str(lms[i], L) : ms[i].str()) << '\n';
                if (extrapolated) std::cout << "note: members beyond length 18 extrapolate the figure instances\n";
                if (verify) {
                    if (violation)
                        std::cout << "not an antichain: member " << ks[violation->first - 1] << " <= member "
                                  << ks[violation->second - 1] << '\n';
                    else
                        std::cout << "antichain: no two members comparable\n";
                }
            }
            if (!g.dot.empty()) {
                std::string all;
                for (std::size_t i = 0; i < ms.size(); ++i) {
                    std::vector<std::string> names;
                    for (auto v : ms[i]) names.push_back(std::to_string(v));
                    if (labeled) all += to_dot(inversion_graph(ms[i], lms[i].labels), &L, names);
                    else all += to_dot(inversion_graph(ms[i]), nullptr, names);
                }
                write_dot(all);
            }
            return verify ? verdict(!violation) : kTrue;
        }
        if (*lc_cmd) {
            const auto poset = load_poset();
            const auto s = io::parse_labeled(file_or_inline(a1), poset);
            const auto p = io::parse_labeled(file_or_inline(a2), poset);
            const auto w = labeled_occurrence(s, p, poset);
            if (g.json) {
                json out{{"contains", w.has_value()}};
                if (w) out["witness"] = *w;
                emit(out);
            } else {
                std::cout << (w ? "true" : "false") << '\n';
                if (w) std::cout << "witness positions: " << witness_str(*w) << '\n';
            }
            return verdict(w.has_value());
        }
        if (*suite_cmd) {
            const auto& checks = suite_checks();
            if (list) {
                for (std::size_t i = 0; i < checks.size(); ++i)
                    std::cout << i + 1 << ' ' << checks[i].name << "  " << checks[i].description << '\n';
                return kTrue;
            }
            std::set<std::string> known;
            for (const auto& c : checks) known.insert(c.name);
            for (const auto& name : only)
                if (!known.count(name)) throw InvalidInput("unknown check '" + name + "'");
            for (const auto& name : expect_fail)
                if (!known.count(name)) throw InvalidInput("unknown check '" + name + "'");
            SuiteConfig cfg;
            cfg.seed = g.seed;
            cfg.jobs = jobs;
            cfg.only.insert(only.begin(), only.end());
            const std::set<std::string> expected(expect_fail.begin(), expect_fail.end());
            std::size_t unexpected = 0;
            json rows = json::array();
            auto status = [&](const CheckResult& r) -> std::string {
                if (expected.count(r.name)) return r.passed ? "XPASS" : "XFAIL";
                return r.passed ? "PASS" : "FAIL";
            };
            const auto results = run_suite(cfg, [&](const CheckResult& r) {
                const auto s = status(r);
                if (s == "FAIL" || s == "XPASS") ++unexpected;
                if (g.json) {
                    rows.push_back({{"id", r.id}, {"name", r.name}, {"status", s}, {"seconds", r.seconds}, {"detail", r.detail}});
                } else {
                    char secs[32];
                    std::snprintf(secs, sizeof secs, "%7.2fs", r.seconds);
                    std::cout << std::setw(2) << r.id << ' ' << std::left << std::setw(5) << s << std::right << ' '
                              << secs << ' ' << r.name << ": " << r.detail << std::endl;
                }
            });
            const json open = {
                {"C+1 wqo implies C+1 lwqo", "open"},
                {"substitution closure wqo implies lwqo", "open"},
                {"2-wqo implies n-wqo", "open"},
                {"G_C wqo implies C wqo", "open"},
                {"every monotone grid class is finitely based", "open"},
                {"infinitely based C with finitely based C+1", "open"},
            };
            if (g.json) {
                emit({{"seed", g.seed}, {"checks", rows}, {"open_questions", open}, {"ok", unexpected == 0}});
            } else {
                std::size_t passed = 0;
                for (const auto& r : results) passed += r.passed;
                std::cout << passed << '/' << results.size() << " checks passed";
                if (!expected.empty()) std::cout << " (" << expected.size() << " expected to fail)";
                std::cout << "\nopen questions (reported, not decided):\n";
                for (const auto& [q, s] : open.items()) std::cout << "  " << q << ": " << s.get<std::string>() << '\n';
            }
            return unexpected == 0 ? kTrue : kFalse;
        }
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::cerr << app.help();
    return kUsage;
}
