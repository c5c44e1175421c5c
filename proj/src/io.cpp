#include "permwqo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permwqo/errors.hpp"

namespace permwqo::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

std::string atom_name(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InvalidInput("poset: element names must be strings or integers");
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput(std::string(what) + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

json perm_array(const Permutation& p) { return json(std::vector<int>(p.begin(), p.end())); }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

FinitePoset parse_poset(const std::string& json_text) {
    const json j = parse_json(json_text, "poset");
    if (!j.is_object() || !j.contains("elements")) throw InvalidInput("poset: missing \"elements\"");
    std::vector<std::string> names;
    for (const auto& e : j.at("elements")) names.push_back(atom_name(e));
    std::vector<std::pair<std::string, std::string>> leq;
    if (j.contains("leq")) {
        for (const auto& pair : j.at("leq")) {
            if (!pair.is_array() || pair.size() != 2) throw InvalidInput("poset: leq entries are pairs");
            leq.emplace_back(atom_name(pair[0]), atom_name(pair[1]));
        }
    }
    return FinitePoset(std::move(names), leq);
}

std::string poset_json(const FinitePoset& poset) {
    json leq = json::array();
    for (auto [a, b] : poset.strict_pairs()) leq.push_back({poset.name(a), poset.name(b)});
    return json{{"elements", poset.names()}, {"leq", leq}}.dump();
}

LabeledPermutation parse_labeled(const std::string& json_text, const FinitePoset& poset) {
    const json j = parse_json(json_text, "labeled permutation");
    if (!j.is_object() || !j.contains("perm") || !j.contains("labels"))
        throw InvalidInput("labeled permutation: needs \"perm\" and \"labels\"");
    LabeledPermutation out{Permutation(int_list(j.at("perm"), "perm")), {}};
    for (const auto& l : j.at("labels")) out.labels.push_back(poset.index_of(atom_name(l)));
    validate(out, poset);
    return out;
}

std::string labeled_json(const LabeledPermutation& p, const FinitePoset& poset) {
    std::vector<std::string> labels;
    for (auto l : p.labels) labels.push_back(poset.name(l));
    return json{{"perm", perm_array(p.perm)}, {"labels", labels}}.dump();
}

std::string labeled_str(const LabeledPermutation& p, const FinitePoset& poset) {
    std::string out = p.perm.str() + " |";
    for (std::size_t i = 0; i < p.labels.size(); ++i)
        out += " " + std::to_string(i + 1) + ":" + poset.name(p.labels[i]);
    return out;
}

PermClass parse_class(const std::string& json_text) {
    const json j = parse_json(json_text, "class");
    if (!j.is_object() || !j.contains("basis")) throw InvalidInput("class: missing \"basis\"");
    std::vector<Permutation> basis;
    for (const auto& b : j.at("basis")) basis.emplace_back(int_list(b, "basis element"));
    return PermClass(std::move(basis), j.value("name", std::string{}));
}

std::string class_json(const PermClass& c) {
    json basis = json::array();
    for (const auto& b : c.basis()) basis.push_back(perm_array(b));
    json out{{"basis", basis}};
    if (!c.name().empty()) out["name"] = c.name();
    return out.dump();
}

ZeroPmOneMatrix parse_matrix(const std::string& json_text) {
    const json j = parse_json(json_text, "matrix");
    if (j.is_string() && j.get<std::string>() == "X") return ZeroPmOneMatrix::x_matrix();
    if (!j.is_object() || !j.contains("entries")) throw InvalidInput("matrix: missing \"entries\"");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j.at("entries")) rows.push_back(int_list(r, "matrix row"));
    auto m = ZeroPmOneMatrix::from_rows_top_down(rows);
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
        throw InvalidInput("matrix: \"cols\" disagrees with entries");
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
        throw InvalidInput("matrix: \"rows\" disagrees with entries");
    return m;
}

std::string matrix_json(const ZeroPmOneMatrix& m) {
    return json{{"cols", m.cols()}, {"rows", m.rows()}, {"entries", m.rows_top_down()}}.dump();
}

std::string enumeration_csv(const std::map<std::size_t, PermSet>& by_length, bool with_members) {
    std::ostringstream out;
    out << (with_members ? "length,count,members\n" : "length,count\n");
    for (const auto& [n, members] : by_length) {
        out << n << ',' << members.size();
        if (with_members) {
            out << ',';
            bool first = true;
            for (const auto& p : members) {
                out << (first ? "" : ";") << p.str();
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string gridded_json(const GriddedPermutation& g, const std::vector<Rational>* params) {
    json cells = json::array();
    for (auto [c, r] : g.cells) cells.push_back({c, r});
    json out{{"perm", perm_array(g.perm)}, {"cells", cells}};
    if (params) {
        std::vector<std::string> ts;
        for (const auto& t : *params) ts.push_back(to_string(t));
        out["params"] = ts;
    }
    return out.dump();
}

}  // namespace permwqo::io
