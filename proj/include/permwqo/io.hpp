#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permwqo/grid.hpp"
#include "permwqo/labels.hpp"
#include "permwqo/perm_class.hpp"
#include "permwqo/poset.hpp"

namespace permwqo::io {

/// Whole file as a string; throws InvalidInput if it cannot be opened.
std::string read_file(const std::string& path);

/// {"elements": ["a", ...], "leq": [["a", "b"], ...]}. Element names may be
/// strings or numbers.
FinitePoset parse_poset(const std::string& json_text);
std::string poset_json(const FinitePoset& poset);

/// {"perm": [...], "labels": [...]} with labels given by element name.
LabeledPermutation parse_labeled(const std::string& json_text, const FinitePoset& poset);
std::string labeled_json(const LabeledPermutation& p, const FinitePoset& poset);

/// One-line notation followed by "pos:label" annotations, e.g. "2 1 | 1:* 2:o".
std::string labeled_str(const LabeledPermutation& p, const FinitePoset& poset);

/// {"basis": [[2,4,1,3], [3,1,4,2]], "name": optional}.
PermClass parse_class(const std::string& json_text);
std::string class_json(const PermClass& c);

/// {"cols": t, "rows": u, "entries": [[...], ...]} with entries listed top row first.
/// The literal string "X" is accepted as a shorthand for the X-matrix.
ZeroPmOneMatrix parse_matrix(const std::string& json_text);
std::string matrix_json(const ZeroPmOneMatrix& m);

/// "length,count" header and one row per length; with members, a third column
/// holding the members separated by ';'.
std::string enumeration_csv(const std::map<std::size_t, PermSet>& by_length, bool with_members);

/// Cell assignment per position and, for drawings, exact "p/q" parameters.
std::string gridded_json(const GriddedPermutation& g, const std::vector<Rational>* params = nullptr);

}  // namespace permwqo::io
