#ifndef CELLALG_IO_HPP
#define CELLALG_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cellalg/cellcomplex.hpp"
#include "cellalg/repalg.hpp"

namespace cellalg {

/// Facet file: one facet per line, vertex names whitespace-separated,
/// '#' starts a comment. Throws ValidationError on empty input.
std::vector<std::vector<std::string>> parse_facets(std::istream& in);

/// Poset JSON: {"cells":[{"id","dim"}], "covers":[[lower,upper]],
/// optional "epsilon":[{"upper","lower","sign"}]}. "@empty" must not appear.
PosetFileData parse_poset_json(const std::string& text);

/// Load a complex from a file: JSON poset files (content starting with '{')
/// or facet text. Throws ValidationError on unreadable/invalid input.
CellComplex load_complex(const std::string& path);

/// Resolve a module spec against a complex: the builtins
/// "projective:<cell>", "injective:<cell>", "simple:<cell>", "ideal-J",
/// "module:Re-empty", "random:<seed>", or a path to a JSON file
/// {"dims":{cell:nat}, "maps":{"lower->upper":[[entries]]}} (entries are
/// integers or "a/b" strings; reduced mod p over prime fields).
RModule resolve_module_spec(const CellComplex& c, const FieldSpec& field,
                            const std::string& spec);

/// degree -> count table as a JSON object string with sorted keys.
std::string table_json(const std::map<int, std::size_t>& t);

/// degree -> cell -> count with cell names; sorted keys.
std::string cell_table_json(const CellComplex& c,
                            const std::map<int, std::map<int, std::size_t>>& t);

/// Tab-separated rendering of the same tables (header + rows).
std::string table_tsv(const std::map<int, std::size_t>& t);
std::string cell_table_tsv(const CellComplex& c,
                           const std::map<int, std::map<int, std::size_t>>& t);

}  // namespace cellalg

#endif
