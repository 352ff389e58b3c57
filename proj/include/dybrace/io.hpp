#pragma once

// JSON and text renderings. Every writer is deterministic: the same input
// always yields the same bytes.
//
//   group    {"orders":[n1,...]}
//   family   {"group":..., "auts":[[images]], "sections":[[autId,...]], "phi":[[idx,...]]}
//   census   {"group":..., "auts":..., "mode":"minimal", "dedupe_iso":false,
//             "families":[{"sections":...,"phi":...}, ...]}   one family per line
//   DybMap   {"X":n, "H":h, "phi":[[...]]|null, "R":[[[[r,l],...]]]}
//   brace    {"group":..., "mult":[[...]]}

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "dybrace/brace.hpp"
#include "dybrace/constructions.hpp"
#include "dybrace/dbrace.hpp"
#include "dybrace/dyb.hpp"

namespace dybrace {

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const DBraceFamily& fam);
/// Accepts a family document or a census entry together with its census.
/// Automorphism ids are remapped through the image tables in "auts". A stored
/// φ is kept as written (only its shape is checked) so that `verify` can
/// report a wrong one; a missing φ is computed.
DBraceFamily family_from_json(const nlohmann::json& j);

struct Census {
  std::shared_ptr<const Holomorph> hol;
  EnumerationMode mode = EnumerationMode::minimal;
  bool dedupe_iso = false;
  std::vector<DBraceFamily> families;
};

void write_census(std::ostream& out, const Census& c);
/// Reads a census, or a single family document as a one-entry census.
Census read_census(const nlohmann::json& j);

nlohmann::json dyb_to_json(const DybMap& m);
DybMap dyb_from_json(const nlohmann::json& j);

nlohmann::json brace_to_json(const Brace& b);
nlohmann::json subgroup_to_json(const RegularSubgroup& s);

nlohmann::json report_to_json(const Report& r);
nlohmann::json field_example_to_json(const FieldExample& ex);

/// Aligned table of ·_λ headed "·_λk", rows a, columns b.
std::string format_table(const DBrace& d, std::uint32_t lam);
/// All tables of a d-brace followed by its φ table.
std::string format_tables(const DBrace& d);

nlohmann::json read_json_file(const std::string& path);

}  // namespace dybrace
