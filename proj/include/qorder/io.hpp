#pragma once

#include <filesystem>

#include "qorder/base_change.hpp"
#include "qorder/cauchy.hpp"
#include "qorder/morita.hpp"

namespace qorder::io {

/// Malformed or unresolvable file content; carries the parser's
/// line/column diagnostics where available.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resolved base reference. `ref` is the re-usable spelling ("q3",
/// "trop:4", "idm:q3", or a path); inline bases have an empty ref and
/// serialize in full.
struct BaseHandle {
  QuantaloidPtr q;
  std::optional<IdmQuantaloid> idm;
  std::string ref;
};

/// Accepts fixture names, "idm:<ref>" (recursively), or a path to a
/// quantaloid file. Instances are cached so equal references share one
/// Quantaloid object.
BaseHandle resolve_base(const std::string& ref, const std::filesystem::path& dir);
/// The handle a structure's base was resolved from, reconstructed by name.
BaseHandle rebase(const EnrichedStructure& s);

std::string quantaloid_to_string(const Quantaloid& q);
void save_quantaloid(const Quantaloid& q, const std::filesystem::path& file);

EnrichedStructure load_structure(const std::filesystem::path& file);
std::string structure_to_string(const EnrichedStructure& s);
EnrichedStructure structure_from_string(const std::string& text,
                                        const std::filesystem::path& dir);
void save_structure(const EnrichedStructure& s, const std::filesystem::path& file);

struct MatrixFile {
  EnrichedStructure dom, cod;
  QMatrix mat;
};

MatrixFile load_matrix(const std::filesystem::path& file);
void save_matrix(const EnrichedStructure& dom, const EnrichedStructure& cod,
                 const QMatrix& mat, const std::filesystem::path& file);

struct MapFile {
  EnrichedStructure dom, cod;
  std::vector<int> images;
};

MapFile load_map(const std::filesystem::path& file);
void save_map(const ObjectMap& map, const std::filesystem::path& file);

void save_iso_witness(const IsoWitness& w, const std::filesystem::path& file);
void save_equiv_witness(const EquivWitness& w, const std::filesystem::path& file);
void save_splitting_witness(const EnrichedStructure& a, const SplittingChoice& choice,
                            const std::filesystem::path& file);
void save_completion_table(const EnrichedStructure& source, const CompletionResult& c,
                           const std::filesystem::path& file);

}  // namespace qorder::io
