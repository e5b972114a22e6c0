#pragma once

#include <string>

#include <json.hpp>

#include "twconj/product_matrix.hpp"
#include "twconj/spectra.hpp"
#include "twconj/structure.hpp"
#include "twconj/zdirectsum.hpp"

namespace twconj {

using Json = nlohmann::ordered_json;

// Cayley-table files: {"order": n, "table": [[...]], "names": [...]?}.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const GroupPtr& g);

// Homs: {"domain_order": n, "codomain_order": m, "map": [...]}.
Json hom_to_json(const GroupHom& f);
GroupHom hom_from_json(const Json& j, const GroupPtr& domain, const GroupPtr& codomain);

Json partition_to_json(const ReidemeisterPartition& p);

// Spectra: JSON arrays with "inf" for infinity.
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
Json extnat_to_json(const ExtNat& v);

Json matrix_to_json(const EndoMatrix& m);

/// Endomorphism specs: {"kind": "map"|"diag"|"perm"|"wreath"|"matrix", ...}.
/// Factor homs accept the hom object, "id" or "trivial"; "sigma" is the
/// 1-based image array of the permutation.
GroupHom endo_from_spec(const Json& spec, const ProductGroup& product);
GroupHom endo_from_spec_single(const Json& spec, const GroupPtr& g);

// Finitely supported sequences: {"index": value} with 1-based keys.
Json seq_to_json(const FinSuppIntSeq& s);
FinSuppIntSeq seq_from_json(const Json& j);

Json triangular_report_to_json(const TriangularAutReport& r);
Json pattern_report_to_json(const AutPatternReport& r);
Json johnson_report_to_json(const JohnsonReport& r);
Json charfactor_report_to_json(const CharFactorReport& r);
Json containment_report_to_json(const ContainmentReport& r);
Json wreath_report_to_json(const WreathSpectrumReport& r);

/// "cyclic:6", "quaternion8", or a path to a Cayley-table JSON file.
GroupPtr parse_group_spec(const std::string& spec, int order_cap = kDefaultOrderCap);

}  // namespace twconj
