/*
 * JSON (de)serialization for every externally visible type.
 *
 * All output uses insertion-ordered objects and emits map-ordered terms, so
 * serialization is a pure function of the value: equal values give
 * byte-identical JSON.  Schemas:
 *
 *   Rat        "num/den" (or "num" when den = 1)
 *   EpsScalar  {"<eps-exponent>": Rat, ...}          exponents ascending
 *   Monomial   {"x[1,2]": 2, ...}                    canonical variable order
 *   Poly       {"terms": [{"coef": EpsScalar, "mono": Monomial}, ...]}
 *   Partition  [3, 2]
 *   Tableau    [[1, 2], [3]]
 *   Bitableau  {"S": Tableau, "T": Tableau}
 *   BidetExpr  {"terms": [{"coef": EpsScalar, "S": .., "T": ..}, ...]}
 *              terms in shape-lex-descending emission order
 *   StdMonExpr {"terms": [{"coef": EpsScalar, "tableau": ..}, ...]}
 *   QMatrix    [[Rat, ...], ...]
 *   PolyMatrix [[Poly, ...], ...]
 *   skew       {"size": 2n, "entries": [{"i": 1, "j": 2, "value": Poly}]}
 *              upper-triangular entries only; mirrors are implied
 *   LayeredABP {"layers": [["s"], ...], "edges": [{"from", "to", "label"}]}
 *   circuit    {"n", "m", "bottom": PolyMatrix, "oracle": Poly, "c0", "c1",
 *               "transcript": {"q", "t", "N", "sigma"}}
 *   reduction  {"substitution": {"n", "m", "forms": PolyMatrix},
 *               "q", "alpha": Rat, "sigma": Partition, "slice": Poly}
 *   generator  {"n", "m", "r"}
 *   recursive  {"n", "k", "stages": [generator...], "seed_length",
 *               "degree", "coordinates": [Poly, ...]}
 *   condenser  {"n", "r", "omega": Rat, "points": [Rat, ...],
 *               "matrices": [QMatrix, ...]}
 *   system     {"det_width", "witness": {"x[1,1]": Rat, ...},
 *               "axioms": [{"name", "hard", "placeholder", "poly"}, ...]}
 *   certificate{"c": Poly, "verified": bool}
 *
 * Every *_from_json throws ParseError on malformed input; value-level
 * validation (shape consistency, skew symmetry, ...) is delegated to the
 * domain constructors.
 */
#pragma once

#include <string>

#include "json.hpp"

#include "detlab/abp.hpp"
#include "detlab/ips.hpp"
#include "detlab/oracle_compose.hpp"
#include "detlab/pfaffian.hpp"
#include "detlab/pit.hpp"

namespace detlab {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json eps_to_json(const EpsScalar& c);
EpsScalar eps_from_json(const Json& j);

Json mono_to_json(const Monomial& m);
Monomial mono_from_json(const Json& j);

Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json bitableau_to_json(const Bitableau& b);
Bitableau bitableau_from_json(const Json& j);

Json bidet_to_json(const BidetExpr& e);
Json stdmon_to_json(const StdMonExpr& e);

Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

// Upper-triangular entry list of a skew-symmetric polynomial matrix; the
// deserializer fills mirrors and the zero diagonal.
Json skew_to_json(const PolyMatrix& m);
PolyMatrix skew_from_json(const Json& j);

Json abp_to_json(const LayeredABP& p);
LayeredABP abp_from_json(const Json& j);

Json circuit_to_json(const DepthThreeOracleCircuit& c);
Json reduction_to_json(const ReductionResult& r);

Json generator_to_json(const MatrixGenerator& g);
MatrixGenerator generator_from_json(const Json& j);

Json recursive_to_json(const RecursiveGenerator& g);

Json condenser_to_json(const RankCondenser& c);
RankCondenser condenser_from_json(const Json& j);

Json vanishing_to_json(const VanishingReport& r);

Json system_to_json(const AxiomSystem& sys);
AxiomSystem system_from_json(const Json& j);

Json certificate_to_json(const IPSCertificate& cert);
IPSCertificate certificate_from_json(const Json& j);

// Stream wrappers used by the CLI: parse with ParseError on bad JSON text,
// dump with a stable 2-space indentation and a trailing newline.
Json parse_json_text(const std::string& text);
std::string dump_json(const Json& j);

} // namespace detlab
