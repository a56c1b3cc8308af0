#include "detlab/json_io.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace detlab {

namespace {

const Json& expect_object(const Json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    return j;
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
    return j;
}

const Json& expect_field(const Json& j, const char* key, const char* what) {
    expect_object(j, what);
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

int expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

bool expect_bool(const Json& j, const char* what) {
    if (!j.is_boolean()) throw ParseError(std::string(what) + ": expected a boolean");
    return j.get<bool>();
}

std::int64_t parse_exponent(const std::string& s) {
    std::size_t used = 0;
    std::int64_t k = 0;
    try {
        k = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad eps exponent \"" + s + "\"");
    }
    if (used != s.size()) throw ParseError("bad eps exponent \"" + s + "\"");
    return k;
}

} // namespace

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    return rat_from_string(expect_string(j, "rational"));
}

Json eps_to_json(const EpsScalar& c) {
    Json j = Json::object();
    for (const auto& [k, coef] : c.terms())
        j[std::to_string(k)] = rat_to_json(coef);
    return j;
}

EpsScalar eps_from_json(const Json& j) {
    expect_object(j, "coefficient");
    EpsScalar c;
    for (const auto& [key, value] : j.items())
        c += EpsScalar::eps(parse_exponent(key), rat_from_json(value));
    return c;
}

Json mono_to_json(const Monomial& m) {
    Json j = Json::object();
    for (const auto& [v, e] : m.factors()) j[v.str()] = e;
    return j;
}

Monomial mono_from_json(const Json& j) {
    expect_object(j, "monomial");
    std::vector<std::pair<VarId, int>> fs;
    for (const auto& [key, value] : j.items()) {
        const int e = expect_int(value, "monomial exponent");
        if (e < 0) throw ParseError("negative exponent in monomial");
        fs.emplace_back(VarId::parse(key), e);
    }
    return Monomial::from_factors(std::move(fs));
}

Json poly_to_json(const Poly& f) {
    Json terms = Json::array();
    for (const auto& [mono, coef] : f.terms()) {
        Json t = Json::object();
        t["coef"] = eps_to_json(coef);
        t["mono"] = mono_to_json(mono);
        terms.push_back(std::move(t));
    }
    Json j = Json::object();
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    const Json& terms = expect_array(expect_field(j, "terms", "polynomial"),
                                     "polynomial terms");
    Poly f;
    for (const Json& t : terms)
        f.add_term(mono_from_json(expect_field(t, "mono", "polynomial term")),
                   eps_from_json(expect_field(t, "coef", "polynomial term")));
    return f;
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    expect_array(j, "partition");
    std::vector<int> parts;
    for (const Json& e : j) parts.push_back(expect_int(e, "partition part"));
    return Partition(std::move(parts));
}

Json tableau_to_json(const Tableau& t) { return Json(t.rows()); }

Tableau tableau_from_json(const Json& j) {
    expect_array(j, "tableau");
    std::vector<std::vector<int>> rows;
    for (const Json& row : j) {
        expect_array(row, "tableau row");
        std::vector<int> r;
        for (const Json& e : row) r.push_back(expect_int(e, "tableau entry"));
        rows.push_back(std::move(r));
    }
    return Tableau(std::move(rows));
}

Json bitableau_to_json(const Bitableau& b) {
    Json j = Json::object();
    j["S"] = tableau_to_json(b.S);
    j["T"] = tableau_to_json(b.T);
    return j;
}

Bitableau bitableau_from_json(const Json& j) {
    return Bitableau{tableau_from_json(expect_field(j, "S", "bitableau")),
                     tableau_from_json(expect_field(j, "T", "bitableau"))};
}

Json bidet_to_json(const BidetExpr& e) {
    Json terms = Json::array();
    for (const auto& [b, coef] : e.terms()) {
        Json t = Json::object();
        t["coef"] = eps_to_json(coef);
        t["S"] = tableau_to_json(b.S);
        t["T"] = tableau_to_json(b.T);
        terms.push_back(std::move(t));
    }
    Json j = Json::object();
    j["terms"] = std::move(terms);
    return j;
}

Json stdmon_to_json(const StdMonExpr& e) {
    Json terms = Json::array();
    for (const auto& [t, coef] : e.terms()) {
        Json item = Json::object();
        item["coef"] = eps_to_json(coef);
        item["tableau"] = tableau_to_json(t);
        terms.push_back(std::move(item));
    }
    Json j = Json::object();
    j["terms"] = std::move(terms);
    return j;
}

Json qmatrix_to_json(const QMatrix& m) {
    Json j = Json::array();
    for (const QRow& row : m) {
        Json r = Json::array();
        for (const Rat& x : row) r.push_back(rat_to_json(x));
        j.push_back(std::move(r));
    }
    return j;
}

QMatrix qmatrix_from_json(const Json& j) {
    expect_array(j, "matrix");
    QMatrix m;
    for (const Json& row : j) {
        expect_array(row, "matrix row");
        QRow r;
        for (const Json& e : row) r.push_back(rat_from_json(e));
        m.push_back(std::move(r));
    }
    return m;
}

Json poly_matrix_to_json(const PolyMatrix& m) {
    Json j = Json::array();
    for (const std::vector<Poly>& row : m) {
        Json r = Json::array();
        for (const Poly& f : row) r.push_back(poly_to_json(f));
        j.push_back(std::move(r));
    }
    return j;
}

PolyMatrix poly_matrix_from_json(const Json& j) {
    expect_array(j, "polynomial matrix");
    PolyMatrix m;
    for (const Json& row : j) {
        expect_array(row, "polynomial matrix row");
        std::vector<Poly> r;
        for (const Json& e : row) r.push_back(poly_from_json(e));
        m.push_back(std::move(r));
    }
    return m;
}

Json skew_to_json(const PolyMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = i + 1; k < m[i].size(); ++k) {
            if (m[i][k].is_zero()) continue;
            Json e = Json::object();
            e["i"] = static_cast<int>(i) + 1;
            e["j"] = static_cast<int>(k) + 1;
            e["value"] = poly_to_json(m[i][k]);
            entries.push_back(std::move(e));
        }
    Json j = Json::object();
    j["size"] = static_cast<int>(m.size());
    j["entries"] = std::move(entries);
    return j;
}

PolyMatrix skew_from_json(const Json& j) {
    const int size = expect_int(expect_field(j, "size", "skew matrix"),
                                "skew matrix size");
    if (size < 0) throw ParseError("skew matrix size must be nonnegative");
    PolyMatrix m(static_cast<std::size_t>(size),
                 std::vector<Poly>(static_cast<std::size_t>(size)));
    const Json& entries = expect_array(
        expect_field(j, "entries", "skew matrix"), "skew matrix entries");
    for (const Json& e : entries) {
        const int i = expect_int(expect_field(e, "i", "skew entry"), "skew row");
        const int k = expect_int(expect_field(e, "j", "skew entry"), "skew column");
        if (i < 1 || k <= i || k > size)
            throw ParseError("skew entry indices must satisfy 1 <= i < j <= size");
        const Poly v = poly_from_json(expect_field(e, "value", "skew entry"));
        m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = v;
        m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = -v;
    }
    return m;
}

Json abp_to_json(const LayeredABP& p) {
    Json layers = Json::array();
    for (const std::vector<std::string>& layer : p.layers())
        layers.push_back(Json(layer));
    Json edges = Json::array();
    for (const LayeredABP::Edge& e : p.edges()) {
        Json item = Json::object();
        item["from"] = e.from;
        item["to"] = e.to;
        item["label"] = poly_to_json(e.label);
        edges.push_back(std::move(item));
    }
    Json j = Json::object();
    j["layers"] = std::move(layers);
    j["edges"] = std::move(edges);
    return j;
}

LayeredABP abp_from_json(const Json& j) {
    const Json& layers = expect_array(expect_field(j, "layers", "program"),
                                      "program layers");
    std::vector<std::vector<std::string>> ls;
    for (const Json& layer : layers) {
        expect_array(layer, "program layer");
        std::vector<std::string> names;
        for (const Json& v : layer) names.push_back(expect_string(v, "vertex name"));
        ls.push_back(std::move(names));
    }
    const Json& edges = expect_array(expect_field(j, "edges", "program"),
                                     "program edges");
    std::vector<LayeredABP::Edge> es;
    for (const Json& e : edges)
        es.push_back(LayeredABP::Edge{
            expect_string(expect_field(e, "from", "program edge"), "edge endpoint"),
            expect_string(expect_field(e, "to", "program edge"), "edge endpoint"),
            poly_from_json(expect_field(e, "label", "program edge"))});
    return LayeredABP(std::move(ls), std::move(es));
}

Json circuit_to_json(const DepthThreeOracleCircuit& c) {
    Json transcript = Json::object();
    transcript["q"] = c.q;
    transcript["t"] = c.t;
    transcript["N"] = c.fold_n;
    transcript["sigma"] = partition_to_json(c.sigma);
    Json j = Json::object();
    j["n"] = c.n;
    j["m"] = c.m;
    j["bottom"] = poly_matrix_to_json(c.bottom);
    j["oracle"] = poly_to_json(c.oracle);
    j["c0"] = eps_to_json(c.c0);
    j["c1"] = eps_to_json(c.c1);
    j["transcript"] = std::move(transcript);
    return j;
}

Json reduction_to_json(const ReductionResult& r) {
    Json subst = Json::object();
    subst["n"] = r.subst.n;
    subst["m"] = r.subst.m;
    subst["forms"] = poly_matrix_to_json(r.subst.forms);
    Json j = Json::object();
    j["substitution"] = std::move(subst);
    j["q"] = r.q;
    j["alpha"] = rat_to_json(r.alpha);
    j["sigma"] = partition_to_json(r.sigma);
    j["slice"] = poly_to_json(r.slice);
    return j;
}

Json generator_to_json(const MatrixGenerator& g) {
    Json j = Json::object();
    j["n"] = g.n;
    j["m"] = g.m;
    j["r"] = g.r;
    return j;
}

MatrixGenerator generator_from_json(const Json& j) {
    return MatrixGenerator(expect_int(expect_field(j, "n", "generator"), "n"),
                           expect_int(expect_field(j, "m", "generator"), "m"),
                           expect_int(expect_field(j, "r", "generator"), "r"));
}

Json recursive_to_json(const RecursiveGenerator& g) {
    Json stages = Json::array();
    for (const MatrixGenerator& s : g.stages) stages.push_back(generator_to_json(s));
    Json coords = Json::array();
    for (const Poly& f : g.coordinates) coords.push_back(poly_to_json(f));
    Json j = Json::object();
    j["n"] = g.n;
    j["k"] = g.k;
    j["stages"] = std::move(stages);
    j["seed_length"] = g.seed_length;
    j["degree"] = g.degree;
    j["coordinates"] = std::move(coords);
    return j;
}

Json condenser_to_json(const RankCondenser& c) {
    Json points = Json::array();
    for (const Rat& a : c.points) points.push_back(rat_to_json(a));
    Json matrices = Json::array();
    for (const QMatrix& e : c.matrices) matrices.push_back(qmatrix_to_json(e));
    Json j = Json::object();
    j["n"] = c.n;
    j["r"] = c.r;
    j["omega"] = rat_to_json(c.omega);
    j["points"] = std::move(points);
    j["matrices"] = std::move(matrices);
    return j;
}

RankCondenser condenser_from_json(const Json& j) {
    RankCondenser c;
    c.n = expect_int(expect_field(j, "n", "condenser"), "n");
    c.r = expect_int(expect_field(j, "r", "condenser"), "r");
    c.omega = rat_from_json(expect_field(j, "omega", "condenser"));
    for (const Json& p :
         expect_array(expect_field(j, "points", "condenser"), "condenser points"))
        c.points.push_back(rat_from_json(p));
    for (const Json& m : expect_array(expect_field(j, "matrices", "condenser"),
                                      "condenser matrices"))
        c.matrices.push_back(qmatrix_from_json(m));
    return c;
}

Json vanishing_to_json(const VanishingReport& r) {
    Json j = Json::object();
    j["n"] = r.n;
    j["m"] = r.m;
    j["r"] = r.r;
    j["composition_zero"] = r.composition_zero;
    j["in_ideal"] = r.in_ideal;
    return j;
}

Json system_to_json(const AxiomSystem& sys) {
    Json axioms = Json::array();
    for (const Axiom& ax : sys.axioms) {
        Json a = Json::object();
        a["name"] = ax.name;
        a["hard"] = ax.hard;
        a["placeholder"] = ax.placeholder.str();
        a["poly"] = poly_to_json(ax.poly);
        axioms.push_back(std::move(a));
    }
    Json witness = Json::object();
    for (const auto& [v, value] : sys.witness) witness[v.str()] = rat_to_json(value);
    Json j = Json::object();
    j["det_width"] = sys.det_width;
    j["witness"] = std::move(witness);
    j["axioms"] = std::move(axioms);
    return j;
}

AxiomSystem system_from_json(const Json& j) {
    AxiomSystem sys;
    sys.det_width = expect_int(expect_field(j, "det_width", "axiom system"),
                               "det_width");
    const Json& witness = expect_object(
        expect_field(j, "witness", "axiom system"), "system witness");
    for (const auto& [key, value] : witness.items())
        sys.witness[VarId::parse(key)] = rat_from_json(value);
    const Json& axioms = expect_array(expect_field(j, "axioms", "axiom system"),
                                      "system axioms");
    for (const Json& a : axioms)
        sys.axioms.push_back(Axiom{
            expect_string(expect_field(a, "name", "axiom"), "axiom name"),
            poly_from_json(expect_field(a, "poly", "axiom")),
            VarId::parse(expect_string(expect_field(a, "placeholder", "axiom"),
                                       "axiom placeholder")),
            expect_bool(expect_field(a, "hard", "axiom"), "axiom role")});
    return sys;
}

Json certificate_to_json(const IPSCertificate& cert) {
    Json j = Json::object();
    j["c"] = poly_to_json(cert.c);
    j["verified"] = cert.verified;
    return j;
}

IPSCertificate certificate_from_json(const Json& j) {
    IPSCertificate cert;
    cert.c = poly_from_json(expect_field(j, "c", "certificate"));
    cert.verified = expect_bool(expect_field(j, "verified", "certificate"),
                                "certificate flag");
    return cert;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON input");
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detlab
