#include "gkz/io.hpp"

#include <fstream>
#include <sstream>

#include "gkz/error.hpp"

namespace gkz {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw SchemaError(path + ": " + what);
}

Int read_int(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        Int z;
        if (z.set_str(v.get<std::string>(), 10) == 0) return z;
    }
    schema(path, "expected an integer");
}

Rat read_rat(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    schema(path, "expected a rational as an integer or \"p/q\" string");
}

const Json& array_at(const Json& doc, const std::string& key, const std::string& path) {
    const Json& v = doc.at(key);
    if (!v.is_array()) schema(path + "." + key, "expected an array");
    return v;
}

IntMatrix read_rows(const Json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) schema(path, "expected a nonempty array of rows");
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].empty()) schema(p, "expected a nonempty array");
        IntVec row;
        for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(read_int(v[i][j], p + "[" + std::to_string(j) + "]"));
        if (!out.empty() && row.size() != out.front().size()) schema(p, "rows have different lengths");
        out.push_back(std::move(row));
    }
    return IntMatrix::from_rows(out);
}

IntVec read_int_vec(const Json& v, const std::string& path, std::size_t n) {
    if (!v.is_array()) schema(path, "expected an array");
    if (v.size() != n) schema(path, "expected " + std::to_string(n) + " entries");
    IntVec out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(read_int(v[j], path + "[" + std::to_string(j) + "]"));
    return out;
}

std::vector<Index> read_simplices(const Json& v, const std::string& path, int n) {
    if (!v.is_array() || v.empty()) schema(path, "expected a nonempty array of index sets");
    std::vector<Index> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) schema(p, "expected an array");
        Index s;
        for (std::size_t j = 0; j < v[i].size(); ++j) {
            std::string pj = p + "[" + std::to_string(j) + "]";
            if (!v[i][j].is_number_integer()) schema(pj, "expected an integer");
            int x = v[i][j].get<int>();
            if (x < 1 || x > n) schema(pj, "index out of range 1.." + std::to_string(n));
            s.push_back(x - 1);
        }
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_keys(const Json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : doc.items()) {
        bool ok = false;
        for (const char* a : allowed) ok |= k == a;
        if (!ok) schema("$." + k, "unknown field");
    }
}

}  // namespace

Document parse_document(const Json& doc) {
    if (!doc.is_object()) schema("$", "expected an object");
    check_keys(doc, {"name", "A", "B", "relations", "gamma", "chamber", "kappa", "signs", "order", "pairing_basis"});
    Document out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) schema("$.name", "expected a string");
        out.name = doc["name"].get<std::string>();
    }
    bool hasA = doc.contains("A"), hasB = doc.contains("B");
    if (hasA == hasB) schema("$", "exactly one of \"A\" and \"B\" must be present");
    if (hasB && doc.contains("relations")) schema("$.relations", "only allowed together with \"A\"");

    IntMatrix B;
    if (hasA) {
        IntMatrix cols = read_rows(doc["A"], "$.A");
        out.config = PointConfiguration(cols.transpose());
        if (doc.contains("relations")) {
            B = read_rows(doc["relations"], "$.relations");
            if (B.cols() != out.config.matrix().cols())
                schema("$.relations", "row length differs from the number of points");
            IntMatrix prod = B * out.config.matrix().transpose();
            for (std::size_t i = 0; i < prod.rows(); ++i)
                for (std::size_t j = 0; j < prod.cols(); ++j)
                    if (prod(i, j) != 0)
                        schema("$.relations[" + std::to_string(i) + "]", "not a relation among the points of A");
            out.lattice = RelationLattice(out.config, B);
        } else {
            out.lattice = kernel_basis(out.config);
        }
    } else {
        B = read_rows(doc["B"], "$.B");
        out.config = configuration_from_relations(B);
        out.lattice = RelationLattice(out.config, B);
    }
    const std::size_t N = out.config.size();

    if (doc.contains("gamma")) {
        const Json& g = doc["gamma"];
        if (!g.is_array() || g.size() != N) schema("$.gamma", "expected " + std::to_string(N) + " entries");
        RatVec gamma;
        for (std::size_t j = 0; j < N; ++j) gamma.push_back(read_rat(g[j], "$.gamma[" + std::to_string(j) + "]"));
        out.gamma = gamma;
    }
    if (doc.contains("chamber")) out.chamber = read_simplices(doc["chamber"], "$.chamber", static_cast<int>(N));

    if (doc.contains("kappa")) {
        if (!hasB) schema("$.kappa", "model files give the relations as \"B\"");
        if (!out.gamma) schema("$.gamma", "required in a model file");
        if (!is_integral(*out.gamma)) schema("$.gamma", "model offsets must be integers");
        if (out.chamber) schema("$.chamber", "model files use the chamber of the last d columns");
        if (!doc["kappa"].is_number_integer()) schema("$.kappa", "expected an integer");
        int kappa = doc["kappa"].get<int>();
        if (kappa == 0) schema("$.kappa", "must be nonzero");
        std::optional<std::vector<int>> signs;
        if (doc.contains("signs")) {
            IntVec s = read_int_vec(doc["signs"], "$.signs", B.rows());
            signs.emplace();
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] != 1 && s[i] != -1) schema("$.signs[" + std::to_string(i) + "]", "expected 1 or -1");
                signs->push_back(static_cast<int>(s[i].get_si()));
            }
        }
        int order = 9;
        if (doc.contains("order")) {
            if (!doc["order"].is_number_integer() || doc["order"].get<int>() < 1) schema("$.order", "expected a positive integer");
            order = doc["order"].get<int>();
        }
        IntVec gamma;
        for (const auto& g : *out.gamma) gamma.push_back(g.get_num());
        MirrorModel m = make_model(out.name, B, gamma, kappa, signs, order);
        if (doc.contains("pairing_basis")) {
            const Json& pb = array_at(doc, "pairing_basis", "$");
            for (std::size_t i = 0; i < pb.size(); ++i) {
                IntVec e = read_int_vec(pb[i], "$.pairing_basis[" + std::to_string(i) + "]", B.rows());
                Monomial mono;
                for (const auto& x : e) {
                    if (x < 0) schema("$.pairing_basis[" + std::to_string(i) + "]", "negative exponent");
                    mono.push_back(static_cast<int>(x.get_si()));
                }
                m.pairing_basis.push_back(mono);
            }
        }
        out.model = std::move(m);
    } else {
        for (const char* k : {"signs", "order", "pairing_basis"})
            if (doc.contains(k)) schema(std::string("$.") + k, "only allowed in a model file (with \"kappa\")");
    }
    return out;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return parse_document(doc);
}

Json rat_json(const Rat& q) { return to_string(q); }

Json index_json(const Index& s) {
    Json out = Json::array();
    for (int i : s) out.push_back(i + 1);
    return out;
}

Json int_vec_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(to_string(x)));
    return out;
}

Json triangulation_json(const PointConfiguration& config, const RegularTriangulation& T) {
    Json simplices = Json::array(), witness = Json::array();
    for (const auto& s : T.simplices) simplices.push_back(index_json(s));
    for (const auto& a : T.witness.alpha) witness.push_back(rat_json(a));
    return Json{{"simplices", simplices}, {"witness", witness}, {"unimodular", is_unimodular(config, T)}, {"gkz_vector", int_vec_json(gkz_vector(config, T))}};
}

Json ring_json(const GradedQuotientRing& ring) {
    Json basis = Json::array(), table = Json::array(), gens = Json::array();
    for (const auto& m : ring.basis()) basis.push_back(m);
    const int r = ring.rank();
    for (int a = 0; a < r; ++a) {
        Json row = Json::array();
        for (int b = 0; b < r; ++b) {
            Json v = Json::array();
            std::vector<Int> dense(r, Int(0));
            for (const auto& [k, c] : ring.product(a, b)) dense[k] = c;
            for (const auto& c : dense) v.push_back(c.get_si());
            row.push_back(v);
        }
        table.push_back(row);
    }
    for (int j = 0; j < ring.num_generators(); ++j) {
        Json g = Json::array();
        RingElement eps = ring.generator(j);
        for (const auto& c : eps.coords()) g.push_back(rat_json(c));
        gens.push_back(g);
    }
    return Json{{"ranks", ring.ranks()}, {"basis", basis}, {"mult_table", table}, {"generators", gens}};
}

Json series_json(const TruncatedGammaSeries& s) {
    Json terms = Json::array();
    for (const auto& [n, t] : s.terms) {
        Json c = Json::array();
        for (const auto& x : t.coeff.coords()) c.push_back(rat_json(x));
        terms.push_back(Json{{"n", n}, {"coeff", c}});
    }
    return Json{{"order", s.order}, {"terms", terms}};
}

Json mirror_json(const MirrorModel& model, int order, const MirrorResult& r) {
    Json N = Json::array();
    for (const auto& [j, v] : r.table.entries) N.push_back(Json{{"index", j}, {"value", rat_json(v)}});
    Json gramm = Json::array();
    for (std::size_t i = 0; i < r.pairing.gramm.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < r.pairing.gramm.cols(); ++j) row.push_back(rat_json(r.pairing.gramm(i, j)));
        gramm.push_back(row);
    }
    Json pairing{{"form_dimension", r.pairing.form_dimension},
                 {"gramm", gramm},
                 {"tau_invariant", r.pairing.tau_invariant},
                 {"sign_pattern", r.pairing.sign_pattern}};
    return Json{{"model", model.name},
                {"order", order},
                {"kappa", model.kappa},
                {"signs", model.signs},
                {"N", N},
                {"all_integral", r.table.all_integral()},
                {"pairing", pairing}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gkz
