#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gkz/error.hpp"
#include "gkz/io.hpp"

using namespace gkz;

namespace {

struct Options {
    std::string command, input, output, format = "table";
    std::optional<int> order, lambda_bound, kappa;
    std::string signs;
};

/// Columns separated by two spaces; right-aligned where align[c] is true.
std::string render(const std::vector<std::vector<std::string>>& rows, const std::vector<bool>& align) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    std::ostringstream out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::string pad(width[c] - r[c].size(), ' ');
            bool right = c < align.size() && align[c];
            if (c) line += "  ";
            line += right ? pad + r[c] : r[c] + (c + 1 < r.size() ? pad : "");
        }
        out << line << "\n";
    }
    return out.str();
}

std::string str(int x) { return std::to_string(x); }
std::string str(const Int& x) { return to_string(x); }
std::string str(const Rat& x) { return to_string(x); }

std::string vec_string(const auto& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
    return s + ")";
}

std::string simplices_string(const std::vector<Index>& ss) {
    std::string s = "{";
    for (std::size_t i = 0; i < ss.size(); ++i) s += (i ? "," : "") + index_to_string(ss[i]);
    return s + "}";
}

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "d" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string label(const MultiIndex& j) {
    if (j.size() == 1) return "N_" + std::to_string(j[0]);
    std::string s = "N_{";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
    return s + "}";
}

/// Chamber used by ring, series and verify.
RegularTriangulation pick_chamber(const Document& doc) {
    if (doc.model) return doc.model->chamber;
    auto all = enumerate_regular_triangulations(doc.config, doc.lattice);
    if (doc.chamber) {
        for (const auto& T : all)
            if (T.simplices == *doc.chamber) return T;
        fail("NotRegular", "the given chamber is not a regular triangulation of the points");
    }
    for (const auto& T : all)
        if (is_unimodular(doc.config, T)) return T;
    return all.front();
}

RatVec pick_gamma(const Document& doc) { return doc.gamma ? *doc.gamma : RatVec(doc.config.size(), Rat(0)); }

TruncatedGammaSeries make_series(const Document& doc, const RegularTriangulation& T, int order) {
    RatVec gamma = pick_gamma(doc);
    // deformed series need a unimodular chamber and an integral offset
    if (is_unimodular(doc.config, T) && is_integral(gamma)) {
        auto ring = build_ring(doc.config, doc.lattice, T);
        return expand_deformed(deformed_data(doc.config, doc.lattice, T, gamma, ring), order);
    }
    return expand_plain(plain_data(doc.config, doc.lattice, T, gamma), order);
}

std::string analyze(const Document& doc, bool json) {
    const auto& A = doc.config.matrix();
    const auto& B = doc.lattice.basis();
    Json cols = Json::array(), rels = Json::array(), h = nullptr;
    for (int j = 0; j < doc.config.size(); ++j) {
        Json c = Json::array();
        for (std::size_t i = 0; i < A.rows(); ++i) c.push_back(A(i, j).get_si());
        cols.push_back(c);
    }
    for (std::size_t i = 0; i < B.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < B.cols(); ++j) r.push_back(B(i, j).get_si());
        rels.push_back(r);
    }
    if (doc.config.h()) {
        h = Json::array();
        for (const auto& x : *doc.config.h()) h.push_back(x.get_si());
    }
    Int vol = total_volume(doc.config, doc.lattice);
    Json out{{"name", doc.name},
             {"points", doc.config.size()},
             {"dimension", doc.config.rows()},
             {"lattice_rank", doc.lattice.rank()},
             {"A", cols},
             {"B", rels},
             {"h", h},
             {"generates", check_generates(doc.config)},
             {"volume", to_string(vol)}};
    if (doc.model) {
        Json ch = Json::array();
        for (const auto& s : doc.model->chamber.simplices) ch.push_back(index_json(s));
        out["model"] = Json{{"kappa", doc.model->kappa},
                            {"signs", doc.model->signs},
                            {"order", doc.model->order},
                            {"chamber", ch},
                            {"unimodular", is_unimodular(doc.config, doc.model->chamber)}};
    }
    if (json) return dump(out);
    std::vector<std::vector<std::string>> rows{{"name", doc.name},
                                               {"points", std::to_string(doc.config.size())},
                                               {"dimension", std::to_string(doc.config.rows())},
                                               {"lattice rank", std::to_string(doc.lattice.rank())},
                                               {"volume", to_string(vol)},
                                               {"generates", check_generates(doc.config) ? "yes" : "no"}};
    for (std::size_t i = 0; i < B.rows(); ++i) rows.push_back({"relation " + std::to_string(i + 1), vec_string(B.row(i))});
    if (doc.config.h()) rows.push_back({"h", vec_string(*doc.config.h())});
    if (doc.model) {
        rows.push_back({"kappa", std::to_string(doc.model->kappa)});
        std::string s;
        for (int x : doc.model->signs) s += (s.empty() ? "" : ",") + std::to_string(x);
        rows.push_back({"signs", s});
        rows.push_back({"chamber", simplices_string(doc.model->chamber.simplices)});
    }
    return render(rows, {});
}

std::string fan(const Document& doc, bool json) {
    auto all = enumerate_regular_triangulations(doc.config, doc.lattice);
    Json chambers = Json::array();
    std::vector<std::vector<std::string>> rows;
    int i = 0;
    for (const auto& T : all) {
        Json ss = Json::array(), t = Json::array(), normals = Json::array();
        for (const auto& s : T.simplices) ss.push_back(index_json(s));
        for (const auto& x : T.witness.t) t.push_back(rat_json(x));
        RatMatrix g = chamber_normals(doc.lattice, T.simplices);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(rat_json(g(r, c)));
            normals.push_back(row);
        }
        chambers.push_back(Json{{"simplices", ss}, {"t", t}, {"normals", normals}});
        rows.push_back({std::to_string(++i), simplices_string(T.simplices), vec_string(T.witness.t)});
    }
    if (json) return dump(Json{{"name", doc.name}, {"chambers", chambers}});
    return render(rows, {true});
}

std::string triangulate(const Document& doc, bool json) {
    auto all = enumerate_regular_triangulations(doc.config, doc.lattice);
    Json ts = Json::array();
    std::vector<std::vector<std::string>> rows;
    int i = 0;
    for (const auto& T : all) {
        ts.push_back(triangulation_json(doc.config, T));
        rows.push_back({std::to_string(++i), simplices_string(T.simplices), is_unimodular(doc.config, T) ? "unimodular" : "-",
                        vec_string(gkz_vector(doc.config, T))});
    }
    if (json) return dump(Json{{"name", doc.name}, {"triangulations", ts}});
    return render(rows, {true});
}

std::string ring(const Document& doc, bool json) {
    auto T = pick_chamber(doc);
    auto R = build_ring(doc.config, doc.lattice, T);
    if (json) {
        Json out = ring_json(*R);
        Json ch = Json::array();
        for (const auto& s : T.simplices) ch.push_back(index_json(s));
        out["chamber"] = ch;
        return dump(out);
    }
    std::vector<std::vector<std::string>> rows{{"chamber", simplices_string(T.simplices)}};
    std::string ranks;
    for (int r : R->ranks()) ranks += (ranks.empty() ? "" : " ") + std::to_string(r);
    rows.push_back({"ranks", ranks});
    std::string basis;
    for (const auto& m : R->basis()) basis += (basis.empty() ? "" : " ") + monomial_string(m);
    rows.push_back({"basis", basis});
    for (int j = 0; j < R->num_generators(); ++j)
        rows.push_back({"eps_" + std::to_string(j + 1), vec_string(R->generator(j).coords())});
    return render(rows, {});
}

std::string series(const Document& doc, int order, bool json) {
    auto T = pick_chamber(doc);
    auto s = make_series(doc, T, order);
    if (json) return dump(series_json(s));
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, t] : s.terms) rows.push_back({vec_string(n), vec_string(t.coeff.coords())});
    return render(rows, {});
}

int verify(const Document& doc, int order, std::optional<int> bound, bool json, std::string& text) {
    auto T = pick_chamber(doc);
    auto s = make_series(doc, T, order);
    auto sol = from_series(s);
    if (!bound) {
        int b = 0;
        const auto& B = doc.lattice.basis();
        for (std::size_t i = 0; i < B.rows(); ++i) {
            Int r = 0;
            for (std::size_t j = 0; j < B.cols(); ++j) r += abs(B(i, j));
            b = std::max(b, static_cast<int>(r.get_si()));
        }
        bound = b;
    }
    Json lambdas = Json::array(), skipped = Json::array(), violations = Json::array();
    long checked = 0, boundary = 0;
    auto euler = check_euler(sol, s.data.c);
    checked += euler.checked;
    for (const auto& ell : euler.violations) violations.push_back(Json{{"equation", "euler"}, {"ell", int_vec_json(ell)}});
    for (const auto& lambda : box_generator_set(doc.lattice, *bound)) {
        try {
            auto r = check_box(sol, lambda);
            lambdas.push_back(int_vec_json(lambda));
            checked += r.checked;
            boundary += r.unchecked_boundary;
            for (const auto& ell : r.violations)
                violations.push_back(Json{{"equation", "box"}, {"lambda", int_vec_json(lambda)}, {"ell", int_vec_json(ell)}});
        } catch (const MathError& e) {
            if (e.kind() != "InsufficientOrder") throw;
            skipped.push_back(int_vec_json(lambda));
        }
    }
    if (lambdas.empty()) fail("InsufficientOrder", "no box equation can be checked at this order");
    Json out{{"lambda", lambdas},
             {"checked", checked},
             {"unchecked_boundary", boundary},
             {"violations", violations},
             {"skipped_lambda", skipped}};
    if (json) {
        text = dump(out);
    } else {
        std::vector<std::vector<std::string>> rows{{"box equations", std::to_string(lambdas.size())},
                                                   {"checked", std::to_string(checked)},
                                                   {"unchecked boundary", std::to_string(boundary)},
                                                   {"skipped lambda", std::to_string(skipped.size())},
                                                   {"violations", std::to_string(violations.size())}};
        text = render(rows, {false, true});
    }
    return violations.empty() ? 0 : 1;
}

std::string mirror(const Document& doc, const Options& opt, bool json) {
    if (!doc.model) throw SchemaError("$.kappa: mirror needs a model file");
    MirrorModel m = *doc.model;
    if (opt.kappa) {
        if (*opt.kappa == 0) throw SchemaError("--kappa: must be nonzero");
        m.kappa = *opt.kappa;
    }
    if (!opt.signs.empty()) {
        std::vector<int> s;
        std::stringstream in(opt.signs);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok == "1" || tok == "+1") s.push_back(1);
            else if (tok == "-1") s.push_back(-1);
            else throw SchemaError("--signs: expected a comma separated list of 1 and -1");
        }
        if (static_cast<int>(s.size()) != m.lattice.rank())
            throw SchemaError("--signs: expected " + std::to_string(m.lattice.rank()) + " entries");
        m.signs = s;
    }
    int order = opt.order ? *opt.order : m.order;
    auto r = run_mirror(m, order);
    if (json) return dump(mirror_json(m, order, r));
    std::vector<std::vector<std::string>> rows;
    for (const auto& [j, v] : r.table.entries) rows.push_back({label(j), to_string(v)});
    std::string out = "model " + m.name + ", order " + std::to_string(order) + ", kappa " + std::to_string(m.kappa) + "\n";
    out += render(rows, {false, true});
    out += "pairing forms " + std::to_string(r.pairing.form_dimension) + ", tau invariant " +
           (r.pairing.tau_invariant ? "yes" : "no") + ", sign pattern " + (r.pairing.sign_pattern ? "yes" : "no") + "\n";
    return out;
}

int run(const Options& opt) {
    Document doc = load_document(opt.input);
    bool json = opt.format == "json";
    int order = opt.order.value_or(6);
    std::string text;
    int code = 0;
    if (opt.command == "analyze") text = analyze(doc, json);
    else if (opt.command == "fan") text = fan(doc, json);
    else if (opt.command == "triangulate") text = triangulate(doc, json);
    else if (opt.command == "ring") text = ring(doc, json);
    else if (opt.command == "series") text = series(doc, order, json);
    else if (opt.command == "verify") code = verify(doc, opt.order.value_or(8), opt.lambda_bound, json, text);
    else text = mirror(doc, opt, json);
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw SchemaError(opt.output + ": cannot write");
        out << text;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GKZ series, secondary fans and instanton numbers"};
    app.require_subcommand(1);
    Options opt;
    for (const char* name : {"analyze", "fan", "triangulate", "ring", "series", "verify", "mirror"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "configuration or model file")->required();
        sub->add_option("--output", opt.output, "write to this path instead of stdout");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
        std::string n = name;
        if (n == "series" || n == "verify" || n == "mirror")
            sub->add_option("--order", opt.order)->check(CLI::PositiveNumber);
        if (n == "verify") sub->add_option("--lambda-bound", opt.lambda_bound)->check(CLI::PositiveNumber);
        if (n == "mirror") {
            sub->add_option("--signs", opt.signs, "comma separated, e.g. -1,1");
            sub->add_option("--kappa", opt.kappa);
        }
        sub->callback([&opt, n] { opt.command = n; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run(opt);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
