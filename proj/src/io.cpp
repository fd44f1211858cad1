#include "snchodge/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace snchodge {

using nlohmann::json;

namespace {

constexpr const char* kSchemaId = "snc-hodge/1";

long max_dim_cap() {
    if (const char* env = std::getenv("SNC_HODGE_MAX_DIM")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 512;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

Mat mat_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw SchemaError(where + ": matrix object with rows/cols/entries expected");
    int r = j.at("rows").get<int>();
    int c = j.at("cols").get<int>();
    const json& e = j.at("entries");
    if (!e.is_array() || int(e.size()) != r)
        throw SchemaError(where + ": entry row count mismatch");
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!e[std::size_t(i)].is_array() || int(e[std::size_t(i)].size()) != c)
            throw SchemaError(where + ": entry column count mismatch");
        for (int k = 0; k < c; ++k)
            m.at(i, k) = Scalar::parse(e[std::size_t(i)][std::size_t(k)].get<std::string>());
    }
    return m;
}

json vec_to_json(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

std::vector<Scalar> vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": array of scalars expected");
    std::vector<Scalar> v;
    for (const auto& s : j) v.push_back(Scalar::parse(s.get<std::string>()));
    return v;
}

json dim_to_json(const Dim& d) {
    json o;
    o["fixed"] = d.fixed;
    if (d.sym != 0) o["sym"] = d.sym;
    return o;
}

Dim dim_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Dim(j.get<long>());
    if (!j.is_object() || !j.contains("fixed"))
        throw SchemaError(where + ": dimension object expected");
    return Dim(j.at("fixed").get<long>(), j.value("sym", 0L));
}

const char* free_sig_name(FreeSig s) {
    return s == FreeSig::h_neg_definite ? "h_neg_definite" : "unknown";
}

FreeSig free_sig_from(const std::string& s, const std::string& where) {
    if (s == "h_neg_definite") return FreeSig::h_neg_definite;
    if (s == "unknown") return FreeSig::unknown;
    throw SchemaError(where + ": unknown definiteness tag " + s);
}

json package_to_json(const CohomologyPackage& p) {
    json o;
    o["name"] = p.name;
    o["dim"] = p.n;
    json degs = json::array();
    for (int l = 0; l <= 2 * p.n; ++l) {
        const auto& d = p.at(l);
        json dj;
        dj["degree"] = l;
        dj["total"] = dim_to_json(d.dim);
        dj["explicit"] = d.explicit_dim;
        json blocks = json::array();
        for (const auto& b : d.hodge.blocks) {
            json bj;
            bj["p"] = b.p;
            bj["q"] = b.q;
            if (b.space) bj["basis"] = mat_to_json(b.space->basis);
            if (b.has_free()) {
                bj["free"] = dim_to_json(b.free_dim);
                bj["free_sig"] = free_sig_name(b.free_sig);
            }
            blocks.push_back(std::move(bj));
        }
        dj["blocks"] = std::move(blocks);
        degs.push_back(std::move(dj));
    }
    o["cohomology"] = std::move(degs);
    json pairings;
    for (const auto& [l, m] : p.pairing) pairings[std::to_string(l)] = mat_to_json(m);
    o["pairings"] = std::move(pairings);
    if (!p.cup2.empty()) {
        json cups;
        for (const auto& [l, tables] : p.cup2) {
            json arr = json::array();
            for (const auto& m : tables) arr.push_back(mat_to_json(m));
            cups[std::to_string(l)] = std::move(arr);
        }
        o["cup2"] = std::move(cups);
    }
    if (!p.ample_classes.empty()) {
        json amp = json::array();
        for (const auto& a : p.ample_classes) amp.push_back(vec_to_json(a));
        o["ample"] = std::move(amp);
    }
    if (!p.symbolic_products.empty()) {
        json sp = json::array();
        for (const auto& [i, j] : p.symbolic_products) sp.push_back(json::array({i, j}));
        o["symbolic_products"] = std::move(sp);
    }
    return o;
}

CohomologyPackage package_from_json(const json& o, const std::string& where, long cap) {
    CohomologyPackage p;
    if (!o.is_object()) throw SchemaError(where + ": package object expected");
    p.name = o.value("name", std::string("unnamed"));
    if (!o.contains("dim")) throw SchemaError(where + ": missing dim");
    p.n = o.at("dim").get<int>();
    if (!o.contains("cohomology")) throw SchemaError(where + ": missing cohomology");
    p.degrees.resize(std::size_t(2 * p.n) + 1);
    for (auto& d : p.degrees) d.hodge = HodgeGrading::empty(0, 0);
    for (const auto& dj : o.at("cohomology")) {
        int l = dj.at("degree").get<int>();
        if (l < 0 || l > 2 * p.n) throw SchemaError(where + ": degree out of range");
        CohomologyPackage::DegreeData d;
        d.explicit_dim = dj.value("explicit", 0);
        if (d.explicit_dim > cap)
            throw SchemaError(where + ": coordinate dimension exceeds the configured cap");
        d.dim = dj.contains("total") ? dim_from_json(dj.at("total"), where)
                                     : Dim(d.explicit_dim);
        HodgeGrading g = HodgeGrading::empty(l, d.explicit_dim);
        if (dj.contains("blocks"))
            for (const auto& bj : dj.at("blocks")) {
                HodgeBlock b;
                b.p = bj.at("p").get<int>();
                b.q = bj.at("q").get<int>();
                if (bj.contains("basis"))
                    b.space = Subspace(d.explicit_dim,
                                       mat_from_json(bj.at("basis"), where + ".basis"));
                if (bj.contains("free")) {
                    b.free_dim = dim_from_json(bj.at("free"), where);
                    b.free_sig =
                        free_sig_from(bj.value("free_sig", std::string("unknown")), where);
                }
                g.blocks.push_back(std::move(b));
            }
        d.hodge = std::move(g);
        p.degrees[std::size_t(l)] = std::move(d);
    }
    for (int l = 0; l <= 2 * p.n; ++l) p.degrees[std::size_t(l)].hodge.weight = l;
    if (o.contains("pairings"))
        for (const auto& [key, mj] : o.at("pairings").items())
            p.pairing[std::stoi(key)] = mat_from_json(mj, where + ".pairings[" + key + "]");
    if (o.contains("cup2"))
        for (const auto& [key, arr] : o.at("cup2").items()) {
            std::vector<Mat> tables;
            for (const auto& mj : arr)
                tables.push_back(mat_from_json(mj, where + ".cup2[" + key + "]"));
            p.cup2[std::stoi(key)] = std::move(tables);
        }
    if (o.contains("ample"))
        for (const auto& aj : o.at("ample"))
            p.ample_classes.push_back(vec_from_json(aj, where + ".ample"));
    if (o.contains("symbolic_products"))
        for (const auto& sj : o.at("symbolic_products"))
            p.symbolic_products.insert({sj[0].get<int>(), sj[1].get<int>()});
    for (int l = 0; l <= 2 * p.n; ++l) {
        if (p.explicit_dim(l) == 0 || p.explicit_dim(2 * p.n - l) == 0) continue;
        if (!p.pairing.count(l) && !p.pairing.count(2 * p.n - l))
            throw SchemaError(where + ": missing pairing in degree " + std::to_string(l));
    }
    return p;
}

std::map<int, Mat> deltas_from_json(const json& o, const std::string& where) {
    std::map<int, Mat> out;
    for (const auto& [key, mj] : o.items())
        out[std::stoi(key)] = mat_from_json(mj, where + "[" + key + "]");
    return out;
}

json deltas_to_json(const std::map<int, Mat>& m) {
    json o;
    for (const auto& [l, mat] : m) o[std::to_string(l)] = mat_to_json(mat);
    return o;
}

json classes_to_json(const std::map<std::string, std::vector<std::vector<Scalar>>>& m) {
    json o;
    for (const auto& [name, vecs] : m) {
        json arr = json::array();
        for (const auto& v : vecs) arr.push_back(vec_to_json(v));
        o[name] = std::move(arr);
    }
    return o;
}

std::map<std::string, std::vector<std::vector<Scalar>>> classes_from_json(
    const json& o, const std::string& where) {
    std::map<std::string, std::vector<std::vector<Scalar>>> out;
    for (const auto& [name, arr] : o.items()) {
        std::vector<std::vector<Scalar>> vecs;
        for (const auto& vj : arr) vecs.push_back(vec_from_json(vj, where + "." + name));
        out[name] = std::move(vecs);
    }
    return out;
}

}  // namespace

InputModel model_of(const Scenario& s) {
    InputModel m;
    m.variety = s.variety;
    m.bundles = s.bundles;
    m.named_classes = s.named_classes;
    m.notes = s.notes;
    return m;
}

std::string serialize_model(const InputModel& m) {
    json o;
    o["schema"] = kSchemaId;
    o["n"] = m.variety.n;
    json comps = json::array();
    for (const auto& c : m.variety.components) comps.push_back(package_to_json(c));
    o["components"] = std::move(comps);
    json loci = json::array();
    for (const auto& d : m.variety.loci) loci.push_back(package_to_json(d));
    o["loci"] = std::move(loci);
    json incs = json::array();
    for (const auto& inc : m.variety.incidences) {
        json ij;
        ij["locus"] = inc.locus;
        ij["lower"] = inc.lower;
        ij["upper"] = inc.upper;
        ij["delta_lower"] = deltas_to_json(inc.delta_lower);
        ij["delta_upper"] = deltas_to_json(inc.delta_upper);
        incs.push_back(std::move(ij));
    }
    o["incidences"] = std::move(incs);
    if (!m.bundles.empty()) o["bundles"] = classes_to_json(m.bundles);
    if (!m.named_classes.empty()) o["classes"] = classes_to_json(m.named_classes);
    if (!m.notes.empty()) o["notes"] = m.notes;
    return o.dump(2) + "\n";
}

InputModel parse_model(const std::string& text) {
    json o;
    try {
        o = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    const long cap = max_dim_cap();
    InputModel m;
    try {
        if (!o.is_object() || o.value("schema", std::string()) != kSchemaId)
            throw SchemaError("schema: expected " + std::string(kSchemaId));
        m.variety.n = o.at("n").get<int>();
        if (!o.contains("components") || o.at("components").empty())
            throw SchemaError("components: at least one component expected");
        int idx = 0;
        for (const auto& cj : o.at("components"))
            m.variety.components.push_back(
                package_from_json(cj, "components[" + std::to_string(idx++) + "]", cap));
        idx = 0;
        if (o.contains("loci"))
            for (const auto& dj : o.at("loci"))
                m.variety.loci.push_back(
                    package_from_json(dj, "loci[" + std::to_string(idx++) + "]", cap));
        idx = 0;
        if (o.contains("incidences"))
            for (const auto& ij : o.at("incidences")) {
                Incidence inc;
                std::string where = "incidences[" + std::to_string(idx++) + "]";
                inc.locus = ij.at("locus").get<int>();
                inc.lower = ij.at("lower").get<int>();
                inc.upper = ij.at("upper").get<int>();
                if (ij.contains("delta_lower"))
                    inc.delta_lower = deltas_from_json(ij.at("delta_lower"), where);
                if (ij.contains("delta_upper"))
                    inc.delta_upper = deltas_from_json(ij.at("delta_upper"), where);
                m.variety.incidences.push_back(std::move(inc));
            }
        if (o.contains("bundles")) m.bundles = classes_from_json(o.at("bundles"), "bundles");
        if (o.contains("classes"))
            m.named_classes = classes_from_json(o.at("classes"), "classes");
        if (o.contains("notes"))
            for (const auto& note : o.at("notes")) m.notes.push_back(note.get<std::string>());
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    return m;
}

InputModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::uint64_t fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace snchodge
