#include "lorq/specfile.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lorq/errors.hpp"

namespace lorq {

namespace {

using nlohmann::ordered_json;

void reject_unknown(const ordered_json& node, const std::vector<std::string>& known,
                    const std::string& where) {
    for (auto it = node.begin(); it != node.end(); ++it) {
        bool ok = false;
        for (const std::string& k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ParseError("unknown field '" + where + "." + it.key() + "'");
    }
}

const ordered_json& field(const ordered_json& node, const std::string& name,
                          const std::string& where) {
    auto it = node.find(name);
    if (it == node.end()) throw ParseError("missing field '" + where + "." + name + "'");
    return *it;
}

Rat rat_field(const ordered_json& node, const std::string& where) {
    if (node.is_string()) return rat_from_string(node.get<std::string>());
    throw ParseError("'" + where + "' must be a rational string \"p/q\"" +
                     (node.is_number() ? " (numbers are rejected to keep exactness)" : ""));
}

Vec vec_field(const ordered_json& node, const std::string& where) {
    if (!node.is_array()) throw ParseError("'" + where + "' must be an array");
    Vec v;
    v.reserve(node.size());
    for (size_t i = 0; i < node.size(); ++i)
        v.push_back(rat_field(node[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<Vec> vec_list_field(const ordered_json& node, const std::string& where) {
    if (!node.is_array()) throw ParseError("'" + where + "' must be an array of vectors");
    std::vector<Vec> out;
    out.reserve(node.size());
    for (size_t i = 0; i < node.size(); ++i)
        out.push_back(vec_field(node[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Mat mat_field(const ordered_json& node, const std::string& where) {
    std::vector<Vec> rows = vec_list_field(node, where);
    if (rows.empty()) throw ParseError("'" + where + "' must be nonempty");
    return mat_from_rows(rows);
}

QuadraticSpace space_field(const ordered_json& node) {
    if (!node.is_object()) throw ParseError("'space' must be an object");
    reject_unknown(node, {"dim", "gram", "coneSelector"}, "space");
    const ordered_json& dim_node = field(node, "dim", "space");
    if (!dim_node.is_number_integer()) throw ParseError("'space.dim' must be an integer");
    int dim = dim_node.get<int>();
    Mat gram = mat_field(field(node, "gram", "space"), "space.gram");
    Vec selector = vec_field(field(node, "coneSelector", "space"), "space.coneSelector");
    if (gram.rows != dim || gram.cols != dim)
        throw ParseError("'space.gram' must be dim x dim");
    try {
        return QuadraticSpace::create(std::move(gram), std::move(selector));
    } catch (const SpecInvalid& e) {
        throw ParseError("space: " + std::string(e.what()));
    }
}

ordered_json vec_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const Rat& r : v) out.push_back(rat_to_string(r));
    return out;
}

ordered_json vec_list_json(const std::vector<Vec>& vs) {
    ordered_json out = ordered_json::array();
    for (const Vec& v : vs) out.push_back(vec_json(v));
    return out;
}

ordered_json mat_json(const Mat& m) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) out.push_back(vec_json(row(m, i)));
    return out;
}

}  // namespace

const QuadraticSpace& SpecFile::space() const {
    if (auto* t1 = std::get_if<TypeISpec>(&group)) return t1->space;
    if (auto* t2 = std::get_if<TypeIISpec>(&group)) return t2->space;
    return std::get<ExplicitGenerators>(group).space;
}

std::vector<std::string> SpecFile::violations() const {
    if (auto* t1 = std::get_if<TypeISpec>(&group)) return validate_type_i(*t1);
    if (auto* t2 = std::get_if<TypeIISpec>(&group)) return validate_type_ii(*t2);
    const auto& eg = std::get<ExplicitGenerators>(group);
    std::vector<std::string> bad;
    for (size_t i = 0; i < eg.generators.size(); ++i) {
        try {
            validate_isometry(eg.space, eg.generators[i]);
        } catch (const Error& e) {
            bad.push_back("generator " + std::to_string(i) + ": " + e.what());
        }
    }
    return bad;
}

GroupGenerators SpecFile::build(bool allow_non_free) const {
    if (auto* t1 = std::get_if<TypeISpec>(&group)) return build_group(*t1);
    if (auto* t2 = std::get_if<TypeIISpec>(&group)) return build_group(*t2, allow_non_free);
    const auto& eg = std::get<ExplicitGenerators>(group);
    return GroupGenerators::create(eg.space, eg.generators);
}

SpecFile parse_spec_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    reject_unknown(doc, {"version", "space", "group"}, "");

    SpecFile out;
    const ordered_json& version = field(doc, "version", "");
    if (!version.is_string()) throw ParseError("'version' must be a string");
    out.version = version.get<std::string>();

    QuadraticSpace space = space_field(field(doc, "space", ""));

    const ordered_json& group = field(doc, "group", "");
    if (!group.is_object() || group.size() != 1)
        throw ParseError("'group' must hold exactly one of typeI, typeII, generators");
    reject_unknown(group, {"typeI", "typeII", "generators"}, "group");

    if (group.contains("typeI")) {
        const ordered_json& g = group["typeI"];
        reject_unknown(g, {"latticeBasis"}, "group.typeI");
        TypeISpec spec;
        spec.space = std::move(space);
        spec.lattice_basis = vec_list_field(field(g, "latticeBasis", "group.typeI"),
                                            "group.typeI.latticeBasis");
        for (const Vec& b : spec.lattice_basis)
            if (static_cast<int>(b.size()) != spec.space.dim)
                throw ParseError("'group.typeI.latticeBasis' vectors must have length dim");
        out.group = std::move(spec);
    } else if (group.contains("typeII")) {
        const ordered_json& g = group["typeII"];
        reject_unknown(g, {"v0", "v1", "latticeBasis", "aMatrix"}, "group.typeII");
        TypeIISpec spec;
        spec.space = std::move(space);
        spec.v0 = vec_field(field(g, "v0", "group.typeII"), "group.typeII.v0");
        spec.v1 = vec_field(field(g, "v1", "group.typeII"), "group.typeII.v1");
        spec.lattice_basis = vec_list_field(field(g, "latticeBasis", "group.typeII"),
                                            "group.typeII.latticeBasis");
        // One ambient image per lattice basis vector.
        spec.a_images = vec_list_field(field(g, "aMatrix", "group.typeII"),
                                       "group.typeII.aMatrix");
        auto structural = [&](const std::vector<Vec>& vs, const std::string& what) {
            for (const Vec& v : vs)
                if (static_cast<int>(v.size()) != spec.space.dim)
                    throw ParseError("'" + what + "' vectors must have length dim");
        };
        structural({spec.v0, spec.v1}, "group.typeII.v0/v1");
        structural(spec.lattice_basis, "group.typeII.latticeBasis");
        structural(spec.a_images, "group.typeII.aMatrix");
        out.group = std::move(spec);
    } else {
        const ordered_json& g = field(group, "generators", "group");
        if (!g.is_array() || g.empty())
            throw ParseError("'group.generators' must be a nonempty array");
        ExplicitGenerators eg;
        eg.space = std::move(space);
        for (size_t i = 0; i < g.size(); ++i) {
            const ordered_json& one = g[i];
            std::string where = "group.generators[" + std::to_string(i) + "]";
            if (!one.is_object()) throw ParseError("'" + where + "' must be an object");
            reject_unknown(one, {"linear", "translation"}, where);
            AffineIsometry iso;
            iso.linear = mat_field(field(one, "linear", where), where + ".linear");
            iso.translation = vec_field(field(one, "translation", where), where + ".translation");
            if (iso.linear.rows != eg.space.dim || iso.linear.cols != eg.space.dim ||
                static_cast<int>(iso.translation.size()) != eg.space.dim)
                throw ParseError("'" + where + "' dimensions must match the space");
            eg.generators.push_back(std::move(iso));
        }
        out.group = std::move(eg);
    }
    out.digest = fnv1a64_digest(text);
    return out;
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

std::string spec_to_json(const SpecFile& spec) {
    ordered_json doc;
    doc["version"] = spec.version;
    const QuadraticSpace& sp = spec.space();
    doc["space"] = {{"dim", sp.dim},
                    {"gram", mat_json(sp.gram)},
                    {"coneSelector", vec_json(sp.cone_selector)}};
    ordered_json group;
    if (auto* t1 = std::get_if<TypeISpec>(&spec.group)) {
        group["typeI"] = {{"latticeBasis", vec_list_json(t1->lattice_basis)}};
    } else if (auto* t2 = std::get_if<TypeIISpec>(&spec.group)) {
        group["typeII"] = {{"v0", vec_json(t2->v0)},
                           {"v1", vec_json(t2->v1)},
                           {"latticeBasis", vec_list_json(t2->lattice_basis)},
                           {"aMatrix", vec_list_json(t2->a_images)}};
    } else {
        const auto& eg = std::get<ExplicitGenerators>(spec.group);
        ordered_json gens = ordered_json::array();
        for (const AffineIsometry& g : eg.generators)
            gens.push_back({{"linear", mat_json(g.linear)},
                            {"translation", vec_json(g.translation)}});
        group["generators"] = std::move(gens);
    }
    doc["group"] = std::move(group);
    return doc.dump(2) + "\n";
}

std::string fnv1a64_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Vec parse_vector_arg(const std::string& text) {
    Vec out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(rat_from_string(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(rat_from_string(cur));
    if (out.empty()) throw ParseError("empty vector argument");
    return out;
}

}  // namespace lorq
