#include "hecke/json_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hecke {

namespace {

Json int_to_json(const Int& c) {
    static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
    static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
    if (c >= kMin && c <= kMax) return Json(c.convert_to<std::int64_t>());
    return Json(c.str());  // big coefficients travel as decimal strings
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("bad integer literal: " + j.dump());
        }
    }
    throw ParseError("expected integer or decimal string, got " + j.dump());
}

int exponent_from_key(const std::string& key) {
    try {
        size_t used = 0;
        int e = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return e;
    } catch (const std::exception&) {
        throw ParseError("bad exponent key: \"" + key + "\"");
    }
}

// output order: lexicographic on (x coordinates, canonical word of w)
bool term_order(const RootDatum& rd, const LatticeElt& xa, const WeylElt& wa,
                const LatticeElt& xb, const WeylElt& wb) {
    if (xa != xb) return xa < xb;
    return rd.reduced_word(wa) < rd.reduced_word(wb);
}

}  // namespace

Json laurent_to_json(const LaurentScalar& s) {
    Json j = Json::object();
    for (const auto& [e, c] : s.terms()) j[std::to_string(e)] = int_to_json(c);
    return j;
}

LaurentScalar laurent_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("scalar must be an object, got " + j.dump());
    LaurentScalar s;
    for (const auto& [key, val] : j.items()) s.add_term(exponent_from_key(key), int_from_json(val));
    return s;
}

Json fraction_to_json(const ScalarFraction& f) {
    return Json{{"num", laurent_to_json(f.num())}, {"den", laurent_to_json(f.den())}};
}

ScalarFraction fraction_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("fraction must have num and den");
    return ScalarFraction(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Json lattice_to_json(const LatticeElt& x) {
    Json j = Json::array();
    for (i64 v : x.c) j.push_back(v);
    return j;
}

LatticeElt lattice_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("lattice point must be an array of length " + std::to_string(dim));
    LatticeElt x;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("lattice coordinates must be integers");
        x.c.push_back(v.get<i64>());
    }
    return x;
}

Json weyl_to_json(const RootDatum& rd, const WeylElt& w) {
    Json j = Json::array();
    for (int letter : rd.reduced_word(w)) j.push_back(letter);
    return j;
}

WeylElt weyl_from_json(const RootDatum& rd, const Json& j) {
    if (!j.is_array()) throw ParseError("Weyl element must be a word array");
    std::vector<int> word;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("Weyl word letters must be integers");
        word.push_back(v.get<int>());
    }
    return rd.word_to_weyl(word);
}

namespace {

template <typename Terms>
Json terms_to_json(const RootDatum& rd, const Terms& terms, const std::string& model) {
    std::vector<std::pair<std::pair<LatticeElt, WeylElt>, LaurentScalar>> sorted;
    for (const auto& [key, c] : terms) sorted.push_back({{key.x, key.w}, c});
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        return term_order(rd, a.first.first, a.first.second, b.first.first, b.first.second);
    });
    Json arr = Json::array();
    for (const auto& [key, c] : sorted)
        arr.push_back(Json{{"x", lattice_to_json(key.first)},
                           {"w", weyl_to_json(rd, key.second)},
                           {"c", laurent_to_json(c)}});
    return Json{{"model", model}, {"terms", arr}};
}

}  // namespace

Json im_to_json(const RootDatum& rd, const ImElement& f) {
    return terms_to_json(rd, f.terms(), "im");
}

ImElement im_from_json(const RootDatum& rd, const Json& j) {
    if (!j.is_object() || j.value("model", "") != "im")
        throw ParseError("expected an element with model \"im\"");
    ImElement f;
    for (const auto& t : j.at("terms"))
        f.add_term(ExtAffElt(lattice_from_json(t.at("x"), rd.dim()), weyl_from_json(rd, t.at("w"))),
                   laurent_from_json(t.at("c")));
    return f;
}

Json bern_to_json(const RootDatum& rd, const BernElement& f) {
    return terms_to_json(rd, f.terms(), "bern");
}

BernElement bern_from_json(const RootDatum& rd, const Json& j) {
    if (!j.is_object() || j.value("model", "") != "bern")
        throw ParseError("expected an element with model \"bern\"");
    BernElement f;
    for (const auto& t : j.at("terms"))
        f.add_term({lattice_from_json(t.at("x"), rd.dim()), weyl_from_json(rd, t.at("w"))},
                   laurent_from_json(t.at("c")));
    return f;
}

Json ga_to_json(const GroupAlgElement& g) {
    Json arr = Json::array();
    for (const auto& [x, c] : g.terms())
        arr.push_back(Json{{"x", lattice_to_json(x)}, {"c", fraction_to_json(c)}});
    return Json{{"terms", arr}};
}

ParsedElement element_from_json(const RootDatum& rd, const Json& j) {
    if (!j.is_object() || !j.contains("model")) throw ParseError("element file needs a model field");
    std::string model = j.at("model").get<std::string>();
    if (model == "im") return im_from_json(rd, j);
    if (model == "bern") return bern_from_json(rd, j);
    throw ParseError("unknown element model: " + model);
}

LatticeKind lattice_kind_from_string(const std::string& s) {
    if (s == "sc") return LatticeKind::sc;
    if (s == "ad") return LatticeKind::ad;
    if (s == "gl") return LatticeKind::gl;
    if (s == "custom") return LatticeKind::custom;
    throw ParseError("unknown lattice kind: " + s);
}

EngineConfig config_from_json(const Json& j) {
    EngineConfig cfg;
    if (!j.is_object()) throw ParseError("config must be an object");
    if (j.contains("type")) cfg.type = j.at("type").get<std::string>();
    if (j.contains("lattice")) cfg.lattice = lattice_kind_from_string(j.at("lattice").get<std::string>());
    if (j.contains("simple_roots") || j.contains("simple_coroots")) {
        cfg.lattice = LatticeKind::custom;
        CustomRootData data;
        for (const auto& row : j.at("simple_roots")) {
            IntVec v;
            for (const auto& e : row) v.push_back(e.get<i64>());
            data.simple_roots.push_back(v);
        }
        for (const auto& row : j.at("simple_coroots")) {
            IntVec v;
            for (const auto& e : row) v.push_back(e.get<i64>());
            data.simple_coroots.push_back(v);
        }
        cfg.custom = std::move(data);
    }
    return cfg;
}

RootDatum build_from_config(const EngineConfig& cfg) {
    return RootDatum::build(cfg.type, cfg.lattice, cfg.custom);
}

namespace {

std::string word_to_text(const RootDatum& rd, const WeylElt& w) {
    const auto& word = rd.reduced_word(w);
    if (word.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << " ";
        os << "s" << word[i];
    }
    return os.str();
}

}  // namespace

std::string im_to_text(const RootDatum& rd, const ImElement& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*T[x=" << key.x.to_string()
           << ", w=" << word_to_text(rd, key.w) << "]";
    }
    return os.str();
}

std::string bern_to_text(const RootDatum& rd, const BernElement& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*theta[" << key.x.to_string() << "]";
        if (!key.w.is_identity()) os << "*T[" << word_to_text(rd, key.w) << "]";
    }
    return os.str();
}

std::string ga_to_text(const GroupAlgElement& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : g.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*[" << x.to_string() << "]";
    }
    return os.str();
}

}  // namespace hecke
