#include "fundalc/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace fundalc {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return std::stoll(s.substr(start, pos - start));
    }
};

AffElt parse_factor(const RootDatum& d, Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos >= c.s.size()) throw ParseError("expected factor", start);

    if (c.s[c.pos] == '1') {
        ++c.pos;
        return aff_identity(d);
    }
    if (c.s.compare(c.pos, 3, "tau") == 0) {
        c.pos += 3;
        long long idx = 1;
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) idx = c.integer();
        const auto& gens = omega_group(d).generators;
        if (idx < 1 || idx > static_cast<long long>(gens.size()))
            throw ParseError("length-zero generator index out of range", start);
        return gens[static_cast<size_t>(idx - 1)];
    }
    if (c.s[c.pos] == 't') {
        ++c.pos;
        if (!c.eat('[')) throw ParseError("expected '[' after t", c.pos);
        IVec lam;
        lam.push_back(c.integer());
        while (c.eat(',')) lam.push_back(c.integer());
        if (!c.eat(']')) throw ParseError("expected ']' in translation", c.pos);
        if (static_cast<int>(lam.size()) != d.rank)
            throw ParseError("translation arity " + std::to_string(lam.size()) +
                                 " does not match rank " + std::to_string(d.rank),
                             start);
        return aff_translation(lam);
    }
    if (c.s[c.pos] == 's') {
        ++c.pos;
        long long idx = c.integer();
        if (idx == 0) {
            if (d.num_components != 1)
                throw ParseError("s0 needs an irreducible datum", start);
            const auto& sa = simple_affine_reflections(d);
            return sa.elts[static_cast<size_t>(d.ss_rank())];
        }
        if (idx < 1 || idx > d.ss_rank())
            throw ParseError("simple reflection index out of range", start);
        return aff_from_weyl(d.simple_reflection(static_cast<int>(idx - 1)));
    }
    throw ParseError("unexpected character '" + std::string(1, c.s[c.pos]) + "'", start);
}

}  // namespace

AffElt parse_element(const RootDatum& d, const std::string& literal) {
    Cursor c{literal};
    AffElt x = parse_factor(d, c);
    while (!c.done()) {
        if (!c.eat('*')) throw ParseError("expected '*' between factors", c.pos);
        x = aff_mul(x, parse_factor(d, c));
    }
    return x;
}

std::vector<int> finite_word(const RootDatum& d, const WeylElt& w) {
    std::vector<int> letters;
    WeylElt cur = w;
    while (!cur.is_identity()) {
        int pick = -1;
        for (int i = 0; i < d.ss_rank(); ++i) {
            int img = d.apply_to_root(cur.m, d.simples[static_cast<size_t>(i)]);
            if (!d.is_positive(img)) { pick = i; break; }
        }
        if (pick < 0) throw std::logic_error("finite element with no descent");
        cur = cur * d.simple_reflection(pick);
        letters.push_back(pick);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::string print_element(const RootDatum& d, const AffElt& x) {
    std::ostringstream os;
    os << "t[";
    for (size_t i = 0; i < x.t.size(); ++i) os << (i ? "," : "") << x.t[i];
    os << "]";
    for (int i : finite_word(d, WeylElt{x.w})) os << "*s" << (i + 1);
    return os.str();
}

std::string rat_str(const Rat& r) { return r.str(); }

std::string qvec_str(const QVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    return os.str();
}

namespace {

using nlohmann::json;

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(r.str());
    return a;
}

json element_json_obj(const RootDatum& d, const AffElt& x) {
    json j;
    j["t"] = x.t;
    j["w_word"] = finite_word(d, WeylElt{x.w});
    j["literal"] = print_element(d, x);
    return j;
}

json kappa_json(const KottwitzClass& k) {
    json j;
    json tor = json::array();
    for (const auto& [v, m] : k.torsion) tor.push_back({{"value", v}, {"mod", m}});
    j["torsion"] = tor;
    j["free"] = k.free_part;
    j["str"] = k.str();
    return j;
}

}  // namespace

std::string element_json(const RootDatum& d, const AffElt& x) {
    return element_json_obj(d, x).dump();
}

std::string newton_json(const RootDatum& d, const NewtonDatum& nd) {
    json j;
    j["nu"] = qvec_json(nd.nu);
    j["nu_dom"] = qvec_json(nd.nu_dom);
    j["period"] = nd.period;
    j["kappa"] = kappa_json(nd.kappa);
    j["v_space"] = {{"point", qvec_json(nd.base)}, {"basis", json::array()}};
    for (const QVec& dir : nd.dirs) j["v_space"]["basis"].push_back(qvec_json(dir));
    (void)d;
    return j.dump();
}

std::string vdatum_json(const RootDatum& d, const VDatum& vd) {
    json j;
    j["v"] = qvec_json(vd.v);
    j["zero"] = vd.zero;
    j["plus"] = vd.plus;
    (void)d;
    return j.dump();
}

std::string certificate_json(const RootDatum& d, const ReductionCertificate& cert) {
    json j;
    json path = json::array();
    for (const ReductionStep& st : cert.path) {
        path.push_back({{"letter", st.letter},
                        {"from", element_json_obj(d, st.from)},
                        {"to", element_json_obj(d, st.to)},
                        {"drops", st.drops}});
    }
    j["path"] = path;
    j["minimal"] = element_json_obj(d, cert.minimal);
    j["x"] = element_json_obj(d, cert.straight);
    j["J"] = cert.j_letters;
    j["u"] = element_json_obj(d, cert.u);
    j["regular_point_status"] = cert.regular_point_status;
    return j.dump();
}

}  // namespace fundalc
