#include "qla/serialize.hpp"

#include "qla/error.hpp"
#include "qla/parse.hpp"

#include <sstream>

namespace qla {

namespace {

Rational parse_rational(const std::string &s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Json to_json(const LaurentPoly &p) {
    Json j = Json::object();
    for (const auto &[e, c] : p.terms()) j[std::to_string(e)] = rational_to_string(c);
    return j;
}

LaurentPoly laurent_from_json(const Json &j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "Laurent polynomial must be an object");
    std::vector<std::pair<int, Rational>> terms;
    for (const auto &[k, v] : j.items()) {
        if (!v.is_string()) throw Error(ErrorKind::ParseError, "coefficient must be a string");
        try {
            terms.emplace_back(std::stoi(k), parse_rational(v.get<std::string>()));
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::ParseError, "bad exponent '" + k + "'");
        }
    }
    return LaurentPoly::from_terms(terms);
}

Json to_json(const RatFunc &x) { return Json{{"var", "v"}, {"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

RatFunc ratfunc_from_json(const Json &j) {
    if (j.contains("var") && j.at("var") != "v") throw Error(ErrorKind::ParseError, "variable must be v");
    const LaurentPoly den = laurent_from_json(field(j, "den"));
    if (den.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "zero denominator in input");
    return RatFunc(laurent_from_json(field(j, "num")), den);
}

Json to_json(const CartanDatum &cd) { return Json{{"series", std::string(1, series_letter(cd.series))}, {"rank", cd.rank}}; }

CartanDatum cartan_from_json(const Json &j) {
    return parse_cartan(field(j, "series").get<std::string>() + std::to_string(field(j, "rank").get<int>()));
}

Json to_json(const SparseMatrix &m) {
    Json e = Json::array();
    m.for_each([&](std::size_t i, std::size_t k, const RatFunc &x) { e.push_back(Json{i, k, to_json(x)}); });
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

SparseMatrix sparse_from_json(const Json &j) {
    SparseMatrix m(field(j, "rows").get<std::size_t>(), field(j, "cols").get<std::size_t>());
    for (const auto &e : field(j, "entries")) {
        const auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
        if (i >= m.rows() || k >= m.cols()) throw Error(ErrorKind::ParseError, "matrix entry out of range");
        m.set(i, k, ratfunc_from_json(e.at(2)));
    }
    return m;
}

Json to_json(const SparseVec &x) {
    Json e = Json::array();
    for (const auto &[i, v] : x) e.push_back(Json{i, to_json(v)});
    return e;
}

SparseVec sparse_vec_from_json(const Json &j) {
    SparseVec x;
    for (const auto &e : j) x[e.at(0).get<std::size_t>()] = ratfunc_from_json(e.at(1));
    return x;
}

Json to_json(const Module &m) {
    Json j{{"cartan", to_json(m.cd)}, {"dim", m.dim()}, {"weights", m.weights}};
    Json e = Json::array(), f = Json::array();
    for (const auto &x : m.E) e.push_back(to_json(x));
    for (const auto &x : m.F) f.push_back(to_json(x));
    j["E"] = e;
    j["F"] = f;
    return j;
}

Json to_json(const IrrepModule &m) {
    Json j = to_json(static_cast<const Module &>(m));
    j["highest_weight"] = m.highest_weight;
    j["labels"] = m.labels;
    return j;
}

Json to_json(const Report &r) {
    Json j = Json::object();
    for (const auto &c : r.checks) {
        Json e{{"passed", c.passed}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        j[c.name] = e;
    }
    return j;
}

Json to_json(const QuantumLieAlgebra &A, const Report *checks) {
    Json basis = Json::array();
    for (const auto &e : A.basis) {
        Json b{{"label", e.cartan ? "H" : "X"}, {"name", e.name}};
        if (e.cartan) b["index"] = e.index;
        else b["root"] = e.root;
        if (e.i) {
            b["i"] = e.i;
            b["j"] = e.j;
        }
        basis.push_back(b);
    }
    Json constants = Json::array();
    for (const auto &[ab, vec] : A.constants)
        for (const auto &[c, x] : vec) constants.push_back(Json{{"a", ab.first}, {"b", ab.second}, {"c", c}, {"value", to_json(x)}});
    Json j{{"cartan", to_json(A.cd)}, {"basis", basis}, {"constants", constants}, {"provenance", to_string(A.provenance)}};
    if (A.params) j["params"] = Json{{"n", A.params->n}, {"s", to_json(A.params->s)}, {"t", to_json(A.params->t)}};
    j["normalized"] = A.normalized;
    j["checks"] = checks ? to_json(*checks) : Json::object();
    return j;
}

QuantumLieAlgebra algebra_from_json(const Json &j) {
    QuantumLieAlgebra A;
    A.cd = cartan_from_json(field(j, "cartan"));
    for (const auto &b : field(j, "basis")) {
        BasisElement e;
        const auto label = field(b, "label").get<std::string>();
        e.cartan = label == "H";
        if (!e.cartan && label != "X") throw Error(ErrorKind::ParseError, "basis label must be X or H");
        e.name = field(b, "name").get<std::string>();
        if (e.cartan) {
            e.index = field(b, "index").get<int>();
            e.root.assign(static_cast<std::size_t>(A.cd.rank), 0);
        } else {
            e.root = field(b, "root").get<std::vector<int>>();
        }
        if (b.contains("i")) {
            e.i = b.at("i").get<int>();
            e.j = b.at("j").get<int>();
        }
        A.basis.push_back(std::move(e));
    }
    for (const auto &c : field(j, "constants")) {
        const auto a = field(c, "a").get<std::size_t>(), b = field(c, "b").get<std::size_t>(), k = field(c, "c").get<std::size_t>();
        if (a >= A.dim() || b >= A.dim() || k >= A.dim()) throw Error(ErrorKind::ParseError, "constant index out of range");
        A.set(a, b, k, ratfunc_from_json(field(c, "value")));
    }
    const auto prov = field(j, "provenance").get<std::string>();
    if (prov == to_string(Provenance::ExplicitSln)) A.provenance = Provenance::ExplicitSln;
    else if (prov == to_string(Provenance::GenericPipeline)) A.provenance = Provenance::GenericPipeline;
    else throw Error(ErrorKind::ParseError, "unknown provenance '" + prov + "'");
    if (j.contains("params")) {
        const auto &p = j.at("params");
        A.params = SlnParams{field(p, "n").get<int>(), ratfunc_from_json(field(p, "s")), ratfunc_from_json(field(p, "t"))};
    }
    if (j.contains("normalized")) A.normalized = j.at("normalized").get<bool>();
    return A;
}

std::string to_text(const QuantumLieAlgebra &A) {
    std::ostringstream out;
    for (const auto &[ab, vec] : A.constants)
        for (const auto &[c, x] : vec)
            out << "f[" << A.basis[ab.first].name << "," << A.basis[ab.second].name << "]^{" << A.basis[c].name << "} = " << x.to_string() << "\n";
    return out.str();
}

QuantumLieAlgebra algebra_from_text(const std::string &text, const QuantumLieAlgebra &shape) {
    QuantumLieAlgebra A = shape;
    A.constants.clear();
    std::map<std::string, std::size_t> index;
    for (std::size_t a = 0; a < A.dim(); ++a) index[A.basis[a].name] = a;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto close = line.find("]^{"), end = line.find("} = ");
        if (line.rfind("f[", 0) != 0 || close == std::string::npos || end == std::string::npos)
            throw Error(ErrorKind::ParseError, "bad table line '" + line + "'");
        const std::string pair = line.substr(2, close - 2);
        const std::string cname = line.substr(close + 3, end - close - 3);
        std::optional<std::pair<std::size_t, std::size_t>> ab;
        for (std::size_t k = pair.find(','); k != std::string::npos && !ab; k = pair.find(',', k + 1)) {
            const auto l = index.find(pair.substr(0, k)), r = index.find(pair.substr(k + 1));
            if (l != index.end() && r != index.end()) ab = {l->second, r->second};
        }
        const auto c = index.find(cname);
        if (!ab || c == index.end()) throw Error(ErrorKind::ParseError, "unknown basis names in '" + line + "'");
        A.set(ab->first, ab->second, c->second, parse_ratfunc(line.substr(end + 4)));
    }
    return A;
}

}  // namespace qla
