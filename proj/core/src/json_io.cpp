#include "thetaq/json_io.hpp"

#include <json.hpp>

#include <sstream>

#include "thetaq/zmod.hpp"

namespace thetaq {

namespace {

using nlohmann::ordered_json;

ordered_json scalar_json(const CycloScalar& s) {
    const CycloScalar v = s.normalized();
    ordered_json j;
    const long h = v.nexp_half_units();
    if (h % 2 == 0) {
        j["nExp"] = std::to_string(h / 2);
    } else {
        j["nExp"] = std::to_string(h) + "/2";
    }
    std::vector<std::string> coeffs;
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

CycloScalar scalar_parse(const ordered_json& j) {
    if (!j.contains("coeffs") || !j.contains("nExp")) {
        throw JsonError("scalar: expected nExp and coeffs");
    }
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() % 2 != 0 || arr.empty()) {
        throw JsonError("scalar: coeffs must be a vector of length 2N");
    }
    const int N = static_cast<int>(arr.size() / 2);
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) {
        coeffs.push_back(rational_from_string(c.get<std::string>()));
    }
    const std::string e = j.at("nExp").get<std::string>();
    long half_units = 0;
    const size_t slash = e.find('/');
    if (slash == std::string::npos) {
        half_units = 2 * std::stol(e);
    } else {
        if (e.substr(slash + 1) != "2") throw JsonError("scalar: nExp denominator");
        half_units = std::stol(e.substr(0, slash));
    }
    return CycloScalar(N, std::move(coeffs), half_units);
}

std::string index_key(const std::vector<long>& mu) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << "]";
    return os.str();
}

std::vector<long> parse_index_key(const std::string& key) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
        throw JsonError("theta vector: bad index key " + key);
    }
    std::vector<long> mu;
    std::istringstream is(key.substr(1, key.size() - 2));
    std::string part;
    while (std::getline(is, part, ',')) mu.push_back(std::stol(part));
    return mu;
}

const char* kind_name(EventKind k) {
    switch (k) {
        case EventKind::Cup: return "cup";
        case EventKind::CupRev: return "cup*";
        case EventKind::Cap: return "cap";
        case EventKind::CapRev: return "cap*";
        case EventKind::CrossPos: return "x+";
        case EventKind::CrossNeg: return "x-";
        case EventKind::TwistPos: return "tw+";
        case EventKind::TwistNeg: return "tw-";
    }
    return "?";
}

EventKind kind_from_name(const std::string& name) {
    if (name == "cup") return EventKind::Cup;
    if (name == "cup*") return EventKind::CupRev;
    if (name == "cap") return EventKind::Cap;
    if (name == "cap*") return EventKind::CapRev;
    if (name == "x+") return EventKind::CrossPos;
    if (name == "x-") return EventKind::CrossNeg;
    if (name == "tw+") return EventKind::TwistPos;
    if (name == "tw-") return EventKind::TwistNeg;
    throw JsonError("diagram: unknown event kind " + name);
}

}  // namespace

std::string scalar_to_json(const CycloScalar& s) {
    return scalar_json(s).dump();
}

CycloScalar scalar_from_json(const std::string& text) {
    return scalar_parse(ordered_json::parse(text));
}

std::string heis_to_json(const HeisElement& x) {
    ordered_json j;
    j["p"] = x.p;
    j["q"] = x.q;
    j["k"] = x.k;
    return j.dump();
}

HeisElement heis_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    HeisElement x;
    x.p = j.at("p").get<std::vector<long>>();
    x.q = j.at("q").get<std::vector<long>>();
    x.k = j.at("k").get<long>();
    if (x.p.size() != x.q.size()) throw JsonError("heis element: p/q size");
    return x;
}

std::string theta_vector_to_json(const ThetaVector& v) {
    ordered_json j;
    j["N"] = v.order();
    j["g"] = v.genus();
    ordered_json coeffs = ordered_json::object();
    for (size_t i = 0; i < v.dimension(); ++i) {
        if (v.coeffs()[i].is_zero()) continue;
        coeffs[index_key(zng_from_index(i, v.order(), v.genus()))] =
            scalar_json(v.coeffs()[i]);
    }
    j["coeffs"] = coeffs;
    return j.dump();
}

ThetaVector theta_vector_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    const long N = j.at("N").get<long>();
    const size_t g = j.at("g").get<size_t>();
    ThetaVector v(N, g);
    for (const auto& [key, val] : j.at("coeffs").items()) {
        const auto mu = parse_index_key(key);
        if (mu.size() != g) throw JsonError("theta vector: index size");
        v.coeff(mu) = scalar_parse(val);
    }
    return v;
}

std::string operator_to_json(const CycloMatrix& m, long N) {
    ordered_json j;
    j["N"] = N;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            entries.push_back(scalar_json(m.at(r, c)));
        }
    }
    j["entries"] = entries;
    return j.dump();
}

CycloMatrix operator_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    const size_t rows = j.at("rows").get<size_t>();
    const size_t cols = j.at("cols").get<size_t>();
    const int N = j.at("N").get<int>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw JsonError("operator: entry count");
    CycloMatrix m(rows, cols, N);
    size_t i = 0;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            m.at(r, c) = scalar_parse(entries[i++]);
        }
    }
    return m;
}

std::string diagram_to_json(const SliceDiagram& d) {
    ordered_json j;
    j["N"] = d.N;
    ordered_json events = ordered_json::array();
    for (const auto& e : d.events) {
        ordered_json ev;
        ev["kind"] = kind_name(e.kind);
        if (e.kind == EventKind::Cup || e.kind == EventKind::CupRev) {
            ev["color"] = e.color;
        }
        ev["at"] = e.position;
        events.push_back(ev);
    }
    j["events"] = events;
    return j.dump();
}

SliceDiagram diagram_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    SliceDiagram d;
    d.N = j.at("N").get<long>();
    for (const auto& ev : j.at("events")) {
        SliceEvent e;
        e.kind = kind_from_name(ev.at("kind").get<std::string>());
        e.position = ev.at("at").get<size_t>();
        if (e.kind == EventKind::Cup || e.kind == EventKind::CupRev) {
            e.color = ev.at("color").get<long>();
        }
        d.events.push_back(e);
    }
    validate_diagram(d);
    return d;
}

}  // namespace thetaq
