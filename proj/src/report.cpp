#include "sgap/report.hpp"

#include <json.hpp>
#include <sstream>

#include "sgap/errors.hpp"
#include "sgap/spectral.hpp"
#include "sgap/zeta.hpp"

namespace sgap {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

BigInt big_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    throw ValidationError("expected integer or decimal string in report JSON");
}

json coeffs_to_json(const IntPoly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(big_to_json(p.coeff(i)));
    if (p.is_zero()) arr = json::array({0});
    return arr;
}

IntPoly coeffs_from_json(const json& j) {
    std::vector<BigInt> c;
    for (const auto& e : j) c.push_back(big_from_json(e));
    return IntPoly(std::move(c));
}

json ratfunc_to_json(const RatFunc& f) {
    return json{{"num", coeffs_to_json(f.num())}, {"den", coeffs_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(coeffs_from_json(j.at("num")), coeffs_from_json(j.at("den")));
}

json matrix_to_json(const IntMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(big_to_json(a.at(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    const int n = static_cast<int>(j.size());
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j.at(i);
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("adjacency in report JSON is not square");
        for (int c = 0; c < n; ++c) a.at(i, c) = big_from_json(row.at(c));
    }
    return a;
}

json group_to_json(const AbelianGroup& g) {
    json factors = json::array();
    for (const BigInt& d : g.factors) factors.push_back(big_to_json(d));
    return json{{"free_rank", g.free_rank}, {"factors", std::move(factors)}};
}

// Ascending-power rendering ("1 - t - t^2"): zeta functions read naturally
// as power series, unlike the descending default used for polynomials in x.
std::string poly_ascending(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigInt& c = p.coeff(i);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string zeta_display(const RatFunc& z) {
    IntPoly num = z.num();
    IntPoly den = z.den();
    // Sign convention for display only: lowest nonzero denominator
    // coefficient positive, so zeta(0) = 1 shows up as "1 / (1 - ...)".
    int v = den.valuation();
    if (v >= 0 && den.coeff(v) < 0) {
        num = -num;
        den = -den;
    }
    if (den == IntPoly::constant(1)) return poly_ascending(num, "t");
    return "(" + poly_ascending(num, "t") + ") / (" + poly_ascending(den, "t") + ")";
}

AbelianGroup group_from_json(const json& j) {
    AbelianGroup g;
    g.free_rank = j.at("free_rank").get<int>();
    for (const auto& e : j.at("factors")) g.factors.push_back(big_from_json(e));
    return g;
}

}  // namespace

AnalysisReport build_analysis(const GapSpec& raw, const ReportOptions& opt) {
    GapSpec spec = canonicalize(raw);
    Presentation pres = build_presentation(spec);

    AnalysisReport rep;
    rep.spec = render_spec(spec);
    rep.shift_class = to_string(classify(spec));
    rep.case_tag = to_string(pres.case_tag);
    rep.degenerate = spec.degenerate();
    rep.vertices = pres.n;
    rep.adjacency = pres.adjacency;
    rep.char_poly_coeffs = char_poly(pres.adjacency);

    EntropyResult er = entropy(spec, opt.tol);
    rep.lambda = er.lambda;
    rep.h_bits = er.h_bits;
    rep.residual = er.residual;
    rep.f_s = entropy_function(spec);
    rep.q_s = RatFunc(rep.char_poly_coeffs * rep.f_s.den(), rep.f_s.num());
    rep.zeta = zeta_closed_form(spec);
    if (opt.periodic_n > 0) rep.periodic_counts = periodic_counts(rep.zeta, opt.periodic_n);

    BfGroups bf = bf_groups(pres.adjacency);
    rep.bf = bf.bf;
    rep.bf_t = bf.bf_t;
    rep.bf1_rank = bf.bf1_rank;
    rep.bf1_t_rank = bf.bf1_t_rank;
    rep.det_sign = det_sign(pres.adjacency);
    rep.flow = spec.degenerate() ? std::string() : flow_class(spec).to_string();
    rep.graph_period = graph_period(pres.adjacency);

    if (opt.run_checks) {
        CheckOptions copt;
        copt.pmax = opt.check_pmax;
        copt.tol = opt.tol;
        rep.checks = checks_as_map(run_spec_checks(spec, copt));
    }
    return rep;
}

std::string report_to_json(const AnalysisReport& rep, int indent) {
    json j;
    j["spec"] = rep.spec;
    j["class"] = rep.shift_class;
    j["case"] = rep.case_tag;
    j["degenerate"] = rep.degenerate;
    j["vertices"] = rep.vertices;
    j["adjacency"] = matrix_to_json(rep.adjacency);
    j["char_poly"] = coeffs_to_json(rep.char_poly_coeffs);
    j["entropy"] = json{{"lambda", rep.lambda}, {"h_bits", rep.h_bits}, {"residual", rep.residual}};
    j["f_s"] = ratfunc_to_json(rep.f_s);
    j["q_s"] = ratfunc_to_json(rep.q_s);
    j["zeta"] = ratfunc_to_json(rep.zeta);
    json pc = json::array();
    for (const BigInt& v : rep.periodic_counts) pc.push_back(big_to_json(v));
    j["periodic_counts"] = std::move(pc);
    j["bowen_franks"] = json{{"bf", group_to_json(rep.bf)},
                             {"bf_t", group_to_json(rep.bf_t)},
                             {"bf1_rank", rep.bf1_rank},
                             {"bf1_t_rank", rep.bf1_t_rank},
                             {"det_sign", rep.det_sign}};
    j["flow"] = rep.flow;
    j["graph_period"] = rep.graph_period;
    j["checks"] = rep.checks;
    return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    AnalysisReport rep;
    rep.spec = j.at("spec").get<std::string>();
    rep.shift_class = j.at("class").get<std::string>();
    rep.case_tag = j.at("case").get<std::string>();
    rep.degenerate = j.at("degenerate").get<bool>();
    rep.vertices = j.at("vertices").get<int>();
    rep.adjacency = matrix_from_json(j.at("adjacency"));
    rep.char_poly_coeffs = coeffs_from_json(j.at("char_poly"));
    rep.lambda = j.at("entropy").at("lambda").get<double>();
    rep.h_bits = j.at("entropy").at("h_bits").get<double>();
    rep.residual = j.at("entropy").at("residual").get<double>();
    rep.f_s = ratfunc_from_json(j.at("f_s"));
    rep.q_s = ratfunc_from_json(j.at("q_s"));
    rep.zeta = ratfunc_from_json(j.at("zeta"));
    for (const auto& e : j.at("periodic_counts")) rep.periodic_counts.push_back(big_from_json(e));
    const auto& b = j.at("bowen_franks");
    rep.bf = group_from_json(b.at("bf"));
    rep.bf_t = group_from_json(b.at("bf_t"));
    rep.bf1_rank = b.at("bf1_rank").get<int>();
    rep.bf1_t_rank = b.at("bf1_t_rank").get<int>();
    rep.det_sign = b.at("det_sign").get<int>();
    rep.flow = j.at("flow").get<std::string>();
    rep.graph_period = j.at("graph_period").get<std::int64_t>();
    rep.checks = j.at("checks").get<std::map<std::string, std::string>>();
    return rep;
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "spec:           " << rep.spec << "\n";
    os << "class:          " << rep.shift_class << (rep.degenerate ? "  (degenerate)" : "") << "\n";
    os << "case:           " << rep.case_tag << "\n";
    os << "vertices:       " << rep.vertices << "\n";
    if (rep.vertices <= 12) os << "adjacency:\n" << rep.adjacency.to_string() << "\n";
    os << "char poly:      " << rep.char_poly_coeffs.to_string() << "\n";
    os << "entropy:        lambda = " << rep.lambda << ", h = " << rep.h_bits
       << " bits (residual " << rep.residual << ")\n";
    os << "f_S(x):         " << rep.f_s.to_string("x") << "\n";
    os << "chi/f_S:        " << rep.q_s.to_string("x") << "\n";
    os << "zeta(t):        " << zeta_display(rep.zeta) << "\n";
    os << "periodic:      ";
    for (const BigInt& v : rep.periodic_counts) os << " " << v.get_str();
    os << "\n";
    os << "BF(X):          " << rep.bf.to_string() << "   BF(X^t): " << rep.bf_t.to_string()
       << "   det sign: " << rep.det_sign << "\n";
    os << "flow:           " << (rep.flow.empty() ? "(not defined)" : rep.flow) << "\n";
    os << "graph period:   " << rep.graph_period << "\n";
    if (!rep.checks.empty()) {
        os << "checks:\n";
        for (const auto& [name, status] : rep.checks)
            os << "  " << name << ": " << status << "\n";
    }
    return os.str();
}

}  // namespace sgap
