#include "sgap/gapset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sgap/errors.hpp"

namespace sgap {

std::string to_string(ShiftClass c) {
    switch (c) {
        case ShiftClass::FiniteSFT: return "FiniteSFT";
        case ShiftClass::CofiniteSFT: return "CofiniteSFT";
        case ShiftClass::StrictlySofic: return "StrictlySofic";
    }
    return "?";
}

std::optional<int64_t> GapSpec::size() const {
    if (kind == Kind::Finite) return static_cast<int64_t>(finite_gaps.size());
    return std::nullopt;
}

std::vector<int64_t> GapSpec::transient_sums() const {
    std::vector<int64_t> s(transient.size());
    std::partial_sum(transient.begin(), transient.end(), s.begin());
    return s;
}

int64_t GapSpec::s_k() const {
    if (kind == Kind::Finite) return finite_gaps.back();
    return std::accumulate(transient.begin(), transient.end(), int64_t{0});
}

std::vector<int64_t> GapSpec::period_window_sums() const {
    std::vector<int64_t> w;
    w.reserve(period.size());
    int64_t s = s_k();
    w.push_back(s);
    for (size_t i = 0; i + 1 < period.size(); ++i) {
        s += period[i];
        w.push_back(s);
    }
    return w;
}

int64_t GapSpec::period_sum() const {
    return std::accumulate(period.begin(), period.end(), int64_t{0});
}

namespace {

// Strip all whitespace, lowercase nothing (keywords are already lowercase in
// the grammar), and return the compacted text.
std::string compact(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::vector<int64_t> parse_list(const std::string& text, const std::string& what) {
    if (text.empty()) throw SyntaxError("empty " + what + " list");
    std::vector<int64_t> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw SyntaxError("empty entry in " + what + " list");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw SyntaxError("bad token '" + tok + "' in " + what + " list (nonnegative integers only)");
        if (tok.size() > 18) throw ValidationError("entry '" + tok + "' in " + what + " list is out of range");
        out.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

GapSpec parse_spec(const std::string& text) {
    std::string t = compact(text);
    GapSpec spec;
    if (t.rfind("finite:", 0) == 0) {
        spec.kind = GapSpec::Kind::Finite;
        spec.finite_gaps = parse_list(t.substr(7), "finite gap");
        for (size_t i = 1; i < spec.finite_gaps.size(); ++i)
            if (spec.finite_gaps[i] <= spec.finite_gaps[i - 1])
                throw ValidationError("finite gap list must be strictly increasing");
        return spec;
    }
    if (t.rfind("delta:", 0) == 0) {
        std::string rest = t.substr(6);
        size_t bar = rest.find('|');
        if (bar == std::string::npos) throw SyntaxError("delta form needs 'transient | period'");
        if (rest.find('|', bar + 1) != std::string::npos) throw SyntaxError("delta form has more than one '|'");
        spec.kind = GapSpec::Kind::EventuallyPeriodic;
        spec.transient = parse_list(rest.substr(0, bar), "transient difference");
        spec.period = parse_list(rest.substr(bar + 1), "period difference");
        for (size_t i = 1; i < spec.transient.size(); ++i)
            if (spec.transient[i] <= 0)
                throw ValidationError("transient differences after the first must be positive");
        for (int64_t g : spec.period)
            if (g <= 0) throw ValidationError("period differences must be positive");
        return spec;
    }
    throw SyntaxError("spec must start with 'finite:' or 'delta:'");
}

std::string render_spec(const GapSpec& spec) {
    std::ostringstream out;
    auto join = [&out](const std::vector<int64_t>& v) {
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    };
    if (spec.kind == GapSpec::Kind::Finite) {
        out << "finite:";
        join(spec.finite_gaps);
    } else {
        out << "delta:";
        join(spec.transient);
        out << "|";
        join(spec.period);
    }
    return out.str();
}

GapSpec canonicalize(const GapSpec& spec) {
    if (spec.kind == GapSpec::Kind::Finite) return spec;
    GapSpec c = spec;
    // Primitive period: the shortest prefix whose repetition gives the block.
    int l = static_cast<int>(c.period.size());
    for (int p = 1; p <= l; ++p) {
        if (l % p != 0) continue;
        bool rep = true;
        for (int i = p; i < l && rep; ++i) rep = (c.period[size_t(i)] == c.period[size_t(i % p)]);
        if (rep) {
            c.period.resize(static_cast<size_t>(p));
            break;
        }
    }
    // Shortest transient: a trailing transient element equal to the period's
    // last element is the same difference sequence as rotating the period
    // right by one, so absorb it. Keep k >= 1.
    while (c.transient.size() > 1 && c.transient.back() == c.period.back()) {
        c.transient.pop_back();
        std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
    }
    return c;
}

ShiftClass classify(const GapSpec& spec) {
    if (spec.kind == GapSpec::Kind::Finite) return ShiftClass::FiniteSFT;
    GapSpec c = canonicalize(spec);
    if (c.period.size() == 1 && c.period[0] == 1) return ShiftClass::CofiniteSFT;
    return ShiftClass::StrictlySofic;
}

bool contains(const GapSpec& spec, int64_t j) {
    if (j < 0) return false;
    if (spec.kind == GapSpec::Kind::Finite)
        return std::binary_search(spec.finite_gaps.begin(), spec.finite_gaps.end(), j);
    auto sums = spec.transient_sums();
    int64_t sk = sums.back();
    if (j < sk) return std::binary_search(sums.begin(), sums.end(), j);
    // Members >= s_k repeat with period g: s_k + (prefix sums of the period
    // block) + multiples of g.
    int64_t g = spec.period_sum();
    int64_t r = (j - sk) % g;
    int64_t acc = 0;
    if (r == 0) return true;
    for (size_t i = 0; i + 1 < spec.period.size(); ++i) {
        acc += spec.period[i];
        if (acc == r) return true;
        if (acc > r) return false;
    }
    return false;
}

bool exists_gap_at_least(const GapSpec& spec, int64_t a) {
    if (spec.kind == GapSpec::Kind::EventuallyPeriodic) return true;
    return spec.finite_gaps.back() >= a;
}

}  // namespace sgap
