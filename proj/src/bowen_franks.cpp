#include "sgap/bowen_franks.hpp"

#include <sstream>

#include "sgap/errors.hpp"
#include "sgap/presentation.hpp"

namespace sgap {

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (const auto& f : factors) {
        sep();
        out << "Z_" << f.get_str();
    }
    return out.str();
}

AbelianGroup group_from_smith(const SmithForm& s) {
    AbelianGroup g;
    for (const auto& d : s.diag) {
        if (d == 0)
            ++g.free_rank;
        else if (d > 1)
            g.factors.push_back(d);
    }
    return g;
}

BfGroups bf_groups(const IntMatrix& adjacency) {
    if (!adjacency.square()) throw DimensionError("bf_groups: adjacency must be square");
    IntMatrix m = IntMatrix::identity(adjacency.rows()) - adjacency;
    BfGroups r;
    r.snf = smith_normal_form(m);
    r.snf_t = smith_normal_form(m.transpose());
    r.bf = group_from_smith(r.snf);
    r.bf_t = group_from_smith(r.snf_t);
    // ker(Id - A) is free of rank n - rank(Id - A): one zero Smith entry each.
    r.bf1_rank = static_cast<int>(r.snf.diag.size()) - r.snf.rank();
    r.bf1_t_rank = static_cast<int>(r.snf_t.diag.size()) - r.snf_t.rank();
    return r;
}

int det_sign(const IntMatrix& adjacency) {
    if (!adjacency.square()) throw DimensionError("det_sign: adjacency must be square");
    return sign_of(det(IntMatrix::identity(adjacency.rows()) - adjacency));
}

std::string FlowClass::to_string() const {
    std::ostringstream out;
    if (kind == Kind::FullShift) {
        out << "flow equivalent to the full " << full_shift_symbols << "-shift (complete invariant)";
    } else {
        out << "invariant pair: BF = " << group.to_string() << ", sign det(Id - A) = "
            << determinant_sign << (complete ? " (complete invariant)" : " (not complete)");
    }
    return out.str();
}

FlowClass flow_class(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    if (c.degenerate())
        throw DegenerateError("flow_class: |S| = 1 has a single periodic orbit; "
                              "flow classification is not defined for it here");
    Presentation p = build_presentation(c);
    BfGroups bf = bf_groups(p.adjacency);
    FlowClass f;
    f.group = bf.bf;
    f.determinant_sign = det_sign(p.adjacency);
    switch (classify(c)) {
        case ShiftClass::FiniteSFT:
            f.kind = FlowClass::Kind::FullShift;
            f.full_shift_symbols = *c.size();
            f.complete = true;
            break;
        case ShiftClass::CofiniteSFT:
            f.kind = FlowClass::Kind::FullShift;
            f.full_shift_symbols = 2;
            f.complete = true;
            break;
        case ShiftClass::StrictlySofic:
            f.kind = FlowClass::Kind::InvariantPair;
            f.complete = false;
            break;
    }
    return f;
}

GroupPredictionReport check_group_predictions(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    if (c.degenerate())
        throw DegenerateError("check_group_predictions: group predictions are undefined for |S| = 1");
    Presentation p = build_presentation(c);
    BfGroups bf = bf_groups(p.adjacency);

    GroupPredictionReport rep;
    switch (classify(c)) {
        case ShiftClass::FiniteSFT: {
            BigInt k(static_cast<long>(*c.size()));
            if (k - 1 > 1) rep.predicted.factors.push_back(k - 1);  // Z_{k-1}, trivial for k = 2
            break;
        }
        case ShiftClass::CofiniteSFT:
            break;  // trivial group
        case ShiftClass::StrictlySofic: {
            BigInt l(static_cast<long>(c.period.size()));
            if (l > 1) rep.predicted.factors.push_back(l);  // Z_l, trivial for l = 1
            break;
        }
    }
    rep.bf = bf.bf;
    rep.bf_t = bf.bf_t;
    rep.group_matches = (bf.bf == rep.predicted);
    rep.transpose_matches = (bf.bf == bf.bf_t);
    rep.kernels_trivial = (bf.bf1_rank == 0 && bf.bf1_t_rank == 0);
    rep.det_negative = (det_sign(p.adjacency) < 0);
    rep.pass = rep.group_matches && rep.transpose_matches && rep.kernels_trivial && rep.det_negative;
    return rep;
}

}  // namespace sgap
