#include "singlet/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "singlet/oracle_su2.hpp"
#include "singlet/oracle_su3.hpp"
#include "singlet/su2_engine.hpp"
#include "singlet/su3_engine.hpp"

namespace singlet::io {

json to_json(const Su2Label& label) {
    return json{{"l12", label.l12}, {"l23", label.l23}, {"l31", label.l31}};
}

json to_json(const Su3Label& label) {
    return json{{"l12", label.l12}, {"l21", label.l21}, {"l13", label.l13}, {"l31", label.l31},
                {"l23", label.l23}, {"l32", label.l32}, {"p", label.p}};
}

namespace {

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("label needs integer field '") + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

Su2Label su2_label_from_json(const json& j) {
    Su2Label l{int_field(j, "l12"), int_field(j, "l23"), int_field(j, "l31")};
    if (!l.valid()) throw std::invalid_argument("linking numbers must be non-negative");
    return l;
}

Su3Label su3_label_from_json(const json& j) {
    Su3Label l{int_field(j, "l12"), int_field(j, "l21"), int_field(j, "l13"), int_field(j, "l31"),
               int_field(j, "l23"), int_field(j, "l32"), int_field(j, "p")};
    if (!l.valid()) throw std::invalid_argument("linking numbers must be non-negative");
    return l;
}

namespace {

// 15 significant digits, explicitly lossy.
double approx(const SqrtRational& v) {
    const double r = v.radicand().get_d();
    return v.sign() * std::sqrt(r);
}

std::string approx_text(const SqrtRational& v) {
    std::ostringstream os;
    os.precision(15);
    os << approx(v);
    return os.str();
}

}  // namespace

json to_json(const SqrtRational& value, bool with_float) {
    json j{{"sign", value.sign()}, {"radicand", to_fraction_string(value.radicand())}};
    if (with_float) j["approx"] = approx_text(value);
    return j;
}

json basis_listing_su2(int n_max) {
    json rows = json::array();
    for (const auto& l : enumerate_su2(n_max)) {
        json row;
        row["label"] = to_json(l);
        row["weight"] = l.weight();
        row["norm_sq"] = to_fraction_string(su2::norm_sq(l));
        json legs = json::array();
        for (int leg = 1; leg <= 3; ++leg) legs.push_back(json{{"n", l.n(leg)}});
        row["legs"] = legs;
        rows.push_back(std::move(row));
    }
    return json{{"group", "su2"}, {"nmax", n_max}, {"count", rows.size()}, {"states", rows}};
}

json basis_listing_su3(int w_max) {
    json rows = json::array();
    for (const auto& l : enumerate_su3(w_max)) {
        json row;
        row["label"] = to_json(l);
        row["weight"] = l.weight();
        row["norm_sq"] = to_fraction_string(su3::norm_sq(l));
        json legs = json::array();
        for (int leg = 1; leg <= 3; ++leg) {
            const IrrepPQ pq = leg_irrep(l, leg);
            legs.push_back(json{{"p", pq.p}, {"q", pq.q}});
        }
        row["legs"] = legs;
        rows.push_back(std::move(row));
    }
    return json{{"group", "su3"}, {"wmax", w_max}, {"count", rows.size()}, {"states", rows}};
}

std::string basis_csv_su2(int n_max) {
    std::ostringstream os;
    os << "l12,l23,l31,weight,norm_sq,n1,n2,n3\n";
    for (const auto& l : enumerate_su2(n_max)) {
        os << l.l12 << ',' << l.l23 << ',' << l.l31 << ',' << l.weight() << ','
           << to_fraction_string(su2::norm_sq(l)) << ',' << l.n1() << ',' << l.n2() << ','
           << l.n3() << '\n';
    }
    return os.str();
}

std::string basis_csv_su3(int w_max) {
    std::ostringstream os;
    os << "l12,l21,l13,l31,l23,l32,p,weight,norm_sq,p1,q1,p2,q2,p3,q3\n";
    for (const auto& l : enumerate_su3(w_max)) {
        os << l.l12 << ',' << l.l21 << ',' << l.l13 << ',' << l.l31 << ',' << l.l23 << ','
           << l.l32 << ',' << l.p << ',' << l.weight() << ','
           << to_fraction_string(su3::norm_sq(l));
        for (int leg = 1; leg <= 3; ++leg) {
            const IrrepPQ pq = leg_irrep(l, leg);
            os << ',' << pq.p << ',' << pq.q;
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Oracle fallback for operators without a closed form.
std::vector<su3::Transition> act_su3_via_oracle(const InvariantOp& op, const Su3Label& label,
                                                oracle::StateCache& cache) {
    const oracle::Su3Vector v = oracle::apply_op(op, cache.get(label));
    std::vector<su3::Transition> out;
    const Rational s_source = cache.norm_sq(label);
    for (const auto& [target, coeff] : oracle::decompose(v, cache)) {
        out.push_back(
            {target, SqrtRational::scaled_sqrt(coeff, cache.norm_sq(target) / s_source)});
    }
    su3::sort_transitions(out);
    return out;
}

std::vector<su3::Transition> act_su3_via_oracle(const InvariantOp& op, const Su3Label& label) {
    oracle::StateCache cache;
    return act_su3_via_oracle(op, label, cache);
}

std::vector<su2::Transition> act_su2_via_oracle(const InvariantOp& op, const Su2Label& label,
                                                oracle::Su2StateCache& cache) {
    const oracle::Su2Vector v = oracle::apply_op_su2(op, cache.get(label));
    std::vector<su2::Transition> out;
    const Rational s_source = cache.norm_sq(label);
    for (const auto& [target, coeff] : oracle::decompose_su2(v, cache)) {
        out.push_back(
            {target, SqrtRational::scaled_sqrt(coeff, cache.norm_sq(target) / s_source)});
    }
    std::sort(out.begin(), out.end(), [](const su2::Transition& a, const su2::Transition& b) {
        return a.target < b.target;
    });
    return out;
}

std::vector<su2::Transition> act_su2_via_oracle(const InvariantOp& op, const Su2Label& label) {
    oracle::Su2StateCache cache;
    return act_su2_via_oracle(op, label, cache);
}

}  // namespace

json act_result_su2(const std::string& op_text, const Su2Label& label, bool via_oracle,
                    bool with_float) {
    const InvariantOp op = parse_op(op_text);
    std::vector<su2::Transition> transitions;
    if (via_oracle) {
        transitions = act_su2_via_oracle(op, label);
    } else {
        transitions = su2::act(op, label);
        std::sort(transitions.begin(), transitions.end(),
                  [](const su2::Transition& a, const su2::Transition& b) { return a.target < b.target; });
    }
    json ts = json::array();
    for (const auto& t : transitions)
        ts.push_back(json{{"target", to_json(t.target)}, {"coeff", to_json(t.coeff, with_float)}});
    return json{{"group", "su2"}, {"op", print_op(op)}, {"label", to_json(label)},
                {"transitions", ts}};
}

json act_result_su3(const std::string& op_text, const Su3Label& label, bool via_oracle,
                    bool with_float) {
    const InvariantOp op = parse_op(op_text);
    std::vector<su3::Transition> transitions =
        via_oracle ? act_su3_via_oracle(op, label) : su3::act(op, label);
    json ts = json::array();
    for (const auto& t : transitions)
        ts.push_back(json{{"target", to_json(t.target)}, {"coeff", to_json(t.coeff, with_float)}});
    return json{{"group", "su3"}, {"op", print_op(op)}, {"label", to_json(label)},
                {"transitions", ts}};
}

namespace {

template <typename Label, typename ActFn, typename LabelToJson>
json matrix_export_impl(const std::string& group, const std::string& cutoff_key, int cutoff,
                        const std::string& op_text, const std::vector<Label>& basis, ActFn&& act,
                        LabelToJson&& label_json, bool with_float) {
    std::map<Label, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    struct Entry {
        std::size_t row, col;
        SqrtRational coeff;
    };
    std::vector<Entry> entries;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& t : act(basis[col])) {
            auto it = index.find(t.target);
            if (it == index.end()) continue;  // target above the cutoff
            entries.push_back({it->second, col, t.coeff});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    json out;
    out["group"] = group;
    out[cutoff_key] = cutoff;
    out["op"] = op_text;
    out["basis_size"] = basis.size();
    json je = json::array();
    for (const auto& e : entries)
        je.push_back(json{{"row", label_json(basis[e.row])},
                          {"col", label_json(basis[e.col])},
                          {"coeff", to_json(e.coeff, with_float)}});
    out["entries"] = std::move(je);
    return out;
}

}  // namespace

json matrix_export_su2(const std::string& op_text, int n_max, bool via_oracle, bool with_float) {
    const InvariantOp op = parse_op(op_text);
    oracle::Su2StateCache cache;
    return matrix_export_impl(
        "su2", "nmax", n_max, print_op(op), enumerate_su2(n_max),
        [&](const Su2Label& l) {
            return via_oracle ? act_su2_via_oracle(op, l, cache) : su2::act(op, l);
        },
        [](const Su2Label& l) { return to_json(l); }, with_float);
}

json matrix_export_su3(const std::string& op_text, int w_max, bool via_oracle, bool with_float) {
    const InvariantOp op = parse_op(op_text);
    oracle::StateCache cache;
    return matrix_export_impl(
        "su3", "wmax", w_max, print_op(op), enumerate_su3(w_max),
        [&](const Su3Label& l) {
            return via_oracle ? act_su3_via_oracle(op, l, cache) : su3::act(op, l);
        },
        [](const Su3Label& l) { return to_json(l); }, with_float);
}

json ledger_json(const std::vector<validate::DiscrepancyRecord>& records,
                 const std::string& group) {
    json out;
    out["group"] = group;
    out["count"] = records.size();
    json recs = json::array();
    for (const auto& r : records) {
        json rec;
        rec["formula"] = r.formula;
        if (!r.op.empty()) rec["op"] = r.op;
        if (r.label_su3) rec["label"] = to_json(*r.label_su3);
        if (r.label_su2) rec["label"] = to_json(*r.label_su2);
        rec["paper"] = to_json(r.paper);
        rec["oracle"] = to_json(r.oracle);
        rec["paper_ref"] = r.paper_ref;
        rec["note"] = r.note;
        recs.push_back(std::move(rec));
    }
    out["records"] = std::move(recs);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace singlet::io
