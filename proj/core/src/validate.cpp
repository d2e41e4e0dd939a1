#include "singlet/validate.hpp"

#include <algorithm>
#include <cstdlib>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "singlet/oracle_su2.hpp"
#include "singlet/oracle_su3.hpp"
#include "singlet/published_forms.hpp"
#include "singlet/su2_engine.hpp"
#include "singlet/su3_engine.hpp"

namespace singlet::validate {

int thread_budget() {
    if (const char* env = std::getenv("SINGLET_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

namespace {

using oracle::StateCache;
using oracle::Su3Vector;

// Deterministic fan-out: every index gets its own failure slot, merged in
// order afterwards, so the report is independent of the thread count.
template <typename Fn>
std::vector<std::string> parallel_collect(std::size_t count, Fn&& body) {
    std::vector<std::vector<std::string>> slots(count);
    const int threads = std::min<int>(thread_budget(), static_cast<int>(count ? count : 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, slots[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    body(i, slots[i]);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<std::string> merged;
    for (auto& s : slots)
        for (auto& msg : s) merged.push_back(std::move(msg));
    return merged;
}

std::string label_text(const Su3Label& l) {
    std::ostringstream os;
    os << "(" << l.l12 << "," << l.l21 << "," << l.l13 << "," << l.l31 << "," << l.l23 << ","
       << l.l32 << ";p=" << l.p << ")";
    return os.str();
}

std::string label_text(const Su2Label& l) {
    std::ostringstream os;
    os << "(" << l.l12 << "," << l.l23 << "," << l.l31 << ")";
    return os.str();
}

void add_check(Report& report, const std::string& name, const std::vector<std::string>& failures,
               std::size_t cases) {
    CheckResult c;
    c.name = name;
    c.passed = failures.empty();
    if (failures.empty()) {
        c.detail = std::to_string(cases) + " cases";
    } else {
        c.detail = std::to_string(failures.size()) + " failure(s); first: " + failures.front();
    }
    report.checks.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// SU(2)
// ---------------------------------------------------------------------------

// Engine coefficients are normalized; pull the rational unnormalized
// coefficient back out through the norms (exactness is part of the contract).
bool unnormalized_su2(const su2::Transition& t, const Su2Label& source, Rational& out) {
    Rational ratio = t.coeff.radicand() * su2::norm_sq(source) / su2::norm_sq(t.target);
    Rational root;
    if (!rational_sqrt(ratio, root)) return false;
    out = t.coeff.sign() < 0 ? Rational(-root) : root;
    return true;
}

std::vector<InvariantOp> su2_catalog() {
    std::vector<InvariantOp> out;
    for (int leg = 1; leg <= 3; ++leg) out.push_back(InvariantOp::number(leg));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i != j) out.push_back(parse_op("a+(" + std::to_string(i) + ").a(" + std::to_string(j) + ")"));
            out.push_back(parse_op("a+(" + std::to_string(i) + ").b+(" + std::to_string(j) + ")"));
            out.push_back(parse_op("a(" + std::to_string(i) + ").b(" + std::to_string(j) + ")"));
        }
    return out;
}

void su2_norm_and_gram(Report& report, const std::vector<Su2Label>& labels,
                       oracle::Su2StateCache& cache) {
    std::vector<std::string> norm_failures;
    for (const auto& l : labels) {
        if (cache.norm_sq(l) != su2::norm_sq(l))
            norm_failures.push_back("norm mismatch at " + label_text(l));
    }
    add_check(report, "su2 norm formula vs oracle", norm_failures, labels.size());

    std::vector<std::string> gram_failures;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i].weight() != labels[j].weight()) continue;
            ++pairs;
            GaussianRational g = inner(cache.get(labels[i]), cache.get(labels[j]));
            if (!g.is_zero())
                gram_failures.push_back("overlap " + label_text(labels[i]) + " with " +
                                        label_text(labels[j]));
        }
    add_check(report, "su2 orthogonality (Gram diagonal)", gram_failures, pairs);
}

void su2_constraints(Report& report, const std::vector<Su2Label>& labels,
                     oracle::Su2StateCache& cache) {
    std::vector<std::string> gauss_failures;
    std::vector<std::string> casimir_failures;
    for (const auto& l : labels) {
        const auto& v = cache.get(l);
        for (int a = 1; a <= 3; ++a)
            if (!oracle::su2_gauss_total(a, v).empty())
                gauss_failures.push_back("E^" + std::to_string(a) + " at " + label_text(l));
        for (int leg = 1; leg <= 3; ++leg) {
            const int n = l.n(leg);
            Rational jj = Rational(n * (n + 2), 4);
            jj.canonicalize();
            if (!(oracle::su2_casimir_leg(leg, v) == v * jj))
                casimir_failures.push_back("leg " + std::to_string(leg) + " at " + label_text(l));
        }
    }
    add_check(report, "su2 gauss law annihilation", gauss_failures, labels.size() * 3);
    add_check(report, "su2 leg casimir eigenvalues", casimir_failures, labels.size() * 3);
}

void su2_actions(Report& report, const std::vector<Su2Label>& labels,
                 oracle::Su2StateCache& cache) {
    const auto catalog = su2_catalog();
    // Prebuild every state (targets included) so the fan-out below only reads.
    for (const auto& op : catalog)
        for (const auto& l : labels)
            for (const auto& t : su2::act(op, l)) cache.get(t.target);
    const auto failures = parallel_collect(catalog.size(), [&](std::size_t k,
                                                               std::vector<std::string>& out) {
        const InvariantOp& op = catalog[k];
        for (const auto& l : labels) {
            oracle::Su2Vector result = oracle::apply_op_su2(op, cache.get(l));
            for (const auto& t : su2::act(op, l)) {
                Rational c;
                if (!unnormalized_su2(t, l, c)) {
                    out.push_back("irrational unnormalized coefficient for " + print_op(op) +
                                  " at " + label_text(l));
                    continue;
                }
                result -= cache.get(t.target) * c;
            }
            if (!result.empty())
                out.push_back(print_op(op) + " at " + label_text(l) +
                              " disagrees with the oracle");
        }
    });
    add_check(report, "su2 operator actions vs oracle", failures, catalog.size() * labels.size());
}

void su2_adjointness(Report& report, const std::vector<Su2Label>& labels) {
    std::vector<std::string> failures;
    std::size_t cases = 0;
    for (const auto& op : su2_catalog()) {
        const auto [adj, sign] = adjoint_op(op);
        for (const auto& l : labels)
            for (const auto& t : su2::act(op, l)) {
                ++cases;
                SqrtRational expected = sign < 0 ? -t.coeff : t.coeff;
                bool found = false;
                for (const auto& back : su2::act(adj, t.target))
                    if (back.target == l) {
                        found = back.coeff == expected;
                        break;
                    }
                if (!found)
                    failures.push_back("adjoint mismatch " + print_op(op) + " at " + label_text(l));
            }
    }
    add_check(report, "su2 adjoint pairing", failures, cases);
}

void su2_ledger(Report& report, const std::vector<Su2Label>& labels) {
    const std::vector<std::pair<std::string, std::string>> printed_ops = {
        {"a+(3).b+(1)", "published SU(2) action table, pair-creation row (i = 1)"},
        {"a+(3).b+(2)", "published SU(2) action table, pair-creation row (i = 2)"},
        {"a+(3).a(1)", "published SU(2) action table, quantum-transfer row"},
        {"a(3).b(1)", "published SU(2) action table, pair-annihilation row"},
    };
    for (const auto& [text, ref] : printed_ops) {
        const InvariantOp op = parse_op(text);
        for (const auto& l : labels) {
            const auto printed = published::act_printed_su2(op, l);
            const auto shipped = su2::act(op, l);
            for (const auto& p : printed) {
                SqrtRational exact;
                for (const auto& s : shipped)
                    if (s.target == p.target) exact = s.coeff;
                if (exact == p.value) continue;
                DiscrepancyRecord rec;
                rec.formula = p.formula;
                rec.group = "su2";
                rec.op = text;
                rec.label_su2 = l;
                rec.paper = p.value;
                rec.oracle = exact;
                rec.paper_ref = ref;
                rec.note = "printed coefficient differs from the oracle-validated action "
                           "(sign fixed by the explicit oscillator construction)";
                report.ledger.push_back(std::move(rec));
            }
        }
    }
}

}  // namespace

Report verify_su2(int n_max) {
    Report report;
    const auto labels = enumerate_su2(n_max);
    oracle::Su2StateCache cache;
    for (const auto& l : labels) cache.get(l);
    su2_norm_and_gram(report, labels, cache);
    su2_constraints(report, labels, cache);
    su2_actions(report, labels, cache);
    su2_adjointness(report, labels);
    su2_ledger(report, labels);
    return report;
}

// ---------------------------------------------------------------------------
// SU(3)
// ---------------------------------------------------------------------------

namespace {

// Residual of the closed-form prediction against the brute-force action.
std::string check_su3_action(const InvariantOp& op, const Su3Label& l, StateCache& cache) {
    Su3Vector result = oracle::apply_op(op, cache.get(l));
    for (const auto& t : su3::unnormalized_act(op, l)) result -= cache.get(t.target) * t.coeff;
    if (!result.empty()) return print_op(op) + " at " + label_text(l) + " disagrees with the oracle";
    return {};
}

void su3_state_constraints(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    std::vector<std::string> gauss, kminus, pair_zero, casimir;
    for (const auto& l : labels) {
        const auto& v = cache.get(l);
        for (int a = 1; a <= 8; ++a)
            if (!oracle::gauss_total(a, v).empty())
                gauss.push_back("E^" + std::to_string(a) + " at " + label_text(l));
        for (int leg = 1; leg <= 3; ++leg) {
            if (!oracle::k_minus(leg, v).empty())
                kminus.push_back("k- leg " + std::to_string(leg) + " at " + label_text(l));
            Su3Vector pair;
            for (int c = 0; c < 3; ++c) pair += oracle::irr_a_dag(leg, c, oracle::irr_b_dag(leg, c, v));
            if (!pair.empty())
                pair_zero.push_back("(a+.b+) leg " + std::to_string(leg) + " at " + label_text(l));
        }
    }
    add_check(report, "su3 gauss law annihilation", gauss, labels.size() * 8);
    add_check(report, "su3 k- annihilation", kminus, labels.size() * 3);
    add_check(report, "su3 same-leg (a+.b+) annihilation", pair_zero, labels.size() * 3);

    // leg casimir on a small shell
    std::vector<std::string> cas;
    std::size_t cas_cases = 0;
    for (const auto& l : labels) {
        if (l.weight() > 4) continue;
        const auto& v = cache.get(l);
        for (int leg = 1; leg <= 3; ++leg) {
            ++cas_cases;
            const IrrepPQ pq = leg_irrep(l, leg);
            Rational c1(pq.p * pq.p + pq.q * pq.q + 3 * pq.p + 3 * pq.q + pq.p * pq.q, 3);
            c1.canonicalize();
            if (!(oracle::casimir_leg(leg, v) == v * c1))
                cas.push_back("leg " + std::to_string(leg) + " at " + label_text(l));
        }
    }
    add_check(report, "su3 leg casimir eigenvalues", cas, cas_cases);
}

// The published orthogonality claim fails in degenerate-occupancy sectors
// (first pair at weight 6); this is a property of the published construction
// itself, confirmed by its own coefficient tables, so it is reported as a
// claim check and every non-orthogonal pair is ledgered.
void su3_gram(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    std::vector<std::string> failures;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i].weight() != labels[j].weight()) continue;
            ++pairs;
            GaussianRational g = inner(cache.get(labels[i]), cache.get(labels[j]));
            if (g.is_zero()) continue;
            failures.push_back("overlap " + label_text(labels[i]) + " with " +
                               label_text(labels[j]) + " = " + to_fraction_string(g.re));
            DiscrepancyRecord rec;
            rec.formula = "orthogonality " + label_text(labels[i]) + "|" + label_text(labels[j]);
            rec.group = "su3";
            rec.label_su3 = labels[i];
            rec.paper = SqrtRational();
            rec.oracle = SqrtRational::from_rational(g.re);
            rec.paper_ref = "published orthogonality argument for the singlet basis";
            rec.note = "basis states with identical per-leg occupancies are independent but "
                       "not orthogonal; the published counting argument only covers labels "
                       "with differing occupancies, and the published pair-annihilation "
                       "coefficients imply this same nonzero overlap";
            report.ledger.push_back(std::move(rec));
        }
    CheckResult c;
    c.name = "su3 orthogonality (published claim)";
    c.passed = failures.empty();
    c.claim = true;
    c.detail = failures.empty() ? std::to_string(pairs) + " cases"
                                : std::to_string(failures.size()) +
                                      " non-orthogonal pair(s); first: " + failures.front();
    report.checks.push_back(std::move(c));
}

// The peeling recursion provably equals the Fock norm below weight 8 (its
// dropped cross terms need a degenerate sector two quanta below the source,
// and those open at weight 6).  From weight 8 on, deviations are a property
// of the published recursion and go to the ledger.
void su3_norms(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    std::vector<std::string> failures;
    std::size_t ledgered = 0;
    for (const auto& l : labels) {
        const Rational exact = cache.norm_sq(l);
        const Rational chain = su3::norm_sq(l);
        if (chain == exact) continue;
        if (l.weight() < 8) {
            failures.push_back("norm recursion mismatch at " + label_text(l));
            continue;
        }
        ++ledgered;
        DiscrepancyRecord rec;
        rec.formula = "S(l,p) recursion beyond the orthogonal sector";
        rec.group = "su3";
        rec.label_su3 = l;
        rec.paper = SqrtRational::from_rational(chain);
        rec.oracle = SqrtRational::from_rational(exact);
        rec.paper_ref = "published norm recursion, single-channel peeling step";
        rec.note = "peeling one link keeps only the diagonal overlap; from weight 8 the "
                   "stripped state meets a degenerate partner and the recursion no longer "
                   "returns the Fock norm";
        report.ledger.push_back(std::move(rec));
    }
    add_check(report, "su3 norm recursion vs oracle (weight < 8 exact)", failures, labels.size());
    if (ledgered > 0)
        report.checks.back().detail +=
            ", " + std::to_string(ledgered) + " ledgered deviation(s) at weight >= 8";
}

void su3_actions(Report& report, const std::vector<Su3Label>& bilinear_labels,
                 const std::vector<Su3Label>& trilinear_labels, StateCache& cache) {
    const auto catalog = su3_catalog();
    std::size_t bi_cases = 0, tri_cases = 0;
    int p_pos = 0, p_neg = 0;
    for (const auto& op : catalog) {
        if (op.kind == InvariantOp::Kind::TrilinearEps) {
            tri_cases += trilinear_labels.size();
            for (const auto& l : trilinear_labels) {
                if (l.p > 0) ++p_pos;
                if (l.p < 0) ++p_neg;
            }
        } else {
            bi_cases += bilinear_labels.size();
        }
    }
    std::vector<std::string> bilinear_failures, trilinear_failures;
    const auto failures = parallel_collect(catalog.size(), [&](std::size_t k,
                                                               std::vector<std::string>& out) {
        const InvariantOp& op = catalog[k];
        const bool trilinear = op.kind == InvariantOp::Kind::TrilinearEps;
        const auto& labels = trilinear ? trilinear_labels : bilinear_labels;
        for (const auto& l : labels) {
            std::string err = check_su3_action(op, l, cache);
            if (!err.empty()) out.push_back((trilinear ? "tri:" : "bi:") + err);
        }
    });
    for (const auto& f : failures) {
        if (f.rfind("tri:", 0) == 0)
            trilinear_failures.push_back(f.substr(4));
        else
            bilinear_failures.push_back(f.substr(3));
    }
    if (p_pos == 0 || p_neg == 0)
        trilinear_failures.push_back("p-sign branches not both exercised");
    add_check(report, "su3 bilinear actions vs oracle", bilinear_failures, bi_cases);
    add_check(report, "su3 trilinear actions vs oracle", trilinear_failures, tri_cases);
}

bool same_transitions(std::vector<su3::RatTransition> a, std::vector<su3::RatTransition> b) {
    su3::sort_transitions(a);
    su3::sort_transitions(b);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k].target == b[k].target) || a[k].coeff != b[k].coeff) return false;
    return true;
}

void su3_commutator_identities(Report& report, const std::vector<Su3Label>& labels,
                               StateCache& cache) {
    const InvariantOp move_b_31 = parse_op("b+(1).b(3)");   // b_3 . b+_1
    const InvariantOp move_a_21 = parse_op("a+(2).a(1)");   // a_1 . a+_2
    const InvariantOp annihilate_12 = parse_op("a(1).b(2)");
    const InvariantOp create_23 = parse_op("a+(2).b+(3)");
    const InvariantOp create_31 = parse_op("a+(3).b+(1)");
    const InvariantOp eps_g = parse_op("eps(a+(3),b(2),a+(2))");
    const InvariantOp eps_bb = parse_op("eps(b(3),b(2),a+(2))");
    const InvariantOp eps_aab = parse_op("eps(a(3),a(2),b+(2))");

    // (1) [b_2 . b+_3, a_1 . a+_2] = -Ntilde_2 (a+_2 . b+_3)(a_1 . b_2)
    std::vector<std::string> fail1;
    const InvariantOp move_b_23 = parse_op("b+(3).b(2)");  // b_2 . b+_3
    for (const auto& l : labels) {
        auto lhs = su3::unnormalized_commutator(move_b_23, move_a_21, l);
        auto rhs = su3::unnormalized_compose(create_23, annihilate_12, l);
        for (auto& t : rhs) {
            Rational scale(-1, t.target.big_n(2) + 2);
            scale.canonicalize();
            t.coeff *= scale;
        }
        if (!same_transitions(lhs, rhs))
            fail1.push_back("identity (1) fails at " + label_text(l));
    }
    add_check(report, "commutator identity: pair-hop vs scaled ladder", fail1, labels.size());

    // (2) [b_3 . b+_1, eps(a+_3 b_2 a+_2)] = -Ntilde_3 (a+_3 . b+_1) eps(b_3 b_2 a+_2),
    // replayed in the Fock space (the engine's double-b family is defined
    // through this identity, so the meaningful check is the brute-force one).
    std::vector<std::string> fail2;
    std::size_t cases2 = 0;
    for (const auto& l : labels) {
        ++cases2;
        const auto& v = cache.get(l);
        Su3Vector lhs = oracle::apply_op(move_b_31, oracle::apply_op(eps_g, v));
        lhs -= oracle::apply_op(eps_g, oracle::apply_op(move_b_31, v));
        Su3Vector rhs = oracle::apply_op(create_31, oracle::apply_op(eps_bb, v));
        rhs = rhs.scale_by([](const oracle::Su3State& s) {
            Rational r(-1, oracle::leg_count(s, 3) + 2);
            r.canonicalize();
            return r;
        });
        if (!(lhs == rhs)) fail2.push_back("identity (2) fails at " + label_text(l));
    }
    add_check(report, "commutator identity: mixed-eps reduction", fail2, cases2);

    // (3) [a_1 . b_2, eps(a_3 a_2 b+_2)] = eps(a_3 a_2 a_1), checked in the
    // Fock space where the right side needs no catalog entry.
    std::vector<std::string> fail3;
    std::size_t cases3 = 0;
    const InvariantOp eps_aaa_321 =
        InvariantOp::trilinear(Factor{Species::A, false, 3}, Factor{Species::A, false, 2},
                               Factor{Species::A, false, 1});
    for (const auto& l : labels) {
        ++cases3;
        const auto& v = cache.get(l);
        Su3Vector lhs = oracle::apply_op(annihilate_12, oracle::apply_op(eps_aab, v));
        lhs -= oracle::apply_op(eps_aab, oracle::apply_op(annihilate_12, v));
        if (!(lhs == oracle::apply_op(eps_aaa_321, v)))
            fail3.push_back("identity (3) fails at " + label_text(l));
    }
    add_check(report, "commutator identity: triple annihilator composition", fail3, cases3);
}

void su3_symmetry_closure(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    const auto catalog = su3_catalog();
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> op_pick(0, catalog.size() - 1);
    std::uniform_int_distribution<std::size_t> label_pick(0, labels.size() - 1);
    std::vector<std::string> failures;
    const int samples = 20;
    for (int k = 0; k < samples; ++k) {
        const InvariantOp& op = catalog[op_pick(rng)];
        const Su3Label& l = labels[label_pick(rng)];
        // flip route
        {
            auto direct = su3::unnormalized_act(op, l);
            auto routed = su3::unnormalized_act(conj_flip(op), conj_flip(l));
            for (auto& t : routed) t.target = conj_flip(t.target);
            if (!same_transitions(direct, routed))
                failures.push_back("flip route differs for " + print_op(op) + " at " + label_text(l));
        }
        // cycle route
        {
            auto direct = su3::unnormalized_act(cycle(op), cycle(l));
            auto routed = su3::unnormalized_act(op, l);
            for (auto& t : routed) t.target = cycle(t.target);
            if (!same_transitions(direct, routed))
                failures.push_back("cycle route differs for " + print_op(op) + " at " + label_text(l));
        }
        // both routes against the brute-force action of the image operator
        std::string err = check_su3_action(conj_flip(cycle(op)), conj_flip(cycle(l)), cache);
        if (!err.empty()) failures.push_back("image action: " + err);
    }
    add_check(report, "su3 symmetry closure (20 sampled pairs)", failures, samples * 3);
}

// Transpose pairing over the weight-truncated basis.  Matrix transposition
// equals hermitian conjugation only where the basis is orthogonal, so pairs
// touching a degenerate-occupancy sector are left to the residual-based
// action checks (which pin every coefficient regardless).  At the acceptance
// cutoff no degenerate sector exists and every pair is checked.
void su3_adjointness(Report& report, const std::vector<Su3Label>& labels, int w_cutoff) {
    std::vector<std::string> failures;
    std::size_t cases = 0, skipped = 0;
    for (const auto& op : su3_catalog()) {
        const auto [adj, sign] = adjoint_op(op);
        for (const auto& l : labels) {
            if (oracle::occupancy_sector(l).size() > 1) {
                ++skipped;
                continue;
            }
            for (const auto& t : su3::act(op, l)) {
                if (t.target.weight() > w_cutoff) continue;
                if (oracle::occupancy_sector(t.target).size() > 1) {
                    ++skipped;
                    continue;
                }
                ++cases;
                SqrtRational expected = sign < 0 ? -t.coeff : t.coeff;
                bool found = false;
                for (const auto& back : su3::act(adj, t.target))
                    if (back.target == l) {
                        found = back.coeff == expected;
                        break;
                    }
                if (!found)
                    failures.push_back("adjoint mismatch " + print_op(op) + " at " + label_text(l));
            }
        }
    }
    add_check(report, "su3 adjoint pairing (weight-truncated)", failures, cases);
    if (skipped > 0 && !report.checks.empty())
        report.checks.back().detail += ", " + std::to_string(skipped) +
                                       " degenerate-sector pair(s) left to the residual checks";
}

void su3_dirac_brackets(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    std::vector<std::string> failures;
    std::size_t cases = 0;
    const auto ntilde = [](int leg, const Su3Vector& v) {
        return v.scale_by([leg](const oracle::Su3State& s) {
            Rational r(1, oracle::leg_count(s, leg) + 2);
            r.canonicalize();
            return r;
        });
    };
    for (const auto& l : labels) {
        const auto& v = cache.get(l);
        for (int leg = 1; leg <= 3; ++leg)
            for (int alpha = 0; alpha < 3; ++alpha)
                for (int beta = 0; beta < 3; ++beta) {
                    ++cases;
                    // [a_alpha, a+_beta] - delta + Ntilde b+_alpha b_beta
                    Su3Vector r1 = oracle::irr_a(leg, alpha, oracle::irr_a_dag(leg, beta, v));
                    r1 -= oracle::irr_a_dag(leg, beta, oracle::irr_a(leg, alpha, v));
                    if (alpha == beta) r1 -= v;
                    r1 += ntilde(leg, oracle::irr_b_dag(leg, alpha, oracle::irr_b(leg, beta, v)));
                    if (!r1.empty()) {
                        failures.push_back("[a,a+] bracket fails at " + label_text(l));
                        continue;
                    }
                    // [b_alpha, b+_beta] - delta + Ntilde a+_alpha a_beta
                    Su3Vector r2 = oracle::irr_b(leg, alpha, oracle::irr_b_dag(leg, beta, v));
                    r2 -= oracle::irr_b_dag(leg, beta, oracle::irr_b(leg, alpha, v));
                    if (alpha == beta) r2 -= v;
                    r2 += ntilde(leg, oracle::irr_a_dag(leg, alpha, oracle::irr_a(leg, beta, v)));
                    if (!r2.empty()) {
                        failures.push_back("[b,b+] bracket fails at " + label_text(l));
                        continue;
                    }
                    // [a_alpha, b+_beta] + Ntilde b+_alpha a_beta
                    Su3Vector r3 = oracle::irr_a(leg, alpha, oracle::irr_b_dag(leg, beta, v));
                    r3 -= oracle::irr_b_dag(leg, beta, oracle::irr_a(leg, alpha, v));
                    r3 += ntilde(leg, oracle::irr_b_dag(leg, alpha, oracle::irr_a(leg, beta, v)));
                    if (!r3.empty()) failures.push_back("[a,b+] bracket fails at " + label_text(l));
                }
    }
    add_check(report, "su3 dirac brackets on constrained states", failures, cases);
}

void su3_factor_order(Report& report, const std::vector<Su3Label>& labels) {
    const std::vector<std::vector<std::pair<int, int>>> alternates = {
        {{3, 2}, {2, 3}, {3, 1}, {1, 3}, {2, 1}, {1, 2}},
        {{1, 3}, {3, 2}, {1, 2}, {2, 3}, {3, 1}, {2, 1}},
    };
    std::vector<std::string> failures;
    for (const auto& l : labels) {
        const Su3Vector canonical = oracle::build_state(l);
        for (const auto& order : alternates)
            if (!(oracle::build_state_ordered(l, order) == canonical)) {
                failures.push_back("factor order changes the state at " + label_text(l));
                break;
            }
    }
    add_check(report, "su3 bilinear factor-order independence", failures,
              labels.size() * alternates.size());
}

void su3_gauss_forms(Report& report, const std::vector<Su3Label>& labels, StateCache& cache) {
    std::vector<std::string> failures;
    std::size_t cases = 0;
    for (const auto& l : labels) {
        if (l.weight() > 4) continue;
        const auto& v = cache.get(l);
        for (int leg = 1; leg <= 3; ++leg)
            for (int a = 1; a <= 8; ++a) {
                ++cases;
                if (!(oracle::gauss_leg_raw(a, leg, v) == oracle::gauss_leg_irreducible(a, leg, v)))
                    failures.push_back("raw vs irreducible generator " + std::to_string(a) +
                                       " leg " + std::to_string(leg) + " at " + label_text(l));
            }
    }
    add_check(report, "su3 generator forms agree on constrained states", failures, cases);
}

// ---------------------------------------------------------------------------
// Published-formula ledger
// ---------------------------------------------------------------------------

SqrtRational shipped_coeff(const std::vector<su3::Transition>& shipped, const Su3Label& target) {
    for (const auto& s : shipped)
        if (s.target == target) return s.coeff;
    return SqrtRational();
}

void su3_ledger(Report& report, const std::vector<Su3Label>& bilinear_labels,
                const std::vector<Su3Label>& trilinear_labels, StateCache& cache, int w_max) {
    // Pure-baryon norm base case.
    for (int p : {1, -1, 2, -2}) {
        Su3Label l{0, 0, 0, 0, 0, 0, p};
        const Rational printed = published::norm_base_printed(l.abs_p());
        const Rational exact = cache.norm_sq(l);
        if (printed == exact) continue;
        DiscrepancyRecord rec;
        rec.formula = "S0(|p|=" + std::to_string(l.abs_p()) + ")";
        rec.group = "su3";
        rec.label_su3 = l;
        rec.paper = SqrtRational::from_rational(printed);
        rec.oracle = SqrtRational::from_rational(exact);
        rec.paper_ref = "published norm recursion, pure-baryon base case";
        rec.note = "the published step keeps only the leg-diagonal part of the epsilon-epsilon "
                   "contraction; the full contraction gives |p|!(|p|+1)!(|p|+2)!/2";
        report.ledger.push_back(std::move(rec));
    }

    // Printed restricted l21 channel (no |p| in the subtraction denominators):
    // invisible below weight 7, witnessed here directly against the oracle.
    for (const Su3Label& l : {Su3Label{0, 1, 0, 0, 1, 0, 1}, Su3Label{0, 1, 0, 0, 0, 1, 1},
                              Su3Label{0, 1, 0, 0, 1, 0, -1}}) {
        const Rational printed = published::norm_sq_printed(l);
        Rational exact;
        {
            const Su3Vector v = oracle::build_state(l);
            GaussianRational n = inner(v, v);
            exact = n.re;
        }
        if (printed == exact) continue;
        DiscrepancyRecord rec;
        rec.formula = "S(l,p) via printed restricted fbar(21)";
        rec.group = "su3";
        rec.label_su3 = l;
        rec.paper = SqrtRational::from_rational(printed);
        rec.oracle = SqrtRational::from_rational(exact);
        rec.paper_ref = "published restricted coefficient function, (2,1) channel";
        rec.note = "the two subtraction terms need |p| in their denominators, as the "
                   "species-swap symmetry of the general (1,2) form requires";
        report.ledger.push_back(std::move(rec));
    }

    // The channel-by-channel norm recursion drops overlaps with degenerate
    // partner states; the first casualties sit at weight 8.  Witnessed here
    // directly when the sweep itself stays below that weight.
    if (w_max < 8) {
        for (const Su3Label& l : {Su3Label{0, 2, 1, 0, 0, 1, 0}, Su3Label{2, 0, 0, 1, 1, 0, 0},
                                  Su3Label{1, 1, 1, 0, 0, 1, 0}}) {
            const Rational chain = su3::norm_sq(l);
            Rational exact;
            {
                const Su3Vector v = oracle::build_state(l);
                exact = inner(v, v).re;
            }
            if (chain == exact) continue;
            DiscrepancyRecord rec;
            rec.formula = "S(l,p) recursion beyond the orthogonal sector";
            rec.group = "su3";
            rec.label_su3 = l;
            rec.paper = SqrtRational::from_rational(chain);
            rec.oracle = SqrtRational::from_rational(exact);
            rec.paper_ref = "published norm recursion, single-channel peeling step";
            rec.note = "peeling one link keeps only the diagonal overlap; from weight 8 the "
                       "stripped state meets a degenerate partner and the recursion no longer "
                       "returns the Fock norm (norm_sq follows the published recursion, which "
                       "the weight <= 6 suite pins to the oracle)";
            report.ledger.push_back(std::move(rec));
        }
    }

    // Printed double-b trilinear coefficients also drift inside degenerate
    // sectors; first witness at weight 6 (the engine composes the family
    // through the reduction identity instead, which the oracle confirms).
    {
        const Su3Label l{1, 0, 1, 0, 0, 1, 0};
        const Su3Label target{1, 0, 0, 0, 0, 0, 1};
        Rational printed_i2(-(l.big_n(3) + 2) * l.l13 * l.l32, l.big_n(3) + 1);
        printed_i2.canonicalize();
        Rational exact;
        for (const auto& t : su3::unnormalized_act(parse_op("eps(b(3),b(2),a+(2))"), l))
            if (t.target == target) exact = t.coeff;
        if (printed_i2 != exact) {
            DiscrepancyRecord rec;
            rec.formula = "i2(322) beyond the orthogonal sector";
            rec.group = "su3";
            rec.op = "eps(b(3),b(2),a+(2))";
            rec.label_su3 = l;
            rec.paper = SqrtRational::from_rational(printed_i2);
            rec.oracle = SqrtRational::from_rational(exact);
            rec.paper_ref = "published double-b family, unnormalized coefficients";
            rec.note = "the printed coefficient was read off assuming unique expansion "
                       "coefficients; from weight 6 the degenerate sector makes the read-off "
                       "mix components, and the reduction-identity composition is exact";
            report.ledger.push_back(std::move(rec));
        }
    }

    // Signed-p variant of the (1,2) channel coefficient function.
    for (const auto& l : bilinear_labels) {
        if (l.p >= 0 || l.l12 == 0) continue;
        const Rational variant = published::fbar_12_signed_p(l);
        const Rational shipped = su3::fbar_12(l);
        if (variant == shipped) continue;
        DiscrepancyRecord rec;
        rec.formula = "fbar(12) first-term p convention";
        rec.group = "su3";
        rec.label_su3 = l;
        rec.paper = SqrtRational::from_rational(variant);
        rec.oracle = SqrtRational::from_rational(shipped);
        rec.paper_ref = "published coefficient function, (1,2) channel, appendix variant";
        rec.note = "one published copy of the formula carries signed p in the first term; "
                   "the oracle fixes it to |p|";
        report.ledger.push_back(std::move(rec));
    }

    // Published normalized coefficient families.
    struct FamilyRow {
        const char* op_text;
        bool trilinear;
        const char* ref;
    };
    const FamilyRow families[] = {
        {"a+(1).b+(2)", false, "published normalized action, pair-creation family (c)"},
        {"a+(1).a(2)", false, "published normalized action, triplet-transfer family (d)"},
        {"b+(1).b(2)", false, "published normalized action, antitriplet-transfer family (e)"},
        {"a(1).b(2)", false, "published normalized action, pair-annihilation family (f)"},
        {"eps(a+(3),b(2),a+(2))", true, "published normalized action, mixed raising family (g,h)"},
        {"eps(b(3),b(2),a+(2))", true, "published normalized action, double-b family (i,j)"},
        {"eps(a(3),a(2),b+(2))", true, "published normalized action, double-a family (k,l)"},
        {"eps(a+(1),a+(2),a+(3))", true, "published normalized action, baryon-creation family (m,n)"},
    };
    for (const auto& fam : families) {
        const InvariantOp op = parse_op(fam.op_text);
        const auto& labels = fam.trilinear ? trilinear_labels : bilinear_labels;
        for (const auto& l : labels) {
            const auto printed = published::act_printed(op, l);
            if (printed.empty()) continue;
            const auto shipped = su3::act(op, l);
            for (const auto& p : printed) {
                const SqrtRational exact = shipped_coeff(shipped, p.target);
                if (p.defined && p.value == exact) continue;
                DiscrepancyRecord rec;
                rec.formula = p.formula;
                rec.group = "su3";
                rec.op = fam.op_text;
                rec.label_su3 = l;
                rec.paper = p.defined ? p.value : SqrtRational();
                rec.oracle = exact;
                rec.paper_ref = fam.ref;
                rec.note = p.defined
                               ? "printed square-root factor (restricted forms, source-label "
                                 "convention) differs from the exact norm ratio"
                               : p.issue;
                report.ledger.push_back(std::move(rec));
            }
        }
    }
}

}  // namespace

Report verify_su3(int w_max) {
    Report report;
    const int tri_max = w_max > 0 ? w_max - 1 : 0;
    const auto bilinear_labels = enumerate_su3(w_max);
    const auto trilinear_labels = enumerate_su3(tri_max);
    StateCache cache;
    for (const auto& l : bilinear_labels) cache.get(l);

    su3_state_constraints(report, bilinear_labels, cache);
    su3_gram(report, bilinear_labels, cache);
    su3_norms(report, bilinear_labels, cache);
    su3_actions(report, bilinear_labels, trilinear_labels, cache);
    su3_commutator_identities(report, trilinear_labels, cache);
    su3_symmetry_closure(report, trilinear_labels, cache);
    su3_adjointness(report, trilinear_labels, tri_max);
    su3_dirac_brackets(report, trilinear_labels, cache);
    su3_factor_order(report, bilinear_labels);
    su3_gauss_forms(report, bilinear_labels, cache);
    su3_ledger(report, bilinear_labels, trilinear_labels, cache, w_max);
    return report;
}

std::vector<DiscrepancyRecord> against_oracle_su3(int w_max) {
    std::vector<DiscrepancyRecord> out;
    const int tri_max = w_max > 0 ? w_max - 1 : 0;
    StateCache cache;
    for (const auto& op : su3_catalog()) {
        const bool trilinear = op.kind == InvariantOp::Kind::TrilinearEps;
        for (const auto& l : enumerate_su3(trilinear ? tri_max : w_max)) {
            const std::string err = check_su3_action(op, l, cache);
            if (err.empty()) continue;
            DiscrepancyRecord rec;
            rec.formula = "engine action";
            rec.group = "su3";
            rec.op = print_op(op);
            rec.label_su3 = l;
            rec.paper_ref = "";
            rec.note = err;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace singlet::validate
