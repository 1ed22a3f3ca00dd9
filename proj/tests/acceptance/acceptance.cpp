// Copyright 2026 The gateid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gateid/bounds.hpp"
#include "gateid/cli.hpp"
#include "gateid/discriminate.hpp"
#include "gateid/errors.hpp"
#include "gateid/gatesets.hpp"
#include "gateid/groups.hpp"
#include "gateid/numerics.hpp"
#include "gateid/optimize.hpp"
#include "oracles.hpp"

using namespace gateid;
using gatesets::Family;
namespace dis = gateid::discriminate;
namespace grp = gateid::groups;
namespace bd = gateid::bounds;
namespace opt = gateid::optimize;

namespace {

const NumericConfig kCfg;

/// Joint dimension above which the random-set POVMs are not built.
constexpr std::size_t kMeasuredSpace = 256;

/// Collects failures for one criterion.
struct Verdict {
    std::vector<std::string> failures;
    std::vector<std::string> facts;

    void require(bool ok, const std::string &what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string &fact) { facts.push_back(fact); }
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

GateSet named(Family f, std::size_t d = 2, std::size_t k = 2) {
    return gatesets::make_named_set(f, {.d = d, .k = k});
}

ComplexVector ket(std::initializer_list<Complex> entries) {
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (Complex c : entries) v(i++) = c;
    return v;
}

/// max |<a_i|a_j> - delta_ij|
double gram_defect(const std::vector<ComplexVector> &vs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            worst = std::max(worst, std::abs(vs[i].dot(vs[j]) - (i == j ? 1.0 : 0.0)));
    return worst;
}

/// Every POVM built during the run, checked in criterion 10.
std::vector<dis::Povm> &povm_log() {
    static std::vector<dis::Povm> log;
    return log;
}

dis::Strategy logged(dis::Strategy s) {
    povm_log().push_back(s.povm);
    return s;
}

// --- criteria --------------------------------------------------------------

void criterion_1(Verdict &v) {
    const auto start = std::chrono::steady_clock::now();
    const GateSet g = named(Family::PhasePoint, 2, 5);
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto s = dis::span_dimension(g, n, kCfg);
        v.require(s == n + 1, "span_dimension(" + std::to_string(n) + ") = " + std::to_string(s));
    }
    const auto nmin = dis::min_queries_unambiguous(g, kCfg);
    const auto lin = dis::linear_query_bound(g, kCfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(nmin == 4, "N_min = " + std::to_string(nmin));
    v.require(lin == 4 && lin == g.size() - dis::span_dimension(g, 1, kCfg) + 1, "linear bound = " + std::to_string(lin));
    v.require(secs < 1.0, "runtime " + num(secs) + " s");
    v.note("N_min=" + std::to_string(nmin) + " runtime=" + num(secs) + "s");
}

void criterion_2(Verdict &v) {
    const GateSet g = named(Family::Pauli);
    const auto span = dis::span_dimension(g, 1, kCfg);
    v.require(span == 4, "span_dimension(1) = " + std::to_string(span));
    const double p = dis::pmax(g, 1, kCfg);
    v.require(std::abs(p - 1.0) <= 1e-9, "pmax = " + num(p));
    const auto probe = opt::min_ancilla_probe(g, 1, 4, opt::kDefaultTrials, 1, kCfg);
    v.require(probe.value == 2, "min_ancilla_probe = " + std::to_string(probe.value));
    const auto s = logged(dis::pgm_strategy(g, 1, numerics::max_entangled(2), 2, kCfg));
    const auto sim = dis::simulate_strategy(g, s, 100000, 42, kCfg);
    v.require(sim.errors == 0, std::to_string(sim.errors) + " misidentifications");
    v.require(sim.inconclusive == 0, std::to_string(sim.inconclusive) + " inconclusive");
    v.note("pmax=" + num(p) + " probe=" + std::to_string(probe.value) + " errors=" +
           std::to_string(sim.errors) + " inconclusive=" + std::to_string(sim.inconclusive));
}

void criterion_3(Verdict &v) {
    double worst = 0.0;
    for (std::size_t k : {3u, 5u}) {
        const GateSet g = named(Family::Clock, 2, k);
        for (std::size_t n = 1; n <= k - 1; ++n) {
            const double p = dis::pmax(g, n, kCfg);
            const double dp = dis::design_pmax(g, n, kCfg);
            const double expect = static_cast<double>(n + 1) / static_cast<double>(k);
            worst = std::max({worst, std::abs(p - expect), std::abs(p - dp)});
            v.require(std::abs(p - expect) <= 1e-8,
                      "clock(2," + std::to_string(k) + ") N=" + std::to_string(n) + " pmax " + num(p));
            v.require(std::abs(p - dp) <= 1e-8,
                      "clock(2," + std::to_string(k) + ") N=" + std::to_string(n) + " design_pmax " + num(dp));
        }
    }
    v.note("max deviation " + num(worst));
}

void criterion_4(Verdict &v) {
    const auto af = bd::ancilla_free_group_min_queries(3, 9, Rational(0), 0);
    v.require(af.queries == std::optional<std::size_t>(2), "ancilla-free N not 2");
    const GateSet g = named(Family::ShiftMultiply, 3);
    const double r = 1.0 / std::sqrt(3.0);
    const ComplexVector input = oracle::kron(ket({1.0, 0.0, 0.0}), ket({r, r, r}));
    const auto out = dis::output_states(g, 2, input, 1, kCfg);
    const double defect = gram_defect(out);
    v.require(out.size() == 9 && defect <= 1e-10, "Gram defect " + num(defect));
    const auto s = logged(dis::pgm_strategy(g, 2, input, 1, kCfg));
    const auto sim = dis::simulate_strategy(g, s, 10000, 4, kCfg);
    v.require(sim.errors == 0, std::to_string(sim.errors) + " errors in 10^4 shots");
    v.note("N_AF=" + (af.queries ? std::to_string(*af.queries) : std::string("none")) +
           " gram_defect=" + num(defect) + " errors=" + std::to_string(sim.errors));
}

void criterion_5(Verdict &v) {
    const auto q = bd::copies_for_unambiguous(Rational(BigInt(1), BigInt(3)), 4);
    const auto t = bd::copies_for_unambiguous(Rational(BigInt(1), BigInt(11)), 100);
    v.require(q == 3, "qubit SIC copies = " + std::to_string(q));
    v.require(t == 4, "d=10 SIC copies = " + std::to_string(t));
    // tetrahedron on the Bloch sphere
    const double s2 = std::sqrt(2.0);
    const std::vector<std::array<double, 3>> bloch{
        {0.0, 0.0, 1.0},
        {2 * s2 / 3, 0.0, -1.0 / 3},
        {-s2 / 3, std::sqrt(2.0 / 3.0), -1.0 / 3},
        {-s2 / 3, -std::sqrt(2.0 / 3.0), -1.0 / 3}};
    std::vector<ComplexVector> states;
    for (const auto &b : bloch) {
        const double theta = std::acos(b[2]);
        const double phi = std::atan2(b[1], b[0]);
        states.push_back(ket({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)}));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            worst = std::max(worst, std::abs(std::norm(states[i].dot(states[j])) - 1.0 / 3.0));
    v.require(worst <= 1e-12, "tetrahedron overlaps off by " + num(worst));
    std::vector<ComplexVector> copies;
    for (const auto &s : states) copies.push_back(numerics::tensor_power(s, 3));
    const auto rank = numerics::numeric_rank(copies, kCfg);
    v.require(rank == 4, "rank of 3-fold copies = " + std::to_string(rank));
    std::vector<ComplexVector> two;
    for (const auto &s : states) two.push_back(numerics::tensor_power(s, 2));
    v.note("copies=(" + std::to_string(q) + "," + std::to_string(t) + ") rank3=" + std::to_string(rank) +
           " rank2=" + std::to_string(numerics::numeric_rank(two, kCfg)));
}

void criterion_6(Verdict &v) {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto y = grp::young_decomposition(n, d);
            BigInt total = 0;
            for (const auto &irr : y.irreps) total += irr.dim * irr.mult;
            BigInt expect = 1;
            for (std::size_t i = 0; i < n; ++i) expect *= d;
            v.require(total == expect, "sum d m != d^N at d=" + std::to_string(d) + " N=" + std::to_string(n));
            if (d <= 3 && n <= 6) {
                v.require(y.ancilla_bound == binomial(n + d - 1, d - 1),
                          "ancilla bound mismatch at d=" + std::to_string(d) + " N=" + std::to_string(n));
            }
        }
    }
    const std::size_t queries[] = {2, 4, 6};
    const long long mults[] = {1, 2, 5};
    for (std::uint64_t da = 1; da <= 3; ++da) {
        const auto b = grp::min_extra_block_size(2, da);
        v.require(b.queries == queries[da - 1] && b.multiplicity == mults[da - 1],
                  "min_extra_block_size(2," + std::to_string(da) + ") = (" + std::to_string(b.queries) + ", " +
                      b.multiplicity.str() + ")");
    }
    v.note("d<=4 N<=8 hook sums exact; block sizes (2,4,6)");
}

void criterion_7(Verdict &v) {
    std::size_t checked = 0;
    auto run = [&](const GateSet &g, const grp::GroupTable &t, const grp::CharacterTable &chars, std::size_t m) {
        const auto dec = grp::decompose_by_characters(g, t, chars, m);
        const std::string tag = std::to_string(g.dimension) + "/" + std::to_string(t.order) + " M=" + std::to_string(m);
        v.require(dec.all_consistent, "inconsistent multiplicities " + tag);
        const double packing = std::pow(static_cast<double>(g.dimension), static_cast<double>(m)) /
                               std::sqrt(static_cast<double>(t.order));
        v.require(dec.total_multiplicity >= packing - 1e-9,
                  "sum m = " + num(dec.total_multiplicity) + " < " + num(packing) + " " + tag);
        if (numerics::checked_pow(g.dimension, 2 * m) <= kCfg.dim_cap) {
            const auto rank = dis::span_dimension(g, m, kCfg);
            v.require(static_cast<double>(rank) == dec.occupied_dim_square_sum,
                      "Choi rank " + std::to_string(rank) + " vs " + num(dec.occupied_dim_square_sum) + " " + tag);
        }
        ++checked;
    };
    for (std::size_t d = 2; d <= 3; ++d) {
        for (std::size_t k = 2; k <= 9; ++k) {
            const GateSet g = named(Family::Clock, d, k);
            const auto t = std::get<grp::GroupTable>(grp::closure_table(g, false, kCfg));
            const auto chars = grp::abelian_characters(t);
            for (std::size_t m = 1; m <= 6; ++m) run(g, t, chars, m);
        }
    }
    const GateSet pauli = named(Family::Pauli);
    const auto t = std::get<grp::GroupTable>(grp::closure_table(pauli, true, kCfg));
    const auto w = grp::multipliers(pauli, t);
    const auto ordinary = grp::abelian_characters(t);
    grp::CharacterTable projective;
    projective.group_order = 4;
    projective.characters.push_back({"proj", {2.0, 0.0, 0.0, 0.0}});
    for (std::size_t m = 1; m <= 6; ++m) {
        run(pauli, t, grp::multiplier_power_trivial(w, m) ? ordinary : projective, m);
    }
    v.note(std::to_string(checked) + " (group, M) pairs");
}

void criterion_8(Verdict &v) {
    std::vector<GateSet> sets;
    for (std::size_t d = 2; d <= 3; ++d) {
        for (std::size_t k = 2; k <= 10; ++k) {
            sets.push_back(named(Family::PhasePoint, d, k));
            sets.push_back(named(Family::Clock, d, k));
        }
        sets.push_back(named(Family::ShiftMultiply, d));
    }
    for (std::size_t d = 2; d <= 3; ++d) sets.push_back(named(Family::Permutation, d));
    for (std::size_t d = 2; d <= 10; ++d) sets.push_back(named(Family::Grover, d));
    for (std::size_t k = 2; k <= 9; ++k) sets.push_back(named(Family::HadamardRotations, 2, k));
    sets.push_back(named(Family::Pauli));

    std::size_t checked = 0;
    std::size_t invalid = 0;
    std::size_t beyond_cap = 0;
    for (const auto &g : sets) {
        if (g.size() > 10) continue;
        if (!gatesets::validate_gate_set(g, kCfg).ok()) {
            ++invalid;
            continue;
        }
        std::size_t nmin = 0;
        try {
            nmin = dis::min_queries_unambiguous(g, kCfg);
        } catch (const CapExceeded &) {
            ++beyond_cap;
            continue;
        }
        bd::ReportInputs in;
        in.span_dim_1 = dis::span_dimension(g, 1, kCfg);
        in.measured_n_min = nmin;
        const auto f = opt::minimax_fidelity(g, opt::FidelityMode::Bipartite, 4, 1, kCfg);
        in.fidelity = f.value;
        const auto rep = bd::assemble_report(g, in);
        const auto lower = bd::dimensional_min_queries(g.size(), g.dimension).queries;
        const auto linear = bd::linear_upper_bound(g.size(), in.span_dim_1);
        const auto fid = bd::copies_for_unambiguous(f.value, g.size());
        const std::string tag = g.labels().front() + ".." + g.labels().back() + " d=" + std::to_string(g.dimension) +
                                " |U|=" + std::to_string(g.size());
        v.require(lower <= nmin, "dimensional " + std::to_string(lower) + " > N_min " + std::to_string(nmin) + " " + tag);
        v.require(nmin <= std::min(linear, fid), "N_min " + std::to_string(nmin) + " above min(" +
                                                     std::to_string(linear) + ", " + std::to_string(fid) + ") " + tag);
        v.require(rep.consistent(), "flags raised: " + (rep.flags.empty() ? std::string() : rep.flags.front()));
        ++checked;
    }
    v.require(checked > 0, "no sets checked");
    v.note(std::to_string(checked) + " sets checked, " + std::to_string(invalid) + " invalid skipped, " +
           std::to_string(beyond_cap) + " beyond the dimension cap");
}

void criterion_9(Verdict &v) {
    const GateSet g = named(Family::Permutation, 3);
    ComplexVector input = ComplexVector::Zero(27);
    input(0 * 9 + 1 * 3 + 2) = 1.0;
    const auto out = dis::output_states(g, 3, input, 1, kCfg);
    const double defect = gram_defect(out);
    v.require(out.size() == 6 && defect <= 1e-10, "Gram defect " + num(defect));
    const auto s = logged(dis::pgm_strategy(g, 3, input, 1, kCfg));
    const auto e = dis::evaluate_strategy(g, s, kCfg);
    v.require(e.error_free() && e.inconclusive_prob <= 1e-10, "product-input strategy not perfect");
    const double f = opt::max_pair_fidelity(g, opt::FidelityMode::Bipartite, numerics::max_entangled(3));
    v.require(std::abs(f - 1.0 / 9.0) <= 1e-10, "F at maximally entangled = " + num(f));
    v.note("gram_defect=" + num(defect) + " F=" + num(f));
}

void criterion_10(Verdict &v) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_int_distribution<std::size_t> count(3, 7);

    // rank growth over 50 random sets
    std::size_t growth_sets = 0;
    std::size_t unmeasured = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Gate> gates;
        const std::size_t k = count(rng);
        std::size_t d = 2;
        if (trial % 3 == 0) {
            // commuting qubit phases
            for (std::size_t x = 0; x < k; ++x) {
                ComplexMatrix u = ComplexMatrix::Identity(2, 2);
                u(1, 1) = std::polar(1.0, angle(rng));
                gates.push_back({std::to_string(x), u});
            }
        } else if (trial % 3 == 1) {
            // one-parameter family exp(i t H) in d = 3
            d = 3;
            const ComplexMatrix h0 = oracle::random_unitary(3, rng);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h0 + h0.adjoint());
            for (std::size_t x = 0; x < k; ++x) {
                const double tt = angle(rng);
                Eigen::VectorXcd ph(3);
                for (int i = 0; i < 3; ++i) ph(i) = std::polar(1.0, tt * es.eigenvalues()(i));
                gates.push_back({std::to_string(x), es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint()});
            }
        } else {
            for (std::size_t x = 0; x < k; ++x) gates.push_back({std::to_string(x), oracle::random_unitary(2, rng)});
        }
        const GateSet g = gatesets::from_matrices(std::move(gates));
        if (!gatesets::validate_gate_set(g, kCfg).ok()) {
            v.require(false, "random set " + std::to_string(trial) + " invalid");
            continue;
        }
        std::size_t prev = dis::span_dimension(g, 1, kCfg);
        for (std::size_t n = 2; n <= 4 && numerics::checked_pow(d, 2 * n) <= kCfg.dim_cap; ++n) {
            const std::size_t cur = dis::span_dimension(g, n, kCfg);
            if (prev < g.size()) {
                v.require(cur >= prev + 1, "rank stalled on random set " + std::to_string(trial));
            } else {
                v.require(cur == g.size(), "rank dropped on random set " + std::to_string(trial));
            }
            prev = cur;
        }
        ++growth_sets;

        // unambiguous measurement at N_min when reachable
        std::size_t nmin = 0;
        try {
            nmin = dis::min_queries_unambiguous(g, kCfg);
        } catch (const CapExceeded &) {
            continue;
        }
        const std::size_t dn = numerics::checked_pow(d, nmin);
        if (dn * dn > kMeasuredSpace) {
            ++unmeasured;
            continue;
        }
        const auto s = logged(dis::unambiguous_strategy(g, nmin, numerics::max_entangled(dn), dn, kCfg));
        const auto e = dis::evaluate_strategy(g, s, kCfg);
        for (std::size_t x = 0; x < g.size(); ++x) {
            v.require(e.table(x, x) > 0.0, "zero diagonal in unambiguous table");
            for (std::size_t y = 0; y < g.size(); ++y)
                if (x != y) v.require(std::abs(e.table(x, y)) <= 1e-9, "cross error " + num(e.table(x, y)));
        }
        logged(dis::pgm_strategy(g, nmin, numerics::max_entangled(dn), dn, kCfg));
    }
    for (const auto &g : {named(Family::Pauli), named(Family::Clock, 2, 3), named(Family::PhasePoint, 2, 5),
                          named(Family::Permutation, 3), named(Family::Grover, 4)}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            if (numerics::checked_pow(g.dimension, 4 * n) > kCfg.dim_cap) continue;
            logged(dis::design_strategy(g, n, kCfg));
        }
    }

    // completeness and positivity of every POVM built so far
    std::size_t povms = 0;
    for (const auto &p : povm_log()) {
        const auto c = dis::check_povm(p, kCfg);
        v.require(c.ok, "POVM check failed: residual " + num(c.completeness_residual) + " min eig " +
                            num(c.min_eigenvalue));
        ++povms;
    }

    // sampled frequencies against exact probabilities
    std::size_t cells = 0;
    for (const auto &[g, n] : {std::pair{named(Family::PhasePoint, 2, 5), std::size_t{2}},
                              std::pair{named(Family::Clock, 2, 3), std::size_t{1}}}) {
        const auto s = dis::design_strategy(g, n, kCfg);
        const auto e = dis::evaluate_strategy(g, s, kCfg);
        const auto sim = dis::simulate_strategy(g, s, 100000, 99, kCfg);
        for (std::size_t x = 0; x < g.size(); ++x) {
            std::uint64_t row = 0;
            for (auto c : sim.counts[x]) row += c;
            for (std::size_t y = 0; y < sim.counts[x].size(); ++y) {
                const double p = std::clamp(e.table(x, static_cast<Eigen::Index>(y)), 0.0, 1.0);
                const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(row));
                const double freq = static_cast<double>(sim.counts[x][y]) / static_cast<double>(row);
                v.require(std::abs(freq - p) <= 5.0 * sigma + 1e-12,
                          "frequency " + num(freq) + " vs " + num(p) + " beyond 5 sigma");
                ++cells;
            }
        }
    }

    // byte-identical reports
    auto render = [](std::vector<std::string> args) {
        args.insert(args.begin(), "gateid");
        std::vector<const char *> argv;
        for (const auto &a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        (void)cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return out.str();
    };
    for (const auto &args : {std::vector<std::string>{"analyze", "--family", "permutation", "--d", "3", "--seed", "5", "--format", "json"},
                             std::vector<std::string>{"simulate", "--family", "clock", "--d", "2", "--K", "3", "--shots", "20000", "--seed", "5", "--format", "json"}}) {
        const auto a = render(args);
        v.require(!a.empty() && a == render(args), "report for '" + args.front() + "' not byte-identical");
    }
    v.note(std::to_string(growth_sets) + " random sets (" + std::to_string(unmeasured) + " too large to measure), " +
           std::to_string(povms) + " POVMs, " +
           std::to_string(cells) + " sampled cells");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict &)>>> criteria{
        {"phase_point(5,2) span dimensions and N_min", criterion_1},
        {"pauli dense coding", criterion_2},
        {"clock(2,K) optimal probability", criterion_3},
        {"shift_multiply(3) ancilla-free identification", criterion_4},
        {"SIC copy counts", criterion_5},
        {"representation arithmetic", criterion_6},
        {"character multiplicities and Choi rank", criterion_7},
        {"bounds sandwich", criterion_8},
        {"permutation(3)", criterion_9},
        {"property suites", criterion_10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            criteria[i].second(v);
        } catch (const std::exception &e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = v.failures.empty();
        failed += ok ? 0 : 1;
        std::string detail;
        for (const auto &f : ok ? v.facts : v.failures) detail += (detail.empty() ? "" : "; ") + f;
        std::printf("criterion %zu: %s  %s  [%s]\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    detail.c_str());
    }
    std::printf("%s: %d of %zu criteria failed\n", failed == 0 ? "PASS" : "FAIL", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
