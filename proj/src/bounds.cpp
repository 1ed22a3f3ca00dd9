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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>

#include "gateid/bounds.hpp"
#include "gateid/errors.hpp"

namespace gateid::bounds {

namespace {

BigInt big_pow(const BigInt &base, std::size_t exp) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

DimensionalBound dimensional_min_queries(std::uint64_t card, std::size_t d) {
    if (card < 2 || d < 2) {
        throw InvalidArgument("dimensional bound needs |U| >= 2 and d >= 2");
    }
    const std::uint64_t k = static_cast<std::uint64_t>(d) * d - 1;
    DimensionalBound b;
    std::size_t n = 1;
    while (binomial(n + k, k) < BigInt(card)) {
        ++n;
    }
    b.queries = n;
    b.crude = std::pow(static_cast<double>(card), 1.0 / static_cast<double>(k)) - 1.0;
    return b;
}

std::size_t linear_upper_bound(std::size_t card, std::size_t dim_u) {
    if (dim_u < 1 || dim_u > card) {
        throw InvalidArgument("linear bound needs 1 <= dim(U) <= |U|");
    }
    return card - dim_u + 1;
}

std::size_t copies_for_unambiguous(const Rational &f, std::uint64_t k) {
    if (k < 2) {
        throw InvalidArgument("copies bound needs K >= 2");
    }
    if (!(f < Rational(1))) {
        throw InvalidArgument("copies bound needs F < 1");
    }
    if (f.is_zero() || k == 2) {
        return 1;
    }
    // F^{N/2} (K-1) < 1  <=>  a^N (K-1)^2 < b^N  for F = a/b
    const BigInt km1sq = BigInt(k - 1) * BigInt(k - 1);
    auto enough = [&](std::size_t n) {
        return big_pow(f.num(), n) * km1sq < big_pow(f.den(), n);
    };
    const double guess = 2.0 * std::log(static_cast<double>(k - 1)) / -std::log(f.to_double());
    std::size_t n = static_cast<std::size_t>(std::max(1.0, std::floor(guess) + 1.0));
    while (n > 1 && enough(n - 1)) {
        --n;
    }
    while (!enough(n)) {
        ++n;
    }
    return n;
}

std::size_t copies_for_unambiguous(double f, std::uint64_t k) {
    if (k < 2) {
        throw InvalidArgument("copies bound needs K >= 2");
    }
    if (!(f >= 0.0) || !(f < 1.0)) {
        throw InvalidArgument("copies bound needs 0 <= F < 1");
    }
    if (f == 0.0 || k == 2) {
        return 1;
    }
    const double x = 2.0 * std::log(static_cast<double>(k - 1)) / -std::log(f);
    const double m = std::round(x);
    if (std::abs(x - m) <= 1e-9 * std::max(1.0, x)) {
        return static_cast<std::size_t>(m) + 1;
    }
    return static_cast<std::size_t>(std::floor(x)) + 1;
}

std::size_t extra_queries_bound(std::uint64_t d_a, std::uint64_t group_order, std::size_t d) {
    if (d_a < 1 || group_order < 1 || d < 2) {
        throw InvalidArgument("extra-query bound needs d_A, |G| >= 1 and d >= 2");
    }
    const BigInt target = BigInt(d_a) * BigInt(d_a) * BigInt(group_order);
    const BigInt d2 = BigInt(d) * BigInt(d);
    std::size_t n = 0;
    BigInt power = 1;
    while (power < target) {
        power *= d2;
        ++n;
    }
    return n;
}

AncillaFreeResult ancilla_free_group_min_queries(std::size_t d, std::uint64_t group_order,
                                                 const Rational &f_ent, std::uint64_t c,
                                                 std::optional<double> alpha) {
    if (d < 2 || group_order < 1) {
        throw InvalidArgument("ancilla-free bound needs d >= 2 and |G| >= 1");
    }
    if (Rational(1) < f_ent) {
        throw InvalidArgument("entanglement fidelity must lie in [0, 1]");
    }
    AncillaFreeResult r;
    const BigInt g(group_order);
    const BigInt bd(d);
    {
        BigInt p = 1;
        while (p < g) {
            p *= bd;
            ++r.packing_bound;
        }
    }
    // d^N (1 - F^{N/2} C) >= G  <=>  d^N >= G and (d^N - G)^2 b^N >= C^2 d^{2N} a^N
    const BigInt c2 = BigInt(c) * BigInt(c);
    BigInt dn = 1;
    BigInt an = 1;
    BigInt bn = 1;
    for (std::size_t n = 1; n <= kMaxAncillaFreeQueries; ++n) {
        dn *= bd;
        an *= f_ent.num();
        bn *= f_ent.den();
        if (dn < g) {
            continue;
        }
        const BigInt slack = dn - g;
        if (slack * slack * bn >= c2 * dn * dn * an) {
            r.queries = n;
            break;
        }
    }
    if (!r.queries) {
        r.note = "no N <= " + std::to_string(kMaxAncillaFreeQueries) +
                 " satisfies the sufficient condition";
    }
    if (alpha) {
        if (!(*alpha > 0.0) || !(*alpha < 1.0)) {
            throw InvalidArgument("alpha must lie in (0, 1)");
        }
        const double logd_g =
            std::log(static_cast<double>(group_order)) / std::log(static_cast<double>(d));
        const double f = f_ent.to_double();
        // F^{log_d|G| / 2} C <= 1 - alpha
        const double lhs = c == 0 ? 0.0 : std::pow(f, logd_g / 2.0) * static_cast<double>(c);
        if (lhs <= 1.0 - *alpha) {
            const double lo = static_cast<double>(r.packing_bound);
            r.bracket = std::make_pair(lo, lo + std::log(1.0 / *alpha) /
                                                    std::log(static_cast<double>(d)));
        }
    }
    return r;
}

GroupFidelity group_fidelity(const GateSet &g, const groups::GroupTable &table) {
    if (table.order != g.size()) {
        throw InvalidArgument("group table does not match the gate set");
    }
    const double d = static_cast<double>(g.dimension);
    GroupFidelity out;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (x == table.identity_index) {
            continue;
        }
        const double tr = std::abs(g.gates[x].matrix.trace());
        const double f = tr * tr / (d * d);
        if (tr > 1e-9 * d) {
            ++out.confusable;
        }
        out.f_ent_value = std::max(out.f_ent_value, tr > 1e-9 * d ? f : 0.0);
    }
    if (auto snapped = Rational::snap(out.f_ent_value, 10000, 1e-12)) {
        out.f_ent = *snapped;
        out.exact = true;
    } else {
        // round up to a multiple of 1e-12 so the criterion stays sufficient
        const double scaled = std::ceil(out.f_ent_value * 1e12);
        out.f_ent = Rational(BigInt(static_cast<long long>(scaled)), BigInt(1000000000000LL));
    }
    return out;
}

std::string_view kind_name(BoundKind k) {
    switch (k) {
    case BoundKind::Lower:
        return "lower";
    case BoundKind::Upper:
        return "upper";
    case BoundKind::Feasibility:
        return "feasibility";
    case BoundKind::Measured:
        return "measured";
    }
    return "?";
}

std::vector<BoundEntry> ancilla_bounds(std::size_t n, std::size_t d,
                                       std::optional<std::uint64_t> group_order, bool commuting,
                                       bool include_young) {
    if (n < 1 || d < 2) {
        throw InvalidArgument("ancilla bounds need N >= 1 and d >= 2");
    }
    std::vector<BoundEntry> out;
    out.push_back({"binomial ancilla", "d_A_min", BoundKind::Upper,
                   binomial(n + d - 1, d - 1).convert_to<double>(), "d_A <= binom(N+d-1, d-1)",
                   ""});
    if (group_order) {
        const double root = std::sqrt(static_cast<double>(*group_order));
        std::uint64_t ceil_root = 0;
        while (ceil_root * ceil_root < *group_order) {
            ++ceil_root;
        }
        out.push_back({"group ancilla", "d_A_min", BoundKind::Upper, root, "d_A <= sqrt(|G|)",
                       "sizing value " + std::to_string(ceil_root)});
        out.push_back({"group ancilla (ceiling)", "d_A_min", BoundKind::Upper,
                       static_cast<double>(ceil_root), "d_A <= ceil(sqrt(|G|))", ""});
    }
    if (commuting) {
        out.push_back({"commuting gates", "d_A_min", BoundKind::Upper, 1.0,
                       "d_A = 1 for commuting gates", ""});
    }
    if (include_young && n <= groups::kMaxYoungBoxes) {
        const auto dec = groups::young_decomposition(n, d);
        out.push_back({"hook-formula ancilla", "d_A_min", BoundKind::Upper,
                       dec.ancilla_bound.convert_to<double>(), "d_A <= max_mu ceil(d_mu / m_mu)",
                       ""});
    }
    return out;
}

BoundsReport assemble_report(const GateSet &g, const ReportInputs &in) {
    BoundsReport r;
    const std::size_t k = g.size();
    const std::size_t d = g.dimension;
    const auto dim = dimensional_min_queries(k, d);
    r.entries.push_back({"dimensional", "N_min", BoundKind::Lower,
                         static_cast<double>(dim.queries), "binom(N+d^2-1, d^2-1) >= |U|", ""});
    r.entries.push_back({"dimensional (crude)", "N_min", BoundKind::Lower, dim.crude,
                         "N >= |U|^(1/(d^2-1)) - 1", ""});
    if (in.span_dim_1 >= 1) {
        r.entries.push_back({"linear", "N_min", BoundKind::Upper,
                             static_cast<double>(linear_upper_bound(k, in.span_dim_1)),
                             "N <= |U| - dim(U) + 1", ""});
    }
    if (in.fidelity) {
        if (*in.fidelity < 1.0) {
            r.entries.push_back({"fidelity", "N_min", BoundKind::Upper,
                                 static_cast<double>(copies_for_unambiguous(*in.fidelity, k)),
                                 "N <= floor(log(|U|-1) / log(F^(-1/2))) + 1",
                                 "F = " + fmt(*in.fidelity) +
                                     (in.fidelity_source.empty() ? ""
                                                                 : " (" + in.fidelity_source + ")")});
        } else {
            r.flags.push_back("fidelity F = " + fmt(*in.fidelity) + " is not below 1");
        }
    }
    if (in.measured_n_min) {
        r.entries.push_back({"measured", "N_min", BoundKind::Measured,
                             static_cast<double>(*in.measured_n_min), "min N with dim(U_N) = |U|",
                             ""});
    }
    if (in.ancilla_queries) {
        auto anc = ancilla_bounds(*in.ancilla_queries, d, in.group_order, in.commuting);
        for (auto &e : anc) {
            e.note += (e.note.empty() ? "" : "; ") + std::string("N = ") +
                      std::to_string(*in.ancilla_queries);
            r.entries.push_back(std::move(e));
        }
        if (in.measured_ancilla) {
            r.entries.push_back({"probed ancilla", "d_A_min", BoundKind::Measured,
                                 static_cast<double>(*in.measured_ancilla),
                                 "smallest d_A with independent outputs",
                                 "N = " + std::to_string(*in.ancilla_queries)});
        }
    }
    if (in.group_order && in.extra_queries_ancilla) {
        r.entries.push_back(
            {"extra queries", "Delta_N", BoundKind::Upper,
             static_cast<double>(
                 extra_queries_bound(*in.extra_queries_ancilla, *in.group_order, d)),
             "ceil((log d_A + log sqrt|G|) / log d)",
             "d_A = " + std::to_string(*in.extra_queries_ancilla)});
    }
    if (in.group_order && in.group_fidelity) {
        const auto af = ancilla_free_group_min_queries(d, *in.group_order, in.group_fidelity->f_ent,
                                                       in.group_fidelity->confusable);
        r.entries.push_back({"ancilla-free packing", "N_AF_min", BoundKind::Lower,
                             static_cast<double>(af.packing_bound), "N >= ceil(log_d |G|)", ""});
        if (af.queries) {
            r.entries.push_back({"ancilla-free fidelity", "N_AF_min", BoundKind::Feasibility,
                                 static_cast<double>(*af.queries),
                                 "d^N (1 - F_ent^(N/2) C) >= |G|",
                                 "F_ent = " + in.group_fidelity->f_ent.str() +
                                     ", C = " + std::to_string(in.group_fidelity->confusable)});
        } else {
            r.entries.push_back({"ancilla-free fidelity", "N_AF_min", BoundKind::Feasibility,
                                 std::numeric_limits<double>::infinity(),
                                 "d^N (1 - F_ent^(N/2) C) >= |G|", af.note});
        }
    }

    // per quantity: every lower <= every upper, measured values in between
    std::map<std::string, std::vector<const BoundEntry *>> by_quantity;
    for (const auto &e : r.entries) {
        by_quantity[e.quantity].push_back(&e);
    }
    constexpr double slack = 1e-9;
    for (const auto &[quantity, list] : by_quantity) {
        for (const BoundEntry *lo : list) {
            if (lo->kind != BoundKind::Lower && lo->kind != BoundKind::Measured) {
                continue;
            }
            for (const BoundEntry *hi : list) {
                const bool upper_like = hi->kind == BoundKind::Upper ||
                                        hi->kind == BoundKind::Feasibility ||
                                        hi->kind == BoundKind::Measured;
                if (hi == lo || !upper_like || std::isinf(hi->value)) {
                    continue;
                }
                if (lo->kind == BoundKind::Measured && hi->kind == BoundKind::Measured) {
                    continue;
                }
                if (lo->value > hi->value + slack) {
                    r.flags.push_back(quantity + ": " + lo->name + " (" + fmt(lo->value) +
                                      ") exceeds " + hi->name + " (" + fmt(hi->value) + ")");
                }
            }
        }
    }
    return r;
}

} // namespace gateid::bounds
