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
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gateid/bounds.hpp"
#include "gateid/cli.hpp"
#include "gateid/discriminate.hpp"
#include "gateid/errors.hpp"
#include "gateid/groups.hpp"
#include "gateid/optimize.hpp"

namespace gateid::cli {

namespace {

namespace dis = gateid::discriminate;
namespace grp = gateid::groups;

/// The heuristic minimax search is skipped above this many gates.
constexpr std::size_t kMaxOptimizedGates = 64;

Json opt_json(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

Json finite_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

/// Largest N with (d^2)^N within the cap.
std::size_t cap_queries(const GateSet &g, const NumericConfig &cfg) {
    std::size_t n = 0;
    while (numerics::checked_pow(g.dimension * g.dimension, n + 1) <= cfg.dim_cap) {
        ++n;
    }
    return n;
}

std::string source_name(const AnalysisConfig &cfg) {
    if (cfg.input) {
        return *cfg.input;
    }
    const auto params = gatesets::family_parameters(gatesets::parse_family(*cfg.family));
    std::vector<std::string> parts;
    if (params.find('d') != std::string_view::npos) {
        parts.push_back("d=" + std::to_string(cfg.params.d));
    }
    if (params.find('K') != std::string_view::npos) {
        parts.push_back("K=" + std::to_string(cfg.params.k));
    }
    std::string out = *cfg.family;
    if (!parts.empty()) {
        out += "(" + parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) {
            out += ", " + parts[i];
        }
        out += ")";
    }
    return out;
}

Json gate_set_items(const GateSet &g, const AnalysisConfig &cfg) {
    Json items;
    items["source"] = source_name(cfg);
    items["dimension"] = g.dimension;
    items["gates"] = g.size();
    items["labels"] = g.labels();
    items["uniform_priors"] = g.has_uniform_priors();
    return items;
}

std::optional<grp::GroupTable> detect_group(const GateSet &g, const NumericConfig &cfg) {
    auto res = grp::closure_table(g, true, cfg);
    if (auto *t = std::get_if<grp::GroupTable>(&res)) {
        return *t;
    }
    return std::nullopt;
}

bool pairwise_commuting(const GateSet &g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = x + 1; y < g.size(); ++y) {
            const ComplexMatrix &a = g.gates[x].matrix;
            const ComplexMatrix &b = g.gates[y].matrix;
            if ((a * b - b * a).norm() > 1e-10) {
                return false;
            }
        }
    }
    return true;
}

std::size_t resolve_queries(const GateSet &g, const AnalysisConfig &cfg) {
    return cfg.queries ? *cfg.queries : dis::min_queries_unambiguous(g, cfg.numeric);
}

dis::Strategy build_strategy(const GateSet &g, std::size_t n, const AnalysisConfig &cfg) {
    if (cfg.strategy == "unambiguous") {
        const std::size_t sys = numerics::checked_pow(g.dimension, n);
        numerics::require_within_cap("strategy space", numerics::checked_pow(sys, 2),
                                     cfg.numeric.dim_cap);
        return dis::unambiguous_strategy(g, n, numerics::max_entangled(sys), sys, cfg.numeric);
    }
    return dis::design_strategy(g, n, cfg.numeric);
}

Json strategy_items(const dis::Strategy &s, const AnalysisConfig &cfg,
                    const dis::PovmCheck &check) {
    Json items;
    items["kind"] = "parallel";
    items["construction"] = cfg.strategy;
    items["queries"] = s.queries;
    items["ancilla_dim"] = s.ancilla_dim;
    items["space_dim"] = s.povm.space_dim();
    items["povm_completeness_residual"] = check.completeness_residual;
    items["povm_min_eigenvalue"] = check.min_eigenvalue;
    items["povm_ok"] = check.ok;
    return items;
}

std::optional<grp::CharacterTable> characters_for(const grp::GroupTable &table,
                                                  const AnalysisConfig &cfg,
                                                  std::string &origin) {
    if (cfg.character_table) {
        origin = *cfg.character_table;
        return grp::load_character_table_file(*cfg.character_table);
    }
    if (table.is_abelian()) {
        origin = "generated (abelian table)";
        return grp::abelian_characters(table);
    }
    origin = "none (non-abelian table; pass --character-table)";
    return std::nullopt;
}

/// Group structure, design check, character multiplicities and the
/// ancilla-free criterion.
void add_group_sections(Report &rep, const GateSet &g, const grp::GroupTable &table,
                        const AnalysisConfig &cfg, std::size_t m_max) {
    const auto design = grp::design_check_haar_t1(g, cfg.numeric);
    const auto fid = bounds::group_fidelity(g, table);
    const auto af = bounds::ancilla_free_group_min_queries(g.dimension, table.order, fid.f_ent,
                                                           fid.confusable);
    std::uint64_t root_ceil = 0;
    while (root_ceil * root_ceil < table.order) {
        ++root_ceil;
    }
    Json items;
    items["order"] = table.order;
    items["projective"] = table.projective;
    items["abelian"] = table.is_abelian();
    items["identity"] = g.gates[table.identity_index].label;
    items["haar_t1_residual"] = design.residual;
    items["unitary_1_design"] = design.verdict;
    items["entanglement_fidelity"] = fid.f_ent.str();
    items["confusable_with_identity"] = fid.confusable;
    items["ancilla_free_packing_bound"] = af.packing_bound;
    items["ancilla_free_queries"] =
        af.queries ? Json(*af.queries) : Json("not certified for N <= 64");
    items["extra_queries_for_sqrt_G_ancilla"] =
        bounds::extra_queries_bound(root_ceil, table.order, g.dimension);
    rep.add_items("group", std::move(items));

    std::string origin;
    std::optional<grp::CharacterTable> chars;
    try {
        chars = characters_for(table, cfg, origin);
    } catch (const InvalidArgument &e) {
        origin = std::string("unavailable: ") + e.what();
    }
    const auto w = grp::multipliers(g, table);
    const double root = std::sqrt(static_cast<double>(table.order));
    std::vector<Json> rows;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const bool ordinary = grp::multiplier_power_trivial(w, m);
        const bool usable = chars && (cfg.character_table || ordinary);
        std::optional<std::size_t> rank;
        if (numerics::checked_pow(g.dimension * g.dimension, m) <= cfg.numeric.dim_cap) {
            rank = dis::span_dimension(g, m, cfg.numeric);
        }
        Json rank_json = rank ? Json(*rank) : Json(nullptr);
        if (!usable) {
            rows.push_back(Json::array({m, ordinary, nullptr, nullptr, nullptr, nullptr,
                                        nullptr, rank_json}));
            continue;
        }
        const auto dec = grp::decompose_by_characters(g, table, *chars, m);
        const double packing = std::pow(static_cast<double>(g.dimension),
                                        static_cast<double>(m)) / root;
        rows.push_back(Json::array({m, ordinary, dec.total_multiplicity, dec.all_consistent,
                                    dec.total_multiplicity >= packing - 1e-9,
                                    dec.occupied_dim_square_sum, dec.contains_regular,
                                    rank_json}));
    }
    rep.add_table("character multiplicities",
                  {"M", "ordinary_power", "sum_m", "consistent", "sum_m >= d^M/sqrt|G|",
                   "sum_occupied_d^2", "contains_regular", "choi_rank"},
                  std::move(rows));
    rep.add_notes("characters", {"source: " + origin});
}

void add_bounds_section(Report &rep, const bounds::BoundsReport &b) {
    std::vector<Json> rows;
    for (const auto &e : b.entries) {
        rows.push_back(Json::array({e.name, e.quantity, std::string(bounds::kind_name(e.kind)),
                                    finite_json(e.value), e.eq_tag, e.note}));
    }
    rep.add_table("bounds", {"name", "quantity", "kind", "value", "eq_tag", "note"},
                  std::move(rows));
    rep.add_notes("consistency", b.flags.empty() ? std::vector<std::string>{"consistent"}
                                                 : b.flags);
}

std::vector<Json> confusion_rows(const dis::EvalResult &e) {
    std::vector<Json> rows;
    for (Eigen::Index x = 0; x < e.table.rows(); ++x) {
        Json row = Json::array({e.gate_labels[static_cast<std::size_t>(x)]});
        for (Eigen::Index y = 0; y < e.table.cols(); ++y) {
            row.push_back(e.table(x, y));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> with_first(std::string first, const std::vector<std::string> &rest) {
    std::vector<std::string> out{std::move(first)};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Json eval_items(const dis::EvalResult &e) {
    Json items;
    items["conditional_success"] = opt_json(e.conditional_success);
    items["all_inconclusive"] = e.all_inconclusive();
    items["success_prob"] = e.success_prob;
    items["error_prob"] = e.error_prob;
    items["inconclusive_prob"] = e.inconclusive_prob;
    items["error_free"] = e.error_free();
    return items;
}

} // namespace

GateSet load_configured_set(const AnalysisConfig &cfg) {
    if (cfg.input && cfg.family) {
        throw InvalidArgument("pass either --input or --family, not both");
    }
    if (cfg.input) {
        return gatesets::load_gate_set_file(*cfg.input, cfg.numeric);
    }
    if (cfg.family) {
        GateSet g = gatesets::make_named_set(gatesets::parse_family(*cfg.family), cfg.params);
        gatesets::require_valid(g, cfg.numeric);
        return g;
    }
    throw InvalidArgument("need --input or --family");
}

Report catalog_command(const AnalysisConfig &cfg) {
    Report rep("catalog");
    if (!cfg.family && !cfg.input) {
        std::vector<Json> rows;
        for (auto f : gatesets::all_families()) {
            const GateSet g = gatesets::make_named_set(f, {});
            rows.push_back(Json::array({std::string(gatesets::family_name(f)), g.dimension,
                                        g.size(), gatesets::family_parameters(f),
                                        gatesets::family_description(f)}));
        }
        rep.add_table("families", {"family", "d (default)", "gates (default)", "parameters",
                                   "definition"},
                      std::move(rows));
        return rep;
    }
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    std::vector<Json> rows;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const auto &gate = g.gates[x];
        rows.push_back(Json::array({gate.label, g.priors[x],
                                    numerics::unitarity_defect(gate.matrix),
                                    std::abs(gate.matrix.trace())}));
    }
    rep.add_table("gates", {"label", "prior", "unitarity_residual", "abs_trace"},
                  std::move(rows));
    if (cfg.write_path) {
        std::ofstream out(*cfg.write_path);
        if (!out) {
            throw InvalidArgument("cannot write '" + *cfg.write_path + "'");
        }
        out << gatesets::serialize_gate_set(g);
        rep.add_notes("output", {"gate set written to " + *cfg.write_path});
    }
    return rep;
}

Report analyze_command(const AnalysisConfig &cfg) {
    Report rep("analyze");
    const GateSet g = load_configured_set(cfg);
    const NumericConfig &nc = cfg.numeric;
    rep.add_items("gate set", gate_set_items(g, cfg));

    const std::size_t k = g.size();
    const std::size_t cap_n = cap_queries(g, nc);
    if (cap_n == 0) {
        throw CapExceeded("Choi vectors at N=1", g.dimension * g.dimension, nc.dim_cap);
    }
    const std::size_t span1 = dis::span_dimension(g, 1, nc);
    const std::size_t linear = bounds::linear_upper_bound(k, span1);
    const std::size_t n_max = cfg.n_max ? *cfg.n_max : std::min(linear, cap_n);
    const auto group = detect_group(g, nc);
    const bool design_col = group && g.has_uniform_priors();

    bool cap_hit = false;
    std::optional<std::size_t> n_min;
    std::vector<Json> rows;
    std::vector<std::size_t> highlight;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > cap_n) {
            cap_hit = true;
            rows.push_back(Json::array({n, "cap exceeded", nullptr, nullptr, nullptr, nullptr}));
            continue;
        }
        const auto c = dis::classify_discriminability(g, n, nc);
        const double p = dis::pmax(g, n, nc);
        Json dp = design_col ? Json(static_cast<double>(c.span_dim) / static_cast<double>(k))
                             : Json(nullptr);
        rows.push_back(Json::array({n, c.span_dim, c.unambiguous, c.error_free_labels, p, dp}));
        if (c.unambiguous && !n_min) {
            n_min = n;
            highlight.push_back(n - 1);
        }
    }
    if (!n_min && linear <= cap_n) {
        n_min = dis::min_queries_unambiguous(g, nc);
    }
    rep.add_table("queries",
                  {"N", "span_dim", "unambiguous", "error_free_labels", "pmax", "design_pmax"},
                  std::move(rows), std::move(highlight));

    // minimax fidelity: heuristic search for moderate sets, certified state otherwise
    const std::size_t restarts = k <= kMaxOptimizedGates ? cfg.restarts : 0;
    auto fidelity = [&](optimize::FidelityMode mode) -> optimize::FidelityResult {
        if (restarts > 0) {
            return optimize::minimax_fidelity(g, mode, restarts, cfg.seed, nc);
        }
        optimize::FidelityResult r;
        r.mode = mode;
        const ComplexVector state =
            mode == optimize::FidelityMode::Bipartite
                ? numerics::max_entangled(g.dimension)
                : ComplexVector::Constant(static_cast<Eigen::Index>(g.dimension),
                                          1.0 / std::sqrt(static_cast<double>(g.dimension)));
        r.certified = r.heuristic = r.value = optimize::max_pair_fidelity(g, mode, state);
        return r;
    };
    const auto bip = fidelity(optimize::FidelityMode::Bipartite);
    const auto loc = fidelity(optimize::FidelityMode::Local);
    {
        Json items;
        items["bipartite"] = bip.value;
        items["bipartite_certified"] = bip.certified;
        items["local"] = loc.value;
        items["local_certified"] = loc.certified;
        items["restarts"] = restarts;
        items["seed"] = cfg.seed;
        rep.add_items("minimax fidelity", std::move(items));
    }

    const bool commuting = pairwise_commuting(g);
    std::optional<optimize::ProbeResult> probe;
    std::string probe_note;
    if (n_min) {
        const std::size_t sys = numerics::checked_pow(g.dimension, *n_min);
        std::size_t d_a_max = cfg.d_a_max ? *cfg.d_a_max : sys;
        if (sys <= nc.dim_cap) {
            d_a_max = std::min(d_a_max, nc.dim_cap / sys);
            try {
                probe = optimize::min_ancilla_probe(g, *n_min, d_a_max, cfg.trials, cfg.seed, nc);
            } catch (const Infeasible &e) {
                probe_note = e.what();
            }
        } else {
            probe_note = "probe space exceeds the cap";
        }
    }
    const auto local_dim = optimize::local_span_dimension(g, cfg.trials, cfg.seed, nc);
    {
        Json items;
        items["queries"] = n_min ? Json(*n_min) : Json(nullptr);
        items["min_ancilla_probe"] = probe ? Json(probe->value) : Json(nullptr);
        items["probes_used"] = probe ? Json(probe->trials) : Json(nullptr);
        items["probe_note"] = probe_note;
        items["commuting"] = commuting;
        items["local_span_dimension"] = local_dim.value;
        rep.add_items("ancilla", std::move(items));
    }

    bounds::ReportInputs in;
    in.span_dim_1 = span1;
    in.measured_n_min = n_min;
    if (bip.value < 1.0) {
        in.fidelity = bip.value;
        in.fidelity_source = "bipartite minimax";
    }
    if (n_min) {
        in.ancilla_queries = n_min;
    }
    in.commuting = commuting;
    if (probe) {
        in.measured_ancilla = probe->value;
    }
    if (group) {
        in.group_order = group->order;
        in.group_fidelity = bounds::group_fidelity(g, *group);
        if (probe) {
            in.extra_queries_ancilla = probe->value;
        }
    }
    add_bounds_section(rep, bounds::assemble_report(g, in));

    if (group) {
        add_group_sections(rep, g, *group, cfg, std::min(n_max, cap_n));
    } else {
        rep.add_notes("group", {"gates do not close under multiplication, even up to phase"});
    }
    if (cap_hit) {
        rep.set_exit_code(kExitCap);
        rep.add_notes("status", {"rows beyond N = " + std::to_string(cap_n) +
                                 " exceed the dimension cap " + std::to_string(nc.dim_cap)});
    }
    return rep;
}

Report pmax_command(const AnalysisConfig &cfg) {
    Report rep("pmax");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    std::vector<std::size_t> ns;
    if (cfg.queries) {
        ns.push_back(*cfg.queries);
    } else {
        const std::size_t hi = cfg.n_max ? *cfg.n_max : std::max<std::size_t>(1, cap_queries(g, cfg.numeric));
        for (std::size_t n = 1; n <= hi; ++n) {
            ns.push_back(n);
        }
    }
    const bool uniform = g.has_uniform_priors();
    const bool group = detect_group(g, cfg.numeric).has_value();
    std::vector<Json> rows;
    for (std::size_t n : ns) {
        const double p = dis::pmax(g, n, cfg.numeric);
        const std::size_t dim = dis::span_dimension(g, n, cfg.numeric);
        rows.push_back(Json::array(
            {n, dim, p,
             uniform ? Json(static_cast<double>(dim) / static_cast<double>(g.size()))
                     : Json(nullptr)}));
    }
    rep.add_table("optimal success probability", {"N", "span_dim", "pmax", "span_dim/|U|"},
                  std::move(rows));
    rep.add_notes("notes", {group ? "gates form a (projective) group: pmax equals span_dim/|U|"
                                  : "gates are not a group: span_dim/|U| is not guaranteed"});
    return rep;
}

Report povm_command(const AnalysisConfig &cfg) {
    Report rep("povm");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    const std::size_t n = resolve_queries(g, cfg);
    const auto s = build_strategy(g, n, cfg);
    const auto check = dis::check_povm(s.povm, cfg.numeric);
    rep.add_items("strategy", strategy_items(s, cfg, check));
    const auto e = dis::evaluate_strategy(g, s, cfg.numeric);
    rep.add_table("p(y|x)", with_first("gate", e.outcome_labels), confusion_rows(e));
    rep.add_items("evaluation", eval_items(e));
    return rep;
}

Report simulate_command(const AnalysisConfig &cfg) {
    Report rep("simulate");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    const std::size_t n = resolve_queries(g, cfg);
    const auto s = build_strategy(g, n, cfg);
    const auto check = dis::check_povm(s.povm, cfg.numeric);
    rep.add_items("strategy", strategy_items(s, cfg, check));
    const auto e = dis::evaluate_strategy(g, s, cfg.numeric);
    const auto sim = dis::simulate_from_table(g, e, cfg.shots, cfg.seed, cfg.numeric);
    std::vector<Json> rows;
    for (std::size_t x = 0; x < g.size(); ++x) {
        Json row = Json::array({g.gates[x].label});
        for (auto c : sim.counts[x]) {
            row.push_back(c);
        }
        rows.push_back(std::move(row));
    }
    rep.add_table("counts", with_first("gate", sim.outcome_labels), std::move(rows));
    Json items;
    items["shots"] = sim.shots;
    items["seed"] = sim.seed;
    items["correct"] = sim.correct;
    items["errors"] = sim.errors;
    items["inconclusive"] = sim.inconclusive;
    items["expected_success_prob"] = e.success_prob;
    items["expected_error_prob"] = e.error_prob;
    items["expected_inconclusive_prob"] = e.inconclusive_prob;
    rep.add_items("simulation", std::move(items));
    return rep;
}

Report design_check_command(const AnalysisConfig &cfg) {
    Report rep("design-check");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    grp::DesignCheckResult r;
    std::string reference = cfg.reference;
    if (cfg.reference == "haar") {
        if (cfg.t != 1) {
            throw InvalidArgument("the analytic Haar reference is available for t = 1 only");
        }
        r = grp::design_check_haar_t1(g, cfg.numeric);
    } else if (cfg.reference == "self") {
        r = grp::design_check(g, g, cfg.t, cfg.numeric);
    } else {
        const GateSet ref = gatesets::load_gate_set_file(cfg.reference, cfg.numeric);
        r = grp::design_check(g, ref, cfg.t, cfg.numeric);
    }
    Json items;
    items["reference"] = reference;
    items["t"] = r.t;
    items["residual"] = r.residual;
    items["tolerance"] = grp::kDesignTolerance;
    items["design"] = r.verdict;
    rep.add_items("design check", std::move(items));
    return rep;
}

Report ancilla_command(const AnalysisConfig &cfg) {
    Report rep("ancilla");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    const std::size_t n = resolve_queries(g, cfg);
    const std::size_t sys = numerics::checked_pow(g.dimension, n);
    const std::size_t d_a_max = cfg.d_a_max ? *cfg.d_a_max : sys;
    const auto group = detect_group(g, cfg.numeric);
    const bool commuting = pairwise_commuting(g);

    Json items;
    items["queries"] = n;
    try {
        const auto probe =
            optimize::min_ancilla_probe(g, n, d_a_max, cfg.trials, cfg.seed, cfg.numeric);
        items["min_ancilla_probe"] = probe.value;
        items["probes_used"] = probe.trials;
    } catch (const Infeasible &e) {
        items["min_ancilla_probe"] = nullptr;
        items["probe_note"] = e.what();
    }
    items["local_span_dimension"] =
        optimize::local_span_dimension(g, cfg.trials, cfg.seed, cfg.numeric).value;
    items["commuting"] = commuting;
    items["seed"] = cfg.seed;
    rep.add_items("ancilla", std::move(items));

    bounds::BoundsReport b;
    b.entries = bounds::ancilla_bounds(
        n, g.dimension, group ? std::optional<std::uint64_t>(group->order) : std::nullopt,
        commuting);
    add_bounds_section(rep, b);

    if (n <= grp::kMaxYoungBoxes) {
        const auto dec = grp::young_decomposition(n, g.dimension);
        std::vector<Json> rows;
        for (const auto &irr : dec.irreps) {
            const BigInt ceil_ratio = (irr.dim + irr.mult - 1) / irr.mult;
            rows.push_back(Json::array({irr.shape.str(), irr.dim.str(), irr.mult.str(),
                                        ceil_ratio.str()}));
        }
        rep.add_table("young decomposition", {"shape", "d_mu", "m_mu", "ceil(d_mu/m_mu)"},
                      std::move(rows));
    }
    return rep;
}

Report group_command(const AnalysisConfig &cfg) {
    Report rep("group");
    const GateSet g = load_configured_set(cfg);
    rep.add_items("gate set", gate_set_items(g, cfg));
    auto res = grp::closure_table(g, true, cfg.numeric);
    if (auto *fail = std::get_if<grp::ClosureFailure>(&res)) {
        Json items;
        items["group"] = false;
        items["witness"] = Json::array({g.gates[fail->first].label, g.gates[fail->second].label});
        items["message"] = fail->message;
        rep.add_items("closure", std::move(items));
        return rep;
    }
    const auto &table = std::get<grp::GroupTable>(res);
    if (table.order <= 16) {
        std::vector<Json> rows;
        for (std::size_t x = 0; x < table.order; ++x) {
            Json row = Json::array({g.gates[x].label});
            for (std::size_t y = 0; y < table.order; ++y) {
                row.push_back(g.gates[table.product(x, y)].label);
            }
            rows.push_back(std::move(row));
        }
        rep.add_table("multiplication", with_first("x\\y", g.labels()), std::move(rows));
    }
    add_group_sections(rep, g, table, cfg, cfg.n_max ? *cfg.n_max : 4);
    return rep;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    AnalysisConfig cfg;
    std::string format = "markdown";
    CLI::App app{"Resources needed to identify an unknown gate from a finite set"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--input", cfg.input, "gate-set JSON file");
        sub->add_option("--family", cfg.family, "named gate family");
        sub->add_option("--K", cfg.params.k, "family parameter K");
        sub->add_option("--d", cfg.params.d, "family parameter d");
        sub->add_option("--tol-rank", cfg.numeric.rank_tol, "relative rank cutoff");
        sub->add_option("--tol-psd", cfg.numeric.psd_tol, "PSD eigenvalue cutoff");
        sub->add_option("--tol-unitary", cfg.numeric.unitarity_tol, "unitarity tolerance");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--n-max", cfg.n_max, "largest query count to tabulate");
        sub->add_option("--format", format, "json | markdown | csv");
    };

    auto *catalog = app.add_subcommand("catalog", "list families or describe one gate set");
    add_common(catalog);
    catalog->add_option("--write", cfg.write_path, "save the gate set as JSON");

    auto *analyze = app.add_subcommand("analyze", "full resource analysis");
    add_common(analyze);
    analyze->add_option("--restarts", cfg.restarts, "minimax restarts");
    analyze->add_option("--trials", cfg.trials, "random probes per ancilla size");
    analyze->add_option("--d-a-max", cfg.d_a_max, "largest ancilla dimension to probe");
    analyze->add_option("--character-table", cfg.character_table, "character-table JSON");

    auto *pmax = app.add_subcommand("pmax", "optimal success probability per N");
    add_common(pmax);
    pmax->add_option("--queries", cfg.queries, "single N");

    auto add_strategy = [&](CLI::App *sub) {
        sub->add_option("--queries", cfg.queries, "N (default: smallest unambiguous N)");
        sub->add_option("--strategy", cfg.strategy, "design | unambiguous");
    };
    auto *povm = app.add_subcommand("povm", "build and evaluate a measurement");
    add_common(povm);
    add_strategy(povm);

    auto *simulate = app.add_subcommand("simulate", "sample a strategy");
    add_common(simulate);
    add_strategy(simulate);
    simulate->add_option("--shots", cfg.shots, "number of shots");

    auto *design = app.add_subcommand("design-check", "generalized t-design test");
    add_common(design);
    design->add_option("--reference", cfg.reference, "haar | self | gate-set JSON file");
    design->add_option("--t", cfg.t, "design order");

    auto *ancilla = app.add_subcommand("ancilla", "ancilla dimension bounds and probe");
    add_common(ancilla);
    ancilla->add_option("--queries", cfg.queries, "N (default: smallest unambiguous N)");
    ancilla->add_option("--trials", cfg.trials, "random probes per ancilla size");
    ancilla->add_option("--d-a-max", cfg.d_a_max, "largest ancilla dimension to probe");

    auto *group = app.add_subcommand("group", "group structure and character multiplicities");
    add_common(group);
    group->add_option("--character-table", cfg.character_table, "character-table JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    auto fail = [&](int code, const std::string &title, const std::string &message) {
        Report rep(name);
        std::vector<std::string> lines;
        std::istringstream is(message);
        for (std::string line; std::getline(is, line);) {
            if (!line.empty()) {
                lines.push_back(line);
            }
        }
        rep.add_notes(title, lines);
        rep.set_exit_code(code);
        Format f = Format::Markdown;
        try {
            f = parse_format(format);
        } catch (const Error &) {
        }
        out << render(rep.doc(), f);
        err << "error: " << message << '\n';
        return code;
    };

    try {
        if (const char *env = std::getenv("GATEID_CAP"); env != nullptr && *env != '\0') {
            char *end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (*end != '\0' || v == 0) {
                throw InvalidArgument(std::string("GATEID_CAP must be a positive integer, got '") +
                                      env + "'");
            }
            cfg.numeric.dim_cap = static_cast<std::size_t>(v);
        }
        cfg.format = parse_format(format);
        cfg.check();
        Report rep = name == "catalog"        ? catalog_command(cfg)
                     : name == "analyze"      ? analyze_command(cfg)
                     : name == "pmax"         ? pmax_command(cfg)
                     : name == "povm"         ? povm_command(cfg)
                     : name == "simulate"     ? simulate_command(cfg)
                     : name == "design-check" ? design_check_command(cfg)
                     : name == "ancilla"      ? ancilla_command(cfg)
                                              : group_command(cfg);
        out << render(rep.doc(), cfg.format);
        return rep.exit_code();
    } catch (const ValidationError &e) {
        return fail(kExitValidation, "validation", e.what());
    } catch (const InvalidArgument &e) {
        return fail(kExitValidation, "invalid input", e.what());
    } catch (const CapExceeded &e) {
        return fail(kExitCap, "dimension cap", e.what());
    } catch (const Infeasible &e) {
        return fail(kExitValidation, "infeasible", e.what());
    } catch (const std::exception &e) {
        return fail(kExitInternal, "internal error", e.what());
    }
}

} // namespace gateid::cli
