#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rcs/dimension.hpp"
#include "rcs/galton_watson.hpp"
#include "rcs/intersection.hpp"
#include "rcs/measures.hpp"
#include "rcs/montecarlo.hpp"
#include "rcs/tree_codec.hpp"

namespace {

using nlohmann::json;

// "@path" arguments name files; anything else is taken literally.
std::string expand_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw rcs::DomainError("cannot open file " + arg.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_lines_or_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == '\n' || c == '\r') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct OutputOptions {
    std::string format = "plain";  // plain | json | csv
    std::string path;              // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("--output", out.path,
                    "Write to this file instead of stdout (relative paths resolve "
                    "against $RCS_OUTPUT_DIR when set)");
}

void emit(const OutputOptions& opt, const std::string& text) {
    if (opt.path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::path path(opt.path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("RCS_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream file(path);
    if (!file) throw rcs::DomainError("cannot write " + path.string());
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string render_report(const rcs::mc::ExperimentReport& report, const OutputOptions& opt) {
    if (opt.format == "json") return rcs::mc::to_json(report).dump(2);
    if (opt.format == "csv") return rcs::mc::to_csv(report);
    std::ostringstream out;
    out.precision(10);
    out << report.name << "  (seed " << report.master_seed << ")\n";
    for (const auto& r : report.records) {
        out << "  " << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": value=" << r.value
            << " exact=" << r.exact << " tol=" << r.tolerance << " ci=[" << r.ci_low << ", "
            << r.ci_high << "] trials=" << r.trials << '\n';
    }
    for (const auto& t : report.tests) {
        out << "  " << (t.pass ? "[pass] " : "[FAIL] ") << t.name << ": stat=" << t.statistic
            << " df=" << t.df << " p=" << t.p_value << " alpha=" << t.significance << '\n';
    }
    out << "  runtime: " << report.runtime_seconds << " s\n";
    return out.str();
}

rcs::mc::ExperimentReport wrap_record(const rcs::mc::EstimateRecord& record, std::string name,
                                      json parameters) {
    rcs::mc::ExperimentReport report;
    report.name = std::move(name);
    report.parameters = std::move(parameters);
    report.master_seed = record.master_seed;
    report.records.push_back(record);
    return report;
}

int report_exit_code(const rcs::mc::ExperimentReport& report) { return report.all_pass() ? 0 : 2; }

std::string format_value(double v) {
    std::ostringstream out;
    out.precision(15);
    out << v;
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rcs: random closed subsets of Cantor space via tree codes"};
    app.require_subcommand(1);

    // ------------------------------------------------------------------ decode
    auto* decode = app.add_subcommand("decode", "Decode a trit or quad code into a tree");
    std::string decode_code, decode_alphabet = "trit";
    int decode_depth = 0;
    OutputOptions decode_out;
    decode->add_option("--code", decode_code, "Code over 012 (trit) or 0123 (quad), or @file")
        ->required();
    decode->add_option("--alphabet", decode_alphabet, "trit (dead-end-free) or quad (GW)")
        ->check(CLI::IsMember({"trit", "quad"}));
    decode->add_option("--depth", decode_depth, "Levels to decode")->required();
    add_output_flags(decode, decode_out);

    // ------------------------------------------------------------------ encode
    auto* encode = app.add_subcommand("encode", "Encode a dead-end-free tree as a trit code");
    std::string encode_tree;
    OutputOptions encode_out;
    encode
        ->add_option("--tree", encode_tree,
                     "Tree as JSON {\"depth\": d, \"nodes\": [...]}, or @file")
        ->required();
    add_output_flags(encode, encode_out);

    // --------------------------------------------------------------- intersect
    auto* intersect = app.add_subcommand("intersect", "Intersect two or more trit codes");
    std::string intersect_codes;
    int intersect_depth = 0;
    OutputOptions intersect_out;
    intersect
        ->add_option("--codes", intersect_codes,
                     "Comma-separated trit codes, or @file with one code per line")
        ->required();
    intersect->add_option("--depth", intersect_depth, "Levels to intersect")->required();
    add_output_flags(intersect, intersect_out);

    // ------------------------------------------------------------------- prune
    auto* prune = app.add_subcommand("prune", "Remove dead ends from a quad code");
    std::string prune_code_text;
    int prune_horizon = 0, prune_readable = 0;
    OutputOptions prune_out;
    prune->add_option("--code", prune_code_text, "Quad code over 0123, or @file")->required();
    prune->add_option("--horizon", prune_horizon, "Certification depth d")->required();
    prune->add_option("--readable", prune_readable, "Levels of trit output m <= d")->required();
    add_output_flags(prune, prune_out);

    // ---------------------------------------------------------------- formulas
    auto* formulas = app.add_subcommand("formulas", "Exact closed forms (no randomness)");
    formulas->require_subcommand(1);
    double fp = 0, fq = 0, fr = 0, fs = 0, fgamma = 0, fdim = 0, fb0 = 0, fb1 = 0;
    int fn_n = 1, fdegree = 1;

    auto* f_fn = formulas->add_subcommand("fn", "f_n(p) = 1-(1-p)^n");
    f_fn->add_option("--p", fp)->required();
    f_fn->add_option("--n", fn_n)->required();

    auto* f_fninv = formulas->add_subcommand("fn-inverse", "1-(1-p)^(1/n)");
    f_fninv->add_option("--p", fp)->required();
    f_fninv->add_option("--n", fn_n)->required();

    auto* f_threshold = formulas->add_subcommand("threshold", "1-2^(-1/n)");
    f_threshold->add_option("--n", fn_n)->required();

    auto* f_pair_possible =
        formulas->add_subcommand("pair-possible", "Can <p,q>,<r,s>-random sets meet?");
    f_pair_possible->add_option("--p", fp)->required();
    f_pair_possible->add_option("--q", fq)->required();
    f_pair_possible->add_option("--r", fr)->required();
    f_pair_possible->add_option("--s", fs)->required();

    auto* f_pair_empty = formulas->add_subcommand("pair-emptiness", "(ps+qr)/((1-p-q)(1-r-s))");
    f_pair_empty->add_option("--p", fp)->required();
    f_pair_empty->add_option("--q", fq)->required();
    f_pair_empty->add_option("--r", fr)->required();
    f_pair_empty->add_option("--s", fs)->required();

    auto* f_nfold_empty =
        formulas->add_subcommand("nfold-emptiness", "1-(1-2 f_n(p))/(1-2p)^n");
    f_nfold_empty->add_option("--p", fp)->required();
    f_nfold_empty->add_option("--n", fn_n)->required();

    auto* f_degree = formulas->add_subcommand("degree", "Degree of intersectability of p");
    f_degree->add_option("--p", fp)->required();

    auto* f_dim_bound = formulas->add_subcommand("dim-bound", "-log2(1-p) and degree bounds");
    f_dim_bound->add_option("--p", fp)->required();

    auto* f_gamma = formulas->add_subcommand("gamma-to-p", "1-2^(-gamma)");
    f_gamma->add_option("--gamma", fgamma)->required();

    auto* f_member = formulas->add_subcommand("member-dim-bound", "1/(degree+1)");
    f_member->add_option("--degree", fdegree)->required();

    auto* f_mindeg = formulas->add_subcommand("min-degree", "floor(1/s) for dimension s");
    f_mindeg->add_option("--s", fdim)->required();

    auto* f_survival =
        formulas->add_subcommand("survival", "Survival curve r_0..r_n and its limit");
    double fa0 = -1, fa1 = -1, fa2 = -1, fa3 = -1;
    f_survival->add_option("--beta0", fb0);
    f_survival->add_option("--beta1", fb1);
    f_survival->add_option("--a0", fa0);
    f_survival->add_option("--a1", fa1);
    f_survival->add_option("--a2", fa2);
    f_survival->add_option("--a3", fa3);
    f_survival->add_option("--n", fn_n)->required();

    auto* f_induced = formulas->add_subcommand("induced", "Induced parameters of a pair");
    f_induced->add_option("--p", fp)->required();
    f_induced->add_option("--q", fq)->required();
    f_induced->add_option("--r", fr)->required();
    f_induced->add_option("--s", fs)->required();

    // ---------------------------------------------------------------- estimate
    auto* estimate = app.add_subcommand("estimate", "Seeded Monte Carlo experiments");
    estimate->require_subcommand(1);

    struct EstimateCommon {
        std::uint64_t seed = 0;
        std::uint64_t trials = 10000;
        unsigned threads = 1;
        double tolerance = rcs::mc::kAutoTolerance;
        OutputOptions out;
    };
    auto add_common = [](CLI::App* cmd, EstimateCommon& c) {
        cmd->add_option("--seed", c.seed, "Master seed (required for reproducibility)")
            ->required();
        cmd->add_option("--trials", c.trials, "Trial count");
        cmd->add_option("--threads", c.threads, "Worker cap; never changes results");
        cmd->add_option("--tolerance", c.tolerance,
                        "Pass tolerance (default: 99% CI half-width + 0.005)");
        add_output_flags(cmd, c.out);
    };

    EstimateCommon est_surv;
    double es_b0 = 0.8, es_b1 = 0.8, es_p = -1;
    int es_n = 0, es_depth = 25;
    auto* e_survival = estimate->add_subcommand(
        "survival", "Fraction of GW processes reaching a depth vs the recurrence");
    e_survival->add_option("--beta0", es_b0, "Left-child survival probability");
    e_survival->add_option("--beta1", es_b1, "Right-child survival probability");
    e_survival->add_option("--p", es_p, "Use the n-fold intersection law for mu_p instead");
    e_survival->add_option("--n", es_n, "Fold count for --p");
    e_survival->add_option("--depth", es_depth);
    add_common(e_survival, est_surv);

    EstimateCommon est_pair;
    double ep_p = 0.2, ep_q = 0.2, ep_r = 0.2, ep_s = 0.2;
    int ep_depth = 12;
    auto* e_pair = estimate->add_subcommand("pair-emptiness",
                                            "Empirical emptiness of pairwise intersections");
    e_pair->add_option("--p", ep_p);
    e_pair->add_option("--q", ep_q);
    e_pair->add_option("--r", ep_r);
    e_pair->add_option("--s", ep_s);
    e_pair->add_option("--depth", ep_depth);
    add_common(e_pair, est_pair);

    EstimateCommon est_nfold;
    double en_p = 0.15;
    int en_n = 3, en_depth = 12;
    std::string en_mode = "tree";
    auto* e_nfold = estimate->add_subcommand("nfold-emptiness",
                                             "Empirical emptiness of n-fold intersections");
    e_nfold->add_option("--p", en_p);
    e_nfold->add_option("--n", en_n);
    e_nfold->add_option("--depth", en_depth);
    e_nfold->add_option("--mode", en_mode, "tree (explicit intersection) or process")
        ->check(CLI::IsMember({"tree", "process"}));
    add_common(e_nfold, est_nfold);

    EstimateCommon est_pruned;
    double epf_b0 = 0.8, epf_b1 = 0.8, epf_p = -1;
    int epf_n = 0, epf_horizon = 30, epf_readable = 10;
    auto* e_pruned = estimate->add_subcommand(
        "pruned-freqs", "Pruned-tree symbol frequencies vs the exact branch probabilities");
    e_pruned->add_option("--beta0", epf_b0);
    e_pruned->add_option("--beta1", epf_b1);
    e_pruned->add_option("--p", epf_p, "Use the n-fold intersection law for mu_p instead");
    e_pruned->add_option("--n", epf_n, "Fold count for --p");
    e_pruned->add_option("--horizon", epf_horizon);
    e_pruned->add_option("--readable", epf_readable);
    add_common(e_pruned, est_pruned);

    EstimateCommon est_conv;
    double ec_p = 0.2, ec_offset = 0.0, ec_alpha = 1e-3;
    int ec_n = 2, ec_horizon = 30, ec_readable = 8;
    auto* e_conv = estimate->add_subcommand(
        "converse-test", "Distributional match of pruned intersections vs mu_{f_n(p)}");
    e_conv->add_option("--p", ec_p);
    e_conv->add_option("--n", ec_n);
    e_conv->add_option("--horizon", ec_horizon);
    e_conv->add_option("--readable", ec_readable);
    e_conv->add_option("--control-offset", ec_offset,
                       "Shift the intersection parameter to exercise the power check");
    e_conv->add_option("--significance", ec_alpha);
    add_common(e_conv, est_conv);

    // --------------------------------------------------------------------- dim
    auto* dim = app.add_subcommand("dim", "Member paths and compression-based dimension");
    dim->require_subcommand(1);

    double dp_p = 0.3;
    std::uint64_t dp_length = 100000, dp_seed = 0;
    std::string dp_policy = "leftmost";
    OutputOptions dp_out;
    auto* d_path = dim->add_subcommand("sample-path", "Walk a pruned random tree");
    d_path->add_option("--p", dp_p)->required();
    d_path->add_option("--length", dp_length)->required();
    d_path->add_option("--policy", dp_policy)->check(CLI::IsMember({"uniform", "leftmost"}));
    d_path->add_option("--seed", dp_seed)->required();
    add_output_flags(d_path, dp_out);

    std::string de_bits;
    OutputOptions de_out;
    auto* d_estimate = dim->add_subcommand("estimate", "LZ78 compression rate of a bit string");
    d_estimate->add_option("--bits", de_bits, "Binary string, or @file")->required();
    add_output_flags(d_estimate, de_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the usage message
        return code == 0 ? 0 : 1;
    }

    try {
        if (*decode) {
            std::string text = trim(expand_arg(decode_code));
            rcs::codec::DecodeOutcome outcome =
                decode_alphabet == "trit"
                    ? rcs::codec::decode_trit(rcs::codec::TritCode::parse(text), decode_depth)
                    : rcs::codec::decode_quad(rcs::codec::QuadCode::parse(text), decode_depth);
            if (decode_out.format == "json") {
                json j = outcome.tree.to_json();
                j["consumed"] = outcome.consumed;
                j["extinct"] = outcome.extinct;
                emit(decode_out, j.dump(2));
            } else {
                std::ostringstream out;
                out << "depth: " << outcome.tree.depth() << "\nconsumed: " << outcome.consumed
                    << "\nextinct: " << (outcome.extinct ? "true" : "false") << "\nnodes:";
                for (const auto& node : outcome.tree.nodes())
                    out << ' ' << (node.empty() ? "<root>" : node);
                emit(decode_out, out.str());
            }
            return 0;
        }
        if (*encode) {
            auto tree = rcs::codec::PrefixTree::from_json(json::parse(expand_arg(encode_tree)));
            emit(encode_out, rcs::codec::encode_trit(tree).str());
            return 0;
        }
        if (*intersect) {
            auto parts = split_lines_or_commas(expand_arg(intersect_codes));
            std::vector<rcs::codec::TritCode> codes;
            codes.reserve(parts.size());
            for (const auto& part : parts) codes.push_back(rcs::codec::TritCode::parse(part));
            auto quad = rcs::isect::intersect_many(codes, intersect_depth);
            auto outcome = rcs::codec::decode_quad(quad, intersect_depth);
            if (intersect_out.format == "json") {
                json j{{"quad_code", quad.str()},
                       {"empty", outcome.extinct},
                       {"tree", outcome.tree.to_json()}};
                emit(intersect_out, j.dump(2));
            } else {
                std::ostringstream out;
                out << quad.str() << '\n'
                    << (outcome.extinct ? "intersection empty" : "intersection non-empty");
                emit(intersect_out, out.str());
            }
            return 0;
        }
        if (*prune) {
            auto code = rcs::codec::QuadCode::parse(trim(expand_arg(prune_code_text)));
            auto pruned = rcs::gw::prune_code(code, prune_horizon, prune_readable);
            emit(prune_out, pruned ? pruned->str() : std::string("extinct"));
            return 0;
        }
        if (*formulas) {
            if (*f_fn) std::cout << format_value(rcs::isect::f_n(fp, fn_n)) << '\n';
            if (*f_fninv) std::cout << format_value(rcs::isect::f_n_inverse(fp, fn_n)) << '\n';
            if (*f_threshold) std::cout << format_value(rcs::isect::threshold(fn_n)) << '\n';
            if (*f_pair_possible)
                std::cout << (rcs::isect::pair_nonempty_possible(fp, fq, fr, fs)
                                  ? "non-empty intersection possible"
                                  : "intersection always empty")
                          << '\n';
            if (*f_pair_empty)
                std::cout << format_value(rcs::isect::pair_emptiness_prob(fp, fq, fr, fs)) << '\n';
            if (*f_nfold_empty)
                std::cout << format_value(rcs::isect::nfold_emptiness_prob(fp, fn_n)) << '\n';
            if (*f_degree) {
                auto deg = rcs::isect::degree_of_intersectability(fp);
                std::cout << deg.degree << "  (p in [" << format_value(deg.interval_low) << ", "
                          << format_value(deg.interval_high)
                          << (deg.interval_closed_right ? "]" : ")") << ")\n";
            }
            if (*f_dim_bound) {
                auto rep = rcs::dim::dim_bound_report(fp);
                std::cout << "gamma: " << format_value(rep.gamma) << "\ndegree: " << rep.degree
                          << "\nmember_bound: " << format_value(rep.member_bound) << '\n';
            }
            if (*f_gamma) std::cout << format_value(rcs::dim::gamma_to_p(fgamma)) << '\n';
            if (*f_member) std::cout << format_value(rcs::dim::member_dim_bound(fdegree)) << '\n';
            if (*f_mindeg) {
                auto md = rcs::dim::min_degree_for_dim(fdim);
                std::cout << md.k
                          << (md.reciprocal_integer_caveat
                                  ? "  (s = 1/n: lower-bound direction weakens by one)"
                                  : "")
                          << '\n';
            }
            if (*f_survival) {
                auto law = fa2 >= 0 ? rcs::measures::OffspringLaw(fa0, fa1, fa2, fa3)
                                    : rcs::measures::gw_offspring(
                                          rcs::measures::SurvivalPair(fb0, fb1));
                auto curve = rcs::gw::survival_recurrence(law, fn_n);
                std::cout << "r_" << fn_n << ": " << format_value(curve.at(fn_n))
                          << "\nlimit: " << format_value(rcs::gw::survival_limit(law)) << '\n';
            }
            if (*f_induced) {
                auto ip = rcs::isect::induced_pair_params(rcs::measures::BernoulliPair(fp, fq),
                                                          rcs::measures::BernoulliPair(fr, fs));
                std::cout << "induced: <" << format_value(ip.induced.p) << ", "
                          << format_value(ip.induced.q) << ">\nsurvival: ("
                          << format_value(ip.survival.beta0) << ", "
                          << format_value(ip.survival.beta1) << ")\n";
            }
            return 0;
        }
        if (*estimate) {
            rcs::mc::ExperimentReport report;
            auto started = std::chrono::steady_clock::now();
            if (*e_survival) {
                auto law = es_p >= 0
                               ? rcs::isect::nfold_symbol_law(es_p, es_n)
                               : rcs::measures::gw_offspring(
                                     rcs::measures::SurvivalPair(es_b0, es_b1));
                auto rec = rcs::mc::estimate_survival(law, es_depth, est_surv.trials,
                                                      est_surv.seed, est_surv.tolerance,
                                                      {est_surv.threads});
                report = wrap_record(rec, "estimate_survival",
                                     {{"law", {law.a0, law.a1, law.a2, law.a3}},
                                      {"depth", es_depth},
                                      {"trials", est_surv.trials}});
                report.runtime_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                        .count();
                emit(est_surv.out, render_report(report, est_surv.out));
            } else if (*e_pair) {
                auto rec = rcs::mc::estimate_pair_emptiness(
                    rcs::measures::BernoulliPair(ep_p, ep_q),
                    rcs::measures::BernoulliPair(ep_r, ep_s), ep_depth, est_pair.trials,
                    est_pair.seed, est_pair.tolerance, {est_pair.threads});
                report = wrap_record(rec, "estimate_pair_emptiness",
                                     {{"p", ep_p},
                                      {"q", ep_q},
                                      {"r", ep_r},
                                      {"s", ep_s},
                                      {"depth", ep_depth},
                                      {"trials", est_pair.trials}});
                report.runtime_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                        .count();
                emit(est_pair.out, render_report(report, est_pair.out));
            } else if (*e_nfold) {
                auto mode = en_mode == "tree" ? rcs::mc::NfoldMode::Tree
                                              : rcs::mc::NfoldMode::Process;
                auto rec = rcs::mc::estimate_nfold_emptiness(en_p, en_n, en_depth,
                                                             est_nfold.trials, est_nfold.seed,
                                                             mode, est_nfold.tolerance,
                                                             {est_nfold.threads});
                report = wrap_record(rec, "estimate_nfold_emptiness",
                                     {{"p", en_p},
                                      {"n", en_n},
                                      {"depth", en_depth},
                                      {"mode", en_mode},
                                      {"trials", est_nfold.trials}});
                report.runtime_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                        .count();
                emit(est_nfold.out, render_report(report, est_nfold.out));
            } else if (*e_pruned) {
                auto law = epf_p >= 0
                               ? rcs::isect::nfold_symbol_law(epf_p, epf_n)
                               : rcs::measures::gw_offspring(
                                     rcs::measures::SurvivalPair(epf_b0, epf_b1));
                double tol = est_pruned.tolerance < 0 ? 0.01 : est_pruned.tolerance;
                report = rcs::mc::pruned_frequency_experiment(law, epf_horizon, epf_readable,
                                                              est_pruned.trials, est_pruned.seed,
                                                              tol, {est_pruned.threads});
                emit(est_pruned.out, render_report(report, est_pruned.out));
            } else if (*e_conv) {
                report = rcs::mc::converse_distribution_test(
                    ec_p, ec_n, ec_horizon, ec_readable, est_conv.trials, est_conv.seed,
                    ec_offset, ec_alpha, {est_conv.threads});
                emit(est_conv.out, render_report(report, est_conv.out));
            }
            return report_exit_code(report);
        }
        if (*dim) {
            if (*d_path) {
                auto policy = dp_policy == "uniform" ? rcs::dim::PathPolicy::Uniform
                                                     : rcs::dim::PathPolicy::Leftmost;
                emit(dp_out, rcs::dim::sample_member_path(dp_p, dp_length, policy,
                                                          {dp_seed, 0}));
                return 0;
            }
            if (*d_estimate) {
                auto estimate = rcs::dim::estimate_dim(trim(expand_arg(de_bits)));
                if (de_out.format == "json") {
                    json j{{"sequence_length", estimate.sequence_length},
                           {"code_length", estimate.code_length},
                           {"phrase_count", estimate.phrase_count},
                           {"rate", estimate.rate}};
                    emit(de_out, j.dump(2));
                } else {
                    std::ostringstream out;
                    out << "length: " << estimate.sequence_length
                        << "\ncode_length: " << estimate.code_length
                        << "\nphrases: " << estimate.phrase_count << "\nrate: " << estimate.rate;
                    emit(de_out, out.str());
                }
                return 0;
            }
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
