// Copyright 2026 The cvmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "cvmap/bell.h"
#include "cvmap/bloch.h"
#include "cvmap/cv_states.h"
#include "cvmap/embedding.h"
#include "cvmap/su_algebra.h"

namespace cvmap::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson, kText };

struct RunConfig {
    int n = 2;
    std::optional<int> N;
    double r = 0.0;
    bool r_given = false;
    double r_min = 0.0;
    double r_max = 6.0;
    int steps = 601;
    int trunc = kDefaultTruncation;
    int jobs = 1;
    int max_n = 6;
    int max_N = 24;
    int blocks = 16;
    std::string mixture;
    std::string out_path;
    std::string format;
    bool corrupt = false;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Writes `text` to the configured file, or to `out` when no path is set.
void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open output file '" + cfg.out_path + "'");
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError("failed writing output file '" + cfg.out_path + "'");
    }
}

Format parse_format(const std::string &text, Format fallback) {
    if (text.empty()) {
        return fallback;
    }
    if (text == "csv") {
        return Format::kCsv;
    }
    if (text == "json") {
        return Format::kJson;
    }
    throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

Json complex_pair(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json dense_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(complex_pair(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json sparse_json(const SparseMatrix &m) {
    Json entries = Json::array();
    for (const auto &e : m.entries()) {
        entries.push_back(Json::array({e.row, e.col, complex_pair(e.value)}));
    }
    return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

Json structure_json(const StructureConstants &f) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < f.count(); ++j) {
        for (std::size_t k = 0; k < f.count(); ++k) {
            for (std::size_t l = 0; l < f.count(); ++l) {
                if (std::abs(f(j, k, l)) > kAlgebraTol) {
                    entries.push_back(Json::array({j + 1, k + 1, l + 1, f(j, k, l)}));
                }
            }
        }
    }
    return Json{{"index_base", 1}, {"nonzero", std::move(entries)}};
}

const char *kOrderingText =
    "u_jk for 1<=j<k<=n in lexicographic (j,k) order, then v_jk in the same order, then w_1..w_{n-1}";

// ---------------------------------------------------------------------------

int cmd_gens(const RunConfig &cfg, std::ostream &out) {
    if (cfg.n < 2) {
        throw UsageError("--n must be >= 2");
    }
    if (cfg.N && *cfg.N < cfg.n) {
        throw UsageError("--N must be >= --n");
    }
    if (parse_format(cfg.format, Format::kJson) != Format::kJson) {
        throw UsageError("gens supports --format json only");
    }
    const GeneratorSet gens = build_generators(cfg.n);
    Json labels = Json::array();
    for (const auto &label : gens.labels()) {
        labels.push_back(label.to_string());
    }
    const int N = cfg.N.value_or(cfg.n);
    Json doc;
    doc["metadata"] = Json{{"n", cfg.n}, {"N", N}, {"blocks", N / cfg.n}, {"ordering", kOrderingText},
                           {"labels", labels}, {"representation", cfg.N ? "sparse" : "dense"}};
    Json matrices = Json::array();
    if (cfg.N) {
        const EmbeddedGeneratorSet eg = build_embedded(*cfg.N, cfg.n);
        doc["metadata"]["unused_tail"] = eg.unused_tail();
        for (const auto &g : eg.generators()) {
            matrices.push_back(sparse_json(g));
        }
    } else {
        for (const auto &g : gens.generators()) {
            matrices.push_back(dense_json(g));
        }
    }
    doc["generators"] = std::move(matrices);
    doc["structure_constants"] = structure_json(gens.f());
    emit(cfg, doc.dump(2) + "\n", out);
    return kOk;
}

// ---------------------------------------------------------------------------

struct CheckRow {
    std::string name;
    std::string params;
    double residual;
    double tolerance;
};

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> e(dim * dim);
    for (auto &v : e) {
        v = Complex(gauss(rng), gauss(rng));
    }
    const ComplexMatrix a(dim, std::move(e));
    return a + a.adjoint();
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    if (cfg.max_n < 2 || cfg.max_N < 2) {
        throw UsageError("--max-n and --max-N must be >= 2");
    }
    std::vector<CheckRow> rows;
    for (int n = 2; n <= cfg.max_n; ++n) {
        GeneratorSet gens = build_generators(n);
        if (cfg.corrupt && n == 2) {
            // Test hook: break the normalization of one generator.
            std::vector<ComplexMatrix> broken(gens.generators().begin(), gens.generators().end());
            broken[0] = Complex(1.01) * broken[0];
            gens = GeneratorSet(n, std::move(broken));
        }
        const std::string p = "n=" + std::to_string(n);
        rows.push_back({"generator trace relations", p, verify_trace_relations(gens), kAlgebraTol});
        rows.push_back({"su(n) closure", p, verify_algebra(gens), kAlgebraTol});
        rows.push_back({"f antisymmetry", p, gens.f().antisymmetry_residual(), kAlgebraTol});
    }
    for (int n = 2; n <= std::min(cfg.max_n, cfg.max_N); ++n) {
        double trace_worst = 0;
        double algebra_worst = 0;
        for (int N = n; N <= cfg.max_N; ++N) {
            const auto eg = build_embedded(N, n);
            trace_worst = std::max(trace_worst, verify_embedded_trace_relations(eg));
            algebra_worst = std::max(algebra_worst, verify_embedded(eg));
        }
        const std::string p = "n=" + std::to_string(n) + " N=" + std::to_string(n) + ".." + std::to_string(cfg.max_N);
        rows.push_back({"embedded trace relations", p, trace_worst, kAlgebraTol});
        rows.push_back({"embedded closure", p, algebra_worst, kAlgebraTol});
    }
    std::mt19937_64 rng(20260101);
    for (int n = 2; n <= std::min(cfg.max_n, 3); ++n) {
        const GeneratorSet gens = build_generators(n);
        for (int parties = 1; parties <= 2; ++parties) {
            const std::size_t dim = parties == 1 ? n : n * n;
            double worst = 0;
            for (int trial = 0; trial < 5; ++trial) {
                const ComplexMatrix h = random_hermitian(dim, rng);
                const auto t = decompose(h, gens, parties, TensorKind::kObservable);
                worst = std::max(worst, max_abs_diff(reconstruct(t, gens), h));
            }
            rows.push_back({"bloch round trip", "n=" + std::to_string(n) + " L=" + std::to_string(parties), worst,
                            kAlgebraTol});
        }
    }

    bool ok = true;
    std::ostringstream report;
    char line[256];
    std::snprintf(line, sizeof line, "%-26s %-18s %12s %10s  %s\n", "check", "parameters", "residual", "tolerance",
                  "status");
    report << line;
    for (const auto &row : rows) {
        const bool pass = row.residual < row.tolerance;
        ok = ok && pass;
        std::snprintf(line, sizeof line, "%-26s %-18s %12s %10s  %s\n", row.name.c_str(), row.params.c_str(),
                      sci(row.residual).c_str(), sci(row.tolerance).c_str(), pass ? "PASS" : "FAIL");
        report << line;
    }
    report << (ok ? "all invariants hold\n" : "invariant failure\n");
    emit(cfg, report.str(), out);
    return ok ? kOk : kInvariantFailure;
}

// ---------------------------------------------------------------------------

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (!(cfg.r_min >= 0.0 && cfg.r_min < cfg.r_max)) {
        throw UsageError("require 0 <= --rmin < --rmax");
    }
    if (cfg.steps < 2) {
        throw UsageError("--steps must be >= 2");
    }
    if (cfg.jobs < 1) {
        throw UsageError("--jobs must be >= 1");
    }
    const Format format = parse_format(cfg.format, Format::kCsv);
    const BellCurve curve = bell_curve(cfg.r_min, cfg.r_max, cfg.steps, cfg.jobs);
    emit(cfg, format == Format::kCsv ? format_curve_csv(curve) : format_curve_json(curve), out);

    const MaxViolation best = find_max_violation();
    const double threshold = violation_threshold();
    std::ostream &summary = cfg.out_path.empty() ? err : out;
    summary << "max violation: r* = " << fixed6(best.r) << ", B* = " << fixed6(best.B) << "\n"
            << "local bound B = 2 crossed at r = " << fixed6(threshold) << "\n"
            << "points: " << curve.points.size() << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------

int cmd_map_nopa(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (!cfg.r_given || cfg.r < 0.0) {
        throw UsageError("--r must be given and >= 0");
    }
    if (cfg.n < 2) {
        throw UsageError("--n must be >= 2");
    }
    if (cfg.trunc < cfg.n) {
        throw UsageError("--trunc must be >= --n");
    }
    const Format format = parse_format(cfg.format, Format::kText);
    if (format == Format::kCsv) {
        throw UsageError("map-nopa supports text (default) or --format json");
    }

    const FockKet state = nopa(cfg.r, cfg.trunc);
    const InducedState induced = induced_qudit_state(state, cfg.n);
    const ComplexVector top = dominant_eigenvector(induced.rho);
    const auto dim = static_cast<std::size_t>(cfg.n);
    const std::vector<double> schmidt = schmidt_coefficients(top, dim, dim);
    const BlockProjection projection = project_block(state, cfg.n, 0, 0);
    // <psi| rho |psi> for the block-projection ket.
    Complex overlap = 0;
    for (std::size_t r = 0; r < dim * dim; ++r) {
        for (std::size_t c = 0; c < dim * dim; ++c) {
            overlap += std::conj(projection.ket[r]) * induced.rho(r, c) * projection.ket[c];
        }
    }
    const double t = std::tanh(cfg.r);
    std::vector<double> closed(dim);
    double norm2 = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        closed[k] = std::pow(t, static_cast<double>(k));
        norm2 += closed[k] * closed[k];
    }
    for (auto &c : closed) {
        c /= std::sqrt(norm2);
    }
    std::optional<double> bell;
    if (cfg.n == 3) {
        bell = fu_bell_max(SchmidtTriple(schmidt[0], schmidt[1], schmidt[2]));
    }
    if (induced.warning) {
        err << "warning: " << *induced.warning << "\n";
    }

    if (format == Format::kJson) {
        Json doc{{"r", cfg.r},
                 {"n", cfg.n},
                 {"trunc", cfg.trunc},
                 {"schmidt_coefficients", schmidt},
                 {"closed_form_coefficients", closed},
                 {"fidelity_with_block_projection", overlap.real()},
                 {"tail_mass", state.tail_mass()},
                 {"outside_weight", induced.outside_weight},
                 {"min_eigenvalue", induced.min_eigenvalue}};
        doc["bell_value"] = bell ? Json(*bell) : Json(nullptr);
        emit(cfg, doc.dump(2) + "\n", out);
        return kOk;
    }
    std::ostringstream report;
    auto list = [](const std::vector<double> &v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) {
            s += (k ? ", " : "") + fixed6(v[k]);
        }
        return "(" + s + ")";
    };
    report << "NOPA r = " << fixed6(cfg.r) << " mapped onto two qudits of dimension " << cfg.n << " (trunc "
           << cfg.trunc << ")\n"
           << "schmidt coefficients:           " << list(schmidt) << "\n"
           << "closed form tanh(r)^k / norm:   " << list(closed) << "\n"
           << "fidelity with block projection: " << fixed6(overlap.real()) << "\n"
           << "tail mass:                      " << sci(state.tail_mass()) << "\n"
           << "weight outside used subspace:   " << sci(induced.outside_weight) << "\n"
           << "min eigenvalue:                 " << sci(induced.min_eigenvalue) << "\n";
    if (bell) {
        report << "qutrit Bell value B:            " << fixed6(*bell) << (*bell > kLocalBound ? " (violates B <= 2)" : "")
               << "\n";
    }
    emit(cfg, report.str(), out);
    return kOk;
}

// ---------------------------------------------------------------------------

double parse_geometric(const std::string &text) {
    const std::string prefix = "geometric:";
    if (text.rfind(prefix, 0) != 0) {
        throw UsageError("--mixture must look like geometric:<lambda>");
    }
    try {
        std::size_t used = 0;
        const std::string rest = text.substr(prefix.size());
        const double lambda = std::stod(rest, &used);
        if (used != rest.size() || !(lambda >= 0.0 && lambda < 1.0)) {
            throw UsageError("");
        }
        return lambda;
    } catch (const std::exception &) {
        throw UsageError("--mixture geometric:<lambda> needs 0 <= lambda < 1");
    }
}

int cmd_chsh(const RunConfig &cfg, std::ostream &out) {
    if (cfg.r_given == !cfg.mixture.empty()) {
        throw UsageError("give exactly one of --r or --mixture");
    }
    if (cfg.trunc < 2) {
        throw UsageError("--trunc must be >= 2");
    }
    const Format format = parse_format(cfg.format, Format::kText);
    if (format == Format::kCsv) {
        throw UsageError("chsh supports text (default) or --format json");
    }
    const ChshSettings textbook = ChshSettings::textbook();
    double value = 0;
    Correlation corr{};
    std::string description;
    std::optional<double> tail;
    if (cfg.r_given) {
        if (cfg.r < 0.0) {
            throw UsageError("--r must be >= 0");
        }
        const FockKet state = nopa(cfg.r, cfg.trunc);
        value = chsh_cv_expectation(state, textbook, cfg.trunc);
        corr = pseudospin_correlation(state, cfg.trunc);
        description = "NOPA r = " + fixed6(cfg.r);
        tail = state.tail_mass();
    } else {
        const double lambda = parse_geometric(cfg.mixture);
        if (cfg.blocks < 1 || 2 * cfg.blocks > cfg.trunc) {
            throw UsageError("--blocks must satisfy 1 <= blocks <= trunc / 2");
        }
        const BlockMixture w = block_mixture_w(2, geometric_weights(lambda, cfg.blocks), cfg.trunc);
        value = chsh_cv_expectation(w, textbook, cfg.trunc);
        corr = pseudospin_correlation(w, cfg.trunc);
        description = "block mixture geometric lambda = " + fixed6(lambda) + ", " + std::to_string(cfg.blocks) +
                      " blocks (deficit " + sci(w.deficit()) + ")";
    }
    const ChshOptimum refined = refine_planar(corr);
    const double reference = 2.0 * std::numbers::sqrt2;

    if (format == Format::kJson) {
        Json doc{{"state", description},
                 {"trunc", cfg.trunc},
                 {"textbook_value", value},
                 {"refined_value", refined.value},
                 {"refined_settings",
                  {{"a", refined.settings.a},
                   {"a_prime", refined.settings.a_prime},
                   {"b", refined.settings.b},
                   {"b_prime", refined.settings.b_prime}}},
                 {"quantum_maximum", reference},
                 {"local_bound", kLocalBound}};
        doc["tail_mass"] = tail ? Json(*tail) : Json(nullptr);
        emit(cfg, doc.dump(2) + "\n", out);
        return kOk;
    }
    std::ostringstream report;
    report << "state: " << description << " (trunc " << cfg.trunc << ")\n";
    if (tail) {
        report << "tail mass:           " << sci(*tail) << "\n";
    }
    report << "CHSH textbook:       " << fixed6(value) << "\n"
           << "CHSH planar refined: " << fixed6(refined.value) << "\n"
           << "2 sqrt 2 reference:  " << fixed6(reference) << "\n"
           << "local bound:         " << fixed6(kLocalBound) << "\n";
    emit(cfg, report.str(), out);
    return kOk;
}

}  // namespace

std::string format_curve_csv(const BellCurve &curve) {
    std::string text = "r,B\n";
    char line[96];
    for (const auto &p : curve.points) {
        std::snprintf(line, sizeof line, "%.6f,%.6f\n", p.r, p.B);
        text += line;
    }
    return text;
}

std::string format_curve_json(const BellCurve &curve) {
    Json r = Json::array();
    Json b = Json::array();
    for (const auto &p : curve.points) {
        r.push_back(p.r);
        b.push_back(p.B);
    }
    Json doc{{"metadata",
              {{"r_min", curve.r_min}, {"r_max", curve.r_max}, {"steps", curve.steps}, {"formula", curve.formula}}},
             {"r", std::move(r)},
             {"B", std::move(b)}};
    return doc.dump(2) + "\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"cvmap: continuous-variable to qudit mapping tools", "cvmap"};
    app.require_subcommand(1);

    auto *gens = app.add_subcommand("gens", "Dump su(n) generators (optionally embedded in dimension N) as JSON");
    gens->add_option("--n", cfg.n, "Qudit dimension n")->required();
    gens->add_option("--N", cfg.N, "Ambient dimension N >= n (embedded generators, sparse)");
    gens->add_option("--format", cfg.format, "json");
    gens->add_option("--out", cfg.out_path, "Output file (default: standard output)");

    auto *verify = app.add_subcommand("verify", "Check algebra, trace and round-trip invariants");
    verify->add_option("--max-n", cfg.max_n, "Largest qudit dimension")->capture_default_str();
    verify->add_option("--max-N", cfg.max_N, "Largest ambient dimension")->capture_default_str();
    verify->add_option("--out", cfg.out_path, "Report file (default: standard output)");
    verify->add_flag("--corrupt", cfg.corrupt, "Corrupt one generator (test hook)")->group("");

    auto *sweep = app.add_subcommand("sweep", "Qutrit Bell value B(r) for the NOPA state over a grid of r");
    sweep->add_option("--rmin", cfg.r_min, "Smallest r")->capture_default_str();
    sweep->add_option("--rmax", cfg.r_max, "Largest r")->capture_default_str();
    sweep->add_option("--steps", cfg.steps, "Grid points")->capture_default_str();
    sweep->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sweep->add_option("--format", cfg.format, "csv (default) or json");
    sweep->add_option("--out", cfg.out_path, "Data file (default: standard output)");

    auto *map = app.add_subcommand("map-nopa", "Map the NOPA state onto two qudits");
    map->add_option("--r", cfg.r, "Squeezing parameter");
    map->add_option("--n", cfg.n, "Qudit dimension (default 3)");
    map->add_option("--trunc", cfg.trunc, "Fock truncation per mode")->capture_default_str();
    map->add_option("--format", cfg.format, "text (default) or json");
    map->add_option("--out", cfg.out_path, "Report file (default: standard output)");

    auto *chsh = app.add_subcommand("chsh", "CHSH value of lifted pseudospin operators");
    chsh->add_option("--r", cfg.r, "NOPA squeezing parameter");
    chsh->add_option("--mixture", cfg.mixture, "Block mixture, geometric:<lambda>");
    chsh->add_option("--blocks", cfg.blocks, "Blocks in the mixture")->capture_default_str();
    chsh->add_option("--trunc", cfg.trunc, "Fock truncation per mode")->capture_default_str();
    chsh->add_option("--format", cfg.format, "text (default) or json");
    chsh->add_option("--out", cfg.out_path, "Report file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }
    cfg.r_given = map->count("--r") > 0 || chsh->count("--r") > 0;

    try {
        if (gens->parsed()) {
            return cmd_gens(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(cfg, out, err);
        }
        if (map->parsed()) {
            if (map->count("--n") == 0) {
                cfg.n = 3;
            }
            return cmd_map_nopa(cfg, out, err);
        }
        return cmd_chsh(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvalidArgument &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInvariantFailure;
    }
}

}  // namespace cvmap::cli
