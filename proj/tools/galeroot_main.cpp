// galeroot: exclusion regions for roots of polynomials with nonnegative
// coefficients, computed through Gale dual matrices and tridiagonal
// determinants, plus the empirical studies that go with them.
//
// Subcommands:
//   curves      zero contours of the determinants D_{j,k}
//   region      excluded / not-excluded fields (optionally constrained)
//   roots       root scatters of random nonnegative polynomials
//   barycenter  |beta(z)| contour maps with optional root overlays
//   verify      the verification suites (exit 1 on any failure)

#include <CLI11.hpp>
#include <json.hpp>

#include <galeroot/determinant.hpp>
#include <galeroot/gale_dual.hpp>
#include <galeroot/manifest.hpp>
#include <galeroot/rand_study.hpp>
#include <galeroot/region_grid.hpp>
#include <galeroot/root_locus.hpp>
#include <galeroot/verify.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace galeroot;

namespace {

struct ConstraintSpec {
    std::string text;  // as given on the command line
    enum class Kind { None, EhrhartS0, ChromaticBinomial, ChromaticAltPower, Custom } kind =
        Kind::None;
    int chi = 0;
    Rational eps = Rational(1, 2);
    int kappa = 0;
    int m = 0;
    LinearConstraint custom;
};

ConstraintSpec parse_constraint(const std::string& text, int d) {
    ConstraintSpec spec;
    spec.text = text;
    if (text.empty()) return spec;
    if (text == "ehrhart-s0") {
        spec.kind = ConstraintSpec::Kind::EhrhartS0;
        return spec;
    }
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::vector<std::string> parts;
    for (std::size_t start = 0; start <= args.size();) {
        auto comma = args.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(args.substr(start));
            break;
        }
        parts.push_back(args.substr(start, comma - start));
        start = comma + 1;
    }
    if (head == "chromatic-binomial") {
        if (parts.size() != 2) throw CLI::ValidationError("expected chromatic-binomial:<chi>,<eps>");
        spec.kind = ConstraintSpec::Kind::ChromaticBinomial;
        spec.chi = std::stoi(parts[0]);
        spec.eps = parse_rational(parts[1]);
        return spec;
    }
    if (head == "chromatic-altpower") {
        if (parts.size() != 2) throw CLI::ValidationError("expected chromatic-altpower:<kappa>,<m>");
        spec.kind = ConstraintSpec::Kind::ChromaticAltPower;
        spec.kappa = std::stoi(parts[0]);
        spec.m = std::stoi(parts[1]);
        return spec;
    }
    if (head == "custom") {
        if (parts.size() < 3) throw CLI::ValidationError("expected custom:<lambda csv>,<le|lt|eq>");
        spec.kind = ConstraintSpec::Kind::Custom;
        std::string kind_token = parts.back();
        parts.pop_back();
        if (static_cast<int>(parts.size()) != d + 1)
            throw CLI::ValidationError("custom constraint needs d+1 lambda entries");
        for (const auto& p : parts) spec.custom.lambda.push_back(parse_rational(p));
        if (kind_token == "le") spec.custom.kind = LinearConstraint::Kind::InequalityLE;
        else if (kind_token == "lt") spec.custom.kind = LinearConstraint::Kind::InequalityLT;
        else if (kind_token == "eq") spec.custom.kind = LinearConstraint::Kind::Equation;
        else throw CLI::ValidationError("constraint kind must be le, lt or eq");
        return spec;
    }
    throw CLI::ValidationError("unknown constraint: " + text);
}

std::optional<ExtendedDual> build_constrained_dual(const BasisContext& ctx,
                                                   const ConstraintSpec& spec) {
    switch (spec.kind) {
        case ConstraintSpec::Kind::None: return std::nullopt;
        case ConstraintSpec::Kind::EhrhartS0:
            return extend_with_inequality(build_gale_dual(ctx), ehrhart_s0_constraint(ctx.d));
        case ConstraintSpec::Kind::ChromaticBinomial:
            return chromatic_equation_dual(ctx, spec.chi, spec.eps);
        case ConstraintSpec::Kind::ChromaticAltPower:
            return alt_power_equation_dual(ctx, spec.kappa, spec.m);
        case ConstraintSpec::Kind::Custom:
            if (spec.custom.is_inequality())
                return extend_with_inequality(build_gale_dual(ctx), spec.custom);
            return generic_equation_dual(ctx, {spec.custom});
    }
    return std::nullopt;
}

struct CommonArgs {
    std::string basis = "binomial";
    int d = 6;
    std::string window_text;
    int grid = 800;
    std::uint64_t seed = 1;
    int count = 1000;
    double bound = 1.0;
    std::string constraint_text;
    std::string out = "out";
    std::string format = "both";
};

Window resolve_window(const CommonArgs& args, int j = -1, int k = -1) {
    if (args.window_text.empty()) return default_window(args.basis, args.d);
    if (args.window_text == "auto") {
        if (j < 0) return auto_window(args.d, 0, args.d);
        return auto_window(args.d, j, k);
    }
    double v[4];
    std::string rest = args.window_text;
    for (int t = 0; t < 4; ++t) {
        auto comma = rest.find(',');
        std::string token = comma == std::string::npos ? rest : rest.substr(0, comma);
        v[t] = std::stod(token);
        if (comma == std::string::npos && t != 3)
            throw CLI::ValidationError("window must be x_min,x_max,y_min,y_max or 'auto'");
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    }
    return {v[0], v[1], v[2], v[3]};
}

RunManifest make_manifest(const std::string& command, const CommonArgs& args, const Window& window,
                          int nx, int ny, const std::string& field) {
    RunManifest m;
    m.command = command;
    m.basis = args.basis;
    m.d = args.d;
    m.seed = args.seed;
    m.window = window;
    m.nx = nx;
    m.ny = ny;
    m.count = args.count;
    m.bound = args.bound;
    m.constraint = args.constraint_text;
    m.field = field;
    return m;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit_grid(const CommonArgs& args, const RegionGrid& grid, const RunManifest& manifest,
               const std::string& stem, const std::vector<Polyline>& contours,
               const std::vector<SvgMarker>& markers = {}) {
    write_text(stem + ".manifest.json", manifest.to_json() + "\n");
    if (args.format == "csv" || args.format == "both")
        write_text(stem + ".csv", grid_to_csv(grid, manifest));
    if (args.format == "svg" || args.format == "both")
        write_text(stem + ".svg", svg_document(grid.window, contours, markers));
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& texts, int d) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& text : texts) {
        if (text == "all") {
            for (int j = 0; j <= d - 1; ++j)
                for (int k = j + 1; k <= d; ++k) pairs.emplace_back(j, k);
            continue;
        }
        auto comma = text.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("pair must be j,k or 'all'");
        pairs.emplace_back(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
    }
    if (pairs.empty()) pairs.emplace_back(0, d);
    return pairs;
}

// the excluded field treats the real axis through the real-root locus
double excluded_field_value(const BasisContext& ctx, const std::vector<RealInterval>& locus,
                            const std::optional<ExtendedDual>& dual, double x, double y) {
    if (std::abs(y) <= 1e-9) {
        for (const auto& iv : locus)
            if (iv.contains(x)) return 0.0;
        return 1.0;
    }
    if (dual) return excluded_with_constraints(*dual, {x, y}) ? 1.0 : 0.0;
    return excluded(ctx, {x, y}) ? 1.0 : 0.0;
}

int cmd_curves(const CommonArgs& args, const std::vector<std::string>& pair_texts) {
    BasisContext ctx(basis_from_name(args.basis), args.d);
    auto pairs = parse_pairs(pair_texts, args.d);
    std::vector<Polyline> all_contours;
    for (auto [j, k] : pairs) {
        Window window = resolve_window(args, j, k);
        auto grid = sample_grid(window, args.grid, args.grid, FieldKind::DValue,
                                [&](double x, double y) { return d_eval(ctx, j, k, {x, y}); });
        auto contours = extract_contours(grid);
        all_contours.insert(all_contours.end(), contours.begin(), contours.end());
        auto manifest = make_manifest("curves", args, window, args.grid, args.grid,
                                      field_kind_name(FieldKind::DValue));
        std::string stem = args.out + "_" + std::to_string(j) + "_" + std::to_string(k);
        write_text(stem + ".manifest.json", manifest.to_json() + "\n");
        if (args.format == "csv" || args.format == "both")
            write_text(stem + ".csv", grid_to_csv(grid, manifest));
    }
    if (args.format == "svg" || args.format == "both") {
        Window window = resolve_window(args, pairs[0].first, pairs[0].second);
        write_text(args.out + ".svg", svg_document(window, all_contours, {}));
        auto manifest = make_manifest("curves", args, window, args.grid, args.grid,
                                      field_kind_name(FieldKind::DValue));
        write_text(args.out + ".manifest.json", manifest.to_json() + "\n");
    }
    return 0;
}

int cmd_region(const CommonArgs& args, bool layers) {
    BasisContext ctx(basis_from_name(args.basis), args.d);
    auto constraint = parse_constraint(args.constraint_text, args.d);
    auto dual = build_constrained_dual(ctx, constraint);
    auto locus = real_root_locus(ctx);
    Window window = resolve_window(args);

    FieldKind kind = dual ? FieldKind::ExcludedConstrained : FieldKind::Excluded;
    auto grid = sample_grid(window, args.grid, args.grid, kind, [&](double x, double y) {
        return excluded_field_value(ctx, locus, dual, x, y);
    });
    auto manifest = make_manifest("region", args, window, args.grid, args.grid,
                                  field_kind_name(kind));
    emit_grid(args, grid, manifest, args.out, extract_contours(grid, 0.5));

    if (!layers) return 0;
    if (constraint.kind == ConstraintSpec::Kind::None) {
        // one boolean layer per triple S_{i,j,k}
        for (int i = 0; i <= args.d - 2; ++i)
            for (int j = i + 1; j <= args.d - 1; ++j)
                for (int k = j + 1; k <= args.d; ++k) {
                    auto layer =
                        sample_grid(window, args.grid, args.grid, FieldKind::Excluded,
                                    [&](double x, double y) {
                                        if (std::abs(y) <= 1e-9) return 0.0;
                                        return in_S_ijk(ctx, i, j, k, {x, y}) ? 1.0 : 0.0;
                                    });
                    std::string stem = args.out + "_S_" + std::to_string(i) + "_" +
                                       std::to_string(j) + "_" + std::to_string(k);
                    auto lm = make_manifest("region", args, window, args.grid, args.grid,
                                            "S_" + std::to_string(i) + std::to_string(j) +
                                                std::to_string(k));
                    emit_grid(args, layer, lm, stem, extract_contours(layer, 0.5));
                }
    } else if (constraint.kind == ConstraintSpec::Kind::EhrhartS0) {
        // zero loci of det W~_{0,k,d} for k = 1..d-1
        auto lambda = ehrhart_s0_constraint(args.d).lambda;
        for (int k = 1; k <= args.d - 1; ++k) {
            auto layer = sample_grid(window, args.grid, args.grid, FieldKind::CustomDet,
                                     [&](double x, double y) {
                                         return det_extended(ctx, 0, k, args.d, lambda, {x, y});
                                     });
            std::string stem = args.out + "_W_0_" + std::to_string(k) + "_" +
                               std::to_string(args.d);
            auto lm = make_manifest("region", args, window, args.grid, args.grid,
                                    field_kind_name(FieldKind::CustomDet));
            emit_grid(args, layer, lm, stem, extract_contours(layer));
        }
    } else if (constraint.kind == ConstraintSpec::Kind::ChromaticBinomial) {
        const int e = args.d - constraint.chi;
        for (int i = 0; i <= e - 2; ++i)
            for (int j = i + 1; j <= e - 1; ++j)
                for (int k = j + 1; k <= e; ++k) {
                    auto layer = sample_grid(
                        window, args.grid, args.grid, FieldKind::CustomDet,
                        [&](double x, double y) {
                            return chromatic_det(ctx, constraint.chi, constraint.eps, i, j, k,
                                                 {x, y});
                        });
                    std::string stem = args.out + "_K_" + std::to_string(i) + "_" +
                                       std::to_string(j) + "_" + std::to_string(k);
                    auto lm = make_manifest("region", args, window, args.grid, args.grid,
                                            field_kind_name(FieldKind::CustomDet));
                    emit_grid(args, layer, lm, stem, extract_contours(layer));
                }
    } else {
        std::cerr << "note: no layer mode for this constraint; emitted the boolean field only\n";
    }
    return 0;
}

int cmd_roots(const CommonArgs& args, bool overlay) {
    BasisContext ctx(basis_from_name(args.basis), args.d);
    auto constraint = parse_constraint(args.constraint_text, args.d);
    if (args.count < 1) throw CLI::ValidationError("--count must be >= 1");

    SampleSpec spec{ctx};
    spec.bound = args.bound;
    spec.count = args.count;
    spec.seed = args.seed;
    switch (constraint.kind) {
        case ConstraintSpec::Kind::None: break;
        case ConstraintSpec::Kind::EhrhartS0:
            spec.constraint = ehrhart_s0_constraint(args.d);
            break;
        case ConstraintSpec::Kind::Custom:
            spec.constraint = constraint.custom;
            break;
        case ConstraintSpec::Kind::ChromaticBinomial: {
            if (constraint.eps == 1)
                throw CLI::ValidationError("eps = 1 forces the zero polynomial when sampling");
            LinearConstraint eq;
            eq.kind = LinearConstraint::Kind::Equation;
            eq.lambda.assign(args.d + 1, Rational(1));
            for (int i = 0; i < constraint.chi; ++i) eq.lambda[i] = 0;
            eq.lambda[args.d] = Rational(1) - Rational(1) / constraint.eps;
            spec.constraint = eq;
            spec.zero_prefix = constraint.chi;
            break;
        }
        case ConstraintSpec::Kind::ChromaticAltPower: {
            LinearConstraint eq;
            eq.kind = LinearConstraint::Kind::Equation;
            eq.lambda.assign(args.d + 1, Rational(0));
            eq.lambda[args.d - 1] = -1;
            eq.lambda[args.d] = constraint.m;
            spec.constraint = eq;
            spec.zero_prefix = constraint.kappa;
            break;
        }
    }

    auto batch = sample(spec);
    auto roots = batch_roots(batch);

    Window window = resolve_window(args);
    auto manifest = make_manifest("roots", args, window, 0, 0, "roots");
    std::string csv = "# manifest: " + manifest.to_json() + "\n";
    char line[160];
    for (const auto& s : roots) {
        std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%d,%.17g\n", s.poly_index, s.re, s.im,
                      s.is_real ? 1 : 0, s.residual);
        csv += line;
    }
    write_text(args.out + ".manifest.json", manifest.to_json() + "\n");
    if (args.format == "csv" || args.format == "both") write_text(args.out + ".csv", csv);

    if (args.format == "svg" || args.format == "both") {
        std::vector<SvgMarker> markers;
        for (const auto& s : roots)
            markers.push_back({s.re, s.im, s.is_real ? "root-real" : "root"});
        std::vector<Polyline> contours;
        if (overlay) {
            auto dual = build_constrained_dual(ctx, constraint);
            auto locus = real_root_locus(ctx);
            auto grid =
                sample_grid(window, std::min(args.grid, 400), std::min(args.grid, 400),
                            FieldKind::Excluded, [&](double x, double y) {
                                return excluded_field_value(ctx, locus, dual, x, y);
                            });
            contours = extract_contours(grid, 0.5);
        }
        write_text(args.out + ".svg", svg_document(window, contours, markers));
    }
    return 0;
}

int cmd_barycenter(const CommonArgs& args, int overlay_count) {
    BasisContext ctx(basis_from_name(args.basis), args.d);
    Window window = resolve_window(args);
    auto grid = sample_grid(window, args.grid, args.grid, FieldKind::BarycenterAbs,
                            [&](double x, double y) {
                                return std::abs(barycenter(ctx, {x, y}));
                            });
    // log-spaced level contours
    double lo = 1e300, hi = 0;
    for (double v : grid.values) {
        if (v > 0) lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<Polyline> contours;
    if (hi > lo) {
        const int levels = 12;
        for (int t = 0; t < levels; ++t) {
            double level = lo * std::pow(hi / lo, (t + 0.5) / levels);
            auto level_contours = extract_contours(grid, level);
            contours.insert(contours.end(), level_contours.begin(), level_contours.end());
        }
    }
    std::vector<SvgMarker> markers;
    if (overlay_count > 0) {
        SampleSpec spec{ctx};
        spec.bound = args.bound;
        spec.count = overlay_count;
        spec.seed = args.seed;
        spec.ends_nonzero = true;
        for (const auto& s : batch_roots(sample(spec)))
            markers.push_back({s.re, s.im, s.is_real ? "root-real" : "root"});
    }
    auto manifest = make_manifest("barycenter", args, window, args.grid, args.grid,
                                  field_kind_name(FieldKind::BarycenterAbs));
    emit_grid(args, grid, manifest, args.out, contours, markers);
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& out_path) {
    auto results = run_suite(suite.empty() ? "acceptance" : suite, opts);
    nlohmann::ordered_json report;
    report["suite"] = suite.empty() ? "acceptance" : suite;
    report["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " - " << r.detail << "\n";
        report["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    bool ok = all_passed(results);
    report["pass"] = ok;
    if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n");
    std::cout << (ok ? "OK" : "FAILURES") << " (" << results.size() << " checks)\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root exclusion regions via Gale duality"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&](CLI::App* cmd, bool with_sampling) {
        cmd->add_option("--basis", args.basis,
                        "power|falling|rising|binomial|alt-power|alt-rising");
        cmd->add_option("-d,--degree", args.d, "polynomial degree");
        cmd->add_option("--window", args.window_text, "x_min,x_max,y_min,y_max or 'auto'");
        cmd->add_option("--grid", args.grid, "grid resolution per axis");
        cmd->add_option("--constraint", args.constraint_text,
                        "ehrhart-s0|chromatic-binomial:<chi>,<eps>|chromatic-altpower:<kappa>,<m>|"
                        "custom:<lambda csv>,<le|lt|eq>");
        cmd->add_option("--out", args.out, "output path stem");
        cmd->add_option("--format", args.format, "csv|svg|both")
            ->check(CLI::IsMember({"csv", "svg", "both"}));
        if (with_sampling) {
            cmd->add_option("--seed", args.seed, "RNG seed");
            cmd->add_option("--count,-n", args.count, "number of sampled polynomials");
            cmd->add_option("--bound", args.bound, "coefficient cube bound N");
        }
    };

    auto* curves = app.add_subcommand("curves", "zero contours of D_{j,k}");
    std::vector<std::string> pair_texts;
    add_common(curves, false);
    curves->add_option("--pairs", pair_texts, "j,k (repeatable) or 'all'");

    auto* region = app.add_subcommand("region", "excluded/not-excluded fields");
    bool layers = false;
    add_common(region, false);
    region->add_flag("--layers", layers, "also emit per-triple / per-k layers");

    auto* roots = app.add_subcommand("roots", "random-polynomial root scatters");
    bool overlay = false;
    add_common(roots, true);
    roots->add_flag("--overlay", overlay, "overlay the exclusion region contour");

    auto* bary = app.add_subcommand("barycenter", "|beta| contour maps");
    int overlay_count = 0;
    add_common(bary, true);
    bary->add_option("--overlay-count", overlay_count, "overlay roots of this many samples");

    auto* verify = app.add_subcommand("verify", "verification suites");
    std::string suite;
    VerifyOptions vopts;
    std::string report_path;
    verify->add_option("suite", suite, "suite name or 'acceptance'");
    verify->add_option("-d,--degree", vopts.d, "degree knob");
    verify->add_option("--basis", vopts.basis, "basis knob");
    verify->add_option("--count,-n", vopts.count, "sample-count knob");
    verify->add_option("--grid", vopts.grid, "grid-resolution knob");
    verify->add_option("--seed", vopts.seed, "RNG seed");
    verify->add_option("--out", report_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (curves->parsed()) return cmd_curves(args, pair_texts);
        if (region->parsed()) return cmd_region(args, layers);
        if (roots->parsed()) return cmd_roots(args, overlay);
        if (bary->parsed()) return cmd_barycenter(args, overlay_count);
        if (verify->parsed()) return cmd_verify(suite, vopts, report_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
