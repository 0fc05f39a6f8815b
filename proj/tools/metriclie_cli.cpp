// Command-line front end: load metric Lie algebras from catalog ids or JSON
// documents, run the exact curvature/soliton/extension pipeline, integrate the
// float Ricci flow, and re-verify the whole catalog of known results.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <metriclie/catalog.hpp>
#include <metriclie/flow.hpp>
#include <metriclie/io.hpp>

namespace {

using metriclie::io::json;
using metriclie::Rational;

struct Source {
    metriclie::MetricLieAlgebra metric;
    std::optional<Rational> family_value;
    json echo;
};

struct CommonOptions {
    std::string input_path;
    std::string catalog_id;
    std::string format = "text";
    std::string out_path;
    std::string param; // NAME=RATIONAL
};

std::optional<std::pair<std::string, Rational>> parse_param(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw metriclie::Error("--param expects NAME=RATIONAL");
    return std::make_pair(spec.substr(0, eq), Rational::parse(spec.substr(eq + 1)));
}

Source load_source(const CommonOptions& opt) {
    const auto substitution = parse_param(opt.param);
    if (opt.input_path.empty() == opt.catalog_id.empty())
        throw metriclie::Error("exactly one of --input and --catalog is required");

    if (!opt.catalog_id.empty()) {
        auto built = metriclie::catalog::build_from_id(opt.catalog_id);
        json echo{{"catalog", opt.catalog_id}};
        auto metric = std::move(built.metric);
        auto family = built.family_value;
        if (substitution) {
            if (metric.is_parameter_free() || *metric.parameter() != substitution->first)
                throw metriclie::Error("--param name does not match the metric parameter");
            metric = metric.instantiate(substitution->second);
            family.reset();
            echo["param"] = substitution->first + "=" + substitution->second.str();
        } else if (family) {
            echo["evaluated_at"] = family->str();
        }
        return {std::move(metric), family, std::move(echo)};
    }

    const auto doc = metriclie::io::load_input_file(opt.input_path);
    json echo{{"file", opt.input_path}, {"name", doc.name}};
    std::optional<Rational> value;
    if (substitution) {
        if (!doc.parameter || *doc.parameter != substitution->first)
            throw metriclie::Error("--param name does not match the document parameter");
        value = substitution->second;
        echo["param"] = substitution->first + "=" + substitution->second.str();
    }
    return {metriclie::io::build_metric(doc, value), std::nullopt, std::move(echo)};
}

void emit(const CommonOptions& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw metriclie::Error("cannot open output file " + opt.out_path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

json wrap(const std::string& command, const Source& src, json result) {
    return json{{"command", command}, {"input", src.echo}, {"result", std::move(result)}};
}

// ---------------------------------------------------------------------------

int cmd_validate(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto [plus, minus] = metriclie::signature(src.metric);
    json result{{"dim", src.metric.dim()},
                {"classification", metriclie::to_string(src.metric.algebra().classify())},
                {"signature", json{{"plus", plus}, {"minus", minus}}},
                {"parameter", src.metric.parameter() ? json(*src.metric.parameter()) : json()}};
    if (opt.format == "json") {
        emit(opt, wrap("validate", src, result).dump());
    } else {
        std::ostringstream os;
        os << "dimension:      " << src.metric.dim() << "\n"
           << "brackets:       Jacobi identity holds\n"
           << "metric:         symmetric, nondegenerate"
           << (src.metric.parameter() ? " (parameter " + *src.metric.parameter() + ")" : "")
           << "\n"
           << "signature:      (" << plus << ", " << minus << ")\n"
           << "classification: " << metriclie::to_string(src.metric.algebra().classify());
        emit(opt, os.str());
    }
    return 0;
}

int cmd_connection(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto conn = metriclie::levi_civita(src.metric);
    const auto entries = metriclie::nonzero_connection_entries(conn);
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& e : entries)
            list.push_back(json{
                {"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"value", e.value.str()}});
        emit(opt, wrap("connection", src, json{{"entries", std::move(list)}}).dump());
    } else {
        std::ostringstream os;
        const auto& names = src.metric.algebra().basis_names();
        os << "nonzero connection coefficients (nabla_{e_i} e_j = sum Gamma^k_ij e_k):\n";
        for (const auto& e : entries)
            os << "  nabla_" << names[e.i] << " " << names[e.j] << " += (" << e.value.str()
               << ") " << names[e.k] << "\n";
        if (entries.empty()) os << "  all zero\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_curvature(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto r = metriclie::curvature_tensor(src.metric);
    json list = json::array();
    std::size_t nonzero = 0;
    const std::size_t n = src.metric.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!r.coefficient(l, i, j, k).is_zero()) {
                        ++nonzero;
                        list.push_back(json{{"i", i + 1},
                                            {"j", j + 1},
                                            {"k", k + 1},
                                            {"l", l + 1},
                                            {"value", r.coefficient(l, i, j, k).str()}});
                    }
    if (opt.format == "json") {
        emit(opt,
             wrap("curvature", src, json{{"flat", nonzero == 0}, {"entries", std::move(list)}})
                 .dump());
    } else {
        std::ostringstream os;
        if (nonzero == 0) {
            os << "flat: all curvature components vanish";
        } else {
            os << "nonzero components R(e_i, e_j) e_k = sum R^l e_l (i < j):\n";
            for (const auto& e : list)
                os << "  R(" << e["i"] << "," << e["j"] << ")" << e["k"] << " -> e_" << e["l"]
                   << ": " << e["value"].get<std::string>() << "\n";
        }
        emit(opt, os.str());
    }
    return 0;
}

int cmd_ricci(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto rd = metriclie::ricci_data(src.metric);
    json result{{"ricci", metriclie::io::matrix_json(rd.ric)},
                {"operator", metriclie::io::matrix_json(rd.op)},
                {"scalar", rd.scalar.str()}};
    if (src.family_value) {
        result["evaluated_at"] = src.family_value->str();
        result["ricci_evaluated"] =
            metriclie::io::matrix_json(evaluate_matrix(rd.ric, *src.family_value));
    }
    if (opt.format == "json") {
        emit(opt, wrap("ricci", src, std::move(result)).dump());
    } else {
        std::ostringstream os;
        os << "Ricci tensor:    " << metriclie::matrix_str(rd.ric) << "\n"
           << "Ricci operator:  " << metriclie::matrix_str(rd.op) << "\n"
           << "scalar curvature: " << rd.scalar.str();
        if (src.family_value)
            os << "\nevaluated at " << *src.metric.parameter() << " = "
               << src.family_value->str() << ": "
               << metriclie::matrix_str(evaluate_matrix(rd.ric, *src.family_value));
        emit(opt, os.str());
    }
    return 0;
}

int cmd_derivations(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto der = metriclie::derivation_basis(src.metric.algebra());
    if (opt.format == "json") {
        json basis = json::array();
        for (const auto& b : der.basis) basis.push_back(metriclie::io::matrix_json(b));
        emit(opt,
             wrap("derivations", src, json{{"dim", der.dim}, {"basis", std::move(basis)}}).dump());
    } else {
        std::ostringstream os;
        os << "dim Der(g) = " << der.dim << "\n";
        for (std::size_t k = 0; k < der.basis.size(); ++k)
            os << "  B" << k + 1 << " = " << metriclie::matrix_str(der.basis[k]) << "\n";
        emit(opt, os.str());
    }
    return 0;
}

json soliton_json(const metriclie::SolitonSolution& s) {
    return json{{"c", s.c.str()},
                {"D", metriclie::io::matrix_json(s.d)},
                {"class", metriclie::to_string(s.cls)}};
}

std::optional<metriclie::SolitonSolution> solve_for(const Source& src) {
    if (src.metric.is_parameter_free()) return metriclie::solve_algebraic_soliton(src.metric);
    if (src.family_value)
        return metriclie::solve_algebraic_soliton_at(src.metric, *src.family_value);
    throw metriclie::ParameterizedValue(
        "soliton solve needs an instantiated metric; pass --param or use a catalog id");
}

int cmd_soliton(const CommonOptions& opt) {
    const Source src = load_source(opt);
    const auto s = solve_for(src);
    if (opt.format == "json") {
        json result = s ? soliton_json(*s) : json();
        json report = wrap("soliton", src, std::move(result));
        if (s) report["unique"] = s->unique;
        emit(opt, report.dump());
    } else {
        if (!s) {
            emit(opt, "none");
        } else {
            std::ostringstream os;
            os << "c = " << s->c.str() << "\nD = " << metriclie::matrix_str(s->d)
               << "\nclass = " << metriclie::to_string(s->cls)
               << (s->unique ? "" : " (solution not unique; free coefficients set to 0)");
            emit(opt, os.str());
        }
    }
    return 0;
}

int cmd_extend(const CommonOptions& opt, const std::string& ext_param) {
    const Source src = load_source(opt);
    const auto s = solve_for(src);
    if (!s) throw metriclie::Error("no algebraic soliton; nothing to extend by");
    if (!src.metric.is_parameter_free())
        throw metriclie::Error("extension base must be an instantiated metric");
    const auto ext = metriclie::build_solvable_extension(src.metric, s->d, ext_param);
    std::string base_name = src.echo.contains("catalog")
                                ? src.echo["catalog"].get<std::string>()
                                : src.echo["name"].get<std::string>();
    const json doc =
        metriclie::io::metric_to_document_json("extension of " + base_name, ext.result);
    emit(opt, opt.format == "json" ? doc.dump() : doc.dump(2));
    return 0;
}

int cmd_einstein_solve(const CommonOptions& opt, const std::string& extend_mode,
                       const std::string& ext_param) {
    const Source src = load_source(opt);
    metriclie::EinsteinParameterResult result;
    if (extend_mode == "soliton") {
        const auto s = solve_for(src);
        if (!s) throw metriclie::Error("no algebraic soliton; nothing to extend by");
        result = metriclie::einstein_parameter_solve(
            metriclie::build_solvable_extension(src.metric, s->d, ext_param));
    } else if (!extend_mode.empty()) {
        throw metriclie::Error("unsupported --extend mode '" + extend_mode + "'");
    } else {
        result = metriclie::einstein_parameter_solve(src.metric);
    }

    if (opt.format == "json") {
        json solutions = json::array();
        for (const auto& [h, lambda] : result.solutions)
            solutions.push_back(json{{"h", h.str()}, {"lambda", lambda.str()}});
        json residuals = json::array();
        for (const auto& p : result.residual_numerators) residuals.push_back(p.str("h"));
        emit(opt, wrap("einstein-solve", src,
                       json{{"solutions", std::move(solutions)},
                            {"einstein_for_all", result.einstein_for_all},
                            {"residual_numerators", std::move(residuals)}})
                      .dump());
    } else {
        emit(opt, metriclie::einstein_result_str(result));
    }
    return 0;
}

int cmd_flow(const CommonOptions& opt, double t_end, double dt) {
    const Source src = load_source(opt);
    if (!src.metric.is_parameter_free())
        throw metriclie::Error("flow needs an instantiated metric; pass --param");
    const auto state = metriclie::flow::make_float_state(src.metric);
    const metriclie::flow::SolitonResidualFitter fitter(src.metric.algebra());
    try {
        const auto trajectory = metriclie::flow::integrate(state, t_end, dt);
        std::ostringstream os;
        double max_residual = 0;
        std::string last_line;
        for (const auto& st : trajectory) {
            const double res = fitter.residual(st.algebra, st.g, st.t);
            max_residual = std::max(max_residual, res);
            json line{{"t", st.t}, {"g", json::array()}, {"residual", res}};
            for (Eigen::Index i = 0; i < st.g.rows(); ++i)
                for (Eigen::Index j = 0; j < st.g.cols(); ++j) line["g"].push_back(st.g(i, j));
            if (opt.format == "json") os << line.dump() << "\n";
            last_line = line.dump();
        }
        if (opt.format == "json") {
            emit(opt, os.str());
        } else {
            std::ostringstream summary;
            summary << "integrated to t = " << trajectory.back().t << " in "
                    << trajectory.size() - 1 << " steps\n"
                    << "max soliton-fit residual: " << max_residual << "\n"
                    << "final state: " << last_line;
            emit(opt, summary.str());
        }
    } catch (const metriclie::FlowDegenerate& e) {
        std::cerr << "flow aborted: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_catalog_list(const CommonOptions& opt) {
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& c : metriclie::catalog::catalog_cases())
            list.push_back(json{{"id", c.id}, {"title", c.title}, {"checks", c.checks.size()}});
        emit(opt, json{{"command", "catalog-list"}, {"result", std::move(list)}}.dump());
    } else {
        std::ostringstream os;
        for (const auto& c : metriclie::catalog::catalog_cases())
            os << std::left << std::setw(42) << c.id << " " << c.title << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_verify_all(const CommonOptions& opt, bool no_header) {
    const auto results = metriclie::catalog::verify_all(true);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok ? 0 : 1;

    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& r : results) {
            json c{{"id", r.id},
                   {"check", r.key},
                   {"citation", r.citation},
                   {"status", r.ok ? "ok" : "fail"}};
            if (!r.ok) {
                c["expected"] = r.expected;
                c["actual"] = r.actual;
            }
            checks.push_back(std::move(c));
        }
        emit(opt, json{{"command", "verify-all"},
                       {"result", json{{"checks", std::move(checks)},
                                       {"passed", results.size() - failed},
                                       {"failed", failed}}}}
                      .dump());
    } else {
        std::ostringstream os;
        if (!no_header) {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            os << "# metriclie verify-all "
               << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << "\n";
        }
        for (const auto& r : results) {
            os << (r.ok ? "ok   " : "FAIL ") << std::left << std::setw(44) << r.id << " "
               << std::setw(28) << r.key << " -- " << r.citation << "\n";
            if (!r.ok)
                os << "     expected: " << r.expected << "\n     actual:   " << r.actual << "\n";
        }
        os << (failed == 0 ? "all " + std::to_string(results.size()) + " expectations verified"
                           : std::to_string(failed) + " of " + std::to_string(results.size()) +
                                 " expectations FAILED");
        emit(opt, os.str());
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature, algebraic Ricci solitons and Einstein solvable extensions"
                 " of metric Lie algebras"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string extend_mode, ext_param = "h";
    double t_end = 0.1, dt = 1e-3;
    bool no_header = false;

    auto add_common = [&](CLI::App* cmd, bool with_source = true) {
        if (with_source) {
            cmd->add_option("--input", opt.input_path, "JSON input document");
            cmd->add_option("--catalog", opt.catalog_id, "catalog id (see catalog-list)");
            cmd->add_option("--param", opt.param, "substitute NAME=RATIONAL for the parameter");
        }
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out_path, "write output to a file");
    };

    auto* validate = app.add_subcommand("validate", "check brackets, Jacobi and the metric");
    add_common(validate);
    auto* connection = app.add_subcommand("connection", "Levi-Civita connection table");
    add_common(connection);
    auto* curvature = app.add_subcommand("curvature", "full curvature tensor");
    add_common(curvature);
    auto* ricci = app.add_subcommand("ricci", "Ricci tensor, operator and scalar curvature");
    add_common(ricci);
    auto* derivations = app.add_subcommand("derivations", "basis of the derivation algebra");
    add_common(derivations);
    auto* soliton = app.add_subcommand("soliton", "solve rc = c Id + D over Der(g)");
    add_common(soliton);
    auto* extend = app.add_subcommand("extend", "emit the soliton solvable extension document");
    add_common(extend);
    extend->add_option("--extension-param", ext_param, "metric parameter name for g(H,H)");
    auto* einstein = app.add_subcommand("einstein-solve", "solve the Einstein condition over the"
                                                          " extension parameter");
    add_common(einstein);
    einstein->add_option("--extend", extend_mode, "build the extension first ('soliton')");
    einstein->add_option("--extension-param", ext_param, "metric parameter name for g(H,H)");
    auto* flow = app.add_subcommand("flow", "integrate dg/dt = -2 Ric(g) with RK4");
    add_common(flow);
    flow->add_option("--t-end", t_end, "end time");
    flow->add_option("--dt", dt, "step size");
    auto* catalog_list = app.add_subcommand("catalog-list", "list the verified catalog");
    add_common(catalog_list, false);
    auto* verify = app.add_subcommand("verify-all", "recompute every catalog expectation");
    add_common(verify, false);
    verify->add_flag("--no-header", no_header, "omit the timestamp header");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (connection->parsed()) return cmd_connection(opt);
        if (curvature->parsed()) return cmd_curvature(opt);
        if (ricci->parsed()) return cmd_ricci(opt);
        if (derivations->parsed()) return cmd_derivations(opt);
        if (soliton->parsed()) return cmd_soliton(opt);
        if (extend->parsed()) return cmd_extend(opt, ext_param);
        if (einstein->parsed()) return cmd_einstein_solve(opt, extend_mode, ext_param);
        if (flow->parsed()) return cmd_flow(opt, t_end, dt);
        if (catalog_list->parsed()) return cmd_catalog_list(opt);
        if (verify->parsed()) return cmd_verify_all(opt, no_header);
    } catch (const metriclie::FlowDegenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
