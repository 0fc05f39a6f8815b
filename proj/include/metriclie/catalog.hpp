#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "metriclie/extension.hpp"
#include "metriclie/render.hpp"

namespace metriclie::catalog {

// ---------------------------------------------------------------------------
// Constructors for the worked examples
// ---------------------------------------------------------------------------

/// Heisenberg algebra h_{2n+1} with brackets [F_i, F_{j+n}] = delta_ij F_N and
/// the Lorentzian metric diag(1, ..., 1, -1) (center timelike).
inline MetricLieAlgebra heisenberg(long n) {
    if (n < 1) throw Error("heisenberg requires n >= 1");
    const std::size_t N = static_cast<std::size_t>(2 * n + 1);
    std::vector<BracketTerm> brackets;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        brackets.push_back({i, i + static_cast<std::size_t>(n), {{N - 1, Rational(1)}}});
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= N; ++i) names.push_back("F" + std::to_string(i));
    LieAlgebra algebra = LieAlgebra::make(N, brackets, std::move(names));
    RationalMatrix g(N, N);
    for (std::size_t i = 0; i + 1 < N; ++i) g(i, i) = 1;
    g(N - 1, N - 1) = -1;
    return MetricLieAlgebra::make(std::move(algebra), g);
}

enum class H3Metric { g1, g2, g3 };

/// The three Lorentzian metric classes on H_3 in left-invariant frames:
/// g1 = diag(1,1,-1) on the [F2,F3] = F1 frame, g2 the center-timelike
/// heisenberg(1) metric, g3 the flat null-center frame form.
inline MetricLieAlgebra h3_metric(H3Metric which) {
    switch (which) {
        case H3Metric::g1: {
            LieAlgebra a = LieAlgebra::make(3, {{1, 2, {{0, Rational(1)}}}}, {"F1", "F2", "F3"});
            RationalMatrix g(3, 3);
            g(0, 0) = 1;
            g(1, 1) = 1;
            g(2, 2) = -1;
            return MetricLieAlgebra::make(std::move(a), g);
        }
        case H3Metric::g2:
            return heisenberg(1);
        case H3Metric::g3: {
            LieAlgebra a = LieAlgebra::make(3, {{1, 2, {{0, Rational(1)}}}}, {"F1", "F2", "F3"});
            RationalMatrix g(3, 3);
            g(0, 1) = 1;
            g(1, 0) = 1;
            g(1, 1) = -1;
            g(2, 2) = 1;
            return MetricLieAlgebra::make(std::move(a), g);
        }
    }
    throw Error("unknown h3 metric tag");
}

/// Oscillator algebra g_m(lambda) on (P, X_1..X_m, Y_1..Y_m, Q) with metric
/// g(P,P) = g(Q,Q) = eps, g(P,Q) = 1, X/Y orthonormal. At eps = +-1 the
/// constant matrix is singular, so those members are kept as the symbolic
/// one-parameter family (nondegenerate as a rational-function matrix) and
/// downstream quantities are evaluated at eps afterwards.
inline MetricLieAlgebra oscillator(long m, const std::vector<Rational>& lambdas,
                                   const Rational& epsilon) {
    if (m < 1) throw Error("oscillator requires m >= 1");
    if (lambdas.size() != static_cast<std::size_t>(m))
        throw DimensionMismatch("oscillator needs exactly m frequencies");
    for (const auto& l : lambdas)
        if (l.sign() <= 0) throw Error("oscillator frequencies must be positive");

    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t dim = 2 * mm + 2;
    const std::size_t P = 0, Q = dim - 1;
    auto X = [mm](std::size_t j) { return 1 + j; };
    auto Y = [mm](std::size_t j) { return 1 + mm + j; };

    std::vector<BracketTerm> brackets;
    for (std::size_t j = 0; j < mm; ++j) {
        brackets.push_back({X(j), Y(j), {{P, Rational(1)}}});
        brackets.push_back({Q, X(j), {{Y(j), lambdas[j]}}});
        brackets.push_back({Q, Y(j), {{X(j), -lambdas[j]}}});
    }
    std::vector<std::string> names{"P"};
    for (std::size_t j = 1; j <= mm; ++j) names.push_back("X" + std::to_string(j));
    for (std::size_t j = 1; j <= mm; ++j) names.push_back("Y" + std::to_string(j));
    names.push_back("Q");
    LieAlgebra algebra = LieAlgebra::make(dim, brackets, std::move(names));

    const bool singular_at_eps = epsilon == Rational(1) || epsilon == Rational(-1);
    ScalarMatrix g(dim, dim);
    const ParamScalar eps_entry =
        singular_at_eps ? ParamScalar::parameter("eps") : ParamScalar(epsilon);
    g(P, P) = eps_entry;
    g(Q, Q) = eps_entry;
    g(P, Q) = 1;
    g(Q, P) = 1;
    for (std::size_t j = 0; j < mm; ++j) {
        g(X(j), X(j)) = 1;
        g(Y(j), Y(j)) = 1;
    }
    return MetricLieAlgebra::make(std::move(algebra), std::move(g));
}

/// E(2): rigid motions of the Euclidean plane, frame metric diag(1, 1, -1).
inline MetricLieAlgebra euclidean_motion() {
    LieAlgebra a = LieAlgebra::make(
        3, {{0, 1, {{2, Rational(1)}}}, {2, 0, {{1, Rational(1)}}}}, {"F1", "F2", "F3"});
    RationalMatrix g(3, 3);
    g(0, 0) = 1;
    g(1, 1) = 1;
    g(2, 2) = -1;
    return MetricLieAlgebra::make(std::move(a), g);
}

/// E(1,1): rigid motions of the Minkowski plane, frame metric diag(-1, 1, 1).
inline MetricLieAlgebra minkowski_motion() {
    LieAlgebra a = LieAlgebra::make(
        3, {{0, 1, {{2, Rational(1)}}}, {2, 0, {{1, Rational(-1)}}}}, {"F1", "F2", "F3"});
    RationalMatrix g(3, 3);
    g(0, 0) = -1;
    g(1, 1) = 1;
    g(2, 2) = 1;
    return MetricLieAlgebra::make(std::move(a), g);
}

/// Five-dimensional solvable extension of the m = 1 oscillator algebra by the
/// derivation family DP = 2b P, DX = a P + b X + c Y, DY = at P - c X + b Y,
/// DQ = k P - lambda a X - lambda at Y; metric extends the eps = 0 oscillator
/// metric by g~(H, H) = h.
inline ExtensionSpec remark44_extension(const Rational& a, const Rational& atilde,
                                        const Rational& b, const Rational& c, const Rational& k,
                                        const Rational& lambda, const std::string& param = "h") {
    const MetricLieAlgebra base = oscillator(1, {lambda}, Rational(0));
    RationalMatrix d(4, 4);
    d(0, 0) = Rational(2) * b;
    d(0, 1) = a;
    d(1, 1) = b;
    d(2, 1) = c;
    d(0, 2) = atilde;
    d(1, 2) = -c;
    d(2, 2) = b;
    d(0, 3) = k;
    d(1, 3) = -lambda * a;
    d(2, 3) = -lambda * atilde;
    return build_solvable_extension(base, d, param);
}

// ---------------------------------------------------------------------------
// Verified expectations (verify-all)
// ---------------------------------------------------------------------------

/// Lazily computed pipeline results for one catalog case.
class CaseRun {
public:
    CaseRun(MetricLieAlgebra metric, std::optional<Rational> family_value, std::string ext_param)
        : metric_(std::move(metric)), family_value_(std::move(family_value)),
          ext_param_(std::move(ext_param)) {}

    const MetricLieAlgebra& metric() const { return metric_; }
    const std::optional<Rational>& family_value() const { return family_value_; }

    const Connection& connection() {
        if (!conn_) conn_ = std::make_shared<Connection>(levi_civita(metric_));
        return *conn_;
    }

    const RicciData& ricci() {
        if (!ricci_) ricci_ = std::make_shared<RicciData>(ricci_data(metric_, connection()));
        return *ricci_;
    }

    /// Ricci tensor as rationals, evaluated at the family value when the
    /// metric is a symbolic family.
    RationalMatrix ricci_numeric() {
        const ScalarMatrix& ric = ricci().ric;
        if (metric_.is_parameter_free()) return to_rational_matrix(ric);
        return evaluate_matrix(ric, family_value_.value());
    }

    RationalMatrix ricci_operator_numeric() {
        const ScalarMatrix& op = ricci().op;
        if (metric_.is_parameter_free()) return to_rational_matrix(op);
        return evaluate_matrix(op, family_value_.value());
    }

    const std::optional<SolitonSolution>& soliton() {
        if (!soliton_) {
            if (metric_.is_parameter_free())
                soliton_ = std::make_shared<std::optional<SolitonSolution>>(
                    detail_solve(to_rational_matrix(ricci().op)));
            else
                soliton_ = std::make_shared<std::optional<SolitonSolution>>(
                    detail_solve(evaluate_matrix(ricci().op, family_value_.value())));
        }
        return *soliton_;
    }

    const ExtensionSpec& solved_extension() {
        if (!ext_) {
            const auto& s = soliton();
            if (!s) throw Error("case has no algebraic soliton to extend by");
            ext_ = std::make_shared<ExtensionSpec>(
                build_solvable_extension(metric_, s->d, ext_param_));
        }
        return *ext_;
    }

    const EinsteinParameterResult& solved_extension_einstein() {
        if (!ext_einstein_)
            ext_einstein_ =
                std::make_shared<EinsteinParameterResult>(einstein_parameter_solve(solved_extension()));
        return *ext_einstein_;
    }

private:
    std::optional<SolitonSolution> detail_solve(const RationalMatrix& rc) {
        return metriclie::detail::solve_soliton_from_operator(metric_.algebra(), rc);
    }

    MetricLieAlgebra metric_;
    std::optional<Rational> family_value_;
    std::string ext_param_;
    std::shared_ptr<Connection> conn_;
    std::shared_ptr<RicciData> ricci_;
    std::shared_ptr<std::optional<SolitonSolution>> soliton_;
    std::shared_ptr<ExtensionSpec> ext_;
    std::shared_ptr<EinsteinParameterResult> ext_einstein_;
};

/// One expectation: `run` returns (expected, actual) in canonical text form.
struct CatalogCheck {
    std::string key;
    std::string citation;
    std::function<std::pair<std::string, std::string>(CaseRun&)> run;
};

struct CatalogCase {
    std::string id;
    std::string title;
    std::function<MetricLieAlgebra()> build;
    std::optional<Rational> family_value; // evaluation point for symbolic families
    std::string ext_param = "h";
    std::vector<CatalogCheck> checks;
};

struct CatalogCheckResult {
    std::string id;
    std::string key;
    std::string citation;
    bool ok = false;
    std::string expected;
    std::string actual;
};

namespace detail {

inline RationalMatrix diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

inline CatalogCheck check_classify(StructureClass expected, std::string citation) {
    return {"classify", std::move(citation), [expected](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    to_string(expected), to_string(run.metric().algebra().classify()));
            }};
}

inline CatalogCheck check_connection(std::vector<ConnectionEntry> expected, std::string citation) {
    return {"connection", std::move(citation), [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(connection_str(expected),
                                                           connection_str(run.connection()));
            }};
}

inline CatalogCheck check_ricci(RationalMatrix expected, std::string citation) {
    return {"ricci", std::move(citation), [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(matrix_str(expected),
                                                           matrix_str(run.ricci_numeric()));
            }};
}

inline CatalogCheck check_ricci_operator(RationalMatrix expected, std::string citation) {
    return {"ricci_operator", std::move(citation), [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    matrix_str(expected), matrix_str(run.ricci_operator_numeric()));
            }};
}

inline CatalogCheck check_derivation_dim(std::size_t expected, std::string citation) {
    return {"derivation_dim", std::move(citation), [expected](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    std::to_string(expected),
                    std::to_string(derivation_basis(run.metric().algebra()).dim));
            }};
}

inline CatalogCheck check_soliton(std::optional<SolitonSolution> expected, std::string citation) {
    return {"soliton", std::move(citation), [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(soliton_str(expected),
                                                           soliton_str(run.soliton()));
            }};
}

inline CatalogCheck check_soliton_identity(std::string citation) {
    return {"soliton_identity", std::move(citation), [](CaseRun& run) {
                const auto& s = run.soliton();
                const bool ok = s && verify_ricci_soliton_identity(run.metric(), *s);
                return std::pair<std::string, std::string>("holds", ok ? "holds" : "fails");
            }};
}

inline CatalogCheck check_extension_einstein(EinsteinParameterResult expected,
                                             std::string citation) {
    return {"extension_einstein", std::move(citation),
            [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    einstein_result_str(expected),
                    einstein_result_str(run.solved_extension_einstein()));
            }};
}

inline CatalogCheck check_extension_ricci(std::string expected, std::string citation) {
    return {"extension_ricci", std::move(citation),
            [expected = std::move(expected)](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    expected, nonzero_entries_str(ricci_tensor(run.solved_extension().result)));
            }};
}

inline CatalogCheck check_flat(bool expected, std::string citation) {
    return {"flat", std::move(citation), [expected](CaseRun& run) {
                return std::pair<std::string, std::string>(
                    expected ? "flat" : "not flat", is_flat(run.metric()) ? "flat" : "not flat");
            }};
}

inline CatalogCheck check_einstein_constant(std::optional<Rational> expected,
                                            std::string citation) {
    return {"einstein_constant", std::move(citation), [expected](CaseRun& run) {
                const auto actual = einstein_constant(run.metric());
                return std::pair<std::string, std::string>(
                    expected ? expected->str() : "none", actual ? actual->str() : "none");
            }};
}

inline EinsteinParameterResult einstein_solutions(
    std::vector<std::pair<Rational, Rational>> sols) {
    EinsteinParameterResult r;
    r.solutions = std::move(sols);
    return r;
}

inline EinsteinParameterResult einstein_none(std::vector<Polynomial> residuals) {
    EinsteinParameterResult r;
    r.residual_numerators = std::move(residuals);
    return r;
}

inline std::vector<ConnectionEntry> h3_g1_connection() {
    const ParamScalar half(Rational(1, 2));
    return {{0, 1, 2, half}, {0, 2, 1, half},  {1, 0, 2, half},
            {1, 2, 0, half}, {2, 0, 1, half},  {2, 1, 0, -half}};
}

inline std::vector<ConnectionEntry> heisenberg_connection(long n) {
    const std::size_t N = static_cast<std::size_t>(2 * n + 1);
    const ParamScalar half(Rational(1, 2));
    std::vector<ConnectionEntry> e;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const std::size_t ii = i, jj = i + static_cast<std::size_t>(n);
        e.push_back({ii, jj, N - 1, half});
        e.push_back({jj, ii, N - 1, -half});
        e.push_back({ii, N - 1, jj, half});
        e.push_back({N - 1, ii, jj, half});
        e.push_back({jj, N - 1, ii, -half});
        e.push_back({N - 1, jj, ii, -half});
    }
    std::sort(e.begin(), e.end(), [](const ConnectionEntry& a, const ConnectionEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return e;
}

inline std::vector<ConnectionEntry> oscillator_connection_eps0(long m,
                                                               const std::vector<Rational>& l) {
    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t P = 0, Q = 2 * mm + 1;
    auto X = [mm](std::size_t j) { return 1 + j; };
    auto Y = [mm](std::size_t j) { return 1 + mm + j; };
    const ParamScalar half(Rational(1, 2));
    std::vector<ConnectionEntry> e;
    for (std::size_t j = 0; j < mm; ++j) {
        e.push_back({X(j), Q, Y(j), -half});                        // nabla_X Q = -(1/2) Y
        e.push_back({Q, X(j), Y(j), ParamScalar(l[j] - Rational(1, 2))});
        e.push_back({Y(j), Q, X(j), half});                         // nabla_Y Q = (1/2) X
        e.push_back({Q, Y(j), X(j), ParamScalar(Rational(1, 2) - l[j])});
        e.push_back({X(j), Y(j), P, half});                         // nabla_X Y = (1/2) P
        e.push_back({Y(j), X(j), P, -half});
    }
    e.erase(std::remove_if(e.begin(), e.end(),
                           [](const ConnectionEntry& x) { return x.value.is_zero(); }),
            e.end());
    std::sort(e.begin(), e.end(), [](const ConnectionEntry& a, const ConnectionEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return e;
}

inline std::vector<ConnectionEntry> plane_motion_connection() {
    const ParamScalar one(Rational(1));
    return {{1, 0, 2, -one}, {1, 2, 0, -one}, {2, 0, 1, one}, {2, 1, 0, -one}};
}

inline SolitonSolution make_soliton(Rational c, RationalMatrix d) {
    SolitonSolution s;
    s.c = std::move(c);
    s.d = std::move(d);
    s.cls = classify_soliton(s.c, s.d);
    s.unique = true;
    return s;
}

std::vector<CatalogCase> make_cases();

} // namespace detail

inline const std::vector<CatalogCase>& catalog_cases() {
    static const std::vector<CatalogCase> cases = detail::make_cases();
    return cases;
}

inline const CatalogCase* find_case(const std::string& id) {
    for (const auto& c : catalog_cases())
        if (c.id == id) return &c;
    return nullptr;
}

inline std::vector<CatalogCheckResult> verify_case(const CatalogCase& c) {
    CaseRun run(c.build(), c.family_value, c.ext_param);
    std::vector<CatalogCheckResult> results;
    for (const auto& check : c.checks) {
        CatalogCheckResult r{c.id, check.key, check.citation, false, "", ""};
        try {
            auto [expected, actual] = check.run(run);
            r.expected = std::move(expected);
            r.actual = std::move(actual);
            r.ok = r.expected == r.actual;
        } catch (const std::exception& e) {
            r.expected = "(no error)";
            r.actual = std::string("error: ") + e.what();
            r.ok = false;
        }
        results.push_back(std::move(r));
    }
    return results;
}

/// Runs every catalog expectation; rows come back ordered by catalog id
/// regardless of completion order.
inline std::vector<CatalogCheckResult> verify_all(bool parallel = true) {
    const auto& cases = catalog_cases();
    std::vector<std::vector<CatalogCheckResult>> blocks(cases.size());
    if (parallel) {
        std::vector<std::future<std::vector<CatalogCheckResult>>> futures;
        futures.reserve(cases.size());
        for (const auto& c : cases)
            futures.push_back(
                std::async(std::launch::async, [&c]() { return verify_case(c); }));
        for (std::size_t i = 0; i < futures.size(); ++i) blocks[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < cases.size(); ++i) blocks[i] = verify_case(cases[i]);
    }
    std::vector<std::size_t> order(cases.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cases[a].id < cases[b].id; });
    std::vector<CatalogCheckResult> out;
    for (auto i : order)
        for (auto& r : blocks[i]) out.push_back(std::move(r));
    return out;
}

/// Parses a catalog id ("heisenberg:n=3", "oscillator:m=2,eps=0,l2=2", ...)
/// and builds it; ids beyond the verified list are allowed as long as the
/// arguments are well-formed.
struct BuiltCase {
    MetricLieAlgebra metric;
    std::optional<Rational> family_value;
    std::string title;
};

inline BuiltCase build_from_id(const std::string& id) {
    const auto colon = id.find(':');
    const std::string head = id.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = id.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            const std::string item = rest.substr(pos, comma - pos);
            const auto eq = item.find('=');
            if (head == "h3" && eq == std::string::npos) {
                kv["metric"] = item;
            } else {
                if (eq == std::string::npos)
                    throw Error("malformed catalog id component '" + item + "'");
                kv[item.substr(0, eq)] = item.substr(eq + 1);
            }
            pos = comma + 1;
        }
    }
    auto need = [&](const std::string& key) -> Rational {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error("catalog id missing '" + key + "'");
        return Rational::parse(it->second);
    };

    if (head == "heisenberg") {
        const Rational n = need("n");
        if (!n.is_integer()) throw Error("heisenberg n must be an integer");
        return {heisenberg(static_cast<long>(n.numerator().convert_to<long long>())), std::nullopt,
                "Heisenberg algebra, center-timelike metric"};
    }
    if (head == "h3") {
        auto it = kv.find("metric");
        if (it == kv.end()) throw Error("catalog id must be h3:g1, h3:g2 or h3:g3");
        if (it->second == "g1") return {h3_metric(H3Metric::g1), std::nullopt, "H3 metric g1"};
        if (it->second == "g2") return {h3_metric(H3Metric::g2), std::nullopt, "H3 metric g2"};
        if (it->second == "g3") return {h3_metric(H3Metric::g3), std::nullopt, "H3 metric g3"};
        throw Error("unknown h3 metric '" + it->second + "'");
    }
    if (head == "oscillator") {
        const Rational mr = need("m");
        if (!mr.is_integer()) throw Error("oscillator m must be an integer");
        const long m = static_cast<long>(mr.numerator().convert_to<long long>());
        const Rational eps = need("eps");
        std::vector<Rational> lambdas(static_cast<std::size_t>(m > 0 ? m : 0), Rational(1));
        for (long j = 1; j <= m; ++j) {
            auto it = kv.find("l" + std::to_string(j));
            if (it != kv.end()) lambdas[static_cast<std::size_t>(j - 1)] = Rational::parse(it->second);
        }
        auto metric = oscillator(m, lambdas, eps);
        std::optional<Rational> family;
        if (!metric.is_parameter_free()) family = eps;
        return {std::move(metric), family, "oscillator group metric"};
    }
    if (head == "e2") return {euclidean_motion(), std::nullopt, "E(2) frame metric"};
    if (head == "e11") return {minkowski_motion(), std::nullopt, "E(1,1) frame metric"};
    if (head == "remark44") {
        auto ext = remark44_extension(need("a"), need("atilde"), need("b"), need("c"), need("k"),
                                      need("lambda"));
        return {ext.result, std::nullopt, "parametrized solvable extension of the oscillator"};
    }
    throw Error("unknown catalog id '" + id + "'");
}

// ---------------------------------------------------------------------------
// The verified catalog
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<CatalogCase> make_cases() {
    std::vector<CatalogCase> cases;
    const Rational half(1, 2);

    // --- H3, metric g1 ---
    {
        CatalogCase c{"h3:g1", "Heisenberg H3 with Lorentzian metric g1",
                      [] { return h3_metric(H3Metric::g1); }, std::nullopt, "h", {}};
        c.checks.push_back(check_classify(StructureClass::nilpotent, "h3 is nilpotent"));
        c.checks.push_back(
            check_connection(h3_g1_connection(), "g1 connection: all entries +-1/2"));
        c.checks.push_back(
            check_ricci(diagonal({-half, half, -half}), "g1 Ricci = diag(-1/2, 1/2, -1/2)"));
        c.checks.push_back(check_ricci_operator(diagonal({-half, half, half}),
                                                "g1 Ricci operator = (1/2) diag(-1, 1, 1)"));
        c.checks.push_back(check_derivation_dim(6, "dim Der(h3) = 6"));
        c.checks.push_back(check_soliton(
            make_soliton(Rational(3, 2), diagonal({-2, -1, -1})),
            "g1 nilsoliton: c = 3/2, D = diag(-2, -1, -1), shrinking"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_einstein(
            einstein_solutions({{Rational(-4), Rational(3, 2)}}),
            "Einstein solvable extension: h = -4, Einstein constant 3/2"));
        cases.push_back(std::move(c));
    }

    // --- H3, metric g2 (center-timelike form) ---
    {
        CatalogCase c{"h3:g2", "Heisenberg H3 with Lorentzian metric g2",
                      [] { return h3_metric(H3Metric::g2); }, std::nullopt, "h", {}};
        c.checks.push_back(check_classify(StructureClass::nilpotent, "h3 is nilpotent"));
        c.checks.push_back(
            check_ricci(diagonal({half, half, half}), "g2 Ricci = diag(1/2, 1/2, 1/2)"));
        c.checks.push_back(check_ricci_operator(diagonal({half, half, -half}),
                                                "g2 Ricci operator = diag(1/2, 1/2, -1/2)"));
        c.checks.push_back(check_soliton(
            make_soliton(Rational(3, 2), diagonal({-1, -1, -2})),
            "g2 nilsoliton: c = 3/2, D = diag(-1, -1, -2), shrinking"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_einstein(
            einstein_solutions({{Rational(-4), Rational(3, 2)}}),
            "Einstein solvable extension: h = -4, Einstein constant 3/2"));
        cases.push_back(std::move(c));
    }

    // --- H3, metric g3 (flat null-center frame form) ---
    {
        CatalogCase c{"h3:g3", "Heisenberg H3 with flat Lorentzian metric g3",
                      [] { return h3_metric(H3Metric::g3); }, std::nullopt, "h", {}};
        c.checks.push_back(check_flat(true, "g3 is flat (Nomizu)"));
        c.checks.push_back(check_ricci(RationalMatrix(3, 3), "flat metric has zero Ricci"));
        c.checks.push_back(
            check_einstein_constant(Rational(0), "flat metric is Ricci-flat"));
        cases.push_back(std::move(c));
    }

    // --- Heisenberg family n = 1..5 ---
    for (long n = 1; n <= 5; ++n) {
        const std::size_t N = static_cast<std::size_t>(2 * n + 1);
        CatalogCase c{"heisenberg:n=" + std::to_string(n),
                      "Heisenberg algebra of dimension " + std::to_string(N),
                      [n] { return heisenberg(n); }, std::nullopt, "a", {}};
        std::vector<Rational> ric_diag(N, half), rc_diag(N, half);
        ric_diag[N - 1] = Rational(n, 2);
        rc_diag[N - 1] = Rational(-n, 2);
        c.checks.push_back(check_classify(StructureClass::nilpotent,
                                          "Heisenberg algebras are nilpotent"));
        c.checks.push_back(check_connection(
            heisenberg_connection(n), "Heisenberg connection table: +-1/2 couplings with the center"));
        c.checks.push_back(check_ricci(
            diagonal(ric_diag),
            "Ricci = diag(1/2 I_2n, n/2): horizontal entries independent of n"));
        c.checks.push_back(check_ricci_operator(
            diagonal(rc_diag), "Ricci operator = diag(1/2 I_2n, -n/2)"));
        std::vector<Rational> d_diag(N, Rational(-(n + 1), 2));
        d_diag[N - 1] = Rational(-(n + 1));
        c.checks.push_back(check_soliton(
            make_soliton(Rational(n + 2, 2), diagonal(d_diag)),
            "nilsoliton: c = n/2 + 1, D = diag(-(n+1)/2 I_2n, -(n+1)); equals the published"
            " closed form at n = 1"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_einstein(
            einstein_solutions({{Rational(-(n + 1) * (n + 1)), Rational(n + 2, 2)}}),
            "Einstein extension of the nilsoliton: a = -(n+1)^2, constant n/2 + 1"));
        // Any derivation diag(b I_2n, 2b) yields an Einstein extension at a = -4 b^2.
        const Rational b = Rational(-5 * n, 4) + Rational(1, 4);
        c.checks.push_back({"extension_einstein_family",
                            "extension by D = diag(b I_2n, 2b), b = -5n/4 + 1/4: Einstein at"
                            " a = -4 b^2 with constant n/2 + 1",
                            [n, N, b](CaseRun& run) {
                                RationalMatrix d(N, N);
                                for (std::size_t i = 0; i + 1 < N; ++i) d(i, i) = b;
                                d(N - 1, N - 1) = Rational(2) * b;
                                auto ext = build_solvable_extension(run.metric(), d, "a");
                                auto er = einstein_parameter_solve(ext);
                                auto expected = einstein_solutions(
                                    {{Rational(-4) * b * b, Rational(n + 2, 2)}});
                                return std::pair<std::string, std::string>(
                                    einstein_result_str(expected), einstein_result_str(er));
                            }});
        cases.push_back(std::move(c));
    }

    // --- Oscillator, m = 1, eps = 0 ---
    {
        CatalogCase c{"oscillator:m=1,eps=0", "oscillator group, bi-invariant metric (eps = 0)",
                      [] { return oscillator(1, {Rational(1)}, Rational(0)); }, std::nullopt, "h",
                      {}};
        c.checks.push_back(check_classify(StructureClass::solvable,
                                          "oscillator algebras are solvable, not nilpotent"));
        c.checks.push_back(check_connection(oscillator_connection_eps0(1, {Rational(1)}),
                                            "oscillator connection table at eps = 0"));
        RationalMatrix ric(4, 4);
        ric(3, 3) = half;
        c.checks.push_back(
            check_ricci(ric, "Ricci vanishes except Ric(Q, Q) = m/2"));
        RationalMatrix d(4, 4);
        d(0, 3) = half;
        c.checks.push_back(check_soliton(make_soliton(Rational(0), d),
                                         "steady solvsoliton: c = 0, D Q = (m/2) P, tr D = 0"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_ricci(
            "(5,5)=1/2", "extension Ricci vanishes except Ric(Q, Q) = m/2"));
        c.checks.push_back(check_extension_einstein(
            einstein_none({Polynomial(half)}),
            "extension is not Einstein for any parameter value"));
        cases.push_back(std::move(c));
    }

    // --- Oscillator, m = 2, frequencies (1, 2), eps = 0 ---
    {
        CatalogCase c{"oscillator:m=2,eps=0,l1=1,l2=2",
                      "oscillator group with two frequencies (eps = 0)",
                      [] { return oscillator(2, {Rational(1), Rational(2)}, Rational(0)); },
                      std::nullopt, "h", {}};
        c.checks.push_back(check_classify(StructureClass::solvable,
                                          "oscillator algebras are solvable, not nilpotent"));
        RationalMatrix ric(6, 6);
        ric(5, 5) = 1;
        c.checks.push_back(check_ricci(ric, "Ricci vanishes except Ric(Q, Q) = m/2 = 1"));
        RationalMatrix d(6, 6);
        d(0, 5) = 1;
        c.checks.push_back(check_soliton(make_soliton(Rational(0), d),
                                         "steady solvsoliton: c = 0, D Q = P, tr D = 0"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_ricci(
            "(7,7)=1", "extension Ricci vanishes except Ric(Q, Q) = m/2"));
        c.checks.push_back(check_extension_einstein(
            einstein_none({Polynomial(Rational(1))}),
            "extension is not Einstein for any parameter value"));
        cases.push_back(std::move(c));
    }

    // --- Oscillator at eps != 0: no algebraic soliton ---
    const auto eps_case = [&](const std::string& id, const Rational& eps,
                              const RationalMatrix& expected_ric) {
        CatalogCase c{id, "oscillator metric with eps = " + eps.str(),
                      [eps] { return oscillator(1, {Rational(1)}, eps); }, eps, "h", {}};
        c.checks.push_back(check_ricci(
            expected_ric, "Ricci values of the one-parameter family evaluated at eps"));
        c.checks.push_back(
            check_soliton(std::nullopt, "no algebraic soliton for eps != 0"));
        return c;
    };
    {
        RationalMatrix r(4, 4);
        r(0, 0) = half;
        r(0, 3) = r(3, 0) = half;
        r(1, 1) = r(2, 2) = -half;
        r(3, 3) = half;
        cases.push_back(eps_case("oscillator:m=1,eps=1", Rational(1), r));
    }
    {
        RationalMatrix r(4, 4);
        r(0, 0) = half;
        r(0, 3) = r(3, 0) = -half;
        r(1, 1) = r(2, 2) = half;
        r(3, 3) = half;
        cases.push_back(eps_case("oscillator:m=1,eps=-1", Rational(-1), r));
    }
    {
        RationalMatrix r(4, 4);
        r(0, 0) = Rational(1, 8);
        r(0, 3) = r(3, 0) = Rational(1, 4);
        r(1, 1) = r(2, 2) = Rational(-1, 4);
        r(3, 3) = half;
        cases.push_back(eps_case("oscillator:m=1,eps=1/2", Rational(1, 2), r));
    }

    // --- E(2) ---
    {
        CatalogCase c{"e2", "rigid motions of the Euclidean plane",
                      [] { return euclidean_motion(); }, std::nullopt, "h", {}};
        c.checks.push_back(check_classify(StructureClass::solvable, "e(2) is solvable"));
        c.checks.push_back(check_connection(plane_motion_connection(),
                                            "E(2) connection: rotation frame table"));
        RationalMatrix ric(3, 3);
        ric(0, 0) = 2;
        c.checks.push_back(check_ricci(ric, "Ricci vanishes except Ric(F1, F1) = 2"));
        c.checks.push_back(check_ricci_operator(diagonal({2, 0, 0}),
                                                "Ricci operator = diag(2, 0, 0)"));
        c.checks.push_back(check_derivation_dim(
            4, "dim Der(e(2)) = 4; the constraints force equal diagonal tail entries"));
        c.checks.push_back(check_soliton(
            make_soliton(Rational(2), diagonal({0, -2, -2})),
            "solvsoliton: c = 2, D = diag(0, -2, -2), shrinking"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_einstein(
            einstein_solutions({{Rational(-4), Rational(2)}}),
            "Einstein solvable extension: h = -4, Einstein constant 2"));
        cases.push_back(std::move(c));
    }

    // --- E(1,1) ---
    {
        CatalogCase c{"e11", "rigid motions of the Minkowski plane",
                      [] { return minkowski_motion(); }, std::nullopt, "h", {}};
        c.checks.push_back(check_classify(StructureClass::solvable, "e(1,1) is solvable"));
        RationalMatrix ric(3, 3);
        ric(0, 0) = -2;
        c.checks.push_back(check_ricci(ric, "Ricci vanishes except Ric(F1, F1) = -2"));
        c.checks.push_back(check_ricci_operator(diagonal({2, 0, 0}),
                                                "Ricci operator = diag(2, 0, 0)"));
        c.checks.push_back(check_derivation_dim(
            4, "dim Der(e(1,1)) = 4; the constraints force equal diagonal tail entries"));
        c.checks.push_back(check_soliton(
            make_soliton(Rational(2), diagonal({0, -2, -2})),
            "solvsoliton: c = 2, D = diag(0, -2, -2), shrinking"));
        c.checks.push_back(
            check_soliton_identity("Ric = c g + (1/2)(D^T g + g D) exactly"));
        c.checks.push_back(check_extension_einstein(
            einstein_solutions({{Rational(-4), Rational(2)}}),
            "Einstein solvable extension: h = -4, Einstein constant 2"));
        cases.push_back(std::move(c));
    }

    // --- Remark-4.4-type five-dimensional extensions: engine verdicts ---
    {
        CatalogCase c{"remark44:a=0,atilde=0,b=1,c=0,k=1,lambda=1",
                      "oscillator extension, dilation branch (b = k = lambda = 1)",
                      [] {
                          return remark44_extension(Rational(0), Rational(0), Rational(1),
                                                    Rational(0), Rational(1), Rational(1))
                              .result;
                      },
                      std::nullopt, "h", {}};
        c.checks.push_back({"einstein_verdict",
                            "engine verdict: Einstein exactly at h = 4 (= 4kb) with constant -1",
                            [](CaseRun& run) {
                                auto er = einstein_parameter_solve(run.metric());
                                auto expected =
                                    einstein_solutions({{Rational(4), Rational(-1)}});
                                return std::pair<std::string, std::string>(
                                    einstein_result_str(expected), einstein_result_str(er));
                            }});
        cases.push_back(std::move(c));
    }
    {
        CatalogCase c{"remark44:a=1,atilde=1,b=0,c=0,k=0,lambda=2",
                      "oscillator extension, translation branch (a = atilde = 1, lambda = 2)",
                      [] {
                          return remark44_extension(Rational(1), Rational(1), Rational(0),
                                                    Rational(0), Rational(0), Rational(2))
                              .result;
                      },
                      std::nullopt, "h", {}};
        c.checks.push_back({"einstein_verdict",
                            "engine verdict: Ricci-flat exactly at h = 6 (h = -6 does not zero"
                            " the residual)",
                            [](CaseRun& run) {
                                auto er = einstein_parameter_solve(run.metric());
                                auto expected =
                                    einstein_solutions({{Rational(6), Rational(0)}});
                                return std::pair<std::string, std::string>(
                                    einstein_result_str(expected), einstein_result_str(er));
                            }});
        cases.push_back(std::move(c));
    }

    return cases;
}

} // namespace detail

} // namespace metriclie::catalog
