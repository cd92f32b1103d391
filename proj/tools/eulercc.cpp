// Command-line front end: file I/O, report emission and exit codes.
//   0  identity holds / command succeeded
//   1  identity violated (both sides and witnesses are printed)
//   2  input, precondition or hypothesis error

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eulercc/eulercc.hpp"
#include "eulercc/json_io.hpp"

namespace fs = std::filesystem;
using namespace eulercc;

namespace {

struct Config
{
    std::string complex_path, alpha_path, f_path, g_path;
    std::string delta = "0";
    std::string side = "shriek";
    std::string eta_start = "1/8", eta_ratio = "1/8";
    std::optional<VertexId> vertex;
    std::uint64_t seed = 0;
    std::size_t stability = 3;
    std::size_t times = 1;
    bool json = false;
    std::string output;
    std::string fixture_name;
};

/// Paths that do not exist as given are looked up in $EULERCC_FIXTURE_DIR.
std::string resolve(const std::string& path)
{
    if (path.empty() || fs::exists(path))
        return path;
    if (const char* dir = std::getenv("EULERCC_FIXTURE_DIR")) {
        const fs::path p = fs::path(dir) / path;
        if (fs::exists(p))
            return p.string();
    }
    return path;
}

void require(const std::string& value, const char* flag)
{
    if (value.empty())
        throw InputError(std::string("missing required option ") + flag);
}

ComplexPtr read_complex(const Config& c)
{
    require(c.complex_path, "--complex");
    return std::make_shared<const EmbeddedComplex>(complex_from_json(read_json_file(resolve(c.complex_path))));
}

/// Every command except `validate` works on valid complexes only.
ComplexPtr load_complex(const Config& c)
{
    auto k = read_complex(c);
    const auto violations = validate(*k);
    if (!violations.empty())
        throw InputError(c.complex_path + " is not a valid complex: " + violations.front().message);
    return k;
}

ConstructibleFunction load_alpha(const Config& c, const ComplexPtr& k)
{
    require(c.alpha_path, "--alpha");
    return function_from_json(read_json_file(resolve(c.alpha_path)), k);
}

AffineFunction load_affine(const std::string& path, const char* flag)
{
    require(path, flag);
    return affine_from_json(read_json_file(resolve(path)));
}

VerifierOptions options(const Config& c)
{
    VerifierOptions o;
    o.seed = c.seed;
    o.eta_start = parse_rational(c.eta_start);
    o.eta_ratio = parse_rational(c.eta_ratio);
    o.stability_window = c.stability;
    if (o.eta_start <= 0 || o.eta_ratio <= 0 || o.eta_ratio >= 1)
        throw InputError("--eta-start must be positive and --eta-ratio must lie in (0, 1)");
    if (o.stability_window < 2)
        throw InputError("--stability must be at least 2");
    return o;
}

void emit(const Config& c, const Json& report, const std::string& human)
{
    if (!c.output.empty()) {
        std::ofstream out(c.output);
        if (!out)
            throw InputError("cannot write " + c.output);
        out << report.dump(2) << "\n";
    }
    if (c.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

std::string sides(const TheoremReport& r)
{
    return "lhs = " + std::to_string(r.lhs) + "\nrhs = " + std::to_string(r.rhs) + "\n" +
           (r.holds ? "holds\n" : "VIOLATED\n");
}

int theorem_exit(const Config& c, const TheoremReport& r)
{
    std::string human = sides(r);
    if (!r.holds)
        human += "witnesses:\n" + r.artifacts.dump(2) + "\n";
    emit(c, report_to_json(r), human);
    return r.holds ? 0 : 1;
}

int cmd_validate(const Config& c)
{
    const auto k = read_complex(c);
    const auto violations = validate(*k);
    Json list = Json::array();
    std::string human;
    static const char* kinds[] = {"closure", "affine_dependence", "geometric_consistency"};
    for (const auto& v : violations) {
        Json ids = Json::array();
        for (const auto& s : v.simplices)
            ids.push_back(simplex_key(s));
        const char* kind = kinds[static_cast<int>(v.kind)];
        list.push_back({{"kind", kind}, {"simplices", ids}, {"message", v.message}});
        human += std::string(kind) + ": " + v.message + "\n";
    }
    if (violations.empty())
        human = "valid: " + std::to_string(k->size()) + " simplices\n";
    emit(c, Json{{"valid", violations.empty()}, {"violations", list}}, human);
    return violations.empty() ? 0 : 1;
}

int cmd_euler(const Config& c)
{
    const auto k = load_complex(c);
    const auto a = load_alpha(c, k);
    const auto value = euler_integral(a);
    emit(c, Json{{"euler_integral", value}}, std::to_string(value) + "\n");
    return 0;
}

int cmd_dual(const Config& c)
{
    const auto k = load_complex(c);
    const Json out = function_to_json(dual(load_alpha(c, k)));
    emit(c, out, out.dump(2) + "\n");
    return 0;
}

int cmd_cc(const Config& c)
{
    const auto k = load_complex(c);
    const LagrangianCycleView cc(load_alpha(c, k));
    Json strata = Json::array();
    Json support = Json::array();
    std::size_t nonzero = 0, total = 0;
    std::string human;
    for (SimplexId id = 0; id < k->size(); ++id) {
        const auto s = k->stratum(id);
        Json chambers = Json::array();
        bool any = false;
        for (const auto& ch : enumerate_chambers(*k, s)) {
            const auto m = cc.multiplicity_for_signs(s, ch.sign_vector);
            Json sv = Json::object();
            for (const auto& [v, sg] : ch.sign_vector)
                sv[std::to_string(v)] = sg;
            chambers.push_back({{"sign_vector", sv}, {"witness", to_json(ch.witness)}, {"multiplicity", m}});
            ++total;
            if (m != 0) {
                ++nonzero;
                any = true;
                human += "{" + simplex_key(s.simplex) + "} covector (" +
                         LagrangianCycleView::describe(ch.witness) + ") multiplicity " +
                         std::to_string(m) + "\n";
            }
        }
        if (any)
            support.push_back(simplex_key(s.simplex));
        strata.push_back({{"stratum", simplex_key(s.simplex)}, {"dim", s.dim}, {"chambers", chambers}});
    }
    human += std::to_string(nonzero) + " of " + std::to_string(total) + " chambers carry nonzero multiplicity\n";
    emit(c, Json{{"strata", strata},
                 {"support", {{"strata", support}, {"nonzero_chambers", nonzero}, {"chambers", total}}}},
         human);
    return 0;
}

int cmd_global_index(const Config& c)
{
    const auto k = load_complex(c);
    return theorem_exit(c, global_index(load_alpha(c, k), c.seed));
}

int cmd_local_index(const Config& c)
{
    const auto k = load_complex(c);
    const auto a = load_alpha(c, k);
    if (c.vertex)
        return theorem_exit(c, local_index(a, *c.vertex, options(c)));
    // every vertex
    Json all = Json::array();
    std::string human;
    bool holds = true;
    for (VertexId v = 0; v < k->vertex_count(); ++v) {
        if (!k->find({v}))
            continue;
        const auto r = local_index(a, v, options(c));
        holds &= r.holds;
        Json j = report_to_json(r);
        j["vertex"] = v;
        all.push_back(std::move(j));
        human += "vertex " + std::to_string(v) + ": alpha = " + std::to_string(r.lhs) +
                 ", local index = " + std::to_string(r.rhs) + (r.holds ? "" : "  VIOLATED") + "\n";
        if (!r.holds)
            human += r.artifacts.dump(2) + "\n";
    }
    emit(c, Json{{"holds", holds}, {"vertices", all}}, human);
    return holds ? 0 : 1;
}

int cmd_theorem1(const Config& c)
{
    const auto k = load_complex(c);
    const auto a = load_alpha(c, k);
    return theorem_exit(c, verify_theorem1(a, load_affine(c.f_path, "--f"), options(c)));
}

int cmd_boundary(const Config& c)
{
    const auto k = load_complex(c);
    const auto a = load_alpha(c, k);
    const auto g = load_affine(c.g_path, "--g");
    ExtensionSide side;
    if (c.side == "shriek")
        side = ExtensionSide::shriek;
    else if (c.side == "star")
        side = ExtensionSide::star;
    else
        throw InputError("--side must be shriek or star");
    const auto r = boundary_estimate_check(a, g, parse_rational(c.delta), side, c.seed);
    std::string human = std::to_string(r.chambers_checked) + " chambers, " +
                        std::to_string(r.witnesses_checked) + " witnesses checked\n";
    for (const auto& v : r.violations)
        human += "violation at {" + simplex_key(v.stratum) + "}: covector (" +
                 LagrangianCycleView::describe(v.covector) + ") multiplicity " +
                 std::to_string(v.multiplicity) + "\n";
    human += r.holds ? "holds\n" : "VIOLATED\n";
    emit(c, boundary_report_json(r), human);
    return r.holds ? 0 : 1;
}

int cmd_subdivide(const Config& c)
{
    const auto k = load_complex(c);
    Subdivision sub;
    if (!c.g_path.empty()) {
        const auto g = load_affine(c.g_path, "--g");
        sub = subdivide_along_hyperplane(*k, g.linear, parse_rational(c.delta) - g.constant);
    } else {
        sub = barycentric_subdivide(*k, c.times);
    }
    Json ancestry = Json::object();
    for (SimplexId i = 0; i < sub.complex->size(); ++i)
        ancestry[simplex_key(sub.complex->simplex(i))] = simplex_key(k->simplex(sub.ancestry[i]));
    Json out = complex_to_json(*sub.complex);
    out["ancestry"] = ancestry;
    const std::string human = std::to_string(sub.complex->size()) + " simplices\n";
    emit(c, out, c.output.empty() ? out.dump(2) + "\n" : human);
    return 0;
}

int cmd_fixtures_list(const Config& c)
{
    Json names = Json::array();
    std::string human;
    for (const auto& fx : builtin_fixtures()) {
        names.push_back(fx.name);
        human += fx.name + " (" + std::to_string(fx.complex->size()) + " simplices)\n";
    }
    emit(c, Json{{"fixtures", names}}, human);
    return 0;
}

/// Print a fixture, or with --output DIR write DIR/<name>/{complex,function,morse input}.json.
int cmd_fixtures_dump(const Config& c)
{
    const auto fx = builtin_fixture(c.fixture_name);
    if (c.output.empty()) {
        std::cout << fixture_to_json(fx).dump(2) << "\n";
        return 0;
    }
    const fs::path dir = fs::path(c.output) / fx.name;
    fs::create_directories(dir);
    auto write = [&](const std::string& file, const Json& j) {
        std::ofstream out(dir / file);
        if (!out)
            throw InputError("cannot write " + (dir / file).string());
        out << j.dump(2) << "\n";
    };
    write("complex.json", complex_to_json(*fx.complex));
    for (const auto& [name, f] : fx.functions)
        write(name + ".json", function_to_json(f));
    for (const auto& [name, f] : fx.morse_inputs)
        write(name + ".json", affine_to_json(f));
    write("fixture.json", fixture_to_json(fx));
    std::cout << "wrote " << dir.string() << "\n";
    return 0;
}

void report_error(const Config& c, const char* kind, const std::string& message, const std::string& witness)
{
    std::cerr << "error (" << kind << "): " << message << "\n";
    if (!witness.empty())
        std::cerr << "witness: " << witness << "\n";
    if (c.json) {
        Json j{{"error", kind}, {"message", message}};
        if (!witness.empty())
            j["witness"] = witness;
        std::cout << j.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Euler calculus and characteristic cycles on embedded simplicial complexes"};
    app.require_subcommand(1);
    Config c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", c.json, "print the JSON report instead of a summary");
        sub->add_option("--output,-o", c.output, "also write the JSON report to this file");
    };
    auto add_complex = [&](CLI::App* sub, bool alpha) {
        sub->add_option("--complex", c.complex_path, "complex JSON file")->required();
        if (alpha)
            sub->add_option("--alpha", c.alpha_path, "constructible function JSON file")->required();
        add_common(sub);
    };
    auto add_schedule = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "seed for perturbations (default 0)");
        sub->add_option("--eta-start", c.eta_start, "first perturbation size p/q");
        sub->add_option("--eta-ratio", c.eta_ratio, "ratio between successive sizes p/q");
        sub->add_option("--stability", c.stability, "consecutive equal counts required");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check closure, independence and embedding");
    add_complex(validate_cmd, false);
    auto* euler_cmd = app.add_subcommand("euler", "Euler integral of alpha");
    add_complex(euler_cmd, true);
    auto* dual_cmd = app.add_subcommand("dual", "dual constructible function");
    add_complex(dual_cmd, true);
    auto* cc_cmd = app.add_subcommand("cc", "characteristic cycle multiplicities per chamber");
    add_complex(cc_cmd, true);
    auto* global_cmd = app.add_subcommand("global-index", "Euler integral vs. stratified Morse sum");
    add_complex(global_cmd, true);
    global_cmd->add_option("--seed", c.seed, "seed for the convex Morse function");
    auto* local_cmd = app.add_subcommand("local-index", "reconstruct alpha at vertices");
    add_complex(local_cmd, true);
    local_cmd->add_option("--vertex", c.vertex, "vertex id (default: every vertex)");
    add_schedule(local_cmd);
    auto* theorem_cmd = app.add_subcommand("theorem1", "both sides of the intersection formula");
    add_complex(theorem_cmd, true);
    theorem_cmd->add_option("--f", c.f_path, "affine function JSON file")->required();
    add_schedule(theorem_cmd);
    auto* boundary_cmd = app.add_subcommand("boundary-estimate", "support estimate for an extension across {g = delta}");
    add_complex(boundary_cmd, true);
    boundary_cmd->add_option("--g", c.g_path, "affine function JSON file")->required();
    boundary_cmd->add_option("--delta", c.delta, "level p/q");
    boundary_cmd->add_option("--side", c.side, "shriek or star")->check(CLI::IsMember({"shriek", "star"}));
    boundary_cmd->add_option("--seed", c.seed, "seed for extra witnesses");
    auto* subdivide_cmd = app.add_subcommand("subdivide", "barycentric or hyperplane subdivision");
    add_complex(subdivide_cmd, false);
    subdivide_cmd->add_option("--times", c.times, "barycentric subdivisions (default 1)");
    subdivide_cmd->add_option("--g", c.g_path, "cut along {g = delta} instead");
    subdivide_cmd->add_option("--delta", c.delta, "level p/q for --g");
    auto* fixtures_cmd = app.add_subcommand("fixtures", "builtin fixtures");
    fixtures_cmd->require_subcommand(1);
    auto* list_cmd = fixtures_cmd->add_subcommand("list", "list builtin fixtures");
    list_cmd->add_flag("--json", c.json, "print JSON");
    auto* dump_cmd = fixtures_cmd->add_subcommand("dump", "print a fixture or write its files");
    dump_cmd->add_option("name", c.fixture_name, "fixture name")->required();
    dump_cmd->add_option("--output,-o", c.output, "directory to write <name>/*.json into");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(c);
        if (*euler_cmd)
            return cmd_euler(c);
        if (*dual_cmd)
            return cmd_dual(c);
        if (*cc_cmd)
            return cmd_cc(c);
        if (*global_cmd)
            return cmd_global_index(c);
        if (*local_cmd)
            return cmd_local_index(c);
        if (*theorem_cmd)
            return cmd_theorem1(c);
        if (*boundary_cmd)
            return cmd_boundary(c);
        if (*subdivide_cmd)
            return cmd_subdivide(c);
        if (*list_cmd)
            return cmd_fixtures_list(c);
        if (*dump_cmd)
            return cmd_fixtures_dump(c);
    } catch (const TransversalityError& e) {
        report_error(c, "transversality", e.what(), e.witness());
    } catch (const HypothesisError& e) {
        report_error(c, "hypothesis", e.what(), e.witness());
    } catch (const DegeneracyError& e) {
        report_error(c, "degeneracy", e.what(), "");
    } catch (const UnstableLevelError& e) {
        report_error(c, "unstable-level", e.what(), "");
    } catch (const BoundaryCollisionError& e) {
        report_error(c, "boundary-collision", e.what(), "");
    } catch (const ConvergenceError& e) {
        report_error(c, "convergence", e.what(), "");
    } catch (const InputError& e) {
        report_error(c, "input", e.what(), "");
    } catch (const Json::exception& e) {
        report_error(c, "input", e.what(), "");
    }
    return 2;
}
