// lpe: command-line front end.
//
//   lpe gen         seeded random instance corpus (or --fixtures DIR)
//   lpe count       G(R) for a region file
//   lpe volume      volume bounds for a region file
//   lpe check <id>  one inequality on an instance file
//   lpe verify      fixtures + seeded random suite, report and summary
//   lpe asymptotic  scaling study as CSV
//
// Exit codes: 0 success, 1 usage or input error, 2 indeterminate verdicts
// only, 3 at least one VIOLATED verdict.

#include "lpe/lpe.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitViolated = 3;

lpe::Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lpe::ParseError("cannot open " + path);
    try {
        return lpe::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw lpe::ParseError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::vector<unsigned> parse_schedule(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long v = std::stol(item);
        if (v <= 0) throw lpe::ParseError("r-schedule entries must be positive");
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw lpe::ParseError("empty r-schedule");
    return out;
}

std::string render(const std::vector<lpe::Verdict>& verdicts, const std::string& format) {
    if (format == "records") return lpe::render_records(verdicts);
    if (format == "csv") return lpe::render_csv(verdicts);
    return lpe::render_summary(verdicts);
}

int exit_code_for(const std::vector<lpe::Verdict>& verdicts) {
    bool indeterminate = false;
    for (const auto& v : verdicts) {
        if (lpe::verdict_ok(v)) continue;
        if (v.outcome == lpe::Outcome::Indeterminate) {
            indeterminate = true;
            continue;
        }
        return kExitViolated;  // a violation, or an expected failure that held
    }
    return indeterminate ? kExitIndeterminate : kExitOk;
}

lpe::RationalPolytope field_polytope(const lpe::Json& j, const char* name) {
    if (!j.contains(name)) throw lpe::ParseError(std::string("instance needs field ") + name);
    return lpe::polytope_from_json(j[name]);
}

unsigned long field_uint(const lpe::Json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_unsigned())
        throw lpe::ParseError(std::string("instance needs positive integer field ") + name);
    return j[name].get<unsigned long>();
}

std::optional<std::vector<std::size_t>> field_coords(const lpe::Json& j) {
    if (!j.contains("H")) return std::nullopt;
    std::vector<std::size_t> h;
    for (const auto& i : j["H"]) {
        if (!i.is_number_unsigned()) throw lpe::ParseError("H must list coordinate indices");
        h.push_back(i.get<std::size_t>());
    }
    return h;
}

lpe::Verdict run_check(const std::string& id, const lpe::Json& in, const lpe::CheckOptions& o) {
    using namespace lpe;
    if (id == "bm") return check_bm(field_polytope(in, "K"), field_polytope(in, "L"), rational_from_json(in.at("lambda")), o);
    if (id == "rs_diff_cube34") return check_rs_diff_cube34(field_polytope(in, "K"), o);
    if (id == "rs_diff_classical") return check_rs_diff_classical(field_polytope(in, "K"), o);
    if (id == "rs_sum") return check_rs_sum(field_polytope(in, "K"), field_polytope(in, "L"), o);
    if (id == "rs_diff_c") return check_rs_diff_c(field_polytope(in, "K"), o);
    if (id == "projsec" || id == "projsec_refined") {
        auto h = field_coords(in);
        std::size_t k = in.contains("k") ? field_uint(in, "k") : (h ? h->size() : 0);
        RationalPolytope body = field_polytope(in, "K");
        return id == "projsec" ? check_projsec(body, k, h, o) : check_projsec_refined(body, k, h, o);
    }
    if (id == "rs_weak") return check_rs_weak(field_polytope(in, "K"), field_polytope(in, "L"), o);
    if (id == "rs_diff_refined") return check_rs_diff_refined(field_polytope(in, "K"), field_polytope(in, "L"), o);
    if (id == "rs_diff_refined_sums") return check_rs_diff_refined_sums(field_polytope(in, "K"), o);
    if (id == "planar_comparison") return check_planar_comparison(field_polytope(in, "K"), o);
    if (id == "cube_noncomparability")
        return check_cube_noncomparability(rational_from_json(in.at("r")), field_uint(in, "n"), o).verdict;
    if (id == "gg_planar") {
        RationalPolytope p = field_polytope(in, "P");
        if (p.dim() != 2) throw ParseError("gg_planar needs a planar polygon");
        return check_gg_planar(LatticePolygon::from_points(p.generators()), o);
    }
    if (id == "berwald")
        return check_berwald(concave_from_json(in.at("f")), field_uint(in, "p"), field_uint(in, "q"), o);
    if (id == "hm_lemma")
        return check_hm_lemma(field_polytope(in, "K"), rational_from_json(in.at("m")), field_uint(in, "p"), o);
    throw ParseError("unknown check id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice point enumeration and discrete Rogers-Shephard-type inequality checks"};
    app.require_subcommand(1);

    std::uint64_t seed = lpe::kDefaultSeed;
    std::string dims_text = "1,2,3";
    std::size_t instances = 4;
    unsigned precision_cap = lpe::kDefaultPrecisionCap;
    unsigned resolution_cap = 256;
    bool interval_volumes = false;
    std::string r_schedule = "8,16,32,64";
    std::string format = "summary";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Root seed");
        cmd->add_option("--precision-cap", precision_cap, "Largest precision (bits) for radical comparisons");
        cmd->add_option("--resolution-cap", resolution_cap, "Largest cell resolution for volume bounds");
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"records", "summary", "csv"}));
        cmd->add_option("--out", out_path, "Output file (default: standard output)");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a seeded random instance corpus as JSON lines");
    std::string fixtures_dir;
    bool gen_origin = false, gen_corners = false;
    std::size_t gen_generators = 6;
    add_common(gen);
    gen->add_option("--n", dims_text, "Dimension");
    gen->add_option("--instances", instances, "Number of instances")->check(CLI::PositiveNumber);
    gen->add_option("--generators", gen_generators, "Generators per polytope")->check(CLI::PositiveNumber);
    gen->add_flag("--contain-origin", gen_origin, "Append the origin to every generator list");
    gen->add_flag("--contain-unit-cube-corners", gen_corners, "Append the corners of [-1,1]^n");
    gen->add_option("--fixtures", fixtures_dir, "Write the fixture corpus into this directory instead");

    // count
    auto* count = app.add_subcommand("count", "Print G(R) for a region file");
    std::string region_path;
    count->add_option("region", region_path, "Region JSON file")->required();

    // volume
    auto* volume = app.add_subcommand("volume", "Print volume bounds of the closure of a region");
    unsigned resolution = 16;
    bool cells_only = false;
    volume->add_option("region", region_path, "Region JSON file")->required();
    volume->add_option("--resolution", resolution, "Cell resolution r")->check(CLI::PositiveNumber);
    volume->add_flag("--cells", cells_only, "Always use cell counting");
    volume->add_option("--format", format, "Output format")->check(CLI::IsMember({"records", "summary", "csv"}));

    // check
    auto* check = app.add_subcommand("check", "Run one check on an instance file");
    std::string check_id, instance_path;
    add_common(check);
    check->add_option("id", check_id, "Check id")->required();
    check->add_option("instance", instance_path, "Instance JSON file")->required();
    check->add_flag("--interval-volumes", interval_volumes, "Bound volume ratios by cell counting");

    // verify
    auto* verify = app.add_subcommand("verify", "Run fixtures and the seeded random suite");
    std::vector<std::string> only;
    bool no_fixtures = false, no_random = false;
    add_common(verify);
    verify->add_option("--n", dims_text, "Comma-separated dimensions");
    verify->add_option("--instances", instances, "Random instances per check and dimension")->check(CLI::PositiveNumber);
    verify->add_option("--checks", only, "Restrict to these check ids");
    verify->add_flag("--no-fixtures", no_fixtures, "Skip the fixture corpus");
    verify->add_flag("--no-random", no_random, "Skip the random suite");
    verify->add_flag("--interval-volumes", interval_volumes, "Bound volume ratios by cell counting");

    // asymptotic
    auto* asym = app.add_subcommand("asymptotic", "Scaling study as CSV");
    std::string study = "rs_diff_cube34", k_path, l_path, fixture = "simplex";
    std::size_t asym_n = 2, section_dim = 1;
    add_common(asym);
    asym->add_option("--study", study, "Study id")->check(CLI::IsMember(lpe::asymptotic_study_ids()));
    asym->add_option("--r-schedule", r_schedule, "Comma-separated dilation factors");
    asym->add_option("--input", k_path, "Polytope JSON file for K");
    asym->add_option("--second", l_path, "Polytope JSON file for L (rs_weak)");
    asym->add_option("--fixture", fixture, "Built-in K when no input is given")->check(CLI::IsMember({"simplex", "box", "point"}));
    asym->add_option("--n", asym_n, "Dimension of the built-in fixture")->check(CLI::PositiveNumber);
    asym->add_option("--k", section_dim, "Section dimension (projsec)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    lpe::CheckOptions options;
    options.precision_cap = precision_cap;
    options.resolution_cap = resolution_cap;
    options.exact_volumes = !interval_volumes;

    try {
        if (*gen) {
            if (!fixtures_dir.empty()) {
                std::filesystem::create_directories(fixtures_dir);
                for (const auto& f : lpe::fixture_corpus())
                    emit(f.instance.dump(2) + "\n", (std::filesystem::path(fixtures_dir) / (f.name + ".json")).string());
                return kExitOk;
            }
            std::string text;
            const std::size_t n = std::stoul(dims_text);
            for (std::size_t i = 0; i < instances; ++i) {
                lpe::InstanceSpec spec;
                spec.seed = lpe::derive_seed(seed, "gen/" + std::to_string(n), i);
                spec.dim = n;
                spec.generator_count = gen_generators;
                spec.contain_origin = gen_origin;
                spec.contain_unit_cube_corners = gen_corners;
                text += lpe::Json{{"spec", lpe::to_json(spec)}, {"polytope", lpe::to_json(lpe::random_polytope(spec))}}.dump() + "\n";
            }
            emit(text, out_path);
            return kExitOk;
        }
        if (*count) {
            lpe::Region r = lpe::region_from_json(read_json(region_path));
            std::cout << lpe::lattice_count(r) << "\n";
            return kExitOk;
        }
        if (*volume) {
            lpe::Region r = lpe::region_from_json(read_json(region_path));
            lpe::VolumeInterval v =
                lpe::volume_bounds(r, resolution, cells_only ? lpe::VolumeMode::CellsOnly : lpe::VolumeMode::Auto);
            if (format == "records")
                std::cout << lpe::Json{{"lo", lpe::to_string(v.lo)}, {"hi", lpe::to_string(v.hi)},
                                       {"resolution", v.resolution}, {"exact", v.exact}}
                                 .dump()
                          << "\n";
            else
                std::cout << lpe::to_string(v.lo) << " " << lpe::to_string(v.hi) << (v.exact ? " exact" : "") << "\n";
            return kExitOk;
        }
        if (*check) {
            std::vector<lpe::Verdict> verdicts{run_check(check_id, read_json(instance_path), options)};
            emit(render(verdicts, format == "summary" ? "records" : format), out_path);
            return exit_code_for(verdicts);
        }
        if (*verify) {
            std::vector<lpe::Verdict> verdicts;
            if (!no_fixtures) verdicts = lpe::run_fixtures(options);
            if (!no_random) {
                lpe::SuiteConfig config;
                config.seed = seed;
                config.instances = instances;
                config.dims.clear();
                for (unsigned d : parse_schedule(dims_text)) config.dims.push_back(d);
                config.checks = only;
                config.options = options;
                auto random = lpe::run_random_suite(config);
                verdicts.insert(verdicts.end(), random.begin(), random.end());
            }
            if (!only.empty()) {
                std::vector<lpe::Verdict> kept;
                for (auto& v : verdicts)
                    if (std::find(only.begin(), only.end(), v.check_id) != only.end()) kept.push_back(std::move(v));
                verdicts = std::move(kept);
            }
            emit(render(verdicts, format), out_path);
            if (!out_path.empty() && format != "summary") std::cout << lpe::render_summary(verdicts);
            return exit_code_for(verdicts);
        }
        if (*asym) {
            lpe::RationalPolytope k = lpe::standard_simplex(asym_n);
            if (!k_path.empty())
                k = lpe::polytope_from_json(read_json(k_path));
            else if (fixture == "box")
                k = lpe::RationalPolytope::box(lpe::zero_point(asym_n), lpe::Point(asym_n, lpe::Rational(1)));
            else if (fixture == "point")
                k = lpe::RationalPolytope::origin(asym_n);
            std::optional<lpe::RationalPolytope> l;
            if (!l_path.empty()) l = lpe::polytope_from_json(read_json(l_path));
            lpe::AsymptoticTable t = lpe::asymptotic_study(k, l, study, parse_schedule(r_schedule), section_dim);
            emit(lpe::render_csv(t), out_path);
            return kExitOk;
        }
    } catch (const lpe::ParseError& e) {
        std::cerr << "lpe: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "lpe: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // invalid_argument / domain_error: instance violates a precondition
        std::cerr << "lpe: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "lpe: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
