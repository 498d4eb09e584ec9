/*
   Copyright 2026 The outerweb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "outerweb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "outerweb/cloud_io.hpp"
#include "outerweb/errors.hpp"
#include "outerweb/expr.hpp"
#include "outerweb/family.hpp"
#include "outerweb/fieldid.hpp"
#include "outerweb/manifest.hpp"
#include "outerweb/periods.hpp"
#include "outerweb/svg.hpp"

namespace ow {

using nlohmann::json;

namespace {

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_double(const std::string& s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("not a number: " + s);
    }
}

mpq_class parse_rational(const std::string& s) {
    static const std::regex re(R"(^\s*[-+]?\d+(/\d+)?\s*$)");
    if (!std::regex_match(s, re)) throw DomainError("not a rational: " + s);
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    if (t[0] == '+') t.erase(0, 1);
    mpq_class q(t);
    if (q.get_den() == 0) throw DomainError("zero denominator in " + s);
    q.canonicalize();
    return q;
}

bool is_rational_text(const std::string& s) {
    static const std::regex re(R"(^\s*[-+]?\d+(/\d+)?\s*$)");
    return std::regex_match(s, re);
}

json exact_and_float(const CycloNum& a) {
    json j = cyclo_to_json(a);
    j["value"] = to_double(a);
    return j;
}

json point_json(const ExactPoint& p) { return {exact_and_float(p.x), exact_and_float(p.y)}; }

json tile_json(const Tile& t) {
    json v = json::array();
    for (const auto& p : t.vertices()) v.push_back({to_double(p.x), to_double(p.y)});
    return {{"label", t.label}, {"gon", t.gon},           {"center", point_json(t.center)},
            {"height", exact_and_float(t.height)}, {"vertices", v}};
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw DomainError("cannot open " + path + " for writing");
    f << text;
}

int cmd_family(int N, const std::string& json_out, std::ostream& out) {
    Tile ngon = build_ngon(N);
    json j;
    j["N"] = N;
    j["ngon"] = tile_json(ngon);
    json stars = json::array();
    for (const auto& p : star_points(ngon).right) stars.push_back(point_json(p));
    j["star_points_right"] = stars;
    if (N >= 5) {
        Scales sc = heights_and_scales(N);
        j["M"] = sc.M;
        j["genscale"] = exact_and_float(sc.genscale);
        json members = json::array();
        auto ff = first_family(N);
        for (int k = 1; k <= ff.max_index(); ++k) {
            json m = tile_json(ff.member(k));
            m["k"] = k;
            m["scale"] = exact_and_float(sc.scale[k]);
            members.push_back(m);
        }
        j["first_family"] = members;
    }
    if (!json_out.empty()) {
        write_text(json_out, j.dump(2) + "\n", out);
        return kExitOk;
    }
    out << "N " << N << "\n";
    out << "gon " << ngon.gon << " apothem 1 vertex radius " << fmt(to_double(ngon.vertex_radius())) << "\n";
    if (N < 5) return kExitOk;
    Scales sc = heights_and_scales(N);
    auto ff = first_family(N);
    out << "M " << sc.M << "\n";
    out << "GenScale " << fmt(to_double(sc.genscale)) << "\n";
    out << "k gon center_x center_y height scale\n";
    for (int k = 1; k <= ff.max_index(); ++k) {
        Tile t = ff.member(k);
        out << "S[" << k << "] " << t.gon << " " << fmt(to_double(t.center.x)) << " " << fmt(to_double(t.center.y))
            << " " << fmt(to_double(t.height)) << " " << fmt(to_double(sc.scale[k])) << "\n";
    }
    return kExitOk;
}

std::pair<long, long> parse_range(const std::string& s) {
    static const std::regex re(R"(^(\d+)\.\.(\d+)$)");
    std::smatch m;
    if (std::regex_match(s, m, re)) {
        long a = std::stol(m[1]), b = std::stol(m[2]);
        if (a < 1 || b < a) throw DomainError("range must satisfy 1 <= k1 <= k2, got " + s);
        return {a, b};
    }
    if (std::regex_match(s, std::regex(R"(^\d+$)"))) {
        long a = std::stol(s);
        if (a < 1) throw DomainError("k must be >= 1");
        return {a, a};
    }
    throw DomainError("expected k1..k2, got " + s);
}

int cmd_periods(const std::string& family, long n, const std::string& krange, const std::string& p1,
                const std::string& p2, std::ostream& out) {
    auto [k1, k2] = parse_range(krange);
    if (n < 1) throw DomainError("--n must be positive");
    std::string name;
    RecurrenceSpec spec;
    if (family == "D") {
        name = "D";
        spec = d_spec(n);
    } else if (family == "M") {
        name = "M";
        spec = m_spec(n);
    } else if (family == "custom") {
        if (p1.empty() || p2.empty()) throw DomainError("--family custom needs --p1 and --p2");
        name = "R";
        spec.n = n;
        spec.p1 = mpz_class(p1);
        spec.p2 = mpz_class(p2);
    } else {
        throw DomainError("--family must be D, M or custom");
    }
    out << "Table[" << name << "[" << n << ",k], {k," << k1 << "," << k2 << "}] = {";
    for (long k = k1; k <= k2; ++k) {
        mpz_class v = family == "D" ? d_period(n, k) : family == "M" ? m_period(n, k) : recurrence_solve(spec, k);
        out << (k > k1 ? ", " : "") << v.get_str();
    }
    out << "}\n";
    return kExitOk;
}

struct OrbitSeed {
    bool exact = true;
    ExactPoint p;
    FloatPoint f;
    std::optional<ExactPoint> center;
};

OrbitSeed resolve_seed(int N, const std::string& text, const std::string& offset) {
    static const std::regex named(R"(^(cS|cD|cM|cDS)\[(\d+)\]$)");
    std::smatch m;
    OrbitSeed s;
    if (std::regex_match(text, m, named)) {
        const std::string kind = m[1];
        const int k = std::stoi(m[2]);
        if (k < 1) throw DomainError("tile index must be >= 1");
        Tile t;
        if (kind == "cS") {
            auto ff = first_family(N);
            if (k > ff.max_index()) throw DomainError("S[" + std::to_string(k) + "] does not exist for N=" + std::to_string(N));
            t = ff.member(k);
        } else if (kind == "cDS") {
            auto f = s2_family(N);
            if (k > f.right.max_index()) throw DomainError("DS[" + std::to_string(k) + "] does not exist");
            t = f.ds(k, +1);
        } else {
            auto ladder = dk_ladder(N, k);
            const auto& lp = ladder.back();
            if (kind == "cD") {
                t.center = lp.cD;
                t.height = lp.hD;
            } else {
                t.center = lp.cM;
                t.height = k == 1 ? first_family(N).member(1).height : ladder[k - 2].hD * heights_and_scales(N).hS[1];
            }
        }
        s.p = t.center;
        s.center = t.center;
        if (!offset.empty()) {
            auto parts = split(offset, ',');
            if (parts.size() != 2) throw DomainError("--offset needs a,b");
            s.p = {t.center.x + t.height * parse_rational(parts[0]), t.center.y + t.height * parse_rational(parts[1])};
        }
        s.f = {to_double(s.p.x), to_double(s.p.y)};
        return s;
    }
    if (!offset.empty()) throw DomainError("--offset applies to named seeds only");
    auto parts = split(text, ',');
    if (parts.size() != 2) throw DomainError("seed must be cS[k], cD[k], cM[k], cDS[k] or x,y; got " + text);
    if (is_rational_text(parts[0]) && is_rational_text(parts[1])) {
        s.p = {CycloNum(1, parse_rational(parts[0])), CycloNum(1, parse_rational(parts[1]))};
        s.f = {to_double(s.p.x), to_double(s.p.y)};
    } else {
        s.exact = false;
        s.f = {parse_double(parts[0]), parse_double(parts[1])};
        mpq_class qx(s.f.x), qy(s.f.y);
        s.p = {CycloNum(1, qx), CycloNum(1, qy)};
    }
    return s;
}

int cmd_orbit(int N, const std::string& seed_text, long long limit, const std::string& dcenter,
              const std::string& offset, const std::string& mode, bool inverse, std::ostream& out) {
    if (N < 3) throw DomainError("N must be >= 3");
    if (limit < 1) throw DomainError("--limit must be positive");
    OrbitSeed s = resolve_seed(N, seed_text, offset);
    bool exact = mode.empty() ? s.exact : mode == "exact";
    if (!mode.empty() && mode != "exact" && mode != "float") throw DomainError("--mode must be exact or float");
    std::optional<ExactPoint> center;
    if (dcenter == "auto") {
        if (!s.center) throw DomainError("--doubling-center auto needs a named seed; pass x,y instead");
        center = s.center;
    } else if (!dcenter.empty()) {
        auto parts = split(dcenter, ',');
        if (parts.size() != 2) throw DomainError("--doubling-center needs auto or x,y");
        if (is_rational_text(parts[0]) && is_rational_text(parts[1]))
            center = ExactPoint(CycloNum(1, parse_rational(parts[0])), CycloNum(1, parse_rational(parts[1])));
        else
            center = ExactPoint(CycloNum(1, mpq_class(parse_double(parts[0]))),
                                CycloNum(1, mpq_class(parse_double(parts[1]))));
    }
    OrbitResult r;
    if (exact) {
        r = find_period(s.p, N, limit, center, inverse);
    } else {
        std::optional<FloatPoint> fc;
        if (center) fc = FloatPoint{to_double(center->x), to_double(center->y)};
        r = find_period_float(s.f, inverse ? MapSpec::tau_inverse(N) : MapSpec::tau(N), limit, fc);
    }
    out << "N " << N << "\n";
    out << "seed " << seed_text << " = (" << fmt(s.f.x) << ", " << fmt(s.f.y) << ")\n";
    out << "map " << (inverse ? "tau-inverse" : "tau") << "\n";
    out << "mode " << (exact ? "exact" : "float") << "\n";
    out << "terminated " << termination_name(r.terminated_by) << "\n";
    out << "iterations " << r.iterations_used << "\n";
    if (r.period) out << "period " << *r.period << "\n";
    if (center) {
        out << "doubling " << (r.doubling ? "yes" : "no") << "\n";
        if (r.half_period) out << "half_period " << *r.half_period << "\n";
    }
    if (r.terminated_by == Termination::Singular) throw SingularPoint("orbit reached a singular point");
    if (r.terminated_by == Termination::Limit)
        throw LimitExceeded("no return within " + std::to_string(limit) + " iterations");
    return kExitOk;
}

int cmd_identify(int N, const std::string& value, const std::string& generator, int degree, int digits,
                 std::ostream& out) {
    CycloNum g;
    if (generator == "genscale")
        g = genscale(N);
    else if (generator == "lambda")
        g = lambda(N);
    else
        throw DomainError("--generator must be genscale or lambda");
    if (degree <= 0) degree = minimal_poly(g, 200).degree() - 1;
    if (degree < 1) throw DomainError("generator is rational; nothing to identify");
    IdentifyRequest req;
    req.generator = g;
    req.degree = degree;
    req.precision_digits = digits;
    static const std::regex decimal(R"(^\s*[-+]?\d*\.\d+([eE][-+]?\d+)?\s*$)");
    if (std::regex_match(value, decimal)) {
        int sig = 0;
        for (char c : value) {
            if (c == 'e' || c == 'E') break;
            if (std::isdigit(static_cast<unsigned char>(c))) ++sig;
        }
        BigFloat v(digits_to_bits(sig));
        mpfr_set_str(v.raw(), value.c_str(), 10, MPFR_RNDN);
        req.decimal = v;
        if (digits == 0) req.precision_digits = std::min(30 * (degree + 1), sig);
    } else {
        req.value = eval_expr(N, value);
    }
    auto r = identify(req);
    out << r.poly.to_string() << "\n";
    out << "degree " << degree << " generator " << generator << " digits " << r.digits_used << " verified "
        << (r.verified_exact ? "exact" : "numeric") << " residual " << r.residual.to_string(3) << "\n";
    return kExitOk;
}

Crop parse_crop(const std::string& s) {
    if (s.empty()) return Crop::everything();
    auto parts = split(s, ',');
    if (parts.size() != 4) throw DomainError("--crop needs x0,y0,x1,y1");
    Crop c{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]), parse_double(parts[3])};
    if (!(c.x1 >= c.x0) || !(c.y1 >= c.y0)) throw DomainError("--crop needs x0 <= x1 and y0 <= y1");
    return c;
}

int write_web(const WebRun& run, const std::string& out_path, const std::string& manifest_path,
              const std::vector<std::string>& cmdline, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    PointCloud pc = web_generate(run.N, run.map, run.options);
    save_cloud(pc, out_path);
    RunManifest m = web_manifest(run, cmdline);
    m.iteration_budget = pc.total;
    m.outputs.push_back(record_output(out_path));
    m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_manifest(m, manifest_path);
    out << "points " << pc.points.size() << " in crop " << pc.recorded << " steps " << pc.total << "\n";
    out << "cloud " << out_path << " sha256 " << m.outputs.back().sha256 << "\n";
    out << "manifest " << manifest_path << "\n";
    return kExitOk;
}

int cmd_render(const std::string& scene_path, const std::string& svg_path, const std::string& manifest_path,
               const std::vector<std::string>& cmdline, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    std::ifstream in(scene_path);
    if (!in) throw DomainError("cannot open " + scene_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(scene_path + ": " + e.what());
    }
    std::string base = std::filesystem::path(scene_path).parent_path().string();
    SceneSpec scene = scene_from_json(j, base.empty() ? "." : base);
    write_text(svg_path, render_svg(scene), out);
    if (svg_path == "-") return kExitOk;
    RunManifest m;
    m.command_line = cmdline;
    m.config = {{"kind", "render"}, {"scene", j}, {"base_dir", base.empty() ? "." : base}};
    m.outputs.push_back(record_output(svg_path));
    m.map = "scene";
    m.mode = "float";
    m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_manifest(m, manifest_path.empty() ? svg_path + ".json" : manifest_path);
    return kExitOk;
}

int cmd_replay(const std::string& manifest_path, const std::string& out_override, std::ostream& out) {
    RunManifest m = load_manifest(manifest_path);
    if (m.outputs.empty()) throw DomainError("manifest lists no outputs");
    const OutputRecord& rec = m.outputs.front();
    std::string target = out_override.empty() ? rec.path : out_override;
    if (m.config.value("kind", std::string("web")) == "render") {
        SceneSpec scene = scene_from_json(m.config.at("scene"), m.config.value("base_dir", std::string(".")));
        write_text(target, render_svg(scene), out);
    } else {
        save_cloud(replay_web(m), target);
    }
    std::string h = sha256_file(target);
    out << target << " sha256 " << h << "\n";
    if (h != rec.sha256) throw DomainError("replayed output differs from the manifest hash " + rec.sha256);
    out << "identical to manifest\n";
    return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Outer billiards webs, families, periods and field identification"};
    app.require_subcommand(1);
    std::vector<std::string> cmdline = args;
    cmdline.insert(cmdline.begin(), "outerweb");

    int N = 0;
    std::string json_out;
    auto* family = app.add_subcommand("family", "First Family, scales and star points of the regular N-gon");
    family->add_option("N", N, "Number of sides")->required();
    family->add_option("--json", json_out, "Write JSON to a file, or - for stdout");

    std::string map = "tau", crop, mode, out_path, manifest_path;
    int samples = 100, k_prime = 1;
    long long iters = 1000;
    uint64_t rng_seed = 1;
    bool no_inverse = false, keep_all = false;
    auto* web = app.add_subcommand("web", "Generate a web point cloud");
    web->add_option("N", N, "Number of sides")->required();
    web->add_option("--map", map, "tau, tau-inverse, dc or df");
    web->add_option("--samples", samples, "Seeds per edge");
    web->add_option("--iters", iters, "Iterations per seed");
    web->add_option("--crop", crop, "x0,y0,x1,y1");
    web->add_option("--mode", mode, "exact or float");
    web->add_option("--out", out_path, "PGW1 output file")->required();
    web->add_option("--manifest", manifest_path, "Manifest path (default: <out>.json)");
    web->add_option("--rng-seed", rng_seed, "Seed sampling RNG seed");
    web->add_option("--k-prime", k_prime, "Df angle 2 pi k'/N");
    web->add_flag("--no-inverse", no_inverse, "Skip the inverse-map pass");
    web->add_flag("--keep-all", keep_all, "Record points outside the crop");

    std::string seed, dcenter, offset;
    long long limit = 10000000;
    bool inverse = false;
    auto* orbit = app.add_subcommand("orbit", "Period of a tau orbit");
    orbit->add_option("N", N, "Number of sides")->required();
    orbit->add_option("--seed", seed, "cS[k], cD[k], cM[k], cDS[k] or x,y")->required();
    orbit->add_option("--limit", limit, "Iteration limit");
    orbit->add_option("--doubling-center", dcenter, "auto (named seeds) or x,y");
    orbit->add_option("--offset", offset, "Shift a named seed by (a,b) tile heights");
    orbit->add_option("--mode", mode, "exact or float");
    orbit->add_flag("--inverse", inverse, "Iterate the inverse map");

    std::string pfamily = "D", krange, p1, p2;
    long n = 0;
    auto* periods = app.add_subcommand("periods", "Period tables");
    periods->add_option("--family", pfamily, "D, M or custom");
    periods->add_option("--n", n, "n = N/2")->required();
    periods->add_option("--k", krange, "k1..k2")->required();
    periods->add_option("--p1", p1, "First initial value (custom)");
    periods->add_option("--p2", p2, "Second initial value (custom)");

    std::string value, generator = "genscale";
    int degree = 0, digits = 0;
    auto* ident = app.add_subcommand("identify", "Express a value as a polynomial in a field generator");
    ident->add_option("--n", N, "Number of sides")->required();
    ident->add_option("--value", value, "Expression (e.g. hPx/hS[2]) or a decimal number")->required();
    ident->add_option("--generator", generator, "genscale or lambda");
    ident->add_option("--degree", degree, "Polynomial degree (default: field degree - 1)");
    ident->add_option("--digits", digits, "Working digits (default 30 (d+1))");

    std::string scene_path, svg_path;
    auto* render = app.add_subcommand("render", "Render a scene to SVG");
    render->add_option("scene", scene_path, "Scene JSON")->required();
    render->add_option("--svg", svg_path, "SVG output, or - for stdout")->required();
    render->add_option("--manifest", manifest_path, "Manifest path (default: <svg>.json)");

    auto* replay = app.add_subcommand("replay", "Regenerate a manifest's output and compare hashes");
    replay->add_option("manifest", manifest_path, "Manifest JSON")->required();
    replay->add_option("--out", out_path, "Write here instead of the recorded path");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kExitDomain;
    }

    try {
        if (*family) return cmd_family(N, json_out, out);
        if (*web) {
            WebRun run;
            run.N = N;
            if (N < 3) throw DomainError("N must be >= 3");
            MapKind k = parse_map(map);
            run.map = k == MapKind::Tau          ? MapSpec::tau(N)
                      : k == MapKind::TauInverse ? MapSpec::tau_inverse(N)
                      : k == MapKind::Dc         ? MapSpec::dc(N)
                                                 : MapSpec::df(N, k_prime);
            if (samples < 1) throw DomainError("--samples must be positive");
            if (iters < 0) throw DomainError("--iters must be >= 0");
            run.options.samples_per_edge = samples;
            run.options.iters = iters;
            run.options.crop = parse_crop(crop);
            if (!mode.empty() && mode != "exact" && mode != "float") throw DomainError("--mode must be exact or float");
            run.options.mode = mode == "exact" ? ArithMode::Exact : ArithMode::Float;
            run.options.with_inverse = !no_inverse;
            run.options.rng_seed = rng_seed;
            run.options.keep_all = keep_all;
            return write_web(run, out_path, manifest_path.empty() ? out_path + ".json" : manifest_path, cmdline,
                             out);
        }
        if (*orbit) return cmd_orbit(N, seed, limit, dcenter, offset, mode, inverse, out);
        if (*periods) return cmd_periods(pfamily, n, krange, p1, p2, out);
        if (*ident) return cmd_identify(N, value, generator, degree, digits, out);
        if (*render) return cmd_render(scene_path, svg_path, manifest_path, cmdline, out);
        if (*replay) return cmd_replay(manifest_path, out_path, out);
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}

}  // namespace ow
