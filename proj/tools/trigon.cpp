#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigon/orbits.hpp"
#include "trigon/render.hpp"
#include "trigon/topology.hpp"
#include "trigon/verify.hpp"

using namespace trigon;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct Config {
    int p = 0;
    int q = 0;
    std::string r = "";
    int depth = 5;
    int max_blocks = 6;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
    std::vector<std::string> overlays;
    std::string word;
    std::optional<double> eta;
    std::optional<double> xi;
};

TriangleParams params_of(const Config& c) {
    int r = 0;
    if (c.r == "inf" || c.r == "infinity") {
        r = kInfinite;
    } else {
        std::size_t used = 0;
        try {
            r = std::stoi(c.r, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != c.r.size() || r < 2) throw Error(ErrorCode::InvalidArgument, "r must be an integer >= 2 or 'inf'");
    }
    return canonicalize(c.p, c.q, r);
}

void emit(const Config& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

ordered_json r_json(const TriangleParams& t) { return t.r_infinite() ? ordered_json("inf") : ordered_json(t.r); }

int cmd_knead(const Config& c) {
    const TriangleParams t = params_of(c);
    const KneadingSet table = normalized(closed_form_kneading(t));
    const KneadingSet geo = geometric_kneading(TriangleGroup(t));
    const bool match = table == geo;
    auto word = [&](const EPWord& w) { return to_string(relabel(w, t)); };
    if (c.format == "text") {
        std::string s = "params " + t.label() + "\n";
        const char* names[] = {"u_L", "u_R", "v_L", "v_R"};
        const EPWord* tw[] = {&table.u_L, &table.u_R, &table.v_L, &table.v_R};
        const EPWord* gw[] = {&geo.u_L, &geo.u_R, &geo.v_L, &geo.v_R};
        for (int i = 0; i < 4; ++i)
            s += std::string(names[i]) + " = " + word(*tw[i]) + "   geometric " + word(*gw[i]) + "\n";
        s += std::string("verdict ") + (match ? "MATCH" : "DIFF") + "\n";
        emit(c, s);
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["params"] = {{"p", t.p}, {"q", t.q}, {"r", r_json(t)}};
        j["table"] = {{"u_L", word(table.u_L)}, {"u_R", word(table.u_R)}, {"v_L", word(table.v_L)}, {"v_R", word(table.v_R)}};
        j["geometric"] = {{"u_L", word(geo.u_L)}, {"u_R", word(geo.u_R)}, {"v_L", word(geo.v_L)}, {"v_R", word(geo.v_R)}};
        j["verdict"] = match ? "MATCH" : "DIFF";
        emit(c, j.dump(2));
    }
    return match ? 0 : kFailed;
}

int cmd_orbits(const Config& c) {
    const TriangleParams t = params_of(c);
    const CodingContext ctx(t);
    emit(c, orbits_json(enumerate_orbits(ctx, c.max_blocks), t));
    return 0;
}

/// Axis of the holonomy of a word, as (repelling, attracting).
std::pair<BoundaryPoint, BoundaryPoint> axis_of(const TriangleGroup& g, const std::string& word) {
    const PeriodicOrbit o = make_orbit(g, parse_cyclic(word));
    return {o.repelling, o.attracting};
}

int cmd_code(const Config& c) {
    const TriangleParams t = params_of(c);
    const CodingContext ctx(t);
    BoundaryPoint eta, xi;
    if (!c.word.empty()) {
        std::tie(eta, xi) = axis_of(ctx.group(), c.word);
    } else {
        if (!c.eta || !c.xi) throw Error(ErrorCode::InvalidArgument, "give ETA and XI, or --word");
        eta = BoundaryPoint(*c.eta);
        xi = BoundaryPoint(*c.xi);
    }
    if (circular_distance(eta.theta, xi.theta) < 1e-12)
        throw Error(ErrorCode::EndpointsEqual, "the endpoints of a bi-infinite path must differ");
    // Endpoints on the axis of an enumerated orbit give a periodic certificate.
    std::optional<PeriodicOrbit> periodic;
    for (const auto& o : enumerate_orbits(ctx, c.max_blocks).orbits)
        if (circular_distance(o.repelling.theta, eta.theta) < 1e-9 &&
            circular_distance(o.attracting.theta, xi.theta) < 1e-9) {
            periodic = o;
            break;
        }
    const GraphPath path = periodic ? biinfinite_path(ctx, eta, xi, periodic->holonomy) : biinfinite_path(ctx, eta, xi);
    ordered_json j = ordered_json::parse(path_json(path, t));
    Blocks code = path.code;
    j["code"] = to_string(relabel(code, t));
    if (path.certificate) j["certificate"] = to_string(relabel(*path.certificate, t));
    j["mode"] = periodic ? "periodic" : "window";
    j["stabilized"] = true;
    emit(c, j.dump(2));
    return 0;
}

int cmd_h1(const Config& c) {
    emit(c, h1_json(surgery_presentation(params_of(c))));
    return 0;
}

int cmd_render(const Config& c) {
    const TriangleParams t = params_of(c);
    const CodingContext ctx(t);
    Overlays o;
    const std::string word = c.word.empty() ? "<a b>" : c.word;
    auto endpoints = [&] {
        if (c.eta && c.xi) return std::pair{BoundaryPoint(*c.eta), BoundaryPoint(*c.xi)};
        return axis_of(ctx.group(), word);
    };
    for (const auto& name : c.overlays) {
        if (name == "spectacles") {
            o.spectacles = ctx.spectacles();
        } else if (name == "bigon") {
            o.bigon = bigon_faces(ctx.group(), 6);
        } else if (name == "tango") {
            o.tango = tango(ctx.group(), parse_cyclic(word));
        } else if (name == "geodesic") {
            o.geodesic = endpoints();
        } else if (name == "path") {
            const auto [eta, xi] = endpoints();
            o.path = biinfinite_path(ctx, eta, xi);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown overlay " + name);
        }
    }
    emit(c, render_scene(expand(ctx.group(), c.depth), o));
    return 0;
}

int cmd_verify(const Config& c) {
    const TriangleParams t = params_of(c);
    bool all = true;
    std::string s = "verify " + t.label() + "\n";
    for (const auto& r : verify_triple(t, c.seed)) {
        s += to_string(r) + "\n";
        all = all && r.pass;
    }
    s += all ? "all checks passed\n" : "some checks failed\n";
    emit(c, s);
    return all ? 0 : kFailed;
}

bool usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHyperbolic:
        case ErrorCode::UnsupportedParams:
        case ErrorCode::InvalidArgument:
        case ErrorCode::EndpointsEqual:
        case ErrorCode::ParseError:
        case ErrorCode::ExponentOutOfRange:
        case ErrorCode::DepthOverflow:
            return true;
        default:
            return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic coding of geodesic flows on triangle orbifolds"};
    app.require_subcommand(1);
    Config c;

    auto triple = [&](CLI::App* sub) {
        sub->add_option("p", c.p, "order at A")->required();
        sub->add_option("q", c.q, "order at B")->required();
        sub->add_option("r", c.r, "order at C, or inf")->required();
        sub->add_option("-o,--output", c.output, "output file (default stdout)");
    };

    CLI::App* knead = app.add_subcommand("knead", "closed-form and geometric kneading words");
    triple(knead);
    knead->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* orbits = app.add_subcommand("orbits", "periodic orbits as admissible cyclic words");
    triple(orbits);
    orbits->add_option("--max-blocks", c.max_blocks, "largest block count (even)");

    CLI::App* code = app.add_subcommand("code", "admissible bi-infinite path between two boundary points");
    triple(code);
    code->add_option("eta", c.eta, "start angle (radians)");
    code->add_option("xi", c.xi, "end angle (radians)");
    code->add_option("--word", c.word, "use the axis of this cyclic word, e.g. \"<a b>\"");
    code->add_option("--max-blocks", c.max_blocks, "orbits searched for a periodic certificate");

    CLI::App* h1 = app.add_subcommand("h1", "first homology of the unit tangent bundle");
    triple(h1);

    CLI::App* render = app.add_subcommand("render", "SVG picture of a graph ball");
    triple(render);
    render->add_option("--depth", c.depth, "ball depth");
    render->add_option("--overlay", c.overlays, "spectacles, bigon, path, tango, geodesic")
        ->check(CLI::IsMember({"spectacles", "bigon", "path", "tango", "geodesic"}));
    render->add_option("--word", c.word, "word for tango and default endpoints");
    render->add_option("--eta", c.eta, "geodesic/path start angle");
    render->add_option("--xi", c.xi, "geodesic/path end angle");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite for one triple");
    triple(verify);
    verify->add_option("--seed", c.seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*knead) return cmd_knead(c);
        if (*orbits) return cmd_orbits(c);
        if (*code) return cmd_code(c);
        if (*h1) return cmd_h1(c);
        if (*render) return cmd_render(c);
        if (*verify) return cmd_verify(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error(e.code()) ? kUsage : kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
