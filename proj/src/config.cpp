#include "wos/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace wos {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& scope,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(scope + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw ConfigError("unknown key: " + scope + "." + key);
    }
}

const json& require(const json& obj, const std::string& scope, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("missing key: " + scope + "." + key);
    return *it;
}

double number_at(const json& obj, const std::string& scope, const char* key) {
    const json& v = require(obj, scope, key);
    if (!v.is_number()) throw ConfigError(scope + "." + key + " must be a number");
    return v.get<double>();
}

Point point_at(const json& obj, const std::string& scope, const char* key) {
    const json& v = require(obj, scope, key);
    if (!v.is_array()) throw ConfigError(scope + "." + key + " must be an array of numbers");
    Point p;
    for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError(scope + "." + key + " must be an array of numbers");
        p.push_back(e.get<double>());
    }
    return p;
}

Domain parse_domain(const json& j, const std::string& scope) {
    const std::string shape = require(j, scope, "shape").get<std::string>();
    if (shape == "ball") {
        require_keys(j, scope, {"shape", "center", "radius"});
        return Domain::ball(point_at(j, scope, "center"), number_at(j, scope, "radius"));
    }
    if (shape == "box") {
        require_keys(j, scope, {"shape", "lo", "hi"});
        return Domain::box(point_at(j, scope, "lo"), point_at(j, scope, "hi"));
    }
    if (shape == "annulus") {
        require_keys(j, scope, {"shape", "center", "r_inner", "r_outer"});
        return Domain::annulus(point_at(j, scope, "center"), number_at(j, scope, "r_inner"),
                               number_at(j, scope, "r_outer"));
    }
    throw ConfigError(scope + ".shape must be ball, box or annulus");
}

BoundaryFunction parse_boundary(const json& j, const std::string& scope) {
    const std::string kind = require(j, scope, "kind").get<std::string>();
    if (kind == "constant") {
        require_keys(j, scope, {"kind", "value"});
        return BoundaryFunction::constant(number_at(j, scope, "value"));
    }
    if (kind == "coordinate") {
        require_keys(j, scope, {"kind", "axis"});
        return BoundaryFunction::coordinate(require(j, scope, "axis").get<int>());
    }
    if (kind == "affine") {
        require_keys(j, scope, {"kind", "offset", "coeffs"});
        return BoundaryFunction::affine(number_at(j, scope, "offset"),
                                        point_at(j, scope, "coeffs"));
    }
    if (kind == "exp_drift") {
        require_keys(j, scope, {"kind", "axis", "rate"});
        return BoundaryFunction::exp_drift(require(j, scope, "axis").get<int>(),
                                           number_at(j, scope, "rate"));
    }
    if (kind == "sum") {
        require_keys(j, scope, {"kind", "terms"});
        const json& terms = require(j, scope, "terms");
        if (!terms.is_array() || terms.empty())
            throw ConfigError(scope + ".terms must be a non-empty array");
        std::vector<std::pair<double, BoundaryFunction>> parsed;
        int i = 0;
        for (const auto& t : terms) {
            const std::string ts = scope + ".terms[" + std::to_string(i++) + "]";
            require_keys(t, ts, {"weight", "function"});
            parsed.emplace_back(number_at(t, ts, "weight"),
                                parse_boundary(require(t, ts, "function"), ts + ".function"));
        }
        return BoundaryFunction::sum(std::move(parsed));
    }
    throw ConfigError(scope + ".kind must be constant, coordinate, affine, exp_drift or sum");
}

json dump_domain(const Domain& d) {
    switch (d.tag()) {
        case ShapeTag::Ball:
            return {{"shape", "ball"}, {"center", d.center()}, {"radius", d.radius()}};
        case ShapeTag::Box:
            return {{"shape", "box"}, {"lo", d.lo()}, {"hi", d.hi()}};
        case ShapeTag::Annulus:
            return {{"shape", "annulus"},
                    {"center", d.center()},
                    {"r_inner", d.r_inner()},
                    {"r_outer", d.r_outer()}};
    }
    throw std::logic_error("unreachable");
}

json dump_boundary(const BoundaryFunction& f) {
    switch (f.kind()) {
        case BoundaryKind::Constant:
            return {{"kind", "constant"}, {"value", f.value()}};
        case BoundaryKind::Coordinate:
            return {{"kind", "coordinate"}, {"axis", f.axis()}};
        case BoundaryKind::Affine:
            return {{"kind", "affine"}, {"offset", f.offset()}, {"coeffs", f.coeffs()}};
        case BoundaryKind::ExpDrift:
            return {{"kind", "exp_drift"}, {"axis", f.axis()}, {"rate", f.rate()}};
        case BoundaryKind::Sum: {
            json terms = json::array();
            for (const auto& [w, g] : f.terms())
                terms.push_back({{"weight", w}, {"function", dump_boundary(g)}});
            return {{"kind", "sum"}, {"terms", std::move(terms)}};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    require_keys(root, "config", {"problem", "walk", "execution", "query", "output"});

    RunConfig cfg;

    const json& prob = require(root, "config", "problem");
    require_keys(prob, "problem", {"a", "b", "domain", "boundary"});
    cfg.problem.a = number_at(prob, "problem", "a");
    cfg.problem.b = point_at(prob, "problem", "b");
    cfg.problem.dom = parse_domain(require(prob, "problem", "domain"), "problem.domain");
    cfg.problem.f = parse_boundary(require(prob, "problem", "boundary"), "problem.boundary");
    if (cfg.problem.a <= 0.0) throw ConfigError("problem.a must be positive");
    if (static_cast<int>(cfg.problem.b.size()) != cfg.problem.dom.dim())
        throw ConfigError("problem.b must have the domain's dimension");

    if (auto it = root.find("walk"); it != root.end()) {
        require_keys(*it, "walk", {"shrink", "shell", "max_steps"});
        if (it->contains("shrink")) cfg.walk.shrink = number_at(*it, "walk", "shrink");
        if (it->contains("shell")) cfg.walk.shell = number_at(*it, "walk", "shell");
        if (it->contains("max_steps")) cfg.walk.max_steps = (*it)["max_steps"].get<long>();
    }
    if (!(cfg.walk.shrink > 0.0 && cfg.walk.shrink <= 1.0))
        throw ConfigError("walk.shrink must lie in (0, 1]");
    if (!(cfg.walk.shell > 0.0)) throw ConfigError("walk.shell must be positive");
    if (cfg.walk.max_steps < 1) throw ConfigError("walk.max_steps must be at least 1");

    const json& exe = require(root, "config", "execution");
    require_keys(exe, "execution", {"n_walks", "seed", "workers"});
    cfg.n_walks = require(exe, "execution", "n_walks").get<long>();
    cfg.seed = require(exe, "execution", "seed").get<std::uint64_t>();
    if (exe.contains("workers")) cfg.workers = exe["workers"].get<int>();
    if (cfg.n_walks < 2) throw ConfigError("execution.n_walks must be at least 2");
    if (cfg.workers < 1) throw ConfigError("execution.workers must be at least 1");

    const json& query = require(root, "config", "query");
    require_keys(query, "query", {"point", "grid"});
    const bool has_point = query.contains("point");
    cfg.has_grid = query.contains("grid");
    if (has_point == cfg.has_grid)
        throw ConfigError("query must contain exactly one of: point, grid");
    if (has_point) {
        cfg.query_point = point_at(query, "query", "point");
        if (static_cast<int>(cfg.query_point.size()) != cfg.problem.dom.dim())
            throw ConfigError("query.point must have the domain's dimension");
    } else {
        const json& g = query["grid"];
        require_keys(g, "query.grid", {"lo", "hi", "counts"});
        cfg.grid.lo = point_at(g, "query.grid", "lo");
        cfg.grid.hi = point_at(g, "query.grid", "hi");
        cfg.grid.counts = require(g, "query.grid", "counts").get<std::vector<int>>();
        const auto d = static_cast<std::size_t>(cfg.problem.dom.dim());
        if (cfg.grid.lo.size() != d || cfg.grid.hi.size() != d || cfg.grid.counts.size() != d)
            throw ConfigError("query.grid must have the domain's dimension");
        for (int c : cfg.grid.counts)
            if (c < 1) throw ConfigError("query.grid.counts must be at least 1 per axis");
    }

    const json& out = require(root, "config", "output");
    require_keys(out, "output", {"format", "path"});
    cfg.format = require(out, "output", "format").get<std::string>();
    cfg.output_path = require(out, "output", "path").get<std::string>();
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("output.format must be csv or json");

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const RunConfig& cfg) {
    json root;
    root["problem"] = {{"a", cfg.problem.a},
                       {"b", cfg.problem.b},
                       {"domain", dump_domain(cfg.problem.dom)},
                       {"boundary", dump_boundary(cfg.problem.f)}};
    root["walk"] = {{"shrink", cfg.walk.shrink},
                    {"shell", cfg.walk.shell},
                    {"max_steps", cfg.walk.max_steps}};
    root["execution"] = {{"n_walks", cfg.n_walks}, {"seed", cfg.seed}, {"workers", cfg.workers}};
    if (cfg.has_grid)
        root["query"] = {
            {"grid", {{"lo", cfg.grid.lo}, {"hi", cfg.grid.hi}, {"counts", cfg.grid.counts}}}};
    else
        root["query"] = {{"point", cfg.query_point}};
    root["output"] = {{"format", cfg.format}, {"path", cfg.output_path}};
    return root.dump(2) + "\n";
}

}  // namespace wos
