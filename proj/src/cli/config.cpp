#include "specsum/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "specsum/counting.hpp"
#include "specsum/truncation_oracle.hpp"

namespace specsum::cli {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw ConfigError(at(path, k), "unknown field");
  }
}

const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& need(const json& j, const std::string& path, const char* key) {
  const json* v = find(j, key);
  if (!v) throw ConfigError(at(path, key), "missing required field");
  return *v;
}

double as_real(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

double real_or(const json& j, const std::string& path, const char* key, double fallback) {
  const json* v = find(j, key);
  return v ? as_real(*v, at(path, key)) : fallback;
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ConfigError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t count_or(const json& j, const std::string& path, const char* key, std::size_t fallback) {
  const json* v = find(j, key);
  return v ? as_count(*v, at(path, key)) : fallback;
}

bool bool_or(const json& j, const std::string& path, const char* key, bool fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ConfigError(at(path, key), "expected true or false");
  return v->get<bool>();
}

Complex as_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {as_real(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {as_real(j[0], at(path, 0)), as_real(j[1], at(path, 1))};
  throw ConfigError(path, "expected a number or a [re, im] pair");
}

std::vector<Complex> complex_list(const json& j, const std::string& path, const char* key) {
  std::vector<Complex> out;
  const json* v = find(j, key);
  if (!v) return out;
  const std::string p = at(path, key);
  if (!v->is_array()) throw ConfigError(p, "expected a list");
  for (std::size_t i = 0; i < v->size(); ++i) out.push_back(as_complex((*v)[i], at(p, i)));
  return out;
}

std::string kind_of(const json& j, const std::string& path) {
  const json& k = need(j, path, "kind");
  if (!k.is_string()) throw ConfigError(at(path, "kind"), "expected a string");
  return k.get<std::string>();
}

// Runs a model constructor to validate; re-labels its message with the path.
template <typename F>
void validate(const std::string& path, F&& make) {
  try {
    make();
  } catch (const InvalidArgument& e) {
    throw ConfigError(path, e.what());
  }
}

OperatorDesc parse_operator(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "matrix") {
    only_keys(j, path, {"kind", "entries"});
    const json& rows = need(j, path, "entries");
    const std::string p = at(path, "entries");
    if (!rows.is_array() || rows.empty()) throw ConfigError(p, "expected a nonempty list of rows");
    const auto d = static_cast<Eigen::Index>(rows.size());
    MatrixDesc out{Eigen::MatrixXcd(d, d)};
    for (Eigen::Index r = 0; r < d; ++r) {
      const json& row = rows[r];
      const std::string rp = at(p, static_cast<std::size_t>(r));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
        throw ConfigError(rp, "matrix must be square with " + std::to_string(d) + " columns");
      }
      for (Eigen::Index c = 0; c < d; ++c) out.entries(r, c) = as_complex(row[c], at(rp, static_cast<std::size_t>(c)));
    }
    validate(path, [&] { FiniteMatrixOperator op(out.entries); });
    return out;
  }
  if (kind == "diagonal") {
    only_keys(j, path, {"kind", "rule", "accumulation_points"});
    const json& rule = need(j, path, "rule");
    const std::string rp = at(path, "rule");
    DiagonalDesc out;
    const std::string type = [&] {
      const json& t = need(rule, rp, "type");
      if (!t.is_string()) throw ConfigError(at(rp, "type"), "expected a string");
      return t.get<std::string>();
    }();
    if (type == "power") {
      only_keys(rule, rp, {"type", "k", "alpha", "beta"});
      out.rule = PowerLawEntries{as_real(need(rule, rp, "k"), at(rp, "k")),
                                 as_real(need(rule, rp, "alpha"), at(rp, "alpha")), real_or(rule, rp, "beta", 0.0)};
    } else if (type == "explicit") {
      only_keys(rule, rp, {"type", "values"});
      need(rule, rp, "values");
      out.rule = ExplicitEntries{complex_list(rule, rp, "values")};
    } else {
      throw ConfigError(at(rp, "type"), "unknown entry rule '" + type + "' (power, explicit)");
    }
    out.accumulation_points = complex_list(j, path, "accumulation_points");
    validate(path, [&] { DiagonalOperator op(out.rule, out.accumulation_points); });
    return out;
  }
  if (kind == "multipoint") {
    only_keys(j, path, {"kind", "a", "b", "amplitude"});
    MultipointDesc out{as_real(need(j, path, "a"), at(path, "a")), as_real(need(j, path, "b"), at(path, "b")),
                       find(j, "amplitude") ? as_complex(j["amplitude"], at(path, "amplitude")) : Complex(1.0, 0.0)};
    validate(path, [&] { MultipointOperator op(out.a, out.b, out.amplitude); });
    return out;
  }
  if (kind == "ode") {
    only_keys(j, path, {"kind", "s", "a", "b", "theta"});
    OdeDesc out{as_real(need(j, path, "s"), at(path, "s")), as_real(need(j, path, "a"), at(path, "a")),
                as_real(need(j, path, "b"), at(path, "b")), real_or(j, path, "theta", 0.0)};
    validate(path, [&] { VectorODEOperator op(out.s, out.a, out.b, out.theta); });
    return out;
  }
  if (kind == "shift") {
    only_keys(j, path, {"kind"});
    return ShiftDesc{};
  }
  if (kind == "declared") {
    only_keys(j, path, {"kind", "point", "continuous", "residual", "norm", "compact", "compact_resolvent"});
    DeclaredDesc out;
    out.data.point = complex_list(j, path, "point");
    out.data.continuous = complex_list(j, path, "continuous");
    out.data.residual = complex_list(j, path, "residual");
    if (const json* n = find(j, "norm"); n && !n->is_null()) out.data.norm = as_real(*n, at(path, "norm"));
    out.data.compact = bool_or(j, path, "compact", false);
    out.data.compact_resolvent = bool_or(j, path, "compact_resolvent", false);
    validate(path, [&] { DeclaredSpectrumOperator op(out.data); });
    return out;
  }
  if (kind == "random_matrix") {
    only_keys(j, path, {"kind", "size", "count"});
    RandomMatrixDesc out{as_count(need(j, path, "size"), at(path, "size")), count_or(j, path, "count", 1)};
    if (out.size == 0) throw ConfigError(at(path, "size"), "must be at least 1");
    if (out.count == 0) throw ConfigError(at(path, "count"), "must be at least 1");
    return out;
  }
  throw ConfigError(at(path, "kind"),
                    "unknown operator kind '" + kind + "' (matrix, diagonal, multipoint, ode, shift, declared, random_matrix)");
}

DeclaredLimit parse_limit(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "zero") return DeclaredLimit::zero();
    if (s == "infinity") return DeclaredLimit::infinity();
    if (s == "monotone_growth") return DeclaredLimit::monotone_growth();
    if (s == "unknown") return DeclaredLimit::unknown();
    throw ConfigError(path, "unknown limit '" + s + "' (zero, infinity, monotone_growth, unknown, {bounded_by: v})");
  }
  if (j.is_object()) {
    only_keys(j, path, {"bounded_by"});
    try {
      return DeclaredLimit::bounded_by(as_real(need(j, path, "bounded_by"), at(path, "bounded_by")));
    } catch (const InvalidArgument& e) {
      throw ConfigError(at(path, "bounded_by"), e.what());
    }
  }
  throw ConfigError(path, "expected a limit name or {bounded_by: v}");
}

TailRule make_rule(const TailDesc& t) {
  struct Visitor {
    TailRule operator()(const FiniteTailDesc&) const { return TailRule::finite(); }
    TailRule operator()(const ScalarTailDesc& d) const { return scalar_power_tail(d.k, d.p); }
    TailRule operator()(const OdeTailDesc& d) const { return ode_power_tail(d.s0, d.p, d.a, d.b, d.theta); }
    TailRule operator()(const DiagonalTailDesc& d) const {
      return diagonal_geometric_tail(d.k0, d.ratio, d.alpha, d.beta);
    }
  };
  TailRule rule = std::visit(Visitor{}, t.rule);
  if (t.limits && !rule.is_finite()) return rule.declared(*t.limits);
  return rule;
}

TailDesc parse_tail(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  TailDesc out;
  if (kind == "finite") {
    only_keys(j, path, {"kind"});
    out.rule = FiniteTailDesc{};
  } else if (kind == "scalar") {
    only_keys(j, path, {"kind", "k", "p", "prefix_count", "limits"});
    out.rule = ScalarTailDesc{as_real(need(j, path, "k"), at(path, "k")), as_real(need(j, path, "p"), at(path, "p"))};
  } else if (kind == "ode") {
    only_keys(j, path, {"kind", "s0", "p", "a", "b", "theta", "prefix_count", "limits"});
    out.rule = OdeTailDesc{as_real(need(j, path, "s0"), at(path, "s0")), as_real(need(j, path, "p"), at(path, "p")),
                           as_real(need(j, path, "a"), at(path, "a")), as_real(need(j, path, "b"), at(path, "b")),
                           real_or(j, path, "theta", 0.0)};
  } else if (kind == "diagonal") {
    only_keys(j, path, {"kind", "k0", "ratio", "alpha", "beta", "prefix_count", "limits"});
    out.rule = DiagonalTailDesc{as_real(need(j, path, "k0"), at(path, "k0")),
                                as_real(need(j, path, "ratio"), at(path, "ratio")),
                                as_real(need(j, path, "alpha"), at(path, "alpha")), real_or(j, path, "beta", 0.0)};
  } else {
    throw ConfigError(at(path, "kind"), "unknown tail kind '" + kind + "' (finite, scalar, ode, diagonal)");
  }
  out.prefix_count = count_or(j, path, "prefix_count", 0);
  if (const json* l = find(j, "limits")) {
    const std::string lp = at(path, "limits");
    only_keys(*l, lp, {"operator_norm", "resolvent_norm", "first_eigenvalue"});
    TailLimits limits;
    if (const json* v = find(*l, "operator_norm")) limits.operator_norm = parse_limit(*v, at(lp, "operator_norm"));
    if (const json* v = find(*l, "resolvent_norm")) limits.resolvent_norm = parse_limit(*v, at(lp, "resolvent_norm"));
    if (const json* v = find(*l, "first_eigenvalue")) {
      limits.first_eigenvalue = parse_limit(*v, at(lp, "first_eigenvalue"));
    }
    out.limits = limits;
  }
  validate(path, [&] { make_rule(out); });
  return out;
}

Defaults parse_defaults(const json& j, const std::string& path) {
  only_keys(j, path,
            {"lambda", "blocks", "block_size", "fit_count", "fit_range", "fit_slack", "fit_verify_from", "counting_grid"});
  Defaults d;
  if (const json* v = find(j, "lambda")) d.lambda = as_complex(*v, at(path, "lambda"));
  d.blocks = count_or(j, path, "blocks", d.blocks);
  d.block_size = count_or(j, path, "block_size", d.block_size);
  d.fit_count = count_or(j, path, "fit_count", d.fit_count);
  if (d.blocks == 0) throw ConfigError(at(path, "blocks"), "must be at least 1");
  if (d.block_size == 0) throw ConfigError(at(path, "block_size"), "must be at least 1");
  if (d.fit_count < 8) throw ConfigError(at(path, "fit_count"), "must be at least 8");
  if (const json* v = find(j, "fit_range"); v && !v->is_null()) {
    const std::string p = at(path, "fit_range");
    if (!v->is_array() || v->size() != 2) throw ConfigError(p, "expected [lo, hi]");
    d.fit_range = std::pair{as_count((*v)[0], at(p, 0)), as_count((*v)[1], at(p, 1))};
    if (d.fit_range->first < 1 || d.fit_range->second <= d.fit_range->first || d.fit_range->second > d.fit_count) {
      throw ConfigError(p, "need 1 <= lo < hi <= fit_count");
    }
  }
  d.fit_slack = real_or(j, path, "fit_slack", d.fit_slack);
  if (!(d.fit_slack > 0.0)) throw ConfigError(at(path, "fit_slack"), "must be positive");
  d.fit_verify_from = count_or(j, path, "fit_verify_from", d.fit_verify_from);
  if (const json* g = find(j, "counting_grid")) {
    const std::string p = at(path, "counting_grid");
    only_keys(*g, p, {"start", "ratio", "count"});
    d.counting_grid.start = real_or(*g, p, "start", d.counting_grid.start);
    d.counting_grid.ratio = real_or(*g, p, "ratio", d.counting_grid.ratio);
    d.counting_grid.count = count_or(*g, p, "count", d.counting_grid.count);
    validate(p, [&] { geometric_grid(d.counting_grid.start, d.counting_grid.ratio, d.counting_grid.count); });
  }
  return d;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list_json(const std::vector<Complex>& zs) {
  json out = json::array();
  for (const Complex& z : zs) out.push_back(complex_json(z));
  return out;
}

json limit_json(const DeclaredLimit& l) {
  switch (l.kind()) {
    case DeclaredLimit::Kind::LimitZero: return "zero";
    case DeclaredLimit::Kind::LimitInfinity: return "infinity";
    case DeclaredLimit::Kind::BoundedBy: return json{{"bounded_by", l.bound()}};
    case DeclaredLimit::Kind::MonotoneGrowth: return "monotone_growth";
    case DeclaredLimit::Kind::Unknown: break;
  }
  return "unknown";
}

json operator_json(const OperatorDesc& desc) {
  struct Visitor {
    json operator()(const MatrixDesc& d) const {
      json rows = json::array();
      for (Eigen::Index r = 0; r < d.entries.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < d.entries.cols(); ++c) row.push_back(complex_json(d.entries(r, c)));
        rows.push_back(row);
      }
      return {{"kind", "matrix"}, {"entries", rows}};
    }
    json operator()(const DiagonalDesc& d) const {
      json rule;
      if (const auto* p = std::get_if<PowerLawEntries>(&d.rule)) {
        rule = {{"type", "power"}, {"k", p->k}, {"alpha", p->alpha}, {"beta", p->beta}};
      } else {
        rule = {{"type", "explicit"}, {"values", complex_list_json(std::get<ExplicitEntries>(d.rule).values)}};
      }
      return {{"kind", "diagonal"}, {"rule", rule}, {"accumulation_points", complex_list_json(d.accumulation_points)}};
    }
    json operator()(const MultipointDesc& d) const {
      return {{"kind", "multipoint"}, {"a", d.a}, {"b", d.b}, {"amplitude", complex_json(d.amplitude)}};
    }
    json operator()(const OdeDesc& d) const {
      return {{"kind", "ode"}, {"s", d.s}, {"a", d.a}, {"b", d.b}, {"theta", d.theta}};
    }
    json operator()(const ShiftDesc&) const { return {{"kind", "shift"}}; }
    json operator()(const DeclaredDesc& d) const {
      return {{"kind", "declared"},
              {"point", complex_list_json(d.data.point)},
              {"continuous", complex_list_json(d.data.continuous)},
              {"residual", complex_list_json(d.data.residual)},
              {"norm", d.data.norm ? json(*d.data.norm) : json(nullptr)},
              {"compact", d.data.compact},
              {"compact_resolvent", d.data.compact_resolvent}};
    }
    json operator()(const RandomMatrixDesc& d) const {
      return {{"kind", "random_matrix"}, {"size", d.size}, {"count", d.count}};
    }
  };
  return std::visit(Visitor{}, desc);
}

json tail_json(const TailDesc& t) {
  struct Visitor {
    json operator()(const FiniteTailDesc&) const { return {{"kind", "finite"}}; }
    json operator()(const ScalarTailDesc& d) const { return {{"kind", "scalar"}, {"k", d.k}, {"p", d.p}}; }
    json operator()(const OdeTailDesc& d) const {
      return {{"kind", "ode"}, {"s0", d.s0}, {"p", d.p}, {"a", d.a}, {"b", d.b}, {"theta", d.theta}};
    }
    json operator()(const DiagonalTailDesc& d) const {
      return {{"kind", "diagonal"}, {"k0", d.k0}, {"ratio", d.ratio}, {"alpha", d.alpha}, {"beta", d.beta}};
    }
  };
  json out = std::visit(Visitor{}, t.rule);
  if (std::holds_alternative<FiniteTailDesc>(t.rule)) return out;
  out["prefix_count"] = t.prefix_count;
  if (t.limits) {
    out["limits"] = {{"operator_norm", limit_json(t.limits->operator_norm)},
                     {"resolvent_norm", limit_json(t.limits->resolvent_norm)},
                     {"first_eigenvalue", limit_json(t.limits->first_eigenvalue)}};
  }
  return out;
}

std::vector<CoordinatePtr> build_prefix(const FamilyConfig& config, std::uint64_t seed, const TailRule& rule) {
  std::mt19937_64 rng(seed);
  std::vector<CoordinatePtr> prefix;
  struct Visitor {
    std::vector<CoordinatePtr>& prefix;
    std::mt19937_64& rng;
    void operator()(const MatrixDesc& d) { prefix.push_back(std::make_shared<FiniteMatrixOperator>(d.entries)); }
    void operator()(const DiagonalDesc& d) {
      prefix.push_back(std::make_shared<DiagonalOperator>(d.rule, d.accumulation_points));
    }
    void operator()(const MultipointDesc& d) {
      prefix.push_back(std::make_shared<MultipointOperator>(d.a, d.b, d.amplitude));
    }
    void operator()(const OdeDesc& d) { prefix.push_back(std::make_shared<VectorODEOperator>(d.s, d.a, d.b, d.theta)); }
    void operator()(const ShiftDesc&) { prefix.push_back(std::make_shared<ShiftOperator>()); }
    void operator()(const DeclaredDesc& d) { prefix.push_back(std::make_shared<DeclaredSpectrumOperator>(d.data)); }
    void operator()(const RandomMatrixDesc& d) {
      for (std::size_t i = 0; i < d.count; ++i) {
        prefix.push_back(
            std::make_shared<FiniteMatrixOperator>(random_block(rng, static_cast<Eigen::Index>(d.size))));
      }
    }
  };
  Visitor v{prefix, rng};
  for (const auto& desc : config.operators) std::visit(v, desc);
  const std::size_t explicit_count = prefix.size();
  for (std::size_t i = 1; i <= config.tail.prefix_count; ++i) prefix.push_back(rule.member(explicit_count + i));
  return prefix;
}

}  // namespace

FamilyConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  only_keys(root, "", {"operators", "tail", "tolerance", "defaults", "seed", "assert_disjoint", "disjoint_check_bound"});

  FamilyConfig cfg;
  if (const json* ops = find(root, "operators")) {
    if (!ops->is_array()) throw ConfigError("operators", "expected a list");
    for (std::size_t i = 0; i < ops->size(); ++i) cfg.operators.push_back(parse_operator((*ops)[i], at("operators", i)));
  }
  if (const json* t = find(root, "tail")) {
    cfg.tail = parse_tail(*t, "tail");
  } else {
    cfg.tail.rule = FiniteTailDesc{};
  }
  if (cfg.operators.empty() && cfg.tail.prefix_count == 0) {
    if (std::holds_alternative<FiniteTailDesc>(cfg.tail.rule)) {
      throw ConfigError("operators", "family needs at least one operator");
    }
    cfg.tail.prefix_count = 1;
  }

  if (const json* t = find(root, "tolerance")) {
    only_keys(*t, "tolerance", {"eps_membership", "eps_div"});
    cfg.tolerance.eps_membership = real_or(*t, "tolerance", "eps_membership", cfg.tolerance.eps_membership);
    cfg.tolerance.eps_div = real_or(*t, "tolerance", "eps_div", cfg.tolerance.eps_div);
    if (!(cfg.tolerance.eps_membership > 0.0)) throw ConfigError("tolerance.eps_membership", "must be positive");
    if (!(cfg.tolerance.eps_div > 0.0)) throw ConfigError("tolerance.eps_div", "must be positive");
  }
  if (const json* d = find(root, "defaults")) cfg.defaults = parse_defaults(*d, "defaults");
  if (const json* s = find(root, "seed")) {
    if (!s->is_number_unsigned()) throw ConfigError("seed", "expected a nonnegative integer");
    cfg.seed = s->get<std::uint64_t>();
  }
  cfg.assert_disjoint = bool_or(root, "", "assert_disjoint", false);
  cfg.disjoint_check_bound = real_or(root, "", "disjoint_check_bound", cfg.disjoint_check_bound);
  if (!(cfg.disjoint_check_bound >= 0.0)) throw ConfigError("disjoint_check_bound", "must be nonnegative");

  if (cfg.assert_disjoint) {
    const OperatorFamily family = build_family(cfg, cfg.seed);
    std::vector<CoordinatePtr> enumerable;
    for (const auto& op : family.prefix()) {
      if (op->is_enumerable()) enumerable.push_back(op);
    }
    if (!enumerable.empty() &&
        merged_counting(OperatorFamily(enumerable, TailRule::finite()), cfg.disjoint_check_bound, cfg.tolerance)
            .overlap) {
      throw ConfigError("assert_disjoint", "coordinate spectra share a point below disjoint_check_bound");
    }
  }
  return cfg;
}

FamilyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const FamilyConfig& c) {
  json ops = json::array();
  for (const auto& d : c.operators) ops.push_back(operator_json(d));
  json defaults = {{"lambda", complex_json(c.defaults.lambda)},
                   {"blocks", c.defaults.blocks},
                   {"block_size", c.defaults.block_size},
                   {"fit_count", c.defaults.fit_count},
                   {"fit_range", c.defaults.fit_range
                                     ? json::array({c.defaults.fit_range->first, c.defaults.fit_range->second})
                                     : json(nullptr)},
                   {"fit_slack", c.defaults.fit_slack},
                   {"fit_verify_from", c.defaults.fit_verify_from},
                   {"counting_grid",
                    {{"start", c.defaults.counting_grid.start},
                     {"ratio", c.defaults.counting_grid.ratio},
                     {"count", c.defaults.counting_grid.count}}}};
  json root = {{"operators", ops},
               {"tail", tail_json(c.tail)},
               {"tolerance", {{"eps_membership", c.tolerance.eps_membership}, {"eps_div", c.tolerance.eps_div}}},
               {"defaults", defaults},
               {"seed", c.seed},
               {"assert_disjoint", c.assert_disjoint},
               {"disjoint_check_bound", c.disjoint_check_bound}};
  return root.dump(2) + "\n";
}

OperatorFamily build_family(const FamilyConfig& config, std::uint64_t seed) {
  TailRule rule = make_rule(config.tail);
  std::vector<CoordinatePtr> prefix = build_prefix(config, seed, rule);
  return OperatorFamily(std::move(prefix), std::move(rule));
}

}  // namespace specsum::cli
