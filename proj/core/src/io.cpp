#include "pdk/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pdk::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

const json& member(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t int_field(const json& j, const std::string& path, const std::string& key) {
  const json& v = member(j, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

Rational parse_rational_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a fraction string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

CycScalar parse_scalar(const json& j, const std::string& path, std::int64_t p) {
  const std::int64_t level = int_field(j, path, "level");
  const json& coeffs = member(j, path, "coeffs");
  if (!coeffs.is_array()) fail(path + ".coeffs", "expected an array");
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    cs.push_back(parse_rational_at(coeffs[i], path + ".coeffs[" + std::to_string(i) + "]"));
  }
  try {
    return CycScalar::from_coeffs(p, level, std::move(cs));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

PAdicPoint parse_point(const json& j, const std::string& path, std::int64_t p) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty coordinate array");
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(parse_rational_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  try {
    return PAdicPoint(p, std::move(coords));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Polydisc parse_ball(const json& j, const std::string& path, std::int64_t p) {
  const std::int64_t alpha = int_field(j, path, "alpha");
  const PAdicPoint center = parse_point(member(j, path, "center"), path + ".center", p);
  return Polydisc(center, alpha);
}

SBFunction parse_sb(const json& j, const std::string& path, std::int64_t p) {
  const std::int64_t dim = int_field(j, path, "dim");
  const json& terms = member(j, path, "terms");
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  std::vector<SBTerm> raw;
  raw.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    raw.push_back({parse_scalar(member(t, tpath, "coef"), tpath + ".coef", p),
                   parse_ball(member(t, tpath, "ball"), tpath + ".ball", p)});
  }
  try {
    return SBFunction::from_terms(p, dim, std::move(raw));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

LambdaGroup parse_lambda(const json& j, const std::string& path, std::int64_t p) {
  const std::int64_t ord_modulus = int_field(j, path, "ord_modulus");
  const std::int64_t ac_depth = int_field(j, path, "ac_depth");
  const json& residues = member(j, path, "unit_residues");
  if (!residues.is_array()) fail(path + ".unit_residues", "expected an array");
  std::set<std::int64_t> rs;
  for (const auto& r : residues) {
    if (!r.is_number_integer()) fail(path + ".unit_residues", "expected integers");
    rs.insert(r.get<std::int64_t>());
  }
  try {
    return LambdaGroup(p, ord_modulus, ac_depth, std::move(rs));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Distribution parse_distribution(const json& j, const std::string& path, std::int64_t p) {
  const std::int64_t dim = int_field(j, path, "dim");
  const json& atoms = member(j, path, "atoms");
  if (!atoms.is_array()) fail(path + ".atoms", "expected an array");
  std::vector<WeightedAtom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string apath = path + ".atoms[" + std::to_string(i) + "]";
    const json& a = atoms[i];
    const CycScalar weight = parse_scalar(member(a, apath, "weight"), apath + ".weight", p);
    const json& kind = member(a, apath, "kind");
    if (!kind.is_string()) fail(apath + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    try {
      if (k == "density") {
        out.push_back({weight, DensityAtom{parse_sb(member(a, apath, "function"),
                                                    apath + ".function", p)}});
      } else if (k == "dirac") {
        PAdicPoint point = parse_point(member(a, apath, "point"), apath + ".point", p);
        CycScalar pw = a.contains("point_weight")
                           ? parse_scalar(a["point_weight"], apath + ".point_weight", p)
                           : CycScalar::one(p);
        out.push_back({weight, DiracAtom{std::move(point), std::move(pw)}});
      } else if (k == "diagonal") {
        out.push_back({weight, DiagonalAtom{int_field(a, apath, "half_dim")}});
      } else if (k == "custom") {
        const std::int64_t depth_limit = int_field(a, apath, "depth_limit");
        const json& table = member(a, apath, "table");
        if (!table.is_array()) fail(apath + ".table", "expected an array");
        std::vector<CustomAtom::TableEntry> entries;
        for (std::size_t e = 0; e < table.size(); ++e) {
          const std::string epath = apath + ".table[" + std::to_string(e) + "]";
          entries.push_back(
              {parse_ball(member(table[e], epath, "ball"), epath + ".ball", p),
               parse_scalar(member(table[e], epath, "value"), epath + ".value", p)});
        }
        out.push_back({weight, CustomAtom::from_table(p, dim, std::move(entries), depth_limit)});
      } else {
        fail(apath + ".kind", "unknown atom kind '" + k + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(apath, e.what());
    }
  }
  try {
    return Distribution(p, dim, std::move(out));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Kernel parse_kernel(const json& j, const std::string& path, std::int64_t p) {
  Distribution u = parse_distribution(j, path, p);
  const json& split = member(j, path, "split");
  if (!split.is_array() || split.size() != 2 || !split[0].is_number_integer() ||
      !split[1].is_number_integer()) {
    fail(path + ".split", "expected [n1, n2]");
  }
  try {
    return Kernel(std::move(u), split[0].get<std::int64_t>(), split[1].get<std::int64_t>());
  } catch (const std::exception& e) {
    fail(path + ".split", e.what());
  }
}

MicrolocalQuery parse_query(const json& j, const std::string& path, std::int64_t p) {
  Distribution u =
      parse_distribution(member(j, path, "distribution"), path + ".distribution", p);
  PAdicPoint x0 = parse_point(member(j, path, "x0"), path + ".x0", p);
  PAdicPoint xi0 = parse_point(member(j, path, "xi0"), path + ".xi0", p);
  LambdaGroup lambda = parse_lambda(member(j, path, "lambda"), path + ".lambda", p);
  return MicrolocalQuery{std::move(u),
                         std::move(x0),
                         std::move(xi0),
                         std::move(lambda),
                         int_field(j, path, "nbhd_radius"),
                         int_field(j, path, "probe_depth"),
                         int_field(j, path, "ord_floor")};
}

GridSpec parse_grid(const json& j, const std::string& path, std::int64_t p) {
  const json& points = member(j, path, "points");
  if (!points.is_array()) fail(path + ".points", "expected an array");
  std::vector<std::pair<PAdicPoint, PAdicPoint>> pts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string ppath = path + ".points[" + std::to_string(i) + "]";
    pts.emplace_back(parse_point(member(points[i], ppath, "x0"), ppath + ".x0", p),
                     parse_point(member(points[i], ppath, "xi0"), ppath + ".xi0", p));
  }
  return GridSpec{std::move(pts),
                  parse_lambda(member(j, path, "lambda"), path + ".lambda", p),
                  int_field(j, path, "nbhd_radius"), int_field(j, path, "probe_depth"),
                  int_field(j, path, "ord_floor")};
}

json scalar_to_json(const CycScalar& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"level", s.level()}, {"coeffs", coeffs}};
}

json point_to_json(const PAdicPoint& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(rational_to_string(c));
  return out;
}

json ball_to_json(const Polydisc& b) {
  return json{{"alpha", b.alpha()}, {"center", point_to_json(b.center())}};
}

json sb_to_json(const SBFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(json{{"coef", scalar_to_json(t.coef)}, {"ball", ball_to_json(t.ball)}});
  }
  return json{{"kind", "sb"}, {"dim", f.dim()}, {"terms", terms}};
}

json distribution_to_json(const Distribution& u) {
  json atoms = json::array();
  for (const auto& [weight, atom] : u.atoms()) {
    json a{{"weight", scalar_to_json(weight)}};
    if (const auto* density = std::get_if<DensityAtom>(&atom)) {
      a["kind"] = "density";
      json f = sb_to_json(density->function);
      f.erase("kind");
      a["function"] = f;
    } else if (const auto* dirac = std::get_if<DiracAtom>(&atom)) {
      a["kind"] = "dirac";
      a["point"] = point_to_json(dirac->point);
      a["point_weight"] = scalar_to_json(dirac->weight);
    } else if (const auto* diag = std::get_if<DiagonalAtom>(&atom)) {
      a["kind"] = "diagonal";
      a["half_dim"] = diag->half_dim;
    } else {
      const auto& custom = std::get<CustomAtom>(atom);
      if (!custom.table()) {
        throw std::invalid_argument(
            "custom atom is not table-backed and cannot be serialized");
      }
      a["kind"] = "custom";
      a["depth_limit"] = custom.depth_limit();
      json table = json::array();
      for (const auto& e : *custom.table()) {
        table.push_back(
            json{{"ball", ball_to_json(e.ball)}, {"value", scalar_to_json(e.value)}});
      }
      a["table"] = table;
    }
    atoms.push_back(std::move(a));
  }
  return json{{"kind", "distribution"}, {"dim", u.dim()}, {"atoms", atoms}};
}

std::string wrap_file(std::int64_t p, json payload) {
  json out{{"format_version", 1}, {"p", p}, {"payload", std::move(payload)}};
  return out.dump(2) + "\n";
}

}  // namespace

ExprFile parse_expr_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  const std::int64_t version = int_field(j, "", "format_version");
  if (version != 1) fail("format_version", "unsupported format version");
  const std::int64_t p = int_field(j, "", "p");
  if (!is_prime(p)) fail("p", "p must be prime");
  const json& payload = member(j, "", "payload");
  const json& kind = member(payload, "payload", "kind");
  if (!kind.is_string()) fail("payload.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  ExprFile out{version, p, SBFunction::zero(p, 1)};
  if (k == "sb") {
    out.payload = parse_sb(payload, "payload", p);
  } else if (k == "distribution") {
    out.payload = parse_distribution(payload, "payload", p);
  } else if (k == "kernel") {
    out.payload = parse_kernel(payload, "payload", p);
  } else if (k == "query") {
    out.payload = parse_query(payload, "payload", p);
  } else if (k == "grid") {
    out.payload = parse_grid(payload, "payload", p);
  } else {
    fail("payload.kind", "unknown payload kind '" + k + "'");
  }
  return out;
}

ExprFile load_expr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_expr_file(buf.str());
}

std::string emit(const SBFunction& f) {
  return wrap_file(f.prime(), sb_to_json(f));
}

std::string emit(const Distribution& u) {
  return wrap_file(u.prime(), distribution_to_json(u));
}

std::string emit(const Kernel& k) {
  json payload = distribution_to_json(k.distribution());
  payload["kind"] = "kernel";
  payload["split"] = json::array({k.n1(), k.n2()});
  return wrap_file(k.prime(), std::move(payload));
}

std::string scalar_repr(const CycScalar& value, bool approx) {
  std::string out = value.to_string();
  if (approx) {
    const auto z = value.to_complex();
    std::ostringstream app;
    app.precision(12);
    app << " ~ (" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    out += app.str();
  }
  return out;
}

std::string scalar_json(const CycScalar& value) { return scalar_to_json(value).dump(); }
std::string point_json(const PAdicPoint& x) { return point_to_json(x).dump(); }
std::string ball_json(const Polydisc& b) { return ball_to_json(b).dump(); }
std::string sb_json(const SBFunction& f) { return sb_to_json(f).dump(); }
std::string distribution_json(const Distribution& u) { return distribution_to_json(u).dump(); }

std::string verdict_json(const SmoothnessVerdict& verdict, bool approx) {
  json out;
  if (const auto* cert = std::get_if<SmoothCertificate>(&verdict)) {
    out["verdict"] = "smooth";
    out["U"] = ball_to_json(cert->U);
    out["Ucheck"] = ball_to_json(cert->Ucheck);
    out["N"] = cert->N;
    out["full_basis"] = cert->full_basis;
  } else if (const auto* witness = std::get_if<NotSmoothWitness>(&verdict)) {
    out["verdict"] = "not_smooth";
    out["phi"] = sb_to_json(witness->phi);
    out["lambda"] = rational_to_string(witness->lambda_value);
    out["xi"] = point_to_json(witness->xi);
  } else {
    const auto& inc = std::get<InconclusiveBounded>(verdict);
    out["verdict"] = "inconclusive";
    out["U"] = ball_to_json(inc.U);
    out["Ucheck"] = ball_to_json(inc.Ucheck);
    out["probe_depth"] = inc.probe_depth;
    out["ord_floor"] = inc.ord_floor;
    out["probes"] = inc.probes;
  }
  (void)approx;
  return out.dump();
}

}  // namespace pdk::io
