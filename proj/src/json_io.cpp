#include "schubert/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace schubert {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const Rational& x) { return Json(to_string(x)); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Partition& p) { return Json(p.nonzero_parts()); }

Json to_json(const ChowClass& c) {
  Json terms = Json::array();
  for (const auto& [lambda, coeff] : c.terms()) terms.push_back({{"lambda", to_json(lambda)}, {"c", to_json(coeff)}});
  return {{"k", c.ctx().k}, {"n", c.ctx().n}, {"codim", c.codim()}, {"terms", terms}};
}

Json to_json(const BlowupClass& c) {
  Json out = to_json(c.ambient());
  out["r"] = c.ctx().r;
  out["grading"] = to_string(c.grading());
  out["m"] = c.m();
  Json exc = Json::array();
  for (const auto& b : c.exc()) exc.push_back(to_json(b));
  out["exc"] = exc;
  out["configuration"] = to_string(c.ctx().configuration);
  return out;
}

Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back({{"label", t.label}, {"coeff", to_json(t.coeff)}, {"vector", to_json(t.vector)}});
  return {{"basis", d.basis_labels}, {"target", to_json(d.target)}, {"terms", terms}, {"reproduces", d.reproduces()}};
}

Json to_json(const ConeSpec& c) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    gens.push_back({{"label", c.generator_labels[i]}, {"vector", to_json(c.generators[i])}});
  }
  return {{"basis", c.basis_labels}, {"generators", gens}};
}

Json to_json(const IncidenceMatrix& m) { return Json(m.entries()); }

Json to_json(const OrbitRepresentative& r) {
  Json out = Json::array();
  for (auto [i, j] : r.pairs) out.push_back({i, j});
  return out;
}

Json to_json(const DenseOrbitReport& r) {
  return {{"k", r.k},
          {"d", r.d},
          {"dim_B", to_json(r.dim_group)},
          {"dim_G", to_json(r.dim_grassmannian)},
          {"dim_B_mod_scalars", to_json(r.dim_group_effective)},
          {"verdict", r.verdict}};
}

Json to_json(const DelPezzoReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"value", c.value}});
  return {{"N", r.N},
          {"q", to_json(r.q)},
          {"q_prime", to_json(r.q2)},
          {"checks", checks},
          {"assumptions", r.assumptions},
          {"status", r.all_pass() ? "pass" : "fail"}};
}

Json to_json(const SGenerationReport& r) {
  Json out = {{"class", to_json(r.query)},
              {"verdict", to_string(r.verdict)},
              {"generators", to_json(r.generators)},
              {"rationale", r.rationale}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.functional) out["certificate"] = to_json(*r.functional);
  return out;
}

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  throw DomainError("field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_field(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& where = "") {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) bad_field(key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) bad_field(key, "out of range");
  return static_cast<int>(x);
}

}  // namespace

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Rational r;
    try {
      r = parse_rational(j.get<std::string>());
    } catch (const DomainError&) {
      bad_field(field, "malformed integer '" + j.get<std::string>() + "'");
    }
    if (r.get_den() != 1) bad_field(field, "expected an integer, got " + to_string(r));
    return r.get_num();
  }
  bad_field(field, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, field));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
      bad_field(field, e.what());
    }
  }
  bad_field(field, "expected a rational (integer or \"p/q\" string)");
}

RationalVector vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> parts_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of parts");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) bad_field(field + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

namespace {

ChowClass ambient_from_terms(const GrassCtx& ctx, int codim, const Json& j) {
  ChowClass c(ctx, codim);
  const Json& terms = require(j, "terms", "");
  if (!terms.is_array()) bad_field("terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    auto parts = parts_from_json(require(terms[i], "lambda", where), where + ".lambda");
    Partition lambda = [&] {
      try {
        return ctx.partition(parts);
      } catch (const DomainError& e) {
        bad_field(where + ".lambda", e.what());
      }
    }();
    if (lambda.size() != codim) bad_field(where + ".lambda", "has size " + std::to_string(lambda.size()) + ", expected " + std::to_string(codim));
    c.add_term(lambda, integer_from_json(require(terms[i], "c", where), where + ".c"));
  }
  return c;
}

}  // namespace

ChowClass chow_from_json(const Json& j) {
  GrassCtx ctx(int_field(j, "k"), int_field(j, "n"));
  return ambient_from_terms(ctx, int_field(j, "codim"), j);
}

BlowupClass blowup_from_json(const Json& j) {
  GrassCtx g(int_field(j, "k"), int_field(j, "n"));
  const int r = int_field(j, "r");
  PointConfiguration config = PointConfiguration::General;
  if (j.contains("configuration")) {
    const std::string s = j["configuration"].is_string() ? j["configuration"].get<std::string>() : "";
    if (s == "very_general") config = PointConfiguration::VeryGeneral;
    else if (s == "general") config = PointConfiguration::General;
    else if (s == "special") config = PointConfiguration::Special;
    else bad_field("configuration", "expected very_general, general or special");
  }
  BlowupCtx ctx(g, r, config);
  const Json& grading_field = require(j, "grading", "");
  if (!grading_field.is_string()) bad_field("grading", "expected \"dim\" or \"codim\"");
  const std::string gs = grading_field.get<std::string>();
  Grading grading;
  if (gs == "dim") grading = Grading::Dimension;
  else if (gs == "codim") grading = Grading::Codimension;
  else bad_field("grading", "expected \"dim\" or \"codim\"");
  const int m = int_field(j, "m");
  if (m < 0 || m > g.dim()) bad_field("m", "outside [0, " + std::to_string(g.dim()) + "]");
  const int codim = grading == Grading::Codimension ? m : g.dim() - m;
  ChowClass ambient = ambient_from_terms(g, codim, j);
  std::vector<Integer> exc;
  if (j.contains("exc")) {
    const Json& e = j["exc"];
    if (!e.is_array()) bad_field("exc", "expected an array");
    for (std::size_t i = 0; i < e.size(); ++i) exc.push_back(integer_from_json(e[i], "exc[" + std::to_string(i) + "]"));
  } else {
    exc.assign(static_cast<std::size_t>(r), 0);
  }
  if (exc.size() != static_cast<std::size_t>(r)) bad_field("exc", "expected " + std::to_string(r) + " entries");
  return BlowupClass(ctx, grading, m, std::move(ambient), std::move(exc));
}

ConeSpec cone_from_json(const Json& j) {
  const Json* gens = &j;
  std::vector<std::string> basis;
  if (j.is_object()) {
    gens = &require(j, "generators", "");
    if (j.contains("basis")) {
      if (!j["basis"].is_array()) bad_field("basis", "expected an array of labels");
      for (const auto& b : j["basis"]) {
        if (!b.is_string()) bad_field("basis", "expected string labels");
        basis.push_back(b.get<std::string>());
      }
    }
  }
  if (!gens->is_array() || gens->empty()) bad_field("generators", "expected a nonempty array");
  std::vector<std::string> labels;
  std::vector<RationalVector> vectors;
  for (std::size_t i = 0; i < gens->size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const Json& g = (*gens)[i];
    if (g.is_array()) {
      labels.push_back("g" + std::to_string(i + 1));
      vectors.push_back(vector_from_json(g, where));
      continue;
    }
    const Json& label = require(g, "label", where);
    if (!label.is_string()) bad_field(where + ".label", "expected a string");
    labels.push_back(label.get<std::string>());
    vectors.push_back(vector_from_json(require(g, "vector", where), where + ".vector"));
  }
  const int dim = static_cast<int>(vectors.front().size());
  return ConeSpec(dim, std::move(basis), std::move(labels), std::move(vectors));
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("malformed partition '" + text + "'");
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace schubert
