#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "schubert/cones.hpp"
#include "schubert/delpezzo.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/json_io.hpp"
#include "schubert/multiplicity.hpp"
#include "schubert/orbits.hpp"
#include "schubert/ring_export.hpp"
#include "schubert/verify.hpp"

namespace schubert {

namespace {

// Filled from SCHUBERT_CACHE_DIR when a table for the requested G(k,n) exists.
ProductCache* cache_for(const GrassCtx& ctx, ProductCache& cache) {
  const char* dir = std::getenv("SCHUBERT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return &cache;
  load_cached_ring(dir, ctx, cache);
  return &cache;
}

// --class accepts inline JSON or a path.
Json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DomainError(std::string("field 'class': malformed JSON: ") + e.what());
    }
  }
  return read_json_file(text);
}

RationalVector class_vector(const Json& j) {
  if (j.is_array()) return vector_from_json(j, "class");
  if (j.is_object() && j.contains("vector")) return vector_from_json(j["vector"], "class.vector");
  throw DomainError("field 'class': expected a rational vector or {\"vector\": [...]}");
}

struct Args {
  int k = 0, n = 0, r = 0, dim = 0, s = 0, p = 0, cap = kDefaultExportCap;
  std::string lambda, mu, a, b, generators, cls, key, q, out;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert calculus, blow-up intersection numbers and effective cones", "schubert"};
  app.require_subcommand(1);
  Args x;
  std::function<int()> action;

  auto grass = [&](CLI::App* sub) {
    sub->add_option("--k", x.k, "subspace dimension")->required();
    sub->add_option("--n", x.n, "ambient dimension")->required();
  };

  auto* product = app.add_subcommand("product", "product of two Schubert classes");
  grass(product);
  product->add_option("--a", x.a, "first partition, e.g. 2,1")->required();
  product->add_option("--b", x.b, "second partition")->required();
  product->callback([&] {
    action = [&] {
      GrassCtx g(x.k, x.n);
      ProductCache cache;
      auto c = multiply_schubert(g, g.partition(parse_parts(x.a)), g.partition(parse_parts(x.b)), cache_for(g, cache));
      out << dump_canonical({{"product", to_json(c)}});
      return kExitOk;
    };
  });

  auto* pieri_cmd = app.add_subcommand("pieri", "sigma_p times sigma_mu");
  grass(pieri_cmd);
  pieri_cmd->add_option("--p", x.p, "special class index")->required();
  pieri_cmd->add_option("--mu", x.mu, "partition")->required();
  pieri_cmd->callback([&] {
    action = [&] {
      GrassCtx g(x.k, x.n);
      out << dump_canonical({{"product", to_json(pieri(x.p, g.partition(parse_parts(x.mu))))}});
      return kExitOk;
    };
  });

  auto* giambelli_cmd = app.add_subcommand("giambelli", "determinant expansion in special classes");
  grass(giambelli_cmd);
  giambelli_cmd->add_option("--lambda", x.lambda, "partition")->required();
  giambelli_cmd->callback([&] {
    action = [&] {
      GrassCtx g(x.k, x.n);
      const Partition lambda = g.partition(parse_parts(x.lambda));
      const auto poly = giambelli(lambda);
      Json terms = Json::array();
      for (const auto& [mono, c] : poly) terms.push_back({{"monomial", mono}, {"c", to_json(c)}});
      const ChowClass value = evaluate_special_polynomial(g, poly);
      const bool ok = value == ChowClass::schubert(g, lambda);
      out << dump_canonical({{"expansion", terms}, {"evaluated", to_json(value)}, {"round_trip", ok}});
      return ok ? kExitOk : kExitConsistency;
    };
  });

  auto* degree_cmd = app.add_subcommand("degree", "Pluecker degree of G(k,n)");
  grass(degree_cmd);
  degree_cmd->callback([&] {
    action = [&] {
      out << dump_canonical({{"degree", to_json(degree(GrassCtx(x.k, x.n)))}});
      return kExitOk;
    };
  });

  auto* mult = app.add_subcommand("mult", "multiplicity of X_lambda along the cell of mu");
  grass(mult);
  mult->add_option("--lambda", x.lambda, "the variety")->required();
  mult->add_option("--mu", x.mu, "the cell")->required();
  mult->callback([&] {
    action = [&] {
      GrassCtx g(x.k, x.n);
      auto m = rz_multiplicity({g, g.partition(parse_parts(x.lambda)), g.partition(parse_parts(x.mu))});
      out << dump_canonical({{"multiplicity", to_json(m)}});
      return kExitOk;
    };
  });

  auto* cone = app.add_subcommand("cone", "cone membership and S-generation");
  cone->require_subcommand(1);
  auto* check = cone->add_subcommand("check", "is the class in the cone of the generators?");
  check->add_option("--generators", x.generators, "JSON file of labelled generators")->required();
  check->add_option("--class", x.cls, "JSON vector or file")->required();
  check->callback([&] {
    action = [&] {
      const ConeSpec spec = cone_from_json(read_json_file(x.generators));
      const RationalVector v = class_vector(json_argument(x.cls));
      if (static_cast<int>(v.size()) != spec.dim) {
        throw DomainError("field 'class': expected " + std::to_string(spec.dim) + " coordinates");
      }
      const auto res = cone_membership(spec, v);
      Json j = {{"member", res.member}, {"verdict", res.member ? "in-span" : "not-in-span"}};
      if (res.member) {
        Json w = Json::array();
        for (std::size_t i = 0; i < res.weights.size(); ++i) {
          if (res.weights[i] != 0) w.push_back({{"label", spec.generator_labels[i]}, {"weight", to_json(res.weights[i])}});
        }
        j["weights"] = w;
      } else {
        j["certificate"] = to_json(res.functional);
      }
      out << dump_canonical(j);
      return res.member ? kExitOk : kExitNegative;
    };
  });
  auto* sgen = cone->add_subcommand("sgen", "S-generation of a dimension-graded blow-up class");
  grass(sgen);
  sgen->add_option("--r", x.r, "number of points")->required();
  sgen->add_option("--dim", x.dim, "cycle dimension")->required();
  sgen->add_option("--class", x.cls, "JSON {terms, exc} inline or a file")->required();
  sgen->callback([&] {
    action = [&] {
      Json j = json_argument(x.cls);
      if (!j.is_object()) throw DomainError("field 'class': expected an object with terms and exc");
      j["k"] = x.k;
      j["n"] = x.n;
      j["r"] = x.r;
      j["m"] = x.dim;
      j["grading"] = "dim";
      const auto report = sgen_check(blowup_from_json(j));
      out << dump_canonical(to_json(report));
      return report.verdict == SGenVerdict::NotInSpan ? kExitNegative : kExitOk;
    };
  });

  auto* orbits = app.add_subcommand("orbits", "B-orbits on G(dim, 2k + s)");
  orbits->require_subcommand(1);
  auto* list = orbits->add_subcommand("list", "one representative per orbit");
  list->add_option("--k", x.k, "half of the ambient dimension")->required();
  list->add_option("--dim", x.dim, "subspace dimension")->required();
  list->add_option("--s", x.s, "extra ambient dimensions")->check(CLI::NonNegativeNumber);
  list->callback([&] {
    action = [&] {
      Json arr = Json::array();
      for (const auto& rep : enumerate_orbits(x.k, x.dim)) {
        arr.push_back({{"pairs", to_json(rep)},
                       {"incidence", to_json(incidence_of_representative(rep, x.k))},
                       {"dimension", orbit_dimension(rep, x.k, x.s)}});
      }
      out << dump_canonical(arr);
      return kExitOk;
    };
  });
  auto* ocheck = orbits->add_subcommand("check", "compare with brute force over F_2 and F_3");
  ocheck->add_option("--k", x.k, "half of the ambient dimension")->required();
  ocheck->callback([&] {
    action = [&] {
      Json arr = Json::array();
      bool all = true;
      for (int d = 0; d <= x.k; ++d) {
        const auto cmp = compare_with_finite_fields(x.k, d);
        all = all && cmp.agree;
        arr.push_back({{"dim", d}, {"agree", cmp.agree}, {"problems", cmp.problems}});
      }
      out << dump_canonical({{"k", x.k}, {"results", arr}, {"agree", all}});
      return all ? kExitOk : kExitConsistency;
    };
  });

  auto* dp = app.add_subcommand("delpezzo", "the divisor D_delta on the blow-up of P^2 at 10 points");
  dp->require_subcommand(1);
  auto* dpv = dp->add_subcommand("verify", "check one row of the Fano table");
  dpv->add_option("--case", x.key, "row key, e.g. grass25")->required();
  dpv->add_option("--q", x.q, "delta^2 as a rational")->required();
  dpv->callback([&] {
    action = [&] {
      const auto report = verify_fano_case(fano_case(x.key), parse_rational(x.q));
      out << dump_canonical(to_json(report));
      return report.all_pass() ? kExitOk : kExitNegative;
    };
  });

  auto* vp = app.add_subcommand("verify-paper", "run every published computation and report");
  vp->callback([&] {
    action = [&] {
      const auto report = verify_paper();
      out << dump_canonical(to_json(report));
      return report.passed() ? kExitOk : kExitConsistency;
    };
  });

  auto* ex = app.add_subcommand("export-ring", "write the multiplication table of A*(G(k,n))");
  grass(ex);
  ex->add_option("--out", x.out, "output file or directory")->required();
  ex->add_option("--cap", x.cap, "largest k(n-k) allowed");
  ex->callback([&] {
    action = [&] {
      GrassCtx g(x.k, x.n);
      const Json table = export_ring(g, x.cap);
      std::filesystem::path path(x.out);
      if (std::filesystem::is_directory(path)) path /= ring_file_name(g);
      std::ofstream f(path);
      if (!f) throw DomainError("cannot write '" + path.string() + "'");
      f << dump_canonical(table);
      std::size_t classes = 0;
      for (const auto& [grade, list] : table["basis"].items()) classes += list.size();
      out << dump_canonical({{"path", path.string()}, {"classes", classes}, {"products", table["products"].size()}});
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace schubert
