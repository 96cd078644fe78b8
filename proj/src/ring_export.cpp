#include "schubert/ring_export.hpp"

#include <filesystem>

namespace schubert {

Json export_ring(const GrassCtx& ctx, int cap, ProductCache* cache) {
  if (ctx.dim() > cap) {
    throw DomainError("k(n-k) = " + std::to_string(ctx.dim()) + " exceeds the export cap " + std::to_string(cap));
  }
  Json basis = Json::object();
  std::vector<Partition> all;
  for (int m = 0; m <= ctx.dim(); ++m) {
    Json grade = Json::array();
    for (const auto& p : enumerate_partitions(ctx.k, ctx.width(), m)) {
      grade.push_back(to_json(p));
      all.push_back(p);
    }
    basis[std::to_string(m)] = grade;
  }
  Json products = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].size() + all[j].size() > ctx.dim()) continue;
      ChowClass prod = multiply_schubert(ctx, all[i], all[j], cache);
      products.push_back({{"a", to_json(all[i])}, {"b", to_json(all[j])}, {"terms", to_json(prod)["terms"]}});
    }
  }
  return {{"k", ctx.k}, {"n", ctx.n}, {"basis", basis}, {"products", products}};
}

GrassCtx import_ring(const Json& table, ProductCache& cache) {
  if (!table.is_object() || !table.contains("k") || !table.contains("n") || !table.contains("products")) {
    throw DomainError("field 'products': ring table needs k, n and products");
  }
  GrassCtx ctx(table["k"].get<int>(), table["n"].get<int>());
  const Json& products = table["products"];
  if (!products.is_array()) throw DomainError("field 'products': expected an array");
  for (std::size_t i = 0; i < products.size(); ++i) {
    const std::string where = "products[" + std::to_string(i) + "]";
    const Json& p = products[i];
    Partition a = ctx.partition(parts_from_json(p.at("a"), where + ".a"));
    Partition b = ctx.partition(parts_from_json(p.at("b"), where + ".b"));
    Json cls = {{"k", ctx.k}, {"n", ctx.n}, {"codim", a.size() + b.size()}, {"terms", p.at("terms")}};
    cache.insert(a, b, chow_from_json(cls));
  }
  return ctx;
}

std::string ring_file_name(const GrassCtx& ctx) {
  return "G" + std::to_string(ctx.k) + "_" + std::to_string(ctx.n) + ".json";
}

bool load_cached_ring(const std::string& dir, const GrassCtx& ctx, ProductCache& cache) {
  const auto path = std::filesystem::path(dir) / ring_file_name(ctx);
  if (!std::filesystem::exists(path)) return false;
  GrassCtx loaded = import_ring(read_json_file(path.string()), cache);
  if (!(loaded == ctx)) throw DomainError("cached table " + path.string() + " is for a different Grassmannian");
  return true;
}

}  // namespace schubert
