#include "qhol/catalog.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "qhol/errors.hpp"

namespace qhol {

namespace {

std::size_t parse_uint(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed group spec '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

GroupTable perm_table(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(Perm::parse_cycles(c, degree));
  return table_from_perm_group(PermGroup::generate(gens, degree));
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
GroupTable sl23_table() {
  std::vector<std::array<int, 2>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.push_back({a, b});
  auto act = [&](const std::array<int, 4>& m) {
    std::vector<std::size_t> img(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      std::array<int, 2> w{(m[0] * vecs[i][0] + m[1] * vecs[i][1]) % 3,
                           (m[2] * vecs[i][0] + m[3] * vecs[i][1]) % 3};
      for (std::size_t j = 0; j < vecs.size(); ++j)
        if (vecs[j] == w) img[i] = j;
    }
    return Perm::from_images(std::span<const std::size_t>(img));
  };
  std::vector<Perm> gens{act({1, 1, 0, 1}), act({1, 0, 1, 1})};
  return table_from_perm_group(PermGroup::generate(gens, vecs.size()));
}

GroupTable abelian_table(std::string_view factors, std::string_view whole) {
  auto parts = split(factors, 'x');
  GroupTable t = cyclic_table(parse_uint(parts[0], whole));
  for (std::size_t i = 1; i < parts.size(); ++i)
    t = direct_product(t, cyclic_table(parse_uint(parts[i], whole)));
  return t;
}

// Element index helpers for C_p x C_q built by direct_product(cyclic p, cyclic q):
// a = (1,0) has index q, b = (0,1) has index 1.
GroupTable named_table(std::string_view spec) {
  if (spec == "A4") return perm_table({"(1,2,3)", "(1,2)(3,4)"}, 4);
  if (spec == "S4") return perm_table({"(1,2,3,4)", "(1,2)"}, 4);
  if (spec == "SL23") return sl23_table();
  if (spec == "HEIS3")  // (C3 x C3) x| C3: c a c^-1 = ab, c b c^-1 = b
    return semidirect_product(abelian_table("3x3", spec), cyclic_table(3, "c"), {{4, 1}});
  if (spec == "C9sC3") return semidirect_product(cyclic_table(9, "a"), cyclic_table(3, "b"), {{4}});
  if (spec == "SG16_3")  // (C4 x C2) x| C2: a -> ab, b -> b
    return semidirect_product(abelian_table("4x2", spec), cyclic_table(2, "c"), {{3, 1}});
  if (spec == "SG16_13")  // (C4 x C2) x| C2: a -> a, b -> a^2 b
    return semidirect_product(abelian_table("4x2", spec), cyclic_table(2, "c"), {{2, 5}});
  if (spec == "SG18_4")  // (C3 x C3) x| C2 by inversion
    return semidirect_product(abelian_table("3x3", spec), cyclic_table(2, "c"), {{6, 2}});
  if (spec == "SG24_8")  // C3 x| D8: rotation inverts, reflection centralizes
    return semidirect_product(cyclic_table(3, "a"), dihedral_table(4), {{2}, {1}});
  if (spec == "SG36_3")  // (C2 x C2) x| C9: a -> b, b -> ab
    return semidirect_product(abelian_table("2x2", spec), cyclic_table(9, "c"), {{1, 3}});
  if (spec == "SG36_7")  // (C3 x C3) x| C4, generator inverts
    return semidirect_product(abelian_table("3x3", spec), cyclic_table(4, "c"), {{6, 2}});
  if (spec == "SG36_9")  // (C3 x C3) x| C4: a -> b, b -> a^-1
    return semidirect_product(abelian_table("3x3", spec), cyclic_table(4, "c"), {{1, 6}});
  if (spec == "SG40_8")  // C5 x| D8: rotation inverts, reflection centralizes
    return semidirect_product(cyclic_table(5, "a"), dihedral_table(4), {{4}, {1}});
  if (spec == "C3xS4") return direct_product(cyclic_table(3), named_table("S4"));
  if (spec == "C3xA4sC2")  // pairs in S3 x S4 of equal sign
    return perm_table({"(1,2,3)", "(4,5,6)", "(4,5)(6,7)", "(1,2)(4,5)"}, 7);
  throw std::invalid_argument("unknown group spec '" + std::string(spec) + "'");
}

}  // namespace

std::size_t RegularContext::center_order() const {
  std::size_t n = order(), count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b)
      central = table.mul(a, b) == table.mul(b, a);
    count += central;
  }
  return count;
}

RegularContext make_context(GroupTable table, std::string spec) {
  std::size_t n = table.order();
  if (n > kMaxDegree)
    throw std::invalid_argument("group order " + std::to_string(n) +
                                " exceeds the maximum degree");
  RegularContext ctx;
  ctx.spec = std::move(spec);
  ctx.lambda_of.reserve(n);
  ctx.rho_of.reserve(n);
  std::vector<Point> img(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) img[h] = static_cast<Point>(table.mul(g, h));
    ctx.lambda_of.push_back(Perm::from_images(std::span<const Point>(img)));
    std::size_t gi = table.inv(g);
    for (std::size_t h = 0; h < n; ++h) img[h] = static_cast<Point>(table.mul(h, gi));
    ctx.rho_of.push_back(Perm::from_images(std::span<const Point>(img)));
  }
  std::vector<Perm> lg, rg;
  for (auto g : table.gens()) {
    lg.push_back(ctx.lambda_of[g]);
    rg.push_back(ctx.rho_of[g]);
  }
  ctx.lambda = PermGroup::from_elements_unchecked(ctx.lambda_of, lg);
  ctx.rho = PermGroup::from_elements_unchecked(ctx.rho_of, rg);
  ctx.table = std::move(table);
  ctx.lambda_reg = RegularGroup::from_by_point(ctx.lambda_of);

  if (!is_regular(ctx.lambda) || !is_regular(ctx.rho))
    throw InternalError("lambda or rho is not regular");
  for (const auto& a : lg)
    for (const auto& b : rg)
      if (a * b != b * a) throw InternalError("lambda and rho do not commute");
  if (intersection(ctx.lambda, ctx.rho).order() != ctx.center_order())
    throw InternalError("|lambda ∩ rho| differs from |Z(G)|");
  return ctx;
}

GroupTable build_table(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return named_table(spec);
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "DP") {
    auto star = rest.find('*');
    if (star == std::string_view::npos)
      throw std::invalid_argument("DP spec needs '*' in '" + std::string(spec) + "'");
    return direct_product(build_table(rest.substr(0, star)), build_table(rest.substr(star + 1)));
  }
  if (kind == "C") return cyclic_table(parse_uint(rest, spec));
  if (kind == "AB") return abelian_table(rest, spec);
  if (kind == "D") {
    std::size_t n = parse_uint(rest, spec);
    if (n < 2) throw std::invalid_argument("D:n needs n >= 2");
    return dihedral_table(n);
  }
  if (kind == "DIC") {
    std::size_t n = parse_uint(rest, spec);
    if (n < 1) throw std::invalid_argument("DIC:n needs n >= 1");
    return dicyclic_table(n);
  }
  if (kind == "Q") {
    std::size_t n = parse_uint(rest, spec);
    if (n < 8 || n % 4) throw std::invalid_argument("Q:n needs n = 4k, k >= 2");
    return dicyclic_table(n / 4);
  }
  if (kind == "SD") {
    auto parts = split(rest, ':');
    if (parts.size() != 3) throw std::invalid_argument("SD spec is SD:a:b:k");
    std::size_t a = parse_uint(parts[0], spec), b = parse_uint(parts[1], spec),
                k = parse_uint(parts[2], spec);
    if (a < 1 || b < 1) throw std::invalid_argument("SD orders must be positive");
    return semidirect_product(cyclic_table(a, "a"), cyclic_table(b, "b"), {{k % a}});
  }
  throw std::invalid_argument("unknown group spec '" + std::string(spec) + "'");
}

RegularContext context_from_regular(const PermGroup& g, std::string spec) {
  auto reg = RegularGroup::from_group(g);
  if (!reg) throw std::invalid_argument("group is not regular");
  std::size_t n = g.degree();
  std::vector<std::uint8_t> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a + 1);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = reg->at(a)[b];
  }
  std::vector<std::size_t> gens;
  for (const auto& s : g.generators())
    if (!s.is_identity()) gens.push_back(s[0]);
  return make_context(GroupTable::from_mul(n, std::move(mul), std::move(labels), std::move(gens)),
                      std::move(spec));
}

RegularContext build(std::string_view spec) {
  return make_context(build_table(spec), std::string(spec));
}

const std::vector<CatalogEntry>& table_catalog() {
  static const std::vector<CatalogEntry> rows = {
      {"C:4", "C4"},
      {"AB:2x2", "C2×C2"},
      {"D:3", "S3"},
      {"AB:4x2", "C4×C2"},
      {"D:4", "D8"},
      {"DIC:2", "Q8"},
      {"AB:2x2x2", "C2×C2×C2"},
      {"AB:3x3", "C3×C3"},
      {"DIC:3", "C3⋊C4"},
      {"A4", "A4"},
      {"D:6", "D12"},
      {"AB:6x2", "C6×C2"},
      {"C:16", "C16"},
      {"AB:4x4", "C4×C4"},
      {"SG16_3", "(C4×C2)⋊C2"},
      {"SD:4:4:3", "C4⋊C4"},
      {"AB:8x2", "C8×C2"},
      {"SD:8:2:5", "C8⋊C2"},
      {"D:8", "D16"},
      {"SD:8:2:3", "QD16"},
      {"DIC:4", "Q16"},
      {"AB:4x2x2", "C4×C2×C2"},
      {"DP:C:2*D:4", "C2×D8"},
      {"DP:C:2*DIC:2", "C2×Q8"},
      {"SG16_13", "(C4×C2)⋊C2"},
      {"AB:2x2x2x2", "C2×C2×C2×C2"},
      {"DP:C:3*D:3", "C3×S3"},
      {"SG18_4", "(C3×C3)⋊C2"},
      {"AB:6x3", "C6×C3"},
      {"DIC:5", "C5⋊C4"},
      {"SD:5:4:2", "C5⋊C4"},
      {"D:10", "D20"},
      {"AB:10x2", "C10×C2"},
      {"SD:7:3:2", "C7⋊C3"},
      {"SD:3:8:2", "C3⋊C8"},
      {"SL23", "SL(2,3)"},
      {"DIC:6", "C3⋊Q8"},
      {"DP:C:4*D:3", "C4×S3"},
      {"D:12", "D24"},
      {"DP:C:2*DIC:3", "C2×(C3⋊C4)"},
      {"SG24_8", "(C6×C2)⋊C2"},
      {"AB:12x2", "C12×C2"},
      {"DP:C:3*D:4", "C3×D8"},
      {"DP:C:3*DIC:2", "C3×Q8"},
      {"S4", "S4"},
      {"DP:C:2*A4", "C2×A4"},
      {"DP:AB:2x2*D:3", "C2×C2×S3"},
      {"AB:6x2x2", "C6×C2×C2"},
      {"AB:5x5", "C5×C5"},
      {"AB:9x3", "C9×C3"},
      {"HEIS3", "(C3×C3)⋊C3"},
      {"C9sC3", "C9⋊C3"},
      {"AB:3x3x3", "C3×C3×C3"},
      {"DIC:7", "C7⋊C4"},
      {"D:14", "D28"},
      {"AB:14x2", "C14×C2"},
      {"DP:C:5*D:3", "C5×S3"},
      {"DP:C:3*D:5", "C3×D10"},
      {"DIC:9", "C9⋊C4"},
      {"SG36_3", "(C2×C2)⋊C9"},
      {"D:18", "D36"},
      {"AB:18x2", "C18×C2"},
      {"DP:C:3*DIC:3", "C3×(C3⋊C4)"},
      {"SG36_7", "(C3×C3)⋊C4"},
      {"AB:12x3", "C12×C3"},
      {"SG36_9", "(C3×C3)⋊C4"},
      {"DP:D:3*D:3", "S3×S3"},
      {"DP:C:3*A4", "C3×A4"},
      {"DP:C:6*D:3", "C6×S3"},
      {"DP:C:2*SG18_4", "C2×((C3×C3)⋊C2)"},
      {"AB:6x6", "C6×C6"},
      {"SD:13:3:3", "C13⋊C3"},
      {"SD:5:8:4", "C5⋊C8"},
      {"SD:5:8:2", "C5⋊C8"},
      {"DIC:10", "C5⋊Q8"},
      {"DP:C:4*D:5", "C4×D10"},
      {"D:20", "D40"},
      {"DP:C:2*DIC:5", "C2×(C5⋊C4)"},
      {"SG40_8", "(C10×C2)⋊C2"},
      {"AB:20x2", "C20×C2"},
      {"DP:C:5*D:4", "C5×D8"},
      {"DP:C:5*DIC:2", "C5×Q8"},
      {"DP:C:2*SD:5:4:2", "C2×(C5⋊C4)"},
      {"DP:AB:2x2*D:5", "C2×C2×D10"},
      {"AB:10x2x2", "C10×C2×C2"},
      {"C:64", "C64"},
  };
  return rows;
}

const std::vector<CatalogEntry>& naming_pool() {
  static const std::vector<CatalogEntry> pool = [] {
    std::vector<CatalogEntry> out;
    out.push_back({"C:1", "1"});
    for (std::size_t n = 2; n <= 72; ++n) out.push_back({"C:" + std::to_string(n), "C" + std::to_string(n)});
    out.push_back({"AB:2x2", "C2×C2"});
    out.push_back({"D:3", "S3"});
    for (std::size_t n = 4; 2 * n <= 72; ++n)
      out.push_back({"D:" + std::to_string(n), "D" + std::to_string(2 * n)});
    out.push_back({"DP:C:2*D:4", "C2×D8"});
    out.push_back({"C3xS4", "C3×S4"});
    out.push_back({"C3xA4sC2", "(C3×A4)⋊C2"});
    for (const auto& row : table_catalog()) {
      bool dup = false;
      for (const auto& e : out) dup = dup || e.spec == row.spec;
      if (!dup) out.push_back(row);
    }
    return out;
  }();
  return pool;
}

}  // namespace qhol
