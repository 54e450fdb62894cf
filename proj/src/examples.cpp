#include "hopfkit/examples.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "hopfkit/error.hpp"

namespace hopfkit {

GroupTable::GroupTable(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::invalid_group_table, name_ + ": " + why);
  };
  if (n == 0) fail("empty table");
  for (const auto& row : table_) {
    if (row.size() != n) fail("table is not square");
    for (auto v : row) {
      if (v >= n) fail("entry out of range");
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[a][x] == x && table_[x][a] == x;
    if (ok) e = a;
  }
  if (!e) fail("no identity element");
  identity_ = *e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) fail("not associative");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) fail("element " + std::to_string(a) + " has no inverse");
  }
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable("C" + std::to_string(n), std::move(t));
}

GroupTable symmetric_group3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable("S3", std::move(t));
}

GroupTable dihedral_group4() {
  auto c4 = cyclic_group(4);
  auto c2 = cyclic_group(2);
  std::vector<GroupEndo> action{{{0, 1, 2, 3}}, {{0, 3, 2, 1}}};
  auto g = semidirect_group(c4, c2, action);
  return GroupTable("D4", g.table());
}

GroupTable quaternion_group() {
  // Units 1, i, j, k as 0..3; element index = sign·4 + unit.
  static constexpr std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t ua = a % 4, ub = b % 4;
      bool negative = (a / 4) ^ (b / 4) ^ (sign[ua][ub] < 0);
      t[a][b] = (negative ? 4 : 0) + unit[ua][ub];
    }
  }
  return GroupTable("Q8", std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return GroupTable(a.name() + "x" + b.name(), std::move(t));
}

std::vector<std::string> catalog_names() {
  return {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3",
          "D4", "Q8", "V4", "C2xC4", "C2xC2xC2"};
}

GroupTable catalog_group(std::string_view name) {
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '1' && name[1] <= '8') {
    return cyclic_group(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name == "S3") return symmetric_group3();
  if (name == "D4") return dihedral_group4();
  if (name == "Q8") return quaternion_group();
  if (name == "V4") return GroupTable("V4", direct_product(cyclic_group(2), cyclic_group(2)).table());
  if (name == "C2xC4") return direct_product(cyclic_group(2), cyclic_group(4));
  if (name == "C2xC2xC2") {
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  }
  throw Error(ErrorKind::unknown_group, "no catalog group named '" + std::string(name) + "'");
}

namespace {

std::vector<std::size_t> generating_set(const GroupTable& g) {
  std::vector<std::size_t> gens;
  std::vector<char> in_subgroup(g.order(), 0);
  in_subgroup[g.identity()] = 1;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (!in_subgroup[x]) continue;
        for (auto s : gens) {
          auto y = g.mul(x, s);
          if (!in_subgroup[y]) in_subgroup[y] = grew = 1;
        }
      }
    }
  };
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!in_subgroup[x]) {
      gens.push_back(x);
      close();
    }
  }
  return gens;
}

// Extends generator images to a map; nullopt when the assignment is inconsistent.
std::optional<std::vector<std::size_t>> extend(const GroupTable& a, const GroupTable& b,
                                               const std::vector<std::size_t>& gens,
                                               const std::vector<std::size_t>& images) {
  const std::size_t none = b.order();
  std::vector<std::size_t> f(a.order(), none);
  f[a.identity()] = b.identity();
  std::vector<std::size_t> queue{a.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = a.mul(x, gens[k]);
      auto fy = b.mul(f[x], images[k]);
      if (f[y] == none) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return std::nullopt;
  return f;
}

void for_each_homomorphism(const GroupTable& a, const GroupTable& b,
                           const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  auto gens = generating_set(a);
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    if (auto f = extend(a, b, gens, images)) {
      if (!visit(*f)) return;
    }
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == b.order()) images[k++] = 0;
    if (k == images.size()) return;
  }
}

}  // namespace

bool is_homomorphism(const GroupTable& g, const GroupEndo& f) {
  if (f.images.size() != g.order()) return false;
  for (auto v : f.images)
    if (v >= g.order()) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (f.images[g.mul(x, y)] != g.mul(f.images[x], f.images[y])) return false;
  return true;
}

bool is_idempotent(const GroupEndo& f) {
  for (auto v : f.images)
    if (f.images[v] != v) return false;
  return true;
}

std::vector<GroupEndo> idempotent_endos(const GroupTable& g, std::size_t bound) {
  if (g.order() > bound) {
    throw Error(ErrorKind::bound_exceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds the search bound " + std::to_string(bound));
  }
  std::vector<GroupEndo> out;
  for_each_homomorphism(g, g, [&](const std::vector<std::size_t>& f) {
    GroupEndo e{f};
    if (is_idempotent(e)) out.push_back(std::move(e));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

GroupEndo named_endo(const GroupTable& g, std::string_view name) {
  GroupEndo f;
  if (name == "identity") {
    for (std::size_t x = 0; x < g.order(); ++x) f.images.push_back(x);
    return f;
  }
  if (name == "trivial") {
    f.images.assign(g.order(), g.identity());
    return f;
  }
  if (name == "sign-retraction") {
    // Retraction onto {e, t} with kernel of index two, t of smallest index.
    std::optional<GroupEndo> best;
    std::size_t best_target = g.order();
    for (const auto& e : idempotent_endos(g)) {
      std::size_t fixed = 0, kernel = 0, target = g.order();
      for (std::size_t x = 0; x < g.order(); ++x) {
        kernel += e.images[x] == g.identity();
        if (e.images[x] == x) {
          ++fixed;
          if (x != g.identity()) target = x;
        }
      }
      if (fixed == 2 && 2 * kernel == g.order() && target < best_target) {
        best = e;
        best_target = target;
      }
    }
    if (!best) throw Error(ErrorKind::precondition_not_met, g.name() + " has no sign-retraction");
    return *best;
  }
  if (name.starts_with("index:")) {
    auto endos = idempotent_endos(g);
    std::size_t k = 0;
    try {
      k = std::stoul(std::string(name.substr(6)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad endomorphism index '" + std::string(name) + "'");
    }
    if (k >= endos.size()) {
      throw Error(ErrorKind::parse_error, "endomorphism index " + std::to_string(k) + " out of range (" +
                                              std::to_string(endos.size()) + " idempotents)");
    }
    return endos[k];
  }
  throw Error(ErrorKind::parse_error, "unknown endomorphism '" + std::string(name) + "'");
}

LinMap linearize(const GroupTable& g, const GroupEndo& f, FieldSpec field) {
  std::vector<std::vector<LinMap::Entry>> cols(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    cols[x].push_back({static_cast<std::uint32_t>(f.images.at(x)), Scalar(field, 1)});
  }
  return LinMap::from_columns(field, {g.order()}, {g.order()}, std::move(cols));
}

namespace {

using Columns = std::vector<std::vector<LinMap::Entry>>;

LinMap basis_map(FieldSpec field, TensorShape dom, TensorShape cod,
                 const std::function<std::vector<std::pair<std::size_t, std::int64_t>>(std::size_t)>& image) {
  Columns cols(dom.total());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (auto [row, v] : image(c)) cols[c].push_back({static_cast<std::uint32_t>(row), Scalar(field, v)});
  }
  return LinMap::from_columns(field, std::move(dom), std::move(cod), std::move(cols));
}

}  // namespace

HopfAlgebraData group_algebra(const GroupTable& g, FieldSpec field) {
  const std::size_t n = g.order();
  auto one = [](std::size_t r) { return std::vector<std::pair<std::size_t, std::int64_t>>{{r, 1}}; };
  return HopfAlgebraData{
      BraidedObject::symmetric(field, n),
      basis_map(field, {}, {n}, [&](std::size_t) { return one(g.identity()); }),
      basis_map(field, {n, n}, {n}, [&](std::size_t c) { return one(g.mul(c / n, c % n)); }),
      basis_map(field, {n}, {}, [&](std::size_t) { return one(0); }),
      basis_map(field, {n}, {n, n}, [&](std::size_t c) { return one(c * n + c); }),
      basis_map(field, {n}, {n}, [&](std::size_t c) { return one(g.inverse(c)); }),
  };
}

HopfAlgebraData function_algebra(const GroupTable& g, FieldSpec field) {
  const std::size_t n = g.order();
  using Image = std::vector<std::pair<std::size_t, std::int64_t>>;
  return HopfAlgebraData{
      BraidedObject::symmetric(field, n),
      basis_map(field, {}, {n}, [&](std::size_t) {
        Image im;
        for (std::size_t x = 0; x < n; ++x) im.push_back({x, 1});
        return im;
      }),
      basis_map(field, {n, n}, {n}, [&](std::size_t c) {
        return c / n == c % n ? Image{{c / n, 1}} : Image{};
      }),
      basis_map(field, {n}, {}, [&](std::size_t c) { return c == g.identity() ? Image{{0, 1}} : Image{}; }),
      basis_map(field, {n}, {n, n}, [&](std::size_t c) {
        Image im;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (g.mul(a, b) == c) im.push_back({a * n + b, 1});
        return im;
      }),
      basis_map(field, {n}, {n}, [&](std::size_t c) { return Image{{g.inverse(c), 1}}; }),
  };
}

HopfAlgebraData sweedler_h4(FieldSpec field) {
  if (field.characteristic() == 2) {
    throw Error(ErrorKind::char_two, "Sweedler's algebra needs characteristic different from 2");
  }
  using Image = std::vector<std::pair<std::size_t, std::int64_t>>;
  // Basis index a + 2b for g^a x^b.
  auto product = [](std::size_t c) -> Image {
    std::size_t l = c / 4, r = c % 4;
    std::size_t a = l % 2, b = l / 2, cc = r % 2, d = r / 2;
    if (b + d >= 2) return {};
    std::int64_t sign = (b * cc) % 2 ? -1 : 1;
    return {{(a + cc) % 2 + 2 * (b + d), sign}};
  };
  auto coproduct = [](std::size_t c) -> Image {
    switch (c) {
      case 0: return {{0 * 4 + 0, 1}};
      case 1: return {{1 * 4 + 1, 1}};
      case 2: return {{2 * 4 + 0, 1}, {1 * 4 + 2, 1}};
      default: return {{3 * 4 + 1, 1}, {0 * 4 + 3, 1}};
    }
  };
  auto antipode = [](std::size_t c) -> Image {
    switch (c) {
      case 0: return {{0, 1}};
      case 1: return {{1, 1}};
      case 2: return {{3, -1}};
      default: return {{2, 1}};
    }
  };
  return HopfAlgebraData{
      BraidedObject::symmetric(field, 4),
      basis_map(field, {}, {4}, [](std::size_t) { return Image{{0, 1}}; }),
      basis_map(field, {4, 4}, {4}, product),
      basis_map(field, {4}, {}, [](std::size_t c) { return c < 2 ? Image{{0, 1}} : Image{}; }),
      basis_map(field, {4}, {4, 4}, coproduct),
      basis_map(field, {4}, {4}, antipode),
  };
}

BialgebraData two_element_monoid_bialgebra(FieldSpec field) {
  using Image = std::vector<std::pair<std::size_t, std::int64_t>>;
  return BialgebraData{
      BraidedObject::symmetric(field, 2),
      basis_map(field, {}, {2}, [](std::size_t) { return Image{{0, 1}}; }),
      basis_map(field, {2, 2}, {2}, [](std::size_t c) { return Image{{c == 0 ? 0u : 1u, 1}}; }),
      basis_map(field, {2}, {}, [](std::size_t) { return Image{{0, 1}}; }),
      basis_map(field, {2}, {2, 2}, [](std::size_t c) { return Image{{c * 2 + c, 1}}; }),
  };
}

GroupTable semidirect_group(const GroupTable& a, const GroupTable& h,
                            const std::vector<GroupEndo>& action) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::invalid_action, why); };
  if (action.size() != h.order()) fail("need one automorphism per element of the acting group");
  for (std::size_t x = 0; x < h.order(); ++x) {
    if (!is_homomorphism(a, action[x])) fail("action of element " + std::to_string(x) + " is not a homomorphism");
    auto sorted = action[x].images;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != k) fail("action of element " + std::to_string(x) + " is not bijective");
  }
  for (std::size_t x = 0; x < h.order(); ++x)
    for (std::size_t y = 0; y < h.order(); ++y)
      for (std::size_t b = 0; b < a.order(); ++b)
        if (action[h.mul(x, y)].images[b] != action[x].images[action[y].images[b]])
          fail("action is not compatible with the group law");
  const std::size_t na = a.order(), nh = h.order();
  std::vector<std::vector<std::size_t>> t(na * nh, std::vector<std::size_t>(na * nh));
  for (std::size_t p = 0; p < na * nh; ++p) {
    for (std::size_t q = 0; q < na * nh; ++q) {
      auto ai = p / nh, hi = p % nh, bi = q / nh, li = q % nh;
      t[p][q] = a.mul(ai, action[hi].images[bi]) * nh + h.mul(hi, li);
    }
  }
  return GroupTable(a.name() + "x|" + h.name(), std::move(t));
}

bool isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  bool found = false;
  for_each_homomorphism(a, b, [&](const std::vector<std::size_t>& f) {
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    found = sorted.size() == a.order();
    return !found;
  });
  return found;
}

}  // namespace hopfkit
