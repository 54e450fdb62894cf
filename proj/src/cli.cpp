#include "hopfkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/examples.hpp"
#include "hopfkit/serialization.hpp"
#include "json.hpp"

namespace hopfkit {

namespace {

constexpr int kPass = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;

// Enumeration bound for the brute-force operator search (candidate matrices).
constexpr std::uint64_t kSearchBound = 1u << 20;

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error:
    case ErrorKind::shape_error:
    case ErrorKind::unknown_kind:
    case ErrorKind::domain_mismatch:
    case ErrorKind::unknown_group:
    case ErrorKind::char_two:
    case ErrorKind::bound_exceeded:
    case ErrorKind::invalid_field:
    case ErrorKind::invalid_group_table:
    case ErrorKind::invalid_action:
    case ErrorKind::shape_mismatch:
      return true;
    default:
      return false;
  }
}

std::string outcome_json(Outcome o) { return std::string(to_string(o)); }

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const auto& l : r.laws()) {
    nlohmann::ordered_json j;
    j["law"] = l.law;
    j["anchor"] = l.anchor;
    j["outcome"] = outcome_json(l.outcome);
    if (l.witness) j["witness"] = l.witness->to_string();
    if (!l.note.empty()) j["note"] = l.note;
    laws.push_back(std::move(j));
  }
  return laws;
}

void write_report(std::ostream& out, const CheckReport& r, const std::string& path, StructureKind kind,
                  const std::string& format) {
  if (format == "machine") {
    nlohmann::ordered_json j;
    j["file"] = path;
    j["kind"] = std::string(to_string(kind));
    j["passed"] = r.passed();
    j["failures"] = r.failures();
    j["laws"] = report_json(r);
    out << j.dump(2) << "\n";
  } else {
    out << path << " (" << to_string(kind) << ")\n" << r.to_text();
  }
}

StructureKind domain_of(const std::string& functor) {
  if (functor == "F" || functor == "split") return StructureKind::wtph;
  if (functor == "G" || functor == "Lambda") return StructureKind::truss;
  return StructureKind::wtrb;
}

/// The ★ predicate appropriate to each kind, as a single law.
void add_star(CheckReport& r, const Structure& s) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HopfAlgebraData>) {
          r.add("star:class-condition(mu)", "class-condition", cocommutativity_class_check(x.mu, x.coalgebra()));
        } else if constexpr (std::is_same_v<T, HopfTrussData>) {
          r.add("star:class-condition(gamma)", "hopf-truss:star", check_truss_star(x));
        } else if constexpr (std::is_same_v<T, WTPHData>) {
          r.add("star:class-condition(m)", "wtph:star", cocommutativity_class_check(x.m, x.H.coalgebra()));
        } else {
          r.add("star:class-condition(frak-m)", "wtrb:star", check_rb_star(x));
        }
      },
      s);
}

GroupTable resolve_group(const std::string& name, const std::string& table_path) {
  if (table_path.empty()) return catalog_group(name);
  std::ifstream in(table_path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open table '" + table_path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    return GroupTable(name.empty() ? table_path : name, j.get<std::vector<std::vector<std::size_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, "table '" + table_path + "': " + e.what());
  }
}

std::vector<std::size_t> parse_images(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad image list '" + text + "'");
    }
  }
  return out;
}

void emit(const StructureFile& file, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << serialize(file);
  } else {
    save(file, path);
  }
}

LinMap reinterpret(const LinMap& f, FieldSpec field) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : f.to_dense()) {
    auto& r = rows.emplace_back();
    for (const auto& s : row) r.push_back(Scalar::parse(field, s.to_string()));
  }
  return LinMap::from_rows(field, f.dom(), f.cod(), rows);
}

HopfAlgebraData reinterpret(const HopfAlgebraData& h, FieldSpec field) {
  auto obj = h.obj.is_flip() ? BraidedObject::symmetric(field, h.dim())
                             : BraidedObject(field, h.dim(), reinterpret(h.obj.braid(), field));
  return {obj, reinterpret(h.eta, field), reinterpret(h.mu, field), reinterpret(h.eps, field),
          reinterpret(h.delta, field), reinterpret(h.lambda, field)};
}

// ---------------------------------------------------------------------------
// Subcommands

struct CheckArgs {
  std::string path;
  std::string kind = "auto";
  bool star = false;
  std::string report = "text";
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  auto file = load(a.path);
  if (a.kind != "auto" && parse_kind(a.kind) != file.kind()) {
    throw Error(ErrorKind::domain_mismatch, "file holds a " + std::string(to_string(file.kind())) + ", not a " + a.kind);
  }
  auto start = std::chrono::steady_clock::now();
  auto r = check_structure(file.value);
  if (a.star) add_star(r, file.value);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  write_report(out, r, a.path, file.kind(), a.report);
  err << "checked " << r.laws().size() << " laws in " << ms << " ms\n";
  return r.passed() ? kPass : kLawFailure;
}

struct ConstructArgs {
  std::string path;
  std::string functor;
  std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  auto in = load(a.path);
  if (in.kind() != domain_of(a.functor)) {
    throw Error(ErrorKind::domain_mismatch, "functor " + a.functor + " expects a " +
                                                std::string(to_string(domain_of(a.functor))) + ", file holds a " +
                                                std::string(to_string(in.kind())));
  }
  StructureFile result{in.value, in.basis, in.metadata};
  if (a.functor == "F") {
    result.value = functor_F(std::get<WTPHData>(in.value));
  } else if (a.functor == "G") {
    result.value = functor_G(std::get<HopfTrussData>(in.value));
  } else if (a.functor == "Omega") {
    result.value = functor_Omega(std::get<WTRBData>(in.value));
  } else if (a.functor == "Lambda") {
    result.value = functor_Lambda(std::get<HopfTrussData>(in.value));
  } else {
    const auto& w = std::get<WTPHData>(in.value);
    auto s = split_idempotent(w.Phi);
    result.value = induced_hopf(w, s);
    if (s.r != w.H.dim()) result.basis.clear();
  }
  auto r = check_structure(result.value);
  if (!r.passed()) {
    err << "constructed " << to_string(result.kind()) << " fails its checks; nothing written\n" << r.to_text();
    return kLawFailure;
  }
  emit(result, a.output, out);
  return kPass;
}

struct GenArgs {
  std::string kind;
  std::string group;
  std::string table;
  std::string endo = "identity";
  std::string upsilon;
  std::string field = "Q";
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  auto field = FieldSpec::parse(a.field);
  StructureFile file{sweedler_h4(FieldSpec::rationals()), {}, {}};
  file.metadata["generator"] = a.kind;
  file.metadata["field"] = field.to_string();
  if (a.kind == "sweedler") {
    file.value = sweedler_h4(field);
    file.basis = {"1", "g", "x", "gx"};
  } else {
    if (a.group.empty() && a.table.empty()) throw Error(ErrorKind::parse_error, a.kind + " requires --group or --table");
    auto g = resolve_group(a.group, a.table);
    file.metadata["group"] = g.name();
    auto h = group_algebra(g, field);
    if (a.kind == "group-algebra") {
      file.value = h;
    } else if (a.kind == "function-algebra") {
      file.value = function_algebra(g, field);
    } else if (a.kind == "truss-q") {
      file.metadata["endo"] = a.endo;
      file.value = truss_from_idempotent(h, linearize(g, named_endo(g, a.endo), field));
    } else {
      if (a.upsilon.empty()) throw Error(ErrorKind::parse_error, "truss-upsilon requires --upsilon");
      auto images = parse_images(a.upsilon);
      if (images.size() != g.order()) {
        throw Error(ErrorKind::parse_error, "--upsilon needs " + std::to_string(g.order()) + " images");
      }
      for (auto x : images) {
        if (x >= g.order()) throw Error(ErrorKind::parse_error, "--upsilon image out of range");
      }
      file.metadata["endo"] = a.endo;
      file.metadata["upsilon"] = a.upsilon;
      file.value = truss_from_twisted_operator(h, linearize(g, named_endo(g, a.endo), field),
                                               linearize(g, GroupEndo{images}, field));
    }
  }
  emit(file, a.output, out);
  return kPass;
}

struct SearchArgs {
  std::string what;
  std::string group;
  std::string table;
  std::string file;
  std::string field;
  std::size_t max_dim = 2;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  if (a.what == "idempotents") {
    if (a.group.empty() && a.table.empty()) throw Error(ErrorKind::parse_error, "idempotents requires --group or --table");
    auto g = resolve_group(a.group, a.table);
    auto endos = idempotent_endos(g);
    for (const auto& e : endos) {
      out << "[";
      for (std::size_t i = 0; i < e.images.size(); ++i) out << (i ? "," : "") << e.images[i];
      out << "]\n";
    }
    out << endos.size() << " idempotent endomorphism(s) of " << g.name() << "\n";
    return kPass;
  }

  if (a.file.empty()) throw Error(ErrorKind::parse_error, "rb-operators requires --file");
  auto field = a.field.empty() ? FieldSpec::rationals() : FieldSpec::parse(a.field);
  if (field.is_rational()) throw Error(ErrorKind::bound_exceeded, "exhaustive search needs a prime field GF:p");
  if (a.max_dim > 2) throw Error(ErrorKind::bound_exceeded, "--max-dim is limited to 2");
  auto in = load(a.file);
  if (in.kind() != StructureKind::hopf) throw Error(ErrorKind::domain_mismatch, "rb-operators expects a hopf file");
  auto h = reinterpret(std::get<HopfAlgebraData>(in.value), field);
  auto n = h.dim();
  if (n > a.max_dim) {
    throw Error(ErrorKind::bound_exceeded, "dimension " + std::to_string(n) + " exceeds --max-dim " + std::to_string(a.max_dim));
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    total *= p;
    if (total > kSearchBound) throw Error(ErrorKind::bound_exceeded, "search space exceeds " + std::to_string(kSearchBound));
  }
  std::size_t found = 0;
  std::vector<std::int64_t> entries(n * n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (auto& e : entries) {
      e = static_cast<std::int64_t>(c % p);
      c /= p;
    }
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) rows[r][col] = entries[r * n + col];
    auto q = LinMap::from_ints(field, {n}, {n}, rows);
    try {
      truss_from_idempotent(h, q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::condition_b_failed) continue;
      throw;
    }
    ++found;
    out << to_string(q) << "\n";
  }
  out << found << " operator(s) q over " << field.to_string() << " (of " << total << " candidates)\n";
  return kPass;
}

int cmd_report(const std::vector<std::string>& paths, bool star, std::ostream& out) {
  bool all = true;
  out << "| file | kind | law | anchor | outcome |\n|---|---|---|---|---|\n";
  for (const auto& path : paths) {
    auto file = load(path);
    auto r = check_structure(file.value);
    if (star) add_star(r, file.value);
    all = all && r.passed();
    for (const auto& l : r.laws()) {
      out << "| " << path << " | " << to_string(file.kind()) << " | " << l.law << " | " << l.anchor << " | "
          << to_string(l.outcome) << " |\n";
    }
  }
  return all ? kPass : kLawFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Hopf trusses, twisted post-Hopf algebras and twisted Rota-Baxter operators",
               "hopfkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run the full checker suite on a structure file");
  c->add_option("path", check.path, "Structure file")->required();
  c->add_option("--kind", check.kind, "Expected kind")->check(CLI::IsMember({"auto", "hopf", "truss", "wtph", "wtrb"}));
  c->add_flag("--star", check.star, "Also evaluate the class (star) condition");
  c->add_option("--report", check.report, "Report format")->check(CLI::IsMember({"text", "machine"}));
  c->callback([&] { action = [&] { return cmd_check(check, out, err); }; });

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "Apply a functor and write the checked result");
  k->add_option("path", construct.path, "Input structure file")->required();
  k->add_option("--functor", construct.functor, "Functor to apply")
      ->required()
      ->check(CLI::IsMember({"F", "G", "Omega", "Lambda", "split"}));
  k->add_option("-o,--output", construct.output, "Output file (stdout if omitted)");
  k->callback([&] { action = [&] { return cmd_construct(construct, out, err); }; });

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an example structure file");
  g->add_option("kind", gen.kind, "Example family")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "function-algebra", "sweedler", "truss-q", "truss-upsilon"}));
  g->add_option("--group", gen.group, "Catalog group name");
  g->add_option("--table", gen.table, "Cayley table file (JSON array of rows)");
  g->add_option("--endo", gen.endo, "Endomorphism: identity, trivial, sign-retraction or index:k");
  g->add_option("--upsilon", gen.upsilon, "Comma-separated images of the set map");
  g->add_option("--field", gen.field, "Q or GF:p");
  g->add_option("-o,--output", gen.output, "Output file (stdout if omitted)");
  g->callback([&] { action = [&] { return cmd_gen(gen, out); }; });

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Exhaustive searches");
  s->add_option("what", search.what, "idempotents or rb-operators")
      ->required()
      ->check(CLI::IsMember({"idempotents", "rb-operators"}));
  s->add_option("--group", search.group, "Catalog group name");
  s->add_option("--table", search.table, "Cayley table file");
  s->add_option("--file", search.file, "Hopf structure file");
  s->add_option("--field", search.field, "GF:p");
  s->add_option("--max-dim", search.max_dim, "Largest dimension searched");
  s->callback([&] { action = [&] { return cmd_search(search, out); }; });

  std::vector<std::string> report_paths;
  bool report_star = false;
  auto* r = app.add_subcommand("report", "Law-by-law traceability table for one or more files");
  r->add_option("paths", report_paths, "Structure files")->required();
  r->add_flag("--star", report_star, "Also evaluate the class (star) condition");
  r->callback([&] { action = [&] { return cmd_report(report_paths, report_star, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kLawFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hopfkit
