#include "hopfkit/serialization.hpp"

#include <fstream>
#include <sstream>

#include "hopfkit/error.hpp"
#include "json.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kKindNames[] = {"hopf", "truss", "wtph", "wtrb"};

// ---------------------------------------------------------------------------
// Encoding

std::string encode_row(const std::vector<Scalar>& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out += ' ';
    out += row[j].to_string();
  }
  return out;
}

Json encode_map(const LinMap& f) {
  Json rows = Json::array();
  for (const auto& row : f.to_dense()) rows.push_back(encode_row(row));
  return rows;
}

Json encode_braiding(const BraidedObject& obj) {
  if (obj.is_flip()) return "flip";
  return encode_map(obj.c());
}

void put_hopf(Json& maps, const HopfAlgebraData& h, const std::string& prefix = {}) {
  maps[prefix + "eta"] = encode_map(h.eta);
  maps[prefix + "mu"] = encode_map(h.mu);
  maps[prefix + "eps"] = encode_map(h.eps);
  maps[prefix + "delta"] = encode_map(h.delta);
  maps[prefix + "lambda"] = encode_map(h.lambda);
}

// ---------------------------------------------------------------------------
// Decoding

class Decoder {
 public:
  Decoder(const Json& root) : root_(root) {}

  const Json& require(const Json& obj, const std::string& key, const std::string& where) const {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(ErrorKind::parse_error, "missing field '" + where + key + "'");
    return *it;
  }

  FieldSpec field() const {
    const auto& j = require(root_, "field", "");
    if (!j.is_string()) throw Error(ErrorKind::parse_error, "field 'field' must be a string");
    return FieldSpec::parse(j.get<std::string>());
  }

  std::size_t positive(const std::string& key) const {
    const auto& j = require(root_, key, "");
    if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
      throw Error(ErrorKind::parse_error, "field '" + key + "' must be a positive integer");
    }
    return j.get<std::size_t>();
  }

  LinMap matrix(const Json& j, const std::string& name, FieldSpec f, TensorShape dom, TensorShape cod) const {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "map '" + name + "' must be an array of row strings");
    if (j.size() != cod.total()) {
      throw Error(ErrorKind::shape_error, "map '" + name + "' has " + std::to_string(j.size()) + " rows, expected " +
                                              std::to_string(cod.total()) + " for codomain " + cod.to_string());
    }
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (!j[r].is_string()) {
        throw Error(ErrorKind::parse_error, "map '" + name + "' row " + std::to_string(r) + " must be a string");
      }
      std::istringstream in(j[r].get<std::string>());
      std::vector<Scalar> row;
      std::string token;
      while (in >> token) {
        try {
          row.push_back(Scalar::parse(f, token));
        } catch (const Error& e) {
          throw Error(ErrorKind::parse_error, "map '" + name + "' row " + std::to_string(r) + ": " + e.what());
        }
      }
      if (row.size() != dom.total()) {
        throw Error(ErrorKind::shape_error, "map '" + name + "' row " + std::to_string(r) + " has " +
                                                std::to_string(row.size()) + " entries, expected " +
                                                std::to_string(dom.total()) + " for domain " + dom.to_string());
      }
      rows.push_back(std::move(row));
    }
    return LinMap::from_rows(f, std::move(dom), std::move(cod), rows);
  }

  LinMap map(const std::string& name, FieldSpec f, TensorShape dom, TensorShape cod) const {
    const auto& maps = require(root_, "maps", "");
    return matrix(require(maps, name, "maps."), name, f, std::move(dom), std::move(cod));
  }

  bool has_map(const std::string& name) const { return root_.at("maps").contains(name); }

  BraidedObject object(const std::string& key, FieldSpec f, std::size_t n) const {
    const auto& j = require(root_, key, "");
    if (j.is_string() && j.get<std::string>() == "flip") return BraidedObject::symmetric(f, n);
    if (j.is_string()) throw Error(ErrorKind::parse_error, "field '" + key + "' must be \"flip\" or a matrix");
    auto braid = matrix(j, key, f, {n, n}, {n, n});
    return BraidedObject(f, n, std::move(braid));
  }

  HopfAlgebraData hopf(const BraidedObject& obj, const std::string& prefix = {}) const {
    auto f = obj.field();
    auto n = obj.dim();
    return {obj,
            map(prefix + "eta", f, {}, {n}),
            map(prefix + "mu", f, {n, n}, {n}),
            map(prefix + "eps", f, {n}, {}),
            map(prefix + "delta", f, {n}, {n, n}),
            map(prefix + "lambda", f, {n}, {n})};
  }

 private:
  const Json& root_;
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

}  // namespace

std::string_view to_string(StructureKind kind) { return kKindNames[static_cast<int>(kind)]; }

StructureKind parse_kind(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    if (text == kKindNames[i]) return static_cast<StructureKind>(i);
  }
  throw Error(ErrorKind::unknown_kind, "'" + std::string(text) + "' (expected hopf, truss, wtph or wtrb)");
}

std::string serialize(const StructureFile& file) {
  Json root;
  root["format-version"] = kFormatVersion;
  root["kind"] = std::string(to_string(file.kind()));
  Json maps = Json::object();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        const BraidedObject* obj = nullptr;
        if constexpr (std::is_same_v<T, HopfAlgebraData>) {
          obj = &s.obj;
          put_hopf(maps, s);
        } else if constexpr (std::is_same_v<T, HopfTrussData>) {
          obj = &s.obj;
          maps["eta"] = encode_map(s.eta);
          maps["mu1"] = encode_map(s.mu1);
          maps["mu2"] = encode_map(s.mu2);
          maps["eps"] = encode_map(s.eps);
          maps["delta"] = encode_map(s.delta);
          maps["lambda"] = encode_map(s.lambda);
          maps["sigma"] = encode_map(s.sigma);
        } else if constexpr (std::is_same_v<T, WTPHData>) {
          obj = &s.H.obj;
          put_hopf(maps, s.H);
          maps["m"] = encode_map(s.m);
          maps["Phi"] = encode_map(s.Phi);
        } else {
          obj = &s.H.obj;
          put_hopf(maps, s.H);
          if (s.B.eta) maps["B.eta"] = encode_map(*s.B.eta);
          maps["B.mu"] = encode_map(s.B.mu);
          maps["B.eps"] = encode_map(s.B.eps);
          maps["B.delta"] = encode_map(s.B.delta);
          maps["phi"] = encode_map(s.phi);
          maps["T"] = encode_map(s.T);
          maps["Psi"] = encode_map(s.Psi);
        }
        root["field"] = obj->field().to_string();
        root["dim"] = obj->dim();
        if constexpr (std::is_same_v<T, WTRBData>) root["b_dim"] = s.B.obj.dim();
        if (!file.basis.empty()) root["basis"] = file.basis;
        root["braiding"] = encode_braiding(*obj);
        if constexpr (std::is_same_v<T, WTRBData>) root["b_braiding"] = encode_braiding(s.B.obj);
      },
      file.value);
  root["maps"] = std::move(maps);
  Json meta = Json::object();
  for (const auto& [k, v] : file.metadata) meta[k] = v;
  root["metadata"] = std::move(meta);
  return root.dump(2) + "\n";
}

StructureFile deserialize(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!root.is_object()) throw Error(ErrorKind::parse_error, "top level must be an object");
  Decoder dec(root);
  const auto& version = dec.require(root, "format-version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw Error(ErrorKind::parse_error, "unsupported format-version " + version.dump());
  }
  const auto& kind_json = dec.require(root, "kind", "");
  if (!kind_json.is_string()) throw Error(ErrorKind::parse_error, "field 'kind' must be a string");
  auto kind = parse_kind(kind_json.get<std::string>());
  auto f = dec.field();
  auto n = dec.positive("dim");
  if (!dec.require(root, "maps", "").is_object()) throw Error(ErrorKind::parse_error, "field 'maps' must be an object");

  auto obj = dec.object("braiding", f, n);
  auto value = [&]() -> Structure {
    switch (kind) {
      case StructureKind::hopf:
        return dec.hopf(obj);
      case StructureKind::truss:
        return HopfTrussData{obj,
                             dec.map("eta", f, {}, {n}),
                             dec.map("mu1", f, {n, n}, {n}),
                             dec.map("mu2", f, {n, n}, {n}),
                             dec.map("eps", f, {n}, {}),
                             dec.map("delta", f, {n}, {n, n}),
                             dec.map("lambda", f, {n}, {n}),
                             dec.map("sigma", f, {n}, {n})};
      case StructureKind::wtph:
        return WTPHData{dec.hopf(obj), dec.map("m", f, {n, n}, {n}), dec.map("Phi", f, {n}, {n})};
      case StructureKind::wtrb:
        break;
    }
    auto b = dec.positive("b_dim");
    auto bobj = dec.object("b_braiding", f, b);
    std::optional<LinMap> b_eta;
    if (dec.has_map("B.eta")) b_eta = dec.map("B.eta", f, {}, {b});
    NonUnitalBialgebraData bd{bobj, dec.map("B.mu", f, {b, b}, {b}), dec.map("B.eps", f, {b}, {}),
                              dec.map("B.delta", f, {b}, {b, b}), b_eta};
    return WTRBData{dec.hopf(obj), std::move(bd), dec.map("phi", f, {b, n}, {n}), dec.map("T", f, {n}, {b}),
                    dec.map("Psi", f, {n}, {n})};
  }();
  StructureFile out{std::move(value), {}, {}};
  if (auto it = root.find("basis"); it != root.end()) {
    if (!it->is_array() || it->size() != n) {
      throw Error(ErrorKind::shape_error, "field 'basis' must list exactly " + std::to_string(n) + " names");
    }
    for (const auto& name : *it) {
      if (!name.is_string()) throw Error(ErrorKind::parse_error, "basis names must be strings");
      out.basis.push_back(name.get<std::string>());
    }
  }
  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) throw Error(ErrorKind::parse_error, "field 'metadata' must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) throw Error(ErrorKind::parse_error, "metadata '" + k + "' must be a string");
      out.metadata[k] = v.get<std::string>();
    }
  }
  return out;
}

StructureFile load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return deserialize(buf.str());
  } catch (const Error& e) {
    std::string msg = e.what();
    throw Error(e.kind(), path.string() + ": " + msg.substr(msg.find(": ") + 2));
  }
}

void save(const StructureFile& file, const std::filesystem::path& path) {
  auto text = serialize(file);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorKind::parse_error, "write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

CheckReport check_structure(const Structure& s) {
  return std::visit(
      [](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HopfAlgebraData>) {
          return full_hopf_suite(x);
        } else if constexpr (std::is_same_v<T, HopfTrussData>) {
          return check_truss(x);
        } else if constexpr (std::is_same_v<T, WTPHData>) {
          CheckReport r;
          r.merge(full_hopf_suite(x.H), "H");
          r.merge(check_wtph(x));
          return r;
        } else {
          CheckReport r;
          r.merge(full_hopf_suite(x.H), "H");
          r.merge(check_nonunital_bialgebra(x.B), "B");
          r.merge(check_wtrb(x));
          return r;
        }
      },
      s);
}

}  // namespace hopfkit
