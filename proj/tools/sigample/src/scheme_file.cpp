#include "sigample/cli/scheme_file.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sigample/cli/catalog.hpp"

namespace sigample::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + message);
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& field(const Json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(path, "missing field '" + std::string(key) + "'");
  return *it;
}

const Json& array_field(const Json& obj, std::string_view key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_array()) fail(child(path, key), "expected an array");
  return v;
}

std::string string_field(const Json& obj, std::string_view key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_string()) fail(child(path, key), "expected a string");
  return v.get<std::string>();
}

std::size_t size_value(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

/// Integers and fractions may be JSON strings ("12", "-3/4") or JSON integers.
Rational rational_value(const Json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected an integer or fraction (decimal string or JSON integer)");
}

Integer integer_value(const Json& v, const std::string& path) {
  const Rational r = rational_value(v, path);
  if (!is_integral(r)) fail(path, "expected an integer");
  return r.get_num();
}

std::vector<Rational> rational_vector(const Json& v, std::size_t rank, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  if (v.size() != rank) {
    fail(path, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(v.size()));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_value(v[i], child(path, i)));
  return out;
}

SymmetricForm form_value(const Json& v, std::size_t rank, std::size_t order, bool integral,
                         const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of {index, value} entries");
  SymmetricForm form(rank, order);
  std::set<MultiIndex> seen;
  for (std::size_t e = 0; e < v.size(); ++e) {
    const std::string epath = child(path, e);
    const Json& idx_json = array_field(v[e], "index", epath);
    MultiIndex idx;
    for (std::size_t i = 0; i < idx_json.size(); ++i) {
      idx.push_back(size_value(idx_json[i], child(child(epath, "index"), i)));
    }
    if (idx.size() != order) {
      fail(child(epath, "index"), "expected a multi-index of length " + std::to_string(order));
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
      if (idx[i] < idx[i - 1]) fail(child(epath, "index"), "multi-index must be non-decreasing");
    }
    for (std::size_t i : idx) {
      if (i >= rank) fail(child(epath, "index"), "basis index out of range for rank " + std::to_string(rank));
    }
    if (!seen.insert(idx).second) fail(child(epath, "index"), "duplicate multi-index");
    const Rational value = rational_value(field(v[e], "value", epath), child(epath, "value"));
    if (integral && !is_integral(value)) fail(child(epath, "value"), "intersection numbers must be integers");
    form.set(idx, value);
  }
  return form;
}

ComponentDescriptor component_value(const Json& v, std::size_t rank, const std::string& path) {
  ComponentDescriptor c;
  c.name = string_field(v, "name", path);
  c.dim = size_value(field(v, "dim", path), child(path, "dim"));
  if (c.dim == 0) fail(child(path, "dim"), "dimension must be at least 1");
  c.top_form = form_value(field(v, "top_form", path), rank, c.dim, true, child(path, "top_form"));
  if (v.contains("todd")) {
    const Json& todd = array_field(v, "todd", path);
    const std::string tpath = child(path, "todd");
    std::vector<SymmetricForm> functionals(c.dim + 1);
    std::vector<bool> present(c.dim + 1, false);
    for (std::size_t t = 0; t < todd.size(); ++t) {
      const std::string fpath = child(tpath, t);
      const std::size_t degree = size_value(field(todd[t], "degree", fpath), child(fpath, "degree"));
      if (degree > c.dim) fail(child(fpath, "degree"), "degree exceeds the component dimension");
      if (present[degree]) fail(child(fpath, "degree"), "duplicate degree");
      present[degree] = true;
      functionals[degree] = form_value(field(todd[t], "entries", fpath), rank, degree, false,
                                       child(fpath, "entries"));
    }
    for (std::size_t j = 0; j <= c.dim; ++j) {
      if (!present[j]) fail(tpath, "missing functional of degree " + std::to_string(j));
    }
    c.todd = std::move(functionals);
  }
  return c;
}

template <typename T, typename Key>
const T& find_named(const std::vector<T>& items, std::string_view name, std::string_view what, Key key) {
  for (const auto& item : items) {
    if (key(item) == name) return item;
  }
  throw Error(ErrorKind::UnknownName, "no " + std::string(what) + " named '" + std::string(name) + "'");
}

void require_unique(std::set<std::string>& names, const std::string& name, const std::string& path) {
  if (!names.insert(name).second) fail(path, "duplicate name '" + name + "'");
}

Json form_json(const SymmetricForm& form) {
  Json entries = Json::array();
  for (const auto& [idx, value] : form.entries()) {
    entries.push_back(Json{{"index", idx}, {"value", to_string(value)}});
  }
  return entries;
}

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

const AmplenessOracle& SchemeFile::oracle(std::string_view n) const {
  return find_named(oracles, n, "oracle", [](const AmplenessOracle& o) -> const std::string& { return o.name; });
}

const AutomorphismAction& SchemeFile::automorphism(std::string_view n) const {
  return find_named(automorphisms, n, "automorphism",
                    [](const AutomorphismAction& a) -> const std::string& { return a.name; });
}

const DivisorClass& SchemeFile::divisor(std::string_view n) const {
  return find_named(divisors, n, "divisor", [](const NamedDivisor& d) -> const std::string& { return d.name; })
      .divisor;
}

const AmplenessOracle& SchemeFile::pick_oracle(std::string_view n) const {
  if (!n.empty()) return oracle(n);
  if (oracles.size() == 1) return oracles.front();
  throw Error(ErrorKind::UnknownName,
              oracles.empty() ? std::string("scheme defines no ample-cone oracle")
                              : std::string("several oracles defined; choose one with --oracle"));
}

SchemeFile parse_scheme(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // locate the byte offset reported by the parser
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": malformed document");
  }
  return parse_scheme_json(doc);
}

SchemeFile parse_scheme_json(const Json& doc) {
  SchemeFile file;
  const std::string root;
  if (!doc.is_object()) fail(root, "expected an object");
  file.name = doc.contains("name") ? string_field(doc, "name", root) : std::string("unnamed");
  const std::size_t rank = size_value(field(doc, "rank", root), "/rank");
  if (rank == 0) fail("/rank", "rank must be positive");
  file.scheme.rank = rank;
  if (doc.contains("euler_char")) file.scheme.euler_char = rational_value(doc["euler_char"], "/euler_char");

  std::set<std::string> names;
  const Json& comps = array_field(doc, "components", root);
  if (comps.empty()) fail("/components", "at least one component is required");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    file.scheme.components.push_back(component_value(comps[i], rank, child("/components", i)));
    require_unique(names, file.scheme.components.back().name, child("/components", i));
  }

  names.clear();
  if (doc.contains("oracles")) {
    const Json& oracles = array_field(doc, "oracles", root);
    for (std::size_t i = 0; i < oracles.size(); ++i) {
      const std::string path = child("/oracles", i);
      AmplenessOracle o;
      o.name = string_field(oracles[i], "name", path);
      require_unique(names, o.name, path);
      const std::string kind = string_field(oracles[i], "kind", path);
      const Json& data = field(oracles[i], "data", path);
      const std::string dpath = child(path, "data");
      if (kind == "polyhedral") {
        PolyhedralCone cone;
        const Json& facets = array_field(data, "facets", dpath);
        if (facets.empty()) fail(child(dpath, "facets"), "at least one facet is required");
        for (std::size_t f = 0; f < facets.size(); ++f) {
          const std::string fpath = child(child(dpath, "facets"), f);
          const auto values = rational_vector(facets[f], rank, fpath);
          std::vector<Integer> facet;
          for (std::size_t j = 0; j < values.size(); ++j) {
            if (!is_integral(values[j])) fail(child(fpath, j), "facet entries must be integers");
            facet.push_back(values[j].get_num());
          }
          cone.facets.push_back(std::move(facet));
        }
        o.cone = std::move(cone);
      } else if (kind == "surface_positive_cone") {
        SurfacePositiveCone cone;
        const std::string comp = string_field(data, "component", dpath);
        try {
          cone.component = file.scheme.component(comp);
        } catch (const Error&) {
          fail(child(dpath, "component"), "no component named '" + comp + "'");
        }
        if (cone.component.dim != 2) fail(child(dpath, "component"), "component must be a surface");
        cone.reference_ample =
            DivisorClass(rational_vector(field(data, "reference_ample", dpath), rank, child(dpath, "reference_ample")));
        if (data.contains("obstructions")) {
          const Json& obs = array_field(data, "obstructions", dpath);
          for (std::size_t c = 0; c < obs.size(); ++c) {
            cone.obstructions.emplace_back(rational_vector(obs[c], rank, child(child(dpath, "obstructions"), c)));
          }
        }
        o.cone = std::move(cone);
      } else {
        fail(child(path, "kind"), "unknown oracle kind '" + kind + "'");
      }
      file.oracles.push_back(std::move(o));
    }
  }

  names.clear();
  if (doc.contains("automorphisms")) {
    const Json& autos = array_field(doc, "automorphisms", root);
    for (std::size_t i = 0; i < autos.size(); ++i) {
      const std::string path = child("/automorphisms", i);
      AutomorphismAction a;
      a.name = string_field(autos[i], "name", path);
      require_unique(names, a.name, path);
      const Json& rows = array_field(autos[i], "matrix", path);
      const std::string mpath = child(path, "matrix");
      if (rows.size() != rank) fail(mpath, "expected " + std::to_string(rank) + " rows");
      std::vector<Integer> entries;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || row.size() != rank) {
          fail(child(mpath, r), "expected a row of " + std::to_string(rank) + " integers");
        }
        for (std::size_t c = 0; c < rank; ++c) entries.push_back(integer_value(row[c], child(child(mpath, r), c)));
      }
      a.matrix = IntegerMatrix(rank, std::move(entries));
      file.automorphisms.push_back(std::move(a));
    }
  }

  names.clear();
  if (doc.contains("divisors")) {
    const Json& divs = array_field(doc, "divisors", root);
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const std::string path = child("/divisors", i);
      NamedDivisor d;
      d.name = string_field(divs[i], "name", path);
      require_unique(names, d.name, path);
      d.divisor = DivisorClass(rational_vector(field(divs[i], "coords", path), rank, child(path, "coords")));
      file.divisors.push_back(std::move(d));
    }
  }
  return file;
}

Json to_json(const SchemeFile& file) {
  Json doc;
  doc["name"] = file.name;
  doc["rank"] = file.scheme.rank;
  if (file.scheme.euler_char) doc["euler_char"] = to_string(*file.scheme.euler_char);
  Json comps = Json::array();
  for (const auto& c : file.scheme.components) {
    Json jc;
    jc["name"] = c.name;
    jc["dim"] = c.dim;
    jc["top_form"] = form_json(c.top_form);
    if (c.todd) {
      Json todd = Json::array();
      for (std::size_t j = 0; j < c.todd->size(); ++j) {
        todd.push_back(Json{{"degree", j}, {"entries", form_json((*c.todd)[j])}});
      }
      jc["todd"] = std::move(todd);
    }
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);

  Json oracles = Json::array();
  for (const auto& o : file.oracles) {
    Json jo;
    jo["name"] = o.name;
    if (const auto* poly = std::get_if<PolyhedralCone>(&o.cone)) {
      jo["kind"] = "polyhedral";
      Json facets = Json::array();
      for (const auto& f : poly->facets) {
        Json row = Json::array();
        for (const auto& x : f) row.push_back(to_string(x));
        facets.push_back(std::move(row));
      }
      jo["data"] = Json{{"facets", std::move(facets)}};
    } else {
      const auto& cone = std::get<SurfacePositiveCone>(o.cone);
      jo["kind"] = "surface_positive_cone";
      Json obs = Json::array();
      for (const auto& c : cone.obstructions) obs.push_back(vector_json(c.coords));
      jo["data"] = Json{{"component", cone.component.name},
                        {"reference_ample", vector_json(cone.reference_ample.coords)},
                        {"obstructions", std::move(obs)}};
    }
    oracles.push_back(std::move(jo));
  }
  doc["oracles"] = std::move(oracles);

  Json autos = Json::array();
  for (const auto& a : file.automorphisms) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.matrix.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.matrix.size(); ++c) row.push_back(to_string(a.matrix(r, c)));
      rows.push_back(std::move(row));
    }
    autos.push_back(Json{{"name", a.name}, {"matrix", std::move(rows)}});
  }
  doc["automorphisms"] = std::move(autos);

  Json divs = Json::array();
  for (const auto& d : file.divisors) {
    divs.push_back(Json{{"name", d.name}, {"coords", vector_json(d.divisor.coords)}});
  }
  doc["divisors"] = std::move(divs);
  return doc;
}

std::string serialize(const SchemeFile& file) { return to_json(file).dump(2) + "\n"; }

SchemeFile load_scheme(const std::string& path_or_name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_name, ec)) {
    std::ifstream in(path_or_name, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path_or_name + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scheme(buf.str());
  }
  if (in_catalog(path_or_name)) return catalog_entry(path_or_name);
  throw Error(ErrorKind::UnknownName,
              "'" + path_or_name + "' is neither a readable file nor a catalog entry");
}

}  // namespace sigample::cli
