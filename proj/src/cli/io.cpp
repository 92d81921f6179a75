#include "io.hpp"

#include <fstream>
#include <sstream>

#include "twisted/error.hpp"

namespace twisted::cli {

namespace {

void check_fields(const Json& doc, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!doc.is_object()) throw InputError(what + " must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError(what + ": unknown field \"" + key + "\"");
  }
}

const Json& require(const Json& doc, const char* field, const std::string& what) {
  auto it = doc.find(field);
  if (it == doc.end()) throw InputError(what + ": missing field \"" + std::string(field) + "\"");
  return *it;
}

std::size_t as_size(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(what + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> as_size_list(const Json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_size(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Element as_element(const Json& v, const FiniteGroup& g, const std::string& what) {
  const std::size_t e = as_size(v, what);
  if (e >= g.order())
    throw InputError(what + " = " + std::to_string(e) + " is out of range for a group of order " +
                     std::to_string(g.order()));
  return static_cast<Element>(e);
}

std::vector<Element> as_elements(const Json& v, const FiniteGroup& g, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be an array");
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_element(v[i], g, what + "[" + std::to_string(i) + "]"));
  return out;
}

mpz_class as_integer(const Json& v, const std::string& what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
    return mpz_class(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError(what + ": \"" + s + "\" is not a decimal integer");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw InputError(what + " must be an integer or a decimal string");
}

GroupPtr nested_group(const Json& v, const std::filesystem::path& base_dir) {
  if (v.is_string()) return load_group(base_dir / v.get<std::string>());
  return parse_group(v, base_dir);
}

} // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

GroupPtr parse_group(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw InputError("group description must be a JSON object");
  const auto& kind_field = require(doc, "kind", "group");
  if (!kind_field.is_string()) throw InputError("group: \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();

  if (kind == "cyclic" || kind == "dihedral" || kind == "symmetric") {
    check_fields(doc, {"kind", "n"}, kind + " group");
    const std::size_t n = as_size(require(doc, "n", kind), kind + " n");
    if (kind == "cyclic") return build_group(CyclicSpec{n});
    if (kind == "dihedral") return build_group(DihedralSpec{n});
    return build_group(SymmetricSpec{n});
  }
  if (kind == "table") {
    check_fields(doc, {"kind", "order", "table", "names"}, "table group");
    const std::size_t order = as_size(require(doc, "order", "table"), "table order");
    const auto& rows = require(doc, "table", "table group");
    if (!rows.is_array()) throw InputError("table must be an array of rows");
    if (rows.size() != order)
      throw InputError("table has " + std::to_string(rows.size()) + " rows but order is " + std::to_string(order));
    TableSpec spec;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto row = as_size_list(rows[i], "table row " + std::to_string(i));
      spec.rows.emplace_back(row.begin(), row.end());
    }
    if (auto it = doc.find("names"); it != doc.end()) {
      if (!it->is_array()) throw InputError("names must be an array of strings");
      for (const auto& name : *it) {
        if (!name.is_string()) throw InputError("names must be an array of strings");
        spec.names.push_back(name.get<std::string>());
      }
    }
    return build_group(spec);
  }
  if (kind == "permutation") {
    check_fields(doc, {"kind", "degree", "generators"}, "permutation group");
    PermutationSpec spec;
    spec.degree = as_size(require(doc, "degree", "permutation"), "degree");
    const auto& gens = require(doc, "generators", "permutation group");
    if (!gens.is_array()) throw InputError("generators must be an array of image lists");
    for (std::size_t i = 0; i < gens.size(); ++i)
      spec.generators.push_back(as_size_list(gens[i], "generator " + std::to_string(i)));
    return build_group(spec);
  }
  if (kind == "product") {
    check_fields(doc, {"kind", "factors"}, "product group");
    const auto& factors = require(doc, "factors", "product group");
    if (!factors.is_array() || factors.size() != 2) throw InputError("product needs exactly two factors");
    return build_group(ProductSpec{nested_group(factors[0], base_dir), nested_group(factors[1], base_dir)});
  }
  if (kind == "semidirect") {
    check_fields(doc, {"kind", "base", "automorphism", "m"}, "semidirect group");
    GroupPtr base = nested_group(require(doc, "base", "semidirect"), base_dir);
    const auto& aut = require(doc, "automorphism", "semidirect");
    Automorphism phi = aut.is_string() ? load_automorphism(base_dir / aut.get<std::string>(), base)
                                       : parse_automorphism(aut, base);
    std::size_t m = phi.order();
    if (auto it = doc.find("m"); it != doc.end()) m = as_size(*it, "m");
    return semidirect_with_cyclic(phi, m);
  }
  throw InputError("unknown group kind \"" + kind + "\"");
}

GroupPtr load_group(const std::filesystem::path& path) {
  return parse_group(load_json(path), path.parent_path());
}

Automorphism parse_automorphism(const Json& doc, const GroupPtr& group) {
  if (!doc.is_object()) throw InputError("automorphism description must be a JSON object");
  const auto& kind_field = require(doc, "kind", "automorphism");
  if (!kind_field.is_string()) throw InputError("automorphism: \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "identity") {
    check_fields(doc, {"kind"}, "identity automorphism");
    return Automorphism::identity(group);
  }
  if (kind == "inner") {
    check_fields(doc, {"kind", "element"}, "inner automorphism");
    return Automorphism::inner(group, as_element(require(doc, "element", "inner"), *group, "element"));
  }
  if (kind == "generators") {
    check_fields(doc, {"kind", "generators", "images"}, "automorphism");
    const auto gens = as_elements(require(doc, "generators", "automorphism"), *group, "generators");
    const auto images = as_elements(require(doc, "images", "automorphism"), *group, "images");
    if (gens.size() != images.size()) throw InputError("generators and images differ in length");
    return Automorphism::from_generator_images(group, gens, images);
  }
  if (kind == "map") {
    check_fields(doc, {"kind", "images"}, "automorphism");
    auto images = as_elements(require(doc, "images", "automorphism"), *group, "images");
    if (images.size() != group->order())
      throw InputError("map needs " + std::to_string(group->order()) + " images, got " +
                       std::to_string(images.size()));
    return Automorphism::from_images(group, std::move(images));
  }
  throw InputError("unknown automorphism kind \"" + kind + "\"");
}

Automorphism load_automorphism(const std::filesystem::path& path, const GroupPtr& group) {
  return parse_automorphism(load_json(path), group);
}

IntMatrix parse_matrix(const Json& rows) {
  if (!rows.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<mpz_class>> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw InputError("matrix row " + std::to_string(i) + " must be an array");
    std::vector<mpz_class> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      row.push_back(as_integer(rows[i][j], "matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ")"));
    entries.push_back(std::move(row));
  }
  return IntMatrix::from_rows(entries);
}

IntMatrix load_matrix(const std::filesystem::path& path) {
  const Json doc = load_json(path);
  check_fields(doc, {"matrix"}, path.string());
  IntMatrix m = parse_matrix(require(doc, "matrix", path.string()));
  if (m.size() == 0) throw InputError(path.string() + ": matrix must be nonempty");
  return m;
}

std::vector<IntMatrix> load_homology(const std::filesystem::path& path) {
  const Json doc = load_json(path);
  check_fields(doc, {"homology"}, path.string());
  const auto& list = require(doc, "homology", path.string());
  if (!list.is_array()) throw InputError("homology must be an array of matrices");
  std::vector<IntMatrix> maps;
  for (const auto& m : list) maps.push_back(parse_matrix(m));
  return maps;
}

IntVector parse_vector(const std::string& text) {
  IntVector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(as_integer(Json(item), "vector entry"));
  if (v.empty()) throw InputError("empty vector \"" + text + "\"");
  return v;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.get_str());
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace twisted::cli
