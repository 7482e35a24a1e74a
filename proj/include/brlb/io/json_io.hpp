// JSON formats: tensor files, eps-certificates, algebra tables and ledgers.
// Every reader throws MalformedInput on bad input.
#pragma once

#include <brlb/errors.hpp>
#include <brlb/exponent/exponent.hpp>
#include <brlb/tensor/eps_decomposition.hpp>
#include <brlb/tensor/tensor.hpp>
#include <brlb/zoo/zoo.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

namespace brlb {

using Json = nlohmann::json;

/// A tensor with exact rational entries and the field it is meant to be read
/// over. Prime-field files hold integer representatives.
struct TensorFile {
  Tensor3<Rational> tensor;
  std::string field = "rational";
  Json metadata = Json::object();
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw MalformedInput(what); }

inline Rational parse_value(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
  } catch (const std::exception& e) {
    malformed(where + ": " + e.what());
  }
  malformed(where + ": value must be an integer or a \"num/den\" string");
}

inline std::size_t get_index(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned()) malformed(where + ": '" + key + "' must be a non-negative integer");
  return obj[key].get<std::size_t>();
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace detail

/// Checks a field string ("rational" or "prime:<p>" with p prime).
inline void validate_field_tag(const std::string& field) {
  if (field == "rational") return;
  if (field.rfind("prime:", 0) == 0) {
    const std::string digits = field.substr(6);
    if (!digits.empty() && digits.size() <= 19 && digits.find_first_not_of("0123456789") == std::string::npos &&
        is_prime_u64(std::stoull(digits)) && std::stoull(digits) < (std::uint64_t{1} << 62))
      return;
  }
  throw MalformedInput("field must be \"rational\" or \"prime:<p>\" with p a prime below 2^62, got \"" + field + "\"");
}

inline std::uint64_t field_modulus(const std::string& field) {
  validate_field_tag(field);
  return field == "rational" ? 0 : std::stoull(field.substr(6));
}

inline TensorFile tensor_file_from_json(const Json& j) {
  if (!j.is_object()) detail::malformed("tensor file must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3) detail::malformed("'dims' must be [a, b, c]");
  Dims dims{};
  for (int f = 0; f < 3; ++f) {
    if (!j["dims"][f].is_number_unsigned() || j["dims"][f].get<std::size_t>() == 0)
      detail::malformed("'dims' entries must be positive integers");
    dims[f] = j["dims"][f].get<std::size_t>();
  }
  TensorFile tf;
  tf.tensor = Tensor3<Rational>(dims);
  tf.field = j.value("field", std::string("rational"));
  validate_field_tag(tf.field);
  if (!j.contains("entries") || !j["entries"].is_array()) detail::malformed("'entries' must be an array");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < j["entries"].size(); ++n) {
    const auto& e = j["entries"][n];
    const std::string where = "entry " + std::to_string(n);
    if (!e.is_object()) detail::malformed(where + " must be an object");
    const auto i = detail::get_index(e, "i", where), jj = detail::get_index(e, "j", where), k = detail::get_index(e, "k", where);
    if (i >= dims[0] || jj >= dims[1] || k >= dims[2]) detail::malformed(where + ": index out of range");
    if (!seen.insert({i, jj, k}).second) detail::malformed(where + ": duplicate index");
    if (!e.contains("value")) detail::malformed(where + ": missing 'value'");
    tf.tensor(i, jj, k) = detail::parse_value(e["value"], where);
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) detail::malformed("'metadata' must be an object");
    tf.metadata = j["metadata"];
  }
  return tf;
}

/// Nonzero entries in (i, j, k) order, values as canonical rational strings.
inline Json tensor_file_to_json(const TensorFile& tf) {
  Json entries = Json::array();
  const auto d = tf.tensor.dims();
  for (std::size_t i = 0; i < d[0]; ++i)
    for (std::size_t j = 0; j < d[1]; ++j)
      for (std::size_t k = 0; k < d[2]; ++k) {
        const auto& v = tf.tensor(i, j, k);
        if (v != 0) entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", v.get_str()}});
      }
  Json out = {{"dims", {d[0], d[1], d[2]}}, {"field", tf.field}, {"entries", entries}};
  if (!tf.metadata.empty()) out["metadata"] = tf.metadata;
  return out;
}

inline TensorFile read_tensor_file(const std::string& path) { return tensor_file_from_json(detail::read_json_file(path)); }

inline void write_tensor_file(const std::string& path, const TensorFile& tf) {
  detail::write_json_file(path, tensor_file_to_json(tf));
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

/// Hash of dims, field and the sorted nonzero entries; independent of the
/// entry order and formatting of the source file.
inline std::string content_hash(const TensorFile& tf) {
  std::ostringstream os;
  const auto d = tf.tensor.dims();
  os << d[0] << ',' << d[1] << ',' << d[2] << ';' << tf.field << ';';
  for (std::size_t i = 0; i < d[0]; ++i)
    for (std::size_t j = 0; j < d[1]; ++j)
      for (std::size_t k = 0; k < d[2]; ++k)
        if (tf.tensor(i, j, k) != 0) os << i << ',' << j << ',' << k << '=' << tf.tensor(i, j, k).get_str() << ';';
  return sha256_hex(os.str());
}

// Eps-certificates: {"h": h, "terms": [{"a": [[c0, c1, ...], ...], "b": ..., "c": ...}]}
// where each component is the list of its eps-coefficients, lowest degree first.

inline EpsDecomposition<Rational> certificate_from_json(const Json& j) {
  if (!j.is_object()) detail::malformed("certificate must be a JSON object");
  if (!j.contains("h") || !j["h"].is_number_unsigned()) detail::malformed("certificate: 'h' must be a non-negative integer");
  if (!j.contains("terms") || !j["terms"].is_array()) detail::malformed("certificate: 'terms' must be an array");
  EpsDecomposition<Rational> dec;
  dec.h = j["h"].get<std::size_t>();
  for (std::size_t t = 0; t < j["terms"].size(); ++t) {
    const auto& term = j["terms"][t];
    EpsRankOne<Rational> r1;
    for (auto [key, dest] : {std::pair{"a", &r1.a}, std::pair{"b", &r1.b}, std::pair{"c", &r1.c}}) {
      const std::string where = "certificate term " + std::to_string(t) + " '" + key + "'";
      if (!term.is_object() || !term.contains(key) || !term[key].is_array()) detail::malformed(where + " must be an array");
      for (const auto& comp : term[key]) {
        if (!comp.is_array()) detail::malformed(where + ": each component must be a coefficient list");
        EpsPoly<Rational> poly;
        for (const auto& c : comp) poly.push_back(detail::parse_value(c, where));
        dest->push_back(std::move(poly));
      }
    }
    dec.terms.push_back(std::move(r1));
  }
  return dec;
}

inline Json certificate_to_json(const EpsDecomposition<Rational>& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    Json jt;
    for (auto [key, src] : {std::pair{"a", &t.a}, std::pair{"b", &t.b}, std::pair{"c", &t.c}}) {
      Json comps = Json::array();
      for (const auto& poly : *src) {
        Json coeffs = Json::array();
        for (const auto& x : poly) coeffs.push_back(x.get_str());
        comps.push_back(coeffs);
      }
      jt[key] = comps;
    }
    terms.push_back(jt);
  }
  return {{"h", dec.h}, {"terms", terms}};
}

inline EpsDecomposition<Rational> read_certificate(const std::string& path) {
  return certificate_from_json(detail::read_json_file(path));
}

// Algebra tables: {"m": m, "labels": [...], "unit": u (optional),
//                  "products": [{"i": I, "j": J, "value": [m coefficients]}]}
// Omitted products are zero.

inline AlgebraTable<Rational> algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_unsigned()) detail::malformed("algebra table: 'm' must be a positive integer");
  const auto m = j["m"].get<std::size_t>();
  if (m == 0) detail::malformed("algebra table: 'm' must be positive");
  AlgebraTable<Rational> alg(m);
  for (std::size_t i = 0; i < m; ++i) alg.labels[i] = "p" + std::to_string(i);
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != m) detail::malformed("algebra table: 'labels' must have m strings");
    for (std::size_t i = 0; i < m; ++i) {
      if (!j["labels"][i].is_string()) detail::malformed("algebra table: labels must be strings");
      alg.labels[i] = j["labels"][i].get<std::string>();
    }
  }
  if (j.contains("unit")) alg.unit = detail::get_index(j, "unit", "algebra table");
  if (!j.contains("products") || !j["products"].is_array()) detail::malformed("algebra table: 'products' must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& p : j["products"]) {
    const auto i = detail::get_index(p, "i", "algebra product"), jj = detail::get_index(p, "j", "algebra product");
    if (i >= m || jj >= m) detail::malformed("algebra product index out of range");
    if (!seen.insert({i, jj}).second) detail::malformed("algebra table: duplicate product");
    if (!p.contains("value") || !p["value"].is_array() || p["value"].size() != m)
      detail::malformed("algebra product 'value' must list m coefficients");
    for (std::size_t k = 0; k < m; ++k) alg.product(i, jj)[k] = detail::parse_value(p["value"][k], "algebra product");
  }
  try {
    alg.validate();
  } catch (const std::invalid_argument& e) {
    detail::malformed(e.what());
  }
  return alg;
}

inline Json algebra_to_json(const AlgebraTable<Rational>& alg) {
  Json products = Json::array();
  for (std::size_t i = 0; i < alg.m; ++i)
    for (std::size_t j = 0; j < alg.m; ++j) {
      const auto& v = alg.product(i, j);
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
      Json coeffs = Json::array();
      for (const auto& x : v) coeffs.push_back(x.get_str());
      products.push_back({{"i", i}, {"j", j}, {"value", coeffs}});
    }
  Json out = {{"m", alg.m}, {"labels", alg.labels}, {"products", products}};
  if (alg.unit) out["unit"] = *alg.unit;
  return out;
}

inline AlgebraTable<Rational> read_algebra(const std::string& path) { return algebra_from_json(detail::read_json_file(path)); }

// Ledgers: {"facts": [{"tensor_id", "kind", "value", "provenance"}],
//           "kronecker": [{"product": id, "factors": [ids]}]}

inline Ledger ledger_from_json(const Json& j) {
  if (!j.is_object()) detail::malformed("ledger must be a JSON object");
  Ledger l;
  try {
    for (const auto& f : j.value("facts", Json::array()))
      l.facts.push_back({f.at("tensor_id").get<std::string>(), parse_fact_kind(f.at("kind").get<std::string>()),
                         f.at("value").get<std::uint64_t>(), f.value("provenance", std::string())});
    for (const auto& r : j.value("kronecker", Json::array()))
      l.kronecker.push_back({r.at("product").get<std::string>(), r.at("factors").get<std::vector<std::string>>()});
  } catch (const std::exception& e) {
    detail::malformed(std::string("ledger: ") + e.what());
  }
  return l;
}

inline Json ledger_to_json(const Ledger& l) {
  Json facts = Json::array(), kron = Json::array();
  for (const auto& f : l.facts)
    facts.push_back({{"tensor_id", f.tensor_id}, {"kind", to_string(f.kind)}, {"value", f.value}, {"provenance", f.provenance}});
  for (const auto& r : l.kronecker) kron.push_back({{"product", r.product_id}, {"factors", r.factor_ids}});
  return {{"facts", facts}, {"kronecker", kron}};
}

/// A missing file is an empty ledger.
inline Ledger read_ledger(const std::string& path) {
  if (!std::ifstream(path)) return {};
  return ledger_from_json(detail::read_json_file(path));
}

inline void write_ledger(const std::string& path, const Ledger& l) { detail::write_json_file(path, ledger_to_json(l)); }

}  // namespace brlb
