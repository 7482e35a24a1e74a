// Resolves a tensor source: a TensorFile path or zoo:<name>[:<params>...][^k].
#pragma once

#include <brlb/io/json_io.hpp>
#include <brlb/zoo/zoo.hpp>

#include <string>
#include <vector>

namespace brlb {

struct ResolvedTensor {
  std::string id;  // zoo spec, metadata name, or "sha256:<hash>"
  TensorFile file;
  std::string hash;
  std::optional<KroneckerRelation> power_of;  // set for zoo:...^k with k >= 2
};

inline const std::vector<std::string>& zoo_names() {
  static const std::vector<std::string> names{"matmul", "unit",  "wstate", "big_cw",   "small_cw",
                                              "det3",   "perm3", "structure", "truncpoly", "cw_algebra"};
  return names;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::size_t parse_size(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(what + " must be a small positive integer, got \"" + s + "\"");
  const auto v = std::stoul(s);
  if (v == 0) throw std::invalid_argument(what + " must be positive");
  return v;
}

}  // namespace detail

/// Builds a zoo tensor over Q. `params` are positional: matmul takes n or
/// l,m,n; unit m; big_cw/small_cw/cw_algebra q; truncpoly k; structure a
/// table path. Throws std::invalid_argument on an unknown name or bad params.
inline Tensor3<Rational> zoo_tensor(const std::string& name, const std::vector<std::string>& params) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw std::invalid_argument("zoo " + name + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                                  " parameter(s)");
  };
  auto num = [&](std::size_t i) { return detail::parse_size(params.at(i), name + " parameter"); };
  if (name == "matmul") {
    need(1, 3);
    if (params.size() == 2) throw std::invalid_argument("matmul takes n or l:m:n");
    return params.size() == 1 ? matmul<Rational>(num(0), num(0), num(0)) : matmul<Rational>(num(0), num(1), num(2));
  }
  if (name == "unit") return need(1, 1), unit_tensor<Rational>(num(0));
  if (name == "wstate") return need(0, 0), w_state<Rational>();
  if (name == "big_cw") return need(1, 1), big_cw<Rational>(num(0));
  if (name == "small_cw") return need(1, 1), small_cw<Rational>(num(0));
  if (name == "det3") return need(0, 0), det3_tensor<Rational>();
  if (name == "perm3") return need(0, 0), perm3_tensor<Rational>();
  if (name == "truncpoly") return need(1, 1), structure_tensor(truncated_polynomial_algebra<Rational>(num(0)));
  if (name == "cw_algebra") return need(1, 1), structure_tensor(cw_algebra<Rational>(num(0)));
  if (name == "structure") return need(1, 1), structure_tensor(read_algebra(params[0]));
  throw std::invalid_argument("unknown zoo tensor \"" + name + "\"");
}

/// Reads a source. File problems raise MalformedInput; bad zoo specs raise
/// std::invalid_argument.
inline ResolvedTensor resolve_source(const std::string& source) {
  ResolvedTensor out;
  if (source.rfind("zoo:", 0) == 0) {
    std::string spec = source.substr(4);
    std::size_t power = 1;
    if (const auto caret = spec.rfind('^'); caret != std::string::npos) {
      power = detail::parse_size(spec.substr(caret + 1), "Kronecker power");
      spec = spec.substr(0, caret);
    }
    auto parts = detail::split(spec, ':');
    const std::string name = parts.front();
    parts.erase(parts.begin());
    auto base = zoo_tensor(name, parts);
    out.file.tensor = power == 1 ? base : kronecker_power(base, power);
    out.file.metadata = {{"name", source}, {"provenance", "zoo"}};
    out.id = source;
    if (power >= 2) out.power_of = KroneckerRelation{source, std::vector<std::string>(power, "zoo:" + spec)};
  } else {
    out.file = read_tensor_file(source);
    out.id = out.file.metadata.value("name", std::string());
  }
  out.hash = content_hash(out.file);
  if (out.id.empty()) out.id = "sha256:" + out.hash;
  return out;
}

}  // namespace brlb
