// The 111-equations, symmetry Lie algebra dimensions and the 111-algebra.
//
// For X in End(A), X o_A T is the tensor sum_s X_{is} T^{sjk}; the spaces
// T(A*) (x) A = { X o_A T } and their B, C analogues live in A (x) B (x) C,
// indexed (i*b + j)*c + k.
#pragma once

#include <brlb/certificates/obstruction.hpp>
#include <brlb/linalg/linalg.hpp>
#include <brlb/tensor/tensor.hpp>

#include <array>
#include <string>
#include <vector>

namespace brlb {

namespace detail {

/// Matrix whose column (r, s) is E_{rs} o_f T, i.e. the linear map
/// End(f) -> A (x) B (x) C, X |-> X o_f T, with X flattened row-major.
template <typename S>
Matrix<S> endo_action_matrix(const Tensor3<S>& t, Factor f) {
  const auto [a, b, c] = t.dims();
  const std::size_t n = t.dim(f);
  Matrix<S> m(a * b * c, n * n, "A(x)B(x)C", std::string("End(") + factor_name(f) + ")");
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k) {
        // column (r, s) contributes T at index s in factor f, placed at index r.
        for (std::size_t s = 0; s < n; ++s) {
          switch (f) {
            case Factor::A: m((i * b + j) * c + k, i * n + s) = t(s, j, k); break;
            case Factor::B: m((i * b + j) * c + k, j * n + s) = t(i, s, k); break;
            case Factor::C: m((i * b + j) * c + k, k * n + s) = t(i, j, s); break;
          }
        }
      }
  return m;
}

/// T(f*) (x) f as a subspace of A (x) B (x) C.
template <typename S>
Subspace<S> endo_orbit_space(const Tensor3<S>& t, Factor f) {
  return Subspace<S>::span(endo_action_matrix(t, f).transpose(), std::string("T(") + factor_name(f) + "*)(x)" + factor_name(f));
}

/// Columns of the given blocks side by side.
template <typename S>
Matrix<S> hstack(const std::vector<const Matrix<S>*>& blocks) {
  std::size_t cols = 0;
  for (auto* b : blocks) cols += b->cols();
  Matrix<S> out(blocks.front()->rows(), cols);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) out(i, off + j) = (*b)(i, j);
    off += b->cols();
  }
  return out;
}

template <typename S>
Obstruction make_obstruction(ObstructionKind kind) {
  Obstruction ob;
  ob.name = kind;
  ob.field = scalar_traits<S>::field_tag();
  return ob;
}

}  // namespace detail

/// dim((T(A*)(x)A) & (T(B*)(x)B) & (T(C*)(x)C)) >= m for concise m x m x m tensors.
template <typename S>
Obstruction test_111_minimal(const Tensor3<S>& t) {
  auto ob = detail::make_obstruction<S>(ObstructionKind::T111_TRIPLE);
  if (!t.is_cubic() || !is_concise(t).concise) {
    ob.witness["reason"] = "requires a concise m x m x m tensor";
    return ob;
  }
  const std::size_t m = t.a();
  const auto inter = subspace_intersect<S>(
      {detail::endo_orbit_space(t, Factor::A), detail::endo_orbit_space(t, Factor::B), detail::endo_orbit_space(t, Factor::C)});
  ob.payload = static_cast<long long>(inter.dim());
  ob.verdict = inter.dim() >= m ? Verdict::PASS : Verdict::FAIL;
  if (ob.failed()) ob.lower_bound = m + 1;
  return ob;
}

/// Pairwise version: FAIL iff some span dim <T(X*)(x)X, T(Y*)(x)Y> >= 2m^2 - m + 1,
/// i.e. some pairwise intersection has dimension < m. Payload: the smallest
/// pairwise intersection dimension.
template <typename S>
Obstruction test_111_twofactor(const Tensor3<S>& t) {
  auto ob = detail::make_obstruction<S>(ObstructionKind::T111_TWOFACTOR);
  if (!t.is_cubic() || !is_concise(t).concise) {
    ob.witness["reason"] = "requires a concise m x m x m tensor";
    return ob;
  }
  const std::size_t m = t.a();
  const std::array<Subspace<S>, 3> spaces{detail::endo_orbit_space(t, Factor::A), detail::endo_orbit_space(t, Factor::B),
                                          detail::endo_orbit_space(t, Factor::C)};
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  const char* names[3] = {"AB", "AC", "BC"};
  bool fail = false;
  long long min_inter = -1;
  for (std::size_t p = 0; p < 3; ++p) {
    const auto& u = spaces[pairs[p].first];
    const auto& v = spaces[pairs[p].second];
    const auto span_dim = subspace_sum(u, v).dim();
    const auto inter = static_cast<long long>(u.dim() + v.dim()) - static_cast<long long>(span_dim);
    ob.witness[std::string("span_dim_") + names[p]] = std::to_string(span_dim);
    ob.witness[std::string("intersection_dim_") + names[p]] = std::to_string(inter);
    if (span_dim >= 2 * m * m - m + 1) fail = true;
    min_inter = min_inter < 0 ? inter : std::min(min_inter, inter);
  }
  ob.payload = min_inter;
  ob.verdict = fail ? Verdict::FAIL : Verdict::PASS;
  if (fail) ob.lower_bound = m + 1;
  return ob;
}

struct SymmetryDims {
  std::size_t full = 0;  // dim of the annihilator of T in gl(A)+gl(B)+gl(C)
  std::size_t ab = 0, ac = 0, bc = 0;
  Obstruction obstruction;
};

/// Kernel dimensions of (X, Y, Z) |-> X.T + Y.T + Z.T and of its two-factor
/// restrictions. Minimal border rank needs full >= 2m and each pair >= m.
template <typename S>
SymmetryDims symmetry_lie_dims(const Tensor3<S>& t) {
  SymmetryDims out;
  out.obstruction = detail::make_obstruction<S>(ObstructionKind::SYMLIE);
  const auto ma = detail::endo_action_matrix(t, Factor::A);
  const auto mb = detail::endo_action_matrix(t, Factor::B);
  const auto mc = detail::endo_action_matrix(t, Factor::C);
  auto nullity = [](const Matrix<S>& m) { return m.cols() - rank(m); };
  out.full = nullity(detail::hstack<S>({&ma, &mb, &mc}));
  out.ab = nullity(detail::hstack<S>({&ma, &mb}));
  out.ac = nullity(detail::hstack<S>({&ma, &mc}));
  out.bc = nullity(detail::hstack<S>({&mb, &mc}));
  auto& ob = out.obstruction;
  ob.payload = static_cast<long long>(out.full);
  ob.witness["dim_g_T"] = std::to_string(out.full);
  ob.witness["dim_g_AB"] = std::to_string(out.ab);
  ob.witness["dim_g_AC"] = std::to_string(out.ac);
  ob.witness["dim_g_BC"] = std::to_string(out.bc);
  if (!t.is_cubic()) {
    ob.witness["reason"] = "requires an m x m x m tensor";
    return out;
  }
  const std::size_t m = t.a();
  const bool pass = out.full >= 2 * m && out.ab >= m && out.ac >= m && out.bc >= m;
  ob.verdict = pass ? Verdict::PASS : Verdict::FAIL;
  if (!pass) ob.lower_bound = m + 1;
  return out;
}

template <typename S>
struct TripleEndo {
  Matrix<S> x, y, z;

  TripleEndo product(const TripleEndo& o) const { return {x * o.x, y * o.y, z * o.z}; }
  std::vector<S> flatten() const {
    std::vector<S> v = x.data();
    v.insert(v.end(), y.data().begin(), y.data().end());
    v.insert(v.end(), z.data().begin(), z.data().end());
    return v;
  }
};

template <typename S>
struct Algebra111 {
  std::vector<TripleEndo<S>> basis;
  bool unital = false;
  bool closed = false;
  bool commutative = false;
  bool injective = false;
  Obstruction abundance;

  std::size_t dim() const { return basis.size(); }
  /// The structural properties every concise tensor's 111-algebra has.
  bool structure_ok() const { return unital && closed && commutative && injective; }
};

/// All triples (X, Y, Z) with X o_A T = Y o_B T = Z o_C T, plus checks that
/// the result is a commutative unital algebra projecting injectively to each
/// factor. Abundance passes iff dim >= m.
template <typename S>
Algebra111<S> compute_111_algebra(const Tensor3<S>& t) {
  Algebra111<S> alg;
  alg.abundance = detail::make_obstruction<S>(ObstructionKind::ALG111_ABUNDANCE);
  if (!is_concise(t).concise) {
    alg.abundance.witness["reason"] = "requires a concise tensor";
    return alg;
  }
  const auto [a, b, c] = t.dims();
  const auto ma = detail::endo_action_matrix(t, Factor::A);
  const auto mb = detail::endo_action_matrix(t, Factor::B);
  const auto mc = detail::endo_action_matrix(t, Factor::C);
  const std::size_t n = ma.rows(), ua = a * a, ub = b * b, uc = c * c;
  Matrix<S> system(2 * n, ua + ub + uc);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t q = 0; q < ua; ++q) system(r, q) = ma(r, q);
    for (std::size_t q = 0; q < ub; ++q) {
      system(r, ua + q) = -mb(r, q);
      system(n + r, ua + q) = mb(r, q);
    }
    for (std::size_t q = 0; q < uc; ++q) system(n + r, ua + ub + q) = -mc(r, q);
  }
  const auto ker = kernel_basis(system);
  auto unflatten = [&](const std::vector<S>& v) {
    TripleEndo<S> e{Matrix<S>(a, a, "A", "A"), Matrix<S>(b, b, "B", "B"), Matrix<S>(c, c, "C", "C")};
    for (std::size_t q = 0; q < ua; ++q) e.x(q / a, q % a) = v[q];
    for (std::size_t q = 0; q < ub; ++q) e.y(q / b, q % b) = v[ua + q];
    for (std::size_t q = 0; q < uc; ++q) e.z(q / c, q % c) = v[ua + ub + q];
    return e;
  };
  for (std::size_t i = 0; i < ker.dim(); ++i) alg.basis.push_back(unflatten(ker.basis_vector(i)));

  const TripleEndo<S> unit{Matrix<S>::identity(a), Matrix<S>::identity(b), Matrix<S>::identity(c)};
  alg.unital = ker.contains(unit.flatten());
  alg.closed = alg.commutative = true;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j) {
      const auto pij = alg.basis[i].product(alg.basis[j]);
      const auto pji = alg.basis[j].product(alg.basis[i]);
      if (!ker.contains(pij.flatten()) || !ker.contains(pji.flatten())) alg.closed = false;
      if (!(pij.x == pji.x && pij.y == pji.y && pij.z == pji.z)) alg.commutative = false;
    }
  auto projection_rank = [&](auto member) {
    if (alg.dim() == 0) return std::size_t{0};
    const auto& first = alg.basis.front().*member;
    Matrix<S> rows(alg.dim(), first.rows() * first.cols());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const auto& d = (alg.basis[i].*member).data();
      for (std::size_t q = 0; q < d.size(); ++q) rows(i, q) = d[q];
    }
    return rank(rows);
  };
  alg.injective = projection_rank(&TripleEndo<S>::x) == alg.dim() && projection_rank(&TripleEndo<S>::y) == alg.dim() &&
                  projection_rank(&TripleEndo<S>::z) == alg.dim();

  auto& ob = alg.abundance;
  ob.payload = static_cast<long long>(alg.dim());
  ob.witness["dim"] = std::to_string(alg.dim());
  ob.witness["unital"] = alg.unital ? "true" : "false";
  ob.witness["closed"] = alg.closed ? "true" : "false";
  ob.witness["commutative"] = alg.commutative ? "true" : "false";
  ob.witness["injective_projections"] = alg.injective ? "true" : "false";
  if (!t.is_cubic()) {
    ob.witness["reason"] = "abundance is stated for m x m x m tensors";
    return alg;
  }
  ob.verdict = alg.dim() >= a ? Verdict::PASS : Verdict::FAIL;
  if (ob.failed()) ob.lower_bound = a + 1;
  return alg;
}

}  // namespace brlb
