#include "cotilt/zhom/homology.hpp"

#include <string>

#include "cotilt/error.hpp"
#include "cotilt/zhom/smith.hpp"

namespace cotilt::zhom {

namespace {

/// Canonical degree-0 spelling, after checking the degree fits the functor.
Functor normalize(Functor f, unsigned& degree) {
  if (f == Functor::Hom || f == Functor::Tensor) {
    if (degree != 0) {
      throw InputError(std::string(functor_name(f)) + " has no degree " + std::to_string(degree) +
                       "; use Ext or Tor");
    }
    return f;
  }
  if (degree == 0) return f == Functor::Ext ? Functor::Hom : Functor::Tensor;
  return f;
}

FgZModule power(const FgZModule& m, unsigned k) {
  FgZModule out;
  for (unsigned i = 0; i < k; ++i) out = out + m;
  return out;
}

/// ⊕ Z/gcd(a_k, b_l) over all pairs of cyclic torsion summands.
FgZModule gcd_terms(const FgZModule& a, const FgZModule& b) {
  std::vector<PrimaryComponent> parts;
  for (const auto& x : a.torsion()) {
    for (const auto& y : b.torsion()) {
      if (x.prime != y.prime) continue;
      parts.push_back({x.prime, std::min(x.exponent, y.exponent), x.multiplicity * y.multiplicity});
    }
  }
  return FgZModule(0, std::move(parts));
}

FgZModule closed_form(Functor f, const FgZModule& a, const FgZModule& b) {
  const unsigned r = a.rank();
  const unsigned s = b.rank();
  const FgZModule ta = a.torsion_part();
  const FgZModule tb = b.torsion_part();
  switch (f) {
    case Functor::Hom:
      return FgZModule::free(r * s) + power(tb, r) + gcd_terms(a, b);
    case Functor::Tensor:
      return FgZModule::free(r * s) + power(ta, s) + power(tb, r) + gcd_terms(a, b);
    case Functor::Ext:
      return power(ta, s) + gcd_terms(a, b);
    case Functor::Tor:
      return gcd_terms(a, b);
  }
  return {};
}

IntMatrix sub_rows(const IntMatrix& m, std::size_t count) {
  IntMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

IntMatrix negated(IntMatrix m) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.negate_col(j);
  return m;
}

/// Coordinates of the columns of x in the lattice spanned by an echelon basis.
IntMatrix solve_in_lattice(const ColumnEchelon& basis, const IntMatrix& x) {
  IntMatrix c(basis.rank, x.cols());
  for (std::size_t col = 0; col < x.cols(); ++col) {
    std::vector<Integer> v(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) v[i] = x(i, col);
    for (std::size_t j = 0; j < basis.rank; ++j) {
      const std::size_t r = basis.pivot_rows[j];
      const Integer& pivot = basis.echelon(r, j);
      if (v[r] % pivot != 0) throw std::logic_error("vector outside the lattice");
      const Integer coeff = v[r] / pivot;
      c(j, col) = coeff;
      if (coeff == 0) continue;
      for (std::size_t i = r; i < x.rows(); ++i) v[i] -= coeff * basis.echelon(i, j);
    }
    for (const auto& entry : v) {
      if (entry != 0) throw std::logic_error("vector outside the lattice");
    }
  }
  return c;
}

}  // namespace

std::string_view functor_name(Functor f) {
  switch (f) {
    case Functor::Hom:
      return "Hom";
    case Functor::Tensor:
      return "Tensor";
    case Functor::Ext:
      return "Ext";
    case Functor::Tor:
      return "Tor";
  }
  return "?";
}

Functor parse_functor(std::string_view name) {
  for (Functor f : {Functor::Hom, Functor::Tensor, Functor::Ext, Functor::Tor}) {
    if (functor_name(f) == name) return f;
  }
  throw InputError("unknown functor '" + std::string(name) + "' (expected Hom, Tensor, Ext or Tor)");
}

FgZModule induced_kernel(const IntMatrix& f, const IntMatrix& x, const IntMatrix& y) {
  const std::size_t a = f.cols();
  // L = {v : f v ∈ im y}, read off the kernel of [f | -y].
  const IntMatrix spanning = sub_rows(integer_kernel(hconcat(f, negated(y))), a);
  const ColumnEchelon lattice = column_echelon(spanning);
  const IntMatrix coords = solve_in_lattice(lattice, x);
  return module_from_cokernel(coords);
}

FgZModule homology_from_presentations(Functor f, unsigned degree, const IntMatrix& pa, const IntMatrix& pb) {
  f = normalize(f, degree);
  if (column_echelon(pa).rank != pa.cols() || column_echelon(pb).rank != pb.cols()) {
    throw InputError("presentation matrices must have full column rank");
  }
  if (degree >= 2) return {};
  const std::size_t g = pa.rows(), k = pa.cols(), h = pb.rows();
  const IntMatrix ih = IntMatrix::identity(h);
  switch (f) {
    case Functor::Tensor:
      return module_from_cokernel(hconcat(kron(pa, ih), kron(IntMatrix::identity(g), pb)));
    case Functor::Ext:
      return module_from_cokernel(hconcat(kron(pa.transpose(), ih), kron(IntMatrix::identity(k), pb)));
    case Functor::Hom:
      return induced_kernel(kron(pa.transpose(), ih), kron(IntMatrix::identity(g), pb),
                            kron(IntMatrix::identity(k), pb));
    case Functor::Tor:
      return induced_kernel(kron(pa, ih), kron(IntMatrix::identity(k), pb), kron(IntMatrix::identity(g), pb));
  }
  return {};
}

FgZModule homology(Functor f, unsigned degree, const FgZModule& a, const FgZModule& b, Method method) {
  if (method == Method::Resolution) {
    return homology_from_presentations(f, degree, presentation_matrix(a), presentation_matrix(b));
  }
  f = normalize(f, degree);
  if (degree >= 2) return {};
  return closed_form(f, a, b);
}

LocalizedModule homology(Functor f, unsigned degree, const LocalizedModule& a, const LocalizedModule& b,
                         Method method) {
  if (a.prime() != b.prime()) {
    throw InputError("modules are localized at different primes (" + std::to_string(a.prime()) + " and " +
                     std::to_string(b.prime()) + ")");
  }
  // Finitely presented modules: the functor commutes with localization.
  return LocalizedModule::localize(homology(f, degree, a.lift(), b.lift(), method), a.prime());
}

}  // namespace cotilt::zhom
