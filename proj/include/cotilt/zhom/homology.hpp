#pragma once

#include <string_view>

#include "cotilt/zhom/int_matrix.hpp"
#include "cotilt/zhom/modules.hpp"

namespace cotilt::zhom {

enum class Functor { Hom, Tensor, Ext, Tor };
enum class Method { ClosedForm, Resolution };

std::string_view functor_name(Functor f);
Functor parse_functor(std::string_view name);

/// Ext^i or Tor_i over Z. Hom and Tensor are the degree-0 cases and reject
/// other degrees; Ext^0 and Tor_0 are accepted as synonyms for them.
FgZModule homology(Functor f, unsigned degree, const FgZModule& a, const FgZModule& b,
                   Method method = Method::ClosedForm);

/// The same over Z_(p); both arguments must be localized at the same prime.
LocalizedModule homology(Functor f, unsigned degree, const LocalizedModule& a, const LocalizedModule& b,
                         Method method = Method::ClosedForm);

/// Computes the functor from presentations A = coker(pa), B = coker(pb);
/// pa must have full column rank so that it is a free resolution of A.
FgZModule homology_from_presentations(Functor f, unsigned degree, const IntMatrix& pa, const IntMatrix& pb);

/// ker of the map Z^a/im(x) -> Z^b/im(y) induced by f (b x a).
FgZModule induced_kernel(const IntMatrix& f, const IntMatrix& x, const IntMatrix& y);

}  // namespace cotilt::zhom
