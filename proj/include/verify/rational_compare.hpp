#ifndef VERIFY_RATIONAL_COMPARE_HPP
#define VERIFY_RATIONAL_COMPARE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <type_traits>

// Boost 1.74 routes ==, < and > on cpp_rational through the backend's
// three-way compare(), which defers to boost::rational's ordering: a
// continued-fraction walk costing one multiprecision division per step,
// even for equality tests against zero.  Profiling showed those divisions
// dominating exact Gaussian elimination.  The backend keeps its value
// normalized (lowest terms, positive denominator), so equality is plain
// component equality and ordering is a single cross multiplication.  The
// overloads below are more specialized than the generic fallbacks in
// default_ops, so argument-dependent lookup picks them for every
// comparison once this header is visible.

namespace boost {
namespace multiprecision {
namespace backends {

template <class IntBackend>
inline bool eval_eq(const rational_adaptor<IntBackend>& a,
                    const rational_adaptor<IntBackend>& b) {
  return a.data().numerator() == b.data().numerator() &&
         a.data().denominator() == b.data().denominator();
}

template <class IntBackend, class A>
inline typename std::enable_if<std::is_integral<A>::value, bool>::type eval_eq(
    const rational_adaptor<IntBackend>& a, A b) {
  return a.data().denominator() == 1 && a.data().numerator() == b;
}

template <class IntBackend>
inline bool eval_lt(const rational_adaptor<IntBackend>& a,
                    const rational_adaptor<IntBackend>& b) {
  return a.data().numerator() * b.data().denominator() <
         b.data().numerator() * a.data().denominator();
}

template <class IntBackend, class A>
inline typename std::enable_if<std::is_integral<A>::value, bool>::type eval_lt(
    const rational_adaptor<IntBackend>& a, A b) {
  if (b == 0) return eval_get_sign(a) < 0;
  return a.data().numerator() < a.data().denominator() * b;
}

template <class IntBackend>
inline bool eval_gt(const rational_adaptor<IntBackend>& a,
                    const rational_adaptor<IntBackend>& b) {
  return eval_lt(b, a);
}

template <class IntBackend, class A>
inline typename std::enable_if<std::is_integral<A>::value, bool>::type eval_gt(
    const rational_adaptor<IntBackend>& a, A b) {
  if (b == 0) return eval_get_sign(a) > 0;
  return a.data().numerator() > a.data().denominator() * b;
}

}  // namespace backends
}  // namespace multiprecision
}  // namespace boost

#endif
