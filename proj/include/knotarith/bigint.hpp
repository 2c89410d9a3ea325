#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

// Eigen 3.4 dense types declare const_iterator as void, which trips the byte
// container detection in Boost.Multiprecision's converting constructors.
namespace boost::multiprecision::detail {
template <typename T>
  requires requires { typename T::StorageKind; }
struct is_byte_container<T> : public boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace knotarith {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// the type behaves like a plain value inside Eigen kernels.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline long long to_ll(const BigInt& x) { return x.convert_to<long long>(); }

}  // namespace knotarith
