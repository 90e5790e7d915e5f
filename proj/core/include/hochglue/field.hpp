#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hochglue {

//! Field elements. Over a prime field the value is an integer in [0, p).
using Scalar = mpq_class;

class Field {
 public:
  static Field rationals() { return Field(0); }
  //! Throws Error when p is not prime.
  static Field prime(std::uint32_t p);

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] bool is_rational() const noexcept { return p_ == 0; }

  [[nodiscard]] Scalar from_int(long v) const;
  [[nodiscard]] Scalar normalize(const Scalar& v) const;
  [[nodiscard]] Scalar add(const Scalar& a, const Scalar& b) const;
  [[nodiscard]] Scalar sub(const Scalar& a, const Scalar& b) const;
  [[nodiscard]] Scalar mul(const Scalar& a, const Scalar& b) const;
  [[nodiscard]] Scalar neg(const Scalar& a) const;
  //! Throws Error on zero.
  [[nodiscard]] Scalar inv(const Scalar& a) const;
  [[nodiscard]] static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  //! "Q" or "F<p>".
  [[nodiscard]] std::string name() const;
  [[nodiscard]] static std::string format(const Scalar& a) { return a.get_str(); }

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  [[nodiscard]] Scalar reduce_int(long v) const;

  std::uint32_t p_;
};

}  // namespace hochglue
