#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "netlog/exact_algebra/algebraic.hpp"
#include "netlog/exact_algebra/rational.hpp"
#include "netlog/exact_algebra/univariate.hpp"

namespace netlog {

// Runtime description of the coefficient field.
struct FieldSpec {
  enum class Kind { Rationals, SimpleExtension };
  Kind kind = Kind::Rationals;
  UPoly minpoly;
  std::string generator;

  static FieldSpec rationals() { return {}; }
  static FieldSpec extension(UPoly m, std::string gen) {
    FieldSpec f;
    f.kind = Kind::SimpleExtension;
    f.minpoly = std::move(m);
    f.generator = std::move(gen);
    return f;
  }
  bool is_extension() const { return kind == Kind::SimpleExtension; }
  ExtensionPtr make_extension() const {
    if (!is_extension()) throw InputError("field spec is not an extension");
    return std::make_shared<const ExtensionField>(minpoly, generator);
  }
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && (!is_extension() || (minpoly == o.minpoly && generator == o.generator));
  }
};

inline FieldSpec field_spec_of(const RationalField&) { return FieldSpec::rationals(); }
inline FieldSpec field_spec_of(const ExtensionPtr& f) {
  return FieldSpec::extension(f->minpoly(), f->generator());
}
inline std::string generator_name(const RationalField&) { return {}; }
inline std::string generator_name(const ExtensionPtr& f) { return f->generator(); }

inline Rational times(const Rational& a, long n) { return Rational(mpq_class(a.value() * n)); }
inline AlgebraicNumber times(const AlgebraicNumber& a, long n) {
  if (!a.field()) return a;
  std::vector<mpq_class> v = a.coords();
  for (auto& c : v) c *= n;
  return AlgebraicNumber(a.field(), v);
}

template <class K>
K scalar(const typename K::Context& ctx, const mpq_class& q) {
  return K::from_rational(ctx, q);
}
template <class K>
K scalar(const typename K::Context& ctx, long n) {
  return K::from_rational(ctx, mpq_class(n));
}

inline Rational field_generator(const RationalField&) {
  throw InputError("the rationals have no generator");
}
inline AlgebraicNumber field_generator(const ExtensionPtr& f) { return AlgebraicNumber::generator(f); }

}  // namespace netlog
