#include "siegel/ff.hpp"

#include <string>

#include "siegel/error.hpp"

namespace siegel {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw UsageError("field characteristic must be an odd prime, got " + std::to_string(p));
  }
  chi_.assign(static_cast<std::size_t>(p), -1);
  chi_[0] = 0;
  for (std::int64_t x = 1; x < p; ++x) chi_[static_cast<std::size_t>(x * x % p)] = 1;

  inverse_.assign(static_cast<std::size_t>(p), 0);
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      if (a * b % p == 1) {
        inverse_[static_cast<std::size_t>(a)] = static_cast<int>(b);
        break;
      }
    }
  }
}

QuadExtField::QuadExtField(const PrimeField& base) : base_(base), d_(0) {
  const int p = static_cast<int>(base_.p());
  for (int a = 1; a < p; ++a) {
    if (base_.chi(a) == -1) {
      d_ = a;
      break;
    }
  }

  const std::size_t q = static_cast<std::size_t>(p) * p;
  chi_.assign(q, -1);
  chi_[0] = 0;
  for (int i = 1; i < static_cast<int>(q); ++i) {
    const Element x = element(i);
    chi_[static_cast<std::size_t>(index(mul(x, x)))] = 1;
  }
}

QuadExtField::Element QuadExtField::mul(Element a, Element b) const {
  const int uu = base_.mul(a.u, b.u);
  const int vv = base_.mul(base_.mul(a.v, b.v), d_);
  return {base_.add(uu, vv), base_.add(base_.mul(a.u, b.v), base_.mul(a.v, b.u))};
}

int QuadExtField::norm(Element a) const {
  return base_.sub(base_.mul(a.u, a.u), base_.mul(d_, base_.mul(a.v, a.v)));
}

FieldTables FieldTables::of(const PrimeField& f) {
  FieldTables t;
  t.p = t.q = f.p();
  const int q = static_cast<int>(t.q);
  t.add.resize(static_cast<std::size_t>(q) * q);
  t.mul.resize(static_cast<std::size_t>(q) * q);
  t.neg.resize(static_cast<std::size_t>(q));
  t.chi.assign(f.chi_table().begin(), f.chi_table().end());
  for (int a = 0; a < q; ++a) {
    t.neg[a] = f.neg(a);
    for (int b = 0; b < q; ++b) {
      t.add[static_cast<std::size_t>(a) * q + b] = f.add(a, b);
      t.mul[static_cast<std::size_t>(a) * q + b] = f.mul(a, b);
    }
  }
  return t;
}

FieldTables FieldTables::of(const QuadExtField& f) {
  FieldTables t;
  t.p = f.p();
  t.q = f.order();
  const int q = static_cast<int>(t.q);
  t.add.resize(static_cast<std::size_t>(q) * q);
  t.mul.resize(static_cast<std::size_t>(q) * q);
  t.neg.resize(static_cast<std::size_t>(q));
  t.chi.assign(f.chi_table().begin(), f.chi_table().end());
  for (int a = 0; a < q; ++a) {
    const auto ea = f.element(a);
    t.neg[a] = f.index({f.base().neg(ea.u), f.base().neg(ea.v)});
    for (int b = 0; b < q; ++b) {
      const auto eb = f.element(b);
      t.add[static_cast<std::size_t>(a) * q + b] = f.index(f.add(ea, eb));
      t.mul[static_cast<std::size_t>(a) * q + b] = f.index(f.mul(ea, eb));
    }
  }
  return t;
}

}  // namespace siegel
