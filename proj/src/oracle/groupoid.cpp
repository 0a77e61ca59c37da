#include "siegel/oracle/groupoid.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "siegel/oracle/gfq.hpp"

namespace siegel::oracle {

namespace {

using Form = std::array<int, 7>;  // coefficient of x^i z^(6-i)

Form decode(std::int64_t index, int p) {
  Form f{};
  for (int i = 0; i < 7; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  return f;
}

std::int64_t encode(const Form& f, int p) {
  std::int64_t idx = 0;
  for (int i = 6; i >= 0; --i) idx = idx * p + f[i];
  return idx;
}

// F(x, z) and both partial derivatives at (x, z) over a small extension.
std::array<int, 3> evaluate_with_partials(const Form& f, const SmallField& k, int x, int z) {
  std::array<int, 8> xp{}, zp{};
  xp[0] = zp[0] = 1;
  for (int i = 1; i < 8; ++i) {
    xp[i] = k.mul(xp[i - 1], x);
    zp[i] = k.mul(zp[i - 1], z);
  }
  int value = 0, dx = 0, dz = 0;
  for (int i = 0; i <= 6; ++i) {
    const int c = k.constant(f[i]);
    value = k.add(value, k.mul(c, k.mul(xp[i], zp[6 - i])));
    if (i >= 1) dx = k.add(dx, k.mul(k.mul(k.constant(i), c), k.mul(xp[i - 1], zp[6 - i])));
    if (i <= 5) dz = k.add(dz, k.mul(k.mul(k.constant(6 - i), c), k.mul(xp[i], zp[5 - i])));
  }
  return {value, dx, dz};
}

// A repeated factor of a binary sextic has degree <= 3, so it has a root over F_{p^k}, k <= 3,
// at which F and both partials vanish.
bool has_repeated_root(const Form& f, const std::array<SmallField, 3>& fields) {
  for (const auto& k : fields) {
    for (int x = 0; x < k.q(); ++x) {
      const auto v = evaluate_with_partials(f, k, x, 1);
      if (v[0] == 0 && v[1] == 0 && v[2] == 0) return true;
    }
    const auto v = evaluate_with_partials(f, k, 1, 0);
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) return true;
  }
  return false;
}

std::int64_t projective_count(const Form& f, const SmallField& k) {
  std::int64_t n = 0;
  for (int x = 0; x < k.q(); ++x) n += 1 + k.chi(evaluate_with_partials(f, k, x, 1)[0]);
  n += 1 + k.chi(evaluate_with_partials(f, k, 1, 0)[0]);
  return n;
}

// Coefficients of (a x + b z)^i (c x + d z)^(6-i), as x^j z^(6-j) coefficients mod p.
using Substitution = std::array<std::array<int, 7>, 7>;

Substitution substitution(int a, int b, int c, int d, int p) {
  Substitution s{};
  for (int i = 0; i <= 6; ++i) {
    std::vector<long> poly{1};
    auto times_linear = [&](int zc, int xc) {
      std::vector<long> out(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        out[j] = (out[j] + poly[j] * zc) % p;
        out[j + 1] = (out[j + 1] + poly[j] * xc) % p;
      }
      poly = std::move(out);
    };
    for (int t = 0; t < i; ++t) times_linear(b, a);
    for (int t = i; t < 6; ++t) times_linear(d, c);
    for (int j = 0; j <= 6; ++j) s[i][j] = static_cast<int>(poly[j]);
  }
  return s;
}

}  // namespace

Genus2Groupoid genus2_groupoid(int p) {
  if (p < 3) throw std::invalid_argument("genus2_groupoid needs an odd prime");
  const std::array<SmallField, 3> fields{SmallField(p, 1), SmallField(p, 2), SmallField(p, 3)};

  struct Element {
    Substitution sub;
    int e2;  // e^2 for the y-rescaling
  };
  std::vector<Element> group;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p == 0) continue;
          const auto sub = substitution(a, b, c, d, p);
          for (int e = 1; e < p; ++e) group.push_back({sub, e * e % p});
        }

  Genus2Groupoid out;
  out.p = p;
  out.group_order = static_cast<std::int64_t>(group.size()) / (p - 1);

  std::int64_t forms = 1;
  for (int i = 0; i < 7; ++i) forms *= p;
  std::vector<char> seen(static_cast<std::size_t>(forms), 0);

  for (std::int64_t idx = 0; idx < forms; ++idx) {
    if (seen[idx]) continue;
    const Form f = decode(idx, p);
    seen[idx] = 1;
    if (has_repeated_root(f, fields)) continue;

    std::vector<std::int64_t> orbit;
    std::int64_t stabiliser = 0;
    for (const auto& g : group) {
      Form image{};
      for (int i = 0; i <= 6; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; j <= 6; ++j) image[j] = (image[j] + f[i] * g.sub[i][j]) % p;
      }
      for (auto& c : image) c = c * g.e2 % p;
      const std::int64_t img = encode(image, p);
      if (img == idx) ++stabiliser;
      if (!seen[img] || img == idx) {
        if (img != idx) orbit.push_back(img);
        seen[img] = 1;
      }
    }
    const std::int64_t orbit_size = static_cast<std::int64_t>(orbit.size()) + 1;
    if (orbit_size * stabiliser != static_cast<std::int64_t>(group.size())) {
      throw std::logic_error("orbit-stabiliser count mismatch");
    }

    const std::int64_t n1 = projective_count(f, fields[0]);
    const std::int64_t n2 = projective_count(f, fields[1]);
    const std::int64_t a1 = p + 1 - n1;
    const std::int64_t a2 = (a1 * a1 - (static_cast<std::int64_t>(p) * p + 1 - n2)) / 2;
    const std::pair key{a1, a2};
    out.mass[key] += mpq_class(p - 1, stabiliser);
    out.mass[key].canonicalize();
    ++out.classes[key];
    ++out.iso_classes;
    out.models += orbit_size;
  }
  return out;
}

EllipticGroupoid elliptic_groupoid(int p, int k) {
  const SmallField f(p, k);
  const int q = f.q();
  EllipticGroupoid out;
  out.p = p;
  out.q = q;

  auto eval = [&](int c2, int c4, int c6, int x) {
    return f.add(f.add(f.mul(f.mul(x, x), f.add(x, c2)), f.mul(c4, x)), c6);
  };
  auto nonsingular = [&](int c2, int c4, int c6) {
    for (int x = 0; x < q; ++x) {
      const int d = f.add(f.add(f.mul(f.constant(3), f.mul(x, x)), f.mul(f.constant(2), f.mul(c2, x))), c4);
      if (eval(c2, c4, c6, x) == 0 && d == 0) return false;
    }
    return true;
  };

  const std::int64_t models = static_cast<std::int64_t>(q) * q * q;
  std::vector<char> seen(static_cast<std::size_t>(models), 0);
  const std::int64_t group_order = static_cast<std::int64_t>(q) * (q - 1);
  for (std::int64_t idx = 0; idx < models; ++idx) {
    if (seen[idx]) continue;
    seen[idx] = 1;
    const int c2 = static_cast<int>(idx % q), c4 = static_cast<int>(idx / q % q), c6 = static_cast<int>(idx / q / q);
    if (!nonsingular(c2, c4, c6)) continue;

    std::int64_t stabiliser = 0, orbit = 1;
    for (int u = 1; u < q; ++u) {
      const int u2inv = f.inv(f.mul(u, u));
      const int u4inv = f.mul(u2inv, u2inv);
      const int u6inv = f.mul(u4inv, u2inv);
      for (int r = 0; r < q; ++r) {
        // u^-6 f(u^2 x + r)
        const int n2 = f.mul(f.add(f.mul(f.constant(3), r), c2), u2inv);
        const int n4 = f.mul(f.add(f.add(f.mul(f.constant(3), f.mul(r, r)), f.mul(f.constant(2), f.mul(c2, r))), c4), u4inv);
        const int n6 = f.mul(eval(c2, c4, c6, r), u6inv);
        const std::int64_t img = n2 + static_cast<std::int64_t>(q) * (n4 + static_cast<std::int64_t>(q) * n6);
        if (img == idx) {
          ++stabiliser;
        } else if (!seen[img]) {
          seen[img] = 1;
          ++orbit;
        }
      }
    }
    if (orbit * stabiliser != group_order) throw std::logic_error("orbit-stabiliser count mismatch");

    std::int64_t s = 0;
    for (int x = 0; x < q; ++x) s += f.chi(eval(c2, c4, c6, x));
    out.mass[-s] += mpq_class(1, stabiliser);
    out.mass[-s].canonicalize();
    ++out.iso_classes;
    out.models += orbit;
  }
  return out;
}

}  // namespace siegel::oracle
