#include "hilbnef/surface.hpp"

#include "hilbnef/parallel.hpp"
#include "hilbnef/weyl.hpp"

#include <stdexcept>

namespace hilbnef::surface {

std::vector<Divisor> mori_generators(int max_h_degree) {
  std::vector<Divisor> gens{lattice::F()};
  const auto curves = weyl::enumerate_minus_one_classes(max_h_degree);
  gens.insert(gens.end(), curves.begin(), curves.end());
  return gens;
}

NefCertificate is_nef_up_to_degree(const Divisor& d, int max_h_degree) {
  NefCertificate cert;
  cert.degree_bound = max_h_degree;
  const auto gens = mori_generators(max_h_degree);
  const auto values = parallel_map(gens, [&](const Divisor& c) { return intersect(d, c); });
  cert.checked.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cert.checked.push_back({gens[i], values[i]});
    if (!cert.witness && values[i] < 0) cert.witness = cert.checked.back();
  }
  return cert;
}

AmpleDecision is_ample_hf_family(const Rational& c_h, const Rational& c_hme1, const Rational& c_f) {
  if (c_h != 0 && c_hme1 != 0)
    throw std::invalid_argument("ample family: at most one of the H and H-E1 coefficients may be nonzero");

  const Divisor d = c_h * lattice::H() + c_hme1 * (lattice::H() - lattice::E(1)) + c_f * lattice::F();
  AmpleDecision out;
  out.dot_fiber = intersect(d, lattice::F());
  out.dot_e1 = intersect(d, lattice::E(1));
  out.dot_ei = intersect(d, lattice::E(2));
  out.self_intersection = self_intersection(d);

  // For a (-1)-curve E = aH - sum b_i E_i with a >= 1 we have E.F = 1 and
  // 0 <= b_1 <= a, so D.E = c_h a + c_hme1 (a - b_1) + c_f.
  if (c_h < 0 || c_hme1 < 0) {
    out.min_higher.reset();
    out.trace.push_back("D.E = c_h*a + c_hme1*(a-b1) + c_f is unbounded below over (-1)-curves");
  } else if (c_h > 0) {
    out.min_higher = c_h + c_f;
    out.trace.push_back("min D.E over a>=1 is c_h + c_f = " + to_string(*out.min_higher) +
                        ", attained at H-Ei-Ej");
  } else {
    out.min_higher = c_f;
    out.trace.push_back("min D.E over a>=1 is c_f = " + to_string(*out.min_higher) +
                        ", attained at H-E1-Ej");
  }
  out.trace.push_back("D.F = " + to_string(out.dot_fiber));
  out.trace.push_back("D.E1 = " + to_string(out.dot_e1));
  out.trace.push_back("D.Ei (i>=2) = " + to_string(out.dot_ei));
  out.trace.push_back("D.D = " + to_string(out.self_intersection));

  out.ample = out.dot_fiber > 0 && out.dot_e1 > 0 && out.dot_ei > 0 && out.min_higher &&
              *out.min_higher > 0 && out.self_intersection > 0;
  return out;
}

Divisor polarization_a1(int n) {
  return Rational(n, 3) * lattice::H() + (Rational(n) - Rational(3, 2)) * lattice::F();
}

Divisor polarization_a2(int n) {
  return Rational(n, 2) * (lattice::H() - lattice::E(1)) + (Rational(n) - Rational(3, 2)) * lattice::F();
}

AmpleDecision ample_a1(int n) { return is_ample_hf_family(Rational(n, 3), 0, Rational(n) - Rational(3, 2)); }

AmpleDecision ample_a2(int n) { return is_ample_hf_family(0, Rational(n, 2), Rational(n) - Rational(3, 2)); }

}  // namespace hilbnef::surface
