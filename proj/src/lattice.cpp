#include "twisted/lattice.hpp"

#include "twisted/error.hpp"

namespace twisted {

void require_unimodular(const IntMatrix& m) {
  if (m.size() == 0) throw InputError("matrix must have positive dimension");
  if (!m.is_unimodular())
    throw InputError("matrix is not unimodular (|det| = " + mpz_class(abs(m.determinant())).get_str() +
                     "), so it is not an automorphism of Z^n");
}

ExtendedNatural lattice_reidemeister(const IntMatrix& m) {
  require_unimodular(m);
  mpz_class d = (IntMatrix::identity(m.size()) - m).determinant();
  if (d == 0) return ExtendedNatural::infinity();
  return ExtendedNatural(abs(d));
}

ExtendedNatural cokernel_order(const IntMatrix& a) {
  mpz_class product = 1;
  for (const auto& d : smith_normal_form(a).diagonal()) {
    if (d == 0) return ExtendedNatural::infinity();
    product *= d;
  }
  return ExtendedNatural(product);
}

LatticeDecision lattice_twisted_decide(const IntMatrix& m, const IntVector& x, const IntVector& y) {
  const std::size_t n = m.size();
  if (x.size() != n || y.size() != n)
    throw InputError("vector length does not match matrix dimension " + std::to_string(n));
  require_unimodular(m);

  const IntMatrix a = IntMatrix::identity(n) - m;
  IntVector diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = y[i] - x[i];

  const auto snf = smith_normal_form(a);
  const IntVector b = snf.U.apply(diff);
  IntVector h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& d = snf.D(i, i);
    if (d == 0) {
      if (b[i] != 0) return {};
      h[i] = 0;
    } else {
      if (b[i] % d != 0) return {};
      h[i] = b[i] / d;
    }
  }
  IntVector g = snf.V.apply(h);
  if (a.apply(g) != diff) throw VerificationError("lattice witness fails (I - M)g = y - x");
  return LatticeDecision{true, std::move(g)};
}

ReidemeisterSequence reidemeister_sequence(const IntMatrix& m, std::size_t length) {
  if (length > kMaxSequenceLength)
    throw InputError("sequence length is limited to " + std::to_string(kMaxSequenceLength));
  require_unimodular(m);
  ReidemeisterSequence seq;
  seq.source = "matrix " + to_string(m);
  const IntMatrix id = IntMatrix::identity(m.size());
  IntMatrix power = m;
  for (std::size_t k = 1; k <= length; ++k) {
    mpz_class d = (id - power).determinant();
    seq.terms.push_back(d == 0 ? ExtendedNatural::infinity() : ExtendedNatural(abs(d)));
    power = power * m;
  }
  return seq;
}

ReidemeisterSequence finite_sequence(const std::vector<std::size_t>& counts, std::string source) {
  ReidemeisterSequence seq;
  seq.source = std::move(source);
  for (auto c : counts) seq.terms.emplace_back(mpz_class(static_cast<unsigned long>(c)));
  return seq;
}

} // namespace twisted
