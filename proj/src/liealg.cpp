#include "phermion/liealg.hpp"

namespace phermion {

std::string JTriple::algebra_name() const {
  return epsilon == +1 ? "su(2)" : "su(1,1)";
}

JTriple build_j_triple(int epsilon) {
  if (epsilon != +1 && epsilon != -1) {
    throw ConfigError("epsilon must be +1 or -1, got " +
                      std::to_string(epsilon));
  }
  const LadderRep rep =
      epsilon == +1 ? make_fermion() : make_abnormal_phermion();
  const ComplexMatrix c = rep.c;
  const ComplexMatrix cs = rep.c_sharp();
  JTriple t;
  t.epsilon = epsilon;
  t.J1 = 0.5 * (c + cs);
  t.J2 = (c - cs) / Complex(0, 2);
  t.J3 = -rep.number() + 0.5 * ComplexMatrix::Identity(2, 2);
  t.delta = epsilon == +1 ? std::array<int, 3>{1, 1, 1}
                          : std::array<int, 3>{1, 1, -1};
  t.eta = rep.eta;
  return t;
}

ComplexMatrix casimir_witness(const JTriple& t) {
  return t.J1 * t.J1 + t.J2 * t.J2 +
         static_cast<double>(t.delta[2]) * (t.J3 * t.J3);
}

std::vector<RelationResidual> verify_brackets(const JTriple& t, double tol) {
  std::vector<RelationResidual> out;
  const Complex i_unit(0, 1);
  const std::array<const ComplexMatrix*, 3> j{&t.J1, &t.J2, &t.J3};
  // Cyclic brackets: [J_i, J_j] = i delta_k J_k for (i,j,k) cyclic.
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& [a, b, k] : cyc) {
    const std::string name = "[J" + std::to_string(a + 1) + ", J" +
                             std::to_string(b + 1) + "] == " +
                             (t.delta[static_cast<std::size_t>(k)] < 0 ? "-i J"
                                                                       : "i J") +
                             std::to_string(k + 1);
    out.push_back(check_relation(
        name, commutator(*j[static_cast<std::size_t>(a)],
                         *j[static_cast<std::size_t>(b)]),
        i_unit * static_cast<double>(t.delta[static_cast<std::size_t>(k)]) *
            (*j[static_cast<std::size_t>(k)]),
        tol));
  }
  for (int k = 0; k < 3; ++k) {
    out.push_back(check_relation(
        "J" + std::to_string(k + 1) + "# == J" + std::to_string(k + 1),
        pseudo_adjoint(*j[static_cast<std::size_t>(k)], t.eta),
        *j[static_cast<std::size_t>(k)], tol));
  }

  // Ladder form of the 3-axis bracket: [c, c#] == eps (1 - 2n) == 2 eps J3.
  const LadderRep rep =
      t.epsilon == +1 ? make_fermion() : make_abnormal_phermion();
  out.push_back(check_relation("[c, c#] == 2 eps J3",
                               commutator(rep.c, rep.c_sharp()),
                               2.0 * static_cast<double>(t.epsilon) * t.J3,
                               tol));

  out.push_back(check_relation(
      "J1^2 + J2^2 + d3 J3^2 == eps (3/4) 1", casimir_witness(t),
      static_cast<double>(t.epsilon) * 0.75 * ComplexMatrix::Identity(2, 2),
      tol));
  return out;
}

}  // namespace phermion
