#pragma once

#include <string>
#include <vector>

#include "cychom/rewriting.hpp"

namespace cychom {

/// Ready-made presentations used by the verification harness and the tests.
/// Generators are listed largest first.
namespace algebras {

/// T(V) on generators named prefix1..prefixn of weight one.
Presentation free_algebra(int n, int parity, int trunc, const std::string& prefix = "T");
/// k[x1..xn]: x_j x_i - x_i x_j for i < j, even generators.
Presentation polynomial_ring(int n, int trunc);
/// Exterior algebra on n odd generators: a_i^2 and a_j a_i + a_i a_j.
Presentation exterior_algebra(int n, int trunc);
/// Monomial quotient T(V)/(words), words given as generator names.
Presentation monomial_quotient(int n, int parity, const std::vector<std::vector<std::string>>& words, int trunc,
                               const std::string& prefix = "T");
/// k<a,b,c>/([a,b] + c^2) with odd generators: ab + ba + cc.
Presentation symmetric_witness(int trunc);
/// A0, A1: T1^2 in n even/odd generators; B0, B1: graded commutator [T1,T2].
Presentation exceptional(const std::string& variant, int n, int trunc);

}  // namespace algebras
}  // namespace cychom
