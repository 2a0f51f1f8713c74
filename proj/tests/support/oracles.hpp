#pragma once

// Independent reference implementations for the tests.  Nothing here calls
// into the library's algorithms; shapes and tableaux are only used as
// containers.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "hwvkit/bidet.hpp"

namespace oracle {

using hwvkit::Box;
using hwvkit::Partition;
using hwvkit::SkewDiagram;
using hwvkit::Tableau;

using Ints = std::vector<int>;
using Perm = std::vector<int>;  // image of box k

// partitions of n with parts in decreasing order, any length
std::vector<Ints> partitions(int n);
std::vector<Ints> partitions(int n, int max_len);

// every filling of e with entries 1..k, in no particular order
std::vector<Ints> all_fillings(const SkewDiagram& e, int k);
bool rows_weak(const SkewDiagram& e, const Ints& f);
bool rows_strict(const SkewDiagram& e, const Ints& f);
bool cols_weak(const SkewDiagram& e, const Ints& f);
bool cols_strict(const SkewDiagram& e, const Ints& f);
Ints content(const Ints& f, int k);

// definitions straight from the text: image[k] indexes target boxes
bool is_admissible(const SkewDiagram& f, const SkewDiagram& e, const Perm& image);
bool is_special(const SkewDiagram& f, const SkewDiagram& e, const Perm& image);
// all bijections F -> E
std::vector<Perm> all_bijections(std::size_t n);

// permutations of the boxes preserving every column, by brute force
std::vector<Perm> column_group(const SkewDiagram& e);
int sign(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // a∘b
Perm inverse(const Perm& p);

// |C_{P,Q,α}| counted directly
std::uint64_t twist_order(const Tableau& P, const Tableau& Q, const Perm& alpha);

// hook-content formula
std::uint64_t count_ssyt(const Ints& shape, int max_entry);

// Littlewood-Richardson coefficient c^lambda_{kappa, mu} by counting LR tableaux
std::uint64_t lr(const Ints& lambda, const Ints& kappa, const Ints& mu);
// coefficient of s_target in s_{k1} ... s_{km}
std::uint64_t multi_lr(const Ints& target, const std::vector<Ints>& factors);
// Cauchy: multiplicity of ∇(mu)⊗∇(lambda) in degree nu of k[Mat_rs^m], char 0
std::uint64_t cauchy_multiplicity(const Ints& mu, const Ints& lambda, const Ints& nu);

// Evaluation at a point; point[v] is the value of flat variable v
mpq_class evaluate(const hwvkit::Polynomial& f, const std::vector<mpq_class>& point, const mpq_class& u = 0);
std::vector<mpq_class> random_point(std::mt19937& rng, int nvars, int lo = -4, int hi = 4);

mpq_class det(std::vector<std::vector<mpq_class>> a);
using Matrix = std::vector<std::vector<mpq_class>>;
Matrix matmul(const Matrix& a, const Matrix& b);

// Eq. (2) evaluated numerically; X[l-1] is the l-th r×s matrix
mpq_class eq2_value(const Tableau& P, const Tableau& Q, const Perm& alpha, const Tableau& S, const Tableau& T,
                    const std::vector<Matrix>& X);

// rank of a family of polynomials by dense elimination over Q or F_p
std::size_t dense_rank(const std::vector<hwvkit::Polynomial>& family, std::uint32_t p = 0);

// dim of the U_n-invariants of weight chi in degree d of k[Mat_n] under
// conjugation, char 0, from weight multiplicities and the Weyl group
std::int64_t conj_multiplicity(int n, const Ints& chi, int d);

// random ordered / semistandard tableaux and partitions
Ints random_partition(std::mt19937& rng, int n, int max_len);

}  // namespace oracle
