#ifndef FSING_FROBROOT_HPP
#define FSING_FROBROOT_HPP

// Frobenius roots, star closures and the Frobenius chains built from them.
// Throughout q = p^e. The root of A is the smallest ideal L with A ⊆ L^[q].

#include "fsing/ideal.hpp"
#include "fsing/matrix.hpp"

#include <optional>
#include <vector>

namespace fsing {

/// 1 + p + ... + p^(e-1). Throws InputError if e == 0 or the value needs more than 63 bits.
std::uint64_t nu(unsigned e, std::uint32_t p);

/// Write g = sum over monomials b with exponents < q of g_b^q * b and return (g_b).
Ideal frobenius_root(const Polynomial& g, unsigned e);
/// Sum of the roots of the generators.
Ideal frobenius_root(const Ideal& A, unsigned e);

/// Iteration limits for the chains below. Every chain provably stabilizes, so
/// hitting the limit raises InternalError. The default is 10 * nvars * p^e.
struct ChainLimits {
  std::optional<std::size_t> max_iterations;
  std::size_t resolve(const Ring& R, unsigned e) const;
};

/// Stable value of A_0 = A, A_{i+1} = root(u A_i) + A_i: the smallest ideal
/// L ⊇ A with u L ⊆ L^[q].
Ideal star_closure(const Ideal& A, const Polynomial& u, unsigned e, ChainLimits limits = {});

/// R/I together with u such that u I ⊆ I^[q]; multiplication by u is the
/// Frobenius action R/I -> R/I^[q].
class FrobeniusPair {
 public:
  /// Throws PreconditionError when u I is not contained in I^[q].
  FrobeniusPair(Ideal I, Polynomial u, unsigned e = 1);

  const Ideal& ideal() const noexcept { return I_; }
  const Polynomial& u() const noexcept { return u_; }
  unsigned e() const noexcept { return e_; }
  const Ring& ring() const noexcept { return I_.ring(); }

 private:
  Ideal I_;
  Polynomial u_;
  unsigned e_;
};

/// How J_k is formed from u^(nu_k):
///   smallest_containing_I  root(u^(nu_k)) + I, the smallest ideal containing I
///                          with u^(nu_k) in J_k^[q^k]
///   root_of_sum            root(u^(nu_k) R + I) + I
enum class ChainFormula { smallest_containing_I, root_of_sum };

struct NilpotencyOptions {
  ChainFormula formula = ChainFormula::smallest_containing_I;
  /// Also compute the other formula's chain and report where the two differ.
  bool compare_formulas = false;
  ChainLimits limits;
};

struct NilpotencyReport {
  /// J_1 ⊇ J_2 ⊇ ...; the last two entries are equal.
  std::vector<Ideal> chain;
  /// 0 when torsion-free, otherwise the first k with J_k = J_{k+1}.
  std::size_t eta;
  Ideal nil_ideal;
  bool torsion_free;
  /// With compare_formulas: the chain under the other formula, and the first
  /// 1-based index where the two chains differ (if any).
  std::vector<Ideal> other_chain;
  std::optional<std::size_t> formulas_disagree_at;
};

NilpotencyReport nilpotency_analysis(const FrobeniusPair& fp, const NilpotencyOptions& options = {});

struct ColonChain {
  /// L_1 ⊆ L_2 ⊆ ... with L_k = (I^[q^k] : u^(nu_k)); the last two entries are equal.
  std::vector<Ideal> chain;
  Ideal stable;
};

/// Largest quotient of R/I on which the Frobenius action is nilpotent.
ColonChain stable_colon_chain(const FrobeniusPair& fp, ChainLimits limits = {});

/// I ⊆ L and u L ⊆ L^[q].
bool is_es_ideal(const Ideal& L, const FrobeniusPair& fp);

struct FedderResult {
  bool f_injective = false;
  Polynomial u;
};

/// u = (u_1 ... u_s)^(p-1) and the verdict u ∉ (x_1^p, ..., x_n^p). The
/// sequence is assumed to be regular; this is not checked.
FedderResult fedder_f_injective(const std::vector<Polynomial>& regular_sequence);

struct EntryChain {
  /// roots of the (i, j) entry of G_1, G_2, ..., G_k
  std::vector<Ideal> chain;
  bool stabilized = false;
};

/// G_1 = G, G_k = G * F(G_{k-1}) with F the entrywise p-th power; returns the
/// root chains of every entry in row-major order.
std::vector<EntryChain> twisted_matrix_chain(const PolyMatrix& G, unsigned e_max);

}  // namespace fsing

#endif  // FSING_FROBROOT_HPP
