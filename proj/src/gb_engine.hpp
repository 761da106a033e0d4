#pragma once

// Buchberger engine shared by the public Gröbner operations. Vectors are kept
// sorted descending in the module term order so the leading term is front().

#include <cstddef>
#include <optional>
#include <vector>

#include "relcm/module.hpp"

namespace relcm::detail {

using OrderedVec = std::vector<VecTerm>;

struct TermOrder {
  std::vector<int> weight;  // total degree of each basis element
  std::vector<int> block;   // terms in a higher block dominate (elimination)

  int degree(const VecTerm& t) const { return weight[t.comp] + t.mono.degree(); }
  int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) const {
    if (block[ca] != block[cb]) return block[ca] > block[cb] ? 1 : -1;
    int da = weight[ca] + a.degree(), db = weight[cb] + b.degree();
    if (da != db) return da > db ? 1 : -1;
    int r = compareRevLex(a, b);
    if (r != 0) return r;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  static TermOrder forModule(const FreeModule& ambient);
  // Components [0, eliminated) form the dominating block.
  static TermOrder elimination(const FreeModule& ambient, std::size_t eliminated);
};

class GbEngine {
 public:
  GbEngine(PrimeField field, TermOrder order) : field_(field), order_(std::move(order)) {}

  OrderedVec toOrdered(const ModuleVector& v) const;
  static ModuleVector toStorage(const PrimeField& f, const OrderedVec& v);

  // Runs Buchberger on the inputs with the normal selection strategy. Pairs and
  // inputs above degreeBound are skipped, leaving a truncated basis that is
  // still correct for normal forms up to that degree. When minimal is given,
  // minimal[i] is set iff input i was not in the span of what came before it.
  void run(const std::vector<OrderedVec>& inputs, std::optional<int> degreeBound,
           std::vector<bool>* minimal = nullptr);

  // Keeps only elements with minimal leading terms and tail-reduces them.
  void interreduce();

  OrderedVec reduce(OrderedVec f) const { return reduceSkipping(std::move(f), kNone); }

  const std::vector<OrderedVec>& basis() const { return basis_; }
  const TermOrder& order() const { return order_; }
  const PrimeField& field() const { return field_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  OrderedVec reduceSkipping(OrderedVec f, std::size_t skip) const;
  std::size_t findReducer(const VecTerm& t, std::size_t skip) const;
  // a[from..] + c * mono * b
  OrderedVec addMultiple(const OrderedVec& a, std::size_t from, Coeff c, const Monomial& mono,
                         const OrderedVec& b) const;
  void makeMonic(OrderedVec& v) const;
  void addElement(OrderedVec v);

  PrimeField field_;
  TermOrder order_;
  std::vector<OrderedVec> basis_;
  std::vector<std::vector<std::size_t>> byComponent_;
};

}  // namespace relcm::detail
