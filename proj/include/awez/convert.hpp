#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "awez/awez.hpp"

namespace awez {

// A hypothesis of a conversion construction does not hold.
class ConversionError : public std::runtime_error {
 public:
  ConversionError(const std::string& precondition, const std::string& what)
      : std::runtime_error(precondition + ": " + what), precondition_(precondition) {}
  const std::string& precondition() const { return precondition_; }

 private:
  std::string precondition_;
};

// The complement of im psi is not free (or not computable) at block (n, d).
class NotLiftable : public std::runtime_error {
 public:
  NotLiftable(int n, int d, const std::string& why)
      : std::runtime_error("cannot lift at block (n=" + std::to_string(n) + ", degree " + std::to_string(d) + "): " +
                           why),
        n_(n),
        d_(d) {}
  int n() const { return n_; }
  int degree() const { return d_; }

 private:
  int n_, d_;
};

// psi_R : C -> C' over R and psi_S : D -> D' over S together with the
// compatibility twists of the four complexes.
struct CompatiblePair {
  const ChainMap& psi_R;
  const ChainMap& psi_S;
  const LeftCompatibility& tau_C;
  const LeftCompatibility& tau_C2;
  const RightCompatibility& tau_D;
  const RightCompatibility& tau_D2;
};

// (psi_R (x) 1) tau_C = tau_C' (1 (x) psi_R) and (1 (x) psi_S) tau_D = tau_D' (psi_S (x) 1)
// on basis words of degree <= d_max in homological degrees <= n_max, against
// algebra basis elements of degree <= a_max.
CheckReport check_compatible(const CompatiblePair& pair, int n_max, int d_max, int a_max);

// psi_R (x) psi_S : C (x)_tau D -> C' (x)_tau D'. Both maps have degree 0, so
// no Koszul sign appears.
ChainMap tensor_chain_maps(const ChainMap& psi_R, const ChainMap& psi_S, const TwistedProductComplex& x,
                           const TwistedProductComplex& x2);

// A one-sided inverse psi' of an injective chain map psi : P -> P' with
// psi' psi = 1, built degree by degree. On each block (n, d) the free
// generators of P'_n split as span psi(generators of P) plus the echelon
// pivot complement; psi' inverts psi on the first part and lifts
// psi'_{n-1} d' through d_n on the complement. Blocks are built on demand.
class BootstrapLift {
 public:
  explicit BootstrapLift(ChainMap psi, std::string name = "ψ′");
  BootstrapLift(const BootstrapLift&) = delete;
  BootstrapLift& operator=(const BootstrapLift&) = delete;

  const ChainMap& psi() const { return psi_; }
  // psi' as a map P' -> P.
  const ChainMap& map() const { return map_; }
  Tensor apply(int n, const Word& w) const;
  // psi' on a free generator of P'_n.
  const Tensor& on_generator(int n, const Word& g) const;

  struct BlockInfo {
    int image_rank = 0;  // dim span psi(generators of P)
    int complement = 0;  // number of complement generators lifted
  };
  // Blocks computed so far.
  const std::map<std::pair<int, int>, BlockInfo>& blocks() const { return info_; }

 private:
  struct Solver {
    std::map<Word, int> index;
    std::vector<Word> words;
    std::unique_ptr<Echelon> echelon;
  };
  void build_block(int n, int d) const;
  Tensor lift(int n, int d, const Word& c) const;
  const Solver& solver(int n, int d) const;

  ChainMap psi_;
  ChainMap map_;
  mutable std::map<std::pair<int, int>, std::map<Word, Tensor>> values_;
  mutable std::map<std::pair<int, int>, BlockInfo> info_;
  mutable std::map<std::pair<int, int>, Solver> solvers_;
};

// pi = (pi_R (x) pi_S) AW and iota = EZ (iota_R (x) iota_S) between B-bar_A and
// X = C (x)_tau D, for maps pi_R : B-bar_R -> C, iota_R : C -> B-bar_R and
// likewise over S. The AwEz instance supplies B-bar_A, B-bar_R (x)_tau B-bar_S and AW, EZ.
struct Conversion {
  ChainMap pi;
  ChainMap iota;
};
Conversion conversion_pi_iota(const AwEz& maps, const TwistedProductComplex& x, const ChainMap& pi_R,
                              const ChainMap& iota_R, const ChainMap& pi_S, const ChainMap& iota_S);

// The injective-only route: iota as above, pi obtained by bootstrap lifting.
struct LiftedConversion {
  ChainMap iota;
  std::unique_ptr<BootstrapLift> lift;
  const ChainMap& pi() const { return lift->map(); }
};
LiftedConversion conversion_by_lifting(const AwEz& maps, const TwistedProductComplex& x, const ChainMap& iota_R,
                                       const ChainMap& iota_S);

// B-bar_R -> K for R = k[x]: 1 x^a 1 goes to sum_{i+j=a-1} x^i (x) x (x) x^j and
// words in degree >= 2 go to 0.
ChainMap one_variable_koszul_projection(const BarComplex& bar, const KoszulComplex& k);
ChainMap koszul_inclusion(const KoszulComplex& k, const BarComplex& bar);

// R # H for a Hopf action on a Koszul algebra R: X = K_R (x)_tau B-bar_H,
// iota = EZ (iota_R (x) 1) with iota_R the inclusion K -> B-bar_R, pi the
// bootstrap lift of iota, and pi_RH = pi EZ.
class SmashKoszulPipeline {
 public:
  // a must be built from HopfSmashTwist(action). Throws ActionNotAdmissible.
  SmashKoszulPipeline(const TwistedProductAlgebra& a, const HopfAction& action, int max_degree);
  SmashKoszulPipeline(const SmashKoszulPipeline&) = delete;
  SmashKoszulPipeline& operator=(const SmashKoszulPipeline&) = delete;

  const AwEz& maps() const { return maps_; }
  const KoszulComplex& koszul() const { return k_; }
  const TwistedProductComplex& product() const { return x_; }
  const ChainMap& iota_R() const { return iota_R_; }
  const ChainMap& iota_H() const { return iota_H_; }
  const ChainMap& iota() const { return iota_; }
  const ChainMap& pi() const { return lift_->map(); }
  const ChainMap& pi_RH() const { return pi_RH_; }
  const BootstrapLift& lift() const { return *lift_; }
  CompatiblePair compatibility() const;

 private:
  const TwistedProductAlgebra& a_;
  AwEz maps_;
  KoszulComplex k_;
  KoszulHopfTwist tau_k_;
  BarLeftTwist tau_bar_R_;
  BarRightTwist tau_bar_H_;
  TwistedProductComplex x_;
  ChainMap iota_R_, iota_H_, iota_;
  std::unique_ptr<BootstrapLift> lift_;
  ChainMap pi_RH_;
};

}  // namespace awez
