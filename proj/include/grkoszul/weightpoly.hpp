#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grkoszul/alcove.hpp"
#include "grkoszul/coxeter.hpp"

namespace grk {

// A linkage class around lambda^-: the group table up to a length bound and,
// for every weight reached, the shortest w with w . lambda^- equal to it.
class LinkageClass {
 public:
  LinkageClass(const RootDatum& rd, long e, const Weight& minus, int max_length);
  const CoxeterTable& table() const { return ct_; }
  const KlTables& kl() const { return kl_; }
  const Weight& minus() const { return minus_; }
  // element index of w_mu, or -1 when mu is not reached within the bound
  int element_of(const Weight& mu) const;
  // dominant weights reached, by increasing length
  std::vector<Weight> dominant() const;

 private:
  CoxeterTable ct_;
  KlTables kl_;
  Weight minus_;
  std::map<Weight, int> w_of_;
};

struct WeightPolys {
  bool linked = false;
  long l_nu = 0, l_lambda = 0;
  Laurent p, q;                 // P_{w_nu, w_lambda}, Q_{w_nu, w_lambda} in W_e
  std::optional<Laurent> q_dominant;  // inverse taken over dominant weights only
};
WeightPolys weight_polynomials(const RootDatum& rd, long e, const Weight& nu, const Weight& lambda);

struct LayerPrediction {
  Weight lambda;
  long length = 0;
  bool semisimple_series = false;  // lambda singular
  std::vector<Weight> support;     // dominant linked nu with w_nu <= w_lambda
  std::map<Weight, Laurent> q;     // Q_{nu,lambda} over the dominant weights
  std::map<Weight, Laurent> f;     // rebuilt from the layer table
  std::map<std::pair<int, Weight>, long long> mult;  // (layer n, nu) -> multiplicity
  std::vector<std::vector<std::pair<Weight, long long>>> layers() const;
};
// gamma restricts the weights considered (it must contain lambda).
LayerPrediction predict_layers(const RootDatum& rd, long e, const Weight& lambda, const WeightSet* gamma = nullptr);

using Character = std::map<Weight, long long>;
// Weyl character through Freudenthal's multiplicity formula.
Character weyl_character(const RootDatum& rd, const Weight& lambda);
long long weyl_dimension(const RootDatum& rd, const Weight& lambda);
long long character_dimension(const Character& c);
bool w_invariant(const RootDatum& rd, const Character& c);

struct LcfResult {
  Weight lambda;
  std::vector<std::pair<Weight, long long>> terms;  // (y . lambda^-, signed P_{y,w}(1))
  Character ch;
  long long dim = 0;
  long long weyl_dim = 0;
  bool nonnegative = true;
  std::string violation;
};
// Requires lambda dominant and e-regular.
LcfResult lcf_character(const RootDatum& rd, long e, const Weight& lambda);

}  // namespace grk
