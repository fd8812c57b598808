// Pullback of an elliptic fibration along tau -> tau^n on the base line,
// with the standard ramified-fiber transformation rules and a verifier
// that compares the predicted configuration against a reclassification
// of the pulled-back model.
#pragma once

#include <string>
#include <vector>

#include "ellq/kodaira.hpp"
#include "ellq/weierstrass.hpp"

namespace ellq {

// Substitutes tau -> tau^n in every coefficient.  Minimality at the
// ramification points is restored later by the classifier, so the model
// returned here is the naive pullback.
WeierstrassModel pullback_model(const WeierstrassModel& m, int n);

// Fiber type over a ramification point of index n.  Multiplicative types
// scale, additive types rotate through their cyclic families.
FiberType transform_ramified(const FiberType& f, int n);

struct BaseChangeRow {
  Place original_place;
  FiberType original_type;
  std::string predicted_place;  // place string on the covering line
  FiberType predicted_type;
  int predicted_points = 1;  // geometric points over the original place
  bool ramified = false;
  bool observed = false;  // a matching entry exists in the pullback
  FiberType observed_type;
  int observed_points = 0;
  bool match = false;
};

struct BaseChangeReport {
  int n = 1;
  FiberConfiguration original;
  FiberConfiguration pullback;
  std::vector<BaseChangeRow> rows;
  std::vector<std::string> unmatched;  // pullback entries no row claimed
  bool verdict = false;
};

// Classifies m and its pullback, predicts every fiber of the pullback
// from the original configuration, and checks the two agree.
BaseChangeReport verify_base_change(const WeierstrassModel& m, int n);

}  // namespace ellq
