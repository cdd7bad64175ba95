#pragma once

#include <string>
#include <vector>

#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"
#include "domroots/realroots.hpp"

namespace domroots {

enum class WitnessFamily { kExactK2, kK2ell, kKkk, kStar };
enum class CaseTag { kCase11, kCase12, kCase2, kExact };

std::string to_string(WitnessFamily f);
std::string to_string(CaseTag c);
WitnessFamily witness_family_from_string(const std::string& s);
CaseTag case_tag_from_string(const std::string& s);

/// Bounds on the (m, family parameter) search. The defaults reach every
/// target with |z| <= 10 and eps >= 0.01.
struct SearchBudget {
  int max_m = 41;
  int max_param = 6000;
  long max_degree = 20000;
};

/// A machine-checkable claim: D(family[K_m], x) has a real root inside
/// enclosure, and enclosure lies in (z - eps, z + eps).
struct WitnessCertificate {
  Rational target_z;
  Rational epsilon;
  WitnessFamily family = WitnessFamily::kExactK2;
  int param = 0;  // l for K_{2,l}, k for K_{k,k} and K_{1,k}; 2 for exact K_2
  int m = 1;
  long composed_degree = 0;
  RootEnclosure enclosure;
  CaseTag case_tag = CaseTag::kExact;
};

/// Search stopped without finding a witness. Never a claim of nonexistence.
class BudgetExhausted : public CapacityError {
 public:
  BudgetExhausted(const std::string& what, long last_diagonal, long cells_examined)
      : CapacityError(what), last_diagonal_(last_diagonal), cells_examined_(cells_examined) {}
  long last_diagonal() const noexcept { return last_diagonal_; }
  long cells_examined() const noexcept { return cells_examined_; }

 private:
  long last_diagonal_;
  long cells_examined_;
};

/// ((z - eps + 1)^m - 1, (z + eps + 1)^m - 1) for odd m; the image of the
/// target window under x -> (1 + x)^m - 1.
RationalInterval target_interval(const Rational& z, const Rational& eps, int m);

ClosedFormSpec closed_form_of(WitnessFamily family, int param);
Graph witness_graph(WitnessFamily family, int param);
/// Degree of D(family) before composition.
long family_degree(WitnessFamily family, int param);

WitnessCertificate construct_witness(const Rational& z, const Rational& eps,
                                     const SearchBudget& budget = {},
                                     const Rational& tol = Rational(1, 1000000000));

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_passed() const;
};

/// Re-derives the composed polynomial by expansion and re-checks every
/// claim of the certificate. Failures are report entries.
VerificationReport verify_certificate(const WitnessCertificate& cert);

}  // namespace domroots
