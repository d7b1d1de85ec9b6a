#pragma once
// Non-positivity at infinity and minimality certificates. A divisorial
// valuation is non-positive at infinity when nu(v) > nu(u) and nu(v)^2
// dominates the last maximal contact value; such valuations have
// mu-hat = nu(v) exactly, and appending slack-many free points to their
// cluster produces a graph whose very general members are minimal.

#include <optional>
#include <string>
#include <vector>

#include "planeval/exact/rational.hpp"
#include "planeval/exact/val_elem.hpp"
#include "planeval/graph/dual_graph.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct NPIWitness {
  HNExpansion hn;
  ValElem nu_v{Int(0)};
  ValElem nu_u{Int(0)};
  ValElem last_mcv{Int(0)};  // last maximal contact value
  ValElem slack{Int(0)};     // nu(v)^2 - last_mcv, always >= 0
};

// Divisorial expansions only. The maximal-ideal valuation always qualifies
// (slack 0); otherwise a witness is returned iff nu(v) > nu(u) and
// nu(v)^2 >= the last maximal contact value.
std::optional<NPIWitness> npi_test(const HNExpansion& hn);

// Exact mu-hat of a non-positive-at-infinity valuation: nu(v).
ValElem mu_hat_npi(const NPIWitness& w);

// Appends slack-many free vertices after the arrow. The result's arrow
// valuation satisfies bbar_last = nu(v)^2, so its very general members are
// minimal with normalized mu-hat = nu(v)/bbar_0; both identities are checked.
DualGraph enlarge_to_minimal(const NPIWitness& w);

// iota(omega) = (bbar_0 - 2 bbar_1 + sqrt(disc)) / (2 bbar_0) with
// disc = bbar_0^2 - 4 bbar_0 bbar_1 + 4 bbar_last; minus infinity when the
// discriminant is negative (every k >= 0 is then admissible).
struct Iota {
  bool minus_infinity = false;
  Alg value{Rat(0)};
};
Iota iota(const std::vector<Int>& mcv);

// Admissible slopes for the k-shifted family:
//   { a integer : sqrt(bbar_last/bbar_0^2 + k) <= a < bbar_1/bbar_0 + k }
//   together with the endpoint bbar_1/bbar_0 + k.
// The lower-bound comparison is done by squaring, exactly.
std::vector<Rat> family_B(const std::vector<Int>& mcv, long k);

// k free vertices prepended to the base graph. The shifted contact values
// are checked against the closed form bbar_i + k*bbar_0^2/e_{i-1}.
DualGraph build_gamma_k(const DualGraph& g, long k);

// The shifted graph with ((a^2 - k)*bbar_0^2 - bbar_last) free vertices
// appended; a must come from family_B. Very general members are minimal.
DualGraph build_gamma_k_a(const DualGraph& g, long k, const Rat& a);

// Decomposition found by certify_minimal_family: stripping `appended`
// trailing free vertices leaves `omega`, and placing the line at infinity
// through the first `placement` free points (0 = tangent to the whole first
// row, nu(v) = bbar_1) gives a witness whose slack equals `appended`.
struct FamilyCertificate {
  DualGraph omega;
  long k = 0;
  Rat a{0};
  long placement = 0;
  long appended = 0;
  Alg mu_hat_normalized{Rat(0)};
};

struct FamilyDecision {
  std::optional<FamilyCertificate> certificate;
  std::string rejection;  // violated inequality at the nearest miss
};

// Searches all trailing-chain lengths and line placements for a slack match;
// on success the certificate pins the exact normalized mu-hat of the very
// general members, on failure the nearest miss is reported.
FamilyDecision certify_minimal_family(const DualGraph& g);

// Audit predicate: a witness whose arrow divisor is satellite must have
// positive slack (it can never be minimal itself). Free arrows are rejected.
bool satellite_nonminimality_check(const NPIWitness& w);

}  // namespace planeval
