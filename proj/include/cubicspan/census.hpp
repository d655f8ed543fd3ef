#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicspan/span.hpp"

namespace cubicspan {

struct Counterexample {
  std::uint64_t index = 0;  // model index (exhaustive) or sample number
  std::string surface;
  std::string diagnostic;

  bool operator==(const Counterexample&) const = default;
};

/// Aggregated verdicts of one enumeration or sampling run. `detail` carries
/// family-specific counters (buckets, per-lemma instance/pass counts).
struct CensusReport {
  std::string family;
  std::uint64_t q = 0;
  std::uint64_t total = 0;
  std::uint64_t smooth = 0;
  std::uint64_t eligible = 0;
  std::uint64_t verified = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t seed = 0;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t checkpoint = 0;
  std::map<std::string, std::uint64_t> detail;

  std::string to_json(bool pretty = false) const;
  static CensusReport from_json(const std::string& text);

  /// Equality of every verdict-bearing field; wall-clock is excluded.
  bool same_results(const CensusReport& o) const;
};

enum class F3Interpretation { Printed, CorrectedYW };

struct CensusOptions {
  unsigned workers = 1;
  std::string checkpoint_path;        // empty: no checkpointing
  std::uint64_t checkpoint_stride = 4096;
  std::uint64_t begin = 0;            // model-index subrange [begin, end)
  std::uint64_t end = 0;              // 0: the whole family
};

// ---- model enumerations ----
// census-f2:          index = Q1 bits (10, low) | Q2 bits (6, high); F = X*Q1 + Y*Q2
// census-f3:          index = base-3 digits a..g (a least significant)
// census-f3-superset: index = 10 base-3 digits for Q1; Q2 fixed to YZ + Z^2
// census-f3-full:     index = 16 base-3 digits, Q1 low, Q2 high
// Quadratic monomial order: x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2,
// x2x3, x3^2 (Q2 uses the 6 monomials without x0).
// nullopt: the index encodes no valid cubic surface (zero form, or the
// literal `printed` reading whose fifth family term is non-homogeneous).

std::uint64_t census_family_size(const std::string& family);
std::optional<Surface> census_f2_model(std::uint64_t index);
std::optional<Surface> census_f3_model(std::uint64_t index, F3Interpretation interp);
std::optional<Surface> census_f3_superset_model(std::uint64_t index);
std::optional<Surface> census_f3_full_model(std::uint64_t index);

/// Exhaustive runs reproducing the published enumerations.
CensusReport census_f2(const CensusOptions& opt = {});
CensusReport census_f3_family(F3Interpretation interp, const CensusOptions& opt = {});
CensusReport census_f3_superset(const CensusOptions& opt = {});
/// All 3^16 models X*Q1 + Y*Q2 over GF(3). Long; library-level only.
CensusReport census_f3_full(const CensusOptions& opt = {});

/// Random surface X*Q1 + Y*Q2 through the line X=Y=0 (not necessarily
/// smooth; never the zero form).
Surface sample_surface_through_line(const Field& f, SampleStream& rng);

/// Samples smooth surfaces with a rational line skew to X=Y=0 and asserts
/// Span(P) = S(K) for every non-Eckardt rational point on both lines.
/// q in {4,5,7,8,9,11}.
CensusReport verify_main_theorem(unsigned q, std::uint64_t n_samples,
                                 std::uint64_t seed);

/// Property checks of the supporting lemmas on sampled smooth surfaces
/// (parabolic point counts per line, tangent-section spans, skew-pair spans,
/// conic pierce points, two-line generation; the GF(3) variants at q = 3).
CensusReport lemma_suite(unsigned q, std::uint64_t n_samples, std::uint64_t seed);

/// Distinct Eckardt points on a surface line over the algebraic closure
/// (they live in degree <= 5; counted by inclusion-exclusion over
/// extensions).
std::size_t eckardt_count_on_line_closure(const Surface& s, const Line& l);

/// Rational-line counts of S over F_{q^m} for m = 1..max_m, plus the
/// incidence verdict (each of the 27 lines meets exactly 10 others in 5
/// coplanar, mutually disjoint pairs) for the first m reaching 27 lines.
struct LineCountProfile {
  std::array<std::size_t, 7> count{};  // count[m], m = 1..6
  unsigned reached27_at = 0;           // 0: never
  bool pairs_ok = false;
};
LineCountProfile cayley_salmon_profile(const Surface& s, unsigned max_m = 6);

}  // namespace cubicspan
